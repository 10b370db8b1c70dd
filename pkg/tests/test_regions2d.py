import pytest

from tilecount.regions2d import (
    ORIENTATIONS,
    Region2D,
    a_grid,
    b_grid,
    c_grid,
    from_ascii,
    l2_region,
    l3_region,
    rect,
    reflect_h,
    reflect_v,
    remove_cells,
    rotate90,
    to_ascii,
    transform,
    transpose,
)


def test_rect_basics():
    assert rect(1, 1).cells == frozenset({(0, 0)})
    r = rect(3, 4)
    assert r.cell_count == 12
    assert (r.height, r.width) == (3, 4)
    assert rect(2, 5).cell_count == 10


@pytest.mark.parametrize("rows,cols", [(0, 3), (3, 0), (-1, 2)])
def test_rect_rejects_bad_dimensions(rows, cols):
    with pytest.raises(ValueError):
        rect(rows, cols)


def test_region_normalizes_on_construction():
    shifted = Region2D([(5, 7), (5, 8), (6, 7)])
    assert shifted.cells == frozenset({(0, 0), (0, 1), (1, 0)})


def test_empty_region():
    empty = Region2D()
    assert empty.cell_count == 0
    assert empty.width == 0 and empty.height == 0
    assert to_ascii(empty) == ""
    assert from_ascii("") == empty


def test_a_grid_shape():
    assert a_grid(1) == rect(3, 2)
    assert a_grid(2).cell_count == 12
    assert a_grid(5).cell_count == 30
    with pytest.raises(ValueError):
        a_grid(0)


@pytest.mark.parametrize("n", range(0, 6))
def test_b_grid_cell_count(n):
    assert b_grid(n).cell_count == 6 * n + 2


def test_b_grid_zero_is_a_domino_column():
    assert b_grid(0).cells == frozenset({(0, 0), (1, 0)})


@pytest.mark.parametrize("n", range(0, 6))
def test_c_grid_cell_count(n):
    assert c_grid(n).cell_count == 6 * n + 4


def test_c_grid_zero_is_a_square():
    assert c_grid(0) == rect(2, 2)


def test_remove_cells_matches_b_grid():
    assert remove_cells(rect(3, 3), {(0, 0)}) == b_grid(1)


def test_remove_cells_requires_presence():
    with pytest.raises(ValueError):
        remove_cells(rect(2, 2), {(5, 5)})


@pytest.mark.parametrize("n,k", [(n, k) for n in range(1, 6) for k in range(1, 6)])
def test_l2_region_cell_count(n, k):
    assert l2_region(n, k).cell_count == 2 * n + 2 * k


def test_l2_region_small_shapes():
    assert l2_region(1, 1) == rect(2, 2)
    assert l2_region(3, 1) == rect(2, 4)
    assert l2_region(1, 3) == rect(4, 2)
    assert l2_region(3, 2) == from_ascii("####\n####\n##..")


@pytest.mark.parametrize("orientation", ORIENTATIONS)
@pytest.mark.parametrize("n,k", [(1, 1), (2, 1), (1, 2), (3, 2)])
def test_l3_region_cell_count(n, k, orientation):
    assert l3_region(n, k, orientation).cell_count == 6 * n + 6 * k


def test_l3_region_default_shape():
    assert l3_region(1, 1) == from_ascii("###\n###\n##.\n##.\n##.")
    assert l3_region(2, 2).cell_count == 24


def test_l3_region_rejects_unknown_orientation():
    with pytest.raises(ValueError):
        l3_region(2, 2, "UP")


@pytest.mark.parametrize(
    "builder",
    [
        lambda: rect(3, 4),
        lambda: a_grid(3),
        lambda: b_grid(2),
        lambda: c_grid(2),
        lambda: l2_region(3, 2),
        lambda: l3_region(2, 1),
        lambda: l3_region(2, 1, "NE"),
    ],
)
def test_builders_are_normalized(builder):
    region = builder()
    assert min(r for r, _ in region.cells) == 0
    assert min(c for _, c in region.cells) == 0


def test_ascii_round_trip():
    for text in ["##\n##", ".##\n###", "#.#\n###", "#"]:
        region = from_ascii(text)
        assert to_ascii(region) == text
        assert from_ascii(to_ascii(region)) == region


def test_from_ascii_counts_cells():
    assert from_ascii(".##\n###").cell_count == 5


def test_from_ascii_rejects_garbage():
    with pytest.raises(ValueError):
        from_ascii("#x#")


def test_from_ascii_normalizes_padding():
    assert from_ascii("...\n.##\n.##") == rect(2, 2)


def test_transforms():
    assert transform(rect(2, 3), "rotate90") == rect(3, 2)
    assert rotate90(rect(2, 3)) == rect(3, 2)
    assert transpose(rect(2, 3)) == rect(3, 2)
    region = l3_region(2, 1)
    assert reflect_h(reflect_h(region)) == region
    assert reflect_v(reflect_v(region)) == region
    spun = region
    for _ in range(4):
        spun = rotate90(spun)
    assert spun == region


def test_transform_preserves_cell_count():
    region = l2_region(3, 2)
    for op in ("reflect_h", "reflect_v", "rotate90"):
        assert transform(region, op).cell_count == region.cell_count


def test_transform_rejects_unknown_op():
    with pytest.raises(ValueError):
        transform(rect(2, 2), "shear")


def test_region_is_hashable_and_frozen():
    region = rect(2, 2)
    assert hash(region) == hash(rect(2, 2))
    with pytest.raises(Exception):
        region.cells = frozenset()
