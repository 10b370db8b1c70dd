"""2D grid regions: the cell-set model, family builders, and ASCII interchange.

A region is a finite set of unit cells addressed as (row, col). All regions
are kept normalized (minimum row and column are 0), so two regions are equal
iff they are the same shape in the same orientation.
"""
from __future__ import annotations

from dataclasses import dataclass


Cell = tuple[int, int]  # (row, col)

ORIENTATIONS = ("SW", "SE", "NW", "NE")

TRANSFORM_OPS = ("reflect_h", "reflect_v", "rotate90")


def _normalize(cells: frozenset[Cell]) -> frozenset[Cell]:
    if not cells:
        return cells
    min_r = min(r for r, _ in cells)
    min_c = min(c for _, c in cells)
    if min_r == 0 and min_c == 0:
        return cells
    return frozenset((r - min_r, c - min_c) for r, c in cells)


@dataclass(frozen=True)
class Region2D:
    """An immutable, normalized set of grid cells.

    Any iterable of (row, col) pairs is accepted; construction shifts the
    cells so the minimum row and column are 0.
    """

    cells: frozenset[Cell]

    def __init__(self, cells=()) -> None:
        cellset = frozenset((int(r), int(c)) for r, c in cells)
        object.__setattr__(self, "cells", _normalize(cellset))

    @property
    def width(self) -> int:
        return max(c for _, c in self.cells) + 1 if self.cells else 0

    @property
    def height(self) -> int:
        return max(r for r, _ in self.cells) + 1 if self.cells else 0

    @property
    def cell_count(self) -> int:
        return len(self.cells)

    def __contains__(self, cell: Cell) -> bool:
        return cell in self.cells

    def __str__(self) -> str:
        return to_ascii(self)


EMPTY = Region2D()


def rect(rows: int, cols: int) -> Region2D:
    """Full rows x cols rectangle."""
    if rows < 1 or cols < 1:
        raise ValueError(f"rectangle needs positive dimensions, got {rows}x{cols}")
    return Region2D((r, c) for r in range(rows) for c in range(cols))


def a_grid(n: int) -> Region2D:
    """The 3 x 2n rectangle, n >= 1."""
    if n < 1:
        raise ValueError(f"a_grid needs n >= 1, got {n}")
    return rect(3, 2 * n)


def b_grid(n: int) -> Region2D:
    """The 3 x (2n+1) rectangle with one corner cell removed, n >= 0.

    6n+2 cells; the removed cell is (0, 0).
    """
    if n < 0:
        raise ValueError(f"b_grid needs n >= 0, got {n}")
    return Region2D(
        (r, c) for r in range(3) for c in range(2 * n + 1) if (r, c) != (0, 0)
    )


def c_grid(n: int) -> Region2D:
    """The 3 x (2n+2) rectangle with two adjacent corner-row cells removed, n >= 0.

    6n+4 cells; the removed cells are (0, 0) and (0, 1).
    """
    if n < 0:
        raise ValueError(f"c_grid needs n >= 0, got {n}")
    return Region2D(
        (r, c)
        for r in range(3)
        for c in range(2 * n + 2)
        if (r, c) not in ((0, 0), (0, 1))
    )


def l2_region(n: int, k: int) -> Region2D:
    """Width-2 right angle: arms of n and k dominoes beyond a shared 2x2 corner.

    The horizontal arm spans rows {0,1} x cols 0..n, the vertical arm spans
    rows 0..k x cols {0,1}; they overlap in the 2x2 corner block, giving
    2n + 2k cells in total. For k = 1 the region degenerates to a 2 x (n+1)
    rectangle.
    """
    if n < 1 or k < 1:
        raise ValueError(f"l2_region needs n, k >= 1, got ({n}, {k})")
    horizontal = {(r, c) for r in (0, 1) for c in range(n + 1)}
    vertical = {(r, c) for r in range(k + 1) for c in (0, 1)}
    return Region2D(horizontal | vertical)


def l3_region(n: int, k: int, orientation: str = "SW") -> Region2D:
    """Width-3 right angle: a 3 x 2n arm and a 3 x 2k arm joined at a corner.

    The two arms are disjoint (6n + 6k cells). In the default "SW" layout the
    2n arm stands vertically at the top left and the 2k arm runs east along
    the bottom, so the inner corner of the angle sits to the southwest. The
    other orientations are the mirror images:

        SE  horizontal arm runs west          (mirror of SW across columns)
        NW  horizontal arm on top, vertical arm hangs south
        NE  mirror of NW across columns

    All four have equal tiling counts; the calibration suite in the tests
    pins each of them against the product formula.
    """
    if n < 1 or k < 1:
        raise ValueError(f"l3_region needs n, k >= 1, got ({n}, {k})")
    if orientation not in ORIENTATIONS:
        raise ValueError(f"unknown orientation {orientation!r}, expected one of {ORIENTATIONS}")
    if orientation in ("SW", "SE"):
        arm_a = {(r, c) for r in range(2 * n) for c in range(3)}
        arm_b = {(r, c) for r in range(2 * n, 2 * n + 3) for c in range(2 * k)}
    else:  # NW, NE: the 2n arm lies horizontally on top
        arm_a = {(r, c) for r in range(3) for c in range(2 * n)}
        arm_b = {(r, c) for r in range(3, 2 * k + 3) for c in range(3)}
    region = Region2D(arm_a | arm_b)
    if orientation in ("SE", "NE"):
        region = reflect_h(region)
    return region


def from_ascii(text: str) -> Region2D:
    """Parse a '#'/'.' picture into a region; '#' marks a cell.

    Rows are newline separated; the result is normalized. Empty input gives
    the empty region.
    """
    cells = []
    for r, line in enumerate(text.splitlines()):
        for c, ch in enumerate(line):
            if ch == "#":
                cells.append((r, c))
            elif ch != ".":
                raise ValueError(f"unexpected character {ch!r} at row {r}, column {c}")
    return Region2D(cells)


def to_ascii(region: Region2D) -> str:
    if not region.cells:
        return ""
    rows = []
    for r in range(region.height):
        rows.append(
            "".join("#" if (r, c) in region.cells else "." for c in range(region.width))
        )
    return "\n".join(rows)


def reflect_h(region: Region2D) -> Region2D:
    """Mirror across the vertical axis (columns reversed)."""
    w = region.width
    return Region2D((r, w - 1 - c) for r, c in region.cells)


def reflect_v(region: Region2D) -> Region2D:
    """Mirror across the horizontal axis (rows reversed)."""
    h = region.height
    return Region2D((h - 1 - r, c) for r, c in region.cells)


def rotate90(region: Region2D) -> Region2D:
    """Rotate a quarter turn clockwise."""
    h = region.height
    return Region2D((c, h - 1 - r) for r, c in region.cells)


def transpose(region: Region2D) -> Region2D:
    """Swap rows and columns (reflection across the main diagonal)."""
    return Region2D((c, r) for r, c in region.cells)


_TRANSFORMS = {
    "reflect_h": reflect_h,
    "reflect_v": reflect_v,
    "rotate90": rotate90,
}


def transform(region: Region2D, op: str) -> Region2D:
    try:
        fn = _TRANSFORMS[op]
    except KeyError:
        raise ValueError(f"unknown transform {op!r}, expected one of {TRANSFORM_OPS}") from None
    return fn(region)


def remove_cells(region: Region2D, cells) -> Region2D:
    """Remove cells from a region; every removed cell must be present."""
    to_remove = frozenset((int(r), int(c)) for r, c in cells)
    missing = to_remove - region.cells
    if missing:
        raise ValueError(f"cells not in region: {sorted(missing)}")
    return Region2D(region.cells - to_remove)
