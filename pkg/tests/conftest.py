"""Shared corpus builders for oracle-equivalence and property tests."""
from __future__ import annotations

import random
import sys

from tilecount.regions2d import (
    Region2D,
    a_grid,
    b_grid,
    c_grid,
    l2_region,
    l3_region,
    rect,
)
from tilecount.solid3d import Prism3D, m_tower, tower

# big counts must be printable in full
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)


def random_connected_region(rng: random.Random, n_cells: int) -> Region2D:
    """Grow a connected region cell by cell; deterministic for a seeded rng."""
    cells = {(0, 0)}
    while len(cells) < n_cells:
        r, c = rng.choice(sorted(cells))
        nbr = rng.choice([(r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)])
        cells.add(nbr)
    return Region2D(cells)


def region_corpus_2d(seed: int = 20240229, n_random: int = 200) -> list[Region2D]:
    """Every sub-rectangle up to 4x7, the named builders at small indices,
    and a seeded batch of random connected regions, all within 28 cells."""
    regions = []
    for rows in range(1, 5):
        for cols in range(1, 8):
            regions.append(rect(rows, cols))
    regions.extend(a_grid(n) for n in range(1, 5))
    regions.extend(b_grid(n) for n in range(0, 5))
    regions.extend(c_grid(n) for n in range(0, 5))
    regions.extend(l2_region(n, k) for n in range(1, 5) for k in range(1, 5))
    for n, k in [(1, 1), (1, 2), (2, 1), (1, 3), (3, 1), (2, 2)]:
        regions.append(l3_region(n, k, "SW"))
        regions.append(l3_region(n, k, "NW"))
    rng = random.Random(seed)
    for _ in range(n_random):
        size = rng.randint(4, 26)
        regions.append(random_connected_region(rng, size))
    assert all(r.cell_count <= 28 for r in regions)
    return regions


_CROSS_SECTIONS = [
    frozenset({(0, 0), (0, 1), (1, 0), (1, 1)}),
    frozenset({(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)}),
    frozenset({(0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (2, 1)}),
    frozenset({(0, 0), (0, 1), (0, 2), (1, 0), (1, 1)}),
    frozenset({(0, 0), (0, 1), (0, 2), (0, 3), (1, 0), (1, 1), (1, 2), (1, 3)}),
]


def random_prism(rng: random.Random) -> Prism3D:
    """A small prism with an even-sized random deletion pattern, <= 24 cells."""
    while True:
        cross = rng.choice(_CROSS_SECTIONS)
        layers = rng.randint(1, 24 // len(cross))
        all_cells = [(r, c, z) for (r, c) in sorted(cross) for z in range(layers)]
        max_deletions = min(len(all_cells) - 2, 6)
        n_del = rng.randrange(0, max_deletions + 1) & ~1  # keep it even
        deleted = rng.sample(all_cells, n_del) if n_del else []
        prism = Prism3D(cross, layers, deleted)
        if prism.cell_count <= 24:
            return prism


def prism_corpus(seed: int = 20240301, n_random: int = 60) -> list[Prism3D]:
    prisms = [tower(n) for n in range(1, 7)]
    prisms.extend(m_tower(n) for n in range(1, 7))
    rng = random.Random(seed)
    prisms.extend(random_prism(rng) for _ in range(n_random))
    assert all(p.cell_count <= 24 for p in prisms)
    return prisms
