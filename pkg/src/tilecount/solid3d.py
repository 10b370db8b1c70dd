"""Exact counting of 1x1x2 brick tilings of small prisms.

A prism is a 2D cross-section extruded through a number of layers, with an
optional set of deleted cells. Counting runs layer by layer: the DP state is
the subset of cross-section cells whose bricks stand upright into the next
layer, and completing a layer with flat bricks reuses the 2D domino counter,
so both dimensions share one tested kernel.
"""
from __future__ import annotations

from dataclasses import dataclass

from .count2d import count_tilings
from .regions2d import Cell, Region2D

MAX_CROSS_SECTION = 8
MAX_BRUTEFORCE_CELLS = 24

Cell3 = tuple[int, int, int]  # (row, col, layer)


class CrossSectionTooLargeError(ValueError):
    """Raised when a prism's cross-section exceeds the layer-DP state budget."""


class PrismTooLargeError(ValueError):
    """Raised when a prism exceeds the brute-force cell budget."""


@dataclass(frozen=True)
class Prism3D:
    """Cross-section x layers, minus deleted cells."""

    cross_section: frozenset[Cell]
    layers: int
    deleted: frozenset[Cell3]

    def __init__(self, cross_section, layers: int, deleted=()) -> None:
        cross = frozenset((int(r), int(c)) for r, c in cross_section)
        gone = frozenset((int(r), int(c), int(z)) for r, c, z in deleted)
        if layers < 0:
            raise ValueError(f"layers must be >= 0, got {layers}")
        for r, c, z in gone:
            if (r, c) not in cross or not 0 <= z < layers:
                raise ValueError(f"deleted cell {(r, c, z)} lies outside the prism")
        object.__setattr__(self, "cross_section", cross)
        object.__setattr__(self, "layers", layers)
        object.__setattr__(self, "deleted", gone)

    @property
    def cell_count(self) -> int:
        return len(self.cross_section) * self.layers - len(self.deleted)

    def layer_cells(self, z: int) -> frozenset[Cell]:
        """Cross-section cells actually present in layer z."""
        return frozenset(
            cell for cell in self.cross_section if (*cell, z) not in self.deleted
        )


def tower(n: int) -> Prism3D:
    """The 2 x 2 x n tower, n >= 1."""
    if n < 1:
        raise ValueError(f"tower needs n >= 1, got {n}")
    return Prism3D({(0, 0), (0, 1), (1, 0), (1, 1)}, n)


def m_tower(n: int) -> Prism3D:
    """The 2 x 2 x n tower with two edge-adjacent top-layer cells removed.

    Removing a diagonal pair instead would leave the single-layer case
    untileable, so adjacency is forced; which edge is immaterial by symmetry.
    """
    if n < 1:
        raise ValueError(f"m_tower needs n >= 1, got {n}")
    return Prism3D(
        {(0, 0), (0, 1), (1, 0), (1, 1)},
        n,
        deleted={(0, 0, n - 1), (0, 1, n - 1)},
    )


def count_bricks(prism: Prism3D) -> int:
    """Exact number of perfect 1x1x2 brick tilings of a prism.

    Layer DP over protrusion subsets. Entering layer z with protrusion set P
    (cells covered from below), every subset U of the remaining cells that
    also exist in layer z+1 may start upright bricks; the cells left over
    must be tiled flat, counted by the 2D kernel.
    """
    cross = sorted(prism.cross_section)
    if len(cross) > MAX_CROSS_SECTION:
        raise CrossSectionTooLargeError(
            f"cross-section has {len(cross)} cells, supported maximum is {MAX_CROSS_SECTION}"
        )
    index = {cell: i for i, cell in enumerate(cross)}

    flat_cache: dict[int, int] = {}

    def flat_count(mask: int) -> int:
        if mask not in flat_cache:
            cells = [cross[i] for i in range(len(cross)) if mask >> i & 1]
            flat_cache[mask] = count_tilings(Region2D(cells))
        return flat_cache[mask]

    def layer_mask(z: int) -> int:
        mask = 0
        for cell in prism.layer_cells(z):
            mask |= 1 << index[cell]
        return mask

    states: dict[int, int] = {0: 1}
    for z in range(prism.layers):
        present = layer_mask(z)
        above = layer_mask(z + 1) if z + 1 < prism.layers else 0
        nxt: dict[int, int] = {}
        for protruding, ways in states.items():
            if protruding & ~present:
                continue  # a brick from below pokes into a deleted cell
            free = present & ~protruding
            allowed_up = free & above
            up = allowed_up
            while True:
                flat = flat_count(free & ~up)
                if flat:
                    nxt[up] = nxt.get(up, 0) + ways * flat
                if up == 0:
                    break
                up = (up - 1) & allowed_up
        states = nxt
        if not states:
            return 0
    return states.get(0, 0)


def count_bricks_bruteforce(prism: Prism3D) -> int:
    """Oracle counter: backtracking on the first free cell in (z, row, col) order.

    Placements are tried in a fixed order: along the column, along the row,
    then up one layer.
    """
    if prism.cell_count > MAX_BRUTEFORCE_CELLS:
        raise PrismTooLargeError(
            f"{prism.cell_count} cells exceed the {MAX_BRUTEFORCE_CELLS}-cell oracle budget"
        )
    cells = frozenset(
        (z, r, c)
        for z in range(prism.layers)
        for (r, c) in prism.layer_cells(z)
    )
    if len(cells) % 2:
        return 0

    def count(remaining: frozenset) -> int:
        if not remaining:
            return 1
        z, r, c = min(remaining)
        total = 0
        for other in ((z, r, c + 1), (z, r + 1, c), (z + 1, r, c)):
            if other in remaining:
                total += count(remaining - {(z, r, c), other})
        return total

    return count(cells)
