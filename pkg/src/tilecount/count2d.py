"""Exact domino-tiling counters for arbitrary 2D regions.

Two independent counting routes are provided on purpose:

* ``count_tilings`` — broken-profile dynamic programming, feasible for any
  region whose narrow dimension is at most 32 cells;
* ``count_tilings_bruteforce`` — direct backtracking over placements, the
  oracle the DP is validated against on small regions.

All counts are exact Python integers; nothing here touches floating point.
"""
from __future__ import annotations

from dataclasses import dataclass

from .regions2d import Cell, Region2D, transpose

MAX_PROFILE_WIDTH = 32
MAX_ORACLE_CELLS = 30


class RegionTooWideError(ValueError):
    """Raised when a region is too wide for the profile DP in both orientations."""


class RegionTooLargeError(ValueError):
    """Raised when a region exceeds the brute-force/enumeration cell budget."""


Domino = tuple[Cell, Cell]  # pair of edge-adjacent cells, stored sorted


@dataclass(frozen=True)
class Tiling:
    """A perfect domino tiling: disjoint adjacent pairs covering a region."""

    dominoes: frozenset[Domino]

    def cells(self) -> frozenset[Cell]:
        return frozenset(cell for pair in self.dominoes for cell in pair)

    def __len__(self) -> int:
        return len(self.dominoes)


def count_tilings(region: Region2D) -> int:
    """Exact number of perfect domino tilings of ``region``.

    Cell-by-cell broken-profile DP. The scan runs row-major over the bounding
    box; the state is a bitmask over the columns where, standing at column c
    of row r, bits >= c describe row r and bits < c describe row r+1. A set
    bit means the cell is already covered by a previously placed domino.
    Regions wider than tall are transposed first so the mask spans the
    narrow dimension.

    The empty region counts 1; any region with an odd number of cells
    counts 0.
    """
    if not region.cells:
        return 1
    if region.width > region.height:
        region = transpose(region)
    width, height = region.width, region.height
    if width > MAX_PROFILE_WIDTH:
        raise RegionTooWideError(
            f"region is {width} cells across in its narrow dimension; "
            f"the profile DP supports at most {MAX_PROFILE_WIDTH}"
        )
    if len(region.cells) % 2:
        return 0

    cells = region.cells
    states: dict[int, int] = {0: 1}
    for r in range(height):
        for c in range(width):
            bit = 1 << c
            here = (r, c) in cells
            right = c + 1 < width and (r, c + 1) in cells
            below = (r + 1, c) in cells
            nxt: dict[int, int] = {}
            for mask, ways in states.items():
                if not here:
                    if not mask & bit:  # nothing may protrude into a missing cell
                        nxt[mask] = nxt.get(mask, 0) + ways
                    continue
                if mask & bit:
                    # already covered; the bit now refers to (r+1, c), clear it
                    m = mask & ~bit
                    nxt[m] = nxt.get(m, 0) + ways
                    continue
                if right and not mask & (bit << 1):
                    m = mask | (bit << 1)
                    nxt[m] = nxt.get(m, 0) + ways
                if below:
                    m = mask | bit
                    nxt[m] = nxt.get(m, 0) + ways
            states = nxt
            if not states:
                return 0
    return states.get(0, 0)


def _first_free(remaining: frozenset[Cell]) -> Cell:
    return min(remaining)


def count_tilings_bruteforce(region: Region2D) -> int:
    """Oracle counter: backtracking on the first uncovered cell.

    At each step the lexicographically first free cell is paired with its
    right neighbour, then its lower neighbour. Limited to
    ``MAX_ORACLE_CELLS`` cells to keep the exponential search in check.
    """
    if len(region.cells) > MAX_ORACLE_CELLS:
        raise RegionTooLargeError(
            f"{len(region.cells)} cells exceed the {MAX_ORACLE_CELLS}-cell oracle budget"
        )
    if len(region.cells) % 2:
        return 0

    def count(remaining: frozenset[Cell]) -> int:
        if not remaining:
            return 1
        r, c = _first_free(remaining)
        total = 0
        for other in ((r, c + 1), (r + 1, c)):
            if other in remaining:
                total += count(remaining - {(r, c), other})
        return total

    return count(region.cells)


def enumerate_tilings(region: Region2D, limit: int) -> list[Tiling]:
    """First ``limit`` tilings in deterministic lexicographic order.

    Same search order as the oracle (first free cell; horizontal placement
    before vertical), so prefixes are stable across runs.
    """
    if limit < 1:
        raise ValueError(f"limit must be positive, got {limit}")
    if len(region.cells) > MAX_ORACLE_CELLS:
        raise RegionTooLargeError(
            f"{len(region.cells)} cells exceed the {MAX_ORACLE_CELLS}-cell enumeration budget"
        )

    out: list[Tiling] = []

    def walk(remaining: frozenset[Cell], placed: list[Domino]) -> bool:
        if not remaining:
            out.append(Tiling(frozenset(placed)))
            return len(out) >= limit
        first = _first_free(remaining)
        r, c = first
        for other in ((r, c + 1), (r + 1, c)):
            if other in remaining:
                placed.append((first, other))
                done = walk(remaining - {first, other}, placed)
                placed.pop()
                if done:
                    return True
        return False

    if len(region.cells) % 2 == 0:
        walk(region.cells, [])
    return out


def render_tiling_ascii(tiling: Tiling) -> str:
    """Draw a tiling with paired half-marks.

    Horizontal dominoes render as ``<>``, vertical ones as ``^`` over ``v``,
    absent cells as ``.``. The drawing parses back to the same domino set
    via ``parse_tiling_ascii``.
    """
    cells = tiling.cells()
    if not cells:
        return ""
    height = max(r for r, _ in cells) + 1
    width = max(c for _, c in cells) + 1
    grid = [["."] * width for _ in range(height)]
    for a, b in tiling.dominoes:
        (r1, c1), (r2, c2) = sorted((a, b))
        if r1 == r2 and c2 == c1 + 1:
            grid[r1][c1], grid[r2][c2] = "<", ">"
        elif c1 == c2 and r2 == r1 + 1:
            grid[r1][c1], grid[r2][c2] = "^", "v"
        else:
            raise ValueError(f"domino cells are not adjacent: {a}, {b}")
    return "\n".join("".join(row) for row in grid)


def parse_tiling_ascii(text: str) -> Tiling:
    """Inverse of ``render_tiling_ascii``."""
    marks = {}
    for r, line in enumerate(text.splitlines()):
        for c, ch in enumerate(line):
            if ch in "<>^v":
                marks[(r, c)] = ch
            elif ch != ".":
                raise ValueError(f"unexpected character {ch!r} at row {r}, column {c}")
    dominoes = set()
    for (r, c), ch in marks.items():
        if ch == "<":
            if marks.get((r, c + 1)) != ">":
                raise ValueError(f"unmatched '<' at {(r, c)}")
            dominoes.add(((r, c), (r, c + 1)))
        elif ch == "^":
            if marks.get((r + 1, c)) != "v":
                raise ValueError(f"unmatched '^' at {(r, c)}")
            dominoes.add(((r, c), (r + 1, c)))
    tiling = Tiling(frozenset(dominoes))
    if tiling.cells() != frozenset(marks):
        raise ValueError("stray '>' or 'v' marks without a partner")
    return tiling
