"""Exact tiling counts: dominoes on 2D grid regions, bricks in 3D prisms."""

from .count2d import (
    RegionTooLargeError,
    RegionTooWideError,
    Tiling,
    count_tilings,
    count_tilings_bruteforce,
    enumerate_tilings,
    parse_tiling_ascii,
    render_tiling_ascii,
)
from .identities import (
    CheckResult,
    Report,
    verify_all,
    verify_coupled_recurrences,
    verify_crux,
    verify_table1,
    verify_table2,
    verify_tauraso,
    verify_thm21,
    verify_thm32,
)
from .regions2d import (
    Region2D,
    a_grid,
    b_grid,
    c_grid,
    from_ascii,
    l2_region,
    l3_region,
    rect,
    remove_cells,
    to_ascii,
    transform,
)
from .sequences import (
    ClosedForm,
    ClosedFormCancellationError,
    Family,
    LinearRecurrence,
    QuadExpr,
    catalog,
    closed_eval,
    fibonacci,
    l2,
    l3,
    rec_eval_iter,
    rec_eval_matpow,
)
from .solid3d import (
    CrossSectionTooLargeError,
    Prism3D,
    PrismTooLargeError,
    count_bricks,
    count_bricks_bruteforce,
    m_tower,
    tower,
)

__version__ = "0.1.0"

__all__ = [
    "CheckResult",
    "ClosedForm",
    "ClosedFormCancellationError",
    "CrossSectionTooLargeError",
    "Family",
    "LinearRecurrence",
    "Prism3D",
    "PrismTooLargeError",
    "QuadExpr",
    "Region2D",
    "RegionTooLargeError",
    "RegionTooWideError",
    "Report",
    "Tiling",
    "a_grid",
    "b_grid",
    "c_grid",
    "catalog",
    "closed_eval",
    "count_bricks",
    "count_bricks_bruteforce",
    "count_tilings",
    "count_tilings_bruteforce",
    "enumerate_tilings",
    "fibonacci",
    "from_ascii",
    "l2",
    "l2_region",
    "l3",
    "l3_region",
    "m_tower",
    "parse_tiling_ascii",
    "rec_eval_iter",
    "rec_eval_matpow",
    "rect",
    "remove_cells",
    "render_tiling_ascii",
    "to_ascii",
    "tower",
    "transform",
    "verify_all",
    "verify_coupled_recurrences",
    "verify_crux",
    "verify_table1",
    "verify_table2",
    "verify_tauraso",
    "verify_thm21",
    "verify_thm32",
]
