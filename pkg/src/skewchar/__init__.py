"""Exact computation of skew symplectic and orthogonal characters by four
independent routes: tableau enumeration, nonintersecting lattice paths,
dual/ordinary Jacobi-Trudi determinants and Giambelli block determinants.
"""

from .core import (
    FrobeniusCoordinates,
    LaurentPoly,
    NonExactDivisionError,
    Partition,
    PolyMatrix,
    SkewShape,
    determinant,
    from_frobenius,
)
from .formulas import (
    Method,
    character,
    dual_jacobi_trudi,
    giambelli,
    jacobi_trudi,
    lgv_character,
)
from .paths import (
    InvalidFamilyError,
    Layout,
    MalformedFamilyError,
    NoSiteError,
    Path,
    PathFamily,
    PathModel,
    StepKind,
    enumerate_lgv_families,
    enumerate_paths,
    find_trapped_positions,
    involution_step,
    lgv_signed_sum,
    model_and_endpoints,
    path_gf,
    path_gf_by_diag_count,
    paths_to_tableau,
    reflect_initial_segment,
    tableau_to_paths,
)
from .symfunc import (
    CharacterFamily,
    DegeneratePointError,
    build_E_matrix,
    build_H_matrix,
    complete_pm,
    elementary_pm,
    weyl_eval,
)
from .tableaux import (
    Entry,
    Tableau,
    character_by_tableaux,
    count_tableaux,
    enumerate_tableaux,
    is_valid_tableau,
    tableau_weight,
)

__version__ = "0.1.0"

__all__ = [
    "CharacterFamily",
    "DegeneratePointError",
    "Entry",
    "FrobeniusCoordinates",
    "InvalidFamilyError",
    "LaurentPoly",
    "Layout",
    "MalformedFamilyError",
    "Method",
    "NoSiteError",
    "NonExactDivisionError",
    "Partition",
    "Path",
    "PathFamily",
    "PathModel",
    "PolyMatrix",
    "SkewShape",
    "StepKind",
    "Tableau",
    "build_E_matrix",
    "build_H_matrix",
    "character",
    "character_by_tableaux",
    "complete_pm",
    "count_tableaux",
    "determinant",
    "dual_jacobi_trudi",
    "elementary_pm",
    "enumerate_lgv_families",
    "enumerate_paths",
    "enumerate_tableaux",
    "find_trapped_positions",
    "from_frobenius",
    "giambelli",
    "involution_step",
    "is_valid_tableau",
    "jacobi_trudi",
    "lgv_character",
    "lgv_signed_sum",
    "model_and_endpoints",
    "path_gf",
    "path_gf_by_diag_count",
    "paths_to_tableau",
    "reflect_initial_segment",
    "tableau_weight",
    "tableau_to_paths",
    "weyl_eval",
]
