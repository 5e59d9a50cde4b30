"""Invariant Chern-Einstein almost Kahler structures on G/T for classical
non-compact simple G: root data, Weyl chambers, Koszul forms and the
exhaustive classification sweep."""

from .chern import (
    CEResult,
    JSplit,
    KoszulData,
    LambdaSign,
    compute_lambda,
    delta_tilde_regularity,
    is_integrable,
    j_split,
    koszul_delta,
    metric_check,
    ricci_coefficient,
    solve_ce,
)
from .closedform import (
    CoeffProfile,
    check_identities,
    coeffs_A,
    coeffs_B,
    coeffs_C_pq,
    coeffs_C_u,
    coeffs_D_pq,
    coeffs_D_u,
    coeffs_so1,
    profile_for,
)
from .realform import (
    AdmissibleElement,
    NotAdmissible,
    RealForm,
    RealFormSplit,
    Table2Entry,
    admissibility,
    catalog,
    parse_form,
    split,
    split_for,
    table2_catalog,
)
from .rootsys import RootSystem, add_root, build_root_system, inner
from .search import ClassificationReport, classify, integrability_census, verify_theorem
from .weyl import PositiveSystem, SignedPerm, act, chamber, chamber_to_z, enumerate_weyl, weyl_order

__version__ = "0.1.0"
