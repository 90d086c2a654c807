"""Exact-arithmetic convex separation, interpolation, and duality over
extended nonnegative orthants and finite T0 spaces."""

from .convex_sep import (
    ExtVec,
    MeetsCorner,
    SeparationWeights,
    Separated,
    combination_point,
    hull_disjoint_from_corner,
    in_corner,
    separate,
    verify_meets_corner,
    verify_separated,
)
from .extreal import (
    INF,
    ONE,
    ZERO,
    ExtReal,
    ext_max,
    ext_min,
    ext_sup,
    parse_extreal,
    sub_partial,
)
from .finspace import (
    FinitePoset,
    LscFun,
    all_opens,
    is_lsc,
    posets_up_to_iso,
    step,
    to_steps,
    validate_poset,
)
from .functionals import (
    LinFun,
    OpenSetRep,
    SublinFun,
    SuperlinFun,
    dominated_by_max,
    leq_functional,
    member_a,
    member_u,
    minkowski,
    specialization_leq,
)
from .interpolate import (
    ClauseWitness,
    InterpolationResult,
    check_min_below,
    clause_witnesses,
    interpolate,
)
from .lp import (
    Constraint,
    LPInfeasible,
    LPOptimal,
    LPProblem,
    LPUnbounded,
    solve_lp,
    verify_lp_result,
)
from .valuations import (
    DualFunctional,
    SimpleValuation,
    ValuationOnOpens,
    check_dominated_directed,
    check_sup_representation,
    eval_valuation,
    from_opens,
    random_simple_valuation,
    recover_function,
    to_opens,
    weakstar_member,
)
from . import errors

__version__ = "0.1.0"
