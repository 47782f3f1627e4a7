"""Coxeter group combinatorics at desk scale.

Exact word problem on canonical reduced words, Bruhat order with two
independent comparison routes, parabolic decompositions and cosets, and
exhaustive verification that interval–coset intersections are Bruhat
intervals.
"""

from .bruhat import (
    Ball,
    Interval,
    ball,
    bruhat_leq,
    bruhat_leq_subword,
    covers_of,
    hasse_dot,
    hasse_json,
    interval,
    parse_hasse_json,
)
from .core import (
    CoxeterSystem,
    Element,
    IDENTITY,
    INFINITE,
    braid_orbit,
    inverse,
    left_descents,
    load_system,
    multiply,
    normalize,
    preset,
    right_descents,
    validate_system,
)
from .errors import (
    BadDiagonal,
    BadOffDiagonal,
    BadRank,
    BallBudgetExceeded,
    BudgetExceeded,
    CoxeterError,
    LetterOutOfRange,
    NonSymmetric,
    NotComparable,
    NotReduced,
    OrbitBudgetExceeded,
    RepNotMinimal,
    TopOutOfBall,
)
from .parabolic import (
    CosetHandle,
    CosetMembers,
    coset_members,
    decompose_left,
    decompose_right,
    descent_pair_order,
    min_coset_rep,
    project,
)
from .theorem import (
    CounterexampleWitness,
    IntersectionResult,
    VerificationReport,
    find_converse_counterexample,
    intersect,
    run_check,
    validate_counterexample,
    verify_descent_pair_orders,
    verify_dihedral_chain,
    verify_min_recursion,
    verify_theorem,
    verify_unique_max,
)

__version__ = "0.1.0"
