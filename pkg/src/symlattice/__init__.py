"""Symmetric maximum on a finite symmetric scale, computation rules for its
non-associativity, and ordinal Möbius transforms on posets and capacities."""

from .capacity import (
    Capacity,
    CapacityError,
    NormalizationError,
    capacity_from_table,
    capacity_mobius,
    capacity_mobius_evenodd,
    conjugate_capacity,
    mobius_necessity_closed,
    mobius_possibility_closed,
    necessity,
    parse_capacity,
    possibility,
    sugeno,
    sugeno_sorted,
    symmetric_sugeno,
)
from .mobius import (
    BiFunction,
    GChain,
    NotAbsIsotoneWarning,
    SolutionInterval,
    canonical_mobius,
    canonical_zeta_inverse,
    classical_mobius,
    classical_set_mobius,
    classical_set_zeta,
    conjugate_function,
    conjugate_mobius_closed,
    derivative,
    enumerate_zeta_inverses,
    eval_primitive,
    g_chains,
    ordinal_delta,
    ordinal_zeta,
    ostar_bi,
    ostar_fn,
    solution_interval,
    solves,
    verify_zeta_inverse,
)
from .poset import (
    LFunction,
    Poset,
    boolean_lattice,
    chain,
    diamond,
    is_abs_isotone,
    is_isotone,
    parse_function,
    parse_poset,
)
from .rules import (
    ALL_RULES,
    NonAssociativeError,
    RuleId,
    RuleOutcome,
    achievable_results,
    apply_rule,
    assoc_fold,
    evaluate,
    fulfills_associativity,
    rule_refines,
)
from .scale import DomainError, InvalidLevelError, Level, Scale, sym_max, sym_min

__version__ = "0.1.0"
