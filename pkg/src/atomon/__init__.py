"""Exact computations with finite atomic monoids.

Multiplication-table monoids, factorization length sets as eventually
periodic subsets of the naturals, free products with reduced-word normal
forms, the generated-submonoid product, and the remaining limit and
colimit constructions, each cross-checked against independent oracles.
"""

from .core import (
    ElemClass,
    FiniteMonoid,
    MonoidHom,
    atoms,
    canonical_to_terminal,
    check_property,
    classify,
    compose,
    enumerate_homs,
    eval_word,
    extend_atom_map,
    identity_hom,
    is_atomon_mono,
    new_hom,
    new_monoid,
    units,
)
from .coproduct import (
    EPS_WORD,
    Family,
    IndexBlockDecomposition,
    Letter,
    ReducedWord,
    coprojection,
    fp_brute_force_lengths,
    fp_check_property_bounded,
    fp_couniversal,
    fp_is_atom,
    fp_is_unit,
    fp_length_set,
    fp_length_system_bounded,
    fp_mul,
    fp_union_k,
    gamma_admissible,
    index_block_decomposition,
    reduce,
    reduced_words_upto,
)
from .lengths import (
    EMPTY,
    ZERO_ONLY,
    EPSet,
    LayerSequence,
    LengthSystem,
    brute_force_lengths,
    eps_cofinite,
    eps_finite,
    eps_from_window,
    eps_intersect,
    eps_minkowski_sum,
    eps_sum_many,
    eps_union,
    length_set,
    length_system,
    power_layers,
    union_k,
)
from .limits import (
    Congruence,
    PushoutPresentation,
    Reachability,
    coequalizer,
    congruence_closure,
    equalizer,
    initial,
    pullback,
    pushout_eq_bounded,
    pushout_presentation,
    quotient,
    terminal,
)
from .product import (
    ProductGenerators,
    ap_closure,
    ap_contains,
    ap_generators,
    ap_is_atom,
    ap_is_unit,
    ap_length_set,
    ap_length_system,
    ap_materialize,
    ap_union_k,
    ap_universal,
)

__version__ = "0.1.0"
