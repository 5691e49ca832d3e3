"""Left and right keys of semistandard Young tableaux.

The direct procedures live in :mod:`keytab.keys`; Deodhar lifts and the
Bruhat order in :mod:`keytab.lifts` and :mod:`keytab.order`; independent
reference algorithms in :mod:`keytab.oracles`; Demazure characters in
:mod:`keytab.demazure`.
"""

from .demazure import (
    character_sanity,
    demazure_character,
    full_character,
    opposite_demazure_character,
)
from .errors import KeyTabError
from .keys import (
    Configuration,
    CrossOutTrace,
    configurations,
    crossout_step,
    left_key,
    left_key_permutation,
    minimal_chain,
    pushdown_stage,
    right_key,
    right_key_permutation,
    verify_via_lifts,
)
from .lifts import brute_force_lift, max_lift, min_lift, subproc_P, subproc_Q
from .order import bruhat_leq, descent_set, extremal_coset_rep, subset_leq
from .tableau import (
    KeyTableau,
    Permutation,
    Shape,
    Tableau,
    coset_to_key_tableau,
    enumerate_ssyt,
    parse_tableau,
)

__all__ = [
    "Configuration",
    "CrossOutTrace",
    "KeyTabError",
    "KeyTableau",
    "Permutation",
    "Shape",
    "Tableau",
    "brute_force_lift",
    "bruhat_leq",
    "character_sanity",
    "configurations",
    "coset_to_key_tableau",
    "crossout_step",
    "demazure_character",
    "descent_set",
    "enumerate_ssyt",
    "extremal_coset_rep",
    "full_character",
    "left_key",
    "left_key_permutation",
    "max_lift",
    "min_lift",
    "minimal_chain",
    "opposite_demazure_character",
    "parse_tableau",
    "pushdown_stage",
    "right_key",
    "right_key_permutation",
    "subproc_P",
    "subproc_Q",
    "subset_leq",
    "verify_via_lifts",
]
