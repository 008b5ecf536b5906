from .algebra import (
    DEFAULT_CAP, CarrierTooLarge, UpsetAlgebra, canonical_embedding, enumerate_upsets,
    named_prime_filters, prime_filter_spectrum, prime_filters, up_algebra,
)
from .catalog import builtin_frame, chain, fig3_frame, fork, point, scott, three_fork, two_fork
from .logic import (
    PLVerdict, UpReduction, Validity, find_up_reduction, frame_validates, satisfies_bd,
    satisfies_bd_schema, satisfies_pl, validates_jankov_fine,
)
from .morphism import MorphismCheck, PosetMap, identity, is_order_isomorphism, is_p_morphism
from .poset import Poset, PosetError

__all__ = [
    "DEFAULT_CAP", "CarrierTooLarge", "UpsetAlgebra", "canonical_embedding", "enumerate_upsets",
    "named_prime_filters", "prime_filter_spectrum", "prime_filters", "up_algebra",
    "builtin_frame", "chain", "fig3_frame", "fork", "point", "scott", "three_fork", "two_fork",
    "PLVerdict", "UpReduction", "Validity", "find_up_reduction", "frame_validates",
    "satisfies_bd", "satisfies_bd_schema", "satisfies_pl", "validates_jankov_fine",
    "MorphismCheck", "PosetMap", "identity", "is_order_isomorphism", "is_p_morphism",
    "Poset", "PosetError",
]
