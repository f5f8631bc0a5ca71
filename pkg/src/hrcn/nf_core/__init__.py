"""Exact arithmetic for number fields of small degree."""
from .field import (
    DegenerateExtension,
    NumberField,
    ReducibleError,
    PrimeIdeal,
    absolute_field,
    elt_norm,
    elt_trace,
    embedding_signs,
    fingerprint,
    from_order_coords,
    in_prime,
    is_integral,
    is_isomorphic,
    is_square,
    is_totally_negative,
    is_totally_real,
    maximal_order,
    order_coords,
    prime_decomposition,
    rationals,
    residue_norms,
    splitting_type,
)
from .polys import poly_disc

__all__ = [
    "DegenerateExtension",
    "NumberField",
    "ReducibleError",
    "PrimeIdeal",
    "absolute_field",
    "elt_norm",
    "elt_trace",
    "embedding_signs",
    "fingerprint",
    "from_order_coords",
    "in_prime",
    "is_integral",
    "is_isomorphic",
    "is_square",
    "is_totally_negative",
    "is_totally_real",
    "maximal_order",
    "order_coords",
    "prime_decomposition",
    "poly_disc",
    "rationals",
    "residue_norms",
    "splitting_type",
]
