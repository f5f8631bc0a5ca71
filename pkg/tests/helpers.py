from fractions import Fraction

from hrcn.extension import CMExtension
from hrcn.nf_core import absolute_field


def quadratic_base(catalog, d_F):
    return next(e for e in catalog if e.degree == 2 and e.disc == d_F)


def ext_over(catalog, d_F, delta):
    """K = F(sqrt(delta)) with delta in the power basis of the catalog polynomial."""
    entry = quadratic_base(catalog, d_F)
    delta = tuple(Fraction(x) for x in delta)
    K = absolute_field(entry.field, delta)
    return CMExtension(entry, delta, K, abs(K.disc) // d_F ** 2)
