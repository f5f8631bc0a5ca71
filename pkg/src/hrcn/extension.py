"""Records shared by the enumeration and invariant computations."""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

from sympy import factorint

from .nf_core import NumberField, order_coords, polys


@dataclass(frozen=True)
class CatalogEntry:
    degree: int
    disc: int
    coeffs: Tuple[int, ...]
    h: Optional[int]
    label: str
    units: Tuple[Tuple[Fraction, ...], ...] = ()
    field: Optional[NumberField] = field(default=None, compare=False, repr=False)

    @property
    def name(self):
        return self.label


@dataclass(frozen=True)
class CMExtension:
    base: CatalogEntry
    delta: Tuple[Fraction, ...]  # power-basis coordinates in F
    K: NumberField = field(compare=False, repr=False)
    rel_disc_norm: int = 0

    @property
    def F(self) -> NumberField:
        return self.base.field

    @property
    def d_F(self) -> int:
        return self.base.disc

    @property
    def d_K(self) -> int:
        return abs(self.K.disc)

    @property
    def delta_order_coords(self):
        return tuple(int(c) for c in order_coords(self.F, self.delta))

    def delta_str(self) -> str:
        return format_delta(self.F, self.delta)

    def __str__(self):
        return "K/F with d_F=%d, d_K=%d, delta=%s" % (self.d_F, self.d_K, self.delta_str())


def format_delta(F, delta) -> str:
    """A surd expression for degree <= 2, otherwise coordinates in the power basis."""
    n = F.degree
    if n == 1:
        return str(delta[0])
    if n == 2:
        # y = (-b + sqrt(b^2 - 4c))/2 for y^2 + b y + c
        c0, b = F.poly[0], F.poly[1]
        D = b * b - 4 * c0
        g = 1
        for q, e in factorint(abs(D)).items():
            g *= q ** (e // 2)
        core = D // (g * g)
        x0, x1 = Fraction(delta[0]), Fraction(delta[1])
        rat = x0 - x1 * Fraction(b, 2)
        irr = x1 * Fraction(g, 2)
        if irr == 0:
            return str(rat)
        surd = "sqrt(%d)" % core
        irr_s = surd if irr == 1 else "-" + surd if irr == -1 else "%s*%s" % (irr, surd)
        if rat == 0:
            return irr_s
        sign = "+" if not irr_s.startswith("-") else ""
        return "%s%s%s" % (rat, sign, irr_s)
    return "[" + ",".join(str(x) for x in delta) + "] in " + polys.format_poly(F.poly)
