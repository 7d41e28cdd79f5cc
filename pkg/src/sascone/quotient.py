"""Quasi-regular quotient data and the orbifold Fano predicate.

A coprime ray (v1, v2) in the w-cone has a quasi-regular quotient: a
ruled orbifold log pair whose ramification data is

    s  = gcd(|w2*v1 - w1*v2|, l2)
    m  = l2 / s
    mi = m * vi
    n  = (l1 / s) * (w1*v2 - w2*v1)

with n = 0 exactly when v is proportional to w (the product case, which
is rejected). The orbifold first Chern class of the quotient is positive
iff the base is Fano and one strict integer inequality holds, with the
branch selected by the sign of w1*v2 - w2*v1:

    sign > 0:  I_N*l2*v2 - l1*(w1*v2 - w2*v1) > 0
    sign < 0:  I_N*l2*v1 + l1*(w1*v2 - w2*v1) > 0
    sign = 0:  both branches degenerate to I_N > 0

where I_N is the base's c1 coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import NamedTuple

from .core import JoinParams, ReebRay
from .errors import ProductCaseError


class QuotientData(NamedTuple):
    """Log-pair data (s, n, m, m1, m2) of a quasi-regular quotient."""

    s: int
    n: int
    m: int
    m1: int
    m2: int


def quotient_data_raw(l1: int, l2: int, w1: int, w2: int, v1: int, v2: int) -> QuotientData:
    """Ramification formulas on raw integers, without join validation.

    Like `positivity_range_raw` this exists for evaluating the formulas
    at parameter combinations that are not smooth joins; `quotient_data`
    is the validated entry point.
    """
    d = w1 * v2 - w2 * v1
    if d == 0:
        raise ProductCaseError(f"ray ({v1}, {v2}) is proportional to w; quotient degenerates (n = 0)")
    s = gcd(abs(d), l2)
    m = l2 // s
    return QuotientData(s=s, n=l1 * (d // s), m=m, m1=m * v1, m2=m * v2)


def quotient_data(join: JoinParams, ray: ReebRay) -> QuotientData:
    """Ramification data of the quotient along `ray`.

    Raises `ProductCaseError` when the ray equals w (then n = 0 and the
    quotient is a product, not a ruled log pair). A vanishing difference
    w1*v2 - w2*v1 with v != w cannot occur for coprime pairs.
    """
    d = join.w1 * ray.v2 - join.w2 * ray.v1
    if d == 0:
        assert (ray.v1, ray.v2) == (join.w1, join.w2)
        raise ProductCaseError(f"ray ({ray.v1}, {ray.v2}) equals w; quotient degenerates (n = 0)")
    s = gcd(abs(d), join.l2)
    m = join.l2 // s
    return QuotientData(s=s, n=join.l1 * (d // s), m=m, m1=m * ray.v1, m2=m * ray.v2)


def orb_fano_predicate(join: JoinParams, ray: ReebRay) -> bool:
    """True iff the quotient's orbifold first Chern class is positive.

    At v = w (where the quotient data degenerates) both inequality
    branches reduce to Fano-ness of the base, which is what is returned;
    this agrees with the fact that the w-ray always lies in the interior
    of the positivity range of a Fano join.
    """
    b0 = join.base.c1_coeff
    if b0 <= 0:
        return False
    d = join.w1 * ray.v2 - join.w2 * ray.v1
    if d > 0:
        return b0 * join.l2 * ray.v2 - join.l1 * d > 0
    if d < 0:
        return b0 * join.l2 * ray.v1 + join.l1 * d > 0
    return True


@dataclass(frozen=True, slots=True)
class OrbChernReport:
    """Scalar form of the positivity inequalities for one ray.

    `a_scalar` is 2*b0/n + 1/m1 - 1/m2 and `c_scalar` is 1/m1 + 1/m2,
    both exact rationals. The verdict is a_scalar > c_scalar for n > 0
    and a_scalar < -c_scalar for n < 0, and always equals
    `orb_fano_predicate`.
    """

    n: int
    a_scalar: Fraction
    c_scalar: Fraction
    branch: str
    positive: bool


def orb_c1_report(join: JoinParams, ray: ReebRay, data: QuotientData | None = None) -> OrbChernReport:
    if data is None:
        data = quotient_data(join, ray)
    b0 = join.base.c1_coeff
    a = Fraction(2 * b0, data.n) + Fraction(1, data.m1) - Fraction(1, data.m2)
    c = Fraction(1, data.m1) + Fraction(1, data.m2)
    if data.n > 0:
        return OrbChernReport(n=data.n, a_scalar=a, c_scalar=c, branch="n>0", positive=a > c)
    return OrbChernReport(n=data.n, a_scalar=a, c_scalar=c, branch="n<0", positive=a < -c)
