"""Exact integer and rational domain types shared by every module.

All values are immutable and safe to share between threads. Rational
arithmetic is `fractions.Fraction`, which keeps numerator/denominator in
canonical form (gcd 1, positive denominator) by construction; it is
re-exported as `Rational`.

Conventions baked into the types:

* join weights are stored sorted, w1 >= w2;
* l1 and l2 are relatively prime, as are w1 and w2;
* the smoothness condition gcd(l2, l1*w1*w2) = 1 is enforced;
* Reeb rays (v1, v2) are coprime positive integers. Irregular rays are
  handled by a user-chosen rational approximant, see `ReebRay.reduced`;
  the classification verdict is exact away from range boundaries, and
  the CLI can flag rays within a declared distance of a boundary.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import (
    InvalidParameterError,
    NotCoprimeError,
    NotFanoError,
    SmoothnessViolationError,
)

Rational = Fraction

_BASE_RE = re.compile(r"^(?:cp(?P<p>\d+)|sigma(?P<g>\d+)|custom:(?P<d>\d+):(?P<b>-?\d+))$")


def _require_positive_int(value: object, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidParameterError(f"{name} must be an int, got {type(value).__name__}")
    if value < 1:
        raise InvalidParameterError(f"{name} must be a positive integer, got {value}")
    return value


def _require_int(value: object, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidParameterError(f"{name} must be an int, got {type(value).__name__}")
    return value


@dataclass(frozen=True, slots=True)
class BaseManifold:
    """Invariants of the regular quotient N of the first join factor.

    Only two numbers of N enter any formula here: its complex dimension
    `dim_c` and the coefficient `c1_coeff` of the primitive Kaehler class
    in the first Chern class (the Fano index when positive). A free-text
    label is carried along for reporting.
    """

    dim_c: int
    c1_coeff: int
    label: str = ""

    def __post_init__(self) -> None:
        _require_positive_int(self.dim_c, "dim_c")
        _require_int(self.c1_coeff, "c1_coeff")

    @property
    def is_fano(self) -> bool:
        return self.c1_coeff > 0

    @property
    def fano_index(self) -> int:
        if not self.is_fano:
            raise NotFanoError(f"base {self.label or self} has c1 coefficient {self.c1_coeff} <= 0")
        return self.c1_coeff

    @classmethod
    def projective_space(cls, p: int) -> "BaseManifold":
        """CP^p with the Fubini-Study class: dim_c = p, c1 coefficient p + 1."""
        _require_positive_int(p, "p")
        return cls(dim_c=p, c1_coeff=p + 1, label=f"CP{p}")

    @classmethod
    def riemann_surface(cls, genus: int) -> "BaseManifold":
        """Closed surface of the given genus: dim_c = 1, c1 coefficient 2 - 2g."""
        if isinstance(genus, bool) or not isinstance(genus, int) or genus < 0:
            raise InvalidParameterError(f"genus must be a nonnegative int, got {genus!r}")
        return cls(dim_c=1, c1_coeff=2 - 2 * genus, label=f"Sigma{genus}")


def parse_base(text: str) -> BaseManifold:
    """Parse a base string: ``cp<p>``, ``sigma<g>``, or ``custom:<dim_c>:<c1>``."""
    m = _BASE_RE.match(text.strip().lower())
    if m is None:
        raise InvalidParameterError(
            f"cannot parse base {text!r}; expected cp<p>, sigma<g>, or custom:<dim_c>:<c1>"
        )
    if m.group("p") is not None:
        return BaseManifold.projective_space(int(m.group("p")))
    if m.group("g") is not None:
        return BaseManifold.riemann_surface(int(m.group("g")))
    return BaseManifold(dim_c=int(m.group("d")), c1_coeff=int(m.group("b")), label=text.strip())


@dataclass(frozen=True, slots=True)
class JoinParams:
    """Parameters (l1, l2, w1, w2) of a weighted 3-sphere join over `base`.

    Use `validate_join` to build one from raw integers; it sorts the
    weights. Direct construction re-checks every invariant.
    """

    base: BaseManifold
    l1: int
    l2: int
    w1: int
    w2: int

    def __post_init__(self) -> None:
        for name in ("l1", "l2", "w1", "w2"):
            _require_positive_int(getattr(self, name), name)
        if self.w1 < self.w2:
            raise InvalidParameterError(f"weights must satisfy w1 >= w2, got ({self.w1}, {self.w2})")
        if gcd(self.l1, self.l2) != 1:
            raise NotCoprimeError("l1", self.l1, "l2", self.l2)
        if gcd(self.w1, self.w2) != 1:
            raise NotCoprimeError("w1", self.w1, "w2", self.w2)
        if gcd(self.l2, self.l1 * self.w1 * self.w2) != 1:
            raise SmoothnessViolationError(
                f"gcd(l2, l1*w1*w2) = gcd({self.l2}, {self.l1 * self.w1 * self.w2}) != 1"
            )

    @property
    def w_ratio(self) -> Fraction:
        return Fraction(self.w1, self.w2)


def validate_join(l1: int, l2: int, w1: int, w2: int, base: BaseManifold) -> JoinParams:
    """Canonicalize and validate raw join parameters.

    Weights given in ascending order are swapped silently (the CLI notes
    the swap). Idempotent: feeding back the fields of a valid JoinParams
    returns an equal JoinParams.
    """
    _require_positive_int(w1, "w1")
    _require_positive_int(w2, "w2")
    if w1 < w2:
        w1, w2 = w2, w1
    return JoinParams(base=base, l1=l1, l2=l2, w1=w1, w2=w2)


@dataclass(frozen=True, slots=True)
class ReebRay:
    """A quasi-regular ray in the w-cone, selected by coprime (v1, v2)."""

    v1: int
    v2: int

    def __post_init__(self) -> None:
        _require_positive_int(self.v1, "v1")
        _require_positive_int(self.v2, "v2")
        if gcd(self.v1, self.v2) != 1:
            raise NotCoprimeError("v1", self.v1, "v2", self.v2)

    @classmethod
    def reduced(cls, v1: int, v2: int) -> "ReebRay":
        """Canonicalize an unreduced positive pair by dividing out the gcd."""
        _require_positive_int(v1, "v1")
        _require_positive_int(v2, "v2")
        g = gcd(v1, v2)
        return cls(v1 // g, v2 // g)

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.v1, self.v2)
