"""Type classification of rays in the w-cone.

With cone dimension above one, a ray is either positive or indefinite.
The positive subset, written in the ratio coordinate v1/v2, is an open
set computed exactly from (l1, l2, w1, w2) and the base's Fano index I_N:

* not Fano: empty (every ray indefinite);
* l2*I_N >= l1*w1: the whole cone (the equality case is included; the
  case split below then covers every Fano join and matches the known
  whole-cone families);
* rho = l2*I_N/(l1*w2) < 1: the open interval
  (w1/w2 - rho, (w1/w2)/(1 - rho));
* 1 <= rho < w1/w2: the open half-line (w1/w2 - rho, infinity).

All bounds are exact rationals and all membership tests are strict, so
boundary rays classify as indefinite.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .core import JoinParams, ReebRay, _require_positive_int
from .errors import BaseMismatchError, InvalidParameterError, NonpositiveVolumeError


class RangeKind(str, enum.Enum):
    EMPTY = "empty"
    ENTIRE = "entire"
    HALF_LINE = "half_line"
    INTERVAL = "interval"


class TypeVerdict(str, enum.Enum):
    POSITIVE = "positive"
    INDEFINITE = "indefinite"


@dataclass(frozen=True, slots=True)
class PositivityRange:
    """Positive subset of the w-cone in the open ratio coordinate v1/v2."""

    kind: RangeKind
    lower: Fraction | None = None
    upper: Fraction | None = None

    def __post_init__(self) -> None:
        if self.kind is RangeKind.INTERVAL:
            if self.lower is None or self.upper is None or not 0 <= self.lower < self.upper:
                raise InvalidParameterError(f"bad interval bounds ({self.lower}, {self.upper})")
        elif self.kind is RangeKind.HALF_LINE:
            if self.lower is None or self.lower < 0 or self.upper is not None:
                raise InvalidParameterError(f"bad half-line bound {self.lower}")
        elif self.lower is not None or self.upper is not None:
            raise InvalidParameterError(f"{self.kind.value} range carries no bounds")

    def contains(self, ratio: Fraction) -> bool:
        """Strict membership of a positive ratio."""
        if self.kind is RangeKind.EMPTY:
            return False
        if self.kind is RangeKind.ENTIRE:
            return True
        if ratio <= self.lower:
            return False
        return self.kind is RangeKind.HALF_LINE or ratio < self.upper

    def distance_to_boundary(self, ratio: Fraction) -> Fraction | None:
        """Exact distance from `ratio` to the nearest finite boundary, if any."""
        if self.kind in (RangeKind.EMPTY, RangeKind.ENTIRE):
            return None
        d = abs(ratio - self.lower)
        if self.kind is RangeKind.INTERVAL:
            d = min(d, abs(self.upper - ratio))
        return d

    def as_text(self) -> str:
        if self.kind is RangeKind.EMPTY:
            return "p+_w is empty"
        if self.kind is RangeKind.ENTIRE:
            return "p+_w = t+_w"
        if self.kind is RangeKind.HALF_LINE:
            return f"{self.lower} < v1/v2"
        return f"{self.lower} < v1/v2 < {self.upper}"


def positivity_range_raw(l1: int, l2: int, w1: int, w2: int, c1_coeff: int) -> PositivityRange:
    """Positivity range from raw parameters, skipping join validation.

    Exists so classification formulas can be evaluated for parameter
    tables that include non-smooth (l, w) combinations; `validate_join`
    remains the gate for actual joins.
    """
    for name, value in (("l1", l1), ("l2", l2), ("w1", w1), ("w2", w2)):
        _require_positive_int(value, name)
    if w1 < w2:
        raise InvalidParameterError(f"weights must satisfy w1 >= w2, got ({w1}, {w2})")
    if c1_coeff <= 0:
        return PositivityRange(RangeKind.EMPTY)
    if l2 * c1_coeff >= l1 * w1:
        return PositivityRange(RangeKind.ENTIRE)
    rho = Fraction(l2 * c1_coeff, l1 * w2)
    lower = Fraction(w1, w2) - rho
    if rho < 1:
        return PositivityRange(RangeKind.INTERVAL, lower=lower, upper=Fraction(w1, w2) / (1 - rho))
    return PositivityRange(RangeKind.HALF_LINE, lower=lower)


def positivity_range(join: JoinParams) -> PositivityRange:
    """Exact positive subset of the w-cone of a validated join."""
    return positivity_range_raw(join.l1, join.l2, join.w1, join.w2, join.base.c1_coeff)


def classify_ray(join: JoinParams, ray: ReebRay) -> TypeVerdict:
    """Positive iff v1/v2 lies strictly inside the positivity range."""
    if positivity_range(join).contains(ray.ratio):
        return TypeVerdict.POSITIVE
    return TypeVerdict.INDEFINITE


@dataclass(frozen=True, slots=True)
class WholeConeReport:
    """Whole-cone conclusions from the contact bundle's c1 coefficient.

    A zero coefficient forces an entirely positive cone, and so does a
    positive one; a negative coefficient decides nothing by itself (the
    cone may still be entirely positive). `entire` is the exact
    condition l2*I_N >= l1*w1 and `consistent` records agreement between
    the rules and the computed range.
    """

    c1_coeff: int
    c1_is_zero: bool
    c1_is_positive: bool
    entire: bool
    consistent: bool


def whole_cone_rules(join: JoinParams) -> WholeConeReport:
    base = join.base
    if base.c1_coeff != base.dim_c + 1:
        raise BaseMismatchError(
            f"whole-cone rules need a projective-space base, got (dim_c={base.dim_c}, c1_coeff={base.c1_coeff})"
        )
    coeff = join.l2 * (base.dim_c + 1) - join.l1 * (join.w1 + join.w2)
    entire = join.l2 * base.c1_coeff >= join.l1 * join.w1
    forced = coeff >= 0
    consistent = (entire or not forced) and entire == (
        positivity_range(join).kind is RangeKind.ENTIRE
    )
    return WholeConeReport(
        c1_coeff=coeff,
        c1_is_zero=coeff == 0,
        c1_is_positive=coeff > 0,
        entire=entire,
        consistent=consistent,
    )


def h1_signed(s_total: float, volume: float, n_half: int) -> float:
    """Signed Einstein-Hilbert value sign(S) * |S|^(n+1) / V^n.

    `s_total` and `volume` are user-supplied totals for a Sasaki manifold
    of dimension 2*n_half + 1; they are not computed here.
    """
    _require_positive_int(n_half, "n_half")
    volume = float(volume)
    if not volume > 0:
        raise NonpositiveVolumeError(f"volume must be positive, got {volume}")
    s_total = float(s_total)
    if s_total == 0.0:
        return 0.0
    sign = 1.0 if s_total > 0 else -1.0
    return sign * abs(s_total) ** (n_half + 1) / volume**n_half
