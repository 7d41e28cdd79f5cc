"""Explicit admissible metric profiles with positive Ricci curvature.

The construction lives on the momentum interval [-1, 1]. Fix ramification
indices (m1, m2), a weight exponent d_n, and a real r with 0 < |r| < 1 and
r*n > 0. Write p(z) = (1 + r*z)**d_n, which is positive on the interval.
The transition function is

    g(t, k) = 2*((1/m1 + 1/m2)*exp(-k*t) - (exp(k)/m1 + exp(-k)/m2))
                / (exp(k) - exp(-k))                        for k != 0
    g(t, 0) = (1 - t)/m2 - (1 + t)/m1

which is continuously differentiable in (t, k), strictly decreasing in t,
and satisfies g(-1, k) = 2/m2 and g(1, k) = -2/m1 for every k. The map

    f(k) = integral of g(t, k) * p(t) over [-1, 1]

is strictly decreasing from (2/m2)*int(p) to (-2/m1)*int(p), so it has a
unique root k*. The profile is

    F(z) = integral of g(t, k*) * p(t) from -1 to z,

which vanishes at both endpoints, is positive inside, and has endpoint
slopes F'(-1) = 2*p(-1)/m2 and F'(1) = -2*p(1)/m1. With Theta = F/p this
gives an admissible Kaehler metric on the quotient log pair whose Ricci
form has coefficients

    ricci_h(z) = I_N/n - g(z, k*)/2        (horizontal)
    ricci_v(z) = -(1/2) * dg/dt (z, k*)    (vertical, always positive)

and the metric has positive Ricci curvature iff the two integer box
conditions (I_N/n - 1/m2)*n > 0 and (I_N/n + 1/m1)*n > 0 hold; the third
condition, that F'/p has negative derivative, holds by construction.

Numerics. All integrals have closed forms. For |k| >= 0.5 they are
evaluated with exponential antiderivatives (integration by parts on
t**j * exp(-k*t)). For 0 < |k| < 0.5 that route loses digits to
cancellation in 1/(exp(k) - exp(-k)), so f and F switch to a power
series in k around the k = 0 branch: with moments M_i(z) of t**i * p(t),

    F(z; k) = (sum over i >= 1 of k**(i-1)/i! *
               ((a+b)*(-1)**i * M_i(z) - (a + (-1)**i * b) * M_0(z)))
              * (k / sinh k),   a = 1/m1, b = 1/m2,

whose i = 0 term cancels exactly; the series is evaluated to machine
precision (it extends the first-order-in-k correction to all orders).
Everything is pure and reentrant; sampling a grid is embarrassingly
parallel. Exact quadrature of these closed forms is cross-checked against
adaptive numerical quadrature in the test suite only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .core import JoinParams, ReebRay, _require_positive_int
from .errors import (
    BoxViolationError,
    BracketFailureError,
    InvalidParameterError,
    ProductCaseError,
)
from .quotient import QuotientData, orb_fano_predicate, quotient_data

DEFAULT_GRID = 201
_BRACKET_LIMIT = 512.0
_SERIES_CUTOFF = 0.5
_SERIES_TERMS = 48


@dataclass(frozen=True, slots=True)
class ProfileParams:
    """Inputs of the profile construction.

    `m1`, `m2` are the ramification indices, `d_n` the exponent of the
    weight polynomial (the base's complex dimension; 0 is admitted as a
    synthetic test case), `n` the twist of the quotient, `fano_index`
    the base's positive c1 coefficient, and `r` the admissible-class
    parameter with 0 < |r| < 1 and r*n > 0.
    """

    m1: int
    m2: int
    d_n: int
    r: float
    n: int
    fano_index: int

    def __post_init__(self) -> None:
        _require_positive_int(self.m1, "m1")
        _require_positive_int(self.m2, "m2")
        _require_positive_int(self.fano_index, "fano_index")
        if isinstance(self.d_n, bool) or not isinstance(self.d_n, int) or self.d_n < 0:
            raise InvalidParameterError(f"d_n must be a nonnegative int, got {self.d_n!r}")
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n == 0:
            raise InvalidParameterError(f"n must be a nonzero int, got {self.n!r}")
        object.__setattr__(self, "r", float(self.r))
        if not 0.0 < abs(self.r) < 1.0:
            raise InvalidParameterError(f"r must satisfy 0 < |r| < 1, got {self.r}")
        if self.r * self.n <= 0:
            raise InvalidParameterError(f"r and n must have the same sign, got r={self.r}, n={self.n}")


class ProfileSample(NamedTuple):
    z: float
    f: float
    theta: float
    ricci_h: float
    ricci_v: float


@dataclass(frozen=True, slots=True)
class SolveDiagnostics:
    k: float
    residual: float
    tolerance: float
    bracket_lo: float
    bracket_hi: float
    iterations: int


@dataclass(frozen=True, slots=True)
class VerificationReport:
    """Numerical certificate attached to a built profile."""

    grid_size: int
    root: SolveDiagnostics
    endpoint_f_lo: float
    endpoint_f_hi: float
    fprime_lo_residual: float
    fprime_hi_residual: float
    interior_min_f: float
    interior_positive: bool
    max_g_dt: float
    g_monotone: bool
    box_ok: bool
    box_first: int
    box_second: int
    horizontal_positive: bool
    vertical_positive: bool
    ke_balance: float
    is_ke: bool
    synthetic_dimension: bool

    @property
    def endpoints_ok(self) -> bool:
        return (
            max(self.endpoint_f_lo, self.endpoint_f_hi) <= 1e-10
            and max(self.fprime_lo_residual, self.fprime_hi_residual) <= 1e-10
        )

    @property
    def all_ok(self) -> bool:
        coeffs_ok = not self.box_ok or (self.horizontal_positive and self.vertical_positive)
        return self.endpoints_ok and self.interior_positive and self.g_monotone and coeffs_ok


@dataclass(frozen=True, slots=True)
class MetricProfile:
    params: ProfileParams
    k_root: float
    samples: tuple[ProfileSample, ...]
    report: VerificationReport


def weight_poly(z: float, r: float, d_n: int) -> float:
    """The fiber weight polynomial p(z) = (1 + r*z)**d_n."""
    return (1.0 + r * z) ** d_n


def g_func(t: float, k: float, m1: int, m2: int) -> float:
    """Transition function g(t, k); see the module docstring.

    Evaluated through exp * sinh products so that small |k| loses no
    precision; at k = 0 the linear branch is exact.
    """
    if k == 0.0:
        return (1.0 - t) / m2 - (1.0 + t) / m1
    sk = math.sinh(k)
    lo = math.exp(-k * (1.0 + t) * 0.5) * math.sinh(k * (1.0 - t) * 0.5)
    hi = math.exp(k * (1.0 - t) * 0.5) * math.sinh(k * (1.0 + t) * 0.5)
    return 2.0 * (lo / m2 - hi / m1) / sk


def g_dt(t: float, k: float, m1: int, m2: int) -> float:
    """Partial derivative of g in t; strictly negative for all (t, k)."""
    if k == 0.0:
        return -(1.0 / m1 + 1.0 / m2)
    return -(1.0 / m1 + 1.0 / m2) * (k / math.sinh(k)) * math.exp(-k * t)


class _Kernel:
    """Closed-form integrals of g(t, k) * p(t) for fixed (m1, m2, r, d_n)."""

    __slots__ = ("alpha", "beta", "coeffs", "q_total")

    def __init__(self, m1: int, m2: int, r: float, d_n: int) -> None:
        self.alpha = 1.0 / m1
        self.beta = 1.0 / m2
        self.coeffs = [math.comb(d_n, p) * r**p for p in range(d_n + 1)]
        self.q_total = self.moment(1.0, 0)

    def moment(self, z: float, i: int) -> float:
        """M_i(z) = integral of t**i * p(t) from -1 to z."""
        acc = 0.0
        for p, c in enumerate(self.coeffs):
            e = i + p + 1
            acc += c * (z**e - (-1.0) ** e) / e
        return acc

    def _exp_integral(self, z: float, k: float) -> float:
        """E(z; k) = integral of exp(-k*t) * p(t) from -1 to z, |k| >= cutoff."""
        sum_z = 0.0
        sum_lo = 0.0
        for p, c in enumerate(self.coeffs):
            a = 1.0 / k
            acc_z = 0.0
            acc_lo = 0.0
            for i in range(p + 1):
                e = p - i
                acc_z += a * z**e
                acc_lo += a * (-1.0) ** e
                a *= e / k
            sum_z += c * acc_z
            sum_lo += c * acc_lo
        return -math.exp(-k * z) * sum_z + math.exp(k) * sum_lo

    def big_f(self, z: float, k: float) -> float:
        """F(z; k) = integral of g(t, k) * p(t) from -1 to z."""
        if k == 0.0:
            return (self.beta - self.alpha) * self.moment(z, 0) - (
                self.alpha + self.beta
            ) * self.moment(z, 1)
        if abs(k) < _SERIES_CUTOFF:
            return self._series_f(z, k)
        ek = math.exp(k)
        num = (self.alpha + self.beta) * self._exp_integral(z, k) - (
            self.alpha * ek + self.beta / ek
        ) * self.moment(z, 0)
        return num / math.sinh(k)

    def _series_f(self, z: float, k: float) -> float:
        m0 = self.moment(z, 0)
        ab = self.alpha + self.beta
        amb = self.alpha - self.beta
        cmax = 2.0 * ab * self.q_total
        acc = 0.0
        kpow = 1.0
        fact = 1.0
        for i in range(1, _SERIES_TERMS):
            fact *= i
            mi = self.moment(z, i)
            if i % 2 == 0:
                ci = ab * (mi - m0)
            else:
                ci = -ab * mi - amb * m0
            acc += kpow * ci / fact
            kpow *= k
            # Tail bound: |c_i| <= 2*(a+b)*int(p) and terms shrink by at
            # least |k|/(i+1) < 1/2, so the remainder is below twice the
            # next-term bound. Stop once it is negligible against acc,
            # with a hard floor for the acc == 0 endpoints.
            tail = abs(kpow) * cmax / fact
            if tail <= 1e-16 * abs(acc) or abs(kpow) <= 1e-30 * fact:
                break
        return acc * (k / math.sinh(k))

    def f(self, k: float) -> float:
        return self.big_f(1.0, k)


def _kernel(params: ProfileParams) -> _Kernel:
    return _Kernel(params.m1, params.m2, params.r, params.d_n)


def f_of_k(k: float, params: ProfileParams) -> float:
    """The root function f(k) = integral of g(t, k) * p(t) over [-1, 1]."""
    return _kernel(params).f(float(k))


def profile_F(z: float, k: float, params: ProfileParams) -> float:
    """The profile F(z) = integral of g(t, k) * p(t) from -1 to z."""
    return _kernel(params).big_f(float(z), float(k))


def _solve_k(kern: _Kernel, tol_rel: float) -> SolveDiagnostics:
    tol = tol_rel * (kern.alpha + kern.beta) * kern.q_total
    lo, hi = -1.0, 1.0
    while kern.f(lo) <= 0.0:
        lo *= 2.0
        if lo < -_BRACKET_LIMIT:
            raise BracketFailureError(f"no sign change of f down to k = {lo}")
    while kern.f(hi) >= 0.0:
        hi *= 2.0
        if hi > _BRACKET_LIMIT:
            raise BracketFailureError(f"no sign change of f up to k = {hi}")
    bracket = (lo, hi)
    mid = 0.5 * (lo + hi)
    it = 0
    for it in range(1, 201):
        mid = 0.5 * (lo + hi)
        fm = kern.f(mid)
        if abs(fm) <= tol:
            return SolveDiagnostics(
                k=mid, residual=abs(fm), tolerance=tol,
                bracket_lo=bracket[0], bracket_hi=bracket[1], iterations=it,
            )
        if fm > 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-17 * max(1.0, abs(mid)):
            break
    mid = 0.5 * (lo + hi)
    residual = abs(kern.f(mid))
    if residual <= tol:
        return SolveDiagnostics(
            k=mid, residual=residual, tolerance=tol,
            bracket_lo=bracket[0], bracket_hi=bracket[1], iterations=it + 1,
        )
    raise BracketFailureError(f"bisection stalled at k = {mid} with |f| = {residual} > {tol}")


def solve_k(params: ProfileParams, tol_rel: float = 1e-12) -> float:
    """Unique root of f, by bracket doubling from [-1, 1] then bisection.

    The returned k satisfies |f(k)| <= tol_rel * (1/m1 + 1/m2) * int(p).
    Monotonicity of f makes the bisection invariant f(lo) > 0 > f(hi)
    self-maintaining; the bracket cap exists only to guard numerics.
    """
    return _solve_k(_kernel(params), tol_rel).k


def ricci_box_holds(fano_index: int, n: int, m1: int, m2: int) -> bool:
    """The two endpoint box conditions, as exact integer inequalities.

    (I_N/n - 1/m2)*n > 0 and (I_N/n + 1/m1)*n > 0 clear denominators to
    I_N*m2 > n and I_N*m1 > -n. For n > 0 the second is automatic, for
    n < 0 the first; both fail for every n when I_N <= 0.
    """
    return fano_index * m2 > n and fano_index * m1 > -n


def ricci_box_check(params: ProfileParams) -> bool:
    """Box conditions for the profile parameters; the third condition
    (negative derivative of F'/p) holds for the constructed profile and
    is verified numerically in its report rather than assumed."""
    return ricci_box_holds(params.fano_index, params.n, params.m1, params.m2)


def build_profile(
    params: ProfileParams, grid_size: int = DEFAULT_GRID, tol_rel: float = 1e-12
) -> MetricProfile:
    """Solve for k, sample the profile on a uniform grid, and certify it.

    The samples cover [-1, 1] endpoints included. The report records the
    endpoint residuals of F and F', interior positivity, monotonicity of
    g, the box verdict with its two integer scalars, and the flat
    (Kaehler-Einstein) specialization flag.
    """
    if isinstance(grid_size, bool) or not isinstance(grid_size, int) or grid_size < 3:
        raise InvalidParameterError(f"grid_size must be an int >= 3, got {grid_size!r}")
    kern = _kernel(params)
    diag = _solve_k(kern, tol_rel)
    k = diag.k
    m1, m2, r, d_n, n, fano = params.m1, params.m2, params.r, params.d_n, params.n, params.fano_index

    samples: list[ProfileSample] = []
    interior_min = math.inf
    max_gdt = -math.inf
    last = grid_size - 1
    for idx in range(grid_size):
        z = (2.0 * idx) / last - 1.0
        fz = kern.big_f(z, k)
        gz = g_func(z, k, m1, m2)
        dgz = g_dt(z, k, m1, m2)
        samples.append(
            ProfileSample(
                z=z,
                f=fz,
                theta=fz / weight_poly(z, r, d_n),
                ricci_h=fano / n - 0.5 * gz,
                ricci_v=-0.5 * dgz,
            )
        )
        if 0 < idx < last:
            interior_min = min(interior_min, fz)
        max_gdt = max(max_gdt, dgz)

    p_lo = weight_poly(-1.0, r, d_n)
    p_hi = weight_poly(1.0, r, d_n)
    box_ok = ricci_box_holds(fano, n, m1, m2)
    report = VerificationReport(
        grid_size=grid_size,
        root=diag,
        endpoint_f_lo=abs(samples[0].f),
        endpoint_f_hi=abs(samples[-1].f),
        fprime_lo_residual=abs(g_func(-1.0, k, m1, m2) - 2.0 / m2) * p_lo,
        fprime_hi_residual=abs(g_func(1.0, k, m1, m2) + 2.0 / m1) * p_hi,
        interior_min_f=interior_min,
        interior_positive=interior_min > 0.0,
        max_g_dt=max_gdt,
        g_monotone=max_gdt < 0.0,
        box_ok=box_ok,
        box_first=fano * m2 - n,
        box_second=fano * m1 + n,
        horizontal_positive=all(s.ricci_h * n > 0.0 for s in samples),
        vertical_positive=all(s.ricci_v > 0.0 for s in samples),
        ke_balance=kern.f(0.0),
        is_ke=abs(k) <= 1e-13
        and abs(2.0 * r * fano / n - (1.0 + r) / m2 - (1.0 - r) / m1) <= 1e-12,
        synthetic_dimension=d_n == 0,
    )
    return MetricProfile(params=params, k_root=k, samples=tuple(samples), report=report)


def ricci_coefficients(profile: MetricProfile) -> tuple[ProfileSample, ...]:
    """Samples with their Ricci coefficients, after positivity assertion.

    When the box conditions hold, every sampled horizontal coefficient
    must satisfy ricci_h * n > 0 and every vertical one ricci_v > 0; a
    violation is a numerical bug, reported as `BoxViolationError`.
    """
    n = profile.params.n
    if profile.report.box_ok:
        for s in profile.samples:
            if not (s.ricci_h * n > 0.0 and s.ricci_v > 0.0):
                raise BoxViolationError(
                    f"box conditions hold but sample at z={s.z} has "
                    f"ricci_h={s.ricci_h}, ricci_v={s.ricci_v}"
                )
    return profile.samples


def profile_params_from_ray(
    join: JoinParams, ray: ReebRay, r: float | None = None
) -> tuple[ProfileParams, QuotientData]:
    """Profile parameters induced by a quasi-regular ray of a Fano join.

    The class parameter r is not determined by the join here and defaults
    to sign(n)/2, the midpoint of its admissible interval.
    """
    fano = join.base.fano_index
    data = quotient_data(join, ray)
    if r is None:
        r = 0.5 if data.n > 0 else -0.5
    params = ProfileParams(
        m1=data.m1, m2=data.m2, d_n=join.base.dim_c, r=r, n=data.n, fano_index=fano
    )
    return params, data


def _m_theta(m: int, profile: MetricProfile) -> list[float]:
    return [m * s.theta for s in profile.samples]


def _sup_diff(a: Sequence[float], b: Sequence[float]) -> float:
    return max(abs(x - y) for x, y in zip(a, b))


@dataclass(frozen=True, slots=True)
class LiftRayEntry:
    ray: ReebRay
    accepted: bool
    reason: str | None
    n: int | None = None
    m: int | None = None
    m1: int | None = None
    m2: int | None = None
    k_root: float | None = None
    box_ok: bool | None = None
    doubling_max_diff: float | None = None
    l2_variant: int | None = None
    l2_variant_m: int | None = None
    l2_variant_max_diff: float | None = None


@dataclass(frozen=True, slots=True)
class LiftNeighborGap:
    ratio_a: Fraction
    ratio_b: Fraction
    ratio_gap: float
    sup_gap: float


@dataclass(frozen=True, slots=True)
class LiftReport:
    entries: tuple[LiftRayEntry, ...]
    neighbor_gaps: tuple[LiftNeighborGap, ...]


def _l2_variant_join(join: JoinParams, data: QuotientData, ray: ReebRay):
    """A second join, equal except for l2, whose quotient along `ray`
    has a different orbit multiple m. Returns (join, data) or None."""
    d = join.w1 * ray.v2 - join.w2 * ray.v1
    for c in range(2, 98):
        l2c = c * join.l2
        if math.gcd(join.l1, l2c) != 1 or math.gcd(l2c, join.l1 * join.w1 * join.w2) != 1:
            continue
        s = math.gcd(abs(d), l2c)
        if l2c // s == data.m:
            continue
        variant = JoinParams(base=join.base, l1=join.l1, l2=l2c, w1=join.w1, w2=join.w2)
        return variant, quotient_data(variant, ray)
    return None


def sasaki_lift_check(
    join: JoinParams,
    rays: Sequence[ReebRay],
    r: float | None = None,
    grid_size: int = DEFAULT_GRID,
) -> LiftReport:
    """Check that m * Theta depends only on the ray, not on the orbit data.

    For each ray inside the positivity region the profile is rebuilt with
    the ramification indices doubled (same quotient, coarser uniformizing
    orbit) and, when possible, from a different l2 giving a genuinely
    different m; the sampled m * Theta arrays are compared in sup norm.
    Rays outside the region are refused. Adjacent accepted rays (ordered
    by ratio) additionally report the variation of m * Theta against the
    ratio gap, a finite-difference record of the smooth dependence.
    """
    entries: list[LiftRayEntry] = []
    accepted: list[tuple[Fraction, list[float]]] = []
    for ray in sorted(rays, key=lambda v: v.ratio):
        if not orb_fano_predicate(join, ray):
            entries.append(LiftRayEntry(ray=ray, accepted=False, reason="ray outside positivity region"))
            continue
        try:
            params, data = profile_params_from_ray(join, ray, r=r)
        except ProductCaseError:
            entries.append(LiftRayEntry(ray=ray, accepted=False, reason="product case (v = w)"))
            continue
        profile = build_profile(params, grid_size=grid_size)
        base_mtheta = _m_theta(data.m, profile)

        doubled = build_profile(
            ProfileParams(
                m1=2 * params.m1, m2=2 * params.m2, d_n=params.d_n,
                r=params.r, n=params.n, fano_index=params.fano_index,
            ),
            grid_size=grid_size,
        )
        doubling_diff = _sup_diff(base_mtheta, _m_theta(2 * data.m, doubled))

        variant = _l2_variant_join(join, data, ray)
        variant_l2 = variant_m = None
        variant_diff = None
        if variant is not None:
            vjoin, vdata = variant
            vparams, _ = profile_params_from_ray(vjoin, ray, r=params.r)
            vprofile = build_profile(vparams, grid_size=grid_size)
            variant_l2, variant_m = vjoin.l2, vdata.m
            variant_diff = _sup_diff(base_mtheta, _m_theta(vdata.m, vprofile))

        entries.append(
            LiftRayEntry(
                ray=ray, accepted=True, reason=None,
                n=data.n, m=data.m, m1=data.m1, m2=data.m2,
                k_root=profile.k_root, box_ok=profile.report.box_ok,
                doubling_max_diff=doubling_diff,
                l2_variant=variant_l2, l2_variant_m=variant_m,
                l2_variant_max_diff=variant_diff,
            )
        )
        accepted.append((ray.ratio, base_mtheta))

    gaps = tuple(
        LiftNeighborGap(
            ratio_a=ra, ratio_b=rb,
            ratio_gap=float(rb - ra), sup_gap=_sup_diff(ta, tb),
        )
        for (ra, ta), (rb, tb) in zip(accepted, accepted[1:])
    )
    return LiftReport(entries=tuple(entries), neighbor_gaps=gaps)
