"""Spectra of the base: finite power sums with bounded digits.

Enumeration recurses most-significant digit first, abandoning a prefix as
soon as the reachable value interval misses the window; candidate values
are deduplicated and sorted exactly (collisions like beta^2 = beta + 1 in
quadratic fields are genuine and common).  Gap statistics substitute for
the liminf of consecutive differences, which is not computable: per-degree
minimum gaps expose the trend instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key

from .errors import ExplosionGuard, InputError
from .field import BetaContext, FieldElement

ENUM_NODE_GUARD = 10**8


@dataclass(frozen=True)
class SpectrumQuery:
    digit_bound: int
    max_degree: int
    window: tuple[Fraction, Fraction]
    signed: bool = False

    def __post_init__(self):
        if self.digit_bound < 0:
            raise InputError("digit bound must be nonnegative")
        if self.max_degree < 0:
            raise InputError("degree must be nonnegative")
        if self.window[0] > self.window[1]:
            raise InputError("window is empty")


@dataclass(frozen=True)
class PerDegreeGap:
    degree: int
    count: int
    min_gap: FieldElement | None

    def min_gap_decimal(self, digits: int = 12) -> str:
        return "" if self.min_gap is None else self.min_gap.decimal(digits)


@dataclass(frozen=True)
class GapStats:
    count: int
    min_gap: FieldElement
    min_gap_decimal: str
    per_degree: tuple[PerDegreeGap, ...]


def enumerate_spectrum(ctx: BetaContext, q: SpectrumQuery) -> list[FieldElement]:
    """All sums of digit multiples of beta powers up to the degree whose value
    lies in the closed window, deduplicated and sorted exactly."""
    digits = range(-q.digit_bound, q.digit_bound + 1) if q.signed \
        else range(0, q.digit_bound + 1)
    n = q.max_degree
    if len(digits) ** (n + 1) > ENUM_NODE_GUARD:
        raise ExplosionGuard("estimated enumeration size exceeds the guard")
    wlo, whi = Fraction(q.window[0]), Fraction(q.window[1])

    # rational enclosures of beta powers and of the digit-sum extremes
    blo, bhi = ctx.beta_interval(128)
    pow_iv = [(Fraction(1), Fraction(1))]
    for _ in range(n):
        lo, hi = pow_iv[-1]
        pow_iv.append((min(lo * blo, lo * bhi), max(hi * blo, hi * bhi)))
    # rest_hi[k] = max possible completion from degrees k-1 .. 0
    rest_hi = [Fraction(0)]
    for k in range(n):
        rest_hi.append(rest_hi[-1] + q.digit_bound * pow_iv[k][1])
    rest_lo = [-r for r in rest_hi] if q.signed else [Fraction(0)] * (n + 1)
    pows = [ctx.pow_beta(k) for k in range(n + 1)]

    found: dict[tuple, FieldElement] = {}

    def recurse(level: int, value: FieldElement, vlo: Fraction, vhi: Fraction):
        if vhi + rest_hi[level] < wlo or vlo + rest_lo[level] > whi:
            return
        if level == 0:
            if (value - wlo).sign() >= 0 and (whi - value).sign() >= 0:
                found.setdefault(value.coeffs, value)
            return
        k = level - 1
        for a in digits:
            nv = value + pows[k] * a if a else value
            plo, phi = pow_iv[k]
            alo, ahi = (a * plo, a * phi) if a >= 0 else (a * phi, a * plo)
            recurse(k, nv, vlo + alo, vhi + ahi)

    recurse(n + 1, ctx.zero(), Fraction(0), Fraction(0))
    values = list(found.values())
    values.sort(key=cmp_to_key(lambda u, v: (u - v).sign()))
    return values


def _min_gap_element(ctx: BetaContext, values) -> FieldElement | None:
    best = None
    for a, b in zip(values, values[1:]):
        gap = b - a
        if best is None or (gap - best).sign() < 0:
            best = gap
    return best


def min_gap(ctx: BetaContext, d: int, n: int, window,
            signed: bool = False) -> GapStats:
    """Exact minimum consecutive difference over the window, with the
    per-degree trend for every degree up to n."""
    window = (Fraction(window[0]), Fraction(window[1]))
    per = []
    for m in range(n + 1):
        vals = enumerate_spectrum(
            ctx, SpectrumQuery(d, m, window, signed))
        per.append(PerDegreeGap(m, len(vals), _min_gap_element(ctx, vals)))
    top = per[-1]
    if top.min_gap is None:
        raise InputError("window holds fewer than two spectrum values")
    return GapStats(top.count, top.min_gap, top.min_gap.decimal(),
                    tuple(per))


@dataclass(frozen=True)
class FNumberOutcome:
    status: str  # "finite" | "budget_exceeded"
    count: int | None
    values: tuple[FieldElement, ...] | None


def f_number_probe(ctx: BetaContext, budget_values: int = 100_000,
                   d: int | None = None) -> FNumberOutcome:
    """Probe finiteness of the spectrum clipped to its natural interval.

    With the default d = ceil(beta) - 1 this is the set whose finiteness
    characterizes the classical F-numbers; passing any other d is an
    extension beyond that definition.  The closure v -> beta*v + a is run
    inside the interval of radius 2d/(beta-1): every clipped spectrum value
    has a digit-prefix chain that stays within twice the radius, so the
    doubled closure provably covers the clipped set and the reported count
    is exact.  An infinite spectrum exhausts the budget instead.
    """
    if d is None:
        d = ctx.ceil_beta() - 1
    if d < 0:
        raise InputError("digit bound must be nonnegative")
    radius = ctx.invert(ctx.beta() - 1) * d
    wide = radius * 2

    def inside(v: FieldElement, bound: FieldElement) -> bool:
        return (bound - v).sign() >= 0 and (bound + v).sign() >= 0

    seen = {ctx.zero()}
    frontier = [ctx.zero()]
    while frontier:
        nxt = []
        for v in frontier:
            vb = v.mul_by_beta()
            for a in range(-d, d + 1):
                t = vb + a
                if t in seen or not inside(t, wide):
                    continue
                if len(seen) >= budget_values:
                    return FNumberOutcome("budget_exceeded", None, None)
                seen.add(t)
                nxt.append(t)
        frontier = nxt
    clipped = [v for v in seen if inside(v, radius)]
    clipped.sort(key=cmp_to_key(lambda u, v: (u - v).sign()))
    return FNumberOutcome("finite", len(clipped), tuple(clipped))
