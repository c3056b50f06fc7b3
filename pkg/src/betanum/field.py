"""Exact arithmetic in Q(beta) with certified root enclosures.

A :class:`BetaContext` fixes an integer polynomial, selects its largest real
root greater than one as the base beta, and provides exact field arithmetic
on rational coefficient vectors reduced modulo the minimal polynomial of
beta.  Real enclosures are dyadic intervals refined by bisection; complex
conjugate enclosures are rational rectangles obtained from certified root
isolation.  No floating point is used in any decision.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import sympy

from . import polyint
from .errors import (
    ContextMismatch,
    InputError,
    NonSquareFreePolynomial,
    NoRootAboveOne,
    ZeroLeadingCoefficient,
)
from .intervals import Interval, Rect, rect_mod_squared, rect_width

# Refinement escalates by doubling the enclosure width target, in bits.
# Past the cap, boundary comparisons switch to exact symbolic tests.
PRECISION_CAP_BITS = 4096


def _sgn(v) -> int:
    return (v > 0) - (v < 0)


class _DyadicRoot:
    """Isolating dyadic interval for a simple real root, refined on demand."""

    __slots__ = ("poly", "lo", "hi", "bits")

    def __init__(self, poly, lo: Fraction, hi: Fraction):
        self.poly = poly
        self.lo = lo
        self.hi = hi
        self.bits = 0

    def width(self) -> Fraction:
        return self.hi - self.lo

    def refine_to(self, bits: int) -> None:
        if bits <= self.bits and self.width() <= Fraction(1, 1 << bits):
            return
        target = Fraction(1, 1 << bits)
        while self.hi - self.lo > target:
            self.lo, self.hi = polyint.bisect_root(self.poly, self.lo, self.hi)
        self.bits = max(self.bits, bits)

    def interval(self) -> Interval:
        return self.lo, self.hi


class _ComplexRoot:
    """Certified rational rectangle around a nonreal root, via sympy CRootOf."""

    __slots__ = ("handle", "bits", "_rect")

    def __init__(self, handle, bits: int = 16):
        self.handle = handle
        self.bits = 0
        self._rect = None
        self.refine_to(bits)

    def refine_to(self, bits: int) -> None:
        if self._rect is not None and bits <= self.bits:
            return
        eps = sympy.Rational(1, 1 << (bits + 1))
        approx = self.handle.eval_rational(dx=eps, dy=eps)
        re, im = approx.as_real_imag()
        re = Fraction(re.p, re.q)
        im = Fraction(im.p, im.q)
        half = Fraction(1, 1 << (bits + 1))
        self._rect = (re - half, re + half, im - half, im + half)
        self.bits = bits

    def rect(self) -> Rect:
        return self._rect

    def width(self) -> Fraction:
        return rect_width(self._rect)


class Conjugate:
    """One Galois conjugate of beta: a real interval or a complex box."""

    def __init__(self, real: _DyadicRoot | None, cplx: _ComplexRoot | None):
        self._real = real
        self._cplx = cplx
        self._position = None  # real conjugates: where r sits among -1, 0, 1

    @property
    def is_real(self) -> bool:
        return self._real is not None

    def refine(self) -> None:
        if self._real is not None:
            self._real.refine_to(max(self._real.bits * 2, 32))
        else:
            self._cplx.refine_to(max(self._cplx.bits * 2, 32))

    def refine_to(self, bits: int) -> None:
        (self._real or self._cplx).refine_to(bits)

    @property
    def bits(self) -> int:
        return (self._real or self._cplx).bits

    def interval(self) -> Interval:
        if self._real is None:
            raise ValueError("complex conjugate has no real interval")
        return self._real.interval()

    def rect(self) -> Rect:
        if self._real is not None:
            lo, hi = self._real.interval()
            return lo, hi, Fraction(0), Fraction(0)
        return self._cplx.rect()

    def modulus_squared(self) -> Interval:
        return rect_mod_squared(self.rect())


def _parse_rational(tok: str) -> Fraction:
    return Fraction(tok.strip())


def _render_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class FieldElement:
    """An element of Q(beta): rational coefficients of 1, beta, ..., beta^(n-1).

    Values are immutable; equality and hashing use the canonical reduced
    coefficient vector, so elements serve directly as exact dictionary keys.
    """

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: "BetaContext", coeffs):
        self.ctx = ctx
        self.coeffs = tuple(coeffs)
        if len(self.coeffs) != ctx.degree:
            raise ValueError("coefficient vector has wrong length")

    # -- ring structure -------------------------------------------------

    def _lift(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx:
                raise ContextMismatch("operands belong to different contexts")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.from_rational(other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, (a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, (a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return FieldElement(self.ctx, (-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.ctx, (a * other for a in self.coeffs))
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.ctx.reduce(polyint.mul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def mul_by_beta(self) -> "FieldElement":
        return self.ctx.shift_up(self)

    def inverse(self) -> "FieldElement":
        return self.ctx.invert(self)

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.ctx is other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"FieldElement({self.text()!r})"

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def sign(self) -> int:
        return self.ctx.sign(self)

    def floor(self) -> int:
        return self.ctx.floor(self)

    def text(self) -> str:
        """Canonical text form: comma-separated rationals, constant term first."""
        return ",".join(_render_rational(c) for c in self.coeffs)

    def decimal(self, digits: int = 12) -> str:
        return self.ctx.decimal(self, digits)

    def interval(self, bits: int = 64) -> Interval:
        return self.ctx.eval_interval(self, bits)


class BetaContext:
    """The base beta: polynomial, selected root enclosure, conjugate boxes.

    ``poly`` is given highest degree first, e.g. ``[1, -1, -1]`` for the
    polynomial with the Golden Ratio as its root above one.  The largest real
    root greater than one is selected as beta.  Arithmetic is carried out
    modulo the minimal polynomial of beta (for an irreducible input this is
    the input itself).

    The context is immutable apart from a monotone cache of refined
    enclosures; it is safe to share between sequential computations.
    """

    def __init__(self, poly, precision_bits: int = 128):
        coeffs_high_first = [int(c) for c in poly]
        if not coeffs_high_first:
            raise ZeroLeadingCoefficient("empty polynomial")
        if coeffs_high_first[0] == 0:
            raise ZeroLeadingCoefficient("leading coefficient is zero")
        if coeffs_high_first[0] < 0:
            coeffs_high_first = [-c for c in coeffs_high_first]
        if precision_bits < 1:
            raise ValueError("precision_bits must be positive")
        self.input_poly = tuple(coeffs_high_first)
        self.precision_bits = precision_bits

        low = polyint.strip(tuple(reversed(coeffs_high_first)))
        if polyint.degree(low) < 1:
            raise NoRootAboveOne("constant polynomial has no roots")
        if polyint.degree(polyint.gcd_int(low, polyint.derivative(low))) >= 1:
            raise NonSquareFreePolynomial("polynomial has a multiple root")
        self._poly_low = low

        # Factor over the integers; pick the factor owning the largest real
        # root > 1.  That factor is the minimal polynomial of beta.
        x = sympy.Symbol("x")
        expr = sum(c * x**k for k, c in enumerate(low))
        cont, factors = sympy.factor_list(expr)
        self.poly_is_irreducible = (
            len(factors) == 1 and factors[0][1] == 1 and abs(int(cont)) == 1
        )
        factor_polys = []
        for fac, _mult in factors:
            fc = sympy.Poly(fac, x).all_coeffs()  # highest first
            factor_polys.append(polyint.primitive_int(tuple(reversed([int(c) for c in fc]))))

        beta_interval = self._select_beta_interval(low)
        self.min_poly = self._factor_containing(factor_polys, beta_interval)
        self.degree = polyint.degree(self.min_poly)
        self.is_monic = self.input_poly[0] == 1

        # Re-isolate against the minimal polynomial and split off conjugates.
        roots = polyint.isolate_real_roots(self.min_poly)
        beta_idx = self._matching_root(roots, beta_interval)
        self._beta = _DyadicRoot(self.min_poly, *roots[beta_idx])
        while self._beta.lo < 1:
            self._beta.refine_to(max(self._beta.bits * 2, 8))
        self._beta.refine_to(precision_bits)
        self._real_conj_intervals = [iv for i, iv in enumerate(roots) if i != beta_idx]
        self._conjugates = None
        self._verdicts = None
        self._classification = None

    # -- construction helpers --------------------------------------------

    @staticmethod
    def _select_beta_interval(low) -> tuple[Fraction, Fraction]:
        candidates = []
        for lo, hi in polyint.isolate_real_roots(low):
            while lo < 1 < hi:
                lo, hi = polyint.bisect_root(low, lo, hi)
            if lo >= 1:
                if lo == hi and lo == 1:
                    continue
                candidates.append((lo, hi))
        if not candidates:
            raise NoRootAboveOne("polynomial has no real root greater than one")
        return candidates[-1]

    @staticmethod
    def _factor_containing(factor_polys, interval) -> tuple:
        lo, hi = interval
        for fac in factor_polys:
            if lo == hi:
                if polyint.evaluate(fac, lo) == 0:
                    return fac
            elif _sgn(polyint.evaluate(fac, lo)) * _sgn(polyint.evaluate(fac, hi)) < 0:
                return fac
        raise AssertionError("no factor changes sign on the isolating interval")

    @staticmethod
    def _matching_root(roots, interval) -> int:
        lo, hi = interval
        for i, (rlo, rhi) in enumerate(roots):
            if rhi > lo and rlo < hi:
                return i
        raise AssertionError("beta interval does not match a minimal-polynomial root")

    # -- enclosures --------------------------------------------------------

    def beta_interval(self, bits: int | None = None) -> Interval:
        if bits is not None:
            self._beta.refine_to(bits)
        return self._beta.interval()

    def refine_beta(self) -> None:
        self._beta.refine_to(max(self._beta.bits * 2, 32))

    @property
    def conjugates(self) -> tuple[Conjugate, ...]:
        if self._conjugates is None:
            conj = [Conjugate(_DyadicRoot(self.min_poly, lo, hi), None)
                    for lo, hi in self._real_conj_intervals]
            n_real = len(self._real_conj_intervals) + 1
            x = sympy.Symbol("x")
            expr = sum(int(c) * x**k for k, c in enumerate(self.min_poly))
            for i in range(n_real, self.degree):
                conj.append(Conjugate(None, _ComplexRoot(sympy.CRootOf(expr, i))))
            self._separate_boxes(conj)
            self._conjugates = tuple(conj)
        return self._conjugates

    def _separate_boxes(self, conj) -> None:
        # Refine until all enclosures are pairwise disjoint and every complex
        # box is clear of the real axis; refinement never re-assigns roots.
        def disjoint(a: Rect, b: Rect) -> bool:
            return a[1] < b[0] or b[1] < a[0] or a[3] < b[2] or b[3] < a[2]

        while True:
            rects = [c.rect() for c in conj] + [
                (*self._beta.interval(), Fraction(0), Fraction(0))
            ]
            ok = all(
                disjoint(rects[i], rects[j])
                for i in range(len(rects))
                for j in range(i + 1, len(rects))
            )
            ok = ok and all(
                c.is_real or not (c.rect()[2] <= 0 <= c.rect()[3]) for c in conj
            )
            if ok:
                return
            for c in conj:
                c.refine()
            self.refine_beta()

    # -- canonical reduction ----------------------------------------------

    def reduce(self, raw) -> FieldElement:
        """Canonical representative of a rational polynomial in beta."""
        coeffs = [Fraction(c) for c in raw]
        if len(coeffs) >= self.degree + 1:
            coeffs = list(polyint.rem(tuple(coeffs), self.min_poly))
        coeffs += [Fraction(0)] * (self.degree - len(coeffs))
        return FieldElement(self, coeffs)

    def shift_up(self, x: FieldElement) -> FieldElement:
        """Multiply by beta: shift coefficients and fold the overflow back."""
        top = x.coeffs[-1]
        shifted = [Fraction(0)] + list(x.coeffs[:-1])
        if top != 0:
            lead = Fraction(self.min_poly[-1])
            for k in range(self.degree):
                shifted[k] -= top * self.min_poly[k] / lead
        return FieldElement(self, shifted)

    def invert(self, x: FieldElement) -> FieldElement:
        if x.is_zero():
            raise ZeroDivisionError("inverse of zero")
        g, u, _ = polyint.xgcd(x.coeffs, self.min_poly)
        if polyint.degree(g) != 0:
            raise ArithmeticError("element not invertible; modulus not irreducible?")
        return self.reduce(polyint.scale(u, 1 / Fraction(g[0])))

    # -- element constructors ----------------------------------------------

    def zero(self) -> FieldElement:
        return FieldElement(self, (Fraction(0),) * self.degree)

    def one(self) -> FieldElement:
        return self.from_rational(1)

    def beta(self) -> FieldElement:
        return self.reduce((0, 1))

    def from_rational(self, q) -> FieldElement:
        coeffs = [Fraction(q)] + [Fraction(0)] * (self.degree - 1)
        return FieldElement(self, coeffs)

    def parse_element(self, text: str) -> FieldElement:
        parts = [p for p in text.split(",") if p.strip() != ""]
        return self.reduce([_parse_rational(p) for p in parts])

    def pow_beta(self, k: int) -> FieldElement:
        if k < 0:
            return self.invert(self.pow_beta(-k))
        out = self.one()
        for _ in range(k):
            out = out.mul_by_beta()
        return out

    # -- exact sign, floor, evaluation --------------------------------------

    def sign(self, x: FieldElement) -> int:
        """Exact sign of x(beta).  Zero is symbolic; nonzero refines an enclosure."""
        if x.is_zero():
            return 0
        if self.degree == 1:
            # beta is rational: evaluate exactly
            val = x.coeffs[0]
            return _sgn(val)
        den = 1
        for c in x.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        ints = [int(c * den) for c in x.coeffs]
        while True:
            s = self._int_sign(ints, self._beta.lo, self._beta.hi)
            if s is not None:
                return s
            self.refine_beta()

    @staticmethod
    def _int_sign(ints, lo: Fraction, hi: Fraction):
        # Scaled-integer interval Horner; sound for any rational interval.
        a, sa = lo.numerator, lo.denominator
        b, sb = hi.numerator, hi.denominator
        # common denominator for the interval endpoints
        s = sa * sb // math.gcd(sa, sb)
        a *= s // sa
        b *= s // sb
        vlo = vhi = ints[-1]
        scale = 1
        for c in reversed(ints[:-1]):
            p1, p2, p3, p4 = vlo * a, vlo * b, vhi * a, vhi * b
            vlo = min(p1, p2, p3, p4)
            vhi = max(p1, p2, p3, p4)
            scale *= s
            add = c * scale
            vlo += add
            vhi += add
        if vlo > 0:
            return 1
        if vhi < 0:
            return -1
        return None

    def eval_interval(self, x: FieldElement, bits: int = 64) -> Interval:
        """Rational interval containing x(beta), from a bits-refined enclosure."""
        if self.degree == 1:
            v = x.coeffs[0]
            return v, v
        lo, hi = self.beta_interval(bits)
        vlo, vhi = Fraction(x.coeffs[-1]), Fraction(x.coeffs[-1])
        for c in reversed(x.coeffs[:-1]):
            ps = (vlo * lo, vlo * hi, vhi * lo, vhi * hi)
            vlo, vhi = min(ps) + c, max(ps) + c
        return vlo, vhi

    def floor(self, x: FieldElement) -> int:
        if x.is_rational():
            return x.coeffs[0].numerator // x.coeffs[0].denominator
        bits = 32
        while True:
            lo, hi = self.eval_interval(x, bits)
            flo = lo.numerator // lo.denominator
            fhi = hi.numerator // hi.denominator
            if flo == fhi:
                return flo
            bits *= 2

    def ceil_beta(self) -> int:
        """The smallest integer >= beta."""
        b = self.beta()
        if b.is_rational():
            q = b.coeffs[0]
            return -((-q.numerator) // q.denominator)
        return self.floor(b) + 1  # beta irrational here

    # -- rendering -----------------------------------------------------------

    def decimal(self, x: FieldElement, digits: int = 12) -> str:
        bits = max(64, int(digits * 3.4) + 16)
        lo, hi = self.eval_interval(x, bits)
        while not x.is_zero() and (hi - lo) * (10 ** (digits + 2)) > max(abs(lo), abs(hi)):
            bits *= 2
            if bits > PRECISION_CAP_BITS:
                break
            lo, hi = self.eval_interval(x, bits)
        mid = (lo + hi) / 2
        return f"{float(mid):.{digits}g}"

    def __repr__(self):
        return f"BetaContext(poly={list(self.input_poly)})"


@lru_cache(maxsize=None)
def _cached_context(poly: tuple, precision_bits: int) -> BetaContext:
    return BetaContext(poly, precision_bits)


def context(poly, precision_bits: int = 128) -> BetaContext:
    """Shared-context constructor; equal inputs return the same object.

    Sharing matters because FieldElements compare by identity of their
    context, and because refinement caches are monotone.
    """
    return _cached_context(tuple(int(c) for c in poly), precision_bits)


def parse_poly(text: str) -> tuple[int, ...]:
    """Parse the comma-separated integer polynomial format, highest degree first."""
    try:
        return tuple(int(tok.strip()) for tok in text.split(","))
    except ValueError as exc:
        raise InputError(f"bad polynomial text: {text!r}") from exc
