"""Root-based classification of the base and certified embedding bounds.

Modulus verdicts for conjugates are certified: strict comparisons against
one resolve by box refinement, and modulus exactly one is decided
symbolically from the self-inversive part of the minimal polynomial, so the
refinement loop knows in advance how many boxes must straddle the circle.

The within-bounds tests compare |sigma(x)| against d/(|sigma(beta)| -+ 1)
for every embedding sigma.  Real embeddings reduce to exact sign tests in
the field.  Complex embeddings use rational interval arithmetic on squared
moduli, with a resultant-based exact equality certificate for values that
sit precisely on the bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import sympy

from . import polyint
from .errors import InputError, NoRootAboveOne, UnboundedEmbedding
from .field import PRECISION_CAP_BITS, BetaContext, Conjugate, FieldElement
from .intervals import eval_rect, isquare, isub, rect_mod_squared, sqrt_bounds

PISOT = "pisot"
SALEM = "salem"
OTHER_NO_UNIT = "other_no_unit_conjugate"
HAS_UNIT = "has_unit_modulus_conjugate"
NOT_GREATER_ONE = "beta_not_greater_than_one"
REDUCIBLE = "reducible_or_nonintegral"

LESS = "less_than_one"
EQUAL = "equal_one"
GREATER = "greater_than_one"


@dataclass(frozen=True)
class RootClass:
    kind: str
    verdicts: tuple[str, ...]  # one per conjugate, in context order


def conjugate_verdicts(ctx: BetaContext) -> tuple[str, ...]:
    """Modulus verdict for each conjugate of beta, certified."""
    if ctx._verdicts is not None:
        return ctx._verdicts
    conj = ctx.conjugates
    pairs, has_one, has_minus_one = polyint.unit_circle_root_count(ctx.min_poly)
    if has_one or has_minus_one:
        # impossible for an irreducible polynomial of degree >= 2, and a
        # degree-1 minimal polynomial has no conjugates at all
        raise AssertionError("rational point on the unit circle")
    verdicts: list[str | None] = [None] * len(conj)
    undecided = list(range(len(conj)))
    while True:
        still = []
        for i in undecided:
            lo2, hi2 = conj[i].modulus_squared()
            if hi2 < 1:
                verdicts[i] = LESS
            elif lo2 > 1:
                verdicts[i] = GREATER
            else:
                still.append(i)
        undecided = still
        if len(undecided) == 2 * pairs:
            # exactly the circle roots remain astride the unit circle
            for i in undecided:
                verdicts[i] = EQUAL
            break
        for i in undecided:
            conj[i].refine()
    ctx._verdicts = tuple(verdicts)
    return ctx._verdicts


def classify_roots(ctx: BetaContext) -> RootClass:
    """Classify beta from the conjugate moduli (Pisot, Salem, or neither).

    The kinds ``pisot`` and ``salem`` additionally require the input
    polynomial to be monic and irreducible; otherwise the verdicts are
    still reported but the kind is ``reducible_or_nonintegral``.
    """
    if ctx._classification is not None:
        return ctx._classification
    verdicts = conjugate_verdicts(ctx)
    if not (ctx.is_monic and ctx.poly_is_irreducible):
        kind = REDUCIBLE
    elif all(v == LESS for v in verdicts):
        kind = PISOT
    elif all(v != GREATER for v in verdicts) and any(v == EQUAL for v in verdicts):
        kind = SALEM
    elif any(v == EQUAL for v in verdicts):
        kind = HAS_UNIT
    else:
        kind = OTHER_NO_UNIT
    ctx._classification = RootClass(kind, verdicts)
    return ctx._classification


def classify_poly(poly, precision_bits: int = 128) -> RootClass:
    """Classify directly from a polynomial; reports bases not above one."""
    try:
        ctx = BetaContext(poly, precision_bits)
    except NoRootAboveOne:
        return RootClass(NOT_GREATER_ONE, ())
    return classify_roots(ctx)


# ---------------------------------------------------------------------------
# embedding bounds
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EmbeddingBound:
    """Bound on |sigma(x)| for one embedding of Q(beta).

    ``embedding`` is "real" for the defining embedding or the conjugate
    index.  ``kind`` is "element" when the bound is sigma(element) for an
    exact field element, "interval" when only a rational enclosure of the
    bound value exists (complex conjugates), and "unbounded" for
    unit-modulus conjugates.
    """

    embedding: str | int
    kind: str
    element: FieldElement | None
    value: tuple[Fraction, Fraction] | None


def _real_conj_position(ctx: BetaContext, conj: Conjugate) -> str:
    """Locate a real conjugate r among {r>1, 0<r<1, -1<r<0, r<-1}."""
    if conj._position is not None:
        return conj._position
    while True:
        lo, hi = conj.interval()
        if lo > 1:
            pos = "gt1"
        elif hi < -1:
            pos = "ltm1"
        elif lo > 0 and hi < 1:
            pos = "in01"
        elif lo > -1 and hi < 0:
            pos = "inm10"
        else:
            conj.refine()
            continue
        conj._position = pos
        return pos


def _bound_element(ctx: BetaContext, d: int, position: str) -> FieldElement:
    """Field element e with bound = sigma(e) for a real embedding at ``position``.

    For |r| > 1 the bound is d/(|r|-1); for |r| < 1 it is d/(1-|r|).  In each
    case |r|-1 or 1-|r| equals sigma(m) for m among beta-1, 1-beta, 1+beta,
    -1-beta, so the bound is the image of d/m.
    """
    beta = ctx.beta()
    m = {
        "gt1": beta - 1,
        "in01": 1 - beta,
        "inm10": 1 + beta,
        "ltm1": -1 - beta,
    }[position]
    return ctx.invert(m) * d


def _interval_at_conjugate(ctx: BetaContext, e: FieldElement, conj: Conjugate,
                           bits: int = 64):
    conj.refine_to(bits)
    lo, hi = conj.interval()
    vlo, vhi = Fraction(e.coeffs[-1]), Fraction(e.coeffs[-1])
    for c in reversed(e.coeffs[:-1]):
        ps = (vlo * lo, vlo * hi, vhi * lo, vhi * hi)
        vlo, vhi = min(ps) + c, max(ps) + c
    return vlo, vhi


def embedding_bounds(ctx: BetaContext, d: int) -> tuple[EmbeddingBound, ...]:
    if d < 0:
        raise InputError("digit bound must be nonnegative")
    out = [EmbeddingBound("real", "element",
                          el := ctx.invert(ctx.beta() - 1) * d,
                          el.interval(64))]
    verdicts = conjugate_verdicts(ctx)
    for i, conj in enumerate(ctx.conjugates):
        if verdicts[i] == EQUAL:
            out.append(EmbeddingBound(i, "unbounded", None, None))
        elif conj.is_real:
            e = _bound_element(ctx, d, _real_conj_position(ctx, conj))
            out.append(EmbeddingBound(i, "element", e,
                                      _interval_at_conjugate(ctx, e, conj)))
        else:
            conj.refine_to(64)
            m2lo, m2hi = conj.modulus_squared()
            mlo = sqrt_bounds(m2lo)[0]
            mhi = sqrt_bounds(m2hi)[1]
            if verdicts[i] == GREATER:
                value = (Fraction(d) / (mhi - 1), Fraction(d) / (mlo - 1))
            else:
                value = (Fraction(d) / (1 - mlo), Fraction(d) / (1 - mhi))
                value = (min(value), max(value))
            out.append(EmbeddingBound(i, "interval", None, value))
    return tuple(out)


# ---------------------------------------------------------------------------
# within-bounds tests
# ---------------------------------------------------------------------------

def _real_embedding_ok(ctx: BetaContext, x: FieldElement, d: int) -> bool:
    # |x| <= d/(beta-1), closed: both d - x(beta-1) and d + x(beta-1) >= 0
    e = x * (ctx.beta() - 1)
    return (d - e).sign() >= 0 and (d + e).sign() >= 0


def _sign_at_conjugate(ctx: BetaContext, e: FieldElement, conj: Conjugate) -> int:
    if e.is_zero():
        return 0
    bits = max(conj.bits, 32)
    while True:
        lo, hi = _interval_at_conjugate(ctx, e, conj, bits)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        bits *= 2
        conj.refine_to(bits)


def _real_conjugate_ok(ctx: BetaContext, x: FieldElement, d: int,
                       conj: Conjugate) -> bool:
    position = _real_conj_position(ctx, conj)
    beta = ctx.beta()
    m = {
        "gt1": beta - 1,
        "in01": 1 - beta,
        "inm10": 1 + beta,
        "ltm1": -1 - beta,
    }[position]
    # |sigma(x)| * sigma(m) <= d with sigma(m) > 0
    y = x * m
    return (_sign_at_conjugate(ctx, ctx.from_rational(d) - y, conj) >= 0
            and _sign_at_conjugate(ctx, ctx.from_rational(d) + y, conj) >= 0)


def _mod2_at(ctx: BetaContext, e: FieldElement, conj: Conjugate):
    rect = eval_rect(e.coeffs, conj.rect())
    return isquare((rect[0], rect[1])), rect


def _complex_conjugate_ok(ctx: BetaContext, x: FieldElement, d: int,
                          conj: Conjugate, beta_greater: bool) -> bool:
    """Decide |sigma(x)| <= d/(|sigma(beta)| -+ 1) for a complex conjugate.

    Rewritten with y = x*beta as |sigma(x)| - |sigma(y)| <= d when
    |sigma(beta)| < 1, and |sigma(y)| - |sigma(x)| <= d when > 1, which is
    decidable on squared-modulus intervals alone.
    """
    if x.is_zero():
        return True
    if d == 0:
        return False  # x nonzero, bound zero
    y = x.mul_by_beta()
    big, small = (y, x) if beta_greater else (x, y)
    d2 = Fraction(d * d)
    used_exact = False
    while True:
        zbox = conj.rect()
        a1, a2 = rect_mod_squared(eval_rect(big.coeffs, zbox))
        b1, b2 = rect_mod_squared(eval_rect(small.coeffs, zbox))
        # certify sqrt(A) <= d + sqrt(B):
        t = a2 - d2 - b1
        if t <= 0 or t * t <= 4 * d2 * b1:
            return True
        # certify sqrt(A) > d + sqrt(B):
        f = a1 - d2 - b2
        if f > 0 and f * f > 4 * d2 * b2:
            return False
        if not used_exact and conj.bits >= PRECISION_CAP_BITS:
            used_exact = True
            if _on_bound_exactly(ctx, big, small, d, conj):
                return True
            # not exactly on the bound: refinement must eventually decide
        conj.refine()


def _on_bound_exactly(ctx: BetaContext, big: FieldElement, small: FieldElement,
                      d: int, conj: Conjugate) -> bool:
    """Certify |sigma(big)| - |sigma(small)| = d via a resultant annihilator.

    E = (A - B - d^2)^2 - 4 d^2 B with A = |sigma(big)|^2, B = |sigma(small)|^2
    vanishes exactly on the bound.  E is a symmetric polynomial in the
    conjugate pair (z, conj z), both roots of the minimal polynomial F, so
    Res_u(F(u), Res_v(F(v), T - E(u, v))) annihilates E; if zero is not
    among its roots E cannot vanish, and otherwise a lower bound on its
    nonzero roots turns a tight interval around zero into a certificate.
    """
    u, v, t = sympy.symbols("u v t")

    def val(e: FieldElement, var):
        return sum(sympy.Rational(c.numerator, c.denominator) * var**k
                   for k, c in enumerate(e.coeffs))

    a_expr = sympy.expand(val(big, u) * val(big, v))
    b_expr = sympy.expand(val(small, u) * val(small, v))
    e_expr = sympy.expand((a_expr - b_expr - d * d) ** 2 - 4 * d * d * b_expr)
    f_expr = sum(int(c) * u**k for k, c in enumerate(ctx.min_poly))
    f_expr_v = sum(int(c) * v**k for k, c in enumerate(ctx.min_poly))
    inner = sympy.resultant(f_expr_v, t - e_expr, v)
    ann = sympy.Poly(sympy.resultant(f_expr, inner, u), t)
    coeffs = polyint.primitive_int(tuple(reversed([int(c) for c in
                                                   ann.all_coeffs()])))
    k = 0
    while k < len(coeffs) and coeffs[k] == 0:
        k += 1
    if k == 0:
        return False  # zero is not a root of the annihilator, so E != 0
    tail = coeffs[k:]
    eps = Fraction(abs(tail[0]), abs(tail[0]) + max(abs(c) for c in tail))

    d2 = Fraction(d * d)
    while True:
        zbox = conj.rect()
        a1, a2 = rect_mod_squared(eval_rect(big.coeffs, zbox))
        b1, b2 = rect_mod_squared(eval_rect(small.coeffs, zbox))
        tlo, thi = isub((a1, a2), (b1 + d2, b2 + d2))
        sq = isquare((tlo, thi))
        elo, ehi = isub(sq, (4 * d2 * b1, 4 * d2 * b2))
        if elo > 0 or ehi < 0:
            return False
        if -eps < elo and ehi < eps:
            return True
        conj.refine()


def test_within_bounds(ctx: BetaContext, x: FieldElement, d: int,
                       which: str = "real_only") -> bool:
    """Closed-inequality membership test |sigma(x)| <= bound(sigma).

    ``which`` is "real_only" (the defining embedding) or "all_embeddings".
    Raises :class:`UnboundedEmbedding` if all embeddings are requested and a
    unit-modulus conjugate exists.
    """
    if d < 0:
        raise InputError("digit bound must be nonnegative")
    if which not in ("real_only", "all_embeddings"):
        raise InputError(f"unknown embedding selector: {which!r}")
    if not _real_embedding_ok(ctx, x, d):
        return False
    if which == "real_only":
        return True
    verdicts = conjugate_verdicts(ctx)
    if any(v == EQUAL for v in verdicts):
        raise UnboundedEmbedding("a conjugate of modulus one has no finite bound")
    return _bounded_embeddings_ok(ctx, x, d, verdicts)


def _bounded_embeddings_ok(ctx: BetaContext, x: FieldElement, d: int,
                           verdicts) -> bool:
    """All-embedding test skipping unit-modulus conjugates (used for the
    finite-word automaton, where those embeddings impose no constraint)."""
    for verdict, conj in zip(verdicts, ctx.conjugates):
        if verdict == EQUAL:
            continue
        if conj.is_real:
            if not _real_conjugate_ok(ctx, x, d, conj):
                return False
        else:
            if not _complex_conjugate_ok(ctx, x, d, conj,
                                         beta_greater=(verdict == GREATER)):
                return False
    return True


def within_finite_word_bounds(ctx: BetaContext, x: FieldElement, d: int) -> bool:
    """Bounds for the finite-representation exploration: every embedding of
    modulus != 1 constrains, unit-modulus embeddings are unconstrained."""
    if not _real_embedding_ok(ctx, x, d):
        return False
    return _bounded_embeddings_ok(ctx, x, d, conjugate_verdicts(ctx))
