"""Dense univariate polynomial helpers over exact rationals.

Coefficient sequences are tuples indexed by power (constant term first).
Everything here is exact: Sturm chains, real-root counting and isolation
by dyadic bisection, and the unit-circle root count used to certify
modulus-one conjugates.
"""

from __future__ import annotations

import math
from fractions import Fraction

Coeffs = tuple


def strip(cs) -> tuple:
    """Drop high-degree zero coefficients."""
    n = len(cs)
    while n > 0 and cs[n - 1] == 0:
        n -= 1
    return tuple(cs[:n])


def degree(cs) -> int:
    cs = strip(cs)
    return len(cs) - 1 if cs else -1


def is_zero(cs) -> bool:
    return all(c == 0 for c in cs)


def evaluate(cs, x):
    acc = 0
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def derivative(cs) -> tuple:
    return tuple(k * cs[k] for k in range(1, len(cs)))


def add(p, q) -> tuple:
    n = max(len(p), len(q))
    return strip(tuple(
        (p[k] if k < len(p) else 0) + (q[k] if k < len(q) else 0)
        for k in range(n)))


def neg(p) -> tuple:
    return tuple(-c for c in p)


def sub(p, q) -> tuple:
    return add(p, neg(q))


def mul(p, q) -> tuple:
    if is_zero(p) or is_zero(q):
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return strip(tuple(out))


def scale(p, c) -> tuple:
    if c == 0:
        return ()
    return tuple(a * c for a in p)


def divmod_exact(num, den) -> tuple[tuple, tuple]:
    """Quotient and remainder in Q[X]; ``den`` must be nonzero."""
    num = [Fraction(c) for c in strip(num)]
    den = strip(den)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    dd = len(den) - 1
    lead = Fraction(den[-1])
    quot = [Fraction(0)] * max(len(num) - dd, 0)
    while len(num) - 1 >= dd and any(num):
        while num and num[-1] == 0:
            num.pop()
        if len(num) - 1 < dd:
            break
        shift = len(num) - 1 - dd
        factor = num[-1] / lead
        quot[shift] = factor
        for k in range(dd + 1):
            num[shift + k] -= factor * den[k]
        num.pop()
    return strip(tuple(quot)), strip(tuple(num))


def rem(num, den) -> tuple:
    return divmod_exact(num, den)[1]


def xgcd(p, q) -> tuple[tuple, tuple, tuple]:
    """Extended gcd in Q[X]: returns (g, u, v) with u*p + v*q = g."""
    r0, r1 = strip(p), strip(q)
    u0, u1 = (Fraction(1),), ()
    v0, v1 = (), (Fraction(1),)
    while not is_zero(r1):
        quot, r = divmod_exact(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, sub(u0, mul(quot, u1))
        v0, v1 = v1, sub(v0, mul(quot, v1))
    return r0, u0, v0


def content(cs) -> int:
    g = 0
    for c in cs:
        g = math.gcd(g, abs(int(c)))
    return g


def primitive_int(cs) -> tuple:
    """Primitive integer form with positive leading coefficient.

    Accepts rational coefficients; clears denominators first.
    """
    cs = strip(cs)
    if not cs:
        return ()
    den = 1
    for c in cs:
        den = den * Fraction(c).denominator // math.gcd(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in cs]
    g = content(ints)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return tuple(ints)


def gcd_int(p, q) -> tuple:
    """Primitive gcd of two integer polynomials, positive leading coefficient."""
    a, b = strip(p), strip(q)
    if is_zero(a):
        return primitive_int(b)
    if is_zero(b):
        return primitive_int(a)
    while not is_zero(b):
        a, b = b, rem(a, b)
    return primitive_int(a)


def reciprocal(cs) -> tuple:
    """X^deg * p(1/X), i.e. the coefficient sequence reversed."""
    return strip(tuple(reversed(strip(cs))))


def root_bound(cs) -> int:
    """Integer M with every real root of p strictly inside (-M, M)."""
    cs = strip(cs)
    if len(cs) <= 1:
        return 1
    lead = abs(Fraction(cs[-1]))
    m = max(abs(Fraction(c)) / lead for c in cs[:-1])
    return int(m) + 2


def sturm_chain(cs) -> list[tuple]:
    chain = [strip(tuple(Fraction(c) for c in cs))]
    d = derivative(chain[0])
    if not is_zero(d):
        chain.append(strip(d))
        while degree(chain[-1]) > 0:
            r = neg(rem(chain[-2], chain[-1]))
            if is_zero(r):
                break
            chain.append(r)
    return chain


def _variations(signs) -> int:
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def variations_at(chain, x) -> int:
    return _variations([_sgn(evaluate(p, x)) for p in chain])


def _sgn(v) -> int:
    return (v > 0) - (v < 0)


def count_roots_halfopen(chain, a, b) -> int:
    """Number of distinct real roots in (a, b]."""
    return variations_at(chain, a) - variations_at(chain, b)


def count_real_roots(cs, a=None, b=None) -> int:
    chain = sturm_chain(cs)
    if a is None or b is None:
        m = root_bound(cs)
        a = -m if a is None else a
        b = m if b is None else b
    return count_roots_halfopen(chain, Fraction(a), Fraction(b))


def _safe_split(cs, lo, hi):
    """A dyadic point strictly inside (lo, hi) that is not a root of p."""
    mid = (lo + hi) / 2
    step = (hi - lo) / 4
    while evaluate(cs, mid) == 0:
        mid += step
        step /= 2
    return mid


def isolate_real_roots(cs) -> list[tuple[Fraction, Fraction]]:
    """Disjoint dyadic intervals (lo, hi), each containing exactly one real root.

    Endpoints are never roots.  Intervals are returned in increasing order.
    The input should be square-free for downstream sign-based refinement.
    """
    cs = strip(tuple(Fraction(c) for c in cs))
    if degree(cs) < 1:
        return []
    chain = sturm_chain(cs)
    m = Fraction(root_bound(cs))
    out = []
    stack = [(-m, m, count_roots_halfopen(chain, -m, m))]
    while stack:
        lo, hi, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append((lo, hi))
            continue
        mid = _safe_split(cs, lo, hi)
        left = count_roots_halfopen(chain, lo, mid)
        stack.append((mid, hi, n - left))
        stack.append((lo, mid, left))
    out.sort(key=lambda iv: iv[0])
    return out


def bisect_root(cs, lo, hi) -> tuple[Fraction, Fraction]:
    """Halve an isolating interval around a simple root (sign change kept).

    If the midpoint happens to be the root exactly, the degenerate
    interval [mid, mid] is returned.
    """
    if lo == hi:
        return lo, hi
    slo = _sgn(evaluate(cs, lo))
    mid = (lo + hi) / 2
    smid = _sgn(evaluate(cs, mid))
    if smid == 0:
        return mid, mid
    if slo * smid < 0:
        return lo, mid
    return mid, hi


def unit_circle_root_count(cs) -> tuple[int, bool, bool]:
    """Count the roots of modulus exactly one of a square-free integer polynomial.

    Returns (pairs, has_root_at_1, has_root_at_-1) where ``pairs`` is the
    number of conjugate pairs strictly on the unit circle.  Method: modulus-one
    roots of p are roots of g = gcd(p, reciprocal(p)); g is self-inversive, so
    after removing the roots +-1 it is an even-degree palindrome and the
    substitution y = X + 1/X turns circle pairs into the real roots of a half-
    degree polynomial inside (-2, 2), counted by a Sturm chain.
    """
    cs = strip(tuple(int(c) for c in cs))
    while cs and cs[0] == 0:          # roots at 0 have modulus 0
        cs = cs[1:]
    cs = strip(cs)
    if degree(cs) < 1:
        return 0, False, False
    g = gcd_int(cs, reciprocal(cs))
    has_one = evaluate(g, 1) == 0
    has_minus_one = evaluate(g, -1) == 0
    for r in (1, -1):
        while evaluate(g, r) == 0:
            g = primitive_int(divmod_exact(g, (-r, 1))[0])
    if degree(g) < 1:
        return 0, has_one, has_minus_one
    n = degree(g)
    if n % 2 != 0 or g != reciprocal(g):
        raise AssertionError("self-inversive reduction failed")
    m = n // 2
    # g(X)/X^m = c_m + sum_{k>=1} c_{m+k} (X^k + X^-k); X^k + X^-k = P_k(y)
    p_prev, p_cur = (2,), (0, 1)
    h = (g[m],)
    for k in range(1, m + 1):
        h = add(h, scale(p_cur, g[m + k]))
        p_prev, p_cur = p_cur, sub(mul((0, 1), p_cur), p_prev)
    chain = sturm_chain(h)
    pairs = count_roots_halfopen(chain, Fraction(-2), Fraction(2))
    return pairs, has_one, has_minus_one
