"""Certified interval and rectangle arithmetic with rational endpoints."""

from __future__ import annotations

import math
from fractions import Fraction

Interval = tuple[Fraction, Fraction]
Rect = tuple[Fraction, Fraction, Fraction, Fraction]  # re_lo, re_hi, im_lo, im_hi


def imul(a: Interval, b: Interval) -> Interval:
    ps = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return min(ps), max(ps)


def iadd(a: Interval, b: Interval) -> Interval:
    return a[0] + b[0], a[1] + b[1]


def isub(a: Interval, b: Interval) -> Interval:
    return a[0] - b[1], a[1] - b[0]


def iscale(a: Interval, c) -> Interval:
    if c >= 0:
        return a[0] * c, a[1] * c
    return a[1] * c, a[0] * c


def isquare(a: Interval) -> Interval:
    lo, hi = a
    hi2 = max(lo * lo, hi * hi)
    lo2 = Fraction(0) if lo <= 0 <= hi else min(lo * lo, hi * hi)
    return lo2, hi2


def rect_add(a: Rect, b: Rect) -> Rect:
    return a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]


def rect_add_real(a: Rect, c) -> Rect:
    return a[0] + c, a[1] + c, a[2], a[3]


def rect_scale(a: Rect, c) -> Rect:
    re = iscale((a[0], a[1]), c)
    im = iscale((a[2], a[3]), c)
    return re[0], re[1], im[0], im[1]


def rect_mul(a: Rect, b: Rect) -> Rect:
    are, aim = (a[0], a[1]), (a[2], a[3])
    bre, bim = (b[0], b[1]), (b[2], b[3])
    re = isub(imul(are, bre), imul(aim, bim))
    im = iadd(imul(are, bim), imul(aim, bre))
    return re[0], re[1], im[0], im[1]


def rect_mod_squared(a: Rect) -> Interval:
    """Range of |z|^2 over the rectangle."""
    re2 = isquare((a[0], a[1]))
    im2 = isquare((a[2], a[3]))
    return iadd(re2, im2)


def rect_width(a: Rect) -> Fraction:
    return max(a[1] - a[0], a[3] - a[2])


def eval_rect(coeffs, z: Rect) -> Rect:
    """Horner evaluation of a real-coefficient polynomial over a rectangle."""
    acc: Rect = (Fraction(0), Fraction(0), Fraction(0), Fraction(0))
    for c in reversed(coeffs):
        acc = rect_add_real(rect_mul(acc, z), Fraction(c))
    return acc


def sqrt_bounds(x: Fraction, bits: int = 64) -> Interval:
    """Rational enclosure of sqrt(x) for x >= 0, accurate to about 2^-bits."""
    if x < 0:
        raise ValueError("negative argument")
    if x == 0:
        return Fraction(0), Fraction(0)
    scale2 = 1 << (2 * bits)
    n = x.numerator * scale2
    d = x.denominator
    lo_num = math.isqrt(n // d)
    lo = Fraction(lo_num, 1 << bits)
    hi = Fraction(lo_num + 1, 1 << bits)
    return lo, hi
