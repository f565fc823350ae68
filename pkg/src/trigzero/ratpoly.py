"""Exact univariate polynomial arithmetic for certified root counting.

Polynomials are coefficient lists in ascending order.  The heavy routines
(gcd, Sturm chains) run over the integers with primitive-part reduction so
that coefficient growth stays polynomial; rational inputs are cleared to a
scaled integer polynomial first (scaling by a positive rational moves no
roots and flips no signs).  The zero polynomial is the empty list.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

IntPoly = list[int]
FracPoly = list[Fraction]


def trim(p: Sequence) -> list:
    """Drop trailing (highest-degree) zero coefficients."""
    out = list(p)
    while out and out[-1] == 0:
        out.pop()
    return out


def degree(p: Sequence) -> int:
    """Degree of a trimmed polynomial; -1 for the zero polynomial."""
    return len(trim(p)) - 1


def evaluate(p: Sequence, x):
    """Horner evaluation; exact for int/Fraction inputs."""
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p: Sequence) -> list:
    return [k * c for k, c in enumerate(p)][1:]


def int_poly_from_fractions(p: Sequence[Fraction]) -> IntPoly:
    """Clear denominators: returns d*p with d = lcm of denominators > 0."""
    p = [Fraction(c) for c in trim(p)]
    if not p:
        return []
    d = math.lcm(*(c.denominator for c in p))
    return [int(c * d) for c in p]


def content(p: IntPoly) -> int:
    """Positive gcd of the coefficients; 0 for the zero polynomial."""
    g = 0
    for c in p:
        g = math.gcd(g, c)
        if g == 1:
            break
    return g


def primitive(p: IntPoly) -> IntPoly:
    """Divide out the (positive) content; preserves signs."""
    p = trim(p)
    g = content(p)
    if g <= 1:
        return p
    return [c // g for c in p]


def pseudo_rem(f: IntPoly, g: IntPoly) -> IntPoly:
    """prem(f, g) = rem(lc(g)^(deg f - deg g + 1) * f, g), all-integer."""
    f = trim(f)
    g = trim(g)
    if not g:
        raise ZeroDivisionError("pseudo-remainder by zero polynomial")
    dg = len(g) - 1
    lc = g[-1]
    r = list(f)
    steps = len(f) - len(g) + 1
    while r and len(r) - 1 >= dg:
        lead = r.pop()
        r = [c * lc for c in r]
        shift = len(r) - dg
        for i in range(dg):
            r[shift + i] -= lead * g[i]
        r = trim(r)
        steps -= 1
    if steps > 0:
        m = lc**steps
        r = [c * m for c in r]
    return r


def div_exact(f: Sequence, g: Sequence) -> FracPoly:
    """Quotient f/g over Q; raises if the division is not exact."""
    f = [Fraction(c) for c in trim(f)]
    g = [Fraction(c) for c in trim(g)]
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    if not f:
        return []
    if len(f) < len(g):
        raise ArithmeticError("inexact polynomial division")
    q = [Fraction(0)] * (len(f) - len(g) + 1)
    r = f
    lc = g[-1]
    while len(r) >= len(g):
        k = len(r) - len(g)
        coef = r[-1] / lc
        q[k] = coef
        for i in range(len(g)):
            r[k + i] -= coef * g[i]
        r = trim(r)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def poly_gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient (primitive PRS)."""
    f = primitive(f)
    g = primitive(g)
    while g:
        f, g = g, primitive(pseudo_rem(f, g))
    if f and f[-1] < 0:
        f = [-c for c in f]
    return f


def square_free_decomposition(p: Sequence) -> list[tuple[IntPoly, int]]:
    """Yun's algorithm: pairwise-coprime square-free factors with multiplicity.

    The product of factor^multiplicity equals p up to a positive rational
    constant.  Constant polynomials decompose to an empty list.
    """
    f = [Fraction(c) for c in trim(p)]
    if degree(f) < 1:
        return []

    def fgcd(u: FracPoly, v: FracPoly) -> FracPoly:
        if not trim(v):
            w = trim(u)
        elif not trim(u):
            w = trim(v)
        else:
            w = [Fraction(c) for c in poly_gcd(int_poly_from_fractions(u), int_poly_from_fractions(v))]
        if not w:
            return []
        lc = w[-1]
        return [c / lc for c in w]  # monic, so Yun's field identities hold

    df = derivative(f)
    g = fgcd(f, df)
    if degree(g) < 1:
        return [(primitive(int_poly_from_fractions(f)), 1)]
    c = div_exact(f, g)
    d = [x - y for x, y in _pad(div_exact(df, g), derivative(c))]
    out: list[tuple[IntPoly, int]] = []
    i = 1
    while degree(c) >= 1:
        a = fgcd(c, d)
        if degree(a) >= 1:
            out.append((primitive(int_poly_from_fractions(a)), i))
        c = div_exact(c, a) if degree(a) >= 1 else c
        d = [x - y for x, y in _pad(div_exact(d, a) if degree(a) >= 1 else d, derivative(c))]
        d = trim(d)
        i += 1
    return out


def _pad(u: Sequence, v: Sequence) -> list[tuple]:
    n = max(len(u), len(v))
    uu = list(u) + [0] * (n - len(u))
    vv = list(v) + [0] * (n - len(v))
    return list(zip(uu, vv))


def sturm_chain(p: IntPoly) -> list[IntPoly]:
    """Sturm chain of p via sign-corrected pseudo-remainders.

    Each element equals the classical Sturm sequence entry times a positive
    rational, so sign variations at any point are identical.
    """
    chain = [primitive(p), primitive(derivative(p))]
    if not chain[1]:
        return chain[:1]
    while True:
        f, g = chain[-2], chain[-1]
        r = pseudo_rem(f, g)
        if not trim(r):
            break
        # rem(f, g) = prem / lc(g)^e with e = deg f - deg g + 1; keep the
        # sign of -rem by flipping when that power is negative
        e = (len(trim(f)) - 1) - (len(trim(g)) - 1) + 1
        flip = -1 if (g[-1] < 0 and e % 2 == 1) else 1
        chain.append(primitive([-flip * c for c in r]))
    return chain


def _variations(values: Sequence) -> int:
    """Strict sign alternations, zeros skipped."""
    signs = [(v > 0) - (v < 0) for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count_open(p: IntPoly, lo, hi) -> int:
    """Distinct real roots of square-free p in the open interval (lo, hi).

    Requires p(lo) != 0 and p(hi) != 0, in which case the classical count
    over (lo, hi] equals the open-interval count.
    """
    p = trim(p)
    if degree(p) < 1:
        return 0
    if evaluate(p, lo) == 0 or evaluate(p, hi) == 0:
        raise ValueError("Sturm endpoints must not be roots")
    chain = sturm_chain(p)
    v_lo = _variations([evaluate(q, lo) for q in chain])
    v_hi = _variations([evaluate(q, hi) for q in chain])
    return v_lo - v_hi


def multiplicity_at(p: IntPoly, x0: int) -> tuple[int, IntPoly]:
    """Order of vanishing at an integer point, plus the deflated polynomial."""
    p = trim(p)
    m = 0
    while p and evaluate(p, x0) == 0:
        # synthetic division by (t - x0); exact because x0 is a root
        q = [0] * (len(p) - 1)
        acc = 0
        for k in range(len(p) - 1, 0, -1):
            acc = acc * x0 + p[k]
            q[k - 1] = acc
        p = trim(q)
        m += 1
    return m, p


def roots_in_closed_unit_interval(p: Sequence) -> tuple[int, int, int]:
    """Total root multiplicities of p in (-1, 1), at t=1, and at t=-1.

    Accepts rational coefficients; p must not be identically zero.
    """
    q = int_poly_from_fractions([Fraction(c) for c in p])
    if not q:
        raise ValueError("zero polynomial has no well-defined root count")
    m_plus, q = multiplicity_at(q, 1)
    m_minus, q = multiplicity_at(q, -1)
    m_open = 0
    if degree(q) >= 1:
        for factor, mult in square_free_decomposition(q):
            m_open += mult * sturm_count_open(factor, -1, 1)
    return m_open, m_plus, m_minus
