"""Trigonometric polynomials, evaluation, and algebraic-form conversions.

Three kinds are supported.  With ``a = (a_0, ..., a_K)``:

* cosine:    sum of a_k cos(kx)
* sine:      sum of a_k sin(kx)   (the k=0 term is identically zero)
* mixed(X):  sum of a_k cos(kx) + X * sum of a_k sin(kx), X finite;
             X = infinity is defined to mean the sine kind.

The substitution t = cos x turns the cosine kind into an ordinary
polynomial (Chebyshev T basis) and factors the sine kind as sin(x)*Q(cos x)
(Chebyshev U basis); both conversions are exact over the rationals.  The
circle lifts embed a period of the polynomial onto |z| = 1 so that roots
can be extracted with a companion-matrix solver.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

import numpy as np

from .coeffs import CoeffVector

COSINE = "cosine"
SINE = "sine"
MIXED = "mixed"

MONOMIAL_T = "monomial-t"
CHEBYSHEV_T = "chebyshev-t"
MONOMIAL_Z = "monomial-z"
_BASES = (MONOMIAL_T, CHEBYSHEV_T, MONOMIAL_Z)


@dataclass(frozen=True)
class AlgebraicPoly:
    """Coefficients in ascending monomial order with a basis tag.

    ``normalized`` records whether trailing zero coefficients were stripped;
    lifts keep the full declared length 2K+1 because the declared degree
    carries meaning there.
    """

    coeffs: tuple
    basis: str
    normalized: bool = True

    def __post_init__(self) -> None:
        if self.basis not in _BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        if self.normalized and self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("normalized polynomial has a trailing zero coefficient")

    @property
    def degree(self) -> int:
        """Effective degree ignoring trailing zeros; -1 when identically zero."""
        d = len(self.coeffs) - 1
        while d >= 0 and self.coeffs[d] == 0:
            d -= 1
        return d

    @property
    def is_zero(self) -> bool:
        return self.degree < 0

    def __call__(self, z):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def trimmed(self) -> "AlgebraicPoly":
        d = self.degree
        return AlgebraicPoly(self.coeffs[: d + 1], self.basis, normalized=True)


@dataclass(frozen=True)
class TrigPoly:
    """A coefficient vector tagged with its trigonometric kind."""

    a: CoeffVector
    kind: str
    X: Union[float, None] = None

    def __post_init__(self) -> None:
        if self.kind not in (COSINE, SINE, MIXED):
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.kind == MIXED:
            if self.X is None or not math.isfinite(self.X):
                raise ValueError("mixed kind needs a finite X (X=inf is the sine kind)")
        elif self.X is not None:
            raise ValueError(f"{self.kind} kind takes no X")

    @staticmethod
    def cosine(a) -> "TrigPoly":
        return TrigPoly(_as_vector(a), COSINE)

    @staticmethod
    def sine(a) -> "TrigPoly":
        return TrigPoly(_as_vector(a), SINE)

    @staticmethod
    def mixed(a, X) -> "TrigPoly":
        """Phase-mixed polynomial; X = +/-inf collapses to the sine kind."""
        if math.isinf(X):
            return TrigPoly(_as_vector(a), SINE)
        return TrigPoly(_as_vector(a), MIXED, float(X))

    @property
    def is_zero(self) -> bool:
        """Whether the function (not just the vector) is identically zero."""
        if self.kind == SINE:
            return all(c == 0 for c in self.a.coeffs[1:])
        return self.a.is_zero

    @property
    def trig_degree(self) -> int:
        """Largest frequency with a nonzero coefficient; -1 if none."""
        start = 1 if self.kind == SINE else 0
        for k in range(self.a.K, start - 1, -1):
            if self.a[k] != 0:
                return k
        return -1

    @property
    def scale(self) -> float:
        """sum |a_k| (times 1+|X| for mixed); a bound on |p| used for tolerances."""
        s = self.a.abs_sum()
        if self.kind == MIXED:
            s *= 1.0 + abs(self.X)
        return s


def _as_vector(a) -> CoeffVector:
    return a if isinstance(a, CoeffVector) else CoeffVector(a)


# cos(k * q*pi/2) and sin(k * q*pi/2) as functions of k mod 4, for the exact
# quarter-period table x in {0, pi/2, pi, 3pi/2}
_COS_QUARTER = {
    0: (1, 1, 1, 1),
    1: (1, 0, -1, 0),
    2: (1, -1, 1, -1),
    3: (1, 0, -1, 0),
}
_SIN_QUARTER = {
    0: (0, 0, 0, 0),
    1: (0, 1, 0, -1),
    2: (0, 0, 0, 0),
    3: (0, -1, 0, 1),
}
_QUARTER_OF_X = {0.0: 0, math.pi / 2: 1, math.pi: 2, 3 * math.pi / 2: 3}


def evaluate_at_quarter(p: TrigPoly, quarter: int):
    """Exact value at x = quarter * pi/2 (quarter in 0..3) for exact inputs."""
    q = quarter % 4
    cos_t, sin_t = _COS_QUARTER[q], _SIN_QUARTER[q]
    coeffs = p.a.exact() if p.a.is_exact else p.a.floats()
    if p.kind == COSINE:
        return sum(c * cos_t[k % 4] for k, c in enumerate(coeffs))
    if p.kind == SINE:
        return sum(c * sin_t[k % 4] for k, c in enumerate(coeffs))
    cos_part = sum(c * cos_t[k % 4] for k, c in enumerate(coeffs))
    sin_part = sum(c * sin_t[k % 4] for k, c in enumerate(coeffs))
    return cos_part + p.X * sin_part


def evaluate(p: TrigPoly, x):
    """Value of the polynomial at x.

    For exact coefficients and x one of {0, pi/2, pi, 3pi/2} the result is
    exact (a Fraction/int); otherwise a float via the Clenshaw recurrence,
    whose error is O(K ulp) relative to sum |a_k|.
    """
    if isinstance(x, (int, Fraction)) and x == 0:
        x = 0.0
    if isinstance(x, float) and x in _QUARTER_OF_X and p.a.is_exact and (p.kind != MIXED):
        return evaluate_at_quarter(p, _QUARTER_OF_X[x])
    coeffs = p.a.floats()
    if p.kind == COSINE:
        return _clenshaw_cos(coeffs, float(x))
    if p.kind == SINE:
        return _clenshaw_sin(coeffs, float(x))
    return _clenshaw_cos(coeffs, float(x)) + p.X * _clenshaw_sin(coeffs, float(x))


def _clenshaw_cos(coeffs, x: float) -> float:
    c = math.cos(x)
    u = 2.0 * c
    b1 = b2 = 0.0
    for k in range(len(coeffs) - 1, 0, -1):
        b1, b2 = coeffs[k] + u * b1 - b2, b1
    return coeffs[0] + c * b1 - b2


def _clenshaw_sin(coeffs, x: float) -> float:
    u = 2.0 * math.cos(x)
    b1 = b2 = 0.0
    for k in range(len(coeffs) - 1, 0, -1):
        b1, b2 = coeffs[k] + u * b1 - b2, b1
    return math.sin(x) * b1


def evaluate_many(p: TrigPoly, xs) -> np.ndarray:
    """Vectorized float evaluation on an array of points."""
    xs = np.asarray(xs, dtype=float)
    coeffs = p.a.floats()
    if p.kind == COSINE:
        return _clenshaw_cos_vec(coeffs, xs)
    if p.kind == SINE:
        return _clenshaw_sin_vec(coeffs, xs)
    return _clenshaw_cos_vec(coeffs, xs) + p.X * _clenshaw_sin_vec(coeffs, xs)


def _clenshaw_cos_vec(coeffs, xs: np.ndarray) -> np.ndarray:
    c = np.cos(xs)
    u = 2.0 * c
    b1 = np.zeros_like(xs)
    b2 = np.zeros_like(xs)
    for k in range(len(coeffs) - 1, 0, -1):
        b1, b2 = coeffs[k] + u * b1 - b2, b1
    return coeffs[0] + c * b1 - b2


def _clenshaw_sin_vec(coeffs, xs: np.ndarray) -> np.ndarray:
    u = 2.0 * np.cos(xs)
    b1 = np.zeros_like(xs)
    b2 = np.zeros_like(xs)
    for k in range(len(coeffs) - 1, 0, -1):
        b1, b2 = coeffs[k] + u * b1 - b2, b1
    return np.sin(xs) * b1


_T_TABLE: list[tuple[int, ...]] = [(1,), (0, 1)]
_U_TABLE: list[tuple[int, ...]] = [(1,), (0, 2)]


def _cheb(table: list[tuple[int, ...]], k: int) -> tuple[int, ...]:
    while len(table) <= k:
        prev, cur = table[-2], table[-1]
        nxt = [0] + [2 * c for c in cur]
        for i, c in enumerate(prev):
            nxt[i] -= c
        table.append(tuple(nxt))
    return table[k]


def to_chebyshev(a: CoeffVector) -> AlgebraicPoly:
    """Monomial coefficients of P(t) = sum a_k T_k(t), so P(cos x) = C_a(x).

    Exact: the dyadic lift is used for float entries.
    """
    fracs = a.exact()
    out = [Fraction(0)] * (a.K + 1)
    for k, c in enumerate(fracs):
        if c == 0:
            continue
        for i, t in enumerate(_cheb(_T_TABLE, k)):
            if t:
                out[i] += c * t
    return AlgebraicPoly(_trim_fracs(out), MONOMIAL_T)


def sine_factor(a: CoeffVector) -> AlgebraicPoly:
    """Monomial coefficients of Q with S_a(x) = sin(x) * Q(cos x).

    Q(t) = sum_{k>=1} a_k U_{k-1}(t); exact over the dyadic lift.
    """
    fracs = a.exact()
    out = [Fraction(0)] * max(a.K, 1)
    for k in range(1, a.K + 1):
        c = fracs[k]
        if c == 0:
            continue
        for i, u in enumerate(_cheb(_U_TABLE, k - 1)):
            if u:
                out[i] += c * u
    return AlgebraicPoly(_trim_fracs(out), MONOMIAL_T)


def _trim_fracs(out: list[Fraction]) -> tuple:
    while out and out[-1] == 0:
        out.pop()
    return tuple(int(c) if c.denominator == 1 else c for c in out)


def lift_self_reciprocal(a: CoeffVector) -> AlgebraicPoly:
    """Self-reciprocal lift q(z) = sum a_k (z^(K+k) + z^(K-k)), degree <= 2K.

    q(e^{ix}) = 2 e^{iKx} C_a(x), so the unit-circle zeros of q, with
    multiplicity, are exactly the period-zeros of C_a.  Coincides with
    lift_phase(a, 0).  The declared degree 2K is kept (no trimming).
    """
    K = a.K
    out = [0] * (2 * K + 1)
    out[K] = 2 * a[0]
    for k in range(1, K + 1):
        c = a[k]
        out[K + k] += c
        out[K - k] += c
    return AlgebraicPoly(tuple(out), MONOMIAL_Z, normalized=False)


def lift_sine(a: CoeffVector) -> AlgebraicPoly:
    """Sine analogue: q(z) = sum a_k (z^(K+k) - z^(K-k)).

    q(e^{ix}) = 2i e^{iKx} S_a(x); circle zeros match the period-zeros
    of the sine polynomial.
    """
    K = a.K
    out = [0] * (2 * K + 1)
    for k in range(1, K + 1):
        c = a[k]
        out[K + k] += c
        out[K - k] -= c
    return AlgebraicPoly(tuple(out), MONOMIAL_Z, normalized=False)


def lift_phase(a: CoeffVector, X: float) -> AlgebraicPoly:
    """Conjugate-reciprocal lift r(z) = sum a_k ((1-iX) z^(K+k) + (1+iX) z^(K-k)).

    Satisfies r(e^{ix}) = 2 e^{iKx} F_{X,a}(x) because
    cos kx + X sin kx = ((1-iX) z^k + (1+iX) z^{-k}) / 2 on z = e^{ix};
    circle zeros match the period-zeros of the phase-mixed polynomial.
    """
    if not math.isfinite(X):
        raise ValueError("lift_phase needs finite X; use lift_sine for X=inf")
    K = a.K
    w_up = complex(1.0, -X)
    w_dn = complex(1.0, X)
    out = [0j] * (2 * K + 1)
    out[K] = complex(2.0 * float(a[0]), 0.0)
    for k in range(1, K + 1):
        c = float(a[k])
        out[K + k] += c * w_up
        out[K - k] += c * w_dn
    return AlgebraicPoly(tuple(out), MONOMIAL_Z, normalized=False)


def circle_value(p: AlgebraicPoly, x: float) -> complex:
    """p(e^{ix}) by Horner; handy for checking the lift identities."""
    return p(cmath.exp(1j * x))
