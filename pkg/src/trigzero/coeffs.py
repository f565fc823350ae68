"""Coefficient vectors with a declared upper index.

A vector ``(a_0, ..., a_K)`` keeps its declared K as part of its identity:
``(0, 7, 0, 1)`` and ``(0, 7, 0, 1, 0)`` are different objects, because
reversal and the 2K evaluation grid depend on K, not on the true degree.
Entries are stored dually: exact ``Fraction``/``int`` values when the input
was exact, floats otherwise.  Floats are IEEE doubles and therefore dyadic
rationals, so an exact lift is always available via :meth:`CoeffVector.exact`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

Scalar = Union[int, float, Fraction]


def _freeze(value) -> Scalar:
    if isinstance(value, bool):
        raise TypeError("coefficients must be numbers, not bool")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else value
    if isinstance(value, Rational):
        return _freeze(Fraction(value))
    if isinstance(value, float):
        return value
    raise TypeError(f"unsupported coefficient type: {type(value).__name__}")


@dataclass(frozen=True)
class CoeffVector:
    """Ordered real coefficients ``a_0..a_K``; ``len(coeffs) == K + 1``."""

    coeffs: tuple

    def __init__(self, coeffs: Iterable) -> None:
        frozen = tuple(_freeze(c) for c in coeffs)
        if not frozen:
            raise ValueError("a coefficient vector needs at least one entry (K >= 0)")
        object.__setattr__(self, "coeffs", frozen)

    @property
    def K(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_exact(self) -> bool:
        """True when every entry is an exact rational (no floats)."""
        return all(not isinstance(c, float) for c in self.coeffs)

    @property
    def is_zero(self) -> bool:
        """Exact test: every entry equals zero."""
        return all(c == 0 for c in self.coeffs)

    def exact(self) -> tuple[Fraction, ...]:
        """Entries as exact rationals; floats lift to their dyadic value."""
        return tuple(Fraction(c) for c in self.coeffs)

    def floats(self) -> tuple[float, ...]:
        return tuple(float(c) for c in self.coeffs)

    def abs_sum(self) -> float:
        """Scale measure sum(|a_k|), used for relative tolerances."""
        return float(sum(abs(float(c)) for c in self.coeffs))

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, k: int) -> Scalar:
        return self.coeffs[k]


def reverse(a: CoeffVector) -> CoeffVector:
    """Reversal (a_K, ..., a_0) with the same declared K; an involution."""
    return CoeffVector(a.coeffs[::-1])


def parse_coeffs(text: str) -> CoeffVector:
    """Parse comma-separated coefficients exactly.

    Each entry is an integer, a decimal, or a rational ``p/q``; all three
    forms are parsed to exact rationals (decimals via Fraction's exact
    decimal-string constructor).
    """
    items = [part.strip() for part in text.split(",")]
    if any(not part for part in items):
        raise ValueError(f"empty coefficient entry in {text!r}")
    values = []
    for part in items:
        try:
            values.append(Fraction(part))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse coefficient {part!r}") from exc
    return CoeffVector(values)


def format_coeffs(a: Sequence) -> str:
    """Inverse of :func:`parse_coeffs` for exact entries."""
    return ",".join(str(c) for c in a)
