"""Rational divisors on the affine line and divisor-pair decision procedures.

A ``QDivisor`` is a finitely supported map {rational point -> rational
coefficient}; support is exactly the set of stored keys (no zero coefficients).
``DpdPair`` is a pair (D+, D-) with D+ + D- <= 0 pointwise, the data that
presents a hyperbolically graded surface algebra over C[t].

Text format: comma-separated ``point:coefficient`` entries with rationals as
``p/q``, e.g. ``0:-2/3,1:-1/2``.  The parser accepts entries in any order; the
printer emits points in increasing order.  The empty string is the zero
divisor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, NamedTuple, Union

from .exact_algebra import MultiPoly

Scalar = Union[int, Fraction]


class RegimeError(ValueError):
    """Raised when a decision procedure is asked about data outside the
    configuration it classifies."""


class QDivisor:
    """Finitely supported Q-divisor on the affine line."""

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Mapping[Scalar, Scalar] | Iterable[tuple[Scalar, Scalar]] = ()):
        items = coefficients.items() if isinstance(coefficients, Mapping) else coefficients
        clean: dict[Fraction, Fraction] = {}
        for point, coeff in items:
            point = Fraction(point)
            coeff = Fraction(coeff)
            if not coeff:
                continue
            total = clean.get(point, Fraction(0)) + coeff
            if total:
                clean[point] = total
            else:
                clean.pop(point, None)
        object.__setattr__(self, "_coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("QDivisor is immutable")

    @classmethod
    def zero(cls) -> "QDivisor":
        return cls()

    @property
    def coefficients(self) -> Mapping[Fraction, Fraction]:
        return MappingProxyType(self._coeffs)

    @property
    def support(self) -> tuple[Fraction, ...]:
        return tuple(sorted(self._coeffs))

    def coefficient(self, point: Scalar) -> Fraction:
        return self._coeffs.get(Fraction(point), Fraction(0))

    def items(self) -> list[tuple[Fraction, Fraction]]:
        return sorted(self._coeffs.items())

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QDivisor):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other: "QDivisor") -> "QDivisor":
        if not isinstance(other, QDivisor):
            return NotImplemented
        out = dict(self._coeffs)
        for p, c in other._coeffs.items():
            total = out.get(p, Fraction(0)) + c
            if total:
                out[p] = total
            else:
                del out[p]
        return QDivisor(out)

    def __neg__(self) -> "QDivisor":
        return QDivisor({p: -c for p, c in self._coeffs.items()})

    def __sub__(self, other: "QDivisor") -> "QDivisor":
        if not isinstance(other, QDivisor):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar: Scalar) -> "QDivisor":
        return QDivisor({p: Fraction(scalar) * c for p, c in self._coeffs.items()})

    __rmul__ = __mul__

    def __str__(self) -> str:
        return format_divisor(self)

    def __repr__(self) -> str:
        return f"QDivisor({format_divisor(self)!r})"


def floor_div(d: QDivisor) -> QDivisor:
    """Pointwise floor."""
    return QDivisor({p: math.floor(c) for p, c in d.coefficients.items()})


def fract_div(d: QDivisor) -> QDivisor:
    """Pointwise fractional part; coefficients lie in [0, 1) and
    d == floor_div(d) + fract_div(d)."""
    return d - floor_div(d)


def denom(d: QDivisor) -> int:
    """Least positive n such that n*d is integral (1 for the zero divisor)."""
    n = 1
    for c in d.coefficients.values():
        n = n * c.denominator // math.gcd(n, c.denominator)
    return n


@dataclass(frozen=True)
class DpdPair:
    """Divisor pair (D+, D-) with D+ + D- <= 0 at every point."""

    d_plus: QDivisor
    d_minus: QDivisor

    def __post_init__(self):
        total = self.d_plus + self.d_minus
        bad = [(p, c) for p, c in total.items() if c > 0]
        if bad:
            witness = ", ".join(f"({p}: {c})" for p, c in bad)
            raise ValueError(f"D+ + D- must be <= 0 everywhere; positive at {witness}")

    @property
    def total(self) -> QDivisor:
        return self.d_plus + self.d_minus


def canonical_pair(pair: DpdPair) -> DpdPair:
    """Shift to the equivalent pair ({D+}, D- + floor(D+)).

    The sum D+ + D- is unchanged, so the result presents an isomorphic graded
    algebra and is again a valid pair.
    """
    fl = floor_div(pair.d_plus)
    return DpdPair(pair.d_plus - fl, pair.d_minus + fl)


def ml1_test(pair: DpdPair) -> bool:
    """Essential-uniqueness test for the ruling: true iff the fractional part
    of D- is supported on at least two points.

    Only meaningful when the fractional part of D+ is supported on at most one
    point (the configuration carrying a positive-degree derivation); outside
    that regime a :class:`RegimeError` is raised.
    """
    if len(fract_div(pair.d_plus).support) > 1:
        raise RegimeError(
            "outside classified regime: fractional part of D+ is supported on more than one point"
        )
    return len(fract_div(pair.d_minus).support) >= 2


class NegativeLocus(NamedTuple):
    l: int
    picard_rank_lower_bound: int
    torsion_compatible: bool


def negative_locus(pair: DpdPair) -> NegativeLocus:
    """Count points where D+ + D- < 0; the Picard rank of the presented
    surface is at least l - 1, so torsion Picard forces l <= 1."""
    l = sum(1 for _, c in pair.total.items() if c < 0)
    return NegativeLocus(l, l - 1, l <= 1)


def divisor_to_poly(d_minus: QDivisor, k: int) -> tuple[int, MultiPoly]:
    """Encode -k*D- as the divisor of t^l * Q(t) with Q monic and Q(0) != 0.

    Returns (l, Q) where l = -k*D-(0) and Q = prod over support points p != 0
    of (t - p)^(-k*D-(p)).  Requires k*D- integral and -k*D-(p) >= 0 for every
    p != 0.
    """
    if k < 1:
        raise ValueError(f"k must be a positive integer: {k}")
    l = 0
    q = MultiPoly.constant(("t",), 1)
    t = MultiPoly.variable(("t",), "t")
    for p, c in d_minus.items():
        value = -k * c
        if value.denominator != 1:
            raise ValueError(
                f"k is not a multiple of denom(D-): k={k} leaves coefficient {c} at {p} non-integral"
            )
        e = int(value)
        if p == 0:
            l = e
            continue
        if e < 0:
            raise ValueError(f"Q would be non-polynomial: exponent {e} at point {p}")
        q = q * (t - MultiPoly.constant(("t",), p)) ** e
    return l, q


# -- text format ---------------------------------------------------------------


def parse_divisor(text: str) -> QDivisor:
    """Parse ``point:coefficient`` entries (any order); '' is the zero divisor."""
    s = text.strip()
    if not s:
        return QDivisor.zero()
    entries: dict[Fraction, Fraction] = {}
    for chunk in s.split(","):
        chunk = chunk.strip()
        if not chunk:
            raise ValueError(f"empty entry in divisor text {text!r}")
        if chunk.count(":") != 1:
            raise ValueError(f"expected 'point:coefficient', got {chunk!r}")
        point_text, coeff_text = chunk.split(":")
        try:
            point = Fraction(point_text.strip())
            coeff = Fraction(coeff_text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad rational in divisor entry {chunk!r}: {exc}") from None
        if point in entries:
            raise ValueError(f"duplicate point {point} in divisor text {text!r}")
        entries[point] = coeff
    return QDivisor(entries)


def format_divisor(d: QDivisor) -> str:
    """Points in increasing order; the zero divisor prints as ''."""
    return ",".join(f"{p}:{c}" for p, c in d.items())
