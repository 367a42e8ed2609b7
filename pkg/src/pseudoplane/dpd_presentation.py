"""Graded-algebra view of a divisor pair: A = A0[D+, D-] over A0 = C[t].

The weight-n piece of the algebra is a principal fractional ideal of C[t],
recorded by its exponent vector: the generator is prod (t - p)^e(p), with
negative e(p) meaning an allowed pole.  Pieces are governed by floor-rounded
multiples of the pair: weight n >= 0 reads floor(n*D+), weight n < 0 reads
floor(-n*D-).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping, Union

from .qdivisor import DpdPair, QDivisor, format_divisor, negative_locus

Scalar = Union[int, Fraction]


class FractionalIdealA1:
    """Principal fractional ideal of C[t], stored as {point -> exponent}."""

    __slots__ = ("_exponents",)

    def __init__(self, exponents: Mapping[Scalar, int] = ()):
        items = exponents.items() if isinstance(exponents, Mapping) else exponents
        clean: dict[Fraction, int] = {}
        for point, e in items:
            if not isinstance(e, int):
                raise ValueError(f"exponent at {point} must be an integer: {e!r}")
            if e:
                clean[Fraction(point)] = e
        object.__setattr__(self, "_exponents", clean)

    def __setattr__(self, name, value):
        raise AttributeError("FractionalIdealA1 is immutable")

    @property
    def exponents(self) -> Mapping[Fraction, int]:
        return MappingProxyType(self._exponents)

    def exponent(self, point: Scalar) -> int:
        return self._exponents.get(Fraction(point), 0)

    @property
    def support(self) -> tuple[Fraction, ...]:
        return tuple(sorted(self._exponents))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FractionalIdealA1):
            return NotImplemented
        return self._exponents == other._exponents

    def __hash__(self) -> int:
        return hash(frozenset(self._exponents.items()))

    def as_divisor_string(self) -> str:
        return format_divisor(QDivisor(self._exponents))

    def __repr__(self) -> str:
        return f"FractionalIdealA1({self.as_divisor_string()!r})"


def pseudoplane_dpd_pair(d: int, e_prime: int, m: int) -> DpdPair:
    """The divisor pair (-(e'/d)[0], (e'/d)[0] - (1/m)[1]) presenting the
    surface family member with parameters (d, e', m).

    e' is normalized to its representative in [1, d] (so the printed pair is
    deterministic); gcd(e', d) must be 1.
    """
    if d < 1 or m < 1:
        raise ValueError(f"d and m must be positive: d={d}, m={m}")
    if math.gcd(e_prime, d) != 1:
        raise ValueError(f"e' and d must be coprime: gcd({e_prime}, {d}) != 1")
    r = e_prime % d
    if r == 0:
        r = d
    ratio = Fraction(r, d)
    d_plus = QDivisor({0: -ratio})
    d_minus = QDivisor({0: ratio, 1: Fraction(-1, m)})
    return DpdPair(d_plus, d_minus)


def graded_piece(pair: DpdPair, n: int) -> FractionalIdealA1:
    """Exponent data of the weight-n piece: -floor(n*D+) for n >= 0,
    -floor(-n*D-) for n < 0, the unit ideal for n = 0."""
    if n == 0:
        return FractionalIdealA1()
    divisor = pair.d_plus if n > 0 else pair.d_minus
    mult = abs(n)
    return FractionalIdealA1(
        {p: -math.floor(mult * c) for p, c in divisor.coefficients.items()}
    )


def product_defect(pair: DpdPair, n: int, n_prime: int) -> dict[Fraction, int]:
    """Pointwise exponent defect piece(n) + piece(n') - piece(n+n').

    These are the multiplicative structure constants of the graded algebra:
    the product of the weight-n and weight-n' generators is the weight-(n+n')
    generator times t^defect(0) * (t-1)^defect(1) * ...  Values are always
    >= 0 (floor superadditivity plus D+ + D- <= 0); zeros are pruned.
    """
    e1 = graded_piece(pair, n)
    e2 = graded_piece(pair, n_prime)
    e12 = graded_piece(pair, n + n_prime)
    points = set(e1.support) | set(e2.support) | set(e12.support)
    out: dict[Fraction, int] = {}
    for p in sorted(points):
        v = e1.exponent(p) + e2.exponent(p) - e12.exponent(p)
        if v:
            out[p] = v
    return out


ACTION_KINDS = ("elliptic", "parabolic", "hyperbolic", "none")


@dataclass(frozen=True)
class ActionClass:
    kind: str
    admissible: bool
    reason: str

    def __post_init__(self):
        if self.kind not in ACTION_KINDS:
            raise ValueError(f"unknown action kind {self.kind!r}")


@dataclass(frozen=True)
class PresentationDescriptor:
    """What kind of one-dimensional torus action presents the surface.

    kind 'hyperbolic' carries the divisor pair; 'parabolic' is understood over
    the affine line (the only base in scope); lnd_degree, when known, is the
    degree of a homogeneous locally nilpotent derivation.
    """

    kind: str
    pair: DpdPair | None = None
    lnd_degree: int | None = None


def classify_presentation(descriptor: PresentationDescriptor) -> ActionClass:
    """Decision table ruling configurations in or out as candidates for a
    surface with an essentially unique ruling over the affine line.

    This performs no ring computation: each exclusion is a recorded fact about
    the presentation type.
    """
    kind = descriptor.kind
    if kind == "elliptic":
        return ActionClass("elliptic", False, "excluded: elliptic action presents the affine plane")
    if kind == "parabolic":
        return ActionClass(
            "parabolic",
            False,
            "excluded: parabolic action over the affine line presents the affine plane",
        )
    if kind == "hyperbolic":
        if descriptor.pair is None:
            raise ValueError("hyperbolic descriptor requires a divisor pair")
        if descriptor.lnd_degree == 0:
            return ActionClass(
                "hyperbolic",
                False,
                "excluded: degree-0 derivation presents a line times a torus (ruling over the torus)",
            )
        locus = negative_locus(descriptor.pair)
        if not locus.torsion_compatible:
            return ActionClass(
                "hyperbolic",
                False,
                f"excluded: negative locus has {locus.l} points, so Picard rank >= "
                f"{locus.picard_rank_lower_bound} is not a torsion group",
            )
        return ActionClass("hyperbolic", True, "admissible")
    raise ValueError(f"malformed descriptor kind {kind!r}")


def smoothness_condition(m: int, a: int) -> bool:
    """Whether boundary coefficient a/m (gcd(a, m) = 1) can occur for a smooth
    surface: only a = -1 does."""
    if m < 1:
        raise ValueError(f"m must be positive: {m}")
    if math.gcd(a, m) != 1:
        raise ValueError(f"a and m must be coprime: gcd({a}, {m}) != 1")
    return a == -1
