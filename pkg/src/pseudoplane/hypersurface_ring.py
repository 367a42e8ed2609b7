"""Hypersurface coordinate rings C[u, y, s]/(u^k * y - P(s)) with rewriting.

The defining relation is used as a left-to-right rewrite rule: one factor of
the second variable and k factors of u are replaced by P(s) per step.  Each
step strictly decreases the exponent of the second variable and distinct
monomials reduce independently, so rewriting terminates and the normal form is
unique.  The torus action scales u with weight 1 and the second variable with
weight -k (s fixed), making the relation homogeneous of weight 0.

For the normalized relation u^m * w = s^d - 1 the module also implements the
degree-e derivation that raises weight by e: on the localization at u it is
u^e * d/ds, with w = (s^d - 1)/u^m expanded.  Elements whose image leaves the
ring are reported with a :class:`NonPolynomial` marker rather than an error,
because the derivation is only required to preserve the invariant subring.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Union

from .exact_algebra import (
    MultiPoly,
    format_poly,
    parse_poly,
    poly_divmod,
    poly_gcd,
    squarefree_decomposition,
    substitute_power,
)

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class HypersurfaceRing:
    """Presentation of C[u, second, s] / (u^k * second - P(s))."""

    k: int
    P: MultiPoly
    second_var: str = "v"

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be a positive integer: {self.k}")
        if self.P.variables != ("s",):
            raise ValueError(f"P must be univariate in 's', got variables {self.P.variables}")
        if self.P.is_zero():
            raise ValueError("P must be nonzero")
        if self.second_var in ("u", "s"):
            raise ValueError(f"second variable may not shadow u or s: {self.second_var!r}")

    @property
    def variables(self) -> tuple[str, str, str]:
        return ("u", self.second_var, "s")

    @property
    def cstar_weights(self) -> dict[str, int]:
        # weight(u^k * second) = k - k = 0 = weight(P(s)): the relation is homogeneous
        return {"u": 1, self.second_var: -self.k, "s": 0}

    def relation(self) -> MultiPoly:
        """The defining polynomial u^k * second - P(s)."""
        lead = MultiPoly.monomial(self.variables, (self.k, 1, 0))
        return lead - self.P.with_variables(self.variables)

    def monomial(self, a: int, b: int, c: int, coeff: Scalar = 1) -> MultiPoly:
        return MultiPoly.monomial(self.variables, (a, b, c), coeff)

    def variable(self, name: str) -> MultiPoly:
        return MultiPoly.variable(self.variables, name)

    def element(self, value: "str | MultiPoly | RingElement") -> "RingElement":
        if isinstance(value, RingElement):
            if value.ring != self:
                raise ValueError("element belongs to a different ring")
            return value
        if isinstance(value, str):
            value = parse_poly(value, self.variables)
        return normal_form(self, value)

    def serialize(self) -> dict:
        return {"k": self.k, "P": format_poly(self.P), "second_var": self.second_var}


@dataclass(frozen=True)
class RingElement:
    """An element of a hypersurface ring, stored in normal form: no monomial
    has u-exponent >= k together with a positive second-variable exponent."""

    ring: HypersurfaceRing
    poly: MultiPoly

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def _check(self, other: "RingElement"):
        if not isinstance(other, RingElement) or other.ring != self.ring:
            raise ValueError("ring elements belong to different rings")

    def __add__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return normal_form(self.ring, self.poly + other.poly)

    def __sub__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return normal_form(self.ring, self.poly - other.poly)

    def __mul__(self, other) -> "RingElement":
        if isinstance(other, (int, Fraction)):
            return RingElement(self.ring, self.poly * other)
        self._check(other)
        return normal_form(self.ring, self.poly * other.poly)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "RingElement":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.element(MultiPoly.constant(self.ring.variables, 1))
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __str__(self) -> str:
        return format_poly(self.poly)


@dataclass(frozen=True)
class NonPolynomial:
    """Marker for a derivation image that leaves the ring; names an offending
    localized monomial (negative u-exponent that cannot be absorbed)."""

    monomial: str


class SmoothCheck(NamedTuple):
    smooth: bool
    witness: tuple[tuple[MultiPoly, int], ...]


class NormalizationWitness(NamedTuple):
    power_identity: bool
    normalized_smooth: bool


@lru_cache(maxsize=None)
def _rhs_power(ring: HypersurfaceRing, j: int) -> MultiPoly:
    """P(s)^j embedded in the ring's three variables."""
    return (ring.P ** j).with_variables(ring.variables)


def normal_form(ring: HypersurfaceRing, p: MultiPoly) -> RingElement:
    """Exhaustively rewrite u^k * second -> P(s).

    min(a // k, b) steps apply to a monomial u^a * second^b * s^c, after which
    either a < k or b = 0; the replacement only involves s, so one pass per
    monomial reaches the unique normal form.
    """
    if p.variables != ring.variables:
        raise ValueError(f"polynomial variables {p.variables} do not match ring {ring.variables}")
    out = MultiPoly.zero(ring.variables)
    for (a, b, c), coeff in p.terms.items():
        j = min(a // ring.k, b)
        if j == 0:
            out += MultiPoly.monomial(ring.variables, (a, b, c), coeff)
        else:
            out += _rhs_power(ring, j) * MultiPoly.monomial(
                ring.variables, (a - j * ring.k, b - j, c), coeff
            )
    return RingElement(ring, out)


def homogeneous_weight(x: RingElement) -> int | None:
    """Torus weight of a homogeneous element (None for 0 or inhomogeneous)."""
    weights = x.ring.cstar_weights
    names = x.ring.variables
    seen: set[int] = set()
    for exps in x.poly.terms:
        seen.add(sum(e * weights[v] for e, v in zip(exps, names)))
    if len(seen) != 1:
        return None
    return seen.pop()


def build_covering_ring(k: int, d: int, e_prime: int, l: int, q: MultiPoly) -> HypersurfaceRing:
    """Ring C[u, v, s]/(u^k v - P(s)) with P(s) = Q(s^d) * s^(k*e' + d*l).

    Q must be monic with Q(0) != 0, and the exponent k*e' + d*l must be
    non-negative.  When the parameters come from a surface triple the exponent
    vanishes and P(s) = Q(s^d) exactly.
    """
    if q.variables != ("t",):
        raise ValueError(f"Q must be univariate in 't', got {q.variables}")
    if q.is_zero() or q.leading_coefficient() != 1:
        raise ValueError("Q must be monic")
    if q.constant_coefficient() == 0:
        raise ValueError("Q(0) must be nonzero")
    if d < 1:
        raise ValueError(f"d must be a positive integer: {d}")
    exponent = k * e_prime + d * l
    if exponent < 0:
        raise ValueError(f"negative s-exponent k*e' + d*l = {exponent}")
    p = substitute_power(q, d, "s")
    if exponent:
        p = p * MultiPoly.monomial(("s",), (exponent,))
    return HypersurfaceRing(k, p, "v")


def smooth_check(ring: HypersurfaceRing) -> SmoothCheck:
    """Smooth iff k = 1 or gcd(P, P') = 1; otherwise the witness lists the
    squarefree factors of P of multiplicity >= 2 (s-coordinates of the
    singular points along u = 0)."""
    if ring.k == 1:
        return SmoothCheck(True, ())
    g = poly_gcd(ring.P, ring.P.partial("s"))
    if g.degree() <= 0:
        return SmoothCheck(True, ())
    witness = tuple((f, mult) for f, mult in squarefree_decomposition(ring.P) if mult >= 2)
    return SmoothCheck(False, witness)


def fiber_analysis(ring: HypersurfaceRing, u_value: Scalar) -> list[tuple[int, int]]:
    """Components of the fiber over u = u_value of the u-projection, as
    (component count, multiplicity) pairs.

    Away from u = 0 the fiber is a single reduced line.  Over u = 0 it is
    {P(s) = 0} in the (second, s)-plane: one line per distinct root of P with
    the root's multiplicity, read off the squarefree decomposition (component
    count = degree of the squarefree factor; roots are never extracted).
    """
    if Fraction(u_value) != 0:
        return [(1, 1)]
    return [(f.degree(), mult) for f, mult in squarefree_decomposition(ring.P)]


def _pure_power_base(d: int) -> MultiPoly:
    s = MultiPoly.variable(("s",), "s")
    return s ** d - MultiPoly.constant(("s",), 1)


def normalize_power_relation(
    k: int, m: int, m_prime: int, d: int, ring: HypersurfaceRing | None = None
) -> tuple[HypersurfaceRing, NormalizationWitness]:
    """Normalize u^k v = (s^d - 1)^m' (k = m*m') to u^m w = s^d - 1.

    The integral element w = (s^d - 1)/u^m satisfies w^m' = v, which is
    certified as the polynomial identity (s^d - 1)^m' = u^(m*m') * v modulo
    the relation; the normalized ring is additionally checked smooth.  Only
    the pure-power shape is normalized: any other P is refused.
    """
    if k != m * m_prime:
        raise ValueError(f"k must equal m*m': {k} != {m}*{m_prime}")
    if min(k, m, m_prime, d) < 1:
        raise ValueError("all parameters must be positive integers")
    expected = _pure_power_base(d) ** m_prime
    if ring is None:
        ring = HypersurfaceRing(k, expected, "v")
    else:
        if ring.k != k:
            raise ValueError(f"ring exponent {ring.k} does not match k={k}")
        if ring.P != expected:
            raise ValueError(
                "general Q normalization unsupported: P must be (s^d - 1)^m_prime"
            )
    normalized = HypersurfaceRing(m, _pure_power_base(d), "w")
    reduced = normal_form(ring, ring.monomial(m * m_prime, 1, 0))
    power_identity = reduced.poly == expected.with_variables(ring.variables)
    normalized_smooth = smooth_check(normalized).smooth
    return normalized, NormalizationWitness(power_identity, normalized_smooth)


# -- derivation on the normalized relation --------------------------------------


def _normalized_params(ring: HypersurfaceRing) -> tuple[int, int]:
    """(m, d) for a ring in the normalized shape u^m w - (s^d - 1)."""
    d = ring.P.degree()
    if d < 1 or ring.P != _pure_power_base(d):
        raise ValueError(
            f"ring is not in the normalized shape u^m*{ring.second_var} - (s^d - 1): P = {format_poly(ring.P)}"
        )
    return ring.k, d


@lru_cache(maxsize=None)
def _base_power(d: int, b: int) -> MultiPoly:
    """(s^d - 1)^b as a univariate polynomial in s."""
    return _pure_power_base(d) ** b


def _to_localization(ring: HypersurfaceRing, poly: MultiPoly) -> dict[int, dict[int, Fraction]]:
    """Expand w = (s^d - 1) * u^(-m): map {u-exponent j -> {s-exponent -> coeff}}."""
    m, d = _normalized_params(ring)
    loc: dict[int, dict[int, Fraction]] = {}
    for (a, b, c), coeff in poly.terms.items():
        j = a - m * b
        row = loc.setdefault(j, {})
        for (e,), c2 in _base_power(d, b).terms.items():
            key = e + c
            total = row.get(key, Fraction(0)) + coeff * c2
            if total:
                row[key] = total
            else:
                del row[key]
    return {j: row for j, row in loc.items() if row}


def _from_localization(
    ring: HypersurfaceRing, loc: dict[int, dict[int, Fraction]]
) -> RingElement | NonPolynomial:
    """Reassemble a Laurent expansion into a normal-form element, or report
    the first u-exponent whose s-part is not divisible by the required power
    of s^d - 1."""
    m, d = _normalized_params(ring)
    terms: dict[tuple[int, int, int], Fraction] = {}
    for j in sorted(loc):
        row = loc[j]
        if not row:
            continue
        f = MultiPoly(("s",), {(e,): c for e, c in row.items()})
        if j >= 0:
            a, b, g = j, 0, f
        else:
            b = (-j + m - 1) // m
            g, rem = poly_divmod(f, _base_power(d, b))
            if not rem.is_zero():
                top = max(rem.terms)
                coeff = rem.terms[top]
                return NonPolynomial(f"{coeff}*u^{j}*s^{top[0]}")
            a = j + m * b
        for (e,), coeff in g.terms.items():
            terms[(a, b, e)] = coeff
    return RingElement(ring, MultiPoly(ring.variables, terms))


def derivation_apply(ring: HypersurfaceRing, e: int, x: RingElement) -> RingElement | NonPolynomial:
    """Apply the degree-e derivation u^e * d/ds to x on the normalized ring.

    Computed in the localization at u (where the derivation is literally
    u^e * d/ds, with the second variable expanded); the result is polynomial
    iff every negative u-exponent is absorbed by powers of s^d - 1, in which
    case the reduced element is returned.
    """
    if not isinstance(e, int) or e < 1:
        raise ValueError(f"derivation degree must be a positive integer: {e}")
    if x.ring != ring:
        raise ValueError("element belongs to a different ring")
    loc = _to_localization(ring, x.poly)
    image: dict[int, dict[int, Fraction]] = {}
    for j, row in loc.items():
        target = image.setdefault(j + e, {})
        for c, coeff in row.items():
            if c == 0:
                continue
            target[c - 1] = coeff * c
    return _from_localization(ring, {j: row for j, row in image.items() if row})


def s_weight(x: RingElement) -> int:
    """Filtration weight s -> 1, w -> d, u -> 0 (max over monomials).

    The rewrite rule preserves it and the derivation strictly decreases it, so
    1 + s_weight(x) bounds the nilpotency index of x.
    """
    _, d = _normalized_params(x.ring)
    if x.poly.is_zero():
        return 0
    return max(b * d + c for (_, b, c) in x.poly.terms)


def nilpotency_index(ring: HypersurfaceRing, e: int, x: RingElement) -> int | None:
    """Least N with the N-th derivation image of x zero, or None if some
    iterate leaves the ring."""
    bound = 1 + s_weight(x)
    y: RingElement | NonPolynomial = x
    for n in range(1, bound + 1):
        y = derivation_apply(ring, e, y)
        if isinstance(y, NonPolynomial):
            return None
        if y.is_zero():
            return n
    raise RuntimeError(
        f"nilpotency bound {bound} exceeded; the filtration certificate is violated"
    )
