"""Diagonal cyclic symmetries of hypersurface rings and their invariants.

Roots of unity are represented by residue indices only: fixed-locus and
component-permutation questions are answered with modular arithmetic plus the
gcd/squarefree data of the defining polynomial, never with numeric roots.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import NamedTuple

from .dpd_presentation import product_defect, pseudoplane_dpd_pair
from .exact_algebra import MultiPoly, format_poly
from .hypersurface_ring import (
    HypersurfaceRing,
    NonPolynomial,
    RingElement,
    derivation_apply,
    nilpotency_index,
    normal_form,
)


class StructuralError(RuntimeError):
    """An exact-division step that the construction guarantees has failed;
    signals a wrong convention or a bug, not bad input."""


@dataclass(frozen=True)
class CyclicAction:
    """Diagonal action of the cyclic group of order `modulus`: the chosen
    generator scales each variable by the primitive root raised to its weight."""

    modulus: int
    weights: dict[str, int]

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be a positive integer: {self.modulus}")
        object.__setattr__(
            self, "weights", {v: w % self.modulus for v, w in self.weights.items()}
        )

    def weight_of(self, exps: tuple[int, ...], variables: tuple[str, ...]) -> int:
        return sum(e * self.weights[v] for e, v in zip(exps, variables)) % self.modulus

    def serialize(self) -> dict:
        return {"d": self.modulus, "weights": dict(self.weights)}


def mod_inverse(e: int, d: int) -> int:
    """Inverse of e modulo d, represented in [1, d] (1 when d = 1)."""
    if d < 1:
        raise ValueError(f"modulus must be a positive integer: {d}")
    if d == 1:
        return 1
    g = math.gcd(e, d)
    if g != 1:
        raise ValueError(f"e and d must be coprime: gcd({e}, {d}) = {g}")
    return pow(e % d, -1, d)


@dataclass(frozen=True)
class SurfaceTriple:
    """Input (d, e, m) with the derived constants used throughout.

    e' inverts e mod d, k = lcm(d, m) = m*m' = d*d', and l = -e'*d'; the
    identity k*e' + d*l = 0 holds by construction and is re-checked here.
    """

    d: int
    e: int
    m: int
    e_prime: int
    k: int
    m_prime: int
    d_prime: int
    l: int

    @classmethod
    def make(cls, d: int, e: int, m: int) -> "SurfaceTriple":
        if d < 1 or e < 1 or m < 1:
            raise ValueError(f"d, e, m must be positive integers: ({d}, {e}, {m})")
        if math.gcd(e, d) != 1:
            raise ValueError(f"e and d must be coprime: gcd({e}, {d}) = {math.gcd(e, d)}")
        e_prime = mod_inverse(e, d)
        k = d * m // math.gcd(d, m)
        m_prime = k // m
        d_prime = k // d
        return cls(d, e, m, e_prime, k, m_prime, d_prime, -e_prime * d_prime)

    def __post_init__(self):
        if math.gcd(self.e, self.d) != 1:
            raise ValueError("e and d must be coprime")
        if (self.e * self.e_prime) % self.d != 1 % self.d:
            raise ValueError("e_prime is not the inverse of e modulo d")
        lcm = self.d * self.m // math.gcd(self.d, self.m)
        if self.k != lcm or self.k != self.m * self.m_prime or self.k != self.d * self.d_prime:
            raise ValueError("k must be lcm(d, m) with k = m*m' = d*d'")
        if self.l != -self.e_prime * self.d_prime:
            raise ValueError("l must equal -e'*d'")
        if self.k * self.e_prime + self.d * self.l != 0:
            raise ValueError("exponent identity k*e' + d*l = 0 violated")


def normalized_ring(triple: SurfaceTriple) -> HypersurfaceRing:
    """The normalized model u^m w - (s^d - 1) for the triple."""
    return _normalized_ring(triple.m, triple.d)


def _normalized_ring(m: int, d: int) -> HypersurfaceRing:
    s = MultiPoly.variable(("s",), "s")
    return HypersurfaceRing(m, s ** d - MultiPoly.constant(("s",), 1), "w")


def induced_action(triple: SurfaceTriple) -> CyclicAction:
    """Weights (e', -m*e', 1) on (u, w, s): the action inherited from the
    covering construction through w = (s^d - 1)/u^m."""
    return CyclicAction(
        triple.d,
        {"u": triple.e_prime, "w": -triple.m * triple.e_prime, "s": 1},
    )


def standard_action(triple: SurfaceTriple) -> CyclicAction:
    """Weights (1, -m, e) on (u, w, s): the generator-change of the induced
    action that exhibits the classified form."""
    return CyclicAction(triple.d, {"u": 1, "w": -triple.m, "s": triple.e})


class FreenessResult(NamedTuple):
    free: bool
    fixed_loci: list[dict]


def freeness_check(action: CyclicAction, ring: HypersurfaceRing) -> FreenessResult:
    """Decide freeness of the action on the hypersurface.

    Requires the relation to be semi-invariant (all monomials of
    u^k*second - P(s) share one residue).  For each nontrivial group power b
    and each zero/nonzero coordinate pattern, the pattern is a fixed locus iff
    every coordinate allowed to be nonzero has b*weight = 0 mod d and the
    surface has a point with exactly that pattern; the latter reduces to
    whether P vanishes at 0 and whether P has a nonzero root, both decided
    from the term data.
    """
    d = action.modulus
    variables = ring.variables
    try:
        wts = [action.weights[v] for v in variables]
    except KeyError as exc:
        raise ValueError(f"action is missing a weight for variable {exc}") from None
    residues = {(ring.k * wts[0] + wts[1]) % d}
    for (exp,), _ in ring.P.terms.items():
        residues.add((exp * wts[2]) % d)
    if len(residues) > 1:
        raise ValueError(
            f"relation is not semi-invariant under the action: residues {sorted(residues)}"
        )
    vanishes_at_zero = ring.P.constant_coefficient() == 0
    # nonzero roots exist iff P is not a constant times a power of s
    has_nonzero_root = ring.P.degree() > ring.P.valuation("s")

    def admits(u_nz: bool, v_nz: bool, s_nz: bool) -> bool:
        if not u_nz:
            # second coordinate is free on u = 0; membership needs P(S) = 0
            return has_nonzero_root if s_nz else vanishes_at_zero
        if v_nz:
            return True if s_nz else not vanishes_at_zero
        return has_nonzero_root if s_nz else vanishes_at_zero

    loci: list[dict] = []
    for b in range(1, d):
        for pattern in product((False, True), repeat=3):
            if any(nz and (b * w) % d != 0 for nz, w in zip(pattern, wts)):
                continue
            if admits(*pattern):
                loci.append(
                    {
                        "power": b,
                        "pattern": {
                            v: ("nonzero" if nz else "zero")
                            for v, nz in zip(variables, pattern)
                        },
                    }
                )
    return FreenessResult(not loci, loci)


_basis_cache: dict[tuple[int, tuple[tuple[str, int], ...]], list[tuple[int, ...]]] = {}


def hilbert_basis(action: CyclicAction) -> list[tuple[int, ...]]:
    """Minimal generating set of the monoid of invariant exponent vectors.

    Exhaustive search in the box [0, d]^3 is complete: d*e_i is invariant for
    each axis, so any vector with a coordinate exceeding d is reducible.  An
    element is a generator iff no nonzero invariant vector sits strictly below
    it componentwise (the difference is then automatically invariant).
    """
    if len(action.weights) != 3:
        raise ValueError(f"expected a three-variable action, got {tuple(action.weights)}")
    d = action.modulus
    key = (d, tuple(sorted(action.weights.items())))
    cached = _basis_cache.get(key)
    if cached is not None:
        return list(cached)
    wts = tuple(action.weights.values())
    points = [
        v
        for v in product(range(d + 1), repeat=3)
        if any(v) and sum(e * w for e, w in zip(v, wts)) % d == 0
    ]
    basis = [
        x
        for x in points
        if not any(y != x and all(a <= b for a, b in zip(y, x)) for y in points)
    ]
    basis.sort()
    _basis_cache[key] = basis
    return list(basis)


def weight_piece_generator(triple: SurfaceTriple, n: int) -> tuple[int, int, int]:
    """Exponents (a, b, c) of the monomial u^a w^b s^c generating the weight-n
    invariant piece of the normalized ring.

    (a, b) is pinned by a - m*b = n together with the normal-form constraint
    (a < m or b = 0); c is the least non-negative solution of the invariance
    congruence, c = (-e'*n) mod d.  The full piece is this generator times the
    polynomials in s^d (rank one).
    """
    m = triple.m
    if n >= 0:
        a, b = n, 0
    else:
        a = n % m
        b = (a - n) // m
    c = (-triple.e_prime * n) % triple.d
    return (a, b, c)


def weight_piece_is_rank_one(triple: SurfaceTriple, n: int, exp_bound: int = 24) -> bool:
    """Re-verify by enumeration that every invariant normal-form monomial of
    weight n with exponents <= exp_bound is the generator times a power of s^d."""
    action = standard_action(triple)
    ring = normalized_ring(triple)
    ga, gb, gc = weight_piece_generator(triple, n)
    m, d = triple.m, triple.d
    for a in range(exp_bound + 1):
        for b in range(exp_bound + 1):
            if a - m * b != n or (b and a >= m):
                continue
            for c in range(exp_bound + 1):
                if action.weight_of((a, b, c), ring.variables) != 0:
                    continue
                if not (a == ga and b == gb and c >= gc and (c - gc) % d == 0):
                    return False
    return True


def monomial_element(ring: HypersurfaceRing, exps: tuple[int, int, int]) -> RingElement:
    return normal_form(ring, ring.monomial(*exps))


class ProductCheck(NamedTuple):
    measured: dict[Fraction, int]
    predicted: dict[Fraction, int]
    match: bool


def product_structure_check(triple: SurfaceTriple, n: int, n_prime: int) -> ProductCheck:
    """Compare the measured product structure of invariant weight pieces with
    the divisor-pair prediction.

    The product of the weight-n and weight-n' generators reduces to
    (s^d)^kappa * (s^d - 1)^lam times the weight-(n+n') generator; with s^d
    playing the role of the coordinate t at the point 0 and s^d - 1 = u^m w at
    the point 1, the exponents {0: kappa, 1: lam} must equal the exponent
    defect of the graded pieces.  A failed exact division here means the piece
    convention is wrong and raises :class:`StructuralError`.
    """
    ring = normalized_ring(triple)
    d = triple.d
    g1 = weight_piece_generator(triple, n)
    g2 = weight_piece_generator(triple, n_prime)
    g12 = weight_piece_generator(triple, n + n_prime)
    prod = normal_form(ring, ring.monomial(*g1) * ring.monomial(*g2))
    a12, b12, c12 = g12
    rest: dict[int, Fraction] = {}
    for (a, b, c), coeff in prod.poly.terms.items():
        if a != a12 or b != b12 or c < c12:
            raise StructuralError(
                f"product of weight pieces {n}, {n_prime} is not a multiple of the "
                f"weight-{n + n_prime} generator: term u^{a}*w^{b}*s^{c} vs generator {g12}"
            )
        rest[c - c12] = coeff
    r = MultiPoly(("s",), {(c,): v for c, v in rest.items()})
    val = r.valuation("s")
    span = r.degree() - val
    if val % d or span % d:
        raise StructuralError(
            f"residual factor {format_poly(r)} is not of the form (s^d)^kappa*(s^d-1)^lam"
        )
    kappa, lam = val // d, span // d
    s = MultiPoly.variable(("s",), "s")
    rebuilt = s ** val * (s ** d - MultiPoly.constant(("s",), 1)) ** lam
    if r != rebuilt:
        raise StructuralError(
            f"residual factor {format_poly(r)} does not factor as s^{val}*(s^{d}-1)^{lam}"
        )
    measured = {p: v for p, v in ((Fraction(0), kappa), (Fraction(1), lam)) if v}
    pair = pseudoplane_dpd_pair(triple.d, triple.e_prime, triple.m)
    predicted = product_defect(pair, n, n_prime)
    return ProductCheck(measured, predicted, measured == predicted)


def same_subgroup(a1: CyclicAction, a2: CyclicAction) -> bool:
    """Whether the two diagonal actions generate the same symmetry group:
    some unit c mod d carries the weights of a1 to the weights of a2."""
    if a1.modulus != a2.modulus:
        raise ValueError(f"modulus mismatch: {a1.modulus} vs {a2.modulus}")
    if set(a1.weights) != set(a2.weights):
        raise ValueError("actions are defined on different variable sets")
    d = a1.modulus
    for c in range(1, d + 1):
        if math.gcd(c, d) != 1:
            continue
        if all((c * w) % d == a2.weights[v] for v, w in a1.weights.items()):
            return True
    return False


class ComponentPermutation(NamedTuple):
    cycles: tuple[tuple[int, ...], ...]
    transitive: bool


def component_permutation(d: int, e: int) -> ComponentPermutation:
    """Action of the symmetry generator on the d components of the degenerate
    fiber, indexed by residues j mod d (component j maps to j + e)."""
    if d < 1:
        raise ValueError(f"d must be a positive integer: {d}")
    seen: set[int] = set()
    cycles: list[tuple[int, ...]] = []
    for start in range(d):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        j = (start + e) % d
        while j != start:
            cycle.append(j)
            seen.add(j)
            j = (j + e) % d
        cycles.append(tuple(cycle))
    return ComponentPermutation(tuple(cycles), len(cycles) == 1)


def find_valid_lnd_degrees(
    triple: SurfaceTriple, bound: int, certify_weight: int = 8
) -> list[int]:
    """Degrees e in [1, bound], congruent to the s-weight of the standard
    action mod d, whose derivation maps every invariant monoid generator into
    the ring (hence, by the product rule, preserves the whole invariant ring).

    Each returned degree is additionally certified locally nilpotent on the
    weight-piece generators |n| <= certify_weight.  An empty result is a
    finding, not an error.
    """
    if bound < triple.m + triple.d:
        raise ValueError(
            f"bound must be at least m + d = {triple.m + triple.d}, got {bound}"
        )
    ring = normalized_ring(triple)
    action = standard_action(triple)
    basis = hilbert_basis(action)
    generators = [monomial_element(ring, g) for g in basis]
    pieces = [
        monomial_element(ring, weight_piece_generator(triple, n))
        for n in range(-certify_weight, certify_weight + 1)
    ]
    target = triple.e % triple.d
    found: list[int] = []
    for degree in range(1, bound + 1):
        if degree % triple.d != target:
            continue
        if any(
            isinstance(derivation_apply(ring, degree, g), NonPolynomial)
            for g in generators
        ):
            continue
        if all(nilpotency_index(ring, degree, x) is not None for x in pieces):
            found.append(degree)
    return found
