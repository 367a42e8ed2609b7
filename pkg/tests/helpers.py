"""Shared builders, independent oracles, and hypothesis strategies."""

from __future__ import annotations

import math
from fractions import Fraction

from hypothesis import strategies as st

from pseudoplane import MultiPoly, QDivisor, poly_divmod

F = Fraction


def upoly(var: str, coeffs: dict[int, object]) -> MultiPoly:
    return MultiPoly((var,), {(e,): c for e, c in coeffs.items()})


def grid_triples(d_max: int = 6, m_max: int = 5) -> list[tuple[int, int, int]]:
    return [
        (d, e, m)
        for d in range(1, d_max + 1)
        for e in range(1, d + 1)
        if math.gcd(e, d) == 1
        for m in range(1, m_max + 1)
    ]


# -- independent oracles ---------------------------------------------------------


def divisors_of(n: int) -> list[int]:
    n = abs(n)
    out = [k for k in range(1, n + 1) if n % k == 0]
    return out


def rational_roots(p: MultiPoly) -> dict[Fraction, int]:
    """Rational roots with multiplicities, by the rational-root theorem and
    repeated exact division (independent of any divisor arithmetic)."""
    var = p.variables[0]
    if p.is_zero():
        raise ValueError("zero polynomial")
    result: dict[Fraction, int] = {}
    v = p.valuation(var)
    if v > 0:
        result[F(0)] = v
        p = poly_divmod(p, upoly(var, {v: 1}))[0]
    if p.degree() < 1:
        return result
    scale = math.lcm(*(c.denominator for c in p.terms.values()))
    ints = {e[0]: int(c * scale) for e, c in p.terms.items()}
    a0 = ints[0]
    an = ints[max(ints)]
    candidates = {
        F(sign * a, b)
        for a in divisors_of(a0)
        for b in divisors_of(an)
        for sign in (1, -1)
    }
    for r in sorted(candidates):
        factor = upoly(var, {1: 1, 0: -r})
        mult = 0
        while True:
            quo, rem = poly_divmod(p, factor)
            if not rem.is_zero():
                break
            p = quo
            mult += 1
        if mult:
            result[r] = mult
    return result


def monoid_points(d: int, weights: tuple[int, int, int], bound: int) -> set[tuple[int, int, int]]:
    return {
        (a, b, c)
        for a in range(bound + 1)
        for b in range(bound + 1)
        for c in range(bound + 1)
        if (a, b, c) != (0, 0, 0)
        and (a * weights[0] + b * weights[1] + c * weights[2]) % d == 0
    }


def reachable_sums(generators: list[tuple[int, int, int]], bound: int) -> set[tuple[int, int, int]]:
    """All nonzero sums of generators with every coordinate <= bound (BFS)."""
    seen = {(0, 0, 0)}
    frontier = [(0, 0, 0)]
    while frontier:
        x = frontier.pop()
        for g in generators:
            y = (x[0] + g[0], x[1] + g[1], x[2] + g[2])
            if y in seen or any(c > bound for c in y):
                continue
            seen.add(y)
            frontier.append(y)
    seen.discard((0, 0, 0))
    return seen


# -- hypothesis strategies -------------------------------------------------------


def small_fractions(max_abs: int = 5, max_den: int = 4):
    return st.fractions(min_value=-max_abs, max_value=max_abs, max_denominator=max_den)


def small_upolys(var: str = "s", max_deg: int = 5, max_terms: int = 4):
    return st.dictionaries(
        st.integers(0, max_deg), small_fractions(), max_size=max_terms
    ).map(lambda d: upoly(var, d))


def small_multipolys(variables: tuple[str, ...], max_exp: int = 3, max_terms: int = 4):
    exps = st.tuples(*([st.integers(0, max_exp)] * len(variables)))
    return st.dictionaries(exps, small_fractions(), max_size=max_terms).map(
        lambda d: MultiPoly(variables, d)
    )


_POINTS = st.sampled_from([F(0), F(1), F(2), F(-1), F(1, 2), F(3), F(-1, 3)])


def small_divisors():
    return st.dictionaries(_POINTS, small_fractions(), max_size=3).map(QDivisor)


def nonpositive_divisors():
    coeffs = st.fractions(min_value=-3, max_value=0, max_denominator=4)
    return st.dictionaries(_POINTS, coeffs, max_size=3).map(QDivisor)
