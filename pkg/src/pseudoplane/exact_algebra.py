"""Exact arithmetic substrate: rationals and sparse multivariate polynomials.

Coefficients are `fractions.Fraction` (arbitrary precision, always normalized,
positive denominator), so every computation downstream is exact.  A polynomial
is a sparse map from exponent vectors to nonzero coefficients:

    MultiPoly(("u", "v", "s"), {(2, 1, 0): 1})   # u^2*v
    MultiPoly(("s",), {(3,): 1, (0,): -1})       # s^3 - 1

Zero coefficients are never stored, so equality of term maps is equality of
polynomials.  Complex numbers never appear anywhere in this package: every
question about roots is answered through gcd/squarefree structure over the
rationals.

Text format (used by the CLI and in JSON reports): a signed sum of terms
``coeff*var^exp*...`` with ``^1`` and unit coefficients elided and rationals
written ``p/q``, e.g. ``s^3 - 1`` or ``-2/3*u^2*v + s``.  Terms are printed in
decreasing lexicographic order of the exponent vector (in the declared
variable order), and ``parse_poly(format_poly(p), p.variables) == p`` holds
bit-exactly.
"""

from __future__ import annotations

import re
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Union

Rational = Fraction

Exponents = tuple[int, ...]
Scalar = Union[int, Fraction]


class MultiPoly:
    """Sparse polynomial with exact rational coefficients.

    Immutable after construction; arithmetic returns new objects.  Operands of
    binary operations must share the same variable list (callers align lists
    with :meth:`with_variables` first).
    """

    __slots__ = ("_variables", "_terms", "_hash")

    def __init__(self, variables: Iterable[str], terms: Mapping[Exponents, Scalar] | Iterable[tuple[Exponents, Scalar]] = ()):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names: {variables}")
        clean: dict[Exponents, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exps, coeff in items:
            exps = tuple(exps)
            if len(exps) != len(variables):
                raise ValueError(
                    f"exponent vector {exps} does not match variable list {variables}"
                )
            if any(not isinstance(e, int) or e < 0 for e in exps):
                raise ValueError(f"exponents must be non-negative integers: {exps}")
            coeff = Fraction(coeff)
            if not coeff:
                continue
            acc = clean.get(exps)
            total = coeff if acc is None else acc + coeff
            if total:
                clean[exps] = total
            else:
                clean.pop(exps, None)
        object.__setattr__(self, "_variables", variables)
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- construction helpers ------------------------------------------------

    @classmethod
    def zero(cls, variables: Iterable[str]) -> "MultiPoly":
        return cls(variables)

    @classmethod
    def constant(cls, variables: Iterable[str], value: Scalar) -> "MultiPoly":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): Fraction(value)})

    @classmethod
    def variable(cls, variables: Iterable[str], name: str) -> "MultiPoly":
        variables = tuple(variables)
        if name not in variables:
            raise ValueError(f"unknown variable {name!r} for list {variables}")
        exps = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {exps: Fraction(1)})

    @classmethod
    def monomial(cls, variables: Iterable[str], exps: Iterable[int], coeff: Scalar = 1) -> "MultiPoly":
        return cls(tuple(variables), {tuple(exps): Fraction(coeff)})

    # -- basic queries -------------------------------------------------------

    @property
    def variables(self) -> tuple[str, ...]:
        return self._variables

    @property
    def terms(self) -> Mapping[Exponents, Fraction]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, exps: Iterable[int]) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def constant_coefficient(self) -> Fraction:
        return self._terms.get((0,) * len(self._variables), Fraction(0))

    def degree(self, var: str | None = None) -> int:
        """Total degree, or the degree in one variable; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        if var is None:
            return max(sum(exps) for exps in self._terms)
        idx = self._var_index(var)
        return max(exps[idx] for exps in self._terms)

    def valuation(self, var: str) -> int:
        """Smallest exponent of `var` appearing in any term (error on zero)."""
        if not self._terms:
            raise ValueError("zero polynomial has no valuation")
        idx = self._var_index(var)
        return min(exps[idx] for exps in self._terms)

    def leading_coefficient(self) -> Fraction:
        """Coefficient of the highest-degree term of a univariate polynomial."""
        var = _require_univariate(self)
        if not self._terms:
            return Fraction(0)
        return self._terms[max(self._terms)]

    def _var_index(self, var: str) -> int:
        try:
            return self._variables.index(var)
        except ValueError:
            raise ValueError(f"unknown variable {var!r} for list {self._variables}") from None

    # -- structural equality / hashing ---------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self._variables, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._variables == other._variables and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            h = hash((self._variables, frozenset(self._terms.items())))
            object.__setattr__(self, "_hash", h)
        return self._hash

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other._variables != self._variables:
                raise ValueError(
                    f"mismatched variable lists: {self._variables} vs {other._variables}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(self._variables, other)
        return NotImplemented

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for exps, coeff in other._terms.items():
            total = out.get(exps, Fraction(0)) + coeff
            if total:
                out[exps] = total
            else:
                out.pop(exps, None)
        return MultiPoly(self._variables, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self._variables, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return MultiPoly(self._variables)
            return MultiPoly(self._variables, {e: c * v for e, v in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[Exponents, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                total = out.get(key, Fraction(0)) + c1 * c2
                if total:
                    out[key] = total
                else:
                    del out[key]
        return MultiPoly(self._variables, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"polynomial exponent must be a non-negative integer: {exponent}")
        result = MultiPoly.constant(self._variables, 1)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def partial(self, var: str) -> "MultiPoly":
        """Formal partial derivative with respect to `var`."""
        idx = self._var_index(var)
        out: dict[Exponents, Fraction] = {}
        for exps, coeff in self._terms.items():
            e = exps[idx]
            if e == 0:
                continue
            key = exps[:idx] + (e - 1,) + exps[idx + 1:]
            out[key] = out.get(key, Fraction(0)) + coeff * e
        return MultiPoly(self._variables, out)

    def evaluate(self, assignment: Mapping[str, Scalar]) -> Fraction:
        """Evaluate at a rational point; every variable must be assigned."""
        point = []
        for v in self._variables:
            if v not in assignment:
                raise ValueError(f"missing assignment for variable {v!r}")
            point.append(Fraction(assignment[v]))
        total = Fraction(0)
        for exps, coeff in self._terms.items():
            value = coeff
            for base, e in zip(point, exps):
                if e:
                    value *= base ** e
            total += value
        return total

    def with_variables(self, variables: Iterable[str]) -> "MultiPoly":
        """Re-embed into a larger (or reordered) variable list."""
        variables = tuple(variables)
        positions = []
        for v in self._variables:
            if v not in variables:
                raise ValueError(f"cannot drop variable {v!r} (new list {variables})")
            positions.append(variables.index(v))
        out: dict[Exponents, Fraction] = {}
        for exps, coeff in self._terms.items():
            new = [0] * len(variables)
            for pos, e in zip(positions, exps):
                new[pos] = e
            out[tuple(new)] = coeff
        return MultiPoly(variables, out)

    def monic(self) -> "MultiPoly":
        """Divide a univariate polynomial by its leading coefficient (zero stays zero)."""
        _require_univariate(self)
        if not self._terms:
            return self
        return self * (1 / self.leading_coefficient())

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"MultiPoly({self._variables!r}, {format_poly(self)!r})"


# -- free-function operation aliases --------------------------------------------


def poly_add(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p + q


def poly_mul(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p * q


def poly_partial(p: MultiPoly, var: str) -> MultiPoly:
    return p.partial(var)


def _require_univariate(p: MultiPoly, q: MultiPoly | None = None) -> str:
    if len(p.variables) != 1:
        raise ValueError(f"expected a univariate polynomial, got variables {p.variables}")
    if q is not None:
        if q.variables != p.variables:
            raise ValueError(
                f"mismatched variable lists: {p.variables} vs {q.variables}"
            )
    return p.variables[0]


def poly_divmod(p: MultiPoly, q: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
    """Exact univariate division with remainder over the rationals."""
    var = _require_univariate(p, q)
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    qdeg = q.degree()
    qlead = q.leading_coefficient()
    rem = dict(p.terms)
    quo: dict[Exponents, Fraction] = {}
    while rem:
        top = max(rem)
        deg = top[0]
        if deg < qdeg:
            break
        factor = rem[top] / qlead
        shift = deg - qdeg
        quo[(shift,)] = factor
        for exps, coeff in q.terms.items():
            key = (exps[0] + shift,)
            total = rem.get(key, Fraction(0)) - factor * coeff
            if total:
                rem[key] = total
            else:
                rem.pop(key, None)
    return MultiPoly(p.variables, quo), MultiPoly(p.variables, rem)


def poly_gcd(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """Monic gcd of univariate polynomials via the Euclidean algorithm."""
    _require_univariate(p, q)
    a, b = p, q
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
    return a.monic()


def squarefree_decomposition(p: MultiPoly) -> list[tuple[MultiPoly, int]]:
    """Decompose p = lead * prod(factor_i ^ mult_i) with squarefree pairwise
    coprime monic factors and strictly increasing multiplicities (Yun).
    """
    var = _require_univariate(p)
    if p.is_zero():
        raise ValueError("squarefree decomposition of the zero polynomial")
    a = p.monic()
    if a.degree() == 0:
        return []
    da = a.partial(var)
    g = poly_gcd(a, da)
    if g.degree() == 0:
        return [(a, 1)]
    factors: list[tuple[MultiPoly, int]] = []
    c = poly_divmod(a, g)[0]
    d = poly_divmod(da, g)[0] - c.partial(var)
    i = 1
    while c.degree() > 0:
        f = poly_gcd(c, d)
        if f.degree() > 0:
            factors.append((f, i))
        c = poly_divmod(c, f)[0]
        d = poly_divmod(d, f)[0] - c.partial(var)
        i += 1
    return factors


def substitute_power(p: MultiPoly, exponent: int, new_var: str) -> MultiPoly:
    """For univariate p(t), return p(x^exponent) as a univariate polynomial in x."""
    _require_univariate(p)
    if exponent < 1:
        raise ValueError(f"substitution exponent must be positive: {exponent}")
    return MultiPoly((new_var,), {(e[0] * exponent,): c for e, c in p.terms.items()})


# -- text format ---------------------------------------------------------------

_VAR_FACTOR_RE = re.compile(r"([A-Za-z_]\w*)(?:\^(\d+))?\Z")
_NUMBER_RE = re.compile(r"\d+(?:/\d+)?\Z")


def _parse_term(chunk: str, variables: tuple[str, ...]) -> tuple[Fraction, Exponents]:
    coeff = Fraction(1)
    exps = [0] * len(variables)
    for factor in chunk.split("*"):
        factor = factor.strip()
        if not factor:
            raise ValueError(f"empty factor in term {chunk!r}")
        if _NUMBER_RE.match(factor):
            coeff *= Fraction(factor)
            continue
        m = _VAR_FACTOR_RE.match(factor)
        if not m:
            raise ValueError(f"cannot parse factor {factor!r}")
        name, power = m.group(1), int(m.group(2) or "1")
        if name not in variables:
            raise ValueError(f"unknown variable {name!r} (expected one of {variables})")
        exps[variables.index(name)] += power
    return coeff, tuple(exps)


def parse_poly(text: str, variables: Iterable[str]) -> MultiPoly:
    """Parse the polynomial text format; inverse of :func:`format_poly`."""
    variables = tuple(variables)
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    if s[0] not in "+-":
        s = "+" + s
    pieces = re.findall(r"([+-])\s*([^+\-]+)", s)
    joined = "".join(sign + chunk for sign, chunk in pieces)
    if joined.replace(" ", "") != s.replace(" ", ""):
        raise ValueError(f"cannot parse polynomial text {text!r}")
    acc: list[tuple[Exponents, Fraction]] = []
    for sign, chunk in pieces:
        coeff, exps = _parse_term(chunk.strip(), variables)
        acc.append((exps, -coeff if sign == "-" else coeff))
    return MultiPoly(variables, acc)


def format_poly(p: MultiPoly) -> str:
    """Canonical text form: terms in decreasing lexicographic exponent order."""
    if p.is_zero():
        return "0"
    parts: list[tuple[bool, str]] = []
    for exps in sorted(p.terms, reverse=True):
        coeff = p.terms[exps]
        mono = "*".join(
            v if e == 1 else f"{v}^{e}" for v, e in zip(p.variables, exps) if e
        )
        mag = abs(coeff)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{mag}*{mono}"
        else:
            body = str(mag)
        parts.append((coeff < 0, body))
    neg, body = parts[0]
    out = ("-" if neg else "") + body
    for neg, body in parts[1:]:
        out += (" - " if neg else " + ") + body
    return out
