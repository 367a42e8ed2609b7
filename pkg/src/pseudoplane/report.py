"""Verification pipeline and structured reports.

Reports are plain JSON-native dicts built in a fixed field order, so
``json.loads(json.dumps(report)) == report`` and identical inputs produce
byte-identical output.  Schema (``format_version`` 1) for ``verify_triple``:

    format_version, input {d, e, m},
    derived {e_prime, k, m_prime, d_prime, l, orientation},
    exponent_check, dpd {d_plus, d_minus}, ml1,
    picard {l, bound, torsion_compatible},
    pre_normalization {ring, smooth, singular_witness},
    normalized {ring, witnesses {power_identity, normalized_smooth},
                degenerate_fiber},
    freeness, component_cycles, transitive, action_subgroup_match,
    product_structure {max_weight, all_match},
    lnd {degrees_found, nilpotency_certified},
    verdict, failed_checks, excluded_reason

verdict is "consistent", "excluded" (with excluded_reason set) or
"inconsistent" (with failed_checks non-empty).  Exit codes: 0 for consistent
or excluded-as-predicted, 1 for inconsistent, 2 for invalid input.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Any

from .cyclic_quotient import (
    SurfaceTriple,
    component_permutation,
    find_valid_lnd_degrees,
    freeness_check,
    induced_action,
    product_structure_check,
    same_subgroup,
    standard_action,
)
from .dpd_presentation import (
    PresentationDescriptor,
    classify_presentation,
    pseudoplane_dpd_pair,
    smoothness_condition,
)
from .exact_algebra import MultiPoly, format_poly
from .hypersurface_ring import (
    build_covering_ring,
    fiber_analysis,
    normalize_power_relation,
    smooth_check,
)
from .qdivisor import (
    DpdPair,
    QDivisor,
    RegimeError,
    canonical_pair,
    divisor_to_poly,
    format_divisor,
    fract_div,
    ml1_test,
    negative_locus,
    parse_divisor,
)

FORMAT_VERSION = 1

Report = dict[str, Any]

_REASON_M1 = (
    "not ML1: m=1 admits a second independent ruling of the covering surface "
    "(the fractional part of D- has fewer than two support points)"
)
_REASON_D1 = (
    "not ML1: d=1 leaves the fractional part of D- supported on a single point, "
    "although the constructed surface itself is smooth"
)


def _validate_input(d: int, e: int, m: int) -> None:
    for name, value in (("d", d), ("e", e), ("m", m)):
        if not isinstance(value, int) or value < 1:
            raise ValueError(f"{name} must be a positive integer, got {value!r}")
    if math.gcd(e, d) != 1:
        raise ValueError(
            f"e and d must be coprime for the quotient to act freely: gcd({e}, {d}) = {math.gcd(e, d)}"
        )


def verify_triple(
    d: int, e: int, m: int, max_weight: int = 8, max_exponent: int = 10
) -> Report:
    """Run the full verification pipeline for one (d, e, m) triple."""
    _validate_input(d, e, m)
    if max_weight < 0 or max_exponent < 1:
        raise ValueError("max_weight must be >= 0 and max_exponent >= 1")
    triple = SurfaceTriple.make(d, e, m)
    failed: list[str] = []

    def check(name: str, ok: bool) -> bool:
        if not ok:
            failed.append(name)
        return ok

    exponent_check = triple.k * triple.e_prime + triple.d * triple.l == 0
    check("exponent_identity", exponent_check)

    pair = pseudoplane_dpd_pair(d, triple.e_prime, m)
    ml1 = ml1_test(pair)
    check("ml1_prediction", ml1 == (d >= 2 and m >= 2))

    locus = negative_locus(pair)
    check("picard_torsion", locus.torsion_compatible and locus.l <= 1)

    l_from_divisor, q = divisor_to_poly(pair.d_minus, triple.k)
    t = MultiPoly.variable(("t",), "t")
    expected_q = (t - MultiPoly.constant(("t",), 1)) ** triple.m_prime
    check("divisor_polynomial", l_from_divisor == triple.l and q == expected_q)

    covering = build_covering_ring(triple.k, d, triple.e_prime, triple.l, q)
    s = MultiPoly.variable(("s",), "s")
    expected_p = (s ** d - MultiPoly.constant(("s",), 1)) ** triple.m_prime
    check("covering_relation", covering.P == expected_p)

    covering_smooth = smooth_check(covering)
    check("pre_normalization_smoothness", covering_smooth.smooth == (triple.m_prime == 1))

    normalized, witness = normalize_power_relation(
        triple.k, m, triple.m_prime, d, ring=covering
    )
    check("normalization_witnesses", witness.power_identity and witness.normalized_smooth)

    action = standard_action(triple)
    freeness = freeness_check(action, normalized)
    check("freeness", freeness.free)

    fiber = fiber_analysis(normalized, 0)
    check("degenerate_fiber", fiber == [(d, 1)])

    cycles, transitive = component_permutation(d, e)
    check("component_transitivity", transitive)

    subgroup_match = same_subgroup(induced_action(triple), action)
    check("action_subgroup", subgroup_match)

    if max_weight > 0:
        all_match: bool | None = all(
            product_structure_check(triple, n, n_prime).match
            for n in range(-max_weight, max_weight + 1)
            for n_prime in range(-max_weight, max_weight + 1)
        )
        check("product_structure", bool(all_match))
    else:
        all_match = None

    degrees = find_valid_lnd_degrees(triple, bound=max(max_exponent, m + triple.d))
    check("lnd_degrees", bool(degrees))

    reasons = []
    if m == 1:
        reasons.append(_REASON_M1)
    if d == 1:
        reasons.append(_REASON_D1)
    if failed:
        verdict = "inconsistent"
        excluded_reason = None
    elif not ml1:
        verdict = "excluded"
        excluded_reason = "; ".join(reasons)
    else:
        verdict = "consistent"
        excluded_reason = None

    return {
        "format_version": FORMAT_VERSION,
        "input": {"d": d, "e": e, "m": m},
        "derived": {
            "e_prime": triple.e_prime,
            "k": triple.k,
            "m_prime": triple.m_prime,
            "d_prime": triple.d_prime,
            "l": triple.l,
            "orientation": "positive-lnd-degree",
        },
        "exponent_check": exponent_check,
        "dpd": {
            "d_plus": format_divisor(pair.d_plus),
            "d_minus": format_divisor(pair.d_minus),
        },
        "ml1": ml1,
        "picard": {
            "l": locus.l,
            "bound": locus.picard_rank_lower_bound,
            "torsion_compatible": locus.torsion_compatible,
        },
        "pre_normalization": {
            "ring": covering.serialize(),
            "smooth": covering_smooth.smooth,
            "singular_witness": [
                [format_poly(f), mult] for f, mult in covering_smooth.witness
            ],
        },
        "normalized": {
            "ring": normalized.serialize(),
            "witnesses": {
                "power_identity": witness.power_identity,
                "normalized_smooth": witness.normalized_smooth,
            },
            "degenerate_fiber": [[count, mult] for count, mult in fiber],
        },
        "freeness": freeness.free,
        "component_cycles": [list(c) for c in cycles],
        "transitive": transitive,
        "action_subgroup_match": subgroup_match,
        "product_structure": {"max_weight": max_weight, "all_match": all_match},
        "lnd": {"degrees_found": degrees, "nilpotency_certified": bool(degrees)},
        "verdict": verdict,
        "failed_checks": failed,
        "excluded_reason": excluded_reason,
    }


def _recover_family_parameters(pair: DpdPair) -> Report | None:
    """Recognize pairs of the family shape (-(e'/d)[0], (e'/d)[0] - (1/m)[1]),
    exactly or up to the integral shift equivalence."""

    def boundary_m(coeff: Fraction) -> int | None:
        # coefficient at the point 1 must be a/m with a = -1 for a smooth surface
        if coeff == 0:
            return None
        if not smoothness_condition(coeff.denominator, coeff.numerator):
            return None
        return coeff.denominator

    d_plus, d_minus = pair.d_plus, pair.d_minus
    c0 = d_plus.coefficient(0)
    if d_plus.support == (Fraction(0),) and -1 <= c0 < 0:
        ratio = -c0
        m = boundary_m(d_minus.coefficient(1))
        if m is not None and d_minus == QDivisor({0: ratio, 1: Fraction(-1, m)}):
            return {
                "d": ratio.denominator,
                "e_prime": ratio.numerator,
                "m": m,
                "up_to_equivalence": False,
            }
    fractional = fract_div(d_plus)
    if any(p != 0 for p in fractional.support):
        return None
    total = pair.total
    if total.support != (Fraction(1),):
        return None
    m = boundary_m(total.coefficient(1))
    if m is None:
        return None
    ratio = 1 - fractional.coefficient(0)
    return {
        "d": ratio.denominator,
        "e_prime": ratio.numerator,
        "m": m,
        "up_to_equivalence": True,
    }


def classify_pair(
    d_plus_text: str, d_minus_text: str, lnd_degree: int | None = None
) -> Report:
    """Classify a raw divisor pair: action class, uniqueness of the ruling,
    Picard compatibility, canonical form, and recovered family parameters."""
    d_plus = parse_divisor(d_plus_text)
    d_minus = parse_divisor(d_minus_text)
    pair = DpdPair(d_plus, d_minus)  # raises ValueError with pointwise witness

    action = classify_presentation(
        PresentationDescriptor("hyperbolic", pair=pair, lnd_degree=lnd_degree)
    )
    locus = negative_locus(pair)
    ml1: bool | None
    ml1_note: str | None
    try:
        ml1 = ml1_test(pair)
        ml1_note = None
    except RegimeError as exc:
        ml1 = None
        ml1_note = str(exc)
    canonical = canonical_pair(pair)
    recovered = _recover_family_parameters(pair)

    if not action.admissible:
        verdict = "excluded"
        excluded_reason = action.reason
    elif ml1 is None:
        verdict = "outside-regime"
        excluded_reason = None
    elif not ml1:
        verdict = "excluded"
        excluded_reason = (
            "not ML1: the fractional part of D- is supported on fewer than two points"
        )
    else:
        verdict = "admissible"
        excluded_reason = None

    return {
        "format_version": FORMAT_VERSION,
        "input": {
            "d_plus": d_plus_text,
            "d_minus": d_minus_text,
            "lnd_degree": lnd_degree,
        },
        "action_class": {
            "kind": action.kind,
            "admissible": action.admissible,
            "reason": action.reason,
        },
        "ml1": ml1,
        "ml1_note": ml1_note,
        "picard": {
            "l": locus.l,
            "bound": locus.picard_rank_lower_bound,
            "torsion_compatible": locus.torsion_compatible,
        },
        "canonical": {
            "d_plus": format_divisor(canonical.d_plus),
            "d_minus": format_divisor(canonical.d_minus),
        },
        "recovered": recovered,
        "verdict": verdict,
        "excluded_reason": excluded_reason,
    }


def sweep(
    d_max: int,
    m_max: int,
    max_weight: int = 8,
    max_exponent: int = 10,
    include_reports: bool = False,
) -> Report:
    """Verify every admissible triple with d <= d_max, e in [1, d] coprime to
    d, m <= m_max; rows are ordered by (d, e, m)."""
    if d_max < 1 or m_max < 1:
        raise ValueError("d_max and m_max must be positive integers")
    rows: list[Report] = []
    counts = {"consistent": 0, "excluded": 0, "inconsistent": 0}
    for d in range(1, d_max + 1):
        for e in range(1, d + 1):
            if math.gcd(e, d) != 1:
                continue
            for m in range(1, m_max + 1):
                report = verify_triple(d, e, m, max_weight=max_weight, max_exponent=max_exponent)
                counts[report["verdict"]] += 1
                row: Report = {
                    "d": d,
                    "e": e,
                    "m": m,
                    "verdict": report["verdict"],
                    "failed_checks": report["failed_checks"],
                    "excluded_reason": report["excluded_reason"],
                }
                if include_reports:
                    row["report"] = report
                rows.append(row)
    counts["total"] = len(rows)
    return {
        "format_version": FORMAT_VERSION,
        "params": {"d_max": d_max, "m_max": m_max, "max_weight": max_weight},
        "rows": rows,
        "aggregate": counts,
    }


def verify_exit_code(report: Report) -> int:
    return 0 if report["verdict"] in ("consistent", "excluded") else 1


def sweep_exit_code(result: Report) -> int:
    return 0 if result["aggregate"]["inconsistent"] == 0 else 1
