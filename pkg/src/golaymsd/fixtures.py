"""Reference coefficient fixtures and exact verification against the engine.

The JSON files under fixtures/ hold the published polynomial coefficients
for the three headline curves (plus the derived 5-qubit comparison curve).
Verification is exact integer comparison, never floating point.
"""
from __future__ import annotations

import json
from importlib import resources

from .distill import extract_factored_form, norell_distillation, strange_distillation
from .exactpoly import Poly
from .qubit_golay import distill_t_5qubit, distill_t_golay23


def load_fixture(name: str) -> dict:
    ref = resources.files("golaymsd") / "fixtures" / f"{name}.json"
    return json.loads(ref.read_text())


def _diff_polys(label: str, computed: Poly, expected: Poly) -> list[str]:
    if computed == expected:
        return []
    out = [f"{label}: coefficient mismatch"]
    keys = sorted(set(computed.terms) | set(expected.terms))
    for k in keys:
        a = computed.coefficient(k)
        b = expected.coefficient(k)
        if a != b:
            out.append(f"  {label}{list(k)}: computed {a}, expected {b}")
    return out


def verify_strange() -> list[str]:
    fx = load_fixture("strange_curve")
    p, q = extract_factored_form(strange_distillation().noise_map, "delta", 3,
                                 den_multiplier=2)
    return (_diff_polys("P", p, Poly.from_json_dict(fx["P"]))
            + _diff_polys("Q", q, Poly.from_json_dict(fx["Q"])))


def verify_norell() -> list[str]:
    fx = load_fixture("norell_maps")
    e0m, esm = norell_distillation().noise_map
    p0, qn = extract_factored_form(e0m, "eps0", 2)
    ps, qn2 = extract_factored_form(esm, "epsS", 1, num_multiplier=6)
    diffs = _diff_polys("P0", p0, Poly.from_json_dict(fx["P0"]))
    diffs += _diff_polys("PS", ps, Poly.from_json_dict(fx["PS"]))
    diffs += _diff_polys("QN", qn, Poly.from_json_dict(fx["QN"]))
    if qn != qn2:
        diffs.append("QN: the two noise maps disagree on their shared denominator")
    return diffs


def verify_t23() -> list[str]:
    fx = load_fixture("t23_curve")
    curve = distill_t_golay23()
    return (_diff_polys("P", curve.p_poly, Poly.from_json_dict(fx["P"]))
            + _diff_polys("Q", curve.q_poly, Poly.from_json_dict(fx["Q"])))


def verify_t5() -> list[str]:
    fx = load_fixture("t5_curve")
    curve = distill_t_5qubit()
    return (_diff_polys("P", curve.p_poly, Poly.from_json_dict(fx["P"]))
            + _diff_polys("Q", curve.q_poly, Poly.from_json_dict(fx["Q"])))


VERIFIERS = {
    "strange": verify_strange,
    "norell": verify_norell,
    "t23": verify_t23,
    "t5": verify_t5,
}
