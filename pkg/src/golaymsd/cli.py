"""Command-line interface: curve export and verification, thresholds, basin
rasters, injection demos and screening of user-supplied classical codes.

Exit codes: 0 success, 1 verification or suitability failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import fixtures as fx
from .codes import (ClassicalCode, css_from_self_orthogonal, is_self_orthogonal,
                    transversal_invariance_check)
from .distill import (ShapeFitError, basin_csv, basin_raster,
                      depolarizing_threshold_norell, distill,
                      input_wigner_strange, norell_distillation,
                      series_truncate, strange_distillation)
from .exactpoly import isolate_fixed_point
from .fields import FieldMatrix
from .qubit_golay import distill_t_5qubit, distill_t_golay23

CURVES = ("strange", "norell", "t23", "t5")


def _workers(args) -> int:
    if args.workers is not None:
        return args.workers
    return int(os.environ.get("GOLAYMSD_WORKERS", "1"))


def _curve_payload(name: str, workers: int = 1) -> dict:
    if name == "strange":
        if workers > 1:
            from .codes import golay_qutrit_code
            rf = distill(golay_qutrit_code(), input_wigner_strange(),
                         workers=workers).noise_map
        else:
            rf = strange_distillation().noise_map
        return {"curve": "strange", "delta_out": rf.to_json_dict()}
    if name == "norell":
        if workers > 1:
            from .codes import golay_qutrit_code
            from .distill import input_wigner_norell
            e0m, esm = distill(golay_qutrit_code(), input_wigner_norell(),
                               workers=workers).noise_map
        else:
            e0m, esm = norell_distillation().noise_map
        return {"curve": "norell", "eps0_out": e0m.to_json_dict(),
                "epsS_out": esm.to_json_dict()}
    curve = distill_t_golay23() if name == "t23" else distill_t_5qubit()
    return {"curve": name, "delta_out": curve.curve.to_json_dict()}


def _univariate_rf(name: str):
    if name == "strange":
        return strange_distillation().noise_map
    if name == "t23":
        return distill_t_golay23().curve
    if name == "t5":
        return distill_t_5qubit().curve
    return None


def _sample_rows(name: str, count: int = 64) -> list[str]:
    rf = _univariate_rf(name)
    if rf is None:
        # norell: sample both maps along the depolarizing ray eps0 = epsS = d/3
        e0m, esm = norell_distillation().noise_map
        top = depolarizing_threshold_norell(tol=1e-4) + 0.1
        rows = ["deltaN,eps0_out,epsS_out"]
        for i in range(count):
            x = top * i / (count - 1)
            point = {"eps0": x / 3, "epsS": x / 3}
            rows.append(f"{x:.9f},{e0m.evaluate(point):.12e},{esm.evaluate(point):.12e}")
        return rows
    var = rf.vars[0]
    thresh, _, _ = isolate_fixed_point(rf)
    top = float(thresh) + 0.1
    rows = ["delta,delta_out"]
    for i in range(count):
        x = top * i / (count - 1)
        rows.append(f"{x:.9f},{rf.evaluate({var: x}):.12e}")
    return rows


def cmd_distill(args) -> int:
    payload = _curve_payload(args.curve, workers=_workers(args))
    out = json.dumps(payload, indent=1)
    if args.out:
        with open(args.out, "w") as f:
            f.write(out + "\n")
        samples = _sample_rows(args.curve, args.samples)
        with open(args.out + ".samples.csv", "w") as f:
            f.write("\n".join(samples) + "\n")
    else:
        print(out)
    if args.verify:
        diffs = fx.VERIFIERS[args.curve]()
        if diffs:
            print(f"VERIFY {args.curve}: FAIL", file=sys.stderr)
            for d in diffs:
                print(d, file=sys.stderr)
            return 1
        print(f"VERIFY {args.curve}: PASS ({fx.load_fixture(_fixture_name(args.curve))['source']} coefficients)")
    return 0


def _fixture_name(curve: str) -> str:
    return {"strange": "strange_curve", "norell": "norell_maps",
            "t23": "t23_curve", "t5": "t5_curve"}[curve]


def cmd_threshold(args) -> int:
    if args.curve == "norell":
        tol = 1e-6
        value = depolarizing_threshold_norell(tol=tol)
        print(f"{value:.12f}")
        print(f"bracket: [{value - tol:.12f}, {value + tol:.12f}] (iteration bisection)")
        return 0
    rf = _univariate_rf(args.curve)
    mid, lo, hi = isolate_fixed_point(rf)
    print(f"{float(mid):.12f}")
    print(f"bracket: [{lo} , {hi}]")
    return 0


def cmd_basin(args) -> int:
    rows = basin_raster(args.resolution, workers=_workers(args),
                        recheck=not args.no_recheck)
    csv_text = basin_csv(rows)
    with open(args.out, "w") as f:
        f.write(csv_text)
    counts: dict[str, int] = {}
    for _, _, label in rows:
        counts[label] = counts.get(label, 0) + 1
    print(f"{len(rows)} points -> {args.out}")
    for label in sorted(counts):
        print(f"  {label}: {counts[label]}")
    return 0


def cmd_inject(args) -> int:
    from .dense import magic_states, pauli_x
    from .inject import (group_order_mod_phase, inject_uz,
                         reduce_norell_pair, reduce_strange_pair,
                         repeated_injection_walk, uz_operator, equatorial_state,
                         clifford_equivalent, is_third_level)

    st = magic_states()
    uz = uz_operator(0.0, np.pi)
    outcomes = inject_uz(uz, st.norell)
    norell_state, p_norell = reduce_norell_pair()
    strange_state, p_strange = reduce_strange_pair()
    target = np.linalg.matrix_power(pauli_x(3), 2) @ equatorial_state(np.pi / 3, 2 * np.pi / 3)
    evals, evecs = np.linalg.eigh(norell_state)
    norell_vec = evecs[:, int(np.argmax(evals))]
    conjugates = [np.linalg.matrix_power(pauli_x(3), m) @ uz @ np.linalg.matrix_power(pauli_x(3), (3 - m) % 3)
                  for m in range(3)]
    report = {
        "injected_unitary": "diag(1, 1, -1)",
        "third_level": is_third_level(uz),
        "branch_probabilities": [round(o.probability, 12) for o in outcomes],
        "strange_pair_reduction": {
            "success_probability": round(p_strange, 12),
            "output_fidelity_with_norell": round(
                float((st.norell.conj() @ strange_state @ st.norell).real), 12),
        },
        "norell_pair_reduction": {
            "success_probability": round(p_norell, 12),
            "output_fidelity_with_shifted_equatorial": round(
                float((target.conj() @ norell_state @ target).real), 12),
            "clifford_equivalent_to_uz_0_pi": clifford_equivalent(
                norell_vec, equatorial_state(0.0, np.pi)),
        },
        "conjugate_group_order_mod_phase": group_order_mod_phase(conjugates),
        "walk_mean_rounds": round(repeated_injection_walk(trials=args.trials), 3),
    }
    print(json.dumps(report, indent=1))
    return 0


def cmd_code_check(args) -> int:
    try:
        matrix = FieldMatrix.from_text(open(args.file).read())
    except (OSError, ValueError) as exc:
        print(f"cannot load matrix: {exc}", file=sys.stderr)
        return 1
    report: dict = {"file": args.file, "n": matrix.ncols, "k": matrix.nrows, "d": matrix.d}
    suitable = True
    try:
        code = ClassicalCode(matrix)
        report["full_rank"] = True
    except ValueError as exc:
        report["full_rank"] = False
        report["error"] = str(exc)
        print(json.dumps(report, indent=1))
        return 1
    report["self_orthogonal"] = is_self_orthogonal(code)
    if not report["self_orthogonal"]:
        suitable = False
    if suitable:
        try:
            qcode = css_from_self_orthogonal(code)
            report["css"] = {"n": qcode.n, "stabilizers": qcode.num_generators}
            report["transversal_invariance"] = transversal_invariance_check(qcode)
        except ValueError as exc:
            report["css_error"] = str(exc)
            suitable = False
    if suitable:
        try:
            result = distill(qcode, input_wigner_strange())
            series = series_truncate(result.noise_map, 3)
            report["strange_family_preserved"] = True
            report["noise_series_coefficients"] = {
                f"delta^{k}": str(series.coefficient((k,))) for k in range(4)
            }
            report["cubic_suppression"] = (
                series.coefficient((1,)) == 0 and series.coefficient((2,)) == 0)
        except ShapeFitError:
            report["strange_family_preserved"] = False
            suitable = False
    report["suitable_for_strange_distillation"] = suitable and report.get("cubic_suppression", False)
    print(json.dumps(report, indent=1))
    return 0 if suitable else 1


def cmd_wigner(args) -> int:
    from .dense import wigner_of

    raw = json.load(open(args.file) if args.file != "-" else sys.stdin)
    rho = np.zeros((3, 3), dtype=complex)
    for i in range(3):
        for j in range(3):
            cell = raw[i][j]
            if isinstance(cell, (int, float)):
                rho[i, j] = cell
            else:
                rho[i, j] = complex(cell[0], cell[1])
    grid = wigner_of(rho)
    print(json.dumps({"wigner": [[round(float(x), 12) for x in row] for row in grid]}, indent=1))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="golay-msd",
        description="Exact magic state distillation curves for the ternary Golay code",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("distill", help="compute a curve, optionally verify against fixtures")
    p.add_argument("curve", choices=CURVES)
    p.add_argument("--verify", action="store_true", help="exact comparison against stored coefficients")
    p.add_argument("--out", help="write curve JSON here (plus .samples.csv for univariate curves)")
    p.add_argument("--samples", type=int, default=64)
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=cmd_distill)

    p = sub.add_parser("threshold", help="fixed point of a curve, 12 decimals with bracket")
    p.add_argument("curve", choices=CURVES)
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("basin", help="classify the Norell noise simplex on a barycentric grid")
    p.add_argument("--resolution", "-r", type=int, required=True)
    p.add_argument("--out", "-o", required=True)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--no-recheck", action="store_true",
                   help="skip the 256-bit re-check of boundary-adjacent points")
    p.set_defaults(func=cmd_basin)

    p = sub.add_parser("inject", help="state-injection demonstration report")
    p.add_argument("demo", nargs="?", default="demo", choices=["demo"])
    p.add_argument("--trials", type=int, default=2000)
    p.set_defaults(func=cmd_inject)

    p = sub.add_parser("code", help="screen a classical code from a matrix file")
    code_sub = p.add_subparsers(dest="code_command", required=True)
    pc = code_sub.add_parser("check")
    pc.add_argument("file")
    pc.set_defaults(func=cmd_code_check)

    p = sub.add_parser("wigner", help="Wigner function of a user density matrix (JSON)")
    p.add_argument("file", help="path to a 3x3 JSON matrix of [re, im] entries, or - for stdin")
    p.set_defaults(func=cmd_wigner)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
