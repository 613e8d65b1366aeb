"""Command-line interface: check, simplex, simulate, sweep1d, wangjiang.

All randomness flows through one seed (default 42) echoed into every output;
identical flags and seed produce byte-identical files.  Exit codes: 0 all
pass, 1 failure, 2 inconclusive, 3 surface did not converge, 64 malformed
model file or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .criteria import run_criteria
from .modelio import LoadedModel, ModelFileError, load_model_file
from .models import ModelParameterError
from .periodic import (
    IntegrationConfig,
    check_a_conditions,
    integrate,
    is_competitive,
    wang_jiang_check,
)
from .simplex import (
    SurfaceDegeneracyError,
    compute_attractor_cloud,
    compute_carrying_simplex,
    sweep_1d,
    unordered_check_points,
    verify_surface,
    write_cloud_csv,
    write_surface_csv,
    write_sweep_csv,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INCONCLUSIVE = 2
EXIT_NO_CONVERGENCE = 3
EXIT_USAGE = 64


def _fmt(value: float) -> str:
    return format(value, ".17g")


def _write_json(payload: dict, path) -> None:
    Path(path).write_text(json.dumps(payload, indent=2) + "\n")


def _common_flags(sub: argparse.ArgumentParser, model_required: bool = True) -> None:
    if model_required:
        sub.add_argument("--model", required=True, help="model description JSON")
    sub.add_argument("--out", default=None, help="output path")
    sub.add_argument("--seed", type=int, default=42)
    sub.add_argument("--tol", type=float, default=1e-10)
    sub.add_argument("--grid", type=int, default=None, help="grid resolution m")
    sub.add_argument("--samples", type=int, default=10_000)
    sub.add_argument("--max-iter", type=int, default=5_000)
    sub.add_argument("--format", choices=("json", "csv"), default="json")
    sub.add_argument(
        "--ode-steps", type=int, default=256, help="RK4 steps per period"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="carrysim",
        description="Carrying-simplex criteria, computation and simulation "
        "for competitive population maps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="run every criterion and write a report")
    _common_flags(p_check)
    p_check.set_defaults(func=cmd_check)

    p_simplex = sub.add_parser("simplex", help="compute and verify the carrying simplex")
    _common_flags(p_simplex)
    p_simplex.add_argument(
        "--force", action="store_true", help="compute even if criteria fail"
    )
    p_simplex.set_defaults(func=cmd_simplex)

    p_sim = sub.add_parser("simulate", help="iterate the map or integrate the flow")
    _common_flags(p_sim)
    p_sim.add_argument("--x0", required=True, help="comma-separated initial state")
    p_sim.add_argument("--steps", type=int, default=100)
    p_sim.set_defaults(func=cmd_simulate)

    p_sweep = sub.add_parser("sweep1d", help="classify the scalar map over a b range")
    _common_flags(p_sweep, model_required=False)
    p_sweep.add_argument("--a", type=float, default=1.0)
    p_sweep.add_argument("--b-min", type=float, required=True)
    p_sweep.add_argument("--b-max", type=float, required=True)
    p_sweep.add_argument("--b-count", type=int, default=100)
    p_sweep.add_argument("--steps", type=int, default=1_000)
    p_sweep.add_argument("--burn-in", type=int, default=None)
    p_sweep.add_argument("--record", type=int, default=128)
    p_sweep.set_defaults(func=cmd_sweep1d)

    p_wj = sub.add_parser(
        "wangjiang", help="ratio monotonicity of ordered solution pairs"
    )
    _common_flags(p_wj)
    p_wj.add_argument("--pairs", type=int, default=20)
    p_wj.add_argument("--t-span", type=float, default=3.0)
    p_wj.set_defaults(func=cmd_wangjiang)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ModelFileError, ModelParameterError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SurfaceDegeneracyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE


def _collect_conditions(loaded: LoadedModel, args) -> list:
    config = IntegrationConfig(steps_per_period=args.ode_steps)
    conditions = []
    if loaded.system is not None:
        conditions.extend(check_a_conditions(loaded.system))
    model = loaded.map_model(config)
    report = run_criteria(
        model,
        grid_resolution=args.grid or 16,
        samples=args.samples,
        seed=args.seed,
    )
    conditions.extend(report.conditions)
    return conditions


def cmd_check(args) -> int:
    loaded = load_model_file(args.model)
    conditions = _collect_conditions(loaded, args)

    payload = {
        "model": str(args.model),
        "type": loaded.family,
        "seed": args.seed,
        "grid_resolution": args.grid or 16,
        "samples": args.samples,
        "conditions": [c.to_record() for c in conditions],
    }
    out = args.out or "criteria_report.json"
    if args.format == "json":
        _write_json(payload, out)
    else:
        with open(out, "w", newline="") as fh:
            fh.write("id,verdict,worst\n")
            for c in conditions:
                worst = "" if c.worst is None else _fmt(c.worst)
                fh.write(f"{c.id},{c.verdict},{worst}\n")

    for c in conditions:
        extra = "" if c.worst is None else f"  (worst {c.worst:.6g})"
        print(f"{c.id}: {c.verdict}{extra}")
    print(f"report written to {out}")

    if any(c.verdict == "fail" for c in conditions):
        return EXIT_FAIL
    if any(c.verdict == "inconclusive" for c in conditions):
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def cmd_simplex(args) -> int:
    loaded = load_model_file(args.model)
    config = IntegrationConfig(steps_per_period=args.ode_steps)
    model = loaded.map_model(config)

    if not args.force:
        conditions = _collect_conditions(loaded, args)
        failing = [c.id for c in conditions if c.verdict == "fail"]
        if failing:
            print(
                f"criteria failed ({', '.join(failing)}); re-run with --force "
                "to compute anyway",
                file=sys.stderr,
            )
            return EXIT_FAIL

    out = Path(args.out or "surface.csv")
    meta_path = out.with_suffix(".meta.json")

    if model.n <= 3:
        surface = compute_carrying_simplex(
            model, m=args.grid, tol=args.tol, max_iter=args.max_iter
        )
        verification = verify_surface(
            surface,
            model,
            samples=min(args.samples, 2_000),
            starts=100,
            steps=400,
            seed=args.seed,
        )
        write_surface_csv(surface, out)
        meta = surface.metadata()
        meta["seed"] = args.seed
        meta["verification"] = verification.to_dict()
        _write_json(meta, meta_path)
        print(
            f"surface: {len(surface.grid)} nodes, {surface.iterations} iterations, "
            f"final delta {surface.final_delta:.3e}"
        )
        print(f"axial radii: {[float(r) for r in surface.axis_radii()]}")
        print(f"invariance residual: {verification.invariance:.3e}")
        print(f"unordered: {'pass' if verification.unordered.ok else 'FAIL'}")
        print(f"asymptotic: {'pass' if verification.asymptotic.passed else 'FAIL'}")
        print(f"surface written to {out}, metadata to {meta_path}")
        if not surface.converged:
            print("surface did NOT converge; results are best-effort", file=sys.stderr)
            return EXIT_NO_CONVERGENCE
        return EXIT_OK

    cloud = compute_attractor_cloud(
        model, n_points=args.samples, steps=200, seed=args.seed
    )
    unordered = unordered_check_points(cloud)
    write_cloud_csv(cloud, out)
    meta = {
        "mode": "point_cloud",
        "points": int(cloud.shape[0]),
        "steps": 200,
        "seed": args.seed,
        "unordered": unordered.to_dict(),
    }
    _write_json(meta, meta_path)
    print(f"point cloud written to {out} ({cloud.shape[0]} points)")
    return EXIT_OK


def _parse_x0(text: str, n: int) -> np.ndarray:
    try:
        values = np.array([float(v) for v in text.split(",")], dtype=float)
    except ValueError as exc:
        raise ModelFileError(f"cannot parse --x0 {text!r}: {exc}") from exc
    if values.size != n:
        raise ModelFileError(f"--x0 must have {n} coordinates, got {values.size}")
    if np.any(values < 0):
        raise ModelFileError("--x0 coordinates must be nonnegative")
    return values


def cmd_simulate(args) -> int:
    loaded = load_model_file(args.model)
    x0 = _parse_x0(args.x0, loaded.n)
    out = args.out or "trajectory.csv"
    n = loaded.n

    if loaded.system is not None:
        config = IntegrationConfig(steps_per_period=args.ode_steps)
        traj = integrate(loaded.system, x0, (0.0, float(args.steps)), config)
        with open(out, "w", newline="") as fh:
            fh.write("t," + ",".join(f"u_{i + 1}" for i in range(n)) + "\n")
            for t, row in zip(traj.times, traj.states):
                fh.write(",".join([_fmt(t)] + [_fmt(v) for v in row]) + "\n")
    else:
        model = loaded.model
        with open(out, "w", newline="") as fh:
            fh.write("k," + ",".join(f"x_{i + 1}" for i in range(n)) + "\n")
            x = x0
            fh.write(",".join(["0"] + [_fmt(v) for v in x]) + "\n")
            for k in range(1, args.steps + 1):
                x = model.step(x)
                fh.write(",".join([str(k)] + [_fmt(v) for v in x]) + "\n")
    print(f"trajectory written to {out}")
    return EXIT_OK


def cmd_sweep1d(args) -> int:
    results = sweep_1d(
        args.a,
        args.b_min,
        args.b_max,
        steps=args.steps,
        burn_in=args.burn_in,
        record=args.record,
        b_count=args.b_count,
    )
    out = args.out or "sweep.csv"
    write_sweep_csv(results, out)
    counts: dict[str, int] = {}
    for res in results:
        counts[res.classification] = counts.get(res.classification, 0) + 1
    for name in sorted(counts):
        print(f"{name}: {counts[name]}")
    print(f"sweep written to {out}")
    return EXIT_OK


def cmd_wangjiang(args) -> int:
    loaded = load_model_file(args.model)
    if loaded.system is None:
        print("error: wangjiang requires a periodic_lv model", file=sys.stderr)
        return EXIT_USAGE
    system = loaded.system
    ok, witness = is_competitive(system)
    if not ok:
        print(
            "refusing: system is not competitive; witness "
            f"{json.dumps(witness.to_record())}",
            file=sys.stderr,
        )
        return EXIT_FAIL

    config = IntegrationConfig(steps_per_period=args.ode_steps)
    rng = np.random.default_rng(args.seed)
    base = np.array(
        [b.const for b in system.B]
    ) / np.array([system.A[i][i].const for i in range(system.n)])
    records = []
    all_passed = True
    min_slope = np.inf
    for _ in range(args.pairs):
        u0 = base * (0.05 + 0.25 * rng.random(system.n))
        v0 = u0 * (1.3 + 0.7 * rng.random(system.n))
        result = wang_jiang_check(system, u0, v0, (0.0, args.t_span), config)
        rec = result.to_dict()
        rec["u0"] = u0.tolist()
        rec["v0"] = v0.tolist()
        records.append(rec)
        all_passed &= result.passed
        min_slope = min(min_slope, result.min_slope)

    payload = {
        "model": str(args.model),
        "seed": args.seed,
        "pairs": args.pairs,
        "t_span": args.t_span,
        "all_passed": bool(all_passed),
        "min_slope": float(min_slope),
        "results": records,
    }
    out = args.out or "wangjiang.json"
    _write_json(payload, out)
    print(f"{'pass' if all_passed else 'FAIL'}: min ratio slope {min_slope:.3e}")
    print(f"report written to {out}")
    return EXIT_OK if all_passed else EXIT_FAIL


if __name__ == "__main__":
    raise SystemExit(main())
