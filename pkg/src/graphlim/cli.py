"""Batch experiment runner.

Subcommands: generate, sweep, densities, degree-dist, compare, battery.
All outputs are deterministic byte-for-byte given the command line: reals
are printed with 17 significant digits, JSON keys are sorted, and every
random draw is seeded by a hash of (model id, n, seed index), so adding
grid points never perturbs existing rows.  Passing --plot additionally
renders a figure next to each delimited output file.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import os
import re
import sys
import time
from typing import Sequence

from .densities import (PROBES, degree_profile, density_vector,
                        limit_equiv_test, write_density_csv)
from .errors import ModelSpecError, ParameterError
from .geometries import BATTERY, forbidden_battery
from .graphs import generate, write_edge_list, write_graph_json
from .intervals import (BlockUnion, CompleteL, CompleteR, CurveSupported,
                        Empirical, FixedLength, Line, LineMixture,
                        MeasureModel, MonotoneCurve, TiltedRectangle,
                        UniformTriangle, read_intervals, write_intervals)
from .observables import chromatic_coloring, clique_number


def fmt(x: float) -> str:
    return f"{x:.17g}"


def derive_seed(model_id: str, n: int, seed: int) -> int:
    """Stable per-cell RNG seed from the (model, n, seed-index) triple."""
    digest = hashlib.sha256(f"{model_id}|{n}|{seed}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


# ---------------------------------------------------------------------------
# model mini-language


def _model_from_config(path: str) -> MeasureModel:
    with open(path) as fh:
        cfg = json.load(fh)
    kind = cfg.get("kind")
    if kind == "line-mixture":
        return LineMixture(tuple(cfg["weights"]), tuple(cfg["a_values"]))
    if kind == "curve":
        curve = MonotoneCurve.from_points(tuple(p) for p in cfg["points"])
        return CurveSupported(curve)
    raise ModelSpecError(f"unknown model config kind {kind!r}")


def parse_model(spec: str) -> MeasureModel:
    """Parse a model spec: flat `name[:params]` or `@config.json`."""
    if spec.startswith("@"):
        return _model_from_config(spec[1:])
    name, _, params = spec.partition(":")
    try:
        if name == "uniform" and not params:
            return UniformTriangle()
        if name == "line":
            return Line(float(params))
        if name == "fixed":
            return FixedLength(float(params))
        if name == "tilted":
            return TiltedRectangle(float(params))
        if name == "complete-l" and not params:
            return CompleteL()
        if name == "complete-r" and not params:
            return CompleteR()
        if name == "block":
            return BlockUnion(tuple(float(p) for p in params.split(",")))
        if name == "empirical":
            return Empirical(tuple(read_intervals(params)))
    except ValueError as exc:
        raise ModelSpecError(f"bad parameters in model spec {spec!r}: {exc}")
    raise ModelSpecError(f"unknown model spec {spec!r}")


def _slug(model_id: str) -> str:
    return re.sub(r"[^A-Za-z0-9.-]+", "-", model_id)


def _write_rows(path, fieldnames: list[str], rows: list[dict],
                out_format: str) -> None:
    if out_format == "json":
        with open(path, "w") as fh:
            json.dump(rows, fh, sort_keys=True, indent=2)
            fh.write("\n")
        return
    with open(path, "w") as fh:
        fh.write(",".join(fieldnames) + "\n")
        for row in rows:
            cells = [fmt(row[k]) if isinstance(row[k], float) else str(row[k])
                     for k in fieldnames]
            fh.write(",".join(cells) + "\n")


def _figure_path(out_path: str, suffix: str = "") -> str:
    stem, _ = os.path.splitext(out_path)
    return f"{stem}{suffix}.png"


# ---------------------------------------------------------------------------
# subcommands


def cmd_generate(args) -> int:
    model = parse_model(args.model)
    os.makedirs(args.out, exist_ok=True)
    for n in args.n:
        for seed in args.seed:
            g = generate(model, n, derive_seed(model.model_id, n, seed))
            stem = os.path.join(
                args.out, f"{_slug(model.model_id)}_n{n}_s{seed}")
            write_intervals(stem + ".intervals", g.intervals)
            write_edge_list(stem + ".edges", g.graph)
            write_graph_json(stem + ".json", g)
            if args.plot:
                from .plots import plot_intervals
                plot_intervals(g.intervals, stem + ".png")
    return 0


def _sweep_row(model: MeasureModel, n: int, seed: int,
               timings: bool) -> dict:
    if n < 1:
        raise ParameterError("sweep requires n >= 1")
    t0 = time.perf_counter()
    g = generate(model, n, derive_seed(model.model_id, n, seed))
    degs = g.graph.degrees()
    omega = clique_number(g).omega
    chi = max(chromatic_coloring(g)) + 1
    row = {
        "model_id": model.model_id,
        "n": n,
        "seed": seed,
        "edge_density": 2.0 * g.graph.edge_count() / n ** 2,
        "omega": omega,
        "chi": chi,
        "omega_over_n": omega / n,
        "chi_over_n": chi / n,
        "max_degree_is_full": int(int(degs.max()) == n - 1),
        "min_degree_scaled": float(degs.min()) / math.sqrt(n),
    }
    if timings:
        row["runtime_ms"] = (time.perf_counter() - t0) * 1000.0
    return row


def cmd_sweep(args) -> int:
    model = parse_model(args.model)
    rows = [_sweep_row(model, n, seed, args.timings)
            for n in args.n for seed in args.seed]
    fields = list(rows[0].keys())
    _write_rows(args.out, fields, rows, args.format)
    if args.plot:
        from .plots import plot_sweep
        plot_sweep(rows, _figure_path(args.out))
    return 0


def cmd_densities(args) -> int:
    model = parse_model(args.model)
    vec = density_vector(model, args.budget,
                         derive_seed(model.model_id, 0, args.seed[0]))
    if args.format == "json":
        payload = {name: {"value": est.value, "stderr": est.stderr,
                          "samples": est.samples}
                   for name, est in vec.items()}
        with open(args.out, "w") as fh:
            json.dump(payload, fh, sort_keys=True, indent=2)
            fh.write("\n")
    else:
        write_density_csv(args.out, vec)
    if args.plot:
        from .plots import plot_density_vector
        plot_density_vector(vec, _figure_path(args.out))
    return 0


def cmd_degree_dist(args) -> int:
    model = parse_model(args.model)
    dist = degree_profile(model, args.outer, args.inner,
                          derive_seed(model.model_id, args.outer,
                                      args.seed[0]))
    n = len(dist)
    rows = [{"degree_fraction": float(v), "cdf": (i + 1) / n}
            for i, v in enumerate(dist.values)]
    _write_rows(args.out, ["degree_fraction", "cdf"], rows, args.format)
    if args.plot:
        from .plots import plot_degree_cdf
        plot_degree_cdf(dist, _figure_path(args.out))
    return 0


def cmd_compare(args) -> int:
    if not args.model2:
        raise ModelSpecError("compare needs --model2")
    m1, m2 = parse_model(args.model), parse_model(args.model2)
    verdict = limit_equiv_test(m1, m2, args.budget, args.seed[0])
    payload = {
        "model1": m1.model_id,
        "model2": m2.model_id,
        "consistent": verdict.consistent,
        "witness": verdict.witness,
        "gap": verdict.gap,
        "threshold": verdict.threshold,
        "probes": {
            name: {
                "value1": verdict.vector1[name].value,
                "stderr1": verdict.vector1[name].stderr,
                "value2": verdict.vector2[name].value,
                "stderr2": verdict.vector2[name].stderr,
                "gap": abs(verdict.vector1[name].value
                           - verdict.vector2[name].value),
            }
            for name in PROBES
        },
    }
    with open(args.out, "w") as fh:
        json.dump(payload, fh, sort_keys=True, indent=2)
        fh.write("\n")
    if args.plot:
        from .plots import plot_compare
        plot_compare(verdict.vector1, verdict.vector2,
                     _figure_path(args.out))
    return 0


def cmd_battery(args) -> int:
    model = parse_model(args.model)
    rows = []
    for n in args.n:
        for seed in args.seed:
            g = generate(model, n, derive_seed(model.model_id, n, seed))
            values = forbidden_battery(g.graph)
            row = {"model_id": model.model_id, "n": n, "seed": seed}
            row.update(values)
            rows.append(row)
    fields = ["model_id", "n", "seed"] + list(BATTERY)
    _write_rows(args.out, fields, rows, args.format)
    if args.plot:
        from .plots import plot_battery
        last = {k: rows[-1][k] for k in BATTERY}
        plot_battery(last, _figure_path(args.out))
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphlim",
        description="Random interval graph experiments: generation, "
                    "densities, observable sweeps, equivalence tests.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_grid: bool):
        p.add_argument("--model", required=True,
                       help="model spec, e.g. uniform, line:0.3, fixed:0.25,"
                            " block:0.3,0.7, empirical:FILE, @config.json")
        p.add_argument("--seed", type=int, action="append",
                       help="seed index (repeatable)")
        p.add_argument("--out", required=True, help="output path")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--plot", action="store_true",
                       help="also render a figure next to the output")
        if needs_grid:
            p.add_argument("--n", type=int, action="append",
                           help="sample size (repeatable)")

    p = sub.add_parser("generate", help="write interval/edge/JSON files")
    common(p, needs_grid=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("sweep", help="observables over an n-grid")
    common(p, needs_grid=True)
    p.add_argument("--timings", action="store_true",
                   help="append a runtime_ms column (breaks byte determinism)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("densities", help="probe density vector of a model")
    common(p, needs_grid=False)
    p.add_argument("--budget", type=int, default=100_000)
    p.set_defaults(func=cmd_densities)

    p = sub.add_parser("degree-dist", help="limit degree distribution")
    common(p, needs_grid=False)
    p.add_argument("--outer", type=int, default=10_000)
    p.add_argument("--inner", type=int, default=1_000)
    p.set_defaults(func=cmd_degree_dist)

    p = sub.add_parser("compare", help="density-vector equivalence test")
    common(p, needs_grid=False)
    p.add_argument("--model2", required=True, help="second model spec")
    p.add_argument("--budget", type=int, default=100_000)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("battery", help="forbidden-pattern induced densities")
    common(p, needs_grid=True)
    p.set_defaults(func=cmd_battery)

    return parser


def _validate(args) -> None:
    if getattr(args, "n", None) is not None and not args.n:
        raise ParameterError("need at least one --n")
    if hasattr(args, "n") and args.n is None:
        raise ParameterError("need at least one --n")
    if not args.seed:
        raise ParameterError("need at least one --seed")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _validate(args)
        return args.func(args)
    except (ModelSpecError, ParameterError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
