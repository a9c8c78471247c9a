"""Command-line front end: generate fixtures, run pipelines, verify, export.

Subcommands: gen, build, schedule, verify, export.  All randomness flows from
--seed; identical configurations produce byte-identical JSON reports.
The TSCODES_LOG environment variable controls the log level.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import Optional

from . import analyzer, colex, embed_graph, hypergraph, lattices, scheduler
from .errors import BadParams, TscodesError, UnknownFormat

log = logging.getLogger("tscodes")


def _setup_logging() -> None:
    level = os.environ.get("TSCODES_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING))


def _write(out: Optional[str], text: str) -> None:
    if out is None or out == "-":
        sys.stdout.write(text + "\n")
    else:
        Path(out).write_text(text + "\n")


def _load_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except FileNotFoundError:
        raise UnknownFormat(f"no such file: {path}")
    except json.JSONDecodeError as exc:
        raise UnknownFormat(f"{path}: not valid JSON ({exc})")


def _sniff(data: dict) -> str:
    if "rank2" in data or "rank3" in data:
        return "hypergraph"
    if "face_color" in data:
        return "colex"
    if "edges" in data and "rotation" in data:
        return "graph"
    raise UnknownFormat("input JSON is neither graph, colex nor hypergraph")


def cmd_gen(args: argparse.Namespace) -> int:
    fam = args.family
    p = args.params
    if fam == "torus-grid":
        if len(p) != 2:
            raise BadParams("torus-grid needs m n")
        g = lattices.torus_grid(p[0], p[1])
        _write(args.out, embed_graph.to_json(g))
    elif fam == "triangular-torus":
        if len(p) != 2:
            raise BadParams("triangular-torus needs m n")
        g = lattices.triangular_torus(p[0], p[1])
        _write(args.out, embed_graph.to_json(g))
    elif fam == "theta":
        _write(args.out, embed_graph.to_json(lattices.theta_graph()))
    elif fam == "petersen":
        _write(args.out, embed_graph.to_json(lattices.petersen_graph()))
    elif fam == "honeycomb-torus":
        if len(p) != 2:
            raise BadParams("honeycomb-torus needs m n")
        g = lattices.honeycomb_torus(p[0], p[1])
        cx = colex.validate_colex(g)
        if cx is None:
            raise BadParams(
                f"honeycomb-torus {p[0]}x{p[1]} is not 3-face-colorable; "
                "use multiples of 3"
            )
        _write(args.out, colex.to_json(cx))
    elif fam == "lattice-4-6-12":
        if len(p) != 2:
            raise BadParams("lattice-4-6-12 needs m n")
        cx = colex.construct_A(lattices.triangular_torus(p[0], p[1]))
        _write(args.out, colex.to_json(cx))
    elif fam == "lattice-4-8":
        if len(p) != 2:
            raise BadParams("lattice-4-8 needs m n")
        cx = colex.construct_A(lattices.torus_grid(p[0], p[1]))
        _write(args.out, colex.to_json(cx))
    else:
        raise BadParams(f"unknown family {fam!r}")
    return 0


def _build_code(args: argparse.Namespace) -> analyzer.SubsystemCode:
    data = _load_json(args.input)
    kind = _sniff(data)
    if args.pipeline == "theorem2":
        if kind != "graph":
            raise UnknownFormat("theorem2 expects a plain graph JSON")
        return analyzer.theorem2_pipeline(embed_graph.from_json_dict(data))
    if args.pipeline == "theorem3":
        if kind != "graph":
            raise UnknownFormat("theorem3 expects a plain graph JSON")
        return analyzer.theorem3_pipeline(embed_graph.from_json_dict(data))
    if args.pipeline == "bombin":
        if kind != "colex":
            raise UnknownFormat("bombin expects a colex JSON")
        return analyzer.bombin_pipeline(colex.from_json_dict(data))
    if args.pipeline == "custom":
        if kind == "hypergraph":
            h = hypergraph.from_json_dict(data)
        elif kind == "colex":
            h = hypergraph.from_colex(colex.from_json_dict(data))
        else:
            h = hypergraph.from_graph(embed_graph.from_json_dict(data))
        rep = hypergraph.validate_H(h)
        if not rep.all_ok:
            raise BadParams(f"input violates H1-H4: {rep}")
        if not rep.coloring_proper.ok or not rep.rank3_monochrome.ok:
            coloring = hypergraph.three_edge_color(h)
            if coloring is None:
                from .errors import NotThreeEdgeColorable

                raise NotThreeEdgeColorable(
                    "no proper 3-edge-coloring with monochromatic rank-3 edges"
                )
            h = h.recolored(coloring)
        return analyzer.build_code(h)
    raise BadParams(f"unknown pipeline {args.pipeline!r}")


def _full_report(code: analyzer.SubsystemCode, coset_cap: int) -> dict:
    checks: dict = {}
    ell = None
    try:
        ell = analyzer.distance_bound(code, coset_cap)
    except TscodesError as exc:
        checks["distance_bound"] = f"skipped: {exc}"
    if code.pipeline is not None:
        dep = analyzer.dependency_check(code)
        checks["dependencies"] = {name: ok for name, ok in dep.identities}
        checks["independent_generators"] = dep.rank
        nt = analyzer.nontrivial_cycle_checks(code, coset_cap)
        checks["nontrivial_cosets"] = nt.cosets
        checks["nontrivial_have_rank3"] = nt.all_have_rank3
        checks["nontrivial_outside_gauge"] = nt.none_in_gauge
        dv = analyzer.distinctness_check(code)
        checks["six_valent_on_contraction"] = dv.six_valent
        checks["simplified_is_colex"] = dv.simplified_is_colex
        checks["distinct_from_dual_expansion"] = dv.distinct
    checks["exact_distance"] = analyzer.exact_distance(code)
    return analyzer.code_report(code, ell, checks)


def cmd_build(args: argparse.Namespace) -> int:
    code = _build_code(args)
    report = _full_report(code, args.coset_cap)
    _write(args.out, analyzer.report_json(report))
    return 0


def cmd_schedule(args: argparse.Namespace) -> int:
    if args.trials < 1:
        raise BadParams("trials must be >= 1")
    code = _build_code(args)
    sched = scheduler.build_schedule(code, args.model)
    rep = scheduler.simulate_syndrome(
        code, sched, trials=args.trials, seed=args.seed, strict=False
    )
    payload = scheduler.schedule_json_dict(sched)
    payload["simulation"] = {
        "trials": rep.trials,
        "agreement": rep.agreement,
        "direct_agreement": rep.direct_agreement,
        "idempotent": rep.idempotent,
        "varying_links": rep.varying_links,
        "failures": [list(w) for w in rep.failures],
        "seed": args.seed,
    }
    _write(args.out, json.dumps(payload, indent=2, sort_keys=True))
    if rep.agreement < 1.0 or rep.direct_agreement < 1.0:
        log.error("syndrome simulation found inconsistencies")
        return 1
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    code = _build_code(args)
    report = _full_report(code, args.coset_cap)
    ok = True
    if code.predicted is not None:
        got = {
            "n": code.n,
            "k": code.k,
            "r": code.r,
            "s": code.s,
        }
        ok &= all(code.predicted[key] == got[key] for key in got)
    checks = report["checks"]
    for key in (
        "nontrivial_have_rank3",
        "nontrivial_outside_gauge",
    ):
        if key in checks:
            ok &= bool(checks[key])
    if "dependencies" in checks:
        ok &= all(checks["dependencies"].values())
    report["verified"] = bool(ok)
    _write(args.out, analyzer.report_json(report))
    return 0 if ok else 1


def cmd_export(args: argparse.Namespace) -> int:
    data = _load_json(args.input)
    kind = _sniff(data)
    if kind == "graph":
        text = embed_graph.to_dot(embed_graph.from_json_dict(data))
    elif kind == "colex":
        text = colex.to_dot(colex.from_json_dict(data))
    else:
        text = hypergraph.to_dot(hypergraph.from_json_dict(data))
    _write(args.out, text)
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tscodes",
        description="Topological subsystem codes from graphs and hypergraphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a fixture lattice")
    p.add_argument(
        "family",
        choices=[
            "torus-grid",
            "triangular-torus",
            "theta",
            "petersen",
            "honeycomb-torus",
            "lattice-4-6-12",
            "lattice-4-8",
        ],
    )
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gen)

    for name, func in (
        ("build", cmd_build),
        ("verify", cmd_verify),
        ("schedule", cmd_schedule),
    ):
        p = sub.add_parser(name)
        p.add_argument("input", help="graph / colex / hypergraph JSON file")
        p.add_argument(
            "--pipeline",
            choices=["theorem2", "theorem3", "bombin", "custom"],
            default="custom",
        )
        p.add_argument("--coset-cap", type=int, default=20)
        p.add_argument("--out", default=None)
        if name == "schedule":
            p.add_argument(
                "--model", choices=["relaxed", "exclusive"], default="relaxed"
            )
            p.add_argument("--trials", type=int, default=100)
            p.add_argument("--seed", type=int, default=0)
        p.set_defaults(func=func)

    p = sub.add_parser("export", help="write a DOT rendering")
    p.add_argument("input")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: Optional[list] = None) -> int:
    _setup_logging()
    parser = make_parser()
    args = parser.parse_args(argv)
    if getattr(args, "coset_cap", 1) < 1:
        parser.error("--coset-cap must be >= 1")
    try:
        return args.func(args)
    except TscodesError as exc:
        log.error("%s: %s", type(exc).__name__, exc)
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
