"""Command-line front end.

Exit codes: 0 success, 1 internal error or failed reproduction, 2 refused
input (infeasible spec, shield violation, ...), 64 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from . import __version__
from .errors import EquipartError, ValidationRefusal
from .geometry import Configuration
from .graycode import flip_counts, flip_sequences
from .measures import IntervalMeasure, measure_from_json
from .obstruction import (ProblemSpec, case_counts, corollary_pipeline, enumerate_orbits,
                          jacobian_nondegenerate, match_table, realize, verify_all)
from .parity_pl import RaySpec, boundary_identity, bu_check, load_mesh, ray_parity, zero_parity
from .report import case_table_text, paper_report
from .testmap import full_test_map

DEFAULT_SEED = 20240521
EX_USAGE = 64


@dataclass(frozen=True)
class RunConfig:
    command: str
    seed: int
    fmt: str
    output: Optional[str]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _envelope(cfg: RunConfig, body: dict) -> dict:
    return {"tool": "equipart", "version": __version__, "seed": cfg.seed,
            "command": cfg.command, **body}


def _spec(args) -> ProblemSpec:
    return ProblemSpec.parse(args.dim, args.planes, args.constraints)


def _intervals(text: Optional[str]):
    if not text:
        return None
    out = []
    for part in text.split(","):
        lo, hi = part.split(":")
        out.append((_number(lo), _number(hi)))
    return out


def _number(s: str):
    from fractions import Fraction

    f = Fraction(s.strip())
    return int(f) if f.denominator == 1 else f


def _threads(requested: Optional[int]) -> int:
    cap = os.environ.get("EQUIPART_THREADS")
    n = requested or 1
    if cap:
        n = min(n, max(1, int(cap))) if requested else max(1, int(cap))
    return n


# ---------------------------------------------------------------- commands

def cmd_orbits(args, cfg):
    report = enumerate_orbits(_spec(args))
    if cfg.fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(report.csv_rows())
        _emit(buf.getvalue(), cfg.output)
    elif cfg.fmt == "text":
        lines = [f"{report.spec.label()}: {report.orbit_count} orbits, theta = {report.theta}"]
        for i, p in enumerate(report.representatives):
            lines.append(f"  {i:3d}  {' | '.join(''.join(str(b + 1) for b in s) for s in p.steps)}")
        _emit("\n".join(lines) + "\n", cfg.output)
    else:
        _emit(_dump(_envelope(cfg, report.to_json())), cfg.output)
    return 0


def cmd_realize(args, cfg):
    report = enumerate_orbits(_spec(args))
    if not 0 <= args.orbit_id < report.orbit_count:
        raise ValidationRefusal(f"orbit id {args.orbit_id} out of range 0..{report.orbit_count - 1}")
    z = realize(report.representatives[args.orbit_id], _intervals(args.intervals))
    body = z.to_json()
    jc = jacobian_nondegenerate(z)
    body["det_estimate"] = jc.det_estimate
    body["jacobian_ok"] = jc.ok
    body["orbit_id"] = args.orbit_id
    _emit(_dump(_envelope(cfg, body)), cfg.output)
    return 0


def cmd_verify(args, cfg):
    if not args.all:
        raise ValidationRefusal("verify currently needs --all")
    results = verify_all(_spec(args), _intervals(args.intervals), _threads(args.threads))
    rows = [{"orbit_id": i, "residual": z.residual, "det_estimate": jc.det_estimate,
             "jacobian_ok": jc.ok} for i, (z, jc) in enumerate(results)]
    ok = all(r["jacobian_ok"] and r["residual"] < 1e-9 for r in rows)
    _emit(_dump(_envelope(cfg, {"spec": _spec(args).to_json(), "orbits": rows, "ok": ok})),
          cfg.output)
    return 0 if ok else 1


def cmd_gray(args, cfg):
    lines = [json.dumps({"seq": [b + 1 for b in s.seq], "counts": list(flip_counts(s))},
                        sort_keys=True)
             for s in flip_sequences(args.bits, allow_large=args.allow_large)]
    _emit("\n".join(lines) + "\n", cfg.output)
    return 0


def cmd_testmap(args, cfg):
    with open(args.input) as fh:
        data = json.load(fh)
    c = Configuration.from_json(data["configuration"])
    full = [measure_from_json(m) for m in data["full_measures"]]
    bis = [measure_from_json(m) for m in data.get("bisector_measures", [])]
    tv = full_test_map(c, full, bis)
    _emit(_dump(_envelope(cfg, {"test_vector": tv.to_json()})), cfg.output)
    return 0


def cmd_pl_parity(args, cfg):
    m = load_mesh(args.mesh)
    ray = RaySpec(tuple(_number(x) for x in args.ray.split(","))) if args.ray else None
    bi = boundary_identity(m, ray)
    body = {"zero_parity": bi.lhs, "ray_parity": bi.rhs, "equal": bi.equal}
    _emit(_dump(_envelope(cfg, body)), cfg.output)
    return 0 if bi.equal else 1


def cmd_bu_check(args, cfg):
    r = bu_check(args.n, cfg.seed, args.trials)
    _emit(_dump(_envelope(cfg, r.to_json())), cfg.output)
    return 0 if r.ok else 1


def cmd_corollary(args, cfg):
    res = corollary_pipeline(IntervalMeasure(5, args.lo, args.hi), orbit_index=args.orbit_id)
    body = {
        "planes": [h.to_json() for h in res.planes],
        "masses": list(res.masses),
        "theta": res.theta,
    }
    _emit(_dump(_envelope(cfg, body)), cfg.output)
    return 0


def run_paper_report(cfg, enumerator=None, bu_trials: int = 10) -> int:
    crits = paper_report(enumerator, seed=cfg.seed, bu_trials=bu_trials)
    ok = all(c.passed for c in crits)
    if cfg.fmt == "json":
        _emit(_dump(_envelope(cfg, {"criteria": [c.to_json() for c in crits], "ok": ok})),
              cfg.output)
    else:
        lines = [case_table_text(), ""]
        for c in crits:
            mark = "PASS" if c.passed else "FAIL"
            line = f"[{mark}] {c.name}"
            if not c.passed:
                line += f"\n        expected {c.expected!r}\n        observed {c.observed!r}"
            lines.append(line)
        _emit("\n".join(lines) + "\n", cfg.output)
    return 0 if ok else 1


def cmd_paper_report(args, cfg):
    return run_paper_report(cfg, bu_trials=args.bu_trials)


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="equipart", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"equipart {__version__}")
    common = _Parser(add_help=False)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--output", "-o", help="write the report here instead of stdout")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def spec_args(sp, constraints="F,F,B", dim=5, planes=3):
        sp.add_argument("--dim", type=int, default=dim)
        sp.add_argument("--planes", type=int, default=planes)
        sp.add_argument("--constraints", default=constraints)

    sp = sub.add_parser("orbits", parents=[common], help="count orbits of zeros")
    spec_args(sp)
    sp.add_argument("--format", choices=["json", "csv", "text"], default="json")
    sp.add_argument("--json", dest="json_out", help="shorthand for --format json --output PATH")
    sp.set_defaults(func=cmd_orbits)

    sp = sub.add_parser("realize", parents=[common], help="realize one orbit explicitly")
    spec_args(sp)
    sp.add_argument("--orbit-id", type=int, default=0)
    sp.add_argument("--intervals", help="lo:hi,lo:hi,... (rationals allowed)")
    sp.set_defaults(func=cmd_realize)

    sp = sub.add_parser("verify", parents=[common], help="realize and check every orbit")
    spec_args(sp)
    sp.add_argument("--all", action="store_true")
    sp.add_argument("--intervals")
    sp.add_argument("--threads", type=int)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("gray", parents=[common], help="list Hamiltonian flip sequences")
    sp.add_argument("--bits", type=int, required=True)
    sp.add_argument("--allow-large", action="store_true")
    sp.set_defaults(func=cmd_gray)

    sp = sub.add_parser("testmap", parents=[common], help="evaluate the test map")
    tsub = sp.add_subparsers(dest="action", required=True, parser_class=_Parser)
    ev = tsub.add_parser("eval", parents=[common])
    ev.add_argument("--input", required=True, help="JSON with configuration and measures")
    ev.set_defaults(func=cmd_testmap)

    sp = sub.add_parser("pl-parity", parents=[common], help="mod-2 degree of a PL map")
    sp.add_argument("--mesh", required=True)
    sp.add_argument("--ray", help="comma-separated direction")
    sp.set_defaults(func=cmd_pl_parity)

    sp = sub.add_parser("bu-check", parents=[common], help="Borsuk-Ulam parity on random maps")
    sp.add_argument("--n", type=int, required=True, choices=[1, 2, 3])
    sp.add_argument("--trials", type=int, default=100)
    sp.set_defaults(func=cmd_bu_check)

    sp = sub.add_parser("corollary", parents=[common], help="four-plane equipartition in R^5")
    sp.add_argument("--lo", type=float, default=0.0)
    sp.add_argument("--hi", type=float, default=16.0)
    sp.add_argument("--orbit-id", type=int, default=0)
    sp.set_defaults(func=cmd_corollary)

    sp = sub.add_parser("paper-report", parents=[common], help="recompute every headline number")
    sp.add_argument("--json", action="store_true", help="machine-readable bundle")
    sp.add_argument("--bu-trials", type=int, default=10)
    sp.set_defaults(func=cmd_paper_report)
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    fmt = getattr(args, "format", "json")
    output = args.output
    if args.command == "orbits" and args.json_out:
        fmt, output = "json", args.json_out
    if args.command == "paper-report":
        fmt = "json" if args.json else "text"
    cfg = RunConfig(args.command, args.seed, fmt, output)
    try:
        return args.func(args, cfg)
    except ValidationRefusal as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2
    except (EquipartError, ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> int:
    return run(sys.argv[1:])
