"""Command-line front end.

Every command is a thin composition of library operations; no math lives
here. Output is deterministic (see `emit`). Exit codes: 0 success, 2
input validation error, 3 mathematical precondition failure, 4 golden
replay mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .classifier import classify_ray, h1_signed, positivity_range, whole_cone_rules
from .core import BaseManifold, JoinParams, ReebRay, parse_base, validate_join
from .emit import emit_csv, emit_json
from .errors import (
    EXIT_MISMATCH,
    EXIT_OK,
    InvalidParameterError,
    SasconeError,
    exit_code_for,
)
from .goldens import default_checks, encode_range, replay_tables
from .profile import (
    DEFAULT_GRID,
    MetricProfile,
    ProfileParams,
    build_profile,
    profile_params_from_ray,
)
from .quotient import orb_c1_report, quotient_data
from .topology import (
    b_invariant_wcone,
    bouquet_label,
    bouquet_level_set,
    bouquet_partition,
    c1_gamma_coeff_sphere_join,
    spin_check,
    torsion_order,
)


@dataclass
class CommandResult:
    stdout: str
    stderr: str = ""
    code: int = EXIT_OK


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidParameterError(f"cannot parse rational {text!r}") from exc


def _join_parent() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--l1", type=int, required=True)
    p.add_argument("--l2", type=int, required=True)
    p.add_argument("--w1", type=int, required=True)
    p.add_argument("--w2", type=int, required=True)
    p.add_argument("--base", default="cp1", help="cp<p>, sigma<g>, or custom:<dim_c>:<c1>")
    return p


def _ray_parent() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--v1", type=int, required=True)
    p.add_argument("--v2", type=int, required=True)
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sascone",
        description="Positivity in the w-Sasaki cone of weighted 3-sphere joins.",
    )
    parser.add_argument("--version", action="version", version=f"sascone {__version__}")
    parser.add_argument("--config", help="JSON file with a batch of commands to run")
    sub = parser.add_subparsers(dest="command")
    join, ray = _join_parent(), _ray_parent()

    p = sub.add_parser("invariants", parents=[join], help="topological/contact invariants of a join")
    p.set_defaults(handler=_cmd_invariants)

    p = sub.add_parser("quotient", parents=[join, ray], help="quasi-regular quotient data of a ray")
    p.set_defaults(handler=_cmd_quotient)

    p = sub.add_parser("classify", parents=[join, ray], help="positive vs indefinite for a ray")
    p.add_argument("--near", type=_fraction, default=None, metavar="A/B",
                   help="flag the verdict when the ray is within this distance of a range boundary")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("range", parents=[join], help="exact positivity range of the w-cone")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(handler=_cmd_range)

    p = sub.add_parser("bouquet", help="bouquet labels (join flags) or level sets (--k/--l)")
    for name in ("--l1", "--l2", "--w1", "--w2"):
        p.add_argument(name, type=int)
    p.add_argument("--base", default="cp1")
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    p.set_defaults(handler=_cmd_bouquet)

    p = sub.add_parser("metric", help="build and certify an admissible profile")
    p.add_argument("--m1", type=int, required=True)
    p.add_argument("--m2", type=int, required=True)
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--dN", type=int, required=True, dest="d_n")
    p.add_argument("--fano-index", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--grid", type=int, default=DEFAULT_GRID)
    p.add_argument("--tol", type=float, default=1e-12, help="relative root tolerance")
    p.add_argument("--out", choices=("csv", "json"), default="csv")
    p.set_defaults(handler=_cmd_metric)

    p = sub.add_parser("metric-from-ray", parents=[join, ray],
                       help="compose quotient data with the profile construction")
    p.add_argument("--r", type=float, default=None)
    p.add_argument("--grid", type=int, default=DEFAULT_GRID)
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--out", choices=("csv", "json"), default="csv")
    p.set_defaults(handler=_cmd_metric_from_ray)

    p = sub.add_parser("h1", help="signed Einstein-Hilbert value from supplied totals")
    p.add_argument("--s", type=float, required=True, help="total transverse scalar curvature")
    p.add_argument("--volume", type=float, required=True)
    p.add_argument("--n-half", type=int, required=True, help="n for dimension 2n+1")
    p.set_defaults(handler=_cmd_h1)

    p = sub.add_parser("replay-tables", help="recompute the built-in golden tables")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=_cmd_replay)

    return parser


def _parse_join(args: argparse.Namespace) -> tuple[JoinParams, list[str]]:
    base = parse_base(args.base)
    join = validate_join(args.l1, args.l2, args.w1, args.w2, base)
    notes = []
    if (join.w1, join.w2) != (args.w1, args.w2):
        notes.append(f"weights swapped to (w1, w2) = ({join.w1}, {join.w2})")
    return join, notes


def _join_record(join: JoinParams) -> dict:
    return {
        "base": {"dim_c": join.base.dim_c, "c1_coeff": join.base.c1_coeff, "label": join.base.label},
        "l1": join.l1, "l2": join.l2, "w1": join.w1, "w2": join.w2,
    }


def _is_projective(base: BaseManifold) -> bool:
    return base.c1_coeff == base.dim_c + 1


def _cmd_invariants(args: argparse.Namespace) -> CommandResult:
    join, notes = _parse_join(args)
    base = join.base
    record: dict = {"join": _join_record(join), "notes": notes}
    record["torsion_order"] = torsion_order(join)
    record["torsion_caveat"] = base.dim_c == 1
    if _is_projective(base):
        p = base.dim_c
        record["c1_gamma_coeff"] = c1_gamma_coeff_sphere_join(p, join)
        record["spin"] = spin_check(p, join)
    else:
        record["c1_gamma_coeff"] = None
        record["spin"] = None
        notes.append("c1 coefficient and spin need a projective-space base")
    if base.dim_c == 1 and base.c1_coeff == 2:
        if join.l1 * (join.w1 + join.w2) % 2 == 0:
            record["bouquet"] = bouquet_label(join)
        else:
            record["bouquet"] = None
            notes.append("bouquet labels undefined: l1*(w1+w2) is odd")
    else:
        record["bouquet"] = None
        notes.append("bouquet labels not applicable for this base")
    if base.is_fano:
        record["b_invariant"] = b_invariant_wcone(join)
    else:
        record["b_invariant"] = None
        notes.append("B invariant needs a Fano base")
    return CommandResult(stdout=emit_json(record))


def _cmd_quotient(args: argparse.Namespace) -> CommandResult:
    join, notes = _parse_join(args)
    ray = ReebRay(args.v1, args.v2)
    data = quotient_data(join, ray)
    report = orb_c1_report(join, ray, data)
    record = {
        "join": _join_record(join),
        "ray": {"v1": ray.v1, "v2": ray.v2},
        "quotient": data,
        "orb_fano": report.positive,
        "orb_c1": report,
        "notes": notes,
    }
    return CommandResult(stdout=emit_json(record))


def _cmd_classify(args: argparse.Namespace) -> CommandResult:
    join, notes = _parse_join(args)
    ray = ReebRay(args.v1, args.v2)
    rng = positivity_range(join)
    verdict = classify_ray(join, ray)
    distance = rng.distance_to_boundary(ray.ratio)
    near = None
    if args.near is not None:
        near = distance is not None and distance <= args.near
    if distance is not None and distance == 0:
        notes.append("ray lies exactly on a range boundary; boundaries classify as indefinite")
    record = {
        "verdict": verdict,
        "range": encode_range(rng),
        "ratio": ray.ratio,
        "distance_to_boundary": distance,
        "near_boundary": near,
        "notes": notes,
    }
    if args.format == "text":
        return CommandResult(stdout=f"{verdict.value}: ratio {ray.ratio}, range {rng.as_text()}\n")
    return CommandResult(stdout=emit_json(record))


def _cmd_range(args: argparse.Namespace) -> CommandResult:
    join, notes = _parse_join(args)
    rng = positivity_range(join)
    if args.format == "text":
        return CommandResult(stdout=rng.as_text() + "\n")
    record: dict = {"range": encode_range(rng), "notes": notes}
    if _is_projective(join.base):
        record["whole_cone"] = whole_cone_rules(join)
    return CommandResult(stdout=emit_json(record))


def _cmd_bouquet(args: argparse.Namespace) -> CommandResult:
    join_flags = [args.l1, args.l2, args.w1, args.w2]
    if args.k is not None or args.l is not None:
        if args.k is None or args.l is None or any(v is not None for v in join_flags):
            raise InvalidParameterError("give either --k and --l, or the four join flags")
        partition = bouquet_partition(args.k, args.l)
        record = {
            "k": args.k,
            "l": args.l,
            "level_sets": {str(i): sorted(js) for i, js in partition.items()},
        }
        return CommandResult(stdout=emit_json(record))
    if any(v is None for v in join_flags):
        raise InvalidParameterError("give either --k and --l, or the four join flags")
    join, notes = _parse_join(args)
    if not (join.base.dim_c == 1 and join.base.c1_coeff == 2):
        return CommandResult(stdout=emit_json({"applicable": False, "reason": "bouquet labels not applicable", "notes": notes}))
    label = bouquet_label(join)
    record = {
        "applicable": True,
        "label": label,
        "level_set": sorted(bouquet_level_set(label.k, label.l, label.i)),
        "notes": notes,
    }
    return CommandResult(stdout=emit_json(record))


def _profile_result(
    profile: MetricProfile, out: str, extra_report: dict | None = None
) -> CommandResult:
    report: dict = {"params": profile.params, "k_root": profile.k_root, "report": profile.report}
    if extra_report:
        report.update(extra_report)
    stderr = emit_json(report)
    if out == "json":
        record = dict(report)
        record["samples"] = profile.samples
        return CommandResult(stdout=emit_json(record), stderr=stderr)
    csv = emit_csv(
        ("z", "F", "Theta", "ricci_h", "ricci_v"),
        ((s.z, s.f, s.theta, s.ricci_h, s.ricci_v) for s in profile.samples),
    )
    return CommandResult(stdout=csv, stderr=stderr)


def _cmd_metric(args: argparse.Namespace) -> CommandResult:
    params = ProfileParams(
        m1=args.m1, m2=args.m2, d_n=args.d_n, r=args.r, n=args.n, fano_index=args.fano_index
    )
    profile = build_profile(params, grid_size=args.grid, tol_rel=args.tol)
    return _profile_result(profile, args.out)


def _cmd_metric_from_ray(args: argparse.Namespace) -> CommandResult:
    join, notes = _parse_join(args)
    ray = ReebRay(args.v1, args.v2)
    params, data = profile_params_from_ray(join, ray, r=args.r)
    profile = build_profile(params, grid_size=args.grid, tol_rel=args.tol)
    extra = {"join": _join_record(join), "ray": {"v1": ray.v1, "v2": ray.v2},
             "quotient": data, "notes": notes}
    return _profile_result(profile, args.out, extra_report=extra)


def _cmd_h1(args: argparse.Namespace) -> CommandResult:
    value = h1_signed(args.s, args.volume, args.n_half)
    return CommandResult(stdout=emit_json({"h1_signed": value}))


def _cmd_replay(args: argparse.Namespace) -> CommandResult:
    outcomes = replay_tables(default_checks())
    failures = [o for o in outcomes if not o.ok]
    code = EXIT_OK if not failures else EXIT_MISMATCH
    if args.format == "json":
        record = {
            "checks": [
                {"id": o.check.check_id, "op": o.check.op, "args": o.check.args,
                 "expected": o.check.expected, "got": o.got, "ok": o.ok}
                for o in outcomes
            ],
            "passed": len(outcomes) - len(failures),
            "failed": len(failures),
        }
        return CommandResult(stdout=emit_json(record), code=code)
    lines = []
    for o in outcomes:
        if o.ok:
            lines.append(f"PASS {o.check.check_id}")
        else:
            lines.append(f"FAIL {o.check.check_id} expected={o.check.expected!r} got={o.got!r}")
    lines.append(f"{len(outcomes) - len(failures)}/{len(outcomes)} checks passed")
    return CommandResult(stdout="\n".join(lines) + "\n", code=code)


def _entry_to_argv(entry: dict) -> list[str]:
    if "command" not in entry:
        raise InvalidParameterError("each config entry needs a 'command' key")
    argv = [str(entry["command"])]
    for key, value in entry.items():
        if key == "command":
            continue
        flag = "--" + str(key).replace("_", "-")
        argv += [flag, str(value)]
    return argv


def _run_config(path: str, parser: argparse.ArgumentParser) -> int:
    with open(path, "r", encoding="utf-8") as fh:
        payload = json.load(fh)
    entries = payload["commands"] if isinstance(payload, dict) else payload
    if not isinstance(entries, list):
        raise InvalidParameterError("config must be a list of commands or {'commands': [...]}")
    results = []
    worst = EXIT_OK
    for entry in entries:
        argv = _entry_to_argv(entry)
        try:
            ns = parser.parse_args(argv)
            res = ns.handler(ns)
        except SasconeError as exc:
            res = CommandResult(stdout="", stderr=str(exc), code=exit_code_for(exc))
        except SystemExit as exc:  # argparse rejected the entry's flags
            res = CommandResult(stdout="", stderr="unparseable command entry",
                                code=int(exc.code or 2))
        results.append(
            {"command": entry.get("command"), "exit_code": res.code,
             "stdout": res.stdout, "stderr": res.stderr}
        )
        worst = max(worst, res.code)
    sys.stdout.write(emit_json(results))
    return worst


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.config is not None:
            return _run_config(args.config, parser)
        if args.command is None:
            parser.print_usage(sys.stderr)
            return 2
        result: CommandResult = args.handler(args)
    except SasconeError as exc:
        sys.stderr.write(emit_json({"error": {"type": type(exc).__name__, "message": str(exc)}}))
        return exit_code_for(exc)
    if result.stdout:
        sys.stdout.write(result.stdout)
    if result.stderr:
        sys.stderr.write(result.stderr)
    return result.code


if __name__ == "__main__":
    raise SystemExit(main())
