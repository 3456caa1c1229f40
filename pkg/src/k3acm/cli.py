"""Command-line front end for the lattice workbench.

Exit codes: 0 = success / everything verified; 1 = a verification
failure (a failed claim, an unresolved branch, a search-box boundary
touch); 2 = bad input (unreadable config, malformed class argument,
conflicting assumptions).  Reports go to stdout, diagnostics to stderr.
"""

import argparse
import json
import sys

from .casework import (MODES, PRESET_IDS, PRESET_PRESENTATION,
                       QUARTIC_PRESENTATIONS, builtin_scripts,
                       delpezzo_lattice, elimination_to_json, enumerate_case,
                       enumerate_destabilizing, lemma_case, necessity_to_json,
                       report_to_json, run_script, script_by_tag,
                       verify_necessity)
from .classifier import (AcmStatus, acm_companions, derived_assumptions,
                         is_initialized_acm)
from .config import (assumption_to_json, config_to_json, data_path,
                     load_config, shipped_quartic_names)
from .errors import BadParametersError, BoxTooSmallError, WorkbenchError
from .lattice import DivClass, Lattice


def _parse_class(text: str, lat: Lattice) -> DivClass:
    """Comma-separated basis coefficients in config label order."""
    try:
        coords = [int(part) for part in text.split(",")]
    except ValueError:
        raise BadParametersError(
            f"class argument must be comma-separated ints, got {text!r}") from None
    if len(coords) != lat.rank:
        raise BadParametersError(
            f"class argument has {len(coords)} coordinates, "
            f"the lattice has rank {lat.rank}")
    return DivClass(coords)


def _require_config(args) -> tuple:
    if args.config is None:
        raise BadParametersError(f"{args.command} needs -c/--config")
    return load_config(args.config)


def _print_report(report) -> None:
    for st in report.steps:
        if st.kind == "axiom":
            line = f"  [axiom ] {st.label}"
            if st.detail:
                line += f": {st.detail}"
        else:
            mark = "ok    " if st.status == "Verified" else st.status
            line = f"  [{mark}] {st.label}: {st.detail}"
        print(line)
    print(report.summary())


def _finish_report(args, report, payload=None) -> int:
    """Shared tail for the script-replay commands."""
    if args.json:
        print(json.dumps(payload if payload is not None
                         else report_to_json(report)))
    elif not report.success:
        print("VERIFICATION FAILED")
    elif report.conclusion.kind == "contradiction":
        print("CONTRADICTION ESTABLISHED")
    else:
        print(f"ESTABLISHED: {report.conclusion.statement}")
    return 0 if report.success else 1


# ---- commands ------------------------------------------------------------------


def _cmd_lattice_info(args) -> int:
    lat, assumps = _require_config(args)
    if args.json:
        payload = config_to_json(lat, assumps)
        payload["signature"] = list(lat.signature())
        payload["even"] = lat.is_even()
        print(json.dumps(payload))
        return 0
    print(f"rank: {lat.rank}")
    print("labels: " + ", ".join(lat.labels))
    width = max(len(str(x)) for row in lat.gram for x in row)
    print("gram:")
    for row in lat.gram:
        print("  [" + " ".join(f"{x:>{width}}" for x in row) + "]")
    print(f"ample: {lat.ample}")
    print(f"k3 surface checks: {'on' if lat.k3 else 'off'}")
    print(f"signature: {lat.signature()}")
    print(f"even: {'yes' if lat.is_even() else 'no'}")
    if assumps:
        print("assumptions:")
        for a in assumps:
            print(f"  {a.kind.value} {a.subject}" + (f": {a.note}" if a.note else ""))
    else:
        print("assumptions: none")
    return 0


def _cmd_classify(args) -> int:
    lat, assumps = _require_config(args)
    b = _parse_class(args.class_arg, lat)
    cls = is_initialized_acm(lat, b, assumps)
    if args.json:
        print(json.dumps({
            "class": list(b.coords),
            "status": cls.status.value,
            "case": cls.case_tag,
            "missing": [assumption_to_json(m) for m in cls.missing],
        }))
        return 0
    print(cls.status.value)
    print(f"case: {cls.case_tag}")
    print(f"square: {lat.self_int(b)}, degree: {lat.deg(b)}")
    for m in cls.missing:
        print(f"needs: {m.kind.value} {m.subject} ({m.note})")
    return 0


def _cmd_companions(args) -> int:
    lat, assumps = _require_config(args)
    b = _parse_class(args.class_arg, lat)
    cls = is_initialized_acm(lat, b, assumps)
    companions = acm_companions(lat, b, cls, assumps)
    if args.json:
        print(json.dumps({
            "class": list(b.coords),
            "status": cls.status.value,
            "companions": [{"class": list(c.coords), "rule": rule}
                           for c, rule in companions],
        }))
        return 0
    print(f"{b} classifies {cls.status.value} (case {cls.case_tag})")
    for c, rule in companions:
        print(f"  {c}  {rule}")
    return 0


def _cmd_enumerate(args) -> int:
    spec = lemma_case(args.preset, box=args.box)
    if args.config is not None:
        lat, _ = load_config(args.config)
        want = QUARTIC_PRESENTATIONS[PRESET_PRESENTATION[args.preset]]
        have = (lat.rank == 2 and lat.gram[0][0] == 4
                and (lat.gram[1][1], lat.gram[0][1]) == want)
        if not have:
            raise BadParametersError(
                f"config lattice does not present the preset {args.preset} "
                f"case (B^2, h.B) = {want}")
    solutions = enumerate_case(spec)
    if args.json:
        print(json.dumps({"solutions": [list(s) for s in solutions]}))
        return 0
    print(f"preset {args.preset}, box {args.box}: "
          f"{len(solutions)} solution(s)")
    for s, t in solutions:
        print(f"  s = {s}, t = {t}")
    return 0


def _cmd_destabilize(args) -> int:
    lat, assumps = _require_config(args)
    c = _parse_class(args.class_arg, lat)
    worklist = list(assumps)
    if lat.rank == 2 and lat.ample.coords == (1, 0):
        # classification facts about the second basis class seed the kills
        try:
            b = DivClass((0, 1))
            cls = is_initialized_acm(lat, b, assumps)
            if cls.status in (AcmStatus.ACM, AcmStatus.ACM_ULRICH):
                worklist = derived_assumptions(lat, b, cls, assumps)
        except WorkbenchError:
            pass
    records = enumerate_destabilizing(lat, c, args.d, tuple(worklist),
                                      mode=args.mode)
    resolved = all(r.resolved for r in records)
    if args.json:
        print(json.dumps({
            "curve": list(c.coords),
            "d": args.d,
            "mode": args.mode,
            "resolved": resolved,
            "records": [elimination_to_json(r) for r in records],
        }))
        return 0 if resolved else 1
    print(f"C = {c}, C^2 = {lat.self_int(c)}, d = {args.d}, mode = {args.mode}")
    for rec in records:
        where = (f"profile (h.N, B.N) = {rec.profile}"
                 if rec.profile is not None else "whole branch")
        print(f"  n^2 = {rec.n_square}, {where}: {rec.outcome}"
              + (f" [len Z' = {rec.len_zprime}]" if rec.len_zprime else ""))
        for cl in rec.trace:
            print(f"      {cl.label}" + (f" ({cl.cite})" if cl.cite else ""))
    print("ALL BRANCHES RESOLVED" if resolved
          else "UNRESOLVED BRANCHES REMAIN")
    return 0 if resolved else 1


def _cmd_verify(args) -> int:
    script = script_by_tag(args.script)
    if args.config is not None:
        lat, _ = load_config(args.config)
        script = script.with_lattice(lat)
    report = run_script(script)
    if not args.json:
        if script.description:
            print(script.description)
        _print_report(report)
    return _finish_report(args, report)


def _cmd_theorem(args) -> int:
    rows = []
    all_ok = True
    for name in shipped_quartic_names():
        lat, assumps = load_config(data_path(name))
        report = verify_necessity(lat, DivClass((0, 1)), assumps, box=args.box)
        rows.append((name, report))
        all_ok = all_ok and report.verified
    if args.json:
        print(json.dumps({
            "configs": [dict(config=name, **necessity_to_json(r))
                        for name, r in rows],
            "status": "VERIFIED" if all_ok else "INCOMPLETE",
        }))
        return 0 if all_ok else 1
    for name, r in rows:
        line = (f"{name}: (B^2, h.B) = {r.profile} -> preset {r.preset_id}, "
                f"survivors {[list(s) for s in r.survivors]}: {r.status}")
        print(line)
        if r.substitution is not None:
            tag, target = r.substitution
            print(f"  reduced via {tag} to the presentation {target}")
        for m in r.matches:
            print(f"  survivor {m.survivor} -> {m.report.summary()}")
        for s in r.supports:
            print(f"  support -> {s.summary()}")
        for row in r.reductions:
            print(f"  tail t = {row.t}: {row.rule}")
    print(f"THEOREM NECESSITY: {'VERIFIED' if all_ok else 'INCOMPLETE'} "
          f"over {len(rows)} configs")
    return 0 if all_ok else 1


def _cmd_example_delpezzo(args) -> int:
    lat = delpezzo_lattice()
    report = run_script(script_by_tag("delpezzo-cover"))
    payload = {
        "rank": lat.rank,
        "even": lat.is_even(),
        "signature": list(lat.signature()),
        "report": report_to_json(report),
    }
    if not args.json:
        print(f"rank {lat.rank}, even: {'yes' if lat.is_even() else 'no'}, "
              f"signature {lat.signature()}")
        _print_report(report)
    return _finish_report(args, report, payload)


# ---- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="k3acm",
        description="Exact-arithmetic workbench for rank-2 aCM bundle "
                    "numerology on quartic K3 lattices.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, *, needs_class=False, needs_preset=False,
            needs_script=False, needs_d=False, box=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("-c", "--config", metavar="PATH",
                       help="lattice config file (JSON)")
        p.add_argument("--json", action="store_true",
                       help="emit a machine-readable report")
        if needs_class:
            p.add_argument("--class", dest="class_arg", required=True,
                           metavar="S,T",
                           help="comma-separated basis coefficients")
        if needs_preset:
            p.add_argument("--preset", required=True, choices=PRESET_IDS)
        if needs_script:
            p.add_argument("--script", required=True, metavar="TAG",
                           help="tag of a built-in derivation script")
        if needs_d:
            p.add_argument("--d", type=int, required=True,
                           help="length of the zero-scheme Z")
            p.add_argument("--mode", choices=MODES, default="exact")
        if box:
            p.add_argument("--box", type=int, default=32,
                           help="search box half-width (default 32)")
        p.set_defaults(func=func)
        return p

    add("lattice-info", _cmd_lattice_info,
        "print rank, gram, signature and assumptions of a config")
    add("classify", _cmd_classify,
        "classify a divisor class against the initialized-aCM window",
        needs_class=True)
    add("companions", _cmd_companions,
        "list the aCM companion classes of a classified divisor",
        needs_class=True)
    add("enumerate", _cmd_enumerate,
        "solve one of the five bounded (s,t) constraint systems",
        needs_preset=True, box=True)
    add("destabilize", _cmd_destabilize,
        "eliminate destabilizing subsheaf profiles for a curve class",
        needs_class=True, needs_d=True)
    add("verify", _cmd_verify,
        "replay a derivation script claim by claim",
        needs_script=True)
    add("theorem", _cmd_theorem,
        "replay the full classification over every shipped quartic config",
        box=True)
    add("example-delpezzo", _cmd_example_delpezzo,
        "verify the rank-8 double-cover lattice identities")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help, 2 for usage errors; never propagate
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except BoxTooSmallError as exc:
        print(f"boundary touch: {exc}", file=sys.stderr)
        return 1
    except WorkbenchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
