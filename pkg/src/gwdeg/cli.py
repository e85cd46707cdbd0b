"""Command line entry point ``gwdeg``.

Exit codes: 0 success (verify: every verdict Equal), 1 a verify verdict is
NotEqual, 2 parse error, 3 mathematical precondition violated, 4 a decision
was required but is unavailable.
"""

import argparse
import json
import sys

from . import degree as deg
from .errors import MathError, ParseError
from .gw import INF, GWClass, Verdict, invariants, relevant_places
from .parser import parse_constant
from .problem import parse_base_field, parse_extension, read_problem

EXIT_OK, EXIT_NOT_EQUAL, EXIT_PARSE, EXIT_MATH, EXIT_UNDECIDED = 0, 1, 2, 3, 4


def _point_dict(p, k):
    return {
        "name": p.name,
        "residue_field": repr(p.residue_field),
        "degree": p.degree_over(k),
        "coords": p.as_strings(),
    }


def _class_dict(c, places=None):
    inv = invariants(c, places or ())
    out = {"diagonal": c.entries_as_strings()}
    out.update(inv.to_dict())
    return out, inv


def _shared_places(*classes):
    vals = []
    for c in classes:
        if c.field.is_finite or c.field.degree != 1:
            return None
        vals.extend(u.coords[0] for u in c.diagonal)
    return [p for p in relevant_places(vals) if p != INF]


def _ms(seconds, enabled):
    return round(seconds * 1000, 3) if enabled else None


def _fmt_hw(hw):
    return " ".join(f"{k}:{'+1' if v > 0 else '-1'}" for k, v in hw.items())


def _print_class_block(c, inv, indent="  "):
    print(f"{indent}class: {c}")
    print(f"{indent}rank: {inv.rank}")
    print(f"{indent}det square class: {inv.det_square_class}")
    if inv.signature is not None:
        print(f"{indent}signature: {inv.signature}")
    if inv.hasse_witt is not None:
        print(f"{indent}Hasse-Witt: {_fmt_hw(inv.hasse_witt)}")
    if not inv.decided:
        print(f"{indent}(square classes over this field are only partially decidable)")


def _header(problem, command):
    return {
        "command": command,
        "field": repr(problem.field),
        "variables": list(problem.variables),
        "system": [str(f) for f in problem.polynomials],
        "seed": problem.seed,
    }


def _print_header(problem):
    print(f"field: {problem.field!r}")
    print(f"variables: {', '.join(problem.variables)}")
    for i, f in enumerate(problem.polynomials, 1):
        print(f"f{i} = {f}")


def _math_error_text(exc):
    return f"{type(exc).__name__}: {exc}"


def cmd_degree(args):
    problem = read_problem(args.file)
    seed = problem.seed if args.seed is None else args.seed
    problem.seed = seed
    if not problem.points:
        raise ParseError("problem file declares no points", None, None, problem.source)
    run = deg.trace_pipeline if args.method == "trace" else deg.direct_pipeline
    results = []
    undecided = False
    for p in problem.points:
        r = run(problem.polynomials, p, seed)
        body, inv = _class_dict(r.gw_class)
        undecided |= not inv.decided
        entry = {"point": _point_dict(p, problem.field), "method": args.method}
        entry.update(body)
        entry["local_dim"] = r.local_dim
        entry["separating_form"] = r.separating_form
        entry["timings_ms"] = _ms(r.seconds, args.timings)
        results.append((p, r, inv, entry))
    if args.json:
        doc = _header(problem, "degree")
        doc["results"] = [e for *_, e in results]
        print(json.dumps(doc, indent=2))
    else:
        _print_header(problem)
        print(f"method: {args.method}")
        for p, r, inv, entry in results:
            print(f"point {p.name}: ({', '.join(p.as_strings())}) over {p.residue_field!r}")
            print(f"  local dimension: {r.local_dim}")
            print(f"  separating form: {r.separating_form}")
            _print_class_block(r.gw_class, inv)
            if args.timings:
                print(f"  time: {entry['timings_ms']} ms")
    if undecided and args.require_decided:
        return EXIT_UNDECIDED
    return EXIT_OK


def _side(result, places):
    if result is None:
        return None, None
    return _class_dict(result.gw_class, places)


def cmd_verify(args):
    problem = read_problem(args.file)
    seed = problem.seed if args.seed is None else args.seed
    problem.seed = seed
    if not problem.points:
        raise ParseError("problem file declares no points", None, None, problem.source)
    reports = [deg.verify_trace_theorem(problem.polynomials, p, seed) for p in problem.points]
    entries = []
    for rep in reports:
        places = None
        if rep.lhs and rep.rhs:
            places = _shared_places(rep.lhs.gw_class, rep.rhs.gw_class)
        (ld, linv), (rd, rinv) = _side(rep.lhs, places), _side(rep.rhs, places)
        methods = {}
        if ld is not None:
            ld.update(local_dim=rep.lhs.local_dim, separating_form=rep.lhs.separating_form)
            methods["direct"] = ld
        if rd is not None:
            rd.update(
                local_dim=rep.rhs.local_dim,
                base_changed_local_dim=rep.rhs.inner.local_dim,
                separating_form=rep.rhs.separating_form,
            )
            methods["trace"] = rd
        timings = None
        if args.timings:
            timings = {
                name: _ms(r.seconds, True)
                for name, r in (("direct", rep.lhs), ("trace", rep.rhs))
                if r is not None
            }
        entries.append(
            {
                "point": _point_dict(rep.point, problem.field),
                "methods": methods,
                "verdict": rep.verdict.value if rep.verdict else None,
                "errors": {k: _math_error_text(v) for k, v in rep.errors.items()},
                "timings_ms": timings,
            }
        )
    if args.json:
        doc = _header(problem, "verify")
        doc["results"] = entries
        print(json.dumps(doc, indent=2))
    else:
        _print_header(problem)
        for rep, entry in zip(reports, entries):
            _print_verify_table(rep, entry)
    verdicts = [r.verdict for r in reports]
    if any(v is Verdict.NOT_EQUAL for v in verdicts):
        return EXIT_NOT_EQUAL
    if any(r.errors for r in reports):
        for r in reports:
            for name, exc in r.errors.items():
                print(f"error ({r.point.name}, {name}): {_math_error_text(exc)}", file=sys.stderr)
        return EXIT_MATH
    if any(v is Verdict.UNDECIDED for v in verdicts):
        return EXIT_UNDECIDED
    return EXIT_OK


def _print_verify_table(rep, entry):
    p = rep.point
    print(f"point {p.name}: ({', '.join(p.as_strings())}) over {p.residue_field!r}")
    m = entry["methods"]
    d, t = m.get("direct", {}), m.get("trace", {})
    rows = [
        ("class", "<" + ", ".join(d.get("diagonal", [])) + ">" if d else "-",
         "<" + ", ".join(t.get("diagonal", [])) + ">" if t else "-"),
        ("rank", d.get("rank", "-"), t.get("rank", "-")),
        ("local dim", d.get("local_dim", "-"), t.get("local_dim", "-")),
        ("det class", d.get("det_square_class", "-"), t.get("det_square_class", "-")),
    ]
    if "signature" in d or "signature" in t:
        rows.append(("signature", d.get("signature", "-"), t.get("signature", "-")))
    hw_keys = list((d.get("hasse_witt") or t.get("hasse_witt") or {}).keys())
    for key in hw_keys:
        rows.append(
            (f"HW {key}", (d.get("hasse_witt") or {}).get(key, "-"),
             (t.get("hasse_witt") or {}).get(key, "-"))
        )
    w0 = max(len(r[0]) for r in rows)
    w1 = max(max(len(str(r[1])) for r in rows), len("direct"))
    print(f"  {'':<{w0}}  {'direct':<{w1}}  trace")
    for name, a, b in rows:
        print(f"  {name:<{w0}}  {str(a):<{w1}}  {b}")
    for name, msg in entry["errors"].items():
        print(f"  {name} failed: {msg}")
    if entry["timings_ms"]:
        print(f"  time (ms): {entry['timings_ms']}")
    print(f"  verdict: {entry['verdict'] or 'n/a'}")


def cmd_global(args):
    problem = read_problem(args.file)
    seed = problem.seed if args.seed is None else args.seed
    problem.seed = seed
    g = deg.global_pipeline(problem.polynomials)
    additivity = None
    local_sum = None
    if problem.complete and problem.points:
        local_sum = GWClass(problem.field, [])
        for p in problem.points:
            local_sum = local_sum + deg.local_degree_direct(problem.polynomials, p, seed)
        from .gw import gw_equal

        additivity = gw_equal(g.gw_class, local_sum)
    places = _shared_places(g.gw_class, local_sum) if local_sum is not None else None
    body, inv = _class_dict(g.gw_class, places)
    body["algebra_dim"] = g.algebra_dim
    if local_sum is not None:
        body["sum_of_local"], _ = _class_dict(local_sum, places)
        body["verdict"] = additivity.value
    body["timings_ms"] = _ms(g.seconds, args.timings)
    if args.json:
        doc = _header(problem, "global")
        doc["results"] = [body]
        print(json.dumps(doc, indent=2))
    else:
        _print_header(problem)
        print(f"algebra dimension: {g.algebra_dim}")
        _print_class_block(g.gw_class, inv, indent="")
        if local_sum is not None:
            print(f"sum of local degrees: {local_sum}")
            print(f"verdict: {additivity.value}")
    if additivity is Verdict.NOT_EQUAL:
        return EXIT_NOT_EQUAL
    if args.require_decided and (not inv.decided or additivity is Verdict.UNDECIDED):
        return EXIT_UNDECIDED
    return EXIT_OK


def cmd_invariants(args):
    k = parse_base_field(args.field)
    if args.generator or args.min_poly:
        if not (args.generator and args.min_poly):
            raise ParseError("--generator and --min-poly go together")
        k = parse_extension(k, {"generator": args.generator, "min_poly": args.min_poly})
    text = args.file.strip()
    if text.startswith("<") and text.endswith(">"):
        text = text[1:-1]
    entries = [parse_constant(t, k) for t in text.split(",") if t.strip()]
    c = GWClass(k, entries)
    body, inv = _class_dict(c)
    if args.json:
        doc = {"command": "invariants", "field": repr(k)}
        doc["results"] = [body]
        print(json.dumps(doc, indent=2))
    else:
        print(f"field: {k!r}")
        _print_class_block(c, inv, indent="")
    if args.require_decided and not inv.decided:
        return EXIT_UNDECIDED
    return EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(
        prog="gwdeg", description="Local A1-degrees in the Grothendieck-Witt ring."
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--require-decided", action="store_true",
                       help="exit 4 when an invariant or verdict cannot be decided")
        p.add_argument("--timings", action="store_true", help="report wall-clock timings")

    p = sub.add_parser("degree", help="local degree at each point of a problem file")
    p.add_argument("file")
    p.add_argument("--method", choices=("direct", "trace"), default="direct")
    p.add_argument("--seed", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_degree)

    p = sub.add_parser("verify", help="compare the direct and trace pipelines")
    p.add_argument("file")
    p.add_argument("--seed", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("global", help="class of the global form")
    p.add_argument("file")
    p.add_argument("--seed", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_global)

    p = sub.add_parser("invariants", help="invariants of a diagonal form, e.g. '1,-1'")
    p.add_argument("file", metavar="diagonal")
    p.add_argument("--field", default="QQ")
    p.add_argument("--generator")
    p.add_argument("--min-poly")
    common(p)
    p.set_defaults(func=cmd_invariants)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except MathError as exc:
        print(f"error: {_math_error_text(exc)}", file=sys.stderr)
        return EXIT_MATH
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
