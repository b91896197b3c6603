"""Command-line interface.

Subcommands: catalog, verify, query, hasse, oracle.  Exit codes follow one
contract everywhere: 0 all requested checks pass, 1 a mathematical check
failed (witness printed), 2 usage error or size guard.
"""

from __future__ import annotations

import argparse
import json
import sys

from .conjugacy import (
    STRONG_CONJ_LIMIT,
    catalog_subsets,
    subset_involution,
    verify_ascent_classes,
    verify_coxeter_bound,
    verify_subset_conjugacy,
    verify_twisted_minimum,
    verify_unique_max_classification,
)
from .coxeter import (
    CartanType,
    ENUMERATION_LIMIT,
    build_root_system,
    bruhat_leq,
    element_to_word_str,
)
from .errors import GuardError
from .partitions import cycle_type
from .permutations import Permutation, permutation_to_weyl, weyl_to_permutation
from .sl_criteria import (
    JordanClass,
    bruhat_lower_set,
    dense_cell_involution,
    format_class_summary,
    involution_cell_meets,
    passes_corank_bound,
    weyl_class_inside,
)
from .oracle import (
    COMPLETE_PAIRS,
    intersection_table,
    validate_class,
    _is_prime,
)

USAGE_ERROR = 2
CHECK_FAILED = 1

_VERIFY_CHECKS = {
    "m-classification": (verify_unique_max_classification, ENUMERATION_LIMIT),
    "ascent": (verify_ascent_classes, STRONG_CONJ_LIMIT),
    "twisted-min": (verify_twisted_minimum, ENUMERATION_LIMIT),
    "conjugate-j": (verify_subset_conjugacy, STRONG_CONJ_LIMIT),
    "coxeter-bound": (verify_coxeter_bound, ENUMERATION_LIMIT),
}


def _fail_usage(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return USAGE_ERROR


def _parse_type(s: str) -> CartanType:
    return CartanType.from_string(s)


def _element_string(w) -> str:
    if w.rs.cartan_type.family == "A":
        return weyl_to_permutation(w).cycle_string()
    return element_to_word_str(w)


def _load_jordan(path: str) -> JordanClass:
    with open(path, "r", encoding="utf-8") as fh:
        return JordanClass.from_json_dict(json.load(fh))


def cmd_catalog(args) -> int:
    try:
        t = _parse_type(args.type)
    except ValueError as exc:
        return _fail_usage(str(exc))
    rs = build_root_system(t)
    subsets = sorted(catalog_subsets(t), key=lambda J: (len(J), sorted(J)))
    members = []
    for J in subsets:
        m = subset_involution(rs, J)
        members.append(
            {
                "subset": sorted(J),
                "element": _element_string(m),
                "length": m.length,
            }
        )
    if args.format == "json":
        print(json.dumps({"type": str(t), "entries": members}, indent=2))
    else:
        print(f"classifying subsets and their involutions for {t} "
              f"({len(members)} entries):")
        for rec in members:
            subset = "{" + " ".join(map(str, rec["subset"])) + "}"
            print(f"  J={subset:<20} m={rec['element']:<24} length={rec['length']}")
    return 0


def cmd_verify(args) -> int:
    try:
        t = _parse_type(args.type)
    except ValueError as exc:
        return _fail_usage(str(exc))
    if args.checks == "all":
        selected = [
            name
            for name, (_, limit) in _VERIFY_CHECKS.items()
            if t.weyl_order <= limit
        ]
        skipped = [n for n in _VERIFY_CHECKS if n not in selected]
        if not selected:
            return _fail_usage(
                f"no verification suite fits |W({t})| = {t.weyl_order}; "
                "request a specific check with --checks and --allow-large"
            )
    else:
        selected = [c.strip() for c in args.checks.split(",") if c.strip()]
        skipped = []
        unknown = [c for c in selected if c not in _VERIFY_CHECKS]
        if unknown:
            return _fail_usage(
                f"unknown checks {unknown}; available: {sorted(_VERIFY_CHECKS)} or 'all'"
            )
        for name in selected:
            if t.weyl_order > _VERIFY_CHECKS[name][1] and not args.allow_large:
                return _fail_usage(
                    f"|W({t})| = {t.weyl_order} exceeds the guard for {name}; "
                    "rerun with --allow-large"
                )
    if t.weyl_order > ENUMERATION_LIMIT and not args.allow_large:
        return _fail_usage(
            f"|W({t})| = {t.weyl_order} exceeds {ENUMERATION_LIMIT}; "
            "rerun with --allow-large"
        )
    reports = []
    try:
        for name in selected:
            fn = _VERIFY_CHECKS[name][0]
            if name in ("ascent", "conjugate-j"):
                reports.append(fn(t))
            else:
                reports.append(fn(t, allow_large=args.allow_large))
    except GuardError as exc:
        return _fail_usage(str(exc))
    ok = all(r.passed for r in reports)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "type": str(t),
                    "passed": ok,
                    "skipped": skipped,
                    "reports": [r.to_dict() for r in reports],
                },
                indent=2,
            )
        )
    else:
        for r in reports:
            print(r.to_text())
        for name in skipped:
            print(f"# skipped {name}: group too large for this check")
    return 0 if ok else CHECK_FAILED


def cmd_query(args) -> int:
    try:
        c = _load_jordan(args.jordan)
        w = Permutation.parse(args.perm, c.n_plus_1)
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        return _fail_usage(str(exc))
    lam = cycle_type(w)
    record = {
        "class": c.to_json_dict(),
        "summary": {
            line.split(": ", 1)[0]: line.split(": ", 1)[1]
            for line in format_class_summary(c)[1:]
        },
        "perm": w.cycle_string(),
        "cycle_type": str(lam),
        "full_weyl_class_inside": weyl_class_inside(c, lam),
    }
    if w.is_involution:
        record["involution"] = True
        record["meets_cell"] = involution_cell_meets(c, w)
    else:
        record["involution"] = False
        record["corank_bound_holds"] = passes_corank_bound(c, w)
    if args.format == "json":
        print(json.dumps(record, indent=2))
    else:
        for line in format_class_summary(c):
            print(line)
        print(f"perm: {w.cycle_string()}  (cycle type {lam})")
        if w.is_involution:
            verdict = "nonempty" if record["meets_cell"] else "empty"
            print(f"involution verdict: intersection with BwB is {verdict}")
        else:
            held = "holds" if record["corank_bound_holds"] else "fails"
            print(
                "non-involution: necessary corank bound "
                f"{held} (membership itself undecided at element level)"
            )
        inside = "yes" if record["full_weyl_class_inside"] else "no"
        print(f"entire Weyl class of this cycle type inside: {inside}")
    return 0


def cmd_hasse(args) -> int:
    try:
        c = _load_jordan(args.jordan)
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        return _fail_usage(str(exc))
    if c.n_plus_1 > 6:
        return _fail_usage(
            f"n+1 = {c.n_plus_1} > 6 would produce an unreadable diagram"
        )
    lower = sorted(
        bruhat_lower_set(c), key=lambda w: (w.inversions(), w.images)
    )
    rs = build_root_system(f"A{c.n_plus_1 - 1}")
    weyl = {w: permutation_to_weyl(rs, w) for w in lower}
    lines = [
        "digraph bruhat_lower_set {",
        "  rankdir=BT;",
        f"  label=\"cells below {dense_cell_involution(c).cycle_string()} "
        f"for SL({c.n_plus_1}) {c.describe()}\";",
    ]
    for w in lower:
        lines.append(f'  "{w.cycle_string()}";')
    for u in lower:
        for v in lower:
            if v.inversions() == u.inversions() + 1 and bruhat_leq(weyl[u], weyl[v]):
                lines.append(f'  "{u.cycle_string()}" -> "{v.cycle_string()}";')
    lines.append("}")
    text = "\n".join(lines)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def cmd_oracle(args) -> int:
    if not _is_prime(args.q):
        return _fail_usage(f"q = {args.q} is not prime")
    try:
        c = _load_jordan(args.jordan)
        table = intersection_table(c, args.q, allow_large=args.allow_large)
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        return _fail_usage(str(exc))
    except GuardError as exc:
        return _fail_usage(str(exc))
    report = validate_class(c, args.q, table)
    fatal_kinds = {
        "sound": ("SOUND",),
        "complete": ("SOUND", "COMPLETE"),
        "all": ("SOUND", "COMPLETE"),
    }[args.checks]
    fatal = report.failed(fatal_kinds)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "class": c.to_json_dict(),
                    "q": args.q,
                    "orbit_size": table.orbit_size,
                    "cells": [w.cycle_string() for w in table.sorted_cells()],
                    "opposite_cells": [
                        w.cycle_string() for w in table.sorted_opposite()
                    ],
                    "bruhat_max": table.bruhat_max.cycle_string()
                    if table.bruhat_max
                    else None,
                    "complete_pair": (c.n_plus_1, args.q) in COMPLETE_PAIRS,
                    "report": report.to_dict(),
                    "exit_failures": [r.to_dict() for r in fatal],
                },
                indent=2,
            )
        )
    else:
        for line in format_class_summary(c):
            print(line)
        print(f"q: {args.q}")
        print(f"orbit size: {table.orbit_size}")
        print("cells met (BwB): " + ", ".join(w.cycle_string() for w in table.sorted_cells()))
        print(
            "opposite cells met (BwB^-): "
            + ", ".join(w.cycle_string() for w in table.sorted_opposite())
        )
        print(
            "bruhat max: "
            + (table.bruhat_max.cycle_string() if table.bruhat_max else "none")
        )
        print(report.to_text())
    return 0 if not fatal else CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bruhatcells",
        description="Conjugacy classes meeting Bruhat cells: catalogs, "
        "verification suites, SL(n+1) queries and a finite-field oracle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="classifying subsets and their involutions")
    p.add_argument("--type", required=True, help="Cartan type, e.g. A3, B4, E6")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("verify", help="run exhaustive verification suites")
    p.add_argument("--type", required=True)
    p.add_argument(
        "--checks",
        default="all",
        help="comma-separated subset of "
        f"{sorted(_VERIFY_CHECKS)} or 'all'",
    )
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("query", help="cell membership verdicts for one class")
    p.add_argument("--jordan", required=True, help="JordanClass JSON file")
    p.add_argument("--perm", required=True, help="permutation, e.g. '(1 2)(3 4)'")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("hasse", help="DOT diagram of the cells below the dense element")
    p.add_argument("--jordan", required=True)
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("oracle", help="empirical cell tables over a prime field")
    p.add_argument("--jordan", required=True)
    p.add_argument("--q", type=int, required=True, help="prime field size")
    p.add_argument(
        "--checks",
        choices=("sound", "complete", "all"),
        default="sound",
        help="which failing checks set a nonzero exit code",
    )
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
