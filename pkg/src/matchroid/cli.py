"""Command-line front end.

Every command reads one input file, writes one JSON document to stdout (or
--out), and exits 0 on success/verified, 1 on a property violation, 2 on an
input or limit error.  Progress chatter goes to stderr only, and output is
byte-identical across runs with the same inputs and seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .antimatroids import NotAntimatroidError, is_antimatroid
from .fuzz import fuzz_stable, fuzz_weighted
from .graphs import DEFAULT_ORACLE_LIMIT, OracleLimitError
from .induced import (
    DEFAULT_SWEEP_LIMIT,
    SweepLimitError,
    check_theorem,
    enumerate_codomain_mm,
    enumerate_codomain_sm,
)
from . import io
from .representation import represent_stable, represent_weighted, verify_roundtrip
from .stable import (
    deferred_acceptance,
    enumerate_stable_matchings,
    is_stable,
    restrict_instance,
)
from .weighted import max_weight_matching, oracle_max_weight


def _emit(doc: dict, out: str | None) -> None:
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load_instance(path: str, kind: str):
    if kind == "stable":
        return io.load_stable_instance(path)
    return io.load_weighted_instance(path)


def cmd_induce(args) -> int:
    inst = _load_instance(args.input, args.kind)
    if args.kind == "stable":
        report = enumerate_codomain_sm(inst, args.sweep_limit)
    else:
        report = enumerate_codomain_mm(inst, args.sweep_limit)
    ok, diag = check_theorem(report)
    doc = {
        "command": "induce",
        "kind": args.kind,
        "antimatroid": ok,
        "diagnostic": io.diagnostic_to_json(diag),
    }
    doc.update(io.report_to_json(report))
    _emit(doc, args.out)
    return 0 if ok else 1


def cmd_verify_family(args) -> int:
    family = io.load_set_family(args.input)
    ok, diag = is_antimatroid(family)
    _emit(
        {
            "command": "verify-family",
            "antimatroid": ok,
            "diagnostic": io.diagnostic_to_json(diag),
        },
        args.out,
    )
    return 0 if ok else 1


def cmd_represent(args) -> int:
    family = io.load_set_family(args.input)
    try:
        if args.kind == "stable":
            bundle = represent_stable(family)
            doc = io.stable_instance_to_json(bundle.instance)
        else:
            bundle = represent_weighted(family, formula=args.formula)
            doc = io.weighted_instance_to_json(bundle.instance)
    except NotAntimatroidError as e:
        _emit(
            {
                "command": "represent",
                "antimatroid": False,
                "diagnostic": io.diagnostic_to_json(e.diagnostic),
            },
            args.out,
        )
        return 1
    _emit(doc, args.out)
    return 0


def cmd_roundtrip(args) -> int:
    family = io.load_set_family(args.input)
    try:
        equal, detail = verify_roundtrip(
            family, args.kind, formula=args.formula, sweep_limit=args.sweep_limit
        )
    except NotAntimatroidError as e:
        _emit(
            {
                "command": "roundtrip",
                "antimatroid": False,
                "diagnostic": io.diagnostic_to_json(e.diagnostic),
            },
            args.out,
        )
        return 1
    _emit({"command": "roundtrip", "equal": equal, "report": detail}, args.out)
    return 0 if equal else 1


def cmd_fuzz(args) -> int:
    if args.kind == "stable":
        failures = fuzz_stable(args.trials, args.seed, sweep_limit=args.sweep_limit)
    else:
        failures = fuzz_weighted(
            args.trials,
            args.seed,
            sweep_limit=args.sweep_limit,
            oracle_limit=args.oracle_limit,
        )
    files = []
    if failures:
        outdir = Path(args.out or "counterexamples")
        outdir.mkdir(parents=True, exist_ok=True)
        for fail in failures:
            if fail.kind == "stable":
                doc = io.stable_instance_to_json(fail.instance)
            else:
                doc = io.weighted_instance_to_json(fail.instance)
            doc["_fuzz_reason"] = fail.reason
            path = outdir / f"fuzz-{fail.kind}-{args.seed}-{fail.trial:04d}.json"
            path.write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
            files.append(str(path))
            print(f"counterexample written: {path}", file=sys.stderr)
    _emit(
        {
            "command": "fuzz",
            "kind": args.kind,
            "seed": args.seed,
            "trials": args.trials,
            "failures": len(failures),
            "counterexample_files": files,
        },
        None,
    )
    return 1 if failures else 0


def cmd_oracle_check(args) -> int:
    inst = _load_instance(args.input, args.kind)
    g = inst.graph
    n = len(g.left)
    if n > args.sweep_limit:
        raise SweepLimitError(
            f"sweep limit exceeded: 2**{n} subsets > 2**{args.sweep_limit}"
        )
    checked = skipped = mismatches = 0
    detail = []
    for u_mask in range(1 << n):
        subset = {g.left[i] for i in range(n) if u_mask >> i & 1}
        if args.kind == "weighted":
            n_edges = sum(1 for u, _ in g.edges if u in subset)
            if n_edges > args.oracle_limit:
                skipped += 1
                continue
            solver = max_weight_matching(inst, subset)
            oracle = oracle_max_weight(inst, subset, args.oracle_limit)
            checked += 1
            if solver != oracle:
                mismatches += 1
                detail.append(
                    {
                        "subset": sorted(subset),
                        "solver": sorted(solver.pairs()),
                        "oracle": sorted(oracle.pairs()),
                    }
                )
        else:
            sub = restrict_instance(inst, subset | set(g.right))
            m = deferred_acceptance(inst, subset)
            ok = is_stable(sub, m)
            if ok and len(sub.graph.edges) <= args.oracle_limit:
                all_stable = enumerate_stable_matchings(sub, args.oracle_limit)
                lefts = {s.matched_left() for s in all_stable}
                rights = {s.matched_right() for s in all_stable}
                ok = m in all_stable and len(lefts) <= 1 and len(rights) <= 1
            checked += 1
            if not ok:
                mismatches += 1
                detail.append({"subset": sorted(subset), "matching": sorted(m.pairs())})
    _emit(
        {
            "command": "oracle-check",
            "kind": args.kind,
            "subsets_checked": checked,
            "subsets_skipped": skipped,
            "mismatches": mismatches,
            "detail": detail,
        },
        args.out,
    )
    return 0 if mismatches == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matchroid",
        description=(
            "Induced set families of stable and maximum-weight bipartite "
            "matchings, antimatroid verification, and matching "
            "representations of antimatroids."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, kind=False, formula=False, needs_input=True):
        if needs_input:
            p.add_argument("input", help="input JSON file")
        if kind:
            p.add_argument(
                "--kind", choices=("stable", "weighted"), required=True,
                help="instance kind",
            )
        if formula:
            p.add_argument(
                "--formula", choices=("corrected", "literal"), default="corrected",
                help="weight exponent layout for weighted representations",
            )
        p.add_argument("--seed", type=int, default=0, help="seed for fuzz campaigns")
        p.add_argument(
            "--oracle-limit", type=int, default=DEFAULT_ORACLE_LIMIT,
            help="max edges for exhaustive matching enumeration",
        )
        p.add_argument(
            "--sweep-limit", type=int, default=DEFAULT_SWEEP_LIMIT,
            help="max left size n for 2**n subset sweeps",
        )
        p.add_argument("--out", help="write the JSON document here instead of stdout")

    p = sub.add_parser("induce", help="enumerate the induced family of an instance")
    common(p, kind=True)
    p.set_defaults(func=cmd_induce)

    p = sub.add_parser("verify-family", help="check the antimatroid axioms on a family")
    common(p)
    p.set_defaults(func=cmd_verify_family)

    p = sub.add_parser("represent", help="build a matching instance from an antimatroid")
    common(p, kind=True, formula=True)
    p.set_defaults(func=cmd_represent)

    p = sub.add_parser("roundtrip", help="represent a family, then re-induce and compare")
    common(p, kind=True, formula=True)
    p.set_defaults(func=cmd_roundtrip)

    p = sub.add_parser("fuzz", help="random instances; failures are serialized")
    common(p, kind=True, needs_input=False)
    p.add_argument("--trials", type=int, default=100, help="number of random instances")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("oracle-check", help="cross-check the solver on every subset")
    common(p, kind=True)
    p.set_defaults(func=cmd_oracle_check)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (io.SchemaError, OracleLimitError, SweepLimitError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
