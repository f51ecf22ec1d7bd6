"""Command-line front end.

Subcommands: bounds, construct, direct, verify, solve, export-code, table.
Exit codes: 0 success, 1 invalid input, 2 theorem or bound not applicable,
3 search budget exhausted.  Human-readable errors go to standard error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import bounds as bd
from .bounds import NotApplicableError, best_upper_bound, exact_by_theorems
from .codes import deletion_channel_check, to_constant_weight, to_indel_code
from .construct import construct_optimal
from .core import (
    DesignParams,
    StructuralError,
    structural_diagnostics,
    validate_directed,
    validate_packing,
)
from .directing import DirectingError, direct_packing
from .io import (
    DesignDocument,
    code_to_dict,
    dumps_design,
    load_design,
    save_code,
    save_design,
)
from .solve import OPTIMAL, SearchConfig, dpdn_exact, pdn_exact

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_NOT_APPLICABLE = 2
EXIT_BUDGET = 3


class _UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); keep 2 for "not applicable"
        raise _UsageError(message)


def _add_params(sub, *, with_lambda: bool = True) -> None:
    sub.add_argument("--v", type=int, required=True, help="number of points")
    sub.add_argument("--k", type=int, required=True, help="block size")
    sub.add_argument("--t", type=int, default=2, help="tuple size (default 2)")
    if with_lambda:
        sub.add_argument(
            "--lambda", dest="lam", type=int, default=1, help="max multiplicity (default 1)"
        )


def _params(args) -> DesignParams:
    return DesignParams(args.v, args.k, args.t, args.lam)


def _bound_rows(params: DesignParams, directed: bool) -> list[tuple[str, int | None, bool]]:
    rows: list[tuple[str, int | None, bool]] = []
    if directed:
        if (params.t, params.lam) == (2, 1):
            rep = bd.exact_dpdn_by_theorem(params.v, params.k)
            rows.append((rep.provenance, rep.value, rep.exact))
        shadow = params.with_lam(math.factorial(params.t) * params.lam)
        for rep in bd.bound_candidates(shadow):
            rows.append((f"{bd.VIA_UNDIRECTED}({rep.provenance})", rep.value, False))
        return rows
    for rep in bd.bound_candidates(params):
        rows.append((rep.provenance, rep.value, rep.exact))
        if rep.provenance == bd.SECOND_JOHNSON and rep.detail.get("closed_form") is not None:
            rows.append((f"{bd.SECOND_JOHNSON}(closed)", rep.detail["closed_form"], False))
    return rows


def cmd_bounds(args) -> int:
    params = _params(args)
    rows = _bound_rows(params, args.directed)
    best = best_upper_bound(params, directed=args.directed)
    if args.tsv:
        print("provenance\tvalue\tkind")
        for name, value, exact in rows:
            kind = "exact" if exact else ("upper" if value is not None else "n/a")
            print(f"{name}\t{'' if value is None else value}\t{kind}")
        print(f"best\t{best.value}\t{best.provenance}")
    else:
        width = max(len(name) for name, _, _ in rows)
        for name, value, exact in rows:
            shown = "not applicable" if value is None else str(value)
            mark = "  (exact)" if exact and value is not None else ""
            print(f"{name:<{width}}  {shown}{mark}")
        print(f"best: {best.value} via {best.provenance}")
    return EXIT_OK


def cmd_construct(args) -> int:
    params = _params(args)
    design, report = construct_optimal(params)
    doc = DesignDocument(design, params.k, params.t, params.lam)
    if args.output:
        save_design(args.output, design, k=params.k, t=params.t, lam=params.lam)
        print(
            f"constructed {len(design.blocks)} blocks via {report.provenance} -> {args.output}"
        )
    else:
        sys.stdout.write(dumps_design(doc))
    return EXIT_OK


def cmd_direct(args) -> int:
    doc = load_design(args.input)
    if doc.directed:
        raise ValueError("input design is already directed")
    directed = direct_packing(doc.design)
    if args.output:
        save_design(args.output, directed, k=doc.k, t=2, lam=1)
        print(f"directed {len(directed.blocks)} blocks -> {args.output}")
    else:
        sys.stdout.write(dumps_design(DesignDocument(directed, doc.k, 2, 1)))
    return EXIT_OK


def cmd_verify(args) -> int:
    doc = load_design(args.input)
    k = doc.k if doc.k is not None else doc.design.v
    params = DesignParams(doc.design.v, k, doc.t, doc.lam)
    if doc.directed:
        report = validate_directed(doc.design, params)
    else:
        report = validate_packing(doc.design, params)
    print(f"valid: {'yes' if report.valid else 'no'}")
    if report.worst_t_set is not None:
        print(
            f"worst t-set: {report.worst_t_set} multiplicity "
            f"{report.worst_multiplicity} (limit {params.lam})"
        )
    uniform = doc.k is not None and all(
        len(block) == doc.k for block in doc.design.blocks
    )
    if report.valid and not doc.directed and uniform and doc.design.blocks:
        for name, passed, witness in structural_diagnostics(doc.design, params):
            print(f"check {name}: {'pass' if passed else 'FAIL'} {witness}")
    return EXIT_OK if report.valid else EXIT_INVALID


def cmd_solve(args) -> int:
    config = SearchConfig(node_budget=args.budget)
    if args.directed:
        if args.t != 2 or args.lam != 1:
            raise ValueError("directed solving supports only t=2 and lambda=1")
        result = dpdn_exact(args.v, args.k, config)
        label = "DPDN"
    else:
        result = pdn_exact(_params(args), config)
        label = "PDN"
    print(f"{label} = {result.n} ({result.certificate})")
    return EXIT_OK if result.certificate == OPTIMAL else EXIT_BUDGET


def cmd_export_code(args) -> int:
    doc = load_design(args.input)
    params = doc.params
    if args.format == "cw":
        if doc.directed:
            raise ValueError("constant-weight export needs an unordered design")
        code = to_constant_weight(doc.design, params)
    else:
        if not doc.directed:
            raise ValueError("deletion-code export needs a directed design")
        code = to_indel_code(doc.design, params)
    if args.output:
        save_code(args.output, code)
        print(f"exported {len(code.words)} words -> {args.output}")
    else:
        print(json.dumps(code_to_dict(code), indent=2))
    if args.check_deletions is not None:
        if args.format != "indel":
            raise ValueError("--check-deletions applies to indel codes only")
        ok = deletion_channel_check(code, args.check_deletions)
        print(f"deletion check (s={args.check_deletions}): {'pass' if ok else 'fail'}")
        if not ok:
            return EXIT_INVALID
    return EXIT_OK


def cmd_table(args) -> int:
    rows = []
    for v in range(args.v_min, args.v_max + 1):
        for k in range(args.k_min, min(args.k_max, v) + 1):
            if k < args.t:
                continue
            params = DesignParams(v, k, args.t, args.lam)
            exact = exact_by_theorems(params)
            if exact.value is not None:
                rows.append((v, k, exact.value, "exact", exact.provenance))
            else:
                best = best_upper_bound(params)
                rows.append((v, k, best.value, "upper", best.provenance))
    if args.tsv:
        print("v\tk\tvalue\tkind\tprovenance")
        for row in rows:
            print("\t".join(str(c) for c in row))
    else:
        print(f"{'v':>3} {'k':>3} {'value':>6} {'kind':>6}  provenance")
        for v, k, value, kind, provenance in rows:
            print(f"{v:>3} {k:>3} {value:>6} {kind:>6}  {provenance}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="packings", description=__doc__)
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("bounds", help="print every applicable bound")
    _add_params(sub)
    sub.add_argument("--directed", action="store_true")
    sub.add_argument("--tsv", action="store_true")
    sub.set_defaults(func=cmd_bounds)

    sub = commands.add_parser("construct", help="build an optimal design in the window regime")
    _add_params(sub)
    sub.add_argument("-o", "--output", help="write the design file here")
    sub.set_defaults(func=cmd_construct)

    sub = commands.add_parser("direct", help="order the blocks of a 2-fold packing")
    sub.add_argument("-i", "--input", required=True)
    sub.add_argument("-o", "--output")
    sub.set_defaults(func=cmd_direct)

    sub = commands.add_parser("verify", help="validate a design file")
    sub.add_argument("-i", "--input", required=True)
    sub.set_defaults(func=cmd_verify)

    sub = commands.add_parser("solve", help="exact search for the packing number")
    _add_params(sub)
    sub.add_argument("--directed", action="store_true")
    sub.add_argument("--budget", type=int, default=None, help="node budget for the search")
    sub.set_defaults(func=cmd_solve)

    sub = commands.add_parser("export-code", help="export a design as a code")
    sub.add_argument("-i", "--input", required=True)
    sub.add_argument("--format", choices=("cw", "indel"), required=True)
    sub.add_argument("--check-deletions", type=int, default=None, metavar="S")
    sub.add_argument("-o", "--output")
    sub.set_defaults(func=cmd_export_code)

    sub = commands.add_parser("table", help="best bound or exact value per cell")
    sub.add_argument("--v-min", type=int, required=True)
    sub.add_argument("--v-max", type=int, required=True)
    sub.add_argument("--k-min", type=int, required=True)
    sub.add_argument("--k-max", type=int, required=True)
    sub.add_argument("--t", type=int, default=2)
    sub.add_argument("--lambda", dest="lam", type=int, default=1)
    sub.add_argument("--tsv", action="store_true")
    sub.set_defaults(func=cmd_table)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except NotApplicableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_APPLICABLE
    except (StructuralError, DirectingError, _UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
