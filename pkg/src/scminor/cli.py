"""Command-line interface: graph6 in, verdicts and JSON out.

Verbs: check, minor, hadwiger, gen, enum, topo, verify-theorem.  Graph
input is one graph6 string per line, from a file argument or stdin.  Exit
codes: 0 success, 1 negative verdict (e.g. not self-complementary), 2 usage
or input error, 3 oracle budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections.abc import Iterator

from .graphs import CapacityError, Graph, Graph6Error, parse_graph6, write_graph6
from .antimorphism import check_sachs, cycle_decomposition, find_antimorphism
from .construction import build_plan, realize_minor
from .generators import (
    ENUMERATION_SIZES,
    LARGE_ENUMERATION_SIZES,
    enumerate_sc,
    random_sc,
    sharp_4n,
    sharp_4n_plus_1,
)
from .oracle import DEFAULT_BUDGET, hadwiger
from .topology import CERTIFICATE, INDETERMINATE, report

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class _InputError(Exception):
    def __init__(self, lineno: int, message: str):
        super().__init__(message)
        self.lineno = lineno


def _iter_graphs(path: str) -> Iterator[tuple[int, Graph]]:
    if path == "-":
        stream = sys.stdin
        close = False
    else:
        try:
            stream = open(path, "r", encoding="ascii")
        except OSError as exc:
            raise _InputError(0, str(exc)) from exc
        close = True
    try:
        for lineno, line in enumerate(stream, 1):
            line = line.strip()
            if not line:
                continue
            try:
                yield lineno, parse_graph6(line)
            except (Graph6Error, CapacityError) as exc:
                raise _InputError(lineno, str(exc)) from exc
    finally:
        if close:
            stream.close()


def _emit(payload: dict, plain: str, as_json: bool) -> None:
    print(json.dumps(payload) if as_json else plain)


def _resolve_budget(args: argparse.Namespace) -> int:
    if getattr(args, "budget", None) is not None:
        return args.budget
    raw = os.environ.get("SCMINOR_BUDGET")
    if raw:
        try:
            return int(raw)
        except ValueError as exc:
            raise _InputError(0, f"SCMINOR_BUDGET must be an integer, got {raw!r}") from exc
    return DEFAULT_BUDGET


def _model_dict(model) -> dict:
    return {"k": model.k, "branch_sets": [sorted(s) for s in model.branch_sets]}


def cmd_check(args: argparse.Namespace) -> int:
    code = EXIT_OK
    for _, g in _iter_graphs(args.input):
        rho = find_antimorphism(g)
        if rho is None:
            _emit(
                {"n": g.n, "self_complementary": False},
                "self-complementary: no",
                args.json,
            )
            code = EXIT_NEGATIVE
            continue
        sachs = check_sachs(cycle_decomposition(rho), g.n)
        notation = rho.cycle_notation()
        _emit(
            {
                "n": g.n,
                "self_complementary": True,
                "rho": notation,
                "sachs_ok": sachs.ok,
            },
            f"self-complementary: yes, rho={notation}, "
            f"sachs={'ok' if sachs.ok else sachs.reason}",
            args.json,
        )
    return code


def cmd_minor(args: argparse.Namespace) -> int:
    code = EXIT_OK
    for _, g in _iter_graphs(args.input):
        rho = find_antimorphism(g)
        if rho is None:
            _emit(
                {"self_complementary": False, "model": None},
                "not self-complementary",
                args.json,
            )
            code = EXIT_NEGATIVE
            continue
        plan = build_plan(g, rho)
        model = realize_minor(g, plan)
        if args.json:
            print(
                json.dumps(
                    {
                        "self_complementary": True,
                        "rho": rho.cycle_notation(),
                        "model": _model_dict(model),
                    }
                )
            )
        else:
            print(f"rho={rho.cycle_notation()}")
            for part in plan.per_cycle:
                cyc = " ".join(str(v) for v in part.cycle)
                edges = " ".join(f"({u} {v})" for u, v in part.matching)
                print(
                    f"cycle ({cyc}): generator {part.generator}, "
                    f"shift {part.shift}, contract {edges}"
                )
            if plan.fixed_vertex is not None:
                print(f"fixed vertex: {plan.fixed_vertex}")
            print(model.to_json())
    return code


def cmd_hadwiger(args: argparse.Namespace) -> int:
    budget = _resolve_budget(args)
    code = EXIT_OK
    for _, g in _iter_graphs(args.input):
        outcome = hadwiger(g, budget)
        witness = None if outcome.witness is None else _model_dict(outcome.witness)
        if args.json:
            print(
                json.dumps(
                    {
                        "hadwiger": outcome.value,
                        "exact": outcome.exact,
                        "upper_bound": outcome.upper_bound,
                        "expansions": outcome.expansions,
                        "witness": witness,
                    }
                )
            )
        else:
            if outcome.exact:
                print(f"hadwiger: {outcome.value}")
            else:
                print(
                    f"hadwiger: >= {outcome.value} (budget exhausted, "
                    f"upper bound {outcome.upper_bound})"
                )
            if outcome.witness is not None:
                print(f"witness: {outcome.witness.to_json()}")
        if not outcome.exact:
            code = EXIT_BUDGET
    return code


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        if args.family == "sharp4n":
            graphs = [sharp_4n(args.n)]
        elif args.family == "sharp4n1":
            graphs = [sharp_4n_plus_1(args.n)]
        else:
            graphs = [random_sc(args.n, args.seed + i) for i in range(args.count)]
    except (ValueError, CapacityError) as exc:
        raise _InputError(0, str(exc)) from exc
    for g in graphs:
        text = write_graph6(g)
        _emit({"graph6": text}, text, args.json)
    return EXIT_OK


def cmd_enum(args: argparse.Namespace) -> int:
    try:
        graphs = enumerate_sc(args.n, allow_large=args.allow_large)
    except ValueError as exc:
        raise _InputError(0, str(exc)) from exc
    for g in graphs:
        text = write_graph6(g)
        _emit({"graph6": text}, text, args.json)
    return EXIT_OK


def cmd_topo(args: argparse.Namespace) -> int:
    budget = _resolve_budget(args)
    if not 0 <= args.apex <= 3:
        raise _InputError(0, f"--apex must be in 0..3, got {args.apex}")
    apex_range = tuple(range(args.apex + 1))
    code = EXIT_OK
    for _, g in _iter_graphs(args.input):
        rep = report(g, apex_range=apex_range, budget=budget)
        if args.json:
            print(json.dumps(rep.to_json_dict()))
        else:
            def cert_text(c) -> str:
                if c.status == CERTIFICATE:
                    return c.target
                return "none" if c.status == "none_found" else c.status

            apex_text = " ".join(
                f"apex{j}={'yes' if v else 'no'}"
                for j, v in sorted(rep.apex_numbers.items())
            )
            print(
                f"outerplanar={'yes' if rep.outerplanar else 'no'} "
                f"planar={'yes' if rep.planar else 'no'} "
                f"il={cert_text(rep.il_certificate)} "
                f"ik={cert_text(rep.ik_certificate)} "
                f"{apex_text}"
            )
        if INDETERMINATE in (rep.il_certificate.status, rep.ik_certificate.status):
            code = EXIT_BUDGET
    return code


def cmd_verify_theorem(args: argparse.Namespace) -> int:
    n = args.n
    if n in ENUMERATION_SIZES:
        graphs = enumerate_sc(n)
    elif n in LARGE_ENUMERATION_SIZES:
        graphs = [random_sc(n, args.seed + i) for i in range(args.samples)]
    else:
        raise _InputError(
            0,
            f"supported sizes: {ENUMERATION_SIZES + LARGE_ENUMERATION_SIZES}",
        )
    order = (n + 1) // 2
    verified = 0
    for g in graphs:
        rho = find_antimorphism(g)
        if rho is None:
            continue
        if not check_sachs(cycle_decomposition(rho), n).ok:
            continue
        model = realize_minor(g, build_plan(g, rho))
        if model.k == order:
            verified += 1
    ok = verified == len(graphs)
    _emit(
        {
            "n": n,
            "graphs": len(graphs),
            "verified": verified,
            "clique_order": order,
            "ok": ok,
        },
        f"{len(graphs)} graphs, {verified}/{len(graphs)} "
        f"K{order}-minor certificates verified",
        args.json,
    )
    return EXIT_OK if ok else EXIT_NEGATIVE


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "input",
        nargs="?",
        default="-",
        help="file with one graph6 string per line (default: stdin)",
    )


def _add_json(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="emit one JSON object per line")


def _add_budget(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--budget",
        type=int,
        default=None,
        help="oracle expansion budget (default: SCMINOR_BUDGET env or 10^8)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scminor",
        description="Complete-minor certificates and topology reports for "
        "self-complementary graphs.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("check", help="decide self-complementarity, print rho")
    _add_input(p)
    _add_json(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("minor", help="build the guaranteed clique-minor model")
    _add_input(p)
    _add_json(p)
    p.set_defaults(func=cmd_minor)

    p = sub.add_parser("hadwiger", help="largest complete minor, with witness")
    _add_input(p)
    _add_json(p)
    _add_budget(p)
    p.set_defaults(func=cmd_hadwiger)

    p = sub.add_parser("gen", help="emit generated graphs as graph6")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument(
        "--family",
        choices=("sharp4n", "sharp4n1"),
        help="sharpness family (--n is the family parameter)",
    )
    group.add_argument(
        "--random",
        action="store_true",
        help="random self-complementary graphs (--n is the vertex count)",
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, default=1, help="graphs to emit (random only)")
    p.add_argument("--seed", type=int, default=0)
    _add_json(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser(
        "enum", help="every self-complementary graph on n vertices, one per class"
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--allow-large",
        action="store_true",
        help="permit the slow sizes (n = 12, 13)",
    )
    _add_json(p)
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("topo", help="outerplanarity/planarity/IL/IK/apex report")
    _add_input(p)
    p.add_argument(
        "--apex", type=int, default=2, help="test j-apex for j = 0..APEX (default 2)"
    )
    _add_json(p)
    _add_budget(p)
    p.set_defaults(func=cmd_topo)

    p = sub.add_parser(
        "verify-theorem",
        help="run the guaranteed-minor pipeline over a whole size class",
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--samples",
        type=int,
        default=50,
        help="random sample size for n = 12, 13 (exhaustive sizes ignore this)",
    )
    p.add_argument("--seed", type=int, default=0)
    _add_json(p)
    p.set_defaults(func=cmd_verify_theorem)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _InputError as exc:
        print(f"line {exc.lineno}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
