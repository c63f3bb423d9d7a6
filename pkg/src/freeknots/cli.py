"""Command-line front end.

Exit codes: 0 success, 1 negative result (``equal`` mismatch, ``certify``
refusal, other errors), 2 parse failure, 3 wrong component count,
4 budget exceeded, 5 invariance violation found by ``fuzz``.

Budgets come from ``--budget`` / ``--limit`` flags when given, else the
``FREEKNOTS_BRACKET_BUDGET`` and ``FREEKNOTS_CENSUS_LIMIT`` environment
variables, else the library defaults.
"""

from __future__ import annotations

import argparse
import os
import sys

from .bracket import (
    DEFAULT_BRACKET_BUDGET,
    G0_CLASS,
    MinimalityCertificate,
    bracket,
    minimality_certificate,
    reduce_r2,
    z2g_equal,
)
from .diagram import (
    CENSUS_LIMIT,
    FramedDiagram,
    canonical_code,
    census,
    label_sort_key,
    parse_gauss,
    to_text,
    unicursal_count,
)
from .errors import (
    BudgetExceededError,
    FreeKnotError,
    MultiComponentError,
    ParseError,
    WrongComponentCountError,
)
from .interlace import SimpleGraph, realizable_bruteforce
from .moves import find_all_sites, random_walk_with_sites
from .parity import (
    bunches,
    is_irreducibly_odd,
    link_crossing_parity,
    parity_vector,
    project_odd,
)
from .render import render_dot, render_svg

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_COMPONENTS = 3
EXIT_BUDGET = 4
EXIT_VIOLATION = 5


def _read_code(arg: str | None) -> str:
    if arg is None or arg == "-":
        return sys.stdin.read()
    return arg


def _parse(arg: str | None) -> FramedDiagram:
    return parse_gauss(_read_code(arg))


def _bracket_budget(args: argparse.Namespace) -> int:
    if getattr(args, "budget", None) is not None:
        return args.budget
    env = os.environ.get("FREEKNOTS_BRACKET_BUDGET")
    return int(env) if env else DEFAULT_BRACKET_BUDGET


def _census_limit(args: argparse.Namespace) -> int:
    if getattr(args, "limit", None) is not None:
        return args.limit
    env = os.environ.get("FREEKNOTS_CENSUS_LIMIT")
    return int(env) if env else CENSUS_LIMIT


def cmd_canon(args: argparse.Namespace) -> int:
    print(canonical_code(_parse(args.code)))
    return EXIT_OK


def cmd_parity(args: argparse.Namespace) -> int:
    diag = _parse(args.code)
    vec = parity_vector(diag)
    for lab in diag.chords:
        print(f"{lab}\t{'odd' if vec.is_odd(lab) else 'even'}")
    return EXIT_OK


def cmd_bunches(args: argparse.Namespace) -> int:
    part = bunches(_parse(args.code))
    for i, cls in enumerate(part.classes):
        members = " ".join(sorted(cls, key=label_sort_key))
        flag = part.internally_linked[i]
        kind = "singleton" if flag is None else ("linked" if flag else "unlinked")
        print(f"bunch {i}: {{{members}}} {kind}")
    for i, row in enumerate(part.pairing):
        print(f"pairing {i}: {' '.join(str(v) for v in row)}")
    return EXIT_OK


def cmd_bracket(args: argparse.Namespace) -> int:
    value = bracket(_parse(args.code), budget=_bracket_budget(args))
    print(value.serialize())
    return EXIT_OK


def cmd_equal(args: argparse.Namespace) -> int:
    budget = _bracket_budget(args)
    left = bracket(parse_gauss(args.left), budget=budget)
    right = bracket(parse_gauss(args.right), budget=budget)
    if z2g_equal(left, right):
        print("equal")
        return EXIT_OK
    print("distinct")
    return EXIT_FAIL


def cmd_reduce(args: argparse.Namespace) -> int:
    reduced = reduce_r2(_parse(args.code))
    print(canonical_code(reduced))
    return EXIT_OK


def cmd_moves(args: argparse.Namespace) -> int:
    diag = _parse(args.code)
    for site in find_all_sites(diag, include_adds=not args.no_adds):
        print(site.to_text())
    return EXIT_OK


def cmd_fuzz(args: argparse.Namespace) -> int:
    diag = _parse(args.code)
    comps = unicursal_count(diag)
    check = args.check
    if check == "auto":
        check = "bracket" if comps == 1 else "link-parity"
    if check == "link-parity" and comps != 2:
        raise WrongComponentCountError("link-parity check needs two components")
    budget = _bracket_budget(args)
    baseline_bracket = (
        bracket(diag, budget=budget) if check == "bracket" else None
    )
    baseline_parity = (
        link_crossing_parity(diag) if check == "link-parity" else None
    )
    for trial in range(args.trials):
        seed = args.seed + trial
        trail, sites = random_walk_with_sites(
            diag, args.steps, seed, args.max_chords
        )
        for step, current in enumerate(trail[1:], start=1):
            if check == "bracket":
                value = bracket(current, budget=budget)
                ok = z2g_equal(value, baseline_bracket)
            elif check == "link-parity":
                ok = link_crossing_parity(current) == baseline_parity
            else:
                ok = True
            if not ok:
                print(f"trial={trial} seed={seed} step={step} status=VIOLATION")
                print(f"start: {to_text(diag)}")
                for s in sites[:step]:
                    print(f"  move: {s.to_text()}")
                print(f"reached: {to_text(current)}")
                return EXIT_VIOLATION
        print(f"trial={trial} seed={seed} steps={args.steps} status=ok")
        for s in sites:
            print(f"  move: {s.to_text()}")
    print(f"all {args.trials} trials passed ({check} check)")
    return EXIT_OK


def cmd_project(args: argparse.Namespace) -> int:
    diag = _parse(args.code)
    if args.iterate:
        current = diag
        index = 0
        print(f"0\t{canonical_code(current)}")
        while parity_vector(current).odd:
            current = project_odd(current)
            index += 1
            print(f"{index}\t{canonical_code(current)}")
        print(f"filtration_index\t{index}")
    else:
        print(canonical_code(project_odd(diag)))
    return EXIT_OK


def _catalog_record(code: str, budget: int) -> str:
    diag = parse_gauss(code)
    vec = parity_vector(diag)
    odd_flag = bool(is_irreducibly_odd(diag))
    value = bracket(diag, budget=budget)
    nontrivial = not z2g_equal(value, G0_CLASS)
    fields = [
        str(diag.chord_count),
        code,
        str(len(vec.even)),
        str(len(vec.odd)),
        "true" if odd_flag else "false",
        str(len(value)),
        "true" if nontrivial else "false",
    ]
    return "\t".join(fields)


def cmd_census(args: argparse.Namespace) -> int:
    limit = _census_limit(args)
    budget = _bracket_budget(args)
    if args.max_chords > limit:
        raise BudgetExceededError(
            f"census up to {args.max_chords} chords exceeds the guard of {limit}"
        )
    rows = []
    for n in range(args.max_chords + 1):
        for code in sorted(census(n, limit)):
            rows.append((n, code))
    lines = ["# chords\tcode\teven\todd\tirreducibly_odd\tbracket_size\tnontrivial"]
    lines += [_catalog_record(code, budget) for _, code in rows]
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_realizable(args: argparse.Namespace) -> int:
    if args.graph_file:
        with open(args.graph_file, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    g = SimpleGraph.from_adjacency_text(text)
    found = realizable_bruteforce(g, limit=_census_limit(args))
    if found is None:
        print("unrealizable")
        return EXIT_FAIL
    print(canonical_code(found))
    return EXIT_OK


def cmd_certify(args: argparse.Namespace) -> int:
    result = minimality_certificate(
        _parse(args.code), budget=_bracket_budget(args)
    )
    if isinstance(result, MinimalityCertificate):
        print(f"certificate subject={result.subject!r} chords={result.chord_count}")
        print(result.basis)
        return EXIT_OK
    print(f"refusal subject={result.subject!r} reason={result.reason}")
    if result.even_chord is not None:
        print(f"witness even_chord={result.even_chord}")
    if result.ambiguous_pair is not None:
        print(f"witness ambiguous_pair={result.ambiguous_pair[0]},{result.ambiguous_pair[1]}")
    return EXIT_FAIL


def cmd_link_parity(args: argparse.Namespace) -> int:
    print(link_crossing_parity(_parse(args.code)))
    return EXIT_OK


def cmd_render(args: argparse.Namespace) -> int:
    diag = _parse(args.code)
    if args.format == "svg":
        text = render_svg(diag)
    else:
        text = render_dot(diag)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _add_code_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("code", nargs="?", help="Gauss code ('-' or omitted: stdin)")


def _add_budget(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget", type=int, default=None, help="max even chords smoothed")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="freeknots",
        description="Framed 4-graphs modulo Reidemeister moves: invariants and oracles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("canon", help="canonical code of a diagram")
    _add_code_arg(p)
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("parity", help="per-chord parity")
    _add_code_arg(p)
    p.set_defaults(func=cmd_parity)

    p = sub.add_parser("bunches", help="bunch partition and pairing matrix")
    _add_code_arg(p)
    p.set_defaults(func=cmd_bunches)

    p = sub.add_parser("bracket", help="bracket value in the mod-2 diagram space")
    _add_code_arg(p)
    _add_budget(p)
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser("equal", help="compare the brackets of two diagrams")
    p.add_argument("left")
    p.add_argument("right")
    _add_budget(p)
    p.set_defaults(func=cmd_equal)

    p = sub.add_parser("reduce", help="unique R2-irreducible representative")
    _add_code_arg(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("moves", help="enumerate applicable move sites")
    _add_code_arg(p)
    p.add_argument("--no-adds", action="store_true", help="skip increasing moves")
    p.set_defaults(func=cmd_moves)

    p = sub.add_parser("fuzz", help="random-walk invariance checking")
    _add_code_arg(p)
    p.add_argument("--steps", type=int, default=15)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--max-chords", type=int, default=10)
    p.add_argument(
        "--check",
        choices=["auto", "bracket", "link-parity", "none"],
        default="auto",
    )
    _add_budget(p)
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("project", help="delete all odd chords")
    _add_code_arg(p)
    p.add_argument("--iterate", action="store_true", help="print the full orbit")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("census", help="catalog all diagrams up to a chord count")
    p.add_argument("--max-chords", type=int, required=True)
    p.add_argument("--out", default=None)
    p.add_argument("--limit", type=int, default=None, help="census guard override")
    _add_budget(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("realizable", help="search the census for a realization")
    p.add_argument("graph_file", nargs="?", help="adjacency-list file (default stdin)")
    p.add_argument("--limit", type=int, default=None, help="census guard override")
    p.set_defaults(func=cmd_realizable)

    p = sub.add_parser("certify", help="minimality certificate for a diagram")
    _add_code_arg(p)
    _add_budget(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("link-parity", help="two-component crossing parity")
    _add_code_arg(p)
    p.set_defaults(func=cmd_link_parity)

    p = sub.add_parser("render", help="emit an SVG or DOT figure")
    _add_code_arg(p)
    p.add_argument("--format", choices=["svg", "dot"], default="svg")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (MultiComponentError, WrongComponentCountError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COMPONENTS
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except FreeKnotError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
