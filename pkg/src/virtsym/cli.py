"""Command-line front end.

All results go to standard output as JSON and are byte-identical across
runs on the same input; progress and timing diagnostics go to standard
error.  Exit codes: 0 success, 1 check failure, 2 usage error, 3 budget
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .crysto import (CrystoElement, SignedAction, coxeter_check,
                     free_parameter_count, holonomy_faithful, torsion_element)
from .intlinalg import abelianization, class2_quotient
from .presentations import FAMILY_KINDS, Presentation, RangeError, family
from .quotients import BudgetExceeded, DEFAULT_BUDGET, hom_count, parse_target
from .raag import is_chordal, pvt_graph
from .schreier import (pure_to_kappa, pvl_subgroup_presentation,
                       subgroup_presentation, transversal_m2)
from .verify import verify_paper
from .words import parse_word

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class UsageError(ValueError):
    pass


def _emit(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _load_presentation(path: str) -> Presentation:
    if path == "-":
        data = json.load(sys.stdin)
    else:
        with open(path) as fh:
            data = json.load(fh)
    return Presentation.from_json(data)


def _cmd_present(args) -> int:
    p = family(args.family, args.n)
    _emit(p.to_json())
    return EXIT_OK


def _cmd_rs(args) -> int:
    p = _load_presentation(args.presentation)
    if args.transversal == "m2":
        T = transversal_m2(p)
        aliases = "paper" if args.alias == "paper" else None
        out = subgroup_presentation(p, T, aliases=aliases, tietze=args.tietze)
    else:
        rho_count = sum(1 for g in p.generators if g.family == "rho")
        n = rho_count + 1
        reference = family("virtual_triplet", n)
        if set(p.generators) != set(reference.generators) \
                or set(p.relators) != set(reference.relators):
            raise UsageError(
                "the staircase transversal applies to the full "
                f"virtual_triplet presentation (expected virtual_triplet {n})")
        out = pvl_subgroup_presentation(n)
    _emit(out.to_json())
    return EXIT_OK


def _cmd_kappa(args) -> int:
    w = parse_word(args.word)
    _emit({"word": str(pure_to_kappa(args.n, w))})
    return EXIT_OK


def _cmd_abelianize(args) -> int:
    inv = abelianization(_load_presentation(args.presentation))
    _emit({"torsion": list(inv.torsion), "freeRank": inv.free_rank})
    return EXIT_OK


def _cmd_nilq2(args) -> int:
    q = class2_quotient(_load_presentation(args.presentation))
    _emit({
        "abelianization": {"torsion": list(q.abelianization.torsion),
                           "freeRank": q.abelianization.free_rank},
        "commutatorStep": {"torsion": list(q.commutator_step.torsion),
                           "freeRank": q.commutator_step.free_rank},
        "order": q.order,
    })
    return EXIT_OK


def _cmd_homcount(args) -> int:
    p = _load_presentation(args.presentation)
    target = parse_target(args.target)
    count = hom_count(p, target, budget=args.budget, jobs=args.jobs)
    _emit({"target": args.target, "count": count})
    return EXIT_OK


def _load_action(path: Optional[str]):
    if path is None:
        return None
    with open(path) as fh:
        return SignedAction.from_json(json.load(fh))


def _cmd_crysto(args) -> int:
    if args.crysto_cmd == "order":
        if args.elem:
            data = json.loads(args.elem)
        else:
            with open(args.elem_file) as fh:
                data = json.load(fh)
        elem = CrystoElement.from_json(data)
        if elem.n != args.n:
            raise UsageError(f"element lives at n={elem.n}, not {args.n}")
        o = elem.order()
        _emit({"order": o, "finite": o is not None})
        return EXIT_OK
    if args.crysto_cmd == "torsion":
        cycle_type = [int(t) for t in args.cycle_type.split(",")]
        if args.params_file:
            with open(args.params_file) as fh:
                params = [int(t) for t in json.load(fh)]
        elif args.params:
            params = [int(t) for t in args.params.split(",")]
        else:
            params = [0] * free_parameter_count(cycle_type)
        elem = torsion_element(args.n, cycle_type, params)
        _emit({"element": elem.to_json(), "order": elem.order()})
        return EXIT_OK
    if args.crysto_cmd == "faithful":
        action = _load_action(args.action)
        if action is not None and not coxeter_check(action):
            raise UsageError("supplied action violates the S_n relations")
        ok = holonomy_faithful(args.n, action=action, limit=args.limit)
        _emit({"faithful": ok})
        return EXIT_OK if ok else EXIT_CHECK_FAILED
    raise UsageError("unknown crysto subcommand")


def _cmd_chordal(args) -> int:
    g = pvt_graph(args.n)
    chordal, witness = is_chordal(g)
    payload = {
        "n": args.n,
        "commutatorFree": chordal,
        "witness": {
            "kind": "perfect_elimination_ordering" if chordal else "chordless_cycle",
            "vertices": [list(v) for v in witness],
        },
    }
    _emit(payload)
    return EXIT_OK


def _cmd_verify(args) -> int:
    reports = verify_paper(args.suite, jobs=args.jobs)
    for report in reports:
        for check in report.checks:
            print(check.line(with_time=True), file=sys.stderr)
    _emit([r.to_json() for r in reports])
    return EXIT_OK if all(r.passed for r in reports) else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="virtsym",
        description="Exact computations in virtual extensions of symmetric groups")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("present", help="print a built-in presentation")
    p.add_argument("family", choices=FAMILY_KINDS)
    p.add_argument("n", type=int)
    p.set_defaults(fn=_cmd_present)

    p = sub.add_parser("rs", help="rewrite the kernel subgroup of a quotient")
    p.add_argument("presentation", help="presentation JSON file, or - for stdin")
    p.add_argument("--transversal", choices=("m2", "mn"), required=True)
    p.add_argument("--alias", choices=("paper",), default=None)
    p.add_argument("--tietze", action="store_true",
                   help="run automatic elimination on the result")
    p.set_defaults(fn=_cmd_rs)

    p = sub.add_parser("kappa", help="rewrite a pure word into pair symbols")
    p.add_argument("n", type=int)
    p.add_argument("word")
    p.set_defaults(fn=_cmd_kappa)

    p = sub.add_parser("abelianize", help="abelian invariants of a presentation")
    p.add_argument("presentation")
    p.set_defaults(fn=_cmd_abelianize)

    p = sub.add_parser("nilq2", help="class-2 nilpotent quotient")
    p.add_argument("presentation")
    p.set_defaults(fn=_cmd_nilq2)

    p = sub.add_parser("homcount", help="count homomorphisms into a finite group")
    p.add_argument("presentation")
    p.add_argument("--target", required=True,
                   help="e.g. S3, S4, Z2xZ2, Z2xZ2xZ2")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=_cmd_homcount)

    p = sub.add_parser("crysto", help="crystallographic quotient arithmetic")
    csub = p.add_subparsers(dest="crysto_cmd", required=True)
    c = csub.add_parser("order")
    c.add_argument("n", type=int)
    c.add_argument("--elem", help="element JSON inline")
    c.add_argument("--elem-file", help="element JSON file")
    c = csub.add_parser("torsion")
    c.add_argument("n", type=int)
    c.add_argument("--cycle-type", required=True, help="e.g. 2,3")
    c.add_argument("--params", help="comma-separated free parameters")
    c.add_argument("--params-file", help="JSON file with a list of parameters")
    c = csub.add_parser("faithful")
    c.add_argument("n", type=int)
    c.add_argument("--action", help="signed action JSON file")
    c.add_argument("--limit", type=int, default=8)
    p.set_defaults(fn=_cmd_crysto)

    p = sub.add_parser("chordal", help="pure-twin commutation graph chordality")
    p.add_argument("n", type=int)
    p.set_defaults(fn=_cmd_chordal)

    p = sub.add_parser("verify-paper", help="run the built-in verification suites")
    p.add_argument("--suite", default="all")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=_cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, RangeError, ValueError, KeyError, OSError,
            json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
