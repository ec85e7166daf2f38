"""Command-line front end.

Exit status: 0 on success, 1 on usage errors, 2 on domain outcomes such as
NotInAbar, BudgetExceeded or an Unknown rewrite verdict without fallback.
The error class name is written to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import classify as cl
from . import dynamics, factor, rewrite, wordsearch
from .errors import DomainError, MalformedInput, UnknownVerdict
from .ring import Ring, ring_make
from .sl2 import parse_matrix
from .words import format_word, parse_word


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    sel = p.add_mutually_exclusive_group()
    sel.add_argument("--mod", type=int, metavar="N", help="coefficients in Z/NZ")
    sel.add_argument("--field", metavar="P[^M]", help="coefficients in F_p or GF(p^m)")
    p.add_argument("--poly", type=_ints, metavar="c0,...,cm",
                   help="monic irreducible modulus for GF(p^m), low coefficient first")
    p.add_argument("-r", type=int, default=None, help="target parameter r (field mode)")
    p.add_argument("--output", choices=("text", "json"), default="text")
    p.add_argument("--json", dest="output", action="store_const", const="json")
    p.add_argument("--budget", type=int, default=None,
                   help="enumeration / search cap (default: $SLWORD_BUDGET or built-in)")
    p.add_argument("--reduce-letters", action="store_true",
                   help="reduce out-of-range letters instead of rejecting them")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="slword", description="Classify words over finite rings via SL_2.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", parents=[common], help="matrix classification of a word")
    p.add_argument("word")

    p = sub.add_parser("count", parents=[common], help="class sizes for words of length l")
    p.add_argument("-l", type=int, required=True)
    p.add_argument("--enumerate", action="store_true", help="count by enumeration as well")

    p = sub.add_parser("enumerate", parents=[common], help="list the words of a class")
    p.add_argument("-l", type=int, required=True)
    p.add_argument("--verdict", choices=("InA", "InC"), default="InA")

    p = sub.add_parser("reduce", parents=[common], help="rewrite-rule classification")
    p.add_argument("word")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--fallback", choices=("none", "matrix"), default="none")

    p = sub.add_parser("factor", parents=[common], help="prime-word factorization")
    p.add_argument("word")

    p = sub.add_parser("successor", parents=[common], help="immediate successor in Abar^l")
    p.add_argument("word")
    p.add_argument("--predecessor", action="store_true", help="print the predecessor instead")

    p = sub.add_parser("orbit", parents=[common], help="successor cycle and period")
    p.add_argument("word", nargs="?")
    p.add_argument("--all", action="store_true", help="every orbit of Abar^l")
    p.add_argument("-l", type=int, default=None)

    p = sub.add_parser("periodic", parents=[common], help="t and t' for a period word")
    p.add_argument("word", help="the period word (length s)")

    p = sub.add_parser("find-word", parents=[common], help="shortest word for a matrix")
    p.add_argument("--matrix", required=True, metavar="a,b,c,d")

    sub.add_parser("cayley", parents=[common], help="breadth-first cover of SL_2")
    return parser


def _ring(args) -> Ring:
    if args.mod is None and args.field is None:
        raise UsageError("one of --mod or --field is required")
    if args.r is not None and args.field is None:
        raise UsageError("-r is only valid with --field")
    if args.poly is not None and (args.field is None or "^" not in args.field):
        raise UsageError("--poly is only valid with --field p^m")
    try:
        return ring_make(mod=args.mod, field=args.field, poly=args.poly)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _budget(args, default: int | None = None) -> int | None:
    if args.budget is not None:
        return args.budget
    env = os.environ.get("SLWORD_BUDGET")
    return int(env) if env else default


def _word(args, ring, text=None):
    return parse_word(args.word if text is None else text, ring, reduce=args.reduce_letters)


def _r(args, ring):
    return ring(args.r if args.r is not None else 0)


def _target(args, ring):
    return cl.FieldTarget(_r(args, ring)) if args.field is not None else cl.RING


# each handler returns (text lines, input dict, result dict)

def _cmd_classify(args, ring):
    w = _word(args, ring)
    label = cl.classify_field(w, _r(args, ring)) if args.field is not None else cl.classify_ring(w)
    text = [f"{label.verdict} ({label.name}) pi={label.witness}"]
    result = {"verdict": label.verdict.value, "set": label.name,
              "witness": list(label.witness.codes)}
    inp = {"word": format_word(w)}
    if args.field is not None:
        inp["r"] = label.target.r.code
    return text, inp, result


def _enumerated_counts(args, ring, l):
    budget = _budget(args)
    target = _target(args, ring)
    a = len(cl.enumerate_class(ring, target, l, cl.Verdict.IN_A, budget))
    return a, ring.cardinality**l - a


def _cmd_count(args, ring):
    q = ring.cardinality
    inp = {"l": args.l}
    if args.field is not None:
        a, c = cl.count_formula(q, args.l)
        result = {"A": a, "C": c, "method": "formula"}
        text = [f"A: {a}  C: {c}"]
        if args.enumerate:
            ea, ec = _enumerated_counts(args, ring, args.l)
            result.update(enumeratedA=ea, enumeratedC=ec)
            text.append(f"enumerated A: {ea}  C: {ec}")
            inp["r"] = _r(args, ring).code
    else:
        a, c = _enumerated_counts(args, ring, args.l)
        result = {"A": a, "C": c, "method": "enumeration"}
        text = [f"A: {a}  C: {c}"]
    return text, inp, result


def _cmd_enumerate(args, ring):
    words = cl.enumerate_class(ring, _target(args, ring), args.l, args.verdict, _budget(args))
    out = [format_word(w) for w in words]
    inp = {"l": args.l, "verdict": args.verdict}
    if args.field is not None:
        inp["r"] = _r(args, ring).code
    return out, inp, {"count": len(out), "words": out}


def _cmd_reduce(args, ring):
    w = _word(args, ring)
    inp = {"word": format_word(w), "fallback": args.fallback}
    if args.field is not None:
        label, trace = rewrite.classify_by_rewrite_field(w, _r(args, ring))
        verdict = label.verdict
        inp["r"] = label.target.r.code
    else:
        verdict, trace = rewrite.classify_by_rewrite_ring(w)
    result = {"verdict": verdict.value, "trace": trace.to_dict(), "fallbackUsed": False}
    text = trace.lines() if args.trace else [verdict.value]
    if verdict is cl.Verdict.UNKNOWN:
        if args.fallback != "matrix":
            if args.output == "text":
                for line in text:
                    print(line)
            raise UnknownVerdict(f"rewrite rules do not decide {format_word(w)}")
        resolved = cl.classify_ring(w).verdict
        result.update(verdict=resolved.value, fallbackUsed=True)
        text.append(f"{resolved.value} [matrix fallback]")
    return text, inp, result


def _cmd_factor(args, ring):
    w = _word(args, ring)
    f = factor.factorize(w)
    return [str(f)], {"word": format_word(w)}, f.to_dict()


def _cmd_successor(args, ring):
    w = _word(args, ring)
    if args.predecessor:
        v = dynamics.predecessor(w)
        key = "predecessor"
    else:
        v = dynamics.successor(w)
        key = "successor"
    return [format_word(v)], {"word": format_word(w), "direction": key}, {key: format_word(v)}


def _orbit_line(o: dynamics.OrbitInfo) -> str:
    cycle = " ".join(format_word(u) for u in o.cycle)
    return f"s={o.period} period={format_word(o.period_word)} cycle={cycle}"


def _cmd_orbit(args, ring):
    if args.all:
        if args.l is None or args.word is not None:
            raise UsageError("orbit --all takes -l L and no word")
        orbits = dynamics.all_orbits(ring, args.l)
        return ([_orbit_line(o) for o in orbits], {"all": True, "l": args.l},
                {"count": len(orbits), "orbits": [o.to_dict() for o in orbits]})
    if args.word is None:
        raise UsageError("orbit needs a word or --all -l L")
    w = _word(args, ring)
    o = dynamics.orbit(w)
    return [_orbit_line(o)], {"word": format_word(w)}, o.to_dict()


def _cmd_periodic(args, ring):
    w = _word(args, ring)
    pa = dynamics.periodic_t(w)
    subs = " ".join(format_word(u) for u in pa.subwords)
    return ([f"s={pa.s} t={pa.t} t'={pa.t_prime} subwords={subs}"],
            {"periodWord": format_word(w)}, pa.to_dict())


def _cmd_find_word(args, ring):
    M = parse_matrix(args.matrix, ring)
    w = wordsearch.find_word(M, _budget(args))
    return [format_word(w)], {"matrix": list(M.codes)}, {"word": format_word(w), "length": len(w)}


def _cmd_cayley(args, ring):
    rep = wordsearch.cayley_cover(ring, _budget(args))
    hist = " ".join(str(n) for n in rep.per_length_counts)
    text = [f"N={rep.modulus} |SL2|={rep.group_size} reached={rep.reached} "
            f"diameter={rep.max_word_length}", f"per-length: {hist}"]
    return text, {}, rep.to_dict()


HANDLERS = {
    "classify": _cmd_classify,
    "count": _cmd_count,
    "enumerate": _cmd_enumerate,
    "reduce": _cmd_reduce,
    "factor": _cmd_factor,
    "successor": _cmd_successor,
    "orbit": _cmd_orbit,
    "periodic": _cmd_periodic,
    "find-word": _cmd_find_word,
    "cayley": _cmd_cayley,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        ring = _ring(args)
        text, inp, result = HANDLERS[args.command](args, ring)
    except (UsageError, MalformedInput) as exc:
        print(f"slword: usage error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except DomainError as exc:
        print(f"slword: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    if args.output == "json":
        doc = {"command": args.command, "ring": ring.describe(), "input": inp, "result": result}
        print(json.dumps(doc, sort_keys=True))
    else:
        for line in text:
            print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
