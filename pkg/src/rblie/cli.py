"""Command-line entry point: ``rblie <command> ...``.

Exit status is 0 on success, 1 on input or validation errors, and 2 when a
check (gsb-check, pbw, rb-verify) runs but does not pass.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional

from .envelope import (RbEnvelope, build_ra_system, pbw_compare, s0_system, verify_rb_identity)
from .errors import RbLieError
from .oplie import Bounds, enumerate_rals_words, enumerate_rls_words, rdegree
from .rewrite import check_gsb
from .termio import (format_rational, load_presentation, parse_rational, parse_term, poly_to_json,
                     print_term)
from .words import Alphabet, enumerate_ls_words, format_word

EXIT_OK, EXIT_INPUT, EXIT_FAIL = 0, 1, 2


def _alphabet(text: str) -> Alphabet:
    names = [n.strip() for n in text.split(",")]
    if any(not n for n in names):
        raise ValueError(f"empty generator name in --alphabet {text!r}")
    return Alphabet(names)


def _weight(args, p) -> Fraction:
    return parse_rational(args.weight) if args.weight is not None else p.weight


def _system(kind: str, p, weight, rdegree_bound=None):
    if kind == "rb":
        return RbEnvelope(p, weight, rdegree_bound=rdegree_bound).system
    if kind == "ra":
        return build_ra_system(p, rdegree_bound=rdegree_bound)
    return s0_system(p, rdegree_bound=rdegree_bound, memoize=True)


def _bounds(args) -> Bounds:
    return Bounds(args.max_deg, args.max_rdeg, max_arg_degree=getattr(args, "max_arg_deg", None))


# commands --------------------------------------------------------------------
def cmd_lswords(args):
    alph = _alphabet(args.alphabet)
    words = enumerate_ls_words(alph.letters, args.max_deg)
    counts = [sum(1 for w in words if len(w) == d) for d in range(1, args.max_deg + 1)]
    data = {
        "command": "lswords",
        "alphabet": list(alph.names),
        "max_degree": args.max_deg,
        "counts": counts,
        "words": [format_word(w) for w in words],
    }
    lines = data["words"] + ["counts: " + ",".join(map(str, counts))]
    return data, lines, EXIT_OK


def cmd_rlswords(args):
    alph = _alphabet(args.alphabet)
    bounds = _bounds(args)
    words = (enumerate_rals_words if args.rals else enumerate_rls_words)(alph, bounds)
    graded: dict = {}
    for w in words:
        graded[(len(w), rdegree(w))] = graded.get((len(w), rdegree(w)), 0) + 1
    data = {
        "command": "rlswords",
        "kind": "rals" if args.rals else "rls",
        "alphabet": list(alph.names),
        "max_degree": args.max_deg,
        "max_rdegree": args.max_rdeg,
        "max_arg_degree": bounds.arg_degree,
        "total": len(words),
        "counts": [{"degree": d, "rdegree": r, "count": c} for (d, r), c in sorted(graded.items())],
        "words": [format_word(w) for w in words],
    }
    lines = data["words"] + [f"count deg={d} rdeg={r}: {c}" for (d, r), c in sorted(graded.items())]
    lines.append(f"total: {len(words)}")
    return data, lines, EXIT_OK


def cmd_nf(args):
    p = load_presentation(args.algebra)
    weight = _weight(args, p)
    system = _system(args.system, p, weight, args.max_rdeg)
    f = parse_term(args.term, p.alphabet)
    nf = system.normal_form(f)
    data = {
        "command": "nf",
        "system": args.system,
        "weight": format_rational(weight),
        "input": poly_to_json(f),
        "normal_form": poly_to_json(nf),
    }
    return data, [print_term(nf)], EXIT_OK


def cmd_gsb_check(args):
    p = load_presentation(args.algebra)
    weight = _weight(args, p)
    system = _system(args.system, p, weight)
    report = check_gsb(system, _bounds(args), max_witnesses=args.max_witnesses)
    witnesses = [
        {"word": format_word(comp.word), "left": print_term(comp.left), "right": print_term(comp.right),
         "normal_form": print_term(nf)}
        for comp, nf in report.witnesses
    ]
    data = {
        "command": "gsb-check",
        "system": args.system,
        "weight": format_rational(weight),
        "passed": report.passed,
        "rules": report.rules,
        "compositions": report.compositions,
        "witnesses": witnesses,
    }
    lines = [f"rules: {report.rules}", f"compositions: {report.compositions}"]
    for w in witnesses:
        lines.append(f"witness at {w['word']}: {w['left']} / {w['right']} -> {w['normal_form']}")
    lines.append("PASS" if report.passed else "FAIL")
    return data, lines, EXIT_OK if report.passed else EXIT_FAIL


def cmd_pbw(args):
    p = load_presentation(args.algebra)
    weight = _weight(args, p)
    report = pbw_compare(p, weight, _bounds(args))
    verdict = "EQUAL" if report.equal else "DIFFERENT"
    witness = None
    if report.witness is not None:
        witness = {"only_in": report.witness[0], "word": format_word(report.witness[1])}
    data = {
        "command": "pbw",
        "weight": format_rational(weight),
        "counts": [{"degree": d, "rdegree": r, "rb": a, "ra": b} for (d, r), (a, b) in report.counts.items()],
        "rb_gsb": report.rb_gsb.passed,
        "ra_gsb": report.ra_gsb.passed,
        "witness": witness,
        "verdict": verdict,
    }
    lines = ["deg rdeg   rb   ra"]
    lines += [f"{d:>3} {r:>4} {a:>4} {b:>4}" for (d, r), (a, b) in report.counts.items()]
    if witness:
        lines.append(f"only in {witness['only_in']}: {witness['word']}")
    lines.append(verdict)
    return data, lines, EXIT_OK if report.equal else EXIT_FAIL


def cmd_rb_verify(args):
    p = load_presentation(args.algebra)
    weight = _weight(args, p)
    env = RbEnvelope(p, weight)
    report = verify_rb_identity(env, _bounds(args))
    failures = [{"a": format_word(a), "b": format_word(b), "residual": print_term(res)}
                for a, b, res in report.failures]
    data = {
        "command": "rb-verify",
        "weight": format_rational(weight),
        "passed": report.passed,
        "pairs": report.pairs,
        "failures": failures,
    }
    lines = [f"pairs: {report.pairs}"]
    lines += [f"residual at ({f['a']}, {f['b']}): {f['residual']}" for f in failures]
    lines.append("PASS" if report.passed else "FAIL")
    return data, lines, EXIT_OK if report.passed else EXIT_FAIL


# parser ----------------------------------------------------------------------
class _ArgumentParser(argparse.ArgumentParser):
    # Usage errors are input errors; keep 2 for failed checks.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="rblie", description="Rota-Baxter Lie envelopes by rewriting.")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)

    def algebra(sp):
        sp.add_argument("--algebra", required=True,
                        help="presentation JSON file, or a bundled name: sl2, heisenberg, abelian1")
        sp.add_argument("--weight", help="override the file's weight, e.g. 1/2")

    sp = sub.add_parser("lswords", help="enumerate LS words")
    sp.add_argument("--alphabet", required=True, help="comma-separated generators, greatest first")
    sp.add_argument("--max-deg", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_lswords)

    sp = sub.add_parser("rlswords", help="enumerate RLS (or RALS) words")
    sp.add_argument("--alphabet", required=True)
    sp.add_argument("--max-deg", type=int, required=True)
    sp.add_argument("--max-rdeg", type=int, default=0)
    sp.add_argument("--max-arg-deg", type=int, help="degree bound for operator arguments")
    sp.add_argument("--rals", action="store_true", help="only words with abelian operator image")
    common(sp)
    sp.set_defaults(func=cmd_rlswords)

    sp = sub.add_parser("nf", help="normal form of a term")
    algebra(sp)
    sp.add_argument("--term", required=True)
    sp.add_argument("--max-rdeg", type=int, help="reject terms beyond this operator degree")
    sp.add_argument("--system", choices=("rb", "ra", "s0"), default="rb")
    common(sp)
    sp.set_defaults(func=cmd_nf)

    sp = sub.add_parser("gsb-check", help="check compositions within bounds")
    algebra(sp)
    sp.add_argument("--system", choices=("rb", "ra", "s0"), default="rb")
    sp.add_argument("--max-deg", type=int, required=True)
    sp.add_argument("--max-rdeg", type=int, default=0)
    sp.add_argument("--max-witnesses", type=int, default=1)
    common(sp)
    sp.set_defaults(func=cmd_gsb_check)

    for name, func, help_ in (("pbw", cmd_pbw, "compare RB and RA reduced words"),
                              ("rb-verify", cmd_rb_verify, "check the Rota-Baxter identity")):
        sp = sub.add_parser(name, help=help_)
        algebra(sp)
        sp.add_argument("--max-deg", type=int, required=True)
        sp.add_argument("--max-rdeg", type=int, default=0)
        common(sp)
        sp.set_defaults(func=func)
    return parser


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        data, lines, code = args.func(args)
    except (RbLieError, ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        if args.format == "json":
            print(json.dumps({"command": args.command, "error": type(exc).__name__, "message": msg}))
        else:
            print(f"error: {msg}", file=sys.stderr)
        return EXIT_INPUT
    if args.format == "json":
        print(json.dumps(data, indent=2))
    else:
        print("\n".join(lines))
    return code


if __name__ == "__main__":
    sys.exit(main())
