"""Command-line front end.

Exit status: 0 when the computation succeeded, 1 when it produced a
witness against the property asked about (a prefix violation, an adjacent
pair, a detected solution), 2 on bad input or an exceeded resource bound.
"""

from __future__ import annotations

import argparse
import re
import sys
from typing import List, Optional, Sequence

from .automata import StateLimitExceeded
from .grammar import (EnumerationLimitExceeded, Grammar, GrammarError, enumerate_up_to_length,
                      parse_grammar, serialize_grammar)
from .lexorder import binary_code, encode_grammar, prefix_free_bounded
from .order import (NOT_DENSE, SolutionDetected, classify_regular_order_type, format_word,
                    middle_witness, probe_density_cfl)
from .pcp import (PcpError, brute_force_solve, build_reduction_grammar, gap_witness,
                  neighbor_witnesses, parse_pcp, verify_solution)

OK, REFUTED, ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def parse_word(text: str) -> tuple:
    """Comma- or space-separated tokens; ``-`` is the empty word."""
    text = text.strip()
    if text == "-":
        return ()
    tokens = [t for t in re.split(r"[,\s]+", text) if t]
    if not tokens:
        raise UsageError("empty word argument (spell the empty word as '-')")
    return tuple(tokens)


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError("cannot read %s: %s" % (path, exc.strerror)) from None


def _load_grammar(path: str) -> Grammar:
    return parse_grammar(_read(path))


def _load_reduction(grammar_path: str, pcp_path: str):
    instance = parse_pcp(_read(pcp_path))
    r = build_reduction_grammar(instance)
    g = _load_grammar(grammar_path)
    if g != r.grammar:
        raise UsageError("%s is not the reduction grammar of %s" % (grammar_path, pcp_path))
    return instance, r


def _write(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError("cannot write %s: %s" % (path, exc.strerror)) from None


# --------------------------------------------------------------------------
# commands

def cmd_pcp_solve(args, out) -> int:
    instance = parse_pcp(_read(args.file))
    sol = brute_force_solve(instance, args.max_depth)
    if sol is None:
        print("no solution up to depth %d" % args.max_depth, file=out)
    else:
        print("solution: " + " ".join(map(str, sol)), file=out)
    return OK


def cmd_pcp_reduce(args, out) -> int:
    instance = parse_pcp(_read(args.file))
    r = build_reduction_grammar(instance)
    g = r.grammar
    comments: List[str] = ["reduction grammar for %d pair(s)" % instance.n]
    code = None
    if args.binary:
        code = binary_code(r.delta)
        g = encode_grammar(g, code)
        comments.append("binary coding, %d bits per letter" % code.width)
        comments += ["code %s %s" % (t, "".join(code.table[t])) for t in r.delta.tokens]
    witness_text = None
    if args.solution is not None:
        try:
            sol = tuple(int(x) for x in args.solution.split(",") if x.strip())
        except ValueError:
            raise UsageError("--solution expects comma-separated indices") from None
        if not verify_solution(instance, sol):
            raise UsageError("%s is not a solution" % ",".join(map(str, sol)))
        ua, ub = gap_witness(r, instance, sol)
        if code is not None:
            ua, ub = code.encode(ua), code.encode(ub)
        witness_text = "u_alpha: %s\nu_beta: %s\n" % (" ".join(ua), " ".join(ub))
    _write(args.output, serialize_grammar(g, comments))
    print("wrote %s: %d productions over %d letters" % (args.output, len(g.productions), len(g.alphabet)),
          file=out)
    if witness_text is not None:
        if args.witness_out:
            _write(args.witness_out, witness_text)
            print("wrote %s" % args.witness_out, file=out)
        else:
            out.write(witness_text)
    return OK


def cmd_grammar_enumerate(args, out) -> int:
    g = _load_grammar(args.file)
    for w in enumerate_up_to_length(g, args.max_len, cap=args.cap):
        print(format_word(w), file=out)
    return OK


def cmd_grammar_analyze(args, out) -> int:
    g = _load_grammar(args.file)
    report = classify_regular_order_type(g)
    print(report, file=out)
    return REFUTED if report.density.status == NOT_DENSE else OK


def cmd_grammar_probe(args, out) -> int:
    if args.pcp:
        _, r = _load_reduction(args.file, args.pcp)
        g = r.grammar
    else:
        g, r = _load_grammar(args.file), None
    report = probe_density_cfl(g, args.max_len, r)
    print("\n".join(report.lines(verbose=args.verbose)), file=out)
    return REFUTED if report.solutions_detected else OK


def cmd_grammar_check_prefix(args, out) -> int:
    g = _load_grammar(args.file)
    violation = prefix_free_bounded(g, args.max_len)
    if violation is None:
        print("prefix_free=yes (bounded check, max_len=%d)" % args.max_len, file=out)
        return OK
    print("prefix_free=no", file=out)
    print("shorter=" + format_word(violation.shorter), file=out)
    print("longer=" + format_word(violation.longer), file=out)
    return REFUTED


def cmd_witness_middle(args, out) -> int:
    _, r = _load_reduction(args.grammar, args.pcp)
    res = middle_witness(r, parse_word(args.u), parse_word(args.v))
    if isinstance(res, SolutionDetected):
        print("solution: " + " ".join(map(str, res.solution)), file=out)
        return REFUTED
    print("middle: " + format_word(res), file=out)
    return OK


def cmd_witness_neighbors(args, out) -> int:
    instance, r = _load_reduction(args.grammar, args.pcp)
    lower, upper = neighbor_witnesses(r, instance, parse_word(args.v))
    print("lower: " + format_word(lower), file=out)
    print("upper: " + format_word(upper), file=out)
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lexdense",
                                     description="Lexicographic orders of context-free languages.")
    top = parser.add_subparsers(dest="group", required=True)

    pcp = top.add_parser("pcp", help="PCP instances").add_subparsers(dest="command", required=True)
    p = pcp.add_parser("solve", help="bounded brute-force search for a solution")
    p.add_argument("file")
    p.add_argument("--max-depth", type=int, required=True)
    p.set_defaults(func=cmd_pcp_solve)
    p = pcp.add_parser("reduce", help="emit the reduction grammar")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--binary", action="store_true", help="code letters over {0,1}")
    p.add_argument("--solution", help="comma-separated indices of a solution")
    p.add_argument("--witness-out", help="file for the adjacent pair")
    p.set_defaults(func=cmd_pcp_reduce)

    gr = top.add_parser("grammar", help="grammar queries").add_subparsers(dest="command", required=True)
    p = gr.add_parser("enumerate", help="words up to a length, in lexicographic order")
    p.add_argument("file")
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--cap", type=int, default=2_000_000)
    p.set_defaults(func=cmd_grammar_enumerate)
    p = gr.add_parser("analyze-regular", help="exact order analysis of a right-linear grammar")
    p.add_argument("file")
    p.set_defaults(func=cmd_grammar_analyze)
    p = gr.add_parser("probe-density", help="bounded density probe")
    p.add_argument("file")
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--pcp", help="instance the grammar was reduced from")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_grammar_probe)
    p = gr.add_parser("check-prefix", help="bounded prefix-freeness check")
    p.add_argument("file")
    p.add_argument("--max-len", type=int, required=True)
    p.set_defaults(func=cmd_grammar_check_prefix)

    wi = top.add_parser("witness", help="witnesses for reduction grammars").add_subparsers(
        dest="command", required=True)
    p = wi.add_parser("middle", help="a word strictly between u and v")
    p.add_argument("grammar")
    p.add_argument("--pcp", required=True)
    p.add_argument("u")
    p.add_argument("v")
    p.set_defaults(func=cmd_witness_middle)
    p = wi.add_parser("neighbors", help="words just below and above v")
    p.add_argument("grammar")
    p.add_argument("--pcp", required=True)
    p.add_argument("v")
    p.set_defaults(func=cmd_witness_neighbors)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return ERROR if exc.code else OK
    try:
        return args.func(args, out)
    except (UsageError, GrammarError, PcpError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return ERROR
    except (EnumerationLimitExceeded, StateLimitExceeded) as exc:
        print("resource limit: %s" % exc, file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
