"""Acceptance gate: one test per criterion, each with its time limit.

Every criterion prints a single ``PASS``/``FAIL`` line; the lines are
repeated in the pytest terminal summary.  Run this file directly to get
only those lines.
"""

import functools
import itertools
import sys
import time
import traceback

from lexdense import automata as fa
from lexdense.grammar import OrderedAlphabet, enumerate_up_to_length, make_grammar, parse_grammar, recognize
from lexdense.lexorder import (BINARY, Ordering, binary_code, code_width, encode_grammar, lex_compare)
from lexdense.order import ETA, SolutionDetected, classify_regular_order_type, middle_witness, probe_density_cfl
from lexdense.pcp import (CENT, DOLLAR, Certificate, PcpInstance, brute_force_solve, build_reduction_grammar,
                          certify_adjacent, gap_witness, neighbor_witnesses, verify_solution)

from oracles import all_words, lex_less_naive

SOLVABLE = PcpInstance.from_sequences(("ab", "b"), ("a", "bb"))
UNSOLVABLE = PcpInstance.from_sequences(("ab",), ("ba",))

RESULTS = {}


def criterion(number, limit, title):
    def wrap(fn):
        @functools.wraps(fn)
        def run():
            start = time.perf_counter()
            error = None
            try:
                fn()
            except BaseException as exc:  # recorded, then re-raised
                error = exc
            elapsed = time.perf_counter() - start
            if error is None and elapsed >= limit:
                error = AssertionError("took %.2f s, limit %g s" % (elapsed, limit))
            status = "PASS" if error is None else "FAIL"
            line = "criterion %d %s  %-46s %7.2f s (limit %g s)" % (number, status, title, elapsed, limit)
            if error is not None:
                line += "  " + (str(error).splitlines() or [type(error).__name__])[0][:120]
            RESULTS[number] = line
            print(line)
            if error is not None:
                raise error
        return run
    return wrap


@criterion(1, 1, "reduction shape, n = 1..6")
def test_criterion_1_reduction_shape():
    for n in range(1, 7):
        inst = PcpInstance(tuple(("ab", "b") for _ in range(n)))
        r = build_reduction_grammar(inst)
        assert len(r.delta) == 4 * n + 10
        assert len(r.grammar.productions) == 9 * n + 13
        rank = r.delta.rank
        c = r.c_letters
        for j in range(1, n + 3):
            d0, d1, d2 = r.d_letters[j]
            assert rank[c[j - 1]] < rank[d0] < rank[d1] < rank[d2] < rank[c[j]]
        assert rank[DOLLAR] == rank[CENT] + 1


@criterion(2, 30, "gap pair of a solvable instance is adjacent")
def test_criterion_2_forward_direction():
    sol = brute_force_solve(SOLVABLE, 3)
    assert sol == (1, 2)
    r = build_reduction_grammar(SOLVABLE)
    ua, ub = gap_witness(r, SOLVABLE, sol)
    assert ua == ("1", "2", "b", "b", "a", CENT)
    assert ub == ("1", "2", "b", "b", "a", DOLLAR)
    assert recognize(r.grammar, ua) and recognize(r.grammar, ub)
    assert isinstance(certify_adjacent(r.grammar, ua, ub, 10), Certificate)


@criterion(3, 60, "every window pair of an unsolvable instance")
def test_criterion_3_reverse_direction():
    assert brute_force_solve(UNSOLVABLE, 8) is None
    r = build_reduction_grammar(UNSOLVABLE)
    report = probe_density_cfl(r.grammar, 5, r)
    assert report.word_count >= 2
    assert report.solutions_detected == 0
    assert report.unresolved == 0
    assert report.middles_found == report.word_count - 1


@criterion(4, 1, "solution read off the gap pair")
def test_criterion_4_solution_extraction():
    r = build_reduction_grammar(SOLVABLE)
    ua, ub = gap_witness(r, SOLVABLE, (1, 2))
    res = middle_witness(r, ua, ub)
    assert res == SolutionDetected((1, 2))
    assert verify_solution(SOLVABLE, res.solution)


@criterion(5, 5, "{00,11}*01 is eta, also after coding")
def test_criterion_5_comparison_language():
    g = parse_grammar("alphabet: 0 1\nstart: S\nS -> 0 0 S | 1 1 S | 0 1\n")
    report = classify_regular_order_type(g)
    assert report.order_type == ETA
    assert report.density.dense and report.least is None and report.greatest is None
    encoded = encode_grammar(g, binary_code(g.alphabet))
    assert classify_regular_order_type(encoded).order_type == ETA


def _block_union(r, with_prefix):
    prods = []
    for j, (d0, d1, d2) in r.d_letters.items():
        dj, cj = "D%d" % j, "C%d" % j
        prods += [(dj, (d0, dj)), (dj, (d2, dj)), (dj, (d1,)), ("S", (cj,)),
                  (cj, (d0, dj)), (cj, (d2, dj)), (cj, (d1,))]
        if with_prefix:
            prods += [(cj, (t, cj)) for t in r.c_letters[:r.n + 2]]
    return make_grammar(r.delta, "S", prods)


@criterion(6, 5, "each Q_j, their union and L' are eta")
def test_criterion_6_dense_blocks():
    r = build_reduction_grammar(UNSOLVABLE)
    for d0, d1, d2 in r.d_letters.values():
        q = make_grammar(r.delta, "Q", [("Q", (d0, "Q")), ("Q", (d2, "Q")), ("Q", (d1,))])
        assert classify_regular_order_type(q).order_type == ETA
    assert classify_regular_order_type(_block_union(r, False)).order_type == ETA
    assert classify_regular_order_type(_block_union(r, True)).order_type == ETA


@criterion(7, 30, "no endpoints: neighbours of every window word")
def test_criterion_7_no_endpoints():
    r = build_reduction_grammar(UNSOLVABLE)
    window = enumerate_up_to_length(r.grammar, 5)
    assert window
    for v in window:
        u, w = neighbor_witnesses(r, UNSOLVABLE, v)
        assert lex_compare(u, v, r.delta) is Ordering.LESS
        assert lex_compare(v, w, r.delta) is Ordering.LESS
        assert recognize(r.grammar, u) and recognize(r.grammar, w)


@criterion(8, 60, "order axioms and automaton soundness")
def test_criterion_8_order_axioms_and_engine():
    abc = OrderedAlphabet(("a", "b", "c"))
    words = all_words("abc", 3)
    cmp = {(u, v): lex_compare(u, v, abc) for u in words for v in words}
    for u, v in itertools.product(words, repeat=2):
        o = cmp[u, v]
        assert (o is Ordering.EQUAL) == (u == v)
        assert cmp[v, u] == Ordering(-o)
        assert (o is Ordering.LESS) == lex_less_naive(u, v, "abc")
    for u, v, x in itertools.product(words, repeat=3):
        if cmp[u, v] is Ordering.LESS and cmp[v, x] is Ordering.LESS:
            assert cmp[u, x] is Ordering.LESS

    ab = OrderedAlphabet(("a", "b"))
    rel = fa.lex_relation(ab)
    short = all_words("ab", 3)
    for u, v in itertools.product(short, repeat=2):
        assert rel.accepts(fa.convolve(u, v)) == (lex_compare(u, v, ab) is Ordering.LESS)

    corpus = [
        fa.nfa_from_right_linear(parse_grammar("alphabet: a b\nstart: S\nS -> a S | b")),
        fa.nfa_from_right_linear(parse_grammar("alphabet: a b\nstart: E\nE -> a O | b O\n"
                                               "O -> a E | b E | a | b")),
        fa.nfa_from_word_set(ab, [("a",), ("a", "b"), ("b", "b")]),
        fa.empty_nfa(ab),
    ]
    five = all_words("ab", 5)
    for x, y in itertools.product(corpus, repeat=2):
        i, u, c = fa.intersect(x, y), fa.union(x, y), fa.complement(x)
        for z in five:
            assert i.accepts(z) == (x.accepts(z) and y.accepts(z))
            assert u.accepts(z) == (x.accepts(z) or y.accepts(z))
            assert c.accepts(z) == (not x.accepts(z))


@criterion(9, 30, "binary coding width and order isomorphism")
def test_criterion_9_binary_coding():
    for n in range(1, 7):
        size = 4 * n + 10
        expected = 1
        while 2 ** expected < size:
            expected += 1
        assert code_width(size) == expected
        assert binary_code(build_reduction_grammar(PcpInstance((("a", "b"),) * n)).delta).width == expected
    assert binary_code(build_reduction_grammar(SOLVABLE).delta).width == 5

    delta = build_reduction_grammar(UNSOLVABLE).delta
    code = binary_code(delta)
    words = all_words(delta.tokens, 3)
    keys = {w: delta.key(w) for w in words}
    encoded = {w: code.encode(w) for w in words}
    bits = {w: BINARY.key(encoded[w]) for w in words}
    assert len(set(encoded.values())) == len(words)
    # every ordered pair; rank-tuple comparison is the lexicographic order
    for u in words:
        ku, bu = keys[u], bits[u]
        for v in words:
            assert (ku < keys[v]) == (bu < bits[v])
    by_letters = sorted(words, key=keys.__getitem__)
    for u, v in zip(by_letters, by_letters[1:]):
        assert lex_compare(u, v, delta) is Ordering.LESS
        assert lex_compare(encoded[u], encoded[v], BINARY) is Ordering.LESS

if __name__ == "__main__":
    failed = 0
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    for test in tests:
        try:
            test()
        except BaseException:
            failed += 1
            traceback.print_exc(limit=1, file=sys.stderr)
    sys.exit(1 if failed else 0)
