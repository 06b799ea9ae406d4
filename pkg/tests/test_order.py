import pytest
from hypothesis import given, settings, strategies as st

from lexdense.grammar import (enumerate_between, enumerate_up_to_length, make_grammar, parse_grammar,
                              recognize)
from lexdense.lexorder import binary_code, encode_grammar, lex_less
from lexdense.order import (DENSE, ETA, ETA_PLUS_ONE, NOT_DENSE, ONE_PLUS_ETA, ONE_PLUS_ETA_PLUS_ONE,
                            OTHER, TOO_FEW, MiddleWitnessError, SolutionDetected,
                            classify_regular_order_type, decide_dense_regular,
                            decide_endpoints_regular, format_word, middle_witness, probe_density_cfl)
from lexdense.pcp import PcpInstance, build_reduction_grammar, gap_witness, verify_solution

from oracles import (A_STAR_B, BLOCK, COMPARISON, ONE_PLUS_ETA as ONE_PLUS_ETA_G, RIGHT_LINEAR_CORPUS,
                     TWO_WORDS, lex_less_naive)

SOLVABLE = PcpInstance.from_sequences(("ab", "b"), ("a", "bb"))
UNSOLVABLE = PcpInstance.from_sequences(("ab",), ("ba",))

ETA_PLUS_ONE_G = parse_grammar("alphabet: 0 1 2\nstart: S\nS -> 2 | T\nT -> 0 0 T | 1 1 T | 0 1\n")
BOTH_ENDS_G = parse_grammar("alphabet: 0 1 2\nstart: S\nS -> 0 | 2 | 0 T\nT -> 0 0 T | 1 1 T | 0 1\n")

CORPUS = dict(RIGHT_LINEAR_CORPUS, **{"eta-plus-one": ETA_PLUS_ONE_G, "both-ends": BOTH_ENDS_G})

EXPECTED_TYPES = {
    "a*b": OTHER,
    "comparison": ETA,
    "two-words": "finite(2)",
    "block": ETA,
    "one-plus-eta": ONE_PLUS_ETA,
    "unit-chain": OTHER,
    "eta-plus-one": ETA_PLUS_ONE,
    "both-ends": ONE_PLUS_ETA_PLUS_ONE,
}


def w(text):
    return tuple(text.split())


def union_of_blocks(r, families):
    """Right-linear grammar for the union of the chosen block languages.

    ``families`` is ``"Q"`` (bare blocks) or ``"L"`` (blocks after any word
    over the index letters and a, b).
    """
    prods = []
    for j, (d0, d1, d2) in r.d_letters.items():
        dj = "D%d" % j
        prods += [(dj, (d0, dj)), (dj, (d2, dj)), (dj, (d1,))]
        if families == "Q":
            prods.append(("S", (d0, dj)))
            prods.append(("S", (d2, dj)))
            prods.append(("S", (d1,)))
        else:
            prods.append(("S", ("C%d" % j,)))
            prods.append(("C%d" % j, (d0, dj)))
            prods.append(("C%d" % j, (d2, dj)))
            prods.append(("C%d" % j, (d1,)))
            for t in r.c_letters[:r.n + 2]:
                prods.append(("C%d" % j, (t, "C%d" % j)))
    return make_grammar(r.delta, "S", prods)


# --------------------------------------------------------------------------
# exact decisions

def test_comparison_language_dense():
    assert decide_dense_regular(COMPARISON).status == DENSE


def test_single_block_dense():
    assert decide_dense_regular(BLOCK).status == DENSE


def test_a_star_b_not_dense():
    v = decide_dense_regular(A_STAR_B)
    assert v.status == NOT_DENSE
    assert v.pair == (("a", "b"), ("b",))


def test_too_few_elements():
    assert decide_dense_regular(parse_grammar("alphabet: a\nstart: S\nS -> a")).status == TOO_FEW
    empty = parse_grammar("alphabet: a\nstart: S\nS -> a S")
    assert decide_dense_regular(empty).status == TOO_FEW
    report = classify_regular_order_type(empty)
    assert report.cardinality == "empty" and report.order_type == "finite(0)"


def test_non_right_linear_rejected():
    with pytest.raises(ValueError):
        decide_dense_regular(parse_grammar("alphabet: a b\nstart: S\nS -> a S b | a b"))


def test_endpoints():
    assert decide_endpoints_regular(A_STAR_B) == (None, ("b",))
    assert decide_endpoints_regular(COMPARISON) == (None, None)
    assert decide_endpoints_regular(TWO_WORDS) == (("a",), ("b",))
    assert decide_endpoints_regular(ONE_PLUS_ETA_G) == (("0",), None)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_classification(name):
    assert classify_regular_order_type(CORPUS[name]).order_type == EXPECTED_TYPES[name]


def test_report_lines():
    report = classify_regular_order_type(A_STAR_B)
    assert report.lines() == [
        "cardinality=infinite",
        "dense=no",
        "least=none",
        "greatest=b",
        "order_type=other",
        "adjacent_lower=a b",
        "adjacent_upper=b",
    ]
    assert str(classify_regular_order_type(COMPARISON)).splitlines()[-1] == "order_type=eta"
    assert classify_regular_order_type(TWO_WORDS).lines()[0] == "cardinality=finite(2)"


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_report_invariants(name):
    rep = classify_regular_order_type(CORPUS[name])
    dense_types = {ETA, ONE_PLUS_ETA, ETA_PLUS_ONE, ONE_PLUS_ETA_PLUS_ONE}
    assert (rep.order_type in dense_types) == (rep.density.status == DENSE)
    if rep.order_type == ETA:
        assert rep.least is None and rep.greatest is None
    if rep.density.status == DENSE:
        expected = {(False, False): ETA, (True, False): ONE_PLUS_ETA, (False, True): ETA_PLUS_ONE,
                    (True, True): ONE_PLUS_ETA_PLUS_ONE}[(rep.least is not None, rep.greatest is not None)]
        assert rep.order_type == expected


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_exactness_against_window(name):
    g = CORPUS[name]
    order = g.alphabet.tokens
    verdict = decide_dense_regular(g)
    window = enumerate_up_to_length(g, 6)
    if verdict.status == DENSE:
        # every consecutive window pair has a middle, possibly longer
        for u, v in zip(window, window[1:]):
            assert enumerate_between(g, u, v, 14, limit=1), (u, v)
    elif verdict.status == NOT_DENSE:
        u, v = verdict.pair
        assert recognize(g, u) and recognize(g, v) and lex_less_naive(u, v, order)
        assert enumerate_between(g, u, v, max(len(u), len(v)) + 4) == []


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_endpoints_against_window(name):
    g = CORPUS[name]
    least, greatest = decide_endpoints_regular(g)
    window = enumerate_up_to_length(g, 6)
    if least is not None:
        assert recognize(g, least)
        assert all(not lex_less_naive(z, least, g.alphabet.tokens) for z in window)
    if greatest is not None:
        assert recognize(g, greatest)
        assert all(not lex_less_naive(greatest, z, g.alphabet.tokens) for z in window)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_encoding_invariance(name):
    g = CORPUS[name]
    encoded = encode_grammar(g, binary_code(g.alphabet))
    assert classify_regular_order_type(encoded).order_type == classify_regular_order_type(g).order_type


def test_sum_of_dense_blocks_n1():
    r = build_reduction_grammar(UNSOLVABLE)
    assert classify_regular_order_type(union_of_blocks(r, "L")).order_type == ETA
    assert classify_regular_order_type(union_of_blocks(r, "Q")).order_type == ETA


def test_each_block_grammar_is_eta():
    r = build_reduction_grammar(UNSOLVABLE)
    for j, (d0, d1, d2) in r.d_letters.items():
        g = make_grammar(r.delta, "Q", [("Q", (d0, "Q")), ("Q", (d2, "Q")), ("Q", (d1,))])
        assert classify_regular_order_type(g).order_type == ETA


def test_block_union_windows_match_reduction_language():
    r = build_reduction_grammar(UNSOLVABLE)
    lprime = union_of_blocks(r, "L")
    block_words = [z for z in enumerate_up_to_length(r.grammar, 4) if r.d_block(z[-1]) is not None]
    assert enumerate_up_to_length(lprime, 4) == block_words


# --------------------------------------------------------------------------
# middle witnesses

def test_middle_between_index_words():
    r = build_reduction_grammar(UNSOLVABLE)
    assert middle_witness(r, w("1 a b dollar"), w("1 b a cent")) == w("1 d2.1")


def test_middle_from_block_to_letter():
    r = build_reduction_grammar(UNSOLVABLE)
    assert middle_witness(r, ("d1.1",), w("a d3.1")) == w("d1.2 d1.1")


def test_middle_from_letter_to_block():
    r = build_reduction_grammar(UNSOLVABLE)
    z = middle_witness(r, w("1 1 b a b a cent"), w("1 d1.1"))
    assert z == w("1 d1.0 d1.1")


def test_middle_inside_one_block():
    r = build_reduction_grammar(UNSOLVABLE)
    u, v = w("d1.0 d1.1"), ("d1.1",)
    z = middle_witness(r, u, v)
    assert lex_less(u, z, r.delta) and lex_less(z, v, r.delta)
    assert recognize(r.grammar, z)


def test_middle_detects_solution():
    r = build_reduction_grammar(SOLVABLE)
    ua, ub = gap_witness(r, SOLVABLE, (1, 2))
    res = middle_witness(r, ua, ub)
    assert res == SolutionDetected((1, 2))
    assert verify_solution(SOLVABLE, res.solution)


def test_middle_precondition_errors():
    r = build_reduction_grammar(UNSOLVABLE)
    with pytest.raises(ValueError):
        middle_witness(r, w("1 b a cent"), w("1 a b dollar"))     # out of order
    with pytest.raises(ValueError):
        middle_witness(r, w("1 a b cent"), w("1 b a cent"))       # not in the language
    with pytest.raises(ValueError):
        middle_witness(r, ("d1.1",), ("d1.1",))


def test_middle_error_type_is_assertion():
    assert issubclass(MiddleWitnessError, AssertionError)


@pytest.mark.parametrize("inst", [SOLVABLE, UNSOLVABLE])
def test_middle_on_all_consecutive_pairs(inst):
    r = build_reduction_grammar(inst)
    window = enumerate_up_to_length(r.grammar, 5)
    for u, v in zip(window, window[1:]):
        res = middle_witness(r, u, v, check_inputs=False)
        assert not isinstance(res, SolutionDetected)
        assert recognize(r.grammar, res)
        assert lex_less(u, res, r.delta) and lex_less(res, v, r.delta)


@pytest.fixture(scope="module")
def solvable_window():
    r = build_reduction_grammar(SOLVABLE)
    return r, enumerate_up_to_length(r.grammar, 6)


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_middle_on_random_pairs(solvable_window, data):
    r, window = solvable_window
    i = data.draw(st.integers(0, len(window) - 2))
    j = data.draw(st.integers(i + 1, len(window) - 1))
    u, v = window[i], window[j]
    res = middle_witness(r, u, v, check_inputs=False)
    if isinstance(res, SolutionDetected):
        assert verify_solution(SOLVABLE, res.solution)
        assert u[-1] == "cent" and v[-1] == "dollar" and u[:-1] == v[:-1]
    else:
        assert recognize(r.grammar, res)
        assert lex_less(u, res, r.delta) and lex_less(res, v, r.delta)


# --------------------------------------------------------------------------
# probes

def test_probe_unsolvable_instance():
    r = build_reduction_grammar(UNSOLVABLE)
    report = probe_density_cfl(r.grammar, 5, r)
    assert report.word_count > 1
    assert report.solutions_detected == 0 and report.unresolved == 0
    assert report.middles_found == report.word_count - 1


def test_probe_solvable_instance():
    r = build_reduction_grammar(SOLVABLE)
    report = probe_density_cfl(r.grammar, 6, r)
    found = [p for p in report.pairs if p.kind == "solution"]
    assert [p.solution for p in found] == [(1, 2)]
    assert verify_solution(SOLVABLE, found[0].solution)
    assert (found[0].lower, found[0].upper) == gap_witness(r, SOLVABLE, (1, 2))
    assert any(line.startswith("solution=1 2") for line in report.lines())


@pytest.mark.slow
def test_probe_solvable_instance_length_eight():
    r = build_reduction_grammar(SOLVABLE)
    report = probe_density_cfl(r.grammar, 8, r)
    assert report.solutions_detected >= 1
    assert all(verify_solution(SOLVABLE, p.solution) for p in report.pairs if p.kind == "solution")


def test_probe_too_few():
    report = probe_density_cfl(parse_grammar("alphabet: a\nstart: S\nS -> a"), 4)
    assert report.too_few
    assert "status=too few elements in window" in report.lines()


def test_probe_without_artifacts():
    report = probe_density_cfl(COMPARISON, 6)
    assert report.unresolved == 0 and report.middles_found == report.word_count - 1
    report = probe_density_cfl(A_STAR_B, 4)
    # a*b descends a a a b < a a b < a b < b with nothing in between;
    # the probe reports these pairs unresolved, never adjacent
    assert report.unresolved == 3 and report.middles_found == 0
    assert report.lines()[-1] == "unresolved=a b | b"


def test_probe_verbose_lines():
    report = probe_density_cfl(COMPARISON, 4)
    lines = report.lines(verbose=True)
    assert lines[:2] == ["max_len=4", "words=3"]
    assert sum(line.startswith("middle=") for line in lines) == 2


def test_format_word():
    assert format_word(()) == "-"
    assert format_word(("a", "b")) == "a b"
