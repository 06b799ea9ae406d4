"""Order-theoretic analysis of lexicographically ordered languages.

For regular languages (right-linear grammars) density, endpoints and the
four dense order types are decided exactly with convolution automata.  For
the reduction grammars of :mod:`lexdense.pcp` the density argument is run
constructively: every pair of words either gets a verified word in between
or exposes a solution of the underlying instance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple, Union

from . import automata as fa
from .grammar import (Grammar, Word, enumerate_between, enumerate_up_to_length, is_right_linear,
                      make_grammar, recognize, trim)
from .lexorder import PREFIX_RELATED, first_difference, lex_less
from .pcp import CENT, DOLLAR, ReductionArtifacts, Solution

DENSE = "dense"
NOT_DENSE = "not_dense"
TOO_FEW = "too_few_elements"

ETA = "eta"
ONE_PLUS_ETA = "one_plus_eta"
ETA_PLUS_ONE = "eta_plus_one"
ONE_PLUS_ETA_PLUS_ONE = "one_plus_eta_plus_one"
OTHER = "other"

_DENSE_TYPES = {
    (False, False): ETA,
    (True, False): ONE_PLUS_ETA,
    (False, True): ETA_PLUS_ONE,
    (True, True): ONE_PLUS_ETA_PLUS_ONE,
}


@dataclass(frozen=True)
class DensityVerdict:
    status: str
    pair: Optional[Tuple[Word, Word]] = None

    @property
    def dense(self) -> bool:
        return self.status == DENSE


@dataclass(frozen=True)
class OrderReport:
    cardinality: str            # "empty", "finite" or "infinite"
    size: Optional[int]         # number of words when finite
    density: DensityVerdict
    least: Optional[Word]
    greatest: Optional[Word]
    order_type: str             # "finite(k)", ETA, ..., OTHER

    def lines(self) -> List[str]:
        card = "finite(%d)" % self.size if self.cardinality == "finite" else self.cardinality
        dense = {DENSE: "yes", NOT_DENSE: "no", TOO_FEW: "too-few-elements"}[self.density.status]
        out = [
            "cardinality=" + card,
            "dense=" + dense,
            "least=" + ("none" if self.least is None else format_word(self.least)),
            "greatest=" + ("none" if self.greatest is None else format_word(self.greatest)),
            "order_type=" + self.order_type,
        ]
        if self.density.pair is not None:
            out.append("adjacent_lower=" + format_word(self.density.pair[0]))
            out.append("adjacent_upper=" + format_word(self.density.pair[1]))
        return out

    def __str__(self) -> str:
        return "\n".join(self.lines())


def format_word(word: Sequence[str]) -> str:
    return " ".join(word) if word else "-"


# --------------------------------------------------------------------------
# exact decisions for regular languages

class _RegularOrder:
    """Automata shared by the regular-language decisions."""

    def __init__(self, g: Grammar):
        if not is_right_linear(g):
            raise ValueError("grammar is not right-linear")
        g = trim(g)
        used = g.terminals_used()
        self.empty = not used
        if self.empty:
            return
        # letters that never occur do not affect the order
        self.base = g.alphabet.sub_alphabet(used)
        self.grammar = Grammar(self.base, g.nonterminals, g.start, g.productions)
        self.lang = fa.nfa_from_right_linear(self.grammar)
        self.less = fa.lex_relation(self.base)
        self._pairs = None

    @property
    def pairs(self) -> fa.Nfa:
        """conv(u, v) with u < v, both in the language."""
        if self._pairs is None:
            on0 = fa.cylinder(self.lang, (0,), self.base, 2)
            on1 = fa.cylinder(self.lang, (1,), self.base, 2)
            self._pairs = fa.intersect(fa.intersect(on0, on1), self.less)
        return self._pairs

    def adjacent_pair(self) -> Optional[Tuple[Word, Word]]:
        base = self.base
        middle = fa.cylinder(self.lang, (1,), base, 3)
        middle = fa.intersect(middle, fa.cylinder(self.less, (0, 1), base, 3))
        middle = fa.intersect(middle, fa.cylinder(self.less, (1, 2), base, 3))
        has_between = fa.project(middle, (0, 2))
        adjacent = fa.difference(self.pairs, has_between)
        conv = fa.shortest_accepted(adjacent)
        if conv is None:
            return None
        u, v = fa.deconvolve(conv, 2)
        return u, v

    def endpoint(self, track: int) -> Optional[Word]:
        # track 1: words with something below; track 0: words with something above
        dominated = fa.project(self.pairs, (track,))
        return fa.shortest_accepted(fa.difference(self.lang, dominated))


def decide_dense_regular(g: Grammar) -> DensityVerdict:
    """Exact density test; a non-dense verdict carries the shortest adjacent pair."""
    ro = _RegularOrder(g)
    if ro.empty or fa.is_empty(ro.pairs):
        return DensityVerdict(TOO_FEW)
    pair = ro.adjacent_pair()
    if pair is None:
        return DensityVerdict(DENSE)
    return DensityVerdict(NOT_DENSE, pair)


def decide_endpoints_regular(g: Grammar) -> Tuple[Optional[Word], Optional[Word]]:
    """(least, greatest) of the language, each ``None`` when absent."""
    ro = _RegularOrder(g)
    if ro.empty:
        return None, None
    return ro.endpoint(1), ro.endpoint(0)


def classify_regular_order_type(g: Grammar) -> OrderReport:
    ro = _RegularOrder(g)
    if ro.empty:
        return OrderReport("empty", 0, DensityVerdict(TOO_FEW), None, None, "finite(0)")
    if fa.is_finite(ro.lang):
        words = fa.finite_language(ro.lang)
        k = len(words)
        pair = ro.adjacent_pair() if k >= 2 else None
        verdict = DensityVerdict(NOT_DENSE, pair) if k >= 2 else DensityVerdict(TOO_FEW)
        return OrderReport("finite", k, verdict, words[0], words[-1], "finite(%d)" % k)
    pair = ro.adjacent_pair()
    least, greatest = ro.endpoint(1), ro.endpoint(0)
    if pair is not None:
        return OrderReport("infinite", None, DensityVerdict(NOT_DENSE, pair), least, greatest, OTHER)
    order_type = _DENSE_TYPES[(least is not None, greatest is not None)]
    return OrderReport("infinite", None, DensityVerdict(DENSE), least, greatest, order_type)


# --------------------------------------------------------------------------
# constructive density for reduction grammars

@dataclass(frozen=True)
class SolutionDetected:
    solution: Solution


class MiddleWitnessError(AssertionError):
    """A constructed middle word failed verification; this is a bug."""


def _block_grammar(r: ReductionArtifacts, j: int) -> Grammar:
    d0, d1, d2 = r.d_letters[j]
    return make_grammar(r.delta, "Q", [("Q", (d0, "Q")), ("Q", (d2, "Q")), ("Q", (d1,))])


def _between_in_block(r: ReductionArtifacts, j: int, lo: Word, hi: Word) -> Word:
    block = _block_grammar(r, j)
    bound = max(len(lo), len(hi)) + 2
    # the block language is dense, so this terminates
    while True:
        found = enumerate_between(block, lo, hi, bound, limit=1)
        if found:
            return found[0]
        bound *= 2


def middle_witness(r: ReductionArtifacts, u: Sequence[str], v: Sequence[str],
                   check_inputs: bool = True) -> Union[Word, SolutionDetected]:
    """A word of L(G) strictly between ``u < v``, or the solution that makes
    them adjacent.

    The returned word is always re-verified; ``check_inputs=False`` skips
    the membership test of ``u`` and ``v`` for callers that enumerated them.
    """
    u, v = r.delta.check_word(u), r.delta.check_word(v)
    g = r.grammar
    if check_inputs and not (recognize(g, u) and recognize(g, v)):
        raise ValueError("both words must belong to the language")
    if not lex_less(u, v, r.delta):
        raise ValueError("expected u < v")
    split = first_difference(u, v, r.delta)
    if split is PREFIX_RELATED:
        raise MiddleWitnessError("prefix-related words in a prefix language: %r, %r" % (u, v))
    w, c, d, u_rest, v_rest = split
    low, high = (c,) + u_rest, (d,) + v_rest

    if c == CENT and d == DOLLAR:
        return SolutionDetected(r.index_prefix(w))

    i_low, i_high = r.d_block(c), r.d_block(d)
    if i_low is not None:
        d0, d1, d2 = r.d_letters[i_low]
        if i_high == i_low:
            x = _between_in_block(r, i_low, low, high)
        else:
            x = low[:-1] + (d2, d1)
    elif i_high is not None:
        d0, d1, d2 = r.d_letters[i_high]
        x = high[:-1] + (d0, d1)
    else:
        i = r.c_index(c)
        if i is None or i > r.n + 2:
            raise MiddleWitnessError("unexpected first difference %s/%s" % (c, d))
        x = (r.d_letters[i][1],)

    z = w + x
    if not (recognize(g, z) and lex_less(u, z, r.delta) and lex_less(z, v, r.delta)):
        raise MiddleWitnessError("constructed word %s failed verification" % format_word(z))
    return z


@dataclass(frozen=True)
class PairOutcome:
    lower: Word
    upper: Word
    kind: str                      # "middle", "solution" or "unresolved"
    middle: Optional[Word] = None
    solution: Optional[Solution] = None


@dataclass
class DensityProbeReport:
    bound: int
    word_count: int
    pairs: List[PairOutcome] = field(default_factory=list)

    @property
    def too_few(self) -> bool:
        return self.word_count < 2

    @property
    def middles_found(self) -> int:
        return sum(p.kind == "middle" for p in self.pairs)

    @property
    def solutions_detected(self) -> int:
        return sum(p.kind == "solution" for p in self.pairs)

    @property
    def unresolved(self) -> int:
        return sum(p.kind == "unresolved" for p in self.pairs)

    def lines(self, verbose: bool = False) -> List[str]:
        out = ["max_len=%d" % self.bound, "words=%d" % self.word_count]
        if self.too_few:
            out.append("status=too few elements in window")
            return out
        out += ["pairs=%d" % len(self.pairs), "middles_found=%d" % self.middles_found,
                "solutions_detected=%d" % self.solutions_detected,
                "unresolved=%d" % self.unresolved]
        for p in self.pairs:
            if p.kind == "solution":
                out.append("solution=%s  between %s | %s" % (" ".join(map(str, p.solution)),
                                                            format_word(p.lower), format_word(p.upper)))
            elif p.kind == "unresolved":
                out.append("unresolved=%s | %s" % (format_word(p.lower), format_word(p.upper)))
            elif verbose:
                out.append("middle=%s | %s | %s" % (format_word(p.lower), format_word(p.middle),
                                                    format_word(p.upper)))
        return out

    def __str__(self) -> str:
        return "\n".join(self.lines())


def probe_density_cfl(g: Grammar, max_len: int, r: Optional[ReductionArtifacts] = None,
                      search_len: Optional[int] = None) -> DensityProbeReport:
    """Look for a word between every two consecutive words of length <= max_len.

    With reduction artifacts the constructive procedure of
    :func:`middle_witness` is used.  Otherwise a middle is searched among
    words of length <= ``search_len`` (default ``max_len + 2``); pairs without
    one are reported unresolved, never as adjacent.
    """
    g = trim(g)
    words = enumerate_up_to_length(g, max_len)
    report = DensityProbeReport(max_len, len(words))
    if search_len is None:
        search_len = max_len + 2
    for u, v in zip(words, words[1:]):
        if r is not None:
            res = middle_witness(r, u, v, check_inputs=False)
            if isinstance(res, SolutionDetected):
                report.pairs.append(PairOutcome(u, v, "solution", solution=res.solution))
            else:
                report.pairs.append(PairOutcome(u, v, "middle", middle=res))
        else:
            found = enumerate_between(g, u, v, search_len, limit=1)
            if found:
                report.pairs.append(PairOutcome(u, v, "middle", middle=found[0]))
            else:
                report.pairs.append(PairOutcome(u, v, "unresolved"))
    return report
