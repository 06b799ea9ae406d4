"""Post Correspondence Problem instances and the grammar built from them.

For an instance with ``n`` pairs the grammar lives over an alphabet of
``4n + 10`` letters::

    1 < d1.0 < d1.1 < d1.2 < 2 < ... < n < dn.* < a < d(n+1).* < b < d(n+2).* < cent < dollar

and generates three families of words:

* ``i1 .. im rev(alpha_i1 .. alpha_im) cent``
* ``i1 .. im rev(beta_i1 .. beta_im) dollar``
* ``{1..n, a, b}* {dj.0, dj.2}* dj.1`` for each ``j``

Its lexicographic order is dense exactly when the instance has no
solution: a solution makes the ``cent`` and ``dollar`` words of the same
index sequence adjacent, and otherwise a word can always be inserted
between any two.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .grammar import Grammar, OrderedAlphabet, Word, enumerate_between, make_grammar, recognize
from .lexorder import lex_less, prefix_free_bounded

CENT = "cent"
DOLLAR = "dollar"

Solution = Tuple[int, ...]


class PcpError(ValueError):
    pass


@dataclass(frozen=True)
class PcpInstance:
    """Pairs ``(alpha_i, beta_i)`` of nonempty words over ``{a, b}``."""

    pairs: Tuple[Tuple[str, str], ...]

    def __post_init__(self) -> None:
        pairs = tuple((str(a), str(b)) for a, b in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        if not pairs:
            raise PcpError("an instance needs at least one pair")
        for a, b in pairs:
            for w in (a, b):
                if not w:
                    raise PcpError("empty word in instance")
                bad = set(w) - {"a", "b"}
                if bad:
                    raise PcpError("letter %r is not a or b" % sorted(bad)[0])

    @classmethod
    def from_sequences(cls, alphas: Sequence[str], betas: Sequence[str]) -> "PcpInstance":
        """Build from the top words ``(alpha_1..alpha_n)`` and bottom words."""
        if len(alphas) != len(betas):
            raise PcpError("alpha and beta sequences differ in length")
        return cls(tuple(zip(alphas, betas)))

    @property
    def n(self) -> int:
        return len(self.pairs)

    @property
    def alphas(self) -> Tuple[str, ...]:
        return tuple(a for a, _ in self.pairs)

    @property
    def betas(self) -> Tuple[str, ...]:
        return tuple(b for _, b in self.pairs)


def parse_pcp(text: str) -> PcpInstance:
    """One pair per line, ``<alpha> <beta>``; ``#`` starts a comment."""
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise PcpError("line %d: expected two words, got %d" % (lineno, len(fields)))
        for w in fields:
            for ch in w:
                if ch not in "ab":
                    raise PcpError("line %d: letter %r is not a or b" % (lineno, ch))
        pairs.append((fields[0], fields[1]))
    if not pairs:
        raise PcpError("no pairs in input")
    return PcpInstance(tuple(pairs))


def format_pcp(instance: PcpInstance) -> str:
    return "".join("%s %s\n" % p for p in instance.pairs)


def _check_solution(instance: PcpInstance, indices: Sequence[int]) -> Solution:
    indices = tuple(int(i) for i in indices)
    if not indices:
        raise PcpError("a solution needs at least one index")
    for i in indices:
        if not 1 <= i <= instance.n:
            raise PcpError("index %d out of range 1..%d" % (i, instance.n))
    return indices


def concat(words: Sequence[str], indices: Sequence[int]) -> str:
    return "".join(words[i - 1] for i in indices)


def verify_solution(instance: PcpInstance, indices: Sequence[int]) -> bool:
    indices = _check_solution(instance, indices)
    return concat(instance.alphas, indices) == concat(instance.betas, indices)


def brute_force_solve(instance: PcpInstance, max_depth: int) -> Optional[Solution]:
    """Shortest solution of length at most ``max_depth``, least among equals.

    Breadth-first over index sequences; a branch is dropped as soon as
    neither concatenation is a prefix of the other.
    """
    if max_depth < 1:
        raise ValueError("max_depth must be positive")
    alphas, betas = instance.alphas, instance.betas
    frontier: deque = deque([((), "", "")])
    while frontier:
        seq, top, bottom = frontier.popleft()
        if len(seq) >= max_depth:
            continue
        for i in range(1, instance.n + 1):
            t, b = top + alphas[i - 1], bottom + betas[i - 1]
            if t == b:
                return seq + (i,)
            if t.startswith(b) or b.startswith(t):
                frontier.append((seq + (i,), t, b))
    return None


# --------------------------------------------------------------------------
# the reduction

def index_token(i: int) -> str:
    return str(i)


def d_token(j: int, k: int) -> str:
    return "d%d.%d" % (j, k)


def build_delta_alphabet(n: int) -> OrderedAlphabet:
    if n < 1:
        raise ValueError("n must be positive")
    c = [index_token(i) for i in range(1, n + 1)] + ["a", "b"]
    tokens: List[str] = []
    for j, cj in enumerate(c, 1):
        tokens += [cj, d_token(j, 0), d_token(j, 1), d_token(j, 2)]
    tokens += [CENT, DOLLAR]
    return OrderedAlphabet(tuple(tokens))


@dataclass(frozen=True)
class ReductionArtifacts:
    n: int
    delta: OrderedAlphabet
    grammar: Grammar
    c_letters: Tuple[str, ...]
    d_letters: Dict[int, Tuple[str, str, str]]

    def c_index(self, token: str) -> Optional[int]:
        """``i`` when ``token`` is the letter c_i, else ``None``."""
        try:
            return self.c_letters.index(token) + 1
        except ValueError:
            return None

    def d_block(self, token: str) -> Optional[int]:
        """``j`` when ``token`` is one of dj.0, dj.1, dj.2, else ``None``."""
        for j, block in self.d_letters.items():
            if token in block:
                return j
        return None

    def index_prefix(self, word: Sequence[str]) -> Solution:
        """The longest prefix of ``word`` made of index letters, as integers."""
        out = []
        for t in word:
            i = self.c_index(t)
            if i is None or i > self.n:
                break
            out.append(i)
        return tuple(out)


def _rev(word: str) -> Tuple[str, ...]:
    return tuple(reversed(word))


def build_reduction_grammar(instance: PcpInstance) -> ReductionArtifacts:
    n = instance.n
    delta = build_delta_alphabet(n)
    idx = [index_token(i) for i in range(1, n + 1)]
    blocks = {j: (d_token(j, 0), d_token(j, 1), d_token(j, 2)) for j in range(1, n + 3)}
    prods = [("S", ("A", CENT)), ("S", ("B", DOLLAR)), ("S", ("C",))]
    for nt, words in (("A", instance.alphas), ("B", instance.betas)):
        for i, w in zip(idx, words):
            prods.append((nt, (i, nt) + _rev(w)))
            prods.append((nt, (i,) + _rev(w)))
    for t in idx + ["a", "b"]:
        prods.append(("C", (t, "C")))
    for j in blocks:
        prods.append(("C", ("D%d" % j,)))
    for j, (d0, d1, d2) in blocks.items():
        dj = "D%d" % j
        prods += [(dj, (d0, dj)), (dj, (d2, dj)), (dj, (d1,))]
    grammar = make_grammar(delta, "S", prods)
    return ReductionArtifacts(n, delta, grammar, tuple(idx + ["a", "b", CENT, DOLLAR]), blocks)


# --------------------------------------------------------------------------
# witnesses

def gap_witness(r: ReductionArtifacts, instance: PcpInstance, solution: Sequence[int]) -> Tuple[Word, Word]:
    """The two words that a solution makes adjacent."""
    solution = _check_solution(instance, solution)
    if not verify_solution(instance, solution):
        raise PcpError("%s is not a solution" % " ".join(map(str, solution)))
    head = tuple(index_token(i) for i in solution)
    body = _rev(concat(instance.alphas, solution))
    u_alpha, u_beta = head + body + (CENT,), head + body + (DOLLAR,)
    assert recognize(r.grammar, u_alpha) and recognize(r.grammar, u_beta)
    assert lex_less(u_alpha, u_beta, r.delta)
    return u_alpha, u_beta


@dataclass(frozen=True)
class Premise:
    name: str
    statement: str
    holds: bool
    bounded: bool = False


@dataclass(frozen=True)
class Certificate:
    """Evidence that ``lower`` and ``upper`` are neighbours in L(G)."""

    lower: Word
    upper: Word
    bound: int
    premises: Tuple[Premise, ...]
    argument: str


@dataclass(frozen=True)
class Refuted:
    """A word of the language strictly between the proposed neighbours."""

    word: Word


class CertificationError(RuntimeError):
    pass


_ADJACENCY_ARGUMENT = (
    "A word z of the language with lower < z < upper either has lower as a proper "
    "prefix, which prefix-freeness excludes, or continues the common part w with a "
    "letter strictly between cent and dollar, and there is none. The grammar is "
    "prefix by construction: every nonterminal derives words that end in a marker "
    "(cent, dollar or dj.1) occurring nowhere else in them."
)


def certify_adjacent(grammar: Grammar, lower: Sequence[str], upper: Sequence[str], bound: int):
    """Check that ``w cent`` and ``w dollar`` have nothing between them.

    Returns :class:`Refuted` with an enumerated word lying strictly
    between, otherwise a :class:`Certificate` listing the checked premises.
    Raises :class:`CertificationError` when nothing lies between in the
    window but a premise of the general argument fails.
    """
    lower, upper = tuple(lower), tuple(upper)
    if not (lower and upper and lower[-1] == CENT and upper[-1] == DOLLAR and lower[:-1] == upper[:-1]):
        raise ValueError("pair must have the shape (w cent, w dollar)")
    alpha = grammar.alphabet
    alpha.check_word(lower)
    alpha.check_word(upper)

    between = enumerate_between(grammar, lower, upper, bound, limit=1)
    if between:
        return Refuted(between[0])
    p3 = Premise("P3", "no word of length <= %d lies strictly between the pair" % bound, True, bounded=True)

    gap = alpha.rank[DOLLAR] - alpha.rank[CENT]
    p1 = Premise("P1", "no letter lies strictly between cent and dollar", gap == 1)
    if not p1.holds:
        raise CertificationError("letters between cent and dollar: %d" % (gap - 1))

    violation = prefix_free_bounded(grammar, bound)
    p2 = Premise("P2", "no word of length <= %d is a proper prefix of another" % bound,
                 violation is None, bounded=True)
    if violation is not None:
        raise CertificationError("language is not prefix-free: %s / %s"
                                 % (" ".join(violation.shorter), " ".join(violation.longer)))
    return Certificate(lower, upper, bound, (p1, p2, p3), _ADJACENCY_ARGUMENT)


def neighbor_witnesses(r: ReductionArtifacts, instance: PcpInstance, v: Sequence[str]) -> Tuple[Word, Word]:
    """Words ``u < v < w`` of the language: v is never an endpoint."""
    v = r.delta.check_word(v)
    if not recognize(r.grammar, v):
        raise ValueError("word is not in the language")
    last = v[-1]
    if last in (CENT, DOLLAR):
        words = instance.alphas if last == CENT else instance.betas
        indices = r.index_prefix(v)
        if not indices:
            raise ValueError("word has no index prefix")
        head = tuple(index_token(i) for i in indices)
        u = head + (index_token(1),) + _rev(concat(words, indices + (1,))) + (last,)
        w = (r.d_letters[indices[0]][1],)
    else:
        j = r.d_block(last)
        if j is None or last != r.d_letters[j][1]:
            raise ValueError("word does not fit any family of the language")
        d0, d1, d2 = r.d_letters[j]
        u = v[:-1] + (d0, d1)
        w = v[:-1] + (d2, d1)
    if not (lex_less(u, v, r.delta) and lex_less(v, w, r.delta)):
        raise AssertionError("neighbour order check failed for %r" % (v,))
    if not (recognize(r.grammar, u) and recognize(r.grammar, w)):
        raise AssertionError("neighbour membership check failed for %r" % (v,))
    return u, w
