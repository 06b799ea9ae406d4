"""Epsilon-free context-free grammars over a linearly ordered alphabet.

Words are tuples of tokens.  A token is any non-blank string without
whitespace or ``#``; multi-character names such as ``cent`` or ``d3.1``
are single letters.

The text format read by :func:`parse_grammar` is::

    alphabet: a b          # tokens in ascending order
    start: S
    S -> a S | b

Any token that does not occur on the alphabet line is a nonterminal.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Hashable, Iterable, List, Optional, Sequence, Tuple

Word = Tuple[str, ...]
Production = Tuple[str, Tuple[str, ...]]

DEFAULT_WORD_CAP = 2_000_000


class GrammarError(ValueError):
    """Malformed grammar text or an inconsistent grammar value."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)


class EnumerationLimitExceeded(RuntimeError):
    """Raised instead of silently truncating a word enumeration."""


@dataclass(frozen=True)
class OrderedAlphabet:
    """A finite alphabet whose strict order is the order of ``tokens``."""

    tokens: Tuple[Hashable, ...]
    rank: Dict[Hashable, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        tokens = tuple(self.tokens)
        object.__setattr__(self, "tokens", tokens)
        if not tokens:
            raise ValueError("an alphabet needs at least one token")
        rank = {t: i for i, t in enumerate(tokens)}
        if len(rank) != len(tokens):
            dup = next(t for t in tokens if tokens.count(t) > 1)
            raise ValueError("duplicate alphabet token %r" % (dup,))
        object.__setattr__(self, "rank", rank)

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)

    def __contains__(self, token) -> bool:
        return token in self.rank

    def key(self, word: Iterable[Hashable]) -> Tuple[int, ...]:
        """Sort key realising the lexicographic order on words."""
        rank = self.rank
        try:
            return tuple(rank[t] for t in word)
        except KeyError as exc:
            raise ValueError("letter %r not in alphabet" % (exc.args[0],)) from None

    def check_word(self, word: Iterable[Hashable]) -> Word:
        word = tuple(word)
        for t in word:
            if t not in self.rank:
                raise ValueError("letter %r not in alphabet" % (t,))
        return word

    def sub_alphabet(self, tokens: Iterable[Hashable]) -> "OrderedAlphabet":
        """The restriction of this alphabet to ``tokens``, order preserved."""
        wanted = set(tokens)
        return OrderedAlphabet(tuple(t for t in self.tokens if t in wanted))


def _valid_token(tok: str) -> bool:
    return bool(tok) and not any(ch.isspace() or ch == "#" for ch in tok) and tok not in ("|", "->")


@dataclass(frozen=True)
class Grammar:
    alphabet: OrderedAlphabet
    nonterminals: FrozenSet[str]
    start: str
    productions: Tuple[Production, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "nonterminals", frozenset(self.nonterminals))
        prods = tuple((lhs, tuple(rhs)) for lhs, rhs in self.productions)
        object.__setattr__(self, "productions", prods)
        overlap = self.nonterminals & set(self.alphabet.tokens)
        if overlap:
            raise GrammarError("symbols used both as terminal and nonterminal: %s" % " ".join(sorted(overlap)))
        if self.start not in self.nonterminals:
            raise GrammarError("start symbol %r is not a nonterminal" % self.start)
        for lhs, rhs in prods:
            if lhs not in self.nonterminals:
                raise GrammarError("left side %r is not a nonterminal" % lhs)
            if not rhs:
                raise GrammarError("epsilon production for %s" % lhs)
            for sym in rhs:
                if sym not in self.nonterminals and sym not in self.alphabet:
                    raise GrammarError("undeclared token %r in production for %s" % (sym, lhs))

    @cached_property
    def _predictions(self) -> Dict[Tuple[str, str], Tuple[int, ...]]:
        return _prediction_table(self)

    def rules_for(self, nonterminal: str) -> List[Tuple[str, ...]]:
        return [rhs for lhs, rhs in self.productions if lhs == nonterminal]

    def is_terminal(self, sym: str) -> bool:
        return sym in self.alphabet

    def terminals_used(self) -> List[str]:
        used = {s for _, rhs in self.productions for s in rhs if s in self.alphabet}
        return [t for t in self.alphabet.tokens if t in used]


def make_grammar(alphabet: Sequence[str], start: str, productions: Iterable[Production]) -> Grammar:
    """Build a grammar whose nonterminals are all non-alphabet symbols in use."""
    alpha = alphabet if isinstance(alphabet, OrderedAlphabet) else OrderedAlphabet(tuple(alphabet))
    prods = [(lhs, tuple(rhs)) for lhs, rhs in productions]
    nts = {start} | {lhs for lhs, _ in prods}
    nts |= {s for _, rhs in prods for s in rhs if s not in alpha}
    return Grammar(alpha, frozenset(nts), start, tuple(prods))


# --------------------------------------------------------------------------
# text format

def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_grammar(text: str) -> Grammar:
    """Parse the line-based grammar format; see the module docstring."""
    alphabet: Optional[OrderedAlphabet] = None
    start: Optional[str] = None
    prods: List[Production] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw)
        if not line:
            continue
        if alphabet is None:
            if not line.startswith("alphabet:"):
                raise GrammarError("expected 'alphabet:' line", lineno)
            toks = line[len("alphabet:"):].split()
            if not toks:
                raise GrammarError("empty alphabet", lineno)
            for t in toks:
                if not _valid_token(t):
                    raise GrammarError("invalid alphabet token %r" % t, lineno)
            try:
                alphabet = OrderedAlphabet(tuple(toks))
            except ValueError as exc:
                raise GrammarError(str(exc), lineno) from None
            continue
        if start is None:
            if not line.startswith("start:"):
                raise GrammarError("expected 'start:' line", lineno)
            toks = line[len("start:"):].split()
            if len(toks) != 1:
                raise GrammarError("start line needs exactly one symbol", lineno)
            start = toks[0]
            if start in alphabet:
                raise GrammarError("start symbol %r is an alphabet token" % start, lineno)
            continue
        if "->" not in line:
            raise GrammarError("expected 'A -> ...'", lineno)
        head, body = line.split("->", 1)
        head_toks = head.split()
        if len(head_toks) != 1:
            raise GrammarError("left side must be a single nonterminal", lineno)
        lhs = head_toks[0]
        if lhs in alphabet:
            raise GrammarError("alphabet token %r on a left side" % lhs, lineno)
        if not _valid_token(lhs):
            raise GrammarError("invalid nonterminal %r" % lhs, lineno)
        for alt in body.split("|"):
            rhs = tuple(alt.split())
            if not rhs:
                raise GrammarError("epsilon production for %s" % lhs, lineno)
            for sym in rhs:
                if not _valid_token(sym):
                    raise GrammarError("invalid token %r" % sym, lineno)
            prods.append((lhs, rhs))
    if alphabet is None:
        raise GrammarError("missing 'alphabet:' line")
    if start is None:
        raise GrammarError("missing 'start:' line")
    return make_grammar(alphabet, start, prods)


def serialize_grammar(g: Grammar, comments: Sequence[str] = ()) -> str:
    """Inverse of :func:`parse_grammar`; production order is preserved."""
    out = ["# " + c for c in comments]
    out.append("alphabet: " + " ".join(g.alphabet.tokens))
    out.append("start: " + g.start)
    for lhs, group in itertools.groupby(g.productions, key=lambda p: p[0]):
        out.append("%s -> %s" % (lhs, " | ".join(" ".join(rhs) for _, rhs in group)))
    return "\n".join(out) + "\n"


# --------------------------------------------------------------------------
# useless symbols

def generating_nonterminals(g: Grammar) -> FrozenSet[str]:
    gen: set = set()
    changed = True
    while changed:
        changed = False
        for lhs, rhs in g.productions:
            if lhs not in gen and all(s in gen or s in g.alphabet for s in rhs):
                gen.add(lhs)
                changed = True
    return frozenset(gen)


def is_empty_language(g: Grammar) -> bool:
    return g.start not in generating_nonterminals(g)


def trim(g: Grammar) -> Grammar:
    """Drop non-generating and unreachable nonterminals.

    An empty language yields a grammar with no productions at all.
    """
    gen = generating_nonterminals(g)
    prods = [(lhs, rhs) for lhs, rhs in g.productions
             if lhs in gen and all(s in gen or s in g.alphabet for s in rhs)]
    reach = {g.start}
    stack = [g.start]
    while stack:
        a = stack.pop()
        for lhs, rhs in prods:
            if lhs == a:
                for s in rhs:
                    if s not in g.alphabet and s not in reach:
                        reach.add(s)
                        stack.append(s)
    if g.start not in gen:
        return Grammar(g.alphabet, frozenset([g.start]), g.start, ())
    prods = [p for p in prods if p[0] in reach]
    return Grammar(g.alphabet, frozenset(reach), g.start, tuple(prods))


def is_right_linear(g: Grammar) -> bool:
    """Every right side is terminals followed by at most one nonterminal."""
    for _, rhs in g.productions:
        if any(s not in g.alphabet for s in rhs[:-1]):
            return False
    return True


def min_lengths(g: Grammar) -> Dict[str, float]:
    """Length of a shortest terminal word derivable from each nonterminal."""
    best: Dict[str, float] = {a: math.inf for a in g.nonterminals}
    changed = True
    while changed:
        changed = False
        for lhs, rhs in g.productions:
            n = sum(1 if s in g.alphabet else best[s] for s in rhs)
            if n < best[lhs]:
                best[lhs] = n
                changed = True
    return best


def shortest_words(g: Grammar) -> Dict[str, Word]:
    """A shortest terminal word for every generating nonterminal."""
    best: Dict[str, Word] = {}
    changed = True
    while changed:
        changed = False
        for lhs, rhs in g.productions:
            if all(s in g.alphabet or s in best for s in rhs):
                w = tuple(t for s in rhs for t in ((s,) if s in g.alphabet else best[s]))
                if lhs not in best or len(w) < len(best[lhs]):
                    best[lhs] = w
                    changed = True
    return best


# --------------------------------------------------------------------------
# recognition (Earley, epsilon-free)

def first_sets(g: Grammar) -> Dict[str, FrozenSet[str]]:
    """Letters that can begin a word derived from each nonterminal."""
    first: Dict[str, set] = {a: set() for a in g.nonterminals}
    changed = True
    while changed:
        changed = False
        for lhs, rhs in g.productions:
            head = rhs[0]
            add = {head} if head in g.alphabet else first[head]
            if not add <= first[lhs]:
                first[lhs] |= add
                changed = True
    return {a: frozenset(s) for a, s in first.items()}


def _prediction_table(g: Grammar) -> Dict[Tuple[str, str], Tuple[int, ...]]:
    # (nonterminal, next letter) -> productions worth predicting
    first = first_sets(g)
    table: Dict[Tuple[str, str], List[int]] = {}
    for i, (lhs, rhs) in enumerate(g.productions):
        head = rhs[0]
        for t in ((head,) if head in g.alphabet else first[head]):
            table.setdefault((lhs, t), []).append(i)
    return {k: tuple(v) for k, v in table.items()}


def recognize(g: Grammar, word: Sequence[str]) -> bool:
    """Earley recognition.  Predictions are filtered by the next input letter,
    which is exact because no nonterminal derives the empty word."""
    word = g.alphabet.check_word(word)
    n = len(word)
    if n == 0:
        return False
    predict = g._predictions
    prods = g.productions
    nts = g.nonterminals

    chart: List[set] = [set() for _ in range(n + 1)]
    # waiting[k][A]: items in chart k whose next symbol is A
    waiting: List[Dict[str, List[Tuple[int, int, int]]]] = [dict() for _ in range(n + 1)]

    for k in range(n + 1):
        items = chart[k]
        if k == 0:
            agenda = [(p, 0, 0) for p in predict.get((g.start, word[0]), ())]
            items.update(agenda)
        else:
            agenda = list(items)
        nxt = word[k] if k < n else None
        predicted = set()
        while agenda:
            item = agenda.pop()
            p, dot, origin = item
            lhs, rhs = prods[p]
            if dot == len(rhs):
                for q, qdot, qorig in waiting[origin].get(lhs, ()):
                    new = (q, qdot + 1, qorig)
                    if new not in items:
                        items.add(new)
                        agenda.append(new)
                continue
            sym = rhs[dot]
            if sym in nts:
                waiting[k].setdefault(sym, []).append(item)
                if nxt is not None and sym not in predicted:
                    predicted.add(sym)
                    for q in predict.get((sym, nxt), ()):
                        new = (q, 0, k)
                        if new not in items:
                            items.add(new)
                            agenda.append(new)
            elif sym == nxt:
                chart[k + 1].add((p, dot + 1, origin))
    return any(origin == 0 and dot == len(prods[p][1]) and prods[p][0] == g.start
               for p, dot, origin in chart[n])


# --------------------------------------------------------------------------
# bounded enumeration

def enumerate_up_to_length(g: Grammar, max_len: int, cap: int = DEFAULT_WORD_CAP) -> List[Word]:
    """All words of L(g) of length at most ``max_len``, in lexicographic order.

    Word sets are built bottom-up per (nonterminal, exact length); unit
    productions are closed by iterating each length to a fixpoint.  More than
    ``cap`` distinct words raises :class:`EnumerationLimitExceeded`.
    """
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    alpha = g.alphabet
    table: Dict[str, List[set]] = {a: [set() for _ in range(max_len + 1)] for a in g.nonterminals}
    total = 0

    def words_of(sym: str, k: int):
        if sym in alpha:
            return ((sym,),) if k == 1 else ()
        return table[sym][k]

    def spell(rhs: Tuple[str, ...], k: int):
        # all words of length exactly k derivable from the symbol string rhs
        if len(rhs) == 1:
            yield from words_of(rhs[0], k)
            return
        head, rest = rhs[0], rhs[1:]
        for j in range(1, k - len(rest) + 1):
            firsts = words_of(head, j)
            if not firsts:
                continue
            tails = list(spell(rest, k - j))
            if not tails:
                continue
            for x in firsts:
                for y in tails:
                    yield x + y

    for k in range(1, max_len + 1):
        changed = True
        while changed:
            changed = False
            for lhs, rhs in g.productions:
                if len(rhs) > k:
                    continue
                bucket = table[lhs][k]
                before = len(bucket)
                bucket.update(spell(rhs, k))
                if len(bucket) != before:
                    changed = True
                    total += len(bucket) - before
                    if total > cap:
                        raise EnumerationLimitExceeded(
                            "more than %d words while enumerating up to length %d" % (cap, max_len))
    words = [w for k in range(1, max_len + 1) for w in table[g.start][k]]
    words.sort(key=alpha.key)
    return words


def _above(prefix: Word, lo: Optional[Word], key) -> bool:
    """Whether some completion of ``prefix`` can exceed ``lo``."""
    if lo is None:
        return True
    n = min(len(prefix), len(lo))
    a, b = key(prefix[:n]), key(lo[:n])
    if a != b:
        return a > b
    return True


def _below(prefix: Word, hi: Optional[Word], key) -> bool:
    """Whether some completion of ``prefix`` can stay below ``hi``."""
    if hi is None:
        return True
    n = min(len(prefix), len(hi))
    a, b = key(prefix[:n]), key(hi[:n])
    if a != b:
        return a < b
    return len(prefix) < len(hi)


def enumerate_between(g: Grammar, lo: Optional[Sequence[str]], hi: Optional[Sequence[str]],
                      max_len: int, cap: int = DEFAULT_WORD_CAP, limit: Optional[int] = None) -> List[Word]:
    """Words w of L(g) with ``lo < w < hi`` and ``|w| <= max_len``, sorted.

    Explores leftmost derivations and abandons every sentential form whose
    terminal prefix already lies outside the open interval, so only the part
    of the language near the interval is ever generated.  ``None`` leaves an
    end open.  With ``limit`` the search stops after that many words.
    """
    key = g.alphabet.key
    lo = None if lo is None else g.alphabet.check_word(lo)
    hi = None if hi is None else g.alphabet.check_word(hi)
    mins = min_lengths(g)
    rules: Dict[str, List[Tuple[str, ...]]] = {}
    for lhs, rhs in g.productions:
        rules.setdefault(lhs, []).append(rhs)
    alpha = g.alphabet

    def need(symbols: Tuple[str, ...]) -> float:
        return sum(1 if s in alpha else mins[s] for s in symbols)

    found: set = set()
    seen: set = set()
    stack: List[Tuple[Word, Tuple[str, ...]]] = [((), (g.start,))]
    while stack:
        prefix, rest = stack.pop()
        # move leading terminals into the prefix
        i = 0
        while i < len(rest) and rest[i] in alpha:
            i += 1
        if i:
            prefix = prefix + rest[:i]
            rest = rest[i:]
            if not _above(prefix, lo, key) or not _below(prefix, hi, key):
                continue
        if not rest:
            if (lo is None or key(prefix) > key(lo)) and (hi is None or key(prefix) < key(hi)):
                found.add(prefix)
                if limit is not None and len(found) >= limit:
                    break
                if len(found) > cap:
                    raise EnumerationLimitExceeded("more than %d words in interval" % cap)
            continue
        state = (prefix, rest)
        if state in seen:
            continue
        seen.add(state)
        head, tail = rest[0], rest[1:]
        for rhs in rules.get(head, ()):
            nxt = rhs + tail
            if len(prefix) + need(nxt) <= max_len:
                stack.append((prefix, nxt))
    return sorted(found, key=key)
