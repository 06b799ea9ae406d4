"""The lexicographic order on words and its order-preserving binary coding."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Dict, NamedTuple, Optional, Sequence, Tuple

from .grammar import (
    DEFAULT_WORD_CAP,
    EnumerationLimitExceeded,
    Grammar,
    OrderedAlphabet,
    Word,
    make_grammar,
    min_lengths,
    shortest_words,
)

BINARY = OrderedAlphabet(("0", "1"))


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def lex_compare(u: Sequence, v: Sequence, alphabet: OrderedAlphabet) -> Ordering:
    """Compare two words: a proper prefix is smaller, otherwise the first
    differing letter decides."""
    ku, kv = alphabet.key(u), alphabet.key(v)
    if ku == kv:
        return Ordering.EQUAL
    return Ordering.LESS if ku < kv else Ordering.GREATER


def lex_less(u: Sequence, v: Sequence, alphabet: OrderedAlphabet) -> bool:
    return lex_compare(u, v, alphabet) is Ordering.LESS


class Decomposition(NamedTuple):
    """``u = common + (low,) + u_rest`` and ``v = common + (high,) + v_rest``."""

    common: Word
    low: str
    high: str
    u_rest: Word
    v_rest: Word


class _PrefixRelated:
    __slots__ = ()

    def __repr__(self) -> str:
        return "PREFIX_RELATED"


PREFIX_RELATED = _PrefixRelated()


def first_difference(u: Sequence, v: Sequence, alphabet: OrderedAlphabet):
    """Split ``u < v`` at their first differing position.

    Returns a :class:`Decomposition`, or :data:`PREFIX_RELATED` when ``u`` is
    a proper prefix of ``v``.
    """
    u, v = alphabet.check_word(u), alphabet.check_word(v)
    order = lex_compare(u, v, alphabet)
    if order is not Ordering.LESS:
        raise ValueError("first_difference needs u < v, got %s" % order.name)
    for i, (x, y) in enumerate(zip(u, v)):
        if x != y:
            return Decomposition(u[:i], x, y, u[i + 1:], v[i + 1:])
    return PREFIX_RELATED


# --------------------------------------------------------------------------
# binary coding

@dataclass(frozen=True)
class BinaryCode:
    """Fixed-width, order-preserving code of an alphabet into {0,1}*."""

    alphabet: OrderedAlphabet
    width: int
    table: Dict[str, Word]

    def encode(self, word: Sequence[str]) -> Word:
        try:
            return tuple(b for t in word for b in self.table[t])
        except KeyError as exc:
            raise ValueError("unmapped letter %r" % (exc.args[0],)) from None

    def decode(self, bits: Sequence[str]) -> Word:
        if len(bits) % self.width:
            raise ValueError("bit string length is not a multiple of %d" % self.width)
        inverse = {code: t for t, code in self.table.items()}
        out = []
        for i in range(0, len(bits), self.width):
            chunk = tuple(bits[i:i + self.width])
            if chunk not in inverse:
                raise ValueError("unused code word %s" % "".join(chunk))
            out.append(inverse[chunk])
        return tuple(out)


def code_width(size: int) -> int:
    """ceil(log2(size)), but at least one bit."""
    if size < 1:
        raise ValueError("alphabet must be nonempty")
    return max(1, (size - 1).bit_length())


def binary_code(alphabet: OrderedAlphabet) -> BinaryCode:
    width = code_width(len(alphabet))
    table = {t: tuple(format(i, "0%db" % width)) for i, t in enumerate(alphabet.tokens)}
    return BinaryCode(alphabet, width, table)


def encode_grammar(g: Grammar, code: BinaryCode) -> Grammar:
    """Replace every terminal by its code word; nonterminals are untouched."""
    prods = []
    for lhs, rhs in g.productions:
        new = []
        for s in rhs:
            if s in g.alphabet:
                if s not in code.table:
                    raise ValueError("unmapped letter %r" % s)
                new.extend(code.table[s])
            else:
                new.append(s)
        prods.append((lhs, tuple(new)))
    encoded = make_grammar(BINARY, g.start, prods)
    # keep nonterminals that had no productions (e.g. a trimmed empty grammar)
    if encoded.nonterminals != g.nonterminals:
        encoded = Grammar(BINARY, g.nonterminals, g.start, encoded.productions)
    return encoded


# --------------------------------------------------------------------------
# bounded prefix-freeness

class PrefixViolation(NamedTuple):
    shorter: Word
    longer: Word


def prefix_free_bounded(g: Grammar, max_len: int, cap: int = DEFAULT_WORD_CAP) -> Optional[PrefixViolation]:
    """Look for u, v in L(g), |v| <= max_len, with u a proper prefix of v.

    Returns ``None`` when the window is prefix-free.  This is only a bounded
    check: prefix-freeness of a context-free language is undecidable.

    Two leftmost derivations are run in lockstep, cancelling the letters they
    agree on; a state is the pair of unexpanded suffixes, so the cost tracks
    the number of distinct suffix pairs rather than the size of the language.
    """
    alpha = g.alphabet
    mins = min_lengths(g)
    shortest = shortest_words(g)
    rules: Dict[str, list] = {}
    for lhs, rhs in g.productions:
        rules.setdefault(lhs, []).append(rhs)
    if g.start not in shortest:
        return None

    def need(symbols) -> float:
        return sum(1 if s in alpha else mins[s] for s in symbols)

    def spell(symbols) -> Word:
        return tuple(t for s in symbols for t in ((s,) if s in alpha else shortest[s]))

    seen = set()
    stack = [((), (g.start,), (g.start,))]
    while stack:
        done, x, y = stack.pop()
        while x and y and x[0] in alpha and y[0] in alpha and x[0] == y[0]:
            done = done + (x[0],)
            x, y = x[1:], y[1:]
        if not x and not y:
            continue
        if not x:
            return PrefixViolation(done, done + spell(y))
        if not y:
            return PrefixViolation(done, done + spell(x))
        if x[0] in alpha and y[0] in alpha:
            continue  # the two words diverge
        state = (len(done), x, y)
        if state in seen:
            continue
        seen.add(state)
        if len(seen) > cap:
            raise EnumerationLimitExceeded("prefix check explored more than %d states" % cap)
        if x[0] not in alpha:
            branches = [(done, rhs + x[1:], y) for rhs in rules.get(x[0], ())]
        else:
            branches = [(done, x, rhs + y[1:]) for rhs in rules.get(y[0], ())]
        for d, nx, ny in reversed(branches):
            if len(d) + need(nx) <= max_len and len(d) + need(ny) <= max_len:
                stack.append((d, nx, ny))
    return None
