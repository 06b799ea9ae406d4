"""Finite automata over plain and padded multi-track (convolution) alphabets.

A convolution of words ``w1, ..., wk`` reads them in lockstep, one letter
per track, padding shorter words with :data:`PAD`.  Relations between words
such as the lexicographic order then become regular languages, and
first-order questions about the order of a regular language reduce to
products, complements, projections and emptiness tests.

States are integers ``0 .. n-1``.  Every construction explores reachable
states only and returns a fresh automaton.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import (Callable, Dict, FrozenSet, Hashable, Iterable, Iterator, List, Mapping,
                    Optional, Sequence, Tuple)

from .grammar import Grammar, OrderedAlphabet, is_right_linear

DEFAULT_STATE_CAP = 1_000_000


class _Pad:
    __slots__ = ()

    def __repr__(self) -> str:
        return "PAD"

    def __str__(self) -> str:
        return "⊥"

    def __reduce__(self):
        return "PAD"


PAD = _Pad()


class StateLimitExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class ConvolutionAlphabet(OrderedAlphabet):
    """Letters are ``arity``-tuples over ``base`` plus :data:`PAD`, never all PAD.

    Letters are ordered componentwise with PAD below every base letter.
    """

    base: Optional[OrderedAlphabet] = None
    arity: int = 2

    @classmethod
    def of(cls, base: OrderedAlphabet, arity: int) -> "ConvolutionAlphabet":
        if arity < 1:
            raise ValueError("arity must be positive")
        symbols = (PAD,) + tuple(base.tokens)
        letters = [l for l in itertools.product(symbols, repeat=arity)
                   if any(c is not PAD for c in l)]
        return cls(tuple(letters), base=base, arity=arity)


def convolve(*words: Sequence[Hashable]) -> Tuple[tuple, ...]:
    n = max((len(w) for w in words), default=0)
    return tuple(tuple(w[i] if i < len(w) else PAD for w in words) for i in range(n))


def deconvolve(conv: Iterable[tuple], arity: int) -> Tuple[tuple, ...]:
    tracks: List[list] = [[] for _ in range(arity)]
    for letter in conv:
        for i, c in enumerate(letter):
            if c is not PAD:
                tracks[i].append(c)
    return tuple(tuple(t) for t in tracks)


class Nfa:
    """Nondeterministic automaton with integer states.

    ``delta[p]`` maps a letter to the frozenset of successor states.
    Instances are not modified after construction.
    """

    __slots__ = ("alphabet", "delta", "initial", "accepting")

    def __init__(self, alphabet: OrderedAlphabet, delta: Sequence[Mapping[Hashable, FrozenSet[int]]],
                 initial: Iterable[int], accepting: Iterable[int], check: bool = True):
        self.alphabet = alphabet
        self.delta = tuple(delta)
        self.initial = frozenset(initial)
        self.accepting = frozenset(accepting)
        if check:
            self._validate()

    def _validate(self) -> None:
        alphabet = self.alphabet
        n = len(self.delta)
        for q in itertools.chain(self.initial, self.accepting):
            if not 0 <= q < n:
                raise ValueError("state %r out of range" % (q,))
        for row in self.delta:
            for letter, targets in row.items():
                if letter not in alphabet:
                    raise ValueError("letter %r not in alphabet" % (letter,))
                for q in targets:
                    if not 0 <= q < n:
                        raise ValueError("state %r out of range" % (q,))

    @property
    def num_states(self) -> int:
        return len(self.delta)

    def transitions(self) -> Iterator[Tuple[int, Hashable, int]]:
        rank = self.alphabet.rank
        for p, row in enumerate(self.delta):
            for letter in sorted(row, key=rank.__getitem__):
                for q in sorted(row[letter]):
                    yield p, letter, q

    def accepts(self, word: Iterable[Hashable]) -> bool:
        current = set(self.initial)
        for letter in word:
            if letter not in self.alphabet:
                raise ValueError("letter %r not in alphabet" % (letter,))
            current = {q for p in current for q in self.delta[p].get(letter, ())}
            if not current:
                return False
        return not current.isdisjoint(self.accepting)

    def __repr__(self) -> str:
        return "<Nfa %d states, %d letters>" % (self.num_states, len(self.alphabet))


def _explore(alphabet: OrderedAlphabet, initial: Iterable[Hashable],
             step: Callable[[Hashable], Iterable[Tuple[Hashable, Hashable]]],
             accepting: Callable[[Hashable], bool], cap: int = DEFAULT_STATE_CAP) -> Nfa:
    """Build the reachable part of an automaton given by a successor function."""
    ids: Dict[Hashable, int] = {}
    order: List[Hashable] = []
    queue: deque = deque()

    def intern(key):
        if key not in ids:
            if len(order) >= cap:
                raise StateLimitExceeded("more than %d states" % cap)
            ids[key] = len(order)
            order.append(key)
            queue.append(key)
        return ids[key]

    init = [intern(k) for k in initial]
    rows: List[Dict[Hashable, FrozenSet[int]]] = []
    while queue:
        key = queue.popleft()
        row: Dict[Hashable, set] = {}
        for letter, nxt in step(key):
            row.setdefault(letter, set()).add(intern(nxt))
        rows.append({a: frozenset(t) for a, t in row.items()})
    acc = [ids[k] for k in order if accepting(k)]
    return Nfa(alphabet, rows, init, acc, check=False)


def empty_nfa(alphabet: OrderedAlphabet) -> Nfa:
    return Nfa(alphabet, [{}], [0], [])


def nfa_from_word_set(alphabet: OrderedAlphabet, words: Iterable[Sequence[Hashable]]) -> Nfa:
    """Trie automaton for a finite language."""
    words = [tuple(w) for w in words]
    prefixes = {w[:i] for w in words for i in range(len(w) + 1)}
    finals = set(words)

    def step(prefix):
        for a in alphabet:
            if prefix + (a,) in prefixes:
                yield a, prefix + (a,)

    return _explore(alphabet, [()], step, finals.__contains__)


# --------------------------------------------------------------------------
# grammars

def nfa_from_right_linear(g: Grammar) -> Nfa:
    """Automaton for a right-linear grammar: one state per nonterminal, one per
    intermediate letter of a production, and a single accepting sink."""
    if not is_right_linear(g):
        raise ValueError("grammar is not right-linear")
    names = sorted(g.nonterminals)
    index = {a: i for i, a in enumerate(names)}
    accept = len(names)
    edges: List[Tuple[int, Optional[str], int]] = []
    n = accept + 1
    for lhs, rhs in g.productions:
        if rhs[-1] in g.alphabet:
            letters, target = rhs, accept
        else:
            letters, target = rhs[:-1], index[rhs[-1]]
        src = index[lhs]
        if not letters:
            edges.append((src, None, target))
            continue
        for k, t in enumerate(letters):
            dst = target if k == len(letters) - 1 else n
            if dst == n:
                n += 1
            edges.append((src, t, dst))
            src = dst

    eps: Dict[int, set] = {}
    step: Dict[int, Dict[str, set]] = {}
    for p, t, q in edges:
        if t is None:
            eps.setdefault(p, set()).add(q)
        else:
            step.setdefault(p, {}).setdefault(t, set()).add(q)

    def closure(p: int) -> set:
        seen = {p}
        todo = [p]
        while todo:
            for q in eps.get(todo.pop(), ()):
                if q not in seen:
                    seen.add(q)
                    todo.append(q)
        return seen

    rows = []
    acc = []
    for p in range(n):
        row: Dict[str, set] = {}
        cl = closure(p)
        for q in cl:
            for t, targets in step.get(q, {}).items():
                row.setdefault(t, set()).update(targets)
        rows.append({t: frozenset(s) for t, s in row.items()})
        if accept in cl:
            acc.append(p)
    return Nfa(g.alphabet, rows, [index[g.start]], acc)


# --------------------------------------------------------------------------
# boolean operations

def intersect(x: Nfa, y: Nfa, cap: int = DEFAULT_STATE_CAP) -> Nfa:
    if x.alphabet != y.alphabet:
        raise ValueError("alphabet mismatch")

    def step(pq):
        p, q = pq
        rowy = y.delta[q]
        for letter, ps in x.delta[p].items():
            qs = rowy.get(letter)
            if qs:
                for p2 in ps:
                    for q2 in qs:
                        yield letter, (p2, q2)

    return _explore(x.alphabet, [(p, q) for p in sorted(x.initial) for q in sorted(y.initial)],
                    step, lambda pq: pq[0] in x.accepting and pq[1] in y.accepting, cap)


def union(x: Nfa, y: Nfa) -> Nfa:
    if x.alphabet != y.alphabet:
        raise ValueError("alphabet mismatch")
    off = x.num_states
    rows = list(x.delta) + [{a: frozenset(q + off for q in t) for a, t in row.items()} for row in y.delta]
    return Nfa(x.alphabet, rows, set(x.initial) | {q + off for q in y.initial},
               set(x.accepting) | {q + off for q in y.accepting})


def determinize(x: Nfa, complete: bool = False, cap: int = DEFAULT_STATE_CAP) -> Nfa:
    """Subset construction; with ``complete`` every letter is defined everywhere."""
    letters = x.alphabet.tokens

    def step(subset):
        moves: Dict[Hashable, set] = {}
        for p in subset:
            for letter, targets in x.delta[p].items():
                moves.setdefault(letter, set()).update(targets)
        if complete:
            for letter in letters:
                yield letter, frozenset(moves.get(letter, ()))
        else:
            for letter, targets in moves.items():
                yield letter, frozenset(targets)

    return _explore(x.alphabet, [frozenset(x.initial)], step,
                    lambda s: not x.accepting.isdisjoint(s), cap)


def difference(x: Nfa, y: Nfa, cap: int = DEFAULT_STATE_CAP) -> Nfa:
    """L(x) minus L(y), determinizing ``y`` lazily along the runs of ``x``.

    Same language as ``intersect(x, complement(y))`` but only subsets of
    ``y`` reachable together with a state of ``x`` are built.
    """
    if x.alphabet != y.alphabet:
        raise ValueError("alphabet mismatch")

    def step(key):
        p, subset = key
        for letter, ps in x.delta[p].items():
            nxt = frozenset(q for s in subset for q in y.delta[s].get(letter, ()))
            for p2 in ps:
                yield letter, (p2, nxt)

    start = frozenset(y.initial)
    return _explore(x.alphabet, [(p, start) for p in sorted(x.initial)], step,
                    lambda key: key[0] in x.accepting and y.accepting.isdisjoint(key[1]), cap)


def complement(x: Nfa, cap: int = DEFAULT_STATE_CAP) -> Nfa:
    """All words over the alphabet not accepted by ``x``; for a convolution
    alphabet, all well-formed convolutions not accepted by ``x``."""
    d = determinize(x, complete=True, cap=cap)
    flipped = Nfa(d.alphabet, d.delta, d.initial, set(range(d.num_states)) - d.accepting)
    if isinstance(x.alphabet, ConvolutionAlphabet):
        return intersect(flipped, wellformed(x.alphabet.base, x.alphabet.arity), cap)
    return flipped


def shortest_accepted(x: Nfa) -> Optional[tuple]:
    """A shortest accepted word, least by letter rank among the shortest;
    ``None`` when the language is empty."""
    rank = x.alphabet.rank
    start = frozenset(x.initial)
    parent: Dict[frozenset, Optional[Tuple[frozenset, Hashable]]] = {start: None}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        if not x.accepting.isdisjoint(cur):
            word = []
            while parent[cur] is not None:
                cur, letter = parent[cur]
                word.append(letter)
            return tuple(reversed(word))
        moves: Dict[Hashable, set] = {}
        for p in cur:
            for letter, targets in x.delta[p].items():
                moves.setdefault(letter, set()).update(targets)
        for letter in sorted(moves, key=rank.__getitem__):
            nxt = frozenset(moves[letter])
            if nxt not in parent:
                parent[nxt] = (cur, letter)
                queue.append(nxt)
    return None


def is_empty(x: Nfa) -> bool:
    return shortest_accepted(x) is None


def useful_states(x: Nfa) -> FrozenSet[int]:
    """States that are both reachable and co-reachable."""
    reach = set(x.initial)
    todo = list(reach)
    while todo:
        p = todo.pop()
        for targets in x.delta[p].values():
            for q in targets:
                if q not in reach:
                    reach.add(q)
                    todo.append(q)
    back: Dict[int, set] = {}
    for p, row in enumerate(x.delta):
        for targets in row.values():
            for q in targets:
                back.setdefault(q, set()).add(p)
    co = set(x.accepting)
    todo = list(co)
    while todo:
        q = todo.pop()
        for p in back.get(q, ()):
            if p not in co:
                co.add(p)
                todo.append(p)
    return frozenset(reach & co)


def is_finite(x: Nfa) -> bool:
    """True iff no cycle passes through a useful state."""
    useful = useful_states(x)
    color: Dict[int, int] = {}
    for root in sorted(useful):
        if root in color:
            continue
        color[root] = 1
        stack = [(root, iter(sorted({q for t in x.delta[root].values() for q in t} & useful)))]
        while stack:
            p, it = stack[-1]
            q = next(it, None)
            if q is None:
                color[p] = 2
                stack.pop()
            elif color.get(q) == 1:
                return False
            elif q not in color:
                color[q] = 1
                stack.append((q, iter(sorted({r for t in x.delta[q].values() for r in t} & useful))))
    return True


def finite_language(x: Nfa) -> List[tuple]:
    """All words of a finite language, sorted by the alphabet order."""
    if not is_finite(x):
        raise ValueError("language is infinite")
    useful = useful_states(x)
    words = set()
    stack = [(p, ()) for p in x.initial if p in useful]
    while stack:
        p, w = stack.pop()
        if p in x.accepting:
            words.add(w)
        for letter, targets in x.delta[p].items():
            for q in targets:
                if q in useful:
                    stack.append((q, w + (letter,)))
    return sorted(words, key=x.alphabet.key)


# --------------------------------------------------------------------------
# convolution machinery

def wellformed(base: OrderedAlphabet, arity: int) -> Nfa:
    """Convolutions in which every track's padding is a suffix."""
    alpha = ConvolutionAlphabet.of(base, arity)

    def step(ended):
        for letter in alpha.tokens:
            if all(letter[i] is PAD for i in ended):
                yield letter, frozenset(i for i, c in enumerate(letter) if c is PAD)

    return _explore(alpha, [frozenset()], step, lambda s: True)


_EQ, _LT, _LT_U_ENDED, _LT_V_ENDED = range(4)


def lex_relation(base: OrderedAlphabet) -> Nfa:
    """Two-track automaton accepting conv(u, v) exactly when u < v.

    Until the first difference both tracks agree; a smaller letter on the
    first track, or the first track running out, commits to "less".
    """
    alpha = ConvolutionAlphabet.of(base, 2)
    rank = base.rank
    rows: List[Dict[tuple, set]] = [dict() for _ in range(4)]
    for letter in alpha.tokens:
        x, y = letter
        if x is PAD:
            for s in (_EQ, _LT, _LT_U_ENDED):
                rows[s].setdefault(letter, set()).add(_LT_U_ENDED)
        elif y is PAD:
            for s in (_LT, _LT_V_ENDED):
                rows[s].setdefault(letter, set()).add(_LT_V_ENDED)
        else:
            rows[_LT].setdefault(letter, set()).add(_LT)
            if x == y:
                rows[_EQ].setdefault(letter, set()).add(_EQ)
            elif rank[x] < rank[y]:
                rows[_EQ].setdefault(letter, set()).add(_LT)
    return Nfa(alpha, [{a: frozenset(t) for a, t in r.items()} for r in rows], [_EQ],
               [_LT, _LT_U_ENDED, _LT_V_ENDED])


def cylinder(x: Nfa, tracks: Sequence[int], base: OrderedAlphabet, arity: int,
             cap: int = DEFAULT_STATE_CAP) -> Nfa:
    """Read ``x`` on the given tracks of an ``arity``-track convolution.

    ``x`` is over ``base`` when one track is given, otherwise over the
    convolution alphabet of that many tracks.  The result is intersected with
    :func:`wellformed`, so the other tracks range over arbitrary words.
    """
    tracks = tuple(tracks)
    if len(set(tracks)) != len(tracks) or not all(0 <= t < arity for t in tracks):
        raise ValueError("bad track list %r for arity %d" % (tracks, arity))
    alpha = ConvolutionAlphabet.of(base, arity)
    single = len(tracks) == 1
    expected = base if single else ConvolutionAlphabet.of(base, len(tracks))
    if x.alphabet != expected:
        raise ValueError("automaton alphabet does not match the requested tracks")
    free = [i for i in range(arity) if i not in tracks]
    symbols = (PAD,) + tuple(base.tokens)

    def spread(inner) -> Iterator[tuple]:
        inner = (inner,) if single else inner
        for rest in itertools.product(symbols, repeat=len(free)):
            letter = [None] * arity
            for t, c in zip(tracks, inner):
                letter[t] = c
            for t, c in zip(free, rest):
                letter[t] = c
            letter = tuple(letter)
            if any(c is not PAD for c in letter):
                yield letter

    pad_only = list(spread(PAD if single else (PAD,) * len(tracks)))

    def step(p):
        for inner, targets in x.delta[p].items():
            for letter in spread(inner):
                for q in targets:
                    yield letter, q
        # once the watched tracks are exhausted the inner automaton idles
        for letter in pad_only:
            yield letter, p

    lifted = _explore(alpha, sorted(x.initial), step, x.accepting.__contains__, cap)
    return intersect(lifted, wellformed(base, arity), cap)


def project(x: Nfa, keep: Sequence[int], cap: int = DEFAULT_STATE_CAP) -> Nfa:
    """Existentially quantify the tracks not in ``keep``.

    Letters whose kept components are all PAD can only form a suffix of a
    well-formed convolution; they are dropped and their targets' acceptance
    is pulled back.  Keeping a single track yields an automaton over the
    base alphabet.
    """
    alpha = x.alphabet
    if not isinstance(alpha, ConvolutionAlphabet):
        raise ValueError("projection needs a convolution alphabet")
    keep = tuple(keep)
    if not keep or len(set(keep)) != len(keep) or not all(0 <= t < alpha.arity for t in keep):
        raise ValueError("bad track list %r" % (keep,))
    base = alpha.base
    x = intersect(x, wellformed(base, alpha.arity), cap)
    single = len(keep) == 1
    new_alpha = base if single else ConvolutionAlphabet.of(base, len(keep))

    rows: List[Dict[Hashable, set]] = [dict() for _ in range(x.num_states)]
    tail: Dict[int, set] = {}
    for p, row in enumerate(x.delta):
        for letter, targets in row.items():
            kept = tuple(letter[i] for i in keep)
            if all(c is PAD for c in kept):
                tail.setdefault(p, set()).update(targets)
            else:
                rows[p].setdefault(kept[0] if single else kept, set()).update(targets)
    accepting = set(x.accepting)
    changed = True
    while changed:
        changed = False
        for p, targets in tail.items():
            if p not in accepting and not accepting.isdisjoint(targets):
                accepting.add(p)
                changed = True
    out = Nfa(new_alpha, [{a: frozenset(t) for a, t in r.items()} for r in rows], x.initial, accepting)
    if single:
        return out
    return intersect(out, wellformed(base, len(keep)), cap)


def dump(x: Nfa) -> str:
    """Line-based text form: ``state`` lines then ``trans`` lines."""
    def fmt(letter) -> str:
        if isinstance(letter, tuple):
            return "(" + ",".join(str(c) for c in letter) + ")"
        return str(letter)

    lines = []
    for q in range(x.num_states):
        flags = (["initial"] if q in x.initial else []) + (["accepting"] if q in x.accepting else [])
        lines.append(" ".join(["state", str(q)] + flags))
    for p, letter, q in x.transitions():
        lines.append("trans %d %s %d" % (p, fmt(letter), q))
    return "\n".join(lines) + "\n"
