"""Finite automata for subsequence-closed languages of standard words.

The words of a monomial submodule form an upward-closed set under the
subsequence order, hence a regular language; the standard words (those of no
generator above them) are its complement inside the star-count slice. The
construction here is the classical product: one subsequence automaton per
generator, a saturating star counter, determinization, complementation
inside the star-count slice, and optional minimization.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import DomainError
from .modules import MonomialSubmodule
from .words import STAR, Word, encode_word


@dataclass(frozen=True)
class DFA:
    """Deterministic automaton over an integer alphabet.

    States are 0..n-1 with start 0 after canonicalization; transitions is a
    tuple of per-state tuples aligned with the alphabet tuple.
    """

    alphabet: tuple[int, ...]
    transitions: tuple[tuple[int, ...], ...]
    start: int
    accepting: frozenset

    def __post_init__(self):
        n = len(self.transitions)
        for row in self.transitions:
            if len(row) != len(self.alphabet) or any(not 0 <= s < n for s in row):
                raise DomainError("transition table is not total over the alphabet")
        if not 0 <= self.start < n or any(not 0 <= s < n for s in self.accepting):
            raise DomainError("start/accepting states out of range")

    @property
    def n_states(self) -> int:
        return len(self.transitions)

    def accepts(self, letters) -> bool:
        idx = {a: i for i, a in enumerate(self.alphabet)}
        state = self.start
        for letter in letters:
            state = self.transitions[state][idx[letter]]
        return state in self.accepting

    def count_by_length(self, max_len: int) -> list[int]:
        """Exact accepted-word counts for lengths 0..max_len."""
        ways = [0] * self.n_states
        ways[self.start] = 1
        counts = [sum(ways[s] for s in self.accepting)]
        for _ in range(max_len):
            nxt = [0] * self.n_states
            for s, w in enumerate(ways):
                if w:
                    for t in self.transitions[s]:
                        nxt[t] += w
            ways = nxt
            counts.append(sum(ways[s] for s in self.accepting))
        return counts

    def reachable(self) -> "DFA":
        order = [self.start]
        seen = {self.start}
        for s in order:
            for t in self.transitions[s]:
                if t not in seen:
                    seen.add(t)
                    order.append(t)
        remap = {s: i for i, s in enumerate(order)}
        return DFA(
            self.alphabet,
            tuple(tuple(remap[self.transitions[s][a]] for a in range(len(self.alphabet))) for s in order),
            0,
            frozenset(remap[s] for s in self.accepting if s in remap),
        )

    def minimize(self) -> "DFA":
        """Moore partition refinement, then canonical BFS numbering."""
        dfa = self.reachable()
        n = dfa.n_states
        block = [1 if s in dfa.accepting else 0 for s in range(n)]
        while True:
            signature = {}
            new_block = [0] * n
            for s in range(n):
                sig = (block[s],) + tuple(block[t] for t in dfa.transitions[s])
                if sig not in signature:
                    signature[sig] = len(signature)
                new_block[s] = signature[sig]
            if new_block == block:
                break
            block = new_block
        reps: dict[int, int] = {}
        order = []
        queue = deque([dfa.start])
        seen = {block[dfa.start]}
        while queue:
            s = queue.popleft()
            b = block[s]
            if b not in reps:
                reps[b] = len(order)
                order.append(s)
            for t in dfa.transitions[s]:
                if block[t] not in seen:
                    seen.add(block[t])
                    queue.append(t)
        transitions = tuple(
            tuple(reps[block[dfa.transitions[s][a]]] for a in range(len(dfa.alphabet)))
            for s in order
        )
        accepting = frozenset(reps[block[s]] for s in dfa.accepting)
        return DFA(dfa.alphabet, transitions, reps[block[dfa.start]], accepting)


@dataclass(frozen=True)
class NFA:
    """Nondeterministic automaton; transitions maps (state, letter) -> state set."""

    alphabet: tuple[int, ...]
    n_states: int
    transitions: dict
    start: int
    accepting: frozenset

    def determinize(self) -> DFA:
        """Subset construction with BFS-canonical state numbering."""
        start = frozenset([self.start])
        index = {start: 0}
        order = [start]
        table = []
        queue = deque([start])
        while queue:
            subset = queue.popleft()
            row = []
            for letter in self.alphabet:
                nxt = frozenset(
                    t for s in subset for t in self.transitions.get((s, letter), ())
                )
                if nxt not in index:
                    index[nxt] = len(order)
                    order.append(nxt)
                    queue.append(nxt)
                row.append(index[nxt])
            table.append(tuple(row))
        accepting = frozenset(
            i for subset, i in index.items() if subset & self.accepting
        )
        return DFA(self.alphabet, tuple(table), 0, accepting)


def subsequence_nfa(word: Word, alphabet: tuple[int, ...]) -> NFA:
    """Accepts exactly the words containing `word` as a subsequence."""
    letters = word.letters
    n = len(letters)
    transitions: dict = {}
    for s in range(n + 1):
        for a in alphabet:
            targets = {s}
            if s < n and letters[s] == a:
                targets.add(s + 1)
            transitions[(s, a)] = frozenset(targets)
    return NFA(alphabet, n + 1, transitions, 0, frozenset([n]))


def star_counter_dfa(n: int, alphabet: tuple[int, ...]) -> DFA:
    """Counts stars up to the saturating cap n+1; accepts exactly n stars."""
    cap = n + 1
    table = []
    for c in range(cap + 1):
        table.append(tuple(min(c + 1, cap) if a == STAR else c for a in alphabet))
    return DFA(alphabet, tuple(table), 0, frozenset([n]))


def product_dfa(parts: list[DFA], accept) -> DFA:
    """Reachable product; accept takes the per-part acceptance flags."""
    alphabet = parts[0].alphabet
    for p in parts:
        if p.alphabet != alphabet:
            raise DomainError("product requires a shared alphabet")
    start = tuple(p.start for p in parts)
    index = {start: 0}
    order = [start]
    table = []
    queue = deque([start])
    while queue:
        state = queue.popleft()
        row = []
        for a in range(len(alphabet)):
            nxt = tuple(p.transitions[s][a] for p, s in zip(parts, state))
            if nxt not in index:
                index[nxt] = len(order)
                order.append(nxt)
                queue.append(nxt)
            row.append(index[nxt])
        table.append(tuple(row))
    accepting = frozenset(
        i
        for state, i in index.items()
        if accept(tuple(s in p.accepting for p, s in zip(parts, state)))
    )
    return DFA(alphabet, tuple(table), 0, accepting)


def standard_word_automaton(submodule: MonomialSubmodule, minimized: bool = True) -> DFA:
    """DFA for the standard words of the submodule.

    Accepts the words with exactly src stars that contain no generator word
    as a subsequence.
    """
    alphabet = tuple(range(submodule.d + 1))
    parts = [star_counter_dfa(submodule.src, alphabet)]
    for g in sorted(submodule.generators, key=lambda g: (g.tgt, g.word())):
        parts.append(subsequence_nfa(encode_word(g), alphabet).determinize())
    dfa = product_dfa(parts, lambda flags: flags[0] and not any(flags[1:]))
    return dfa.minimize() if minimized else dfa.reachable()


def upward_closure_automaton(submodule: MonomialSubmodule, minimized: bool = True) -> DFA:
    """DFA for the words with src stars that DO lie above some generator."""
    alphabet = tuple(range(submodule.d + 1))
    parts = [star_counter_dfa(submodule.src, alphabet)]
    for g in sorted(submodule.generators, key=lambda g: (g.tgt, g.word())):
        parts.append(subsequence_nfa(encode_word(g), alphabet).determinize())
    dfa = product_dfa(parts, lambda flags: flags[0] and any(flags[1:]))
    return dfa.minimize() if minimized else dfa.reachable()


def count_by_length(dfa: DFA, max_len: int) -> list[int]:
    return dfa.count_by_length(max_len)
