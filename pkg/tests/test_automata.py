import itertools

import pytest

from repstab.automata import (
    DFA,
    count_by_length,
    product_dfa,
    standard_word_automaton,
    star_counter_dfa,
    subsequence_nfa,
    upward_closure_automaton,
)
from repstab.categories import oid_hom_count
from repstab.errors import DomainError
from repstab.modules import MonomialSubmodule
from repstab.words import parse_word
from support import brute_standard_counts, contains_subsequence

FIXTURES = [
    (1, 1, []),
    (1, 1, ["1*"]),
    (1, 1, ["*"]),
    (1, 1, ["11*", "*11"]),
    (2, 1, ["1*1*"]),
    (1, 2, ["12*"]),
    (2, 2, ["1*2*", "*12*"]),
    (3, 1, ["1*1*1*"]),
]


def submodule(n, d, words):
    return MonomialSubmodule.from_words(n, d, words)


class TestStandardAutomaton:
    @pytest.mark.parametrize("n,d,gens", FIXTURES)
    def test_counts_match_brute_force(self, n, d, gens):
        dfa = standard_word_automaton(submodule(n, d, gens))
        max_len = 10 if d == 1 else 8
        expected = brute_standard_counts(
            n, d, [parse_word(g, d).letters for g in gens], max_len
        )
        assert dfa.count_by_length(max_len) == expected

    def test_star_then_ones_fixture(self):
        dfa = standard_word_automaton(submodule(1, 1, ["1*"]))
        assert dfa.count_by_length(12) == [0] + [1] * 12

    def test_no_generators_counts_m(self):
        dfa = standard_word_automaton(submodule(1, 1, []))
        assert dfa.count_by_length(12) == list(range(13))

    def test_star_generator_empty_language(self):
        dfa = standard_word_automaton(submodule(1, 1, ["*"]))
        assert dfa.count_by_length(10) == [0] * 11

    @pytest.mark.parametrize("n,d,gens", FIXTURES)
    def test_complementation(self, n, d, gens):
        sub = submodule(n, d, gens)
        std = standard_word_automaton(sub).count_by_length(10)
        up = upward_closure_automaton(sub).count_by_length(10)
        for m in range(11):
            assert std[m] + up[m] == oid_hom_count(n, m, d)

    @pytest.mark.parametrize("n,d,gens", FIXTURES)
    def test_minimization_preserves_language(self, n, d, gens):
        sub = submodule(n, d, gens)
        raw = standard_word_automaton(sub, minimized=False)
        mini = standard_word_automaton(sub, minimized=True)
        assert mini.n_states <= raw.n_states
        assert mini.count_by_length(10) == raw.count_by_length(10)

    def test_state_counts_reported(self):
        dfa = standard_word_automaton(submodule(1, 1, ["1*"]))
        assert dfa.n_states == 3


class TestCountByLength:
    def test_all_words_powers_of_two(self):
        dfa = DFA(alphabet=(0, 1), transitions=((0, 0),), start=0, accepting=frozenset([0]))
        assert count_by_length(dfa, 6) == [1, 2, 4, 8, 16, 32, 64]

    def test_empty_language(self):
        dfa = DFA(alphabet=(0, 1), transitions=((0, 0),), start=0, accepting=frozenset())
        assert count_by_length(dfa, 4) == [0] * 5


class TestBuildingBlocks:
    def test_subsequence_nfa_determinize(self):
        word = parse_word("1*2", 2)
        dfa = subsequence_nfa(word, (0, 1, 2)).determinize()
        for probe in itertools.product((0, 1, 2), repeat=5):
            assert dfa.accepts(probe) == contains_subsequence(word.letters, probe)

    def test_star_counter(self):
        dfa = star_counter_dfa(2, (0, 1))
        assert dfa.accepts((0, 1, 0))
        assert not dfa.accepts((0, 0, 0))
        assert not dfa.accepts((1, 1))

    def test_product_requires_shared_alphabet(self):
        a = star_counter_dfa(1, (0, 1))
        b = star_counter_dfa(1, (0, 1, 2))
        with pytest.raises(DomainError):
            product_dfa([a, b], lambda flags: all(flags))

    def test_dfa_validation(self):
        with pytest.raises(DomainError):
            DFA(alphabet=(0, 1), transitions=((0,),), start=0, accepting=frozenset())
        with pytest.raises(DomainError):
            DFA(alphabet=(0,), transitions=((0,),), start=2, accepting=frozenset())
