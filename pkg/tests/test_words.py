import itertools

import pytest

from repstab.categories import (
    OIdMorphism,
    compose_oid,
    enumerate_oid,
    identity_oid,
    oid_hom_count,
)
from repstab.errors import DecodeError, DomainError
from repstab.words import (
    PosetWitness,
    Word,
    antichain_filter,
    decode_word,
    divides,
    encode_word,
    higman_witness,
    is_subsequence,
    minimal_words,
    parse_word,
    random_word_stream,
)
from support import brute_divides, contains_subsequence


def w(text, d=None):
    return parse_word(text, d)


class TestEncoding:
    def test_worked_example(self):
        from repstab.categories import FIdMorphism

        phi = OIdMorphism(2, FIdMorphism.from_maps(2, 1, 3, (2,), {1: 1, 3: 2}).code)
        assert str(encode_word(phi)) == "1*2"

    def test_identity_is_all_stars(self):
        assert str(encode_word(identity_oid(3, 2))) == "***"

    def test_round_trip_exhaustive(self):
        for d in (1, 2):
            for n in range(4):
                for m in range(n, 7):
                    seen = set()
                    for phi in enumerate_oid(n, m, d):
                        word = encode_word(phi)
                        assert len(word) == m and word.stars() == n
                        assert decode_word(word, n) == phi
                        seen.add(word.letters)
                    # bijection onto all words of length m with n stars
                    assert len(seen) == oid_hom_count(n, m, d)

    def test_decode_examples(self):
        assert decode_word(w("*", 1), 1) == identity_oid(1, 1)
        phi = decode_word(w("1*2", 2), 1)
        assert phi.injection == (2,) and phi.coloring == {1: 1, 3: 2}
        with pytest.raises(DecodeError):
            decode_word(w("**", 1), 1)

    def test_parse_rejects_junk(self):
        from repstab.errors import FormatError

        with pytest.raises(FormatError):
            parse_word("1a*")


class TestSubsequence:
    def test_worked_examples(self):
        assert is_subsequence(w("1*2"), w("11*22")) == (1, 3, 4)
        assert is_subsequence(w("*1"), w("1*")) is None
        assert is_subsequence(w("", 1), w("11*")) == ()

    def test_agrees_with_two_pointer_oracle(self):
        alphabet = (0, 1, 2)
        for small in itertools.product(alphabet, repeat=3):
            for big in itertools.product(alphabet, repeat=5):
                got = is_subsequence(Word(small, 2), Word(big, 2))
                assert (got is not None) == contains_subsequence(small, big)
                if got is not None:
                    assert all(big[p - 1] == s for p, s in zip(got, small))
                    assert list(got) == sorted(set(got))


class TestDivides:
    def test_worked_example(self):
        phi = decode_word(w("1*", 1), 1)
        phi_prime = decode_word(w("11*", 1), 1)
        psi = divides(phi, phi_prime)
        assert psi.injection == (1, 3)
        assert psi.coloring == {2: 1}
        assert compose_oid(psi, phi) == phi_prime

    def test_self_gives_identity(self):
        phi = decode_word(w("12*", 2), 1)
        assert divides(phi, phi) == identity_oid(3, 2)

    def test_exhaustive_double_oracle(self):
        # subsequence criterion == brute-force psi search, n <= 2, m <= 5, d <= 2
        for d in (1, 2):
            for n in range(3):
                for m in range(n, 6):
                    for m2 in range(n, 6):
                        for phi in enumerate_oid(n, m, d):
                            for phi2 in enumerate_oid(n, m2, d):
                                fast = divides(phi, phi2)
                                slow = brute_divides(phi, phi2)
                                assert (fast is None) == (slow is None)
                                if fast is not None:
                                    assert compose_oid(fast, phi) == phi2

    def test_shape_mismatch(self):
        with pytest.raises(DomainError):
            divides(decode_word(w("*", 1), 1), decode_word(w("**", 1), 2))


class TestHigman:
    def test_prefix_chain(self):
        stream = [w("1"), w("11"), w("111")]
        report = higman_witness(stream)
        assert report.witness == PosetWitness(1, 2, (1,))

    def test_worked_example(self):
        report = higman_witness([w("12", 2), w("21", 2), w("2211", 2)])
        assert (report.witness.index_low, report.witness.index_high) == (2, 3)

    def test_finite_antichain(self):
        report = higman_witness([w("12", 2), w("21", 2)])
        assert report.witness is None
        assert report.is_antichain_so_far
        assert report.scanned == 2

    def test_random_streams_terminate(self):
        for seed in range(50):
            report = higman_witness(random_word_stream(seed, 2, 8), max_scan=5000)
            assert report.witness is not None
            i, j = report.witness.index_low, report.witness.index_high
            assert i < j <= report.scanned


class TestMinimalWords:
    def test_worked_examples(self):
        assert minimal_words([w("*"), w("1*"), w("11*")]) == {w("*")}
        antichain = {w("12", 2), w("21", 2)}
        assert minimal_words(antichain) == antichain
        assert minimal_words([]) == set()

    def test_output_is_dominating_antichain(self):
        pool = [w(t, 2) for t in ("1*", "11*", "*2", "2*2", "121", "21")]
        out = minimal_words(pool)
        for a in out:
            for b in out:
                assert a == b or is_subsequence(a, b) is None
        for v in pool:
            assert any(is_subsequence(u, v) is not None for u in out)


class TestAntichainFilter:
    def test_words_under_subsequence(self):
        items = [w("1"), w("11"), w("2", 2)]
        kept, comparable = antichain_filter(
            items, lambda a, b: is_subsequence(a, b) is not None
        )
        assert kept == [0, 2]
        assert (0, 1) in comparable
