"""Words over {star, 1..d}, the subsequence order, and well-quasi-order probes.

An ordered colored injection [n] -> [m] is encoded as a length-m word whose
i-th letter is a star when i lies in the image and the color of i otherwise.
Divisibility of arrows (existence of psi with psi o phi = phi') is exactly
the subsequence order on these words, which is where Higman's lemma enters:
over a finite alphabet every infinite word sequence contains an increasing
comparable pair.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .categories import OIdMorphism, compose_oid
from .errors import DecodeError, DomainError, FormatError

STAR = 0


@dataclass(frozen=True)
class Word:
    """A finite word; letter 0 is the star, letters 1..d are colors."""

    letters: tuple[int, ...]
    d: int

    def __post_init__(self):
        if any(not 0 <= c <= self.d for c in self.letters):
            raise DomainError(f"letters {self.letters} out of alphabet 0..{self.d}")

    def __len__(self):
        return len(self.letters)

    def stars(self) -> int:
        return sum(1 for c in self.letters if c == STAR)

    def __str__(self):
        return "".join("*" if c == STAR else str(c) for c in self.letters)


def parse_word(text: str, d: int | None = None) -> Word:
    """Parse a word from its plain string form; '*' or the star glyph mark stars.

    When d is omitted it is inferred as the largest color present (at least 1).
    """
    letters = []
    for ch in text.strip():
        if ch in ("*", "★", "☆", "✰"):
            letters.append(STAR)
        elif ch.isdigit() and ch != "0":
            letters.append(int(ch))
        else:
            raise FormatError(f"bad word character {ch!r} in {text!r}")
    if d is None:
        d = max([c for c in letters if c != STAR], default=1)
    return Word(tuple(letters), d)


def encode_word(phi: OIdMorphism) -> Word:
    """Length-tgt word: star on image positions, color elsewhere."""
    return Word(phi.word(), phi.d)


def decode_word(w: Word, src: int) -> OIdMorphism:
    """Inverse of encode_word; the word must carry exactly src stars."""
    stars = w.stars()
    if stars != src:
        raise DecodeError(f"word {w} has {stars} stars, expected {src}")
    code = []
    label = 0
    for c in w.letters:
        if c == STAR:
            label += 1
            code.append(w.d + label)
        else:
            code.append(c)
    return OIdMorphism(w.d, tuple(code))


def is_subsequence(small: Word, big: Word) -> tuple[int, ...] | None:
    """Leftmost greedy embedding of small into big (1-based), or None."""
    embedding = []
    pos = 0
    for letter in small.letters:
        while pos < len(big.letters) and big.letters[pos] != letter:
            pos += 1
        if pos == len(big.letters):
            return None
        embedding.append(pos + 1)
        pos += 1
    return tuple(embedding)


def divides(phi: OIdMorphism, phi_prime: OIdMorphism) -> OIdMorphism | None:
    """The canonical psi with psi o phi = phi', or None when phi does not divide.

    psi is rebuilt from the leftmost embedding of the words: its injection is
    the embedding itself and its colors copy phi' outside the embedded image.
    """
    if phi.d != phi_prime.d:
        raise DomainError(f"color counts differ: {phi.d} != {phi_prime.d}")
    if phi.src != phi_prime.src:
        raise DomainError(f"source sizes differ: {phi.src} != {phi_prime.src}")
    embedding = is_subsequence(encode_word(phi), encode_word(phi_prime))
    if embedding is None:
        return None
    # positions of phi' outside the embedding keep their own colors; every
    # star of phi' lies inside the embedding because the star counts agree
    d = phi.d
    code = list(phi_prime.code)
    for j, pos in enumerate(embedding, start=1):
        code[pos - 1] = d + j
    psi = OIdMorphism(d, tuple(code))
    assert compose_oid(psi, phi) == phi_prime
    return psi


@dataclass(frozen=True)
class PosetWitness:
    """A comparable increasing pair in a word stream (1-based indices)."""

    index_low: int
    index_high: int
    embedding: tuple[int, ...]

    def __post_init__(self):
        if not self.index_low < self.index_high:
            raise DomainError("witness needs index_low < index_high")


@dataclass(frozen=True)
class HigmanReport:
    """Outcome of scanning a word stream for a comparable increasing pair."""

    witness: PosetWitness | None
    scanned: int

    @property
    def is_antichain_so_far(self) -> bool:
        return self.witness is None


def higman_witness(stream: Iterable[Word], max_scan: int | None = None) -> HigmanReport:
    """Scan a stream until some earlier word embeds into a later one.

    The scan order is j ascending then i ascending, so the witness has the
    least possible high index. Termination on a conceptually infinite stream
    is guaranteed because the subsequence order over a finite alphabet is a
    well-quasi-order; on exhausted finite input the report carries no witness
    ("antichain so far").
    """
    seen: list[Word] = []
    for j, w in enumerate(stream, start=1):
        for i, earlier in enumerate(seen, start=1):
            embedding = is_subsequence(earlier, w)
            if embedding is not None:
                return HigmanReport(PosetWitness(i, j, embedding), scanned=j)
        seen.append(w)
        if max_scan is not None and j >= max_scan:
            break
    return HigmanReport(None, scanned=len(seen))


def minimal_words(words: Iterable[Word]) -> set[Word]:
    """The order-minimal elements; every input lies above some output."""
    unique = set(words)
    return {
        w
        for w in unique
        if not any(v != w and is_subsequence(v, w) is not None for v in unique)
    }


def antichain_filter(items: list, leq: Callable) -> tuple[list[int], list[tuple[int, int]]]:
    """Greedy pairwise-incomparability filter over an arbitrary order.

    Returns (kept 0-based indices forming an antichain, comparable pairs
    (i, j) with i < j discovered among all input pairs, each tagged in scan
    order). leq(a, b) must report whether a <= b.
    """
    comparable: list[tuple[int, int]] = []
    partners: dict[int, set[int]] = {}
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if leq(items[i], items[j]) or leq(items[j], items[i]):
                comparable.append((i, j))
                partners.setdefault(i, set()).add(j)
                partners.setdefault(j, set()).add(i)
    blocked: set[int] = set()
    kept = []
    for i in range(len(items)):
        if i in blocked:
            continue
        kept.append(i)
        blocked |= partners.get(i, set())
    return kept, comparable


def random_word_stream(seed: int, d: int, max_len: int) -> Iterator[Word]:
    """Deterministic infinite stream of uniform words, lengths 0..max_len."""
    rng = random.Random(seed)
    while True:
        length = rng.randint(0, max_len)
        yield Word(tuple(rng.randint(0, d) for _ in range(length)), d)
