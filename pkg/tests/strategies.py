"""Shared hypothesis strategies for arrows, words, and module elements."""

from fractions import Fraction

from hypothesis import strategies as st

from repstab.categories import (
    FIdMorphism,
    MatchingMorphism,
    MultiIndex,
    OIdMorphism,
    VeroneseMorphism,
)
from repstab.modules import ModuleElement
from repstab.words import Word, decode_word


def _draw_arrow(draw, d, src, tgt, ordered):
    positions = sorted(draw(st.permutations(list(range(1, tgt + 1))))[:src])
    if not ordered:
        positions = draw(st.permutations(positions))
    code = [0] * tgt
    for j, pos in enumerate(positions, start=1):
        code[pos - 1] = d + j
    for i in range(tgt):
        if code[i] == 0:
            code[i] = draw(st.integers(1, d))
    cls = OIdMorphism if ordered else FIdMorphism
    return cls(d, tuple(code))


@st.composite
def fid_morphisms(draw, ordered=False, max_tgt=5):
    d = draw(st.integers(1, 3))
    tgt = draw(st.integers(0, max_tgt))
    src = draw(st.integers(0, tgt))
    return _draw_arrow(draw, d, src, tgt, ordered)


@st.composite
def fid_composable_triples(draw, ordered=False, max_tgt=12):
    d = draw(st.integers(1, 2))
    n = draw(st.integers(0, max_tgt))
    m = draw(st.integers(n, max_tgt))
    p = draw(st.integers(m, max_tgt))
    q = draw(st.integers(p, max_tgt))
    return (
        _draw_arrow(draw, d, n, m, ordered),
        _draw_arrow(draw, d, m, p, ordered),
        _draw_arrow(draw, d, p, q, ordered),
    )


def _draw_matching(draw, d, src, tgt):
    order = draw(st.permutations(list(range(1, tgt + 1))))
    injection = tuple(order[:src])
    rest = order[src:]
    blocks = tuple(
        tuple(sorted(rest[i * d : (i + 1) * d])) for i in range(len(rest) // d)
    )
    return MatchingMorphism(d, tgt, injection, blocks)


@st.composite
def matching_morphisms(draw):
    d = draw(st.integers(1, 3))
    src = draw(st.integers(0, 3))
    tgt = src + d * draw(st.integers(0, 2))
    return _draw_matching(draw, d, src, tgt)


@st.composite
def matching_composable_triples(draw, max_tgt=10):
    d = draw(st.integers(1, 3))
    n = draw(st.integers(0, 3))
    m = n + d * draw(st.integers(0, 2))
    p = m + d * draw(st.integers(0, 2))
    q = p + d * draw(st.integers(0, 2))
    if q > max_tgt:
        n, m, p, q = 0, d, 2 * d, 3 * d
    return (
        _draw_matching(draw, d, n, m),
        _draw_matching(draw, d, m, p),
        _draw_matching(draw, d, p, q),
    )


def _draw_multi(draw, r, degree):
    parts = []
    left = degree
    for _ in range(r - 1):
        v = draw(st.integers(0, left))
        parts.append(v)
        left -= v
    parts.append(left)
    return MultiIndex(tuple(parts))


def _draw_veronese(draw, r, src, tgt):
    d, m = src
    e, n = tgt
    alpha1 = tuple(sorted(draw(st.permutations(list(range(1, n + 1))))[:m]))
    alpha2 = tuple(_draw_multi(draw, r, e) for _ in range(n - m))
    alpha3 = tuple(_draw_multi(draw, r, e - d) for _ in range(m))
    return VeroneseMorphism(r, src, tgt, alpha1, alpha2, alpha3)


@st.composite
def veronese_morphisms(draw):
    r = draw(st.integers(1, 3))
    d = draw(st.integers(0, 2))
    e = draw(st.integers(d, 3))
    m = draw(st.integers(0, 2))
    n = draw(st.integers(m, 3))
    return _draw_veronese(draw, r, (d, m), (e, n))


@st.composite
def veronese_composable_triples(draw):
    r = draw(st.integers(1, 3))
    d1 = draw(st.integers(0, 2))
    d2 = draw(st.integers(d1, 3))
    d3 = draw(st.integers(d2, 4))
    d4 = draw(st.integers(d3, 5))
    m1 = draw(st.integers(0, 2))
    m2 = draw(st.integers(m1, 3))
    m3 = draw(st.integers(m2, 4))
    m4 = draw(st.integers(m3, 5))
    return (
        _draw_veronese(draw, r, (d1, m1), (d2, m2)),
        _draw_veronese(draw, r, (d2, m2), (d3, m3)),
        _draw_veronese(draw, r, (d3, m3), (d4, m4)),
    )


@st.composite
def module_elements(draw):
    d = draw(st.integers(1, 2))
    src = draw(st.integers(0, 2))
    n_terms = draw(st.integers(0, 4))
    terms = {}
    for _ in range(n_terms):
        tgt = draw(st.integers(src, src + 3))
        letters = [0] * src + [draw(st.integers(1, d)) for _ in range(tgt - src)]
        letters = draw(st.permutations(letters))
        phi = decode_word(Word(tuple(letters), d), src)
        num = draw(st.integers(-9, 9))
        den = draw(st.integers(1, 9))
        terms[phi] = terms.get(phi, Fraction(0)) + Fraction(num, den)
    return ModuleElement(src, d, {k: v for k, v in terms.items() if v})
