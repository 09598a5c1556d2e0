"""Monomial submodules of principal projectives over ordered colored injections.

Elements are finite formal sums of arrows [n] -> [m] with exact rational
coefficients. The built-in admissible order compares the word encodings
first by length and then lexicographically with the star below every color;
division steps always pick the leftmost embedding, so remainders are
deterministic for a fixed generator list.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from . import linalg
from .categories import FIdMorphism, OIdMorphism, compose_fid, compose_oid, enumerate_fid, enumerate_oid
from .errors import DomainError
from .words import Word, divides, encode_word, minimal_words


@dataclass(frozen=True)
class TermOrder:
    """Degree-then-lex on word encodings, star below all colors.

    Total on every hom-set and a well-order on the union over all targets,
    which is what makes division terminate.
    """

    def key(self, phi: FIdMorphism) -> tuple:
        return (phi.tgt, phi.word())

    def less(self, a: FIdMorphism, b: FIdMorphism) -> bool:
        return self.key(a) < self.key(b)


DEGLEX = TermOrder()


class ModuleElement:
    """A formal rational combination of arrows sharing (source size, colors)."""

    __slots__ = ("src", "d", "terms")

    def __init__(self, src: int, d: int, terms: dict | None = None):
        self.src = src
        self.d = d
        clean: dict[FIdMorphism, Fraction] = {}
        for phi, coeff in (terms or {}).items():
            if not isinstance(phi, FIdMorphism):
                raise DomainError(f"module element keys must be arrows, got {type(phi)}")
            if phi.src != src or phi.d != d:
                raise DomainError(
                    f"arrow {phi!r} does not match element shape (src={src}, d={d})"
                )
            coeff = Fraction(coeff)
            if coeff:
                clean[phi] = coeff
        self.terms = clean

    @classmethod
    def basis(cls, phi: FIdMorphism) -> "ModuleElement":
        return cls(phi.src, phi.d, {phi: Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Common target size of all terms; undefined on mixed elements."""
        sizes = {phi.tgt for phi in self.terms}
        if len(sizes) != 1:
            raise DomainError(f"element is not homogeneous: target sizes {sorted(sizes)}")
        return sizes.pop()

    def is_homogeneous(self) -> bool:
        return len({phi.tgt for phi in self.terms}) <= 1

    def lead_term(self, order: TermOrder = DEGLEX) -> tuple[FIdMorphism, Fraction]:
        if not self.terms:
            raise DomainError("the zero element has no lead term")
        phi = max(self.terms, key=order.key)
        return phi, self.terms[phi]

    def _combine(self, other: "ModuleElement", sign: int) -> "ModuleElement":
        if (self.src, self.d) != (other.src, other.d):
            raise DomainError("element shapes differ")
        terms = dict(self.terms)
        for phi, coeff in other.terms.items():
            terms[phi] = terms.get(phi, Fraction(0)) + sign * coeff
        return ModuleElement(self.src, self.d, terms)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def scale(self, scalar) -> "ModuleElement":
        scalar = Fraction(scalar)
        return ModuleElement(self.src, self.d, {p: scalar * c for p, c in self.terms.items()})

    def sorted_terms(self, order: TermOrder = DEGLEX) -> list[tuple[FIdMorphism, Fraction]]:
        return sorted(self.terms.items(), key=lambda item: order.key(item[0]), reverse=True)

    def __eq__(self, other):
        return (
            isinstance(other, ModuleElement)
            and (self.src, self.d) == (other.src, other.d)
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.src, self.d, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for phi, coeff in self.sorted_terms():
            word = str(encode_word(phi)) if isinstance(phi, OIdMorphism) else repr(phi)
            mag = abs(coeff)
            piece = f"{mag}*{word}"
            if not parts:
                parts.append(piece if coeff > 0 else f"-{piece}")
            else:
                parts.append(("+ " if coeff > 0 else "- ") + piece)
        return " ".join(parts)

    def __repr__(self):
        return f"ModuleElement({self})"


def apply_morphism(psi: FIdMorphism, element: ModuleElement) -> ModuleElement:
    """Post-compose every term with psi; the element must live in degree psi.src."""
    compose = compose_oid if isinstance(psi, OIdMorphism) else compose_fid
    terms = {}
    for phi, coeff in element.terms.items():
        if phi.tgt != psi.src:
            raise DomainError(
                f"cannot apply [{psi.src}]->[{psi.tgt}] arrow to a degree-{phi.tgt} term"
            )
        terms[compose(psi, phi)] = coeff
    return ModuleElement(element.src, element.d, terms)


@dataclass(frozen=True)
class MonomialSubmodule:
    """Submodule of a principal projective generated by basis arrows."""

    src: int
    d: int
    generators: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "generators", frozenset(self.generators))
        for g in self.generators:
            if not isinstance(g, OIdMorphism):
                raise DomainError("monomial generators must be ordered arrows")
            if g.src != self.src or g.d != self.d:
                raise DomainError(f"generator {g!r} does not match (src={self.src}, d={self.d})")

    @classmethod
    def from_words(cls, src: int, d: int, words: Iterable[Word | str]) -> "MonomialSubmodule":
        from .words import decode_word, parse_word

        gens = []
        for w in words:
            if isinstance(w, str):
                w = parse_word(w, d)
            gens.append(decode_word(Word(w.letters, d), src))
        return cls(src, d, frozenset(gens))

    def generator_words(self) -> list[str]:
        return sorted(str(encode_word(g)) for g in self.generators)


def member(submodule: MonomialSubmodule, phi: OIdMorphism) -> tuple[bool, tuple[OIdMorphism, OIdMorphism] | None]:
    """Divisibility by some generator, with certificate (generator, psi)."""
    if phi.src != submodule.src or phi.d != submodule.d:
        raise DomainError(
            f"arrow shape ({phi.src}, {phi.d}) does not match submodule "
            f"({submodule.src}, {submodule.d})"
        )
    for g in sorted(submodule.generators, key=DEGLEX.key):
        psi = divides(g, phi)
        if psi is not None:
            return True, (g, psi)
    return False, None


def minimal_generators(submodule: MonomialSubmodule) -> MonomialSubmodule:
    """Replace the generator set by its order-minimal antichain."""
    words = {encode_word(g): g for g in submodule.generators}
    keep = minimal_words(words)
    return MonomialSubmodule(submodule.src, submodule.d, frozenset(words[w] for w in keep))


def reduce_element(
    v: ModuleElement,
    generators: list[ModuleElement],
    order: TermOrder = DEGLEX,
) -> tuple[ModuleElement, list[tuple[int, OIdMorphism, Fraction]]]:
    """Division of v by the generator list.

    Repeatedly cancels the lead term of the running element against the
    first generator whose lead term divides it (leftmost embedding), or moves
    it to the remainder. Returns (remainder, steps) where each step records
    (generator index, psi, coefficient) and

        v = sum(coeff * apply_morphism(psi, generators[i])) + remainder.
    """
    for i, g in enumerate(generators):
        if g.is_zero():
            raise DomainError(f"zero generator supplied at index {i}")
        if not g.is_homogeneous():
            raise DomainError(f"generator {i} is not homogeneous")
        if (g.src, g.d) != (v.src, v.d):
            raise DomainError("generator shape differs from the dividend")
    lead_of = [g.lead_term(order)[0] for g in generators]
    running = v
    remainder = ModuleElement(v.src, v.d)
    steps: list[tuple[int, OIdMorphism, Fraction]] = []
    while not running.is_zero():
        phi, coeff = running.lead_term(order)
        for i, g in enumerate(generators):
            psi = divides(lead_of[i], phi)
            if psi is not None:
                factor = coeff / g.terms[lead_of[i]]
                running = running - apply_morphism(psi, g).scale(factor)
                steps.append((i, psi, factor))
                break
        else:
            remainder = remainder + ModuleElement(v.src, v.d, {phi: coeff})
            running = running - ModuleElement(v.src, v.d, {phi: coeff})
    return remainder, steps


def _degree_basis(src: int, d: int, m: int, order: TermOrder) -> list[OIdMorphism]:
    """Hom([src], [m]) sorted descending so pivots are lead terms."""
    return sorted(enumerate_oid(src, m, d), key=order.key, reverse=True)


def initial_module_truncated(
    generators: list[ModuleElement],
    max_degree: int,
    order: TermOrder = DEGLEX,
) -> dict[int, set[OIdMorphism]]:
    """Lead terms of the generated submodule, degree by degree up to max_degree.

    For each target size m the submodule piece is the exact span of all
    morphism images of the generators, computed by rational row reduction
    over the descending-ordered hom basis; pivot columns are the lead terms.
    """
    if not generators:
        raise DomainError("need at least one generator")
    src = generators[0].src
    d = generators[0].d
    for g in generators:
        if g.is_zero():
            raise DomainError("zero generator supplied")
        if not g.is_homogeneous():
            raise DomainError("initial modules need homogeneous generators")
        if (g.src, g.d) != (src, d):
            raise DomainError("generators have mixed shapes")
    out: dict[int, set[OIdMorphism]] = {}
    for m in range(src, max_degree + 1):
        basis = _degree_basis(src, d, m, order)
        index = {phi: i for i, phi in enumerate(basis)}
        rows = []
        for g in generators:
            deg = g.degree()
            if deg > m:
                continue
            for psi in enumerate_oid(deg, m, d):
                image = apply_morphism(psi, g)
                row = [Fraction(0)] * len(basis)
                for phi, coeff in image.terms.items():
                    row[index[phi]] = coeff
                rows.append(row)
        _, pivots = linalg.rref(rows, len(basis))
        out[m] = {basis[c] for c in pivots}
    return out


@dataclass(frozen=True)
class ChainReport:
    """Outcome of feeding a generator stream through the truncated probe."""

    stable_from: int | None
    steps: int
    history: tuple[tuple[str, ...], ...]

    @property
    def stabilized(self) -> bool:
        return self.stable_from is not None


def chain_probe(
    stream: Iterable[ModuleElement],
    max_degree: int,
    order: TermOrder = DEGLEX,
) -> ChainReport:
    """Watch the minimal lead-term generators grow along an element stream.

    After each element the truncated initial module is recomputed and its
    minimal generating antichain recorded; the report gives the first index
    after which that data never changes again within the stream, or no index
    when the final step still moved ("no stabilization within budget").
    """
    gens: list[ModuleElement] = []
    history: list[tuple[str, ...]] = []
    for element in stream:
        gens.append(element)
        lead = initial_module_truncated(gens, max_degree, order)
        all_leads = {encode_word(phi) for part in lead.values() for phi in part}
        minimal = tuple(sorted(str(w) for w in minimal_words(all_leads)))
        history.append(minimal)
    stable_from = None
    for k in range(len(history)):
        if all(history[j] == history[k] for j in range(k, len(history))):
            stable_from = k + 1
            break
    if stable_from is not None and stable_from == len(history) and len(history) > 1:
        # the last element still changed the data: not yet stabilized
        stable_from = None
    return ChainReport(stable_from, len(history), tuple(history))


class PrincipalProjective:
    """The functor sending [m] to the free module on hom([n], [m]).

    Realized concretely: a degree is a basis list of arrows, transition maps
    act by post-composition, and quotients by monomial submodules drop the
    divisible basis arrows.
    """

    def __init__(self, src: int, d: int, ordered: bool = True, quotient_by: MonomialSubmodule | None = None):
        self.src = src
        self.d = d
        self.ordered = ordered
        self.quotient_by = quotient_by
        if quotient_by is not None and (quotient_by.src != src or quotient_by.d != d):
            raise DomainError("quotient submodule shape mismatch")

    def basis(self, m: int) -> list[FIdMorphism]:
        arrows = enumerate_oid(self.src, m, self.d) if self.ordered else enumerate_fid(self.src, m, self.d)
        if self.quotient_by is None:
            return list(arrows)
        return [phi for phi in arrows if not member(self.quotient_by, phi)[0]]

    def dim(self, m: int) -> int:
        return len(self.basis(m))

    def act(self, psi: FIdMorphism, element: ModuleElement) -> ModuleElement:
        return apply_morphism(psi, element)
