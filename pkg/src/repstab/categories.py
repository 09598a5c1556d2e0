"""Composition engines and exhaustive hom enumeration for four categories.

The categories (all skeletal, objects are sizes / size pairs):

* colored injections: an arrow [n] -> [m] is an injection f together with a
  color in 1..d on every point of [m] outside the image;
* ordered colored injections: same data with f strictly increasing;
* the Veronese category on r variables: objects (d, m), arrows the triples
  (alpha1, alpha2, alpha3) of an order-preserving injection plus multi-index
  decorations;
* the block-matching category: an injection plus a partition of the
  complement into blocks of a fixed size.

Colored injections are stored in a compact decorated-word form: a morphism
[n] -> [m] with d colors is a length-m tuple ``code`` where

    code[i] = c       (1 <= c <= d)  position i+1 carries color c,
    code[i] = d + j   (1 <= j <= n)  position i+1 is the image of source j.

Composition is then a single gather pass over the outer code, which also
makes the adopted color rule explicit: colors of the outer arrow survive on
its own complement, colors of the inner arrow are transported along the
outer injection.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb, factorial, perm

from .errors import CompositionError, DomainError


class FIdMorphism:
    """A colored injection [src] -> [tgt] with colors in 1..d."""

    __slots__ = ("d", "code", "src", "_hash")

    def __init__(self, d: int, code: tuple[int, ...]):
        if d < 1:
            raise DomainError(f"color count must be >= 1, got {d}")
        src = 0
        seen = 0
        for c in code:
            if c > d:
                src += 1
                seen |= 1 << (c - d)
            elif c < 1:
                raise DomainError("code entries must be positive")
        if seen != (1 << (src + 1)) - 2:
            labels = sorted(c - d for c in code if c > d)
            raise DomainError(f"source labels {labels} are not exactly 1..{src}")
        self.d = d
        self.code = code if type(code) is tuple else tuple(code)
        self.src = src
        self._hash = hash((d, self.code))

    @classmethod
    def from_maps(cls, d: int, src: int, tgt: int, injection, coloring) -> "FIdMorphism":
        """Build from an injection tuple and a complement coloring mapping."""
        injection = tuple(injection)
        coloring = dict(coloring)
        if len(injection) != src:
            raise DomainError(f"injection has length {len(injection)}, expected {src}")
        if len(set(injection)) != src or any(not 1 <= v <= tgt for v in injection):
            raise DomainError(f"injection {injection} is not an injection into [{tgt}]")
        complement = set(range(1, tgt + 1)) - set(injection)
        if set(coloring) != complement:
            raise DomainError(
                f"coloring domain {sorted(coloring)} != complement {sorted(complement)}"
            )
        if any(not 1 <= c <= d for c in coloring.values()):
            raise DomainError(f"colors must lie in 1..{d}")
        code = [0] * tgt
        for j, v in enumerate(injection, start=1):
            code[v - 1] = d + j
        for pos, c in coloring.items():
            code[pos - 1] = c
        return cls(d, tuple(code))

    @property
    def tgt(self) -> int:
        return len(self.code)

    @property
    def injection(self) -> tuple[int, ...]:
        f = [0] * self.src
        for i, c in enumerate(self.code):
            if c > self.d:
                f[c - self.d - 1] = i + 1
        return tuple(f)

    @property
    def coloring(self) -> dict[int, int]:
        return {i + 1: c for i, c in enumerate(self.code) if c <= self.d}

    def is_ordered(self) -> bool:
        """True when the injection is strictly increasing."""
        labels = [c for c in self.code if c > self.d]
        return labels == sorted(labels)

    def word(self) -> tuple[int, ...]:
        """The length-tgt letter tuple with 0 for image positions."""
        return tuple(0 if c > self.d else c for c in self.code)

    def __eq__(self, other):
        return (
            isinstance(other, FIdMorphism)
            and self.d == other.d
            and self.code == other.code
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"{type(self).__name__}(d={self.d}, {self.src}->{self.tgt}, f={self.injection}, g={self.coloring})"


class OIdMorphism(FIdMorphism):
    """A colored injection whose injection is strictly increasing."""

    __slots__ = ()

    def __init__(self, d: int, code: tuple[int, ...]):
        super().__init__(d, code)
        if not self.is_ordered():
            raise DomainError(f"injection {self.injection} is not order-preserving")


def identity_fid(n: int, d: int) -> FIdMorphism:
    return FIdMorphism(d, tuple(d + j for j in range(1, n + 1)))


def identity_oid(n: int, d: int) -> OIdMorphism:
    return OIdMorphism(d, tuple(d + j for j in range(1, n + 1)))


def _compose_code(second: FIdMorphism, first: FIdMorphism) -> tuple[int, ...]:
    if second.d != first.d:
        raise CompositionError(
            f"composition domain mismatch: color counts {first.d} != {second.d}"
        )
    if first.tgt != second.src:
        raise CompositionError(
            f"composition domain mismatch: inner target [{first.tgt}] != outer source [{second.src}]"
        )
    d = first.d
    inner = first.code
    return tuple([c if c <= d else inner[c - d - 1] for c in second.code])


def compose_fid(second: FIdMorphism, first: FIdMorphism) -> FIdMorphism:
    """second after first; outer colors kept, inner colors transported."""
    return FIdMorphism(first.d, _compose_code(second, first))


def compose_oid(second: OIdMorphism, first: OIdMorphism) -> OIdMorphism:
    """second after first; order-preserving arrows compose to the same."""
    return OIdMorphism(first.d, _compose_code(second, first))


def enumerate_fid(src: int, tgt: int, d: int) -> list[FIdMorphism]:
    """All colored injections [src] -> [tgt], lexicographic in (f, colors)."""
    out = []
    for f in itertools.permutations(range(1, tgt + 1), src):
        complement = sorted(set(range(1, tgt + 1)) - set(f))
        for colors in itertools.product(range(1, d + 1), repeat=len(complement)):
            out.append(FIdMorphism.from_maps(d, src, tgt, f, dict(zip(complement, colors))))
    return out


def enumerate_oid(src: int, tgt: int, d: int) -> list[OIdMorphism]:
    """All ordered colored injections [src] -> [tgt], lexicographic order."""
    out = []
    for f in itertools.combinations(range(1, tgt + 1), src):
        complement = sorted(set(range(1, tgt + 1)) - set(f))
        for colors in itertools.product(range(1, d + 1), repeat=len(complement)):
            code = [0] * tgt
            for j, v in enumerate(f, start=1):
                code[v - 1] = d + j
            for pos, c in zip(complement, colors):
                code[pos - 1] = c
            out.append(OIdMorphism(d, tuple(code)))
    return out


def fid_hom_count(src: int, tgt: int, d: int) -> int:
    """Closed form m!/(m-n)! * d^(m-n)."""
    if src > tgt:
        return 0
    return perm(tgt, src) * d ** (tgt - src)


def oid_hom_count(src: int, tgt: int, d: int) -> int:
    """Closed form C(m,n) * d^(m-n)."""
    if src > tgt:
        return 0
    return comb(tgt, src) * d ** (tgt - src)


@dataclass(frozen=True)
class Permutation:
    """A bijection of [n], images[i-1] = sigma(i)."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise DomainError(f"{self.images} is not a bijection of [{len(self.images)}]")

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(1, n + 1)))


def decompose_fid_morphism(phi: FIdMorphism) -> tuple[Permutation, OIdMorphism]:
    """Split phi into the unique (sigma, psi) with psi ordered, f = psi.f o sigma^{-1}.

    sigma is the permutation of the source making f o sigma increasing, so
    psi carries the sorted injection and the unchanged coloring.
    """
    f = phi.injection
    order = sorted(range(1, phi.src + 1), key=lambda j: f[j - 1])
    sigma = Permutation(tuple(order))
    code = []
    label = 0
    for c in phi.code:
        if c > phi.d:
            label += 1
            code.append(phi.d + label)
        else:
            code.append(c)
    return sigma, OIdMorphism(phi.d, tuple(code))


def recompose_fid_morphism(sigma: Permutation, psi: OIdMorphism) -> FIdMorphism:
    """Inverse of decompose_fid_morphism."""
    if sigma.size != psi.src:
        raise DomainError(f"permutation size {sigma.size} != source size {psi.src}")
    code = tuple(
        c if c <= psi.d else psi.d + sigma(c - psi.d) for c in psi.code
    )
    return FIdMorphism(psi.d, code)


# ---------------------------------------------------------------------------
# Veronese category


@dataclass(frozen=True)
class MultiIndex:
    """An exponent vector in r non-negative parts; degree is the sum."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p < 0 for p in self.parts):
            raise DomainError(f"multi-index parts must be non-negative: {self.parts}")

    @property
    def r(self) -> int:
        return len(self.parts)

    @property
    def degree(self) -> int:
        return sum(self.parts)

    def __add__(self, other: "MultiIndex") -> "MultiIndex":
        if len(self.parts) != len(other.parts):
            raise DomainError("multi-index length mismatch")
        return MultiIndex(tuple(a + b for a, b in zip(self.parts, other.parts)))

    def __repr__(self):
        return f"MultiIndex{self.parts}"


def multi_indices(r: int, degree: int) -> list[MultiIndex]:
    """All multi-indices of the given degree, ascending lexicographic."""
    if r < 1:
        raise DomainError("need at least one part")
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(MultiIndex(prefix + (remaining,)))
            return
        for v in range(remaining + 1):
            rec(prefix + (v,), remaining - v, slots - 1)

    rec((), degree, r)
    return out


def multi_index_count(r: int, degree: int) -> int:
    return comb(degree + r - 1, r - 1)


@dataclass(frozen=True)
class VeroneseMorphism:
    """An arrow (d, m) -> (e, n) of the Veronese category on r variables.

    alpha1 is a strictly increasing injection [m] -> [n]; alpha2 assigns a
    degree-e multi-index to every target position outside the image (values
    listed in ascending position order); alpha3 assigns a degree-(e-d)
    multi-index to every source position.
    """

    r: int
    src: tuple[int, int]
    tgt: tuple[int, int]
    alpha1: tuple[int, ...]
    alpha2: tuple[MultiIndex, ...]
    alpha3: tuple[MultiIndex, ...]

    def __post_init__(self):
        d, m = self.src
        e, n = self.tgt
        if d > e or m > n:
            raise DomainError(f"no Veronese arrows ({d},{m}) -> ({e},{n})")
        if len(self.alpha1) != m or list(self.alpha1) != sorted(set(self.alpha1)):
            raise DomainError(f"alpha1 {self.alpha1} is not an increasing injection")
        if self.alpha1 and not (1 <= self.alpha1[0] and self.alpha1[-1] <= n):
            raise DomainError(f"alpha1 {self.alpha1} out of range 1..{n}")
        if len(self.alpha2) != n - m:
            raise DomainError(f"alpha2 must decorate the {n - m} complement positions")
        if any(v.r != self.r or v.degree != e for v in self.alpha2):
            raise DomainError(f"alpha2 values must have degree {e} in {self.r} parts")
        if len(self.alpha3) != m or any(v.r != self.r or v.degree != e - d for v in self.alpha3):
            raise DomainError(f"alpha3 values must have degree {e - d} in {self.r} parts")

    def complement(self) -> tuple[int, ...]:
        _, n = self.tgt
        return tuple(sorted(set(range(1, n + 1)) - set(self.alpha1)))

    def alpha2_map(self) -> dict[int, MultiIndex]:
        return dict(zip(self.complement(), self.alpha2))


def identity_veronese(r: int, d: int, m: int) -> VeroneseMorphism:
    zero = MultiIndex((0,) * r)
    return VeroneseMorphism(r, (d, m), (d, m), tuple(range(1, m + 1)), (), (zero,) * m)


def compose_veronese(second: VeroneseMorphism, first: VeroneseMorphism) -> VeroneseMorphism:
    """second after first, by the three displayed rules of the category."""
    if first.r != second.r:
        raise CompositionError(
            f"composition domain mismatch: variable counts {first.r} != {second.r}"
        )
    if first.tgt != second.src:
        raise CompositionError(
            f"composition domain mismatch: inner target {first.tgt} != outer source {second.src}"
        )
    alpha, beta = first, second
    d, m = alpha.src
    f, p = beta.tgt
    gamma1 = tuple(beta.alpha1[i - 1] for i in alpha.alpha1)
    beta2 = beta.alpha2_map()
    beta1_inv = {v: i for i, v in enumerate(beta.alpha1, start=1)}
    alpha2 = alpha.alpha2_map()
    gamma2 = []
    for i in sorted(set(range(1, p + 1)) - set(gamma1)):
        if i in beta2:
            gamma2.append(beta2[i])
        else:
            i_prime = beta1_inv[i]
            gamma2.append(alpha2[i_prime] + beta.alpha3[i_prime - 1])
    gamma3 = tuple(
        alpha.alpha3[i - 1] + beta.alpha3[alpha.alpha1[i - 1] - 1] for i in range(1, m + 1)
    )
    return VeroneseMorphism(alpha.r, (d, m), (f, p), gamma1, tuple(gamma2), gamma3)


def enumerate_veronese(src: tuple[int, int], tgt: tuple[int, int], r: int) -> list[VeroneseMorphism]:
    """All arrows src -> tgt, lexicographic in (alpha1, alpha2, alpha3)."""
    d, m = src
    e, n = tgt
    if d > e or m > n:
        return []
    deco = multi_indices(r, e)
    fill = multi_indices(r, e - d)
    out = []
    for a1 in itertools.combinations(range(1, n + 1), m):
        for a2 in itertools.product(deco, repeat=n - m):
            for a3 in itertools.product(fill, repeat=m):
                out.append(VeroneseMorphism(r, src, tgt, a1, a2, a3))
    return out


def veronese_hom_count(src: tuple[int, int], tgt: tuple[int, int], r: int) -> int:
    """Closed form C(n,m) * N_e^(n-m) * N_(e-d)^m with N_k = C(k+r-1, r-1)."""
    d, m = src
    e, n = tgt
    if d > e or m > n:
        return 0
    return comb(n, m) * multi_index_count(r, e) ** (n - m) * multi_index_count(r, e - d) ** m


def veronese_action(alpha: VeroneseMorphism, factors: list):
    """Apply alpha to a tensor of polynomials in x_1..x_r.

    Sends f_1 (x) ... (x) f_m to g_1 (x) ... (x) g_n with
    g_{alpha1(j)} = f_j * x^{alpha3(j)} and g_i = x^{alpha2(i)} off the image.
    """
    from .polynomials import SparsePoly

    d, m = alpha.src
    _, n = alpha.tgt
    if len(factors) != m:
        raise DomainError(f"expected {m} tensor factors, got {len(factors)}")
    variables = factors[0].variables if factors else tuple(f"x{i}" for i in range(1, alpha.r + 1))
    out: list = [None] * n
    for j, i in enumerate(alpha.alpha1, start=1):
        out[i - 1] = factors[j - 1] * SparsePoly.monomial(variables, alpha.alpha3[j - 1].parts)
    for i, c in alpha.alpha2_map().items():
        out[i - 1] = SparsePoly.monomial(variables, c.parts)
    return out


# ---------------------------------------------------------------------------
# Block-matching category


class MatchingMorphism:
    """An injection [src] -> [tgt] plus a partition of the complement into
    blocks of size d."""

    __slots__ = ("d", "tgt", "injection", "blocks", "_hash")

    def __init__(self, d: int, tgt: int, injection, blocks):
        if d < 1:
            raise DomainError(f"block size must be >= 1, got {d}")
        injection = tuple(injection)
        blocks = tuple(sorted(tuple(sorted(b)) for b in blocks))
        src = len(injection)
        if len(set(injection)) != src or any(not 1 <= v <= tgt for v in injection):
            raise DomainError(f"injection {injection} is not an injection into [{tgt}]")
        covered = [v for b in blocks for v in b]
        complement = sorted(set(range(1, tgt + 1)) - set(injection))
        if any(len(b) != d for b in blocks):
            raise DomainError(f"every block must have exactly {d} elements")
        if sorted(covered) != complement or len(set(covered)) != len(covered):
            raise DomainError(
                f"blocks {blocks} do not partition the complement {complement}"
            )
        self.d = d
        self.tgt = tgt
        self.injection = injection
        self.blocks = blocks
        self._hash = hash((d, tgt, injection, blocks))

    @property
    def src(self) -> int:
        return len(self.injection)

    def is_ordered(self) -> bool:
        return list(self.injection) == sorted(self.injection)

    def __eq__(self, other):
        return (
            isinstance(other, MatchingMorphism)
            and self.d == other.d
            and self.tgt == other.tgt
            and self.injection == other.injection
            and self.blocks == other.blocks
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return (
            f"MatchingMorphism(d={self.d}, {self.src}->{self.tgt}, "
            f"f={self.injection}, blocks={self.blocks})"
        )


def identity_matching(n: int, d: int) -> MatchingMorphism:
    return MatchingMorphism(d, n, tuple(range(1, n + 1)), ())


def compose_matching(second: MatchingMorphism, first: MatchingMorphism) -> MatchingMorphism:
    """second after first; inner blocks are pushed forward and unioned."""
    if second.d != first.d:
        raise CompositionError(
            f"composition domain mismatch: block sizes {first.d} != {second.d}"
        )
    if first.tgt != second.src:
        raise CompositionError(
            f"composition domain mismatch: inner target [{first.tgt}] != outer source [{second.src}]"
        )
    f2 = second.injection
    injection = tuple(f2[v - 1] for v in first.injection)
    pushed = tuple(tuple(f2[v - 1] for v in b) for b in first.blocks)
    return MatchingMorphism(first.d, second.tgt, injection, second.blocks + pushed)


def _block_partitions(elements: list[int], d: int):
    """All partitions of elements into blocks of size d, canonical order."""
    if not elements:
        yield ()
        return
    head, rest = elements[0], elements[1:]
    for others in itertools.combinations(rest, d - 1):
        block = (head,) + others
        remaining = [x for x in rest if x not in others]
        for tail in _block_partitions(remaining, d):
            yield (block,) + tail


def enumerate_matching(src: int, tgt: int, d: int) -> list[MatchingMorphism]:
    """All matching arrows [src] -> [tgt], lexicographic in (f, blocks)."""
    if src > tgt or (tgt - src) % d != 0:
        return []
    out = []
    for f in itertools.permutations(range(1, tgt + 1), src):
        complement = sorted(set(range(1, tgt + 1)) - set(f))
        for blocks in _block_partitions(complement, d):
            out.append(MatchingMorphism(d, tgt, f, blocks))
    return out


def matching_hom_count(src: int, tgt: int, d: int) -> int:
    """Injections times the number of block partitions of the complement."""
    if src > tgt or (tgt - src) % d != 0:
        return 0
    k = tgt - src
    partitions = factorial(k) // (factorial(d) ** (k // d) * factorial(k // d))
    return perm(tgt, src) * partitions


def ordered_matching_divides(
    phi: MatchingMorphism, phi_prime: MatchingMorphism
) -> MatchingMorphism | None:
    """Brute-force search for an order-preserving psi with psi o phi = phi'.

    Both arrows must share the source size and block size; returns the first
    such psi in canonical enumeration order, or None.
    """
    if phi.d != phi_prime.d:
        raise DomainError(f"block sizes differ: {phi.d} != {phi_prime.d}")
    if phi.src != phi_prime.src:
        raise DomainError(f"source sizes differ: {phi.src} != {phi_prime.src}")
    if phi_prime.tgt < phi.tgt or (phi_prime.tgt - phi.tgt) % phi.d != 0:
        return None
    for psi in enumerate_matching(phi.tgt, phi_prime.tgt, phi.d):
        if psi.is_ordered() and compose_matching(psi, phi) == phi_prime:
            return psi
    return None


# ---------------------------------------------------------------------------
# Uniform dispatch


def enumerate_hom(cat: str, src, tgt, *, d: int | None = None, r: int | None = None) -> list:
    """Enumerate hom(src, tgt) for cat in {"FI", "OI", "V", "M"}.

    FI/OI/M take integer objects and the color/block count d; V takes (d, m)
    pairs and the variable count r. Morphisms come back in the canonical
    (lexicographic-on-serialization) order; the list is empty when no
    morphism exists.
    """
    if cat in ("FI", "OI", "M"):
        if d is None:
            raise DomainError(f"category {cat} needs a color count d")
        if src > tgt:
            return []
        if cat == "FI":
            return enumerate_fid(src, tgt, d)
        if cat == "OI":
            return enumerate_oid(src, tgt, d)
        return enumerate_matching(src, tgt, d)
    if cat == "V":
        if r is None:
            raise DomainError("category V needs the variable count r")
        return enumerate_veronese(tuple(src), tuple(tgt), r)
    raise DomainError(f"unknown category tag {cat!r}")
