"""The free twisted commutative algebra on d degree-one generators, in action.

A basis tensor of degree n is a color word [n] -> [d]. Acting on a module
element of degree m means post-composing every term with the arrow
[m] -> [n+m] that shifts by n and colors the first n points by the tensor.
The twisted commutativity law and the block equivariance of multiplication
are checked by explicit permutation pushing, not assumed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .categories import (
    FIdMorphism,
    Permutation,
    compose_fid,
    enumerate_fid,
)
from .errors import DomainError
from .modules import ModuleElement


@dataclass(frozen=True)
class TcaBasisElement:
    """A degree-n basis tensor, identified with a color word [n] -> [d]."""

    d: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if any(not 1 <= c <= self.d for c in self.colors):
            raise DomainError(f"colors {self.colors} out of range 1..{self.d}")

    @property
    def degree(self) -> int:
        return len(self.colors)

    def concat(self, other: "TcaBasisElement") -> "TcaBasisElement":
        """Multiplication in the free algebra: concatenation of tensors."""
        if self.d != other.d:
            raise DomainError(f"color counts differ: {self.d} != {other.d}")
        return TcaBasisElement(self.d, self.colors + other.colors)


def shift_morphism(a: TcaBasisElement, m: int) -> FIdMorphism:
    """The arrow [m] -> [a.degree + m] with f(i) = i + n, colored by a."""
    n = a.degree
    code = tuple(a.colors) + tuple(a.d + j for j in range(1, m + 1))
    return FIdMorphism(a.d, code)


def tca_action(a: TcaBasisElement, element: ModuleElement) -> ModuleElement:
    """Multiply a module element by a basis tensor; bilinear by construction."""
    if a.d != element.d:
        raise DomainError(f"color counts differ: {a.d} != {element.d}")
    terms = {}
    cache: dict[int, FIdMorphism] = {}
    for phi, coeff in element.terms.items():
        mu = cache.get(phi.tgt)
        if mu is None:
            mu = cache[phi.tgt] = shift_morphism(a, phi.tgt)
        key = compose_fid(mu, phi)
        terms[key] = terms.get(key, 0) + coeff
    return ModuleElement(element.src, element.d, terms)


def permute_colors(sigma: Permutation, colors: tuple[int, ...]) -> tuple[int, ...]:
    """The place-permutation action: position i receives colors[sigma^-1(i)]."""
    inv = sigma.inverse()
    return tuple(colors[inv(i) - 1] for i in range(1, len(colors) + 1))


def block_swap(n: int, m: int) -> Permutation:
    """The permutation of [n+m] exchanging the first n with the last m, in order."""
    images = tuple(m + i for i in range(1, n + 1)) + tuple(range(1, m + 1))
    return Permutation(images)


def check_twisted_commutativity(x: TcaBasisElement, y: TcaBasisElement) -> bool:
    """tau(xy) = yx for the block swap tau; always true in the free algebra."""
    if x.d != y.d:
        raise DomainError(f"color counts differ: {x.d} != {y.d}")
    tau = block_swap(x.degree, y.degree)
    return permute_colors(tau, x.concat(y).colors) == y.concat(x).colors


def block_embedding(sigma: Permutation, tau: Permutation) -> Permutation:
    """sigma x tau inside the symmetric group on the concatenated blocks."""
    n = sigma.size
    images = tuple(sigma(i) for i in range(1, n + 1)) + tuple(
        n + tau(j) for j in range(1, tau.size + 1)
    )
    return Permutation(images)


def equivariance_probe(n: int, m: int, d: int) -> bool:
    """Exhaustively check that multiplication intertwines the block actions."""
    perms_n = [Permutation(p) for p in itertools.permutations(range(1, n + 1))]
    perms_m = [Permutation(p) for p in itertools.permutations(range(1, m + 1))]
    words_n = itertools.product(range(1, d + 1), repeat=n)
    for xw in words_n:
        x = TcaBasisElement(d, xw)
        for yw in itertools.product(range(1, d + 1), repeat=m):
            y = TcaBasisElement(d, yw)
            for sigma in perms_n:
                sx = TcaBasisElement(d, permute_colors(sigma, x.colors))
                for tau in perms_m:
                    ty = TcaBasisElement(d, permute_colors(tau, y.colors))
                    combined = block_embedding(sigma, tau)
                    if sx.concat(ty).colors != permute_colors(combined, x.concat(y).colors):
                        return False
    return True


def postcomposition_orbits(n: int, m: int) -> int:
    """Orbits of plain injections [n] -> [m] under bijections of the target."""
    morphisms = enumerate_fid(n, m, 1)
    bijections = enumerate_fid(m, m, 1)
    remaining = set(morphisms)
    orbits = 0
    while remaining:
        seed = remaining.pop()
        orbits += 1
        stack = [seed]
        while stack:
            phi = stack.pop()
            for sigma in bijections:
                image = compose_fid(sigma, phi)
                if image in remaining:
                    remaining.remove(image)
                    stack.append(image)
    return orbits
