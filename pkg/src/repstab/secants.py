"""Degree-truncated joins, Veronese ideals, and secant ideals.

Ideals are held degree by degree as reduced row bases over the graded-lex
monomial basis, exact over the rationals. The join of two ideals in degree e
is the kernel of: apply the coproduct (x -> x' + x''), project every
bidegree factor onto quotient coordinates (the non-pivot columns of the
reduced bases), and read off the nullspace. Secants iterate the join.

All outputs are exact below their truncation degree and say nothing above
it; observed generation degrees are lower-bound certificates.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from . import linalg
from .errors import DomainError
from .polynomials import SparsePoly, exponents


def doubled_variables(variables) -> tuple[str, ...]:
    variables = tuple(variables)
    return tuple(f"{v}'" for v in variables) + tuple(f"{v}''" for v in variables)


def delta(p: SparsePoly) -> SparsePoly:
    """The coproduct: substitute every variable v by v' + v''."""
    doubled = doubled_variables(p.variables)
    images = {}
    for i, v in enumerate(p.variables):
        images[v] = SparsePoly.variable(doubled, doubled[i]) + SparsePoly.variable(
            doubled, doubled[i + len(p.variables)]
        )
    if not p.variables:
        raise DomainError("polynomial needs at least one variable")
    return p.substitute(images)


@dataclass(frozen=True)
class GradedIdealBasis:
    """Per-degree reduced bases of a homogeneous ideal, exact below truncation.

    per_degree[e] is a tuple of reduced rows over the descending graded-lex
    monomial basis of degree e; absent degrees are zero.
    """

    variables: tuple[str, ...]
    truncation: int
    per_degree: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for e, rows in self.per_degree.items():
            ncols = comb(e + len(self.variables) - 1, len(self.variables) - 1)
            reduced, _ = linalg.rref([list(r) for r in rows], ncols)
            if reduced:
                clean[e] = tuple(tuple(r) for r in reduced)
        object.__setattr__(self, "per_degree", clean)

    def dim(self, e: int) -> int:
        if e > self.truncation:
            raise DomainError(f"degree {e} is above the truncation {self.truncation}")
        return len(self.per_degree.get(e, ()))

    def rows(self, e: int) -> list[list[Fraction]]:
        return [list(r) for r in self.per_degree.get(e, ())]

    def basis_polys(self, e: int) -> list[SparsePoly]:
        monos = exponents(len(self.variables), e)
        out = []
        for row in self.per_degree.get(e, ()):
            out.append(SparsePoly(self.variables, dict(zip(monos, row))))
        return out

    def contains_per_degree(self, other: "GradedIdealBasis", up_to: int) -> bool:
        """Row-space containment other <= self in every degree <= up_to."""
        for e in range(up_to + 1):
            ncols = comb(e + len(self.variables) - 1, len(self.variables) - 1)
            reduced, pivots = linalg.rref(self.rows(e), ncols)
            for row in other.rows(e):
                if not linalg.in_row_space(row, reduced, pivots):
                    return False
        return True

    def check_closure(self) -> None:
        """Verify multiplication closure: x_i * I_(e-1) lies inside I_e."""
        n = len(self.variables)
        for e in range(2, self.truncation + 1):
            prev = self.rows(e - 1)
            if not prev:
                continue
            monos_lo = exponents(n, e - 1)
            monos_hi = exponents(n, e)
            index_hi = {m: i for i, m in enumerate(monos_hi)}
            ncols = len(monos_hi)
            reduced, pivots = linalg.rref(self.rows(e), ncols)
            for i in range(n):
                for row in prev:
                    lifted = [Fraction(0)] * ncols
                    for m, c in zip(monos_lo, row):
                        if c:
                            shifted = list(m)
                            shifted[i] += 1
                            lifted[index_hi[tuple(shifted)]] = c
                    if not linalg.in_row_space(lifted, reduced, pivots):
                        raise DomainError(
                            f"closure violated: x_{i + 1} * (degree {e - 1}) escapes degree {e}"
                        )


def ideal_from_generators(generators: list[SparsePoly], truncation: int) -> GradedIdealBasis:
    """The truncated ideal generated by homogeneous polynomials."""
    if not generators:
        raise DomainError("need at least one generator (the ambient is read off them)")
    variables = generators[0].variables
    for g in generators:
        if g.variables != variables:
            raise DomainError("generators live in different variable sets")
        if g.is_zero() or not g.is_homogeneous():
            raise DomainError("generators must be nonzero and homogeneous")
    n = len(variables)
    per_degree: dict[int, list[list[Fraction]]] = {}
    for e in range(1, truncation + 1):
        monos = exponents(n, e)
        index = {m: i for i, m in enumerate(monos)}
        rows = []
        for g in generators:
            k = e - g.total_degree()
            if k < 0:
                continue
            for shift in exponents(n, k):
                row = [Fraction(0)] * len(monos)
                for m, c in g.terms.items():
                    lifted = tuple(a + b for a, b in zip(m, shift))
                    row[index[lifted]] = c
                rows.append(row)
        if rows:
            per_degree[e] = rows
    return GradedIdealBasis(variables, truncation, per_degree)


def veronese_variables(r: int, d: int) -> tuple[tuple[str, ...], list[tuple[int, ...]]]:
    """Names and exponent labels for the degree-d monomial coordinates."""
    labels = exponents(r, d)
    if all(all(p <= 9 for p in c) for c in labels):
        names = tuple("z" + "".join(map(str, c)) for c in labels)
    else:
        names = tuple("z(" + ",".join(map(str, c)) + ")" for c in labels)
    return names, labels


def veronese_ideal_truncated(r: int, d: int, truncation: int) -> GradedIdealBasis:
    """Kernel of the substitution z_c -> x^c, degree by degree.

    Degree-e slice: exact nullspace of the evaluation matrix from the degree-e
    monomials in the z's to the degree e*d monomials in x_1..x_r.
    """
    if r < 1 or d < 1 or truncation < 1:
        raise DomainError("need r >= 1, d >= 1, truncation >= 1")
    names, labels = veronese_variables(r, d)
    per_degree = {}
    for e in range(1, truncation + 1):
        cols = exponents(len(names), e)
        target = exponents(r, e * d)
        target_index = {m: i for i, m in enumerate(target)}
        matrix = [[Fraction(0)] * len(cols) for _ in range(len(target))]
        for j, col in enumerate(cols):
            image = tuple(
                sum(col[k] * labels[k][i] for k in range(len(labels))) for i in range(r)
            )
            matrix[target_index[image]][j] = Fraction(1)
        kernel = linalg.nullspace(matrix, len(cols))
        if kernel:
            per_degree[e] = kernel
    return GradedIdealBasis(names, truncation, per_degree)


def _quotient_classes(ideal: GradedIdealBasis, e: int) -> tuple[list[int], list[dict]]:
    """Free columns of degree e and, per monomial, its class as {slot: coeff}."""
    n = len(ideal.variables)
    ncols = comb(e + n - 1, n - 1)
    reduced, pivots = linalg.rref(ideal.rows(e), ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    slot = {c: i for i, c in enumerate(free)}
    classes = []
    for t in range(ncols):
        unit = [Fraction(0)] * ncols
        unit[t] = Fraction(1)
        residue = linalg.reduce_vector(unit, reduced, pivots)
        classes.append({slot[c]: residue[c] for c in free if residue[c]})
    return free, classes


def join_truncated(I: GradedIdealBasis, J: GradedIdealBasis, truncation: int) -> GradedIdealBasis:
    """The join, degree by degree: kernel of coproduct-then-project."""
    if I.variables != J.variables:
        raise DomainError("join requires a shared ambient space")
    if I.truncation < truncation or J.truncation < truncation:
        raise DomainError("truncation too small: inputs must be exact up to the requested degree")
    n = len(I.variables)
    classes_I = {a: _quotient_classes(I, a) for a in range(truncation + 1)}
    classes_J = {b: _quotient_classes(J, b) for b in range(truncation + 1)}
    per_degree = {}
    for e in range(1, truncation + 1):
        monos = exponents(n, e)
        lo_index = {a: {m: i for i, m in enumerate(exponents(n, a))} for a in range(e + 1)}
        # global row layout: for each bidegree a, a block of |free_I| * |free_J|
        offsets = {}
        total_rows = 0
        for a in range(e + 1):
            offsets[a] = total_rows
            total_rows += len(classes_I[a][0]) * len(classes_J[e - a][0])
        matrix = [[Fraction(0)] * len(monos) for _ in range(total_rows)]
        for j, mono in enumerate(monos):
            for primed, coeff in _coproduct_splits(mono):
                a = sum(primed)
                doubled = tuple(x - y for x, y in zip(mono, primed))
                ci = classes_I[a][1][lo_index[a][primed]]
                cj = classes_J[e - a][1][lo_index[e - a][doubled]]
                width = len(classes_J[e - a][0])
                base = offsets[a]
                for si, vi in ci.items():
                    for sj, vj in cj.items():
                        matrix[base + si * width + sj][j] += coeff * vi * vj
        kernel = linalg.nullspace(matrix, len(monos))
        if kernel:
            per_degree[e] = kernel
    return GradedIdealBasis(I.variables, truncation, per_degree)


def _coproduct_splits(mono: tuple[int, ...]):
    """Terms of prod (v' + v'')^m: (primed exponent, multinomial coefficient)."""
    ranges = [range(m + 1) for m in mono]
    for choice in itertools.product(*ranges):
        coeff = Fraction(1)
        for m, k in zip(mono, choice):
            coeff *= comb(m, k)
        yield tuple(choice), coeff


def secant_truncated(I: GradedIdealBasis, order: int, truncation: int) -> GradedIdealBasis:
    """Iterated join of I with itself; order 1 returns I (restricted)."""
    if order < 1:
        raise DomainError("secant order must be >= 1")
    if I.truncation < truncation:
        raise DomainError("truncation too small: input must be exact up to the requested degree")
    current = GradedIdealBasis(
        I.variables, truncation, {e: I.rows(e) for e in range(1, truncation + 1) if I.rows(e)}
    )
    for _ in range(order - 1):
        current = join_truncated(current, I, truncation)
    return current


@dataclass(frozen=True)
class GeneratorDegreeTable:
    """New minimal generator counts per degree, within a truncation."""

    per_degree: dict
    truncation: int

    @property
    def observed_max(self) -> int | None:
        positive = [e for e, k in self.per_degree.items() if k > 0]
        return max(positive) if positive else None


def generator_degrees(I: GradedIdealBasis) -> GeneratorDegreeTable:
    """dim I_e minus dim(span of x_i * I_(e-1)) for every degree <= truncation.

    The observed maximum is a certified lower bound for the generation degree
    and an upper bound only within the truncation.
    """
    if I.truncation < 2:
        raise DomainError("generator degrees need truncation >= 2")
    n = len(I.variables)
    table = {}
    for e in range(1, I.truncation + 1):
        dim_e = I.dim(e)
        if dim_e == 0:
            continue
        prev = I.rows(e - 1)
        monos_lo = exponents(n, e - 1)
        monos_hi = exponents(n, e)
        index_hi = {m: i for i, m in enumerate(monos_hi)}
        rows = []
        for i in range(n):
            for row in prev:
                lifted = [Fraction(0)] * len(monos_hi)
                for m, c in zip(monos_lo, row):
                    if c:
                        shifted = list(m)
                        shifted[i] += 1
                        lifted[index_hi[tuple(shifted)]] = c
                rows.append(lifted)
        new = dim_e - linalg.rank(rows, len(monos_hi))
        if new:
            table[e] = new
    return GeneratorDegreeTable(table, I.truncation)


# --- random-point oracles ---------------------------------------------------


def random_rational_point(r: int, rng: random.Random) -> tuple[Fraction, ...]:
    """A random nonzero rational point with small numerators/denominators."""
    while True:
        point = tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(r))
        if any(point):
            return point


def veronese_point(u, d: int) -> tuple[Fraction, ...]:
    """Coordinates of u under the degree-d power map, one per z-variable."""
    labels = exponents(len(u), d)
    out = []
    for c in labels:
        val = Fraction(1)
        for ui, e in zip(u, c):
            val *= Fraction(ui) ** e
        out.append(val)
    return tuple(out)


def secant_point(r: int, d: int, order: int, rng: random.Random) -> tuple[Fraction, ...]:
    """Coordinate sum of `order` random points of the degree-d power map."""
    pts = [veronese_point(random_rational_point(r, rng), d) for _ in range(order)]
    return tuple(sum(col) for col in zip(*pts))


def vector_vanishes_at(row, e: int, n_vars: int, point) -> bool:
    """Evaluate a degree-e coefficient row at a point of the z-space, exactly."""
    acc = Fraction(0)
    for m, c in zip(exponents(n_vars, e), row):
        if c:
            term = Fraction(c)
            for z, exp in zip(point, m):
                term *= Fraction(z) ** exp
            acc += term
    return acc == 0
