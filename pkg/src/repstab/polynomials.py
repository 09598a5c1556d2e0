"""Sparse multivariate polynomial arithmetic over exact rationals.

Terms map exponent tuples to nonzero Fraction coefficients. Printing and
monomial bases use graded lexicographic order on the named variables, which
keeps every downstream basis (ideal slices, kernel vectors) canonical.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError


def exponents(n_vars: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent tuples of the given total degree, descending lex."""
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for v in range(remaining, -1, -1):
            rec(prefix + (v,), remaining - v, slots - 1)

    if n_vars < 1:
        raise DomainError("need at least one variable")
    rec((), degree, n_vars)
    return out


class SparsePoly:
    """A polynomial in named variables with Fraction coefficients."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms=None):
        self.variables = tuple(variables)
        clean = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != len(self.variables):
                raise DomainError(
                    f"exponent tuple {exps} does not match {len(self.variables)} variables"
                )
            if any(e < 0 for e in exps):
                raise DomainError(f"negative exponent in {exps}")
            coeff = Fraction(coeff)
            if coeff:
                clean[exps] = clean.get(exps, Fraction(0)) + coeff
                if not clean[exps]:
                    del clean[exps]
        self.terms = clean

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, variables) -> "SparsePoly":
        return cls(variables)

    @classmethod
    def constant(cls, variables, value) -> "SparsePoly":
        return cls(variables, {(0,) * len(tuple(variables)): Fraction(value)})

    @classmethod
    def variable(cls, variables, name) -> "SparsePoly":
        variables = tuple(variables)
        exps = [0] * len(variables)
        exps[variables.index(name)] = 1
        return cls(variables, {tuple(exps): Fraction(1)})

    @classmethod
    def monomial(cls, variables, exps, coeff=1) -> "SparsePoly":
        return cls(variables, {tuple(exps): Fraction(coeff)})

    # -- ring operations -------------------------------------------------

    def _check(self, other):
        if self.variables != other.variables:
            raise DomainError("polynomials live in different variable sets")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return SparsePoly(self.variables, terms)

    def __sub__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) - c
        return SparsePoly(self.variables, terms)

    def __neg__(self):
        return SparsePoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return SparsePoly(self.variables, terms)

    __rmul__ = __mul__

    def scale(self, scalar) -> "SparsePoly":
        scalar = Fraction(scalar)
        return SparsePoly(self.variables, {e: scalar * c for e, c in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative powers are not polynomials")
        out = SparsePoly.constant(self.variables, 1)
        for _ in range(n):
            out = out * self
        return out

    # -- structure -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def substitute(self, images: dict[str, "SparsePoly"]) -> "SparsePoly":
        """Ring homomorphism determined by variable images."""
        missing = [v for v in self.variables if v not in images]
        if missing:
            raise DomainError(f"no image given for variables {missing}")
        some = next(iter(images.values()))
        out = SparsePoly.zero(some.variables)
        for exps, coeff in self.terms.items():
            term = SparsePoly.constant(some.variables, coeff)
            for v, e in zip(self.variables, exps):
                for _ in range(e):
                    term = term * images[v]
            out = out + term
        return out

    def evaluate(self, values) -> Fraction:
        """Exact evaluation at a point (one value per variable)."""
        values = [Fraction(v) for v in values]
        if len(values) != len(self.variables):
            raise DomainError("wrong number of values")
        acc = Fraction(0)
        for exps, coeff in self.terms.items():
            term = coeff
            for v, e in zip(values, exps):
                term *= v**e
            acc += term
        return acc

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def __eq__(self, other):
        return (
            isinstance(other, SparsePoly)
            and self.variables == other.variables
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, coeff in self.sorted_terms():
            names = [
                v if e == 1 else f"{v}^{e}"
                for v, e in zip(self.variables, exps)
                if e
            ]
            body = "*".join(names) if names else ""
            mag = abs(coeff)
            if body:
                piece = body if mag == 1 else f"{mag}*{body}"
            else:
                piece = str(mag)
            if not parts:
                parts.append(piece if coeff > 0 else f"-{piece}")
            else:
                parts.append(("+ " if coeff > 0 else "- ") + piece)
        return " ".join(parts)

    def __repr__(self):
        return f"SparsePoly({self})"
