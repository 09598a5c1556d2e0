from fractions import Fraction

import pytest

from repstab.errors import DomainError
from repstab.polynomials import SparsePoly, exponents

XY = ("x", "y")


def x():
    return SparsePoly.variable(XY, "x")


def y():
    return SparsePoly.variable(XY, "y")


class TestArithmetic:
    def test_ring_ops(self):
        p = x() + y()
        q = x() - y()
        assert p * q == x() * x() - y() * y()
        assert (p**2) == x() ** 2 + 2 * (x() * y()) + y() ** 2
        assert p - p == SparsePoly.zero(XY)
        assert (p * SparsePoly.zero(XY)).is_zero()

    def test_scalars(self):
        p = 3 * x()
        assert p.scale(Fraction(1, 3)) == x()
        assert (-p) + p == SparsePoly.zero(XY)

    def test_mismatched_variables(self):
        with pytest.raises(DomainError):
            x() + SparsePoly.variable(("z",), "z")

    def test_negative_exponent_rejected(self):
        with pytest.raises(DomainError):
            SparsePoly(XY, {(-1, 0): 1})


class TestStructure:
    def test_degree_and_homogeneity(self):
        p = x() * x() + x() * y()
        assert p.total_degree() == 2 and p.is_homogeneous()
        assert not (p + x()).is_homogeneous()

    def test_substitute_is_ring_hom(self):
        p = x() ** 2 + 2 * (x() * y()) + SparsePoly.constant(XY, 5)
        images = {"x": y(), "y": x() + y()}
        q = p.substitute(images)
        r = (p * p).substitute(images)
        assert r == q * q

    def test_evaluate(self):
        p = x() ** 2 - y()
        assert p.evaluate([Fraction(3), Fraction(2)]) == 7
        assert p.evaluate([Fraction(1, 2), Fraction(1, 4)]) == 0

    def test_str_graded_lex(self):
        p = y() + x() + x() * x()
        assert str(p) == "x^2 + x + y"
        assert str(SparsePoly.zero(XY)) == "0"
        assert str(x() - y()) == "x - y"


class TestExponents:
    def test_descending_lex(self):
        assert exponents(2, 2) == [(2, 0), (1, 1), (0, 2)]
        assert exponents(3, 1) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
        assert exponents(1, 4) == [(4,)]

    def test_counts(self):
        from math import comb

        for n in (1, 2, 3):
            for k in range(5):
                assert len(exponents(n, k)) == comb(k + n - 1, n - 1)
