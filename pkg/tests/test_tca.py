import itertools
import random

import pytest

from repstab.categories import (
    FIdMorphism,
    Permutation,
    compose_fid,
    enumerate_fid,
)
from repstab.errors import DomainError
from repstab.modules import ModuleElement, apply_morphism
from repstab.tca import (
    TcaBasisElement,
    block_swap,
    check_twisted_commutativity,
    equivariance_probe,
    permute_colors,
    postcomposition_orbits,
    shift_morphism,
    tca_action,
)


def p0_basis(m, d):
    return [ModuleElement.basis(phi) for phi in enumerate_fid(0, m, d)]


class TestAction:
    def test_worked_example(self):
        a = TcaBasisElement(2, (1,))
        start = ModuleElement.basis(FIdMorphism.from_maps(2, 0, 1, (), {1: 2}))
        result = tca_action(a, start)
        (phi, coeff), = result.terms.items()
        assert coeff == 1
        assert phi.injection == ()
        assert phi.coloring == {1: 1, 2: 2}

    def test_unit_acts_trivially(self):
        unit = TcaBasisElement(2, ())
        for e in p0_basis(2, 2):
            assert tca_action(unit, e) == e

    def test_shift_morphism_shape(self):
        mu = shift_morphism(TcaBasisElement(2, (2, 1)), 3)
        assert mu.src == 3 and mu.tgt == 5
        assert mu.injection == (3, 4, 5)
        assert mu.coloring == {1: 2, 2: 1}

    def test_graded_law(self):
        a = TcaBasisElement(2, (1, 2))
        for e in p0_basis(1, 2):
            out = tca_action(a, e)
            assert all(phi.tgt == 3 for phi in out.terms)

    def test_associative_with_concatenation(self):
        rng = random.Random(41)
        for _ in range(200):
            d = 2
            na, nb = rng.randint(0, 3), rng.randint(0, 3)
            a = TcaBasisElement(d, tuple(rng.randint(1, d) for _ in range(na)))
            b = TcaBasisElement(d, tuple(rng.randint(1, d) for _ in range(nb)))
            m = rng.randint(0, 2)
            basis = enumerate_fid(0, m, d)
            e = ModuleElement.basis(rng.choice(basis)) if basis else ModuleElement(0, d)
            assert tca_action(a.concat(b), e) == tca_action(a, tca_action(b, e))

    def test_bilinear(self):
        a = TcaBasisElement(2, (1,))
        e1, e2 = p0_basis(1, 2)[:2]
        combo = e1.scale(3) + e2.scale(-2)
        assert tca_action(a, combo) == tca_action(a, e1).scale(3) + tca_action(a, e2).scale(-2)

    def test_color_count_mismatch(self):
        with pytest.raises(DomainError):
            tca_action(TcaBasisElement(3, (3,)), p0_basis(1, 2)[0])


class TestTwistedCommutativity:
    def test_worked_example(self):
        x = TcaBasisElement(2, (1,))
        y = TcaBasisElement(2, (2,))
        tau = block_swap(1, 1)
        assert permute_colors(tau, (1, 2)) == (2, 1)
        assert check_twisted_commutativity(x, y)

    def test_symmetric_case(self):
        x = TcaBasisElement(2, (1, 2))
        assert check_twisted_commutativity(x, x)

    def test_exhaustive_small(self):
        d = 2
        for n in range(3):
            for m in range(3):
                for xw in itertools.product(range(1, d + 1), repeat=n):
                    for yw in itertools.product(range(1, d + 1), repeat=m):
                        assert check_twisted_commutativity(
                            TcaBasisElement(d, xw), TcaBasisElement(d, yw)
                        )


class TestEquivariance:
    def test_trivial_groups(self):
        assert equivariance_probe(1, 1, 2)

    def test_small_blocks(self):
        assert equivariance_probe(2, 1, 2)
        assert equivariance_probe(2, 2, 2)


class TestFunctoriality:
    def test_action_through_composites(self):
        # post-composition is functorial: apply(b o a, e) == apply(b, apply(a, e))
        d = 2
        for s in (0, 1):
            for a_size in range(s, 4):
                basis = enumerate_fid(s, a_size, d)
                if not basis:
                    continue
                generic = ModuleElement(
                    s, d, {phi: i + 1 for i, phi in enumerate(basis)}
                )
                for b_size in range(a_size, 4):
                    for alpha in enumerate_fid(a_size, b_size, d):
                        mid = apply_morphism(alpha, generic)
                        for c_size in range(b_size, 4):
                            for beta in enumerate_fid(b_size, c_size, d):
                                assert apply_morphism(beta, mid) == apply_morphism(
                                    compose_fid(beta, alpha), generic
                                )


class TestOrbits:
    def test_transitive_postcomposition(self):
        for n in (1, 2, 3):
            for m in range(n, 6):
                assert postcomposition_orbits(n, m) == 1


class TestPermutationHelpers:
    def test_block_swap_shape(self):
        tau = block_swap(2, 3)
        assert tau.images == (4, 5, 1, 2, 3)
        assert tau.inverse().images == (3, 4, 5, 1, 2)

    def test_permute_colors_is_group_action(self):
        rng = random.Random(8)
        for _ in range(50):
            n = rng.randint(1, 5)
            colors = tuple(rng.randint(1, 3) for _ in range(n))
            perms = [
                Permutation(p) for p in itertools.permutations(range(1, n + 1))
            ]
            s, t = rng.choice(perms), rng.choice(perms)
            st = Permutation(tuple(s(t(i)) for i in range(1, n + 1)))
            assert permute_colors(st, colors) == permute_colors(
                s, permute_colors(t, colors)
            )
