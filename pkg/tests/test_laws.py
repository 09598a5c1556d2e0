"""Sampled law checks on sizes beyond the exhaustive window."""

from hypothesis import given, settings

from repstab.categories import (
    compose_fid,
    compose_matching,
    compose_oid,
    compose_veronese,
    identity_fid,
    identity_matching,
    identity_oid,
    identity_veronese,
)
from repstab.words import divides, encode_word, is_subsequence
from strategies import (
    fid_composable_triples,
    fid_morphisms,
    matching_composable_triples,
    matching_morphisms,
    veronese_composable_triples,
    veronese_morphisms,
)


@given(fid_composable_triples(max_tgt=12))
@settings(max_examples=300)
def test_fid_associativity_sampled(triple):
    f, g, h = triple
    assert compose_fid(h, compose_fid(g, f)) == compose_fid(compose_fid(h, g), f)


@given(fid_composable_triples(ordered=True, max_tgt=12))
@settings(max_examples=300)
def test_oid_associativity_sampled(triple):
    f, g, h = triple
    left = compose_oid(h, compose_oid(g, f))
    assert left == compose_oid(compose_oid(h, g), f)
    assert left.is_ordered()


@given(matching_composable_triples())
@settings(max_examples=300)
def test_matching_associativity_sampled(triple):
    f, g, h = triple
    assert compose_matching(h, compose_matching(g, f)) == compose_matching(
        compose_matching(h, g), f
    )


@given(veronese_composable_triples())
@settings(max_examples=300)
def test_veronese_associativity_sampled(triple):
    f, g, h = triple
    assert compose_veronese(h, compose_veronese(g, f)) == compose_veronese(
        compose_veronese(h, g), f
    )


@given(fid_morphisms(max_tgt=8))
def test_fid_identity_sampled(phi):
    assert compose_fid(identity_fid(phi.tgt, phi.d), phi) == phi
    assert compose_fid(phi, identity_fid(phi.src, phi.d)) == phi


@given(fid_morphisms(ordered=True, max_tgt=8))
def test_oid_identity_sampled(phi):
    assert compose_oid(identity_oid(phi.tgt, phi.d), phi) == phi
    assert compose_oid(phi, identity_oid(phi.src, phi.d)) == phi


@given(matching_morphisms())
def test_matching_identity_sampled(phi):
    assert compose_matching(identity_matching(phi.tgt, phi.d), phi) == phi
    assert compose_matching(phi, identity_matching(phi.src, phi.d)) == phi


@given(veronese_morphisms())
def test_veronese_identity_sampled(alpha):
    d, m = alpha.src
    e, n = alpha.tgt
    assert compose_veronese(identity_veronese(alpha.r, e, n), alpha) == alpha
    assert compose_veronese(alpha, identity_veronese(alpha.r, d, m)) == alpha


@given(fid_composable_triples(ordered=True, max_tgt=10))
@settings(max_examples=300)
def test_divisibility_matches_factorization(triple):
    f, g, _ = triple
    composite = compose_oid(g, f)
    assert is_subsequence(encode_word(f), encode_word(composite)) is not None
    psi = divides(f, composite)
    assert psi is not None
    assert compose_oid(psi, f) == composite
