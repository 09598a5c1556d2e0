"""Computational toolkit for the categories behind representation stability.

Composition engines and hom enumeration for colored-injection, ordered,
Veronese, and block-matching categories; word encodings with the subsequence
order and Higman-witness search; monomial submodules with exact division and
truncated initial modules; automata-based Hilbert functions with exact
rational generating functions; and degree-truncated joins and secant ideals
of Veronese embeddings.
"""

from .categories import (
    FIdMorphism,
    MatchingMorphism,
    MultiIndex,
    OIdMorphism,
    Permutation,
    VeroneseMorphism,
    compose_fid,
    compose_matching,
    compose_oid,
    compose_veronese,
    decompose_fid_morphism,
    enumerate_hom,
    identity_fid,
    identity_matching,
    identity_oid,
    identity_veronese,
    recompose_fid_morphism,
    veronese_action,
)
from .errors import CompositionError, DecodeError, DomainError, FitError, FormatError
from .genfunc import (
    EventualPolynomial,
    RationalGF,
    fit_eventual_polynomial,
    generating_function,
    hilbert_function,
)
from .modules import (
    DEGLEX,
    ModuleElement,
    MonomialSubmodule,
    PrincipalProjective,
    TermOrder,
    apply_morphism,
    chain_probe,
    initial_module_truncated,
    member,
    minimal_generators,
    reduce_element,
)
from .automata import DFA, NFA, count_by_length, standard_word_automaton
from .polynomials import SparsePoly
from .secants import (
    GeneratorDegreeTable,
    GradedIdealBasis,
    delta,
    generator_degrees,
    ideal_from_generators,
    join_truncated,
    secant_truncated,
    veronese_ideal_truncated,
)
from .tca import TcaBasisElement, check_twisted_commutativity, equivariance_probe, tca_action
from .words import (
    PosetWitness,
    Word,
    decode_word,
    divides,
    encode_word,
    higman_witness,
    is_subsequence,
    minimal_words,
    parse_word,
)

__version__ = "0.1.0"
