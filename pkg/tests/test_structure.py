from functools import reduce

import pytest

import oracle as O
from conftest import CATALOG
from skewmccoy import (CapacityError, Ideal, InvalidIdealError, annihilator,
                       build_ring, enumerate_endomorphisms, gf, idempotents,
                       is_abelian, is_prime_ideal, is_quasi_duo, is_regular,
                       is_semiregular, jacobson_radical, maximal_ideals,
                       nilpotency_index, one_sided_maximal_ideals, product,
                       quotient_ring, s_matrix, upper_triangular, zmod)
from skewmccoy.errors import SidednessError
from skewmccoy.structure import (LEFT, RIGHT, TWO_SIDED, all_ideals, generated_ideal,
                                 nil_structure)

T2 = "uppertri 2 zmod2"
E11, E12, E22 = 1, 2, 4


def _oracle(R):
    return O.Ring(R.order, R.add.tolist(), R.mul.tolist(), R.zero, R.one)


# -- radical -----------------------------------------------------------------

@pytest.mark.parametrize("spec", CATALOG)
def test_radical_matches_oracle(spec, catalog_rings):
    R = catalog_rings[spec]
    o = _oracle(R)
    J = jacobson_radical(R)
    assert J.elements == O.jacobson(o)
    assert nilpotency_index(J) == O.nilpotency_index(o, J.elements)


@pytest.mark.parametrize("spec", [s for s in CATALOG if build_ring(s).order <= 8])
def test_maximal_ideals_match_subset_scan(spec, catalog_rings):
    R = catalog_rings[spec]
    o = _oracle(R)
    for side, oside in ((LEFT, "left"), (RIGHT, "right")):
        got = {I.elements for I in one_sided_maximal_ideals(R, side)}
        want = set(O.maximal(o, O.ideals_by_subsets(o, oside)))
        assert got == want
        assert reduce(frozenset.__and__, got) == jacobson_radical(R).elements


@pytest.mark.parametrize("spec,J,index", [
    ("zmod 4", [0, 2], 2), ("zmod 8", [0, 2, 4, 6], 3), ("gf 4 poly=x^2+x+1", [0], 1),
    (T2, [0, E12], 2),
])
def test_radical_values(spec, J, index):
    R = build_ring(spec)
    rad = jacobson_radical(R)
    assert rad.sorted == tuple(J)
    assert nilpotency_index(rad) == index


def test_zero_ideal_has_index_one():
    R = zmod(5)
    assert nilpotency_index(Ideal(R, frozenset({0}))) == 1


def test_whole_ring_is_not_nilpotent():
    R = zmod(4)
    assert nilpotency_index(Ideal(R, frozenset(range(4)))) is None


# -- idempotents, abelian -----------------------------------------------------

def test_idempotents():
    assert idempotents(zmod(4)) == {0: True, 1: True}
    P = product(zmod(2), zmod(2))
    assert idempotents(P) == {0: True, 1: True, 2: True, 3: True}
    T = upper_triangular(2, zmod(2))
    assert idempotents(T)[E11] is False
    assert sorted(idempotents(T)) == sorted(O.idempotents(_oracle(T)))


def test_abelian():
    assert is_abelian(zmod(8))
    assert is_abelian(s_matrix(3, zmod(2)))
    chk = is_abelian(upper_triangular(2, zmod(2)))
    assert not chk and chk.witness == (E11, E12)
    R = upper_triangular(2, zmod(2))
    e, r = chk.witness
    assert R.m(e, r) != R.m(r, e)


@pytest.mark.parametrize("spec", CATALOG)
def test_abelian_matches_oracle(spec, catalog_rings):
    R = catalog_rings[spec]
    assert bool(is_abelian(R)) == O.is_abelian(_oracle(R))


# -- quotients, regularity ----------------------------------------------------

def test_quotients():
    R = zmod(4)
    Q, proj = quotient_ring(R, jacobson_radical(R))
    assert Q.order == 2 and Q.mul.tolist() == zmod(2).mul.tolist()
    Q, proj = quotient_ring(R, Ideal(R, frozenset({0})))
    assert Q.order == 4 and len(set(proj)) == 4
    S = s_matrix(2, zmod(2))
    assert quotient_ring(S, jacobson_radical(S))[0].order == 2


def test_quotient_rejects_one_sided():
    T = upper_triangular(2, zmod(2))
    two = {I.elements for I in all_ideals(T, TWO_SIDED)}
    I = next(I for I in all_ideals(T, LEFT) if I.elements not in two)
    with pytest.raises(SidednessError):
        quotient_ring(T, I)


def test_regular():
    assert is_regular(gf(4))
    chk = is_regular(zmod(4))
    assert not chk and chk.witness == 2
    assert is_regular(zmod(6))


@pytest.mark.parametrize("spec", CATALOG)
def test_catalog_semiregular_and_nilpotent(spec, catalog_rings):
    R = catalog_rings[spec]
    assert is_semiregular(R)
    assert nilpotency_index(jacobson_radical(R)) is not None


def test_semiregular_values():
    assert is_semiregular(zmod(4)) and is_semiregular(gf(4))


# -- maximal ideals, quasi-duo, primes ----------------------------------------

def test_maximal_left_ideals_of_z6():
    got = [I.sorted for I in one_sided_maximal_ideals(zmod(6), LEFT)]
    assert got == [(0, 2, 4), (0, 3)]


def test_field_has_zero_maximal_ideal():
    assert [I.sorted for I in one_sided_maximal_ideals(gf(4), LEFT)] == [(0,)]


def test_uppertri_maximal_right_ideals():
    ms = one_sided_maximal_ideals(upper_triangular(2, zmod(2)), RIGHT)
    assert len(ms) == 2 and all(len(M) == 4 for M in ms)


def test_ideal_cap():
    with pytest.raises(CapacityError):
        one_sided_maximal_ideals(zmod(12), LEFT, cap=8)


def test_quasi_duo():
    assert is_quasi_duo(zmod(12))
    assert is_quasi_duo(s_matrix(2, zmod(2)))
    # decided by the exhaustive check: both maximal one-sided ideals of T2 are two-sided
    assert is_quasi_duo(upper_triangular(2, zmod(2)))


@pytest.mark.parametrize("spec", CATALOG)
def test_commutative_rings_are_quasi_duo_and_abelian(spec, catalog_rings):
    R = catalog_rings[spec]
    if R.is_commutative():
        assert is_quasi_duo(R) and is_abelian(R)


def test_prime_ideals():
    R = zmod(4)
    assert is_prime_ideal(R, Ideal(R, frozenset({0, 2})))
    P = product(zmod(2), zmod(2))
    chk = is_prime_ideal(P, Ideal(P, frozenset({0})))
    assert not chk and chk.witness == (1, 2)
    assert P.names[1] == "(1,0)" and P.names[2] == "(0,1)"
    F = gf(4)
    assert is_prime_ideal(F, Ideal(F, frozenset({0})))


def test_prime_ideal_rejects_bad_input():
    R = zmod(4)
    with pytest.raises(InvalidIdealError):
        is_prime_ideal(R, Ideal(R, frozenset(range(4))))
    with pytest.raises(InvalidIdealError):
        is_prime_ideal(R, Ideal(R, frozenset({0, 1})))


@pytest.mark.parametrize("spec", CATALOG)
def test_maximal_two_sided_are_prime(spec, catalog_rings):
    R = catalog_rings[spec]
    o = _oracle(R)
    for M in maximal_ideals(R):
        assert is_prime_ideal(R, M)
        assert O.is_prime(o, M.elements)


# -- nil structure --------------------------------------------------------------

def test_nil_structure():
    n = nil_structure(zmod(4))
    assert n.nil == {0, 2} and n.prime_radical.elements == {0, 2} and n.two_primal
    n = nil_structure(gf(4))
    assert n.nil == {0} and n.two_primal
    T = upper_triangular(2, zmod(2))
    n = nil_structure(T)
    assert n.nil == {0, E12}
    assert n.two_primal          # computed: the prime radical is {0, E12}


@pytest.mark.parametrize("spec", CATALOG)
def test_prime_radical_inside_jacobson(spec, catalog_rings):
    R = catalog_rings[spec]
    n = nil_structure(R)
    assert n.prime_radical.elements <= jacobson_radical(R).elements
    assert n.nil == O.nilpotents(_oracle(R))


# -- annihilators ------------------------------------------------------------

def test_annihilators():
    R = zmod(4)
    assert annihilator(R, {0, 2}, RIGHT) == {0, 2}
    assert annihilator(R, {1}, RIGHT) == {0}
    assert annihilator(R, set(), RIGHT) == set(range(4))
    T = upper_triangular(2, zmod(2))
    assert annihilator(T, {E12}, LEFT) == {x for x in range(8) if T.m(x, E12) == 0}


def test_annihilator_antitone():
    R = zmod(8)
    sets = [set(), {4}, {4, 2}, {4, 2, 6}]
    anns = [annihilator(R, X, RIGHT) for X in sets]
    assert all(a >= b for a, b in zip(anns, anns[1:]))


# -- ideals ---------------------------------------------------------------------

def test_generated_ideal_and_counts():
    R = zmod(12)
    assert generated_ideal(R, [8]).sorted == (0, 4, 8)
    T = upper_triangular(2, zmod(2))
    o = _oracle(T)
    for side, oside in ((LEFT, "left"), (RIGHT, "right"), (TWO_SIDED, "two")):
        assert {I.elements for I in all_ideals(T, side)} == set(O.ideals_by_subsets(o, oside))


# -- endomorphisms -----------------------------------------------------------

@pytest.mark.parametrize("spec", ["zmod 4", "gf 4 poly=x^2+x+1", "product zmod2 zmod2",
                                  "smatrix 2 zmod2", "zmod 3"])
def test_endomorphisms_match_map_scan(spec):
    R = build_ring(spec)
    got = [e.map for e in enumerate_endomorphisms(R)]
    assert got[0] == tuple(range(R.order))
    assert sorted(got) == sorted(O.endomorphisms(_oracle(R)))


def test_endomorphism_values():
    assert len(enumerate_endomorphisms(zmod(4))) == 1
    F = gf(4)
    maps = [e.map for e in enumerate_endomorphisms(F)]
    assert maps == [(0, 1, 2, 3), tuple(F.power(x, 2) for x in range(4))]
    assert len(enumerate_endomorphisms(product(zmod(2), zmod(2)))) == 4


def test_endomorphism_cap():
    with pytest.raises(CapacityError):
        enumerate_endomorphisms(zmod(8), cap=4)
