import oracle
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gdlab import bitset
from gdlab.canonical import canonical_frame
from gdlab.catalog import de_morgan_chain4, reversal
from gdlab.polarity import (
    IndexOutOfRange,
    Polarity,
    SortedRelation,
    SortMismatch,
    galois_dual,
    section,
)


def chain4_polarity():
    return canonical_frame(de_morgan_chain4()).polarity


@st.composite
def polarities(draw, max_x=5, max_y=5):
    nx = draw(st.integers(1, max_x))
    ny = draw(st.integers(1, max_y))
    rows = tuple(draw(st.integers(0, (1 << ny) - 1)) for _ in range(nx))
    return Polarity(nx, ny, rows)


def test_prime_of_empty_is_everything():
    pol = chain4_polarity()
    assert pol.prime_x(0) == pol.full_y
    assert pol.prime_y(0) == pol.full_x


def test_chain4_canonical_polarity():
    pol = chain4_polarity()
    # filters {1}, {b,1}, {a,b,1}; ideals {0}, {0,a}, {0,a,b}
    assert pol.x_names == ("{1}", "{b,1}", "{a,b,1}")
    assert pol.y_names == ("{0}", "{0,a}", "{0,a,b}")
    assert pol.cols[2] == bitset.from_indices([1, 2])
    assert pol.closure_x(0) == 0
    assert pol.closure_x(bitset.from_indices([1])) == pol.gamma_x(1) == bitset.from_indices([1, 2])
    assert pol.closure_x(pol.full_x) == pol.full_x
    assert list(pol.stable_family.stables) == [0, 0b100, 0b110, 0b111]


def test_two_chain_canonical_stables():
    pol = canonical_frame(reversal(2)).polarity
    assert (pol.nx, pol.ny, pol.rows) == (1, 1, (0,))
    assert list(pol.stable_family.stables) == [0, 1]


def test_full_relation_has_only_one_stable():
    pol = Polarity(3, 2, (3, 3, 3))
    assert list(pol.stable_family.stables) == [pol.full_x]
    assert pol.quasi_serial_witness() is not None


def test_duplicate_row_not_separated():
    pol = Polarity(3, 2, (1, 1, 2))
    assert not pol.is_separated()
    assert pol.separation_witness() == ("X", 0, 1)


def test_constructor_checks():
    with pytest.raises(ValueError):
        Polarity(2, 2, (1,))
    with pytest.raises(ValueError):
        Polarity(1, 2, (8,))


@given(polarities())
def test_stable_family_matches_bruteforce(pol):
    gal = set(pol.pairs())
    expected = [bitset.from_indices(s) for s in oracle.stables(pol.nx, pol.ny, gal)]
    assert sorted(pol.stable_family.stables) == sorted(expected)


@given(polarities())
def test_primes_agree_with_oracle(pol):
    gal = set(pol.pairs())
    for u in range(1 << pol.nx):
        U = frozenset(bitset.members(u))
        assert pol.prime_x(u) == bitset.from_indices(oracle.prime_x(pol.nx, pol.ny, gal, U))


@given(polarities())
def test_galois_connection_laws(pol):
    for u in range(1 << pol.nx):
        c = pol.closure_x(u)
        assert bitset.subset(u, c)
        assert pol.closure_x(c) == c
        assert pol.prime_x(c) == pol.prime_x(u)
    for v in range(1 << pol.ny):
        assert pol.prime_x(pol.prime_y(v)) == pol.closure_y(v)


@given(polarities())
def test_gamma_is_specialization_upset(pol):
    for x in range(pol.nx):
        assert pol.closure_x(1 << x) == pol.gamma_x(x)
        assert pol.gamma_x(x) == bitset.from_indices(z for z in range(pol.nx) if pol.leq_x(x, z))
    for y in range(pol.ny):
        assert pol.closure_y(1 << y) == pol.gamma_y(y)


@given(polarities())
def test_stables_are_upsets_and_costables_primes(pol):
    fam = pol.stable_family
    for a, b in zip(fam.stables, fam.costables):
        assert pol.is_upset_x(a)
        assert pol.prime_x(a) == b and pol.prime_y(b) == a


@given(polarities())
def test_stable_meet_and_join(pol):
    fam = pol.stable_family
    for a in fam.stables:
        for b in fam.stables:
            assert fam.meet(a, b) in fam
            j = fam.join(a, b)
            assert j in fam and bitset.subset(a | b, j)
            assert all(bitset.subset(j, c) for c in fam.stables if bitset.subset(a | b, c))


def test_canonical_polarities_are_separated():
    from gdlab.corpus import corpus

    for lat in corpus(5, "M"):
        assert canonical_frame(lat).polarity.is_separated()


def test_sections_and_sorts():
    pol = chain4_polarity()
    s = SortedRelation(("Y", "X"), ((0, 0), (1, 0), (1, 1)))
    assert section(s, (None, 0)) == 0b011
    assert section(s, (1, None)) == 0b011
    with pytest.raises(IndexOutOfRange):
        section(s, (None, None))
    s.check_sorts(pol)
    with pytest.raises(SortMismatch):
        SortedRelation(("Y", "X"), ((5, 0),)).check_sorts(pol)
    with pytest.raises(SortMismatch):
        SortedRelation(("Z", "X"), ((0, 0),))


def test_empty_relation_dual_is_everything():
    pol = chain4_polarity()
    d = galois_dual(pol, SortedRelation(("Y", "X"), ()))
    for x in range(pol.nx):
        assert section(d, (None, x)) == pol.full_x


def test_dual_of_canonical_s():
    # nu_hat({a,b,1}) is the ideal generated by {b, a, 0}, i.e. {0,a,b}; the dual section is '{y_b} = {x2, x3}
    fr = canonical_frame(de_morgan_chain4()).frame
    pol = fr.polarity
    d = galois_dual(pol, fr.s_relation())
    assert fr.nu_hat[2] == 2
    assert section(d, (None, 2)) == bitset.from_indices([1, 2]) == pol.cols[2]
    for x in range(pol.nx):
        assert pol.is_stable(section(d, (None, x)))
