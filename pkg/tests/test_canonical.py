import oracle
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gdlab import bitset
from gdlab.canonical import (
    NotMinimalVariety,
    canonical_frame,
    filters,
    fsat_check,
    ideals,
    representation_map,
)
from gdlab.catalog import (
    boolean,
    chain,
    de_morgan_chain4,
    pentagon,
    reversal,
    trivial_nu,
)
from gdlab.corpus import corpus
from gdlab.frame import IMPROPER

SMALL = corpus(5, "M")


def _oracle_view(lat):
    n = lat.n
    leq = {(a, b) for a in range(n) for b in range(n) if lat.leq(a, b)}
    return n, leq


def test_two_chain_filters_and_ideals():
    lat = reversal(2)
    assert filters(lat) == [0b10] and ideals(lat) == [0b01]
    cf = canonical_frame(lat)
    # nu_hat({1}) = {0}
    assert cf.frame.s_pairs() == [(0, 0)]


def test_chain4_three_filters_three_ideals():
    cf = canonical_frame(de_morgan_chain4())
    assert len(cf.X) == 3 and len(cf.Y) == 3
    assert all(x is not None for x in cf.x_of[1:]) and cf.x_of[0] is None


def test_boolean_square_filter_count():
    # proper filters of 2x2 are the principal filters of a, b and 1
    assert len(filters(boolean(2))) == 3


@given(st.sampled_from(SMALL))
def test_filters_and_ideals_match_oracle(lat):
    n, leq = _oracle_view(lat)
    assert sorted(filters(lat)) == sorted(bitset.from_indices(f) for f in oracle.filters(n, leq))
    assert sorted(ideals(lat)) == sorted(bitset.from_indices(i) for i in oracle.ideals(n, leq))


@given(st.sampled_from(SMALL))
def test_canonical_relations_match_oracle(lat):
    n, leq = _oracle_view(lat)
    X, Y, gal, S = oracle.canonical(n, leq, lat.nu)
    cf = canonical_frame(lat)
    xi = {bitset.from_indices(x): i for i, x in enumerate(X)}
    yi = {bitset.from_indices(y): j for j, y in enumerate(Y)}
    px = [xi[x] for x in cf.X]
    py = [yi[y] for y in cf.Y]
    assert {(px[x], py[y]) for x, y in cf.polarity.pairs()} == gal
    assert {(py[y], px[x]) for y, x in cf.frame.s_pairs()} == S


def test_chain4_nu_hat():
    cf = canonical_frame(de_morgan_chain4())
    # X = {1}, {b,1}, {a,b,1}; Y = {0}, {0,a}, {0,a,b}
    assert cf.nu_hat == (0, 1, 2)


def test_trivial_nu_pentagon_points_to_bottom_ideal():
    cf = canonical_frame(trivial_nu(pentagon()))
    y0 = cf.Y.index(0b1)
    assert all(v == y0 for v in cf.nu_hat)


def test_constant_zero_at_top_gives_improper_points():
    # nu = 1 everywhere: every filter generates the improper ideal
    cf = canonical_frame(chain(3, [2, 2, 2]))
    assert all(v is IMPROPER for v in cf.nu_hat)
    assert cf.frame.s_vee == (0, 0)


def test_non_minimal_rejected():
    with pytest.raises(NotMinimalVariety):
        canonical_frame(chain(3, [0, 1, 2]))


def test_chain4_representation():
    cf = canonical_frame(de_morgan_chain4())
    r = representation_map(cf)
    # X_a = {x3}, X_b = {x2, x3}, (X_a)* = X_b
    assert r.X_a == (0, 0b100, 0b110, 0b111)
    assert cf.frame.star(r.X_a[1]) == r.X_a[2]


@given(st.sampled_from(SMALL))
def test_representation_bounds(lat):
    cf = canonical_frame(lat)
    r = representation_map(cf)
    assert r.X_a[lat.bottom] == 0
    assert r.X_a[lat.top] == cf.polarity.full_x


@given(st.sampled_from(SMALL))
def test_representation_is_lattice_iso(lat):
    cf = canonical_frame(lat)
    r = representation_map(cf)
    fam = cf.polarity.stable_family
    assert sorted(r.X_a) == sorted(fam.stables)
    for a in range(lat.n):
        assert cf.frame.star(r.X_a[a]) == r.X_a[lat.nu[a]]
        for b in range(lat.n):
            assert r.X_a[lat.meet[a][b]] == r.X_a[a] & r.X_a[b]
            assert r.X_a[lat.join[a][b]] == cf.polarity.closure_x(r.X_a[a] | r.X_a[b])


def test_fsat_on_chain4():
    cf = canonical_frame(de_morgan_chain4())
    pol = cf.polarity
    assert fsat_check(cf).passed
    # fsat({x2}) = {x2, x3}
    sat = pol.full_x
    for f in pol.cols:
        if bitset.subset(0b010, f):
            sat &= f
    assert sat == 0b110 == pol.closure_x(0b010)


@given(st.sampled_from(SMALL))
def test_fsat_everywhere(lat):
    assert fsat_check(canonical_frame(lat)).passed


def test_star_of_x_empty_when_nu_top_is_bottom():
    cf = canonical_frame(chain(3, [2, 0, 0]))
    assert cf.frame.star(cf.polarity.full_x) == 0
