import random

import oracle
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gdlab import bitset
from gdlab.axioms import frame_flags
from gdlab.canonical import canonical_frame, representation_map
from gdlab.catalog import benzene, boolean, de_morgan_chain4, reversal
from gdlab.complex_algebra import (
    AxiomPrereqFailed,
    build_complex_algebra,
    eta_bar_S,
    eta_S,
    eta_vee,
    eta_wedge,
    operator_law_scan,
    triangle,
    wedge_law_scan,
    zeta_S,
)
from gdlab.corpus import corpus, random_frame
from gdlab.frame import Frame
from gdlab.polarity import Polarity

seeds = st.integers(0, 10**6)


def chain4():
    return canonical_frame(de_morgan_chain4())


def test_empty_and_full_arguments():
    f = chain4().frame
    pol = f.polarity
    assert eta_S(f, 0) == 0
    assert eta_vee(f, 0) == pol.full_x
    assert zeta_S(f, pol.full_y) == pol.full_x


def test_eta_bar_s_on_x_a():
    cf = chain4()
    f = cf.frame
    xa = representation_map(cf).X_a[1]
    # Gamma of the principal ideal of nu a = b
    assert eta_bar_S(f, xa) == f.polarity.gamma_y(cf.y_of[2])


def test_eta_vee_on_canonical():
    cf = chain4()
    r = representation_map(cf)
    lat = cf.source
    for a in range(lat.n):
        assert eta_vee(cf.frame, r.X_a[a]) == r.X_a[lat.nu[a]]


def test_chain4_residuation_and_wedge():
    f = chain4().frame
    assert all(c.passed for c in operator_law_scan(f))
    fam = f.stable_family
    for a in fam.stables:
        assert eta_wedge(f, a) == f.star(a) == triangle(f, a)
    assert all(c.passed for c in wedge_law_scan(f))


def test_eta_wedge_of_x_is_bottom():
    f = chain4().frame
    assert eta_wedge(f, f.polarity.full_x) == 0


def test_boolean_square_algebra():
    alg = build_complex_algebra(canonical_frame(boolean(2)).frame)
    assert alg.lattice.n == 4 and alg.variety.BA


def test_benzene_algebra():
    alg = build_complex_algebra(canonical_frame(benzene()).frame)
    assert alg.lattice.n == 6
    assert alg.variety.O and not alg.lattice.is_distributive()


def test_two_chain_algebra():
    alg = build_complex_algebra(canonical_frame(reversal(2)).frame)
    assert alg.stables == (0, 1) and alg.variety.BA


def test_prereq_checked():
    pol = Polarity(2, 2, (3, 3))
    with pytest.raises(AxiomPrereqFailed):
        build_complex_algebra(Frame(pol, (0, 0)))


@given(seeds)
def test_operator_laws_on_random_frames(seed):
    f = random_frame(random.Random(seed))
    bad = [c for c in operator_law_scan(f) if not c.passed]
    assert not bad


@given(seeds)
def test_triangle_is_star_on_symmetric_frames(seed):
    f = random_frame(random.Random(seed))
    if frame_flags(f)["G"]:
        for a in f.stable_family.stables:
            assert triangle(f, a) == f.star(a)


@given(seeds)
def test_complex_algebra_is_minimal_and_matches_oracle(seed):
    f = random_frame(random.Random(seed))
    alg = build_complex_algebra(f)
    assert alg.variety.M
    pol = f.polarity
    gal = set(pol.pairs())
    S = set(f.s_pairs())
    st_ = alg.stables
    for i, a in enumerate(st_):
        A = frozenset(bitset.members(a))
        assert st_[alg.star[i]] == bitset.from_indices(oracle.star(pol.nx, pol.ny, gal, S, A))
        for j, b in enumerate(st_):
            B = frozenset(bitset.members(b))
            assert st_[alg.lattice.join[i][j]] == bitset.from_indices(oracle.closure_join(pol.nx, pol.ny, gal, A, B))


@given(st.sampled_from(corpus(5, "INV")))
def test_wedge_codistribution_on_involutive_frames(lat):
    f = canonical_frame(lat).frame
    assert all(c.passed for c in wedge_law_scan(f))
