import random

import oracle
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gdlab import bitset
from gdlab.axioms import (
    TABLE2,
    TABLE3,
    TABLE4,
    check_correspondence,
    check_D,
    check_irreflexive,
    check_symmetric,
    check_table2,
    check_table3,
    check_table4_objects,
    classify_frame,
    distributivity_witness,
    full_report,
    recheck_witness,
)
from gdlab.canonical import canonical_frame
from gdlab.catalog import benzene, boolean, de_morgan_chain4, pentagon, trivial_nu
from gdlab.corpus import corpus, random_frame
from gdlab.frame import Frame, NuHatUndefined
from gdlab.polarity import Polarity

SMALL = corpus(5, "M")


def frames(draw_seed):
    return random_frame(random.Random(draw_seed))


seeds = st.integers(0, 10**6)


def test_canonical_chain4_passes_everything_but_o():
    rep = full_report(canonical_frame(de_morgan_chain4()).frame)
    assert rep.failed() == ["O"]
    assert rep.category == "nuDMA"


def test_f2_fails_on_non_gamma_section():
    pol = canonical_frame(de_morgan_chain4()).polarity
    # {y1, y3}: nonempty, not of the form Gamma y
    f = Frame(pol, (0b101, 0b101, 0b101))
    rep = check_table2(f)
    assert not rep.ok("F2")
    assert recheck_witness(f, rep.results["F2"])


def test_empty_sections_are_allowed():
    # S x empty encodes an improper value of the point operator
    pol = canonical_frame(de_morgan_chain4()).polarity
    assert check_table2(Frame(pol, (0, 0, 0))).all_passed()


def test_full_relation_fails_f0():
    pol = Polarity(2, 2, (3, 3))
    rep = check_table2(Frame(pol, (0, 0)))
    assert not rep.ok("F0")
    assert recheck_witness(Frame(pol, (0, 0)), rep.results["F0"])


def test_f6_failure():
    # two-by-two polarities never fail F6; this three-by-three one does
    pol = Polarity(3, 3, (1, 3, 6))
    f = Frame(pol, (0, 0, 0))
    rep = check_table4_objects(f)
    assert not rep.ok("F6")
    assert recheck_witness(f, rep.results["F6"])


def test_f5_f7_failure():
    pol = Polarity(2, 2, (1, 2))
    rep = check_table4_objects(Frame(pol, (0, 0)))
    assert not rep.ok("F5") and not rep.ok("F7")


def test_passed_axioms_have_no_witness():
    rep = full_report(canonical_frame(trivial_nu(pentagon())).frame)
    for r in rep.results.values():
        assert (r.witness is None) == r.passed


def test_i4_fails_on_trivial_pentagon():
    rep = check_table3(canonical_frame(trivial_nu(pentagon())).frame)
    assert not rep.ok("I4")


def test_chain4_table3_passes():
    assert check_table3(canonical_frame(de_morgan_chain4()).frame).all_passed(TABLE3)


def test_table3_needs_point_operator():
    pol = canonical_frame(de_morgan_chain4()).polarity
    with pytest.raises(NuHatUndefined):
        check_table3(Frame(pol, (0b101, 0, 0)))


def test_supplied_r_wedge_consistency():
    fr = canonical_frame(de_morgan_chain4()).frame
    good = Frame(fr.polarity, fr.s_vee, fr.derived_r_wedge)
    assert check_table3(good).ok("R-consistency")
    bad = Frame(fr.polarity, fr.s_vee, (0, 0, 0))
    assert not check_table3(bad).ok("R-consistency")


def test_d_and_distributivity():
    fb = canonical_frame(boolean(2)).frame
    assert check_D(fb).passed and distributivity_witness(fb) is None
    fn = canonical_frame(trivial_nu(pentagon())).frame
    assert not check_D(fn).passed and distributivity_witness(fn) is not None


@pytest.mark.parametrize(
    "lat, category",
    [
        (benzene(), "nuO"),
        (boolean(3), "nuBA"),
        (boolean(2), "nuBA"),
        (de_morgan_chain4(), "nuDMA"),
        # trivial nu satisfies a <= nu nu a, so the frame has symmetric incompatibility
        (trivial_nu(pentagon()), "nuG"),
    ],
)
def test_categories(lat, category):
    assert classify_frame(canonical_frame(lat).frame) == category


def test_non_frame_has_no_category():
    pol = Polarity(2, 2, (3, 3))
    assert classify_frame(Frame(pol, (0, 0))) == "none"


def test_symmetric_frame_double_star():
    fr = canonical_frame(de_morgan_chain4()).frame
    for a in fr.stable_family.stables:
        assert fr.star(fr.star(a)) == a


def test_self_incompatible_point_witness():
    fr = canonical_frame(de_morgan_chain4()).frame
    res = check_irreflexive(fr)
    assert not res.passed
    x = res.witness["x"][1]
    a = fr.polarity.gamma_x(x)
    assert bitset.contains(a & fr.star(a), x)


@given(seeds)
def test_random_frames_satisfy_table2(seed):
    assert check_table2(frames(seed)).all_passed(TABLE2)


@given(seeds)
def test_star_matches_oracle(seed):
    f = frames(seed)
    pol = f.polarity
    gal = set(pol.pairs())
    S = set(f.s_pairs())
    for a in f.stable_family.stables:
        A = frozenset(bitset.members(a))
        assert f.star(a) == bitset.from_indices(oracle.star(pol.nx, pol.ny, gal, S, A))


@given(seeds)
def test_failed_witnesses_reproduce(seed):
    f = frames(seed)
    rep = full_report(f)
    for r in rep.results.values():
        if not r.passed and r.witness:
            assert recheck_witness(f, r), r


@given(seeds)
def test_correspondence_on_random_frames(seed):
    assert check_correspondence(frames(seed)).passed


@given(st.sampled_from(SMALL))
def test_canonical_frames_pass_table4(lat):
    fr = canonical_frame(lat).frame
    assert check_table2(fr).all_passed(TABLE2)
    assert check_table4_objects(fr).all_passed(TABLE4)


def test_symmetry_result():
    fr = canonical_frame(boolean(2)).frame
    assert check_symmetric(fr).passed and check_irreflexive(fr).passed
