import pytest
from hypothesis import given
from hypothesis import strategies as st

from gdlab.canonical import canonical_frame
from gdlab.catalog import (
    benzene,
    boolean,
    chain,
    de_morgan_chain4,
    pentagon,
    reversal,
    trivial_nu,
)
from gdlab.corpus import corpus
from gdlab.duality import (
    FrameMorphism,
    HomInvalid,
    LatticeHom,
    check_morphism_axioms,
    compose_homs,
    compose_morphisms,
    counit_iso_check,
    dual_frame_morphism,
    hom_from_names,
    identity_hom,
    identity_morphism,
    inverse_image_hom,
    roundtrip,
    unit_iso_check,
)
from gdlab.frame import Frame
from gdlab.polarity import Polarity

SMALL = corpus(5, "M")


def collapse():
    # 0, a -> 0 and b, 1 -> 1 from the De Morgan 4-chain onto the 2-chain
    return hom_from_names(de_morgan_chain4(), reversal(2), {"0": "0", "a": "0", "b": "1", "1": "1"})


def embedding():
    return hom_from_names(reversal(2), boolean(2), [0, 3])


def test_identity_hom_gives_identity_morphism():
    lat = benzene()
    pi = dual_frame_morphism(identity_hom(lat))
    assert pi.p == tuple(range(pi.source.nx)) and pi.q == tuple(range(pi.source.ny))
    assert check_morphism_axioms(pi).all_passed()


@pytest.mark.parametrize("make", [collapse, embedding])
def test_named_homs_give_valid_morphisms(make):
    h = make()
    assert h.problems() == []
    pi = dual_frame_morphism(h)
    rep = check_morphism_axioms(pi)
    assert rep.all_passed(), rep.failed()
    back = inverse_image_hom(pi)
    assert back.problems() == []


def test_inverse_image_tables():
    assert inverse_image_hom(dual_frame_morphism(collapse())).map == (0, 0, 1, 1)
    assert inverse_image_hom(dual_frame_morphism(embedding())).map == (0, 3)


def test_inverse_image_of_identity():
    f = canonical_frame(de_morgan_chain4()).frame
    assert inverse_image_hom(identity_morphism(f)).map == (0, 1, 2, 3)


def test_invalid_hom_detected():
    h = LatticeHom(reversal(2), reversal(3), (0, 1))
    assert "top not preserved" in h.problems()
    with pytest.raises(HomInvalid):
        dual_frame_morphism(h)


def test_m2_counterexample():
    # source frame: full incidence into the middle Y; p constant onto a non-maximal point
    target = canonical_frame(de_morgan_chain4()).frame
    src_pol = Polarity(1, 1, (1,))
    source = Frame(src_pol, (0,))
    pi = FrameMorphism(source, target, (0,), (2,))
    rep = check_morphism_axioms(pi)
    assert not rep.ok("M2")
    w = rep.results["M2"].witness
    assert w["x"][0] == "Xt" and w["y_src"][0] == "Ys"


def test_composition():
    h = collapse()
    assert compose_homs(identity_hom(h.target), h).map == h.map
    pi = dual_frame_morphism(h)
    assert compose_morphisms(identity_morphism(pi.target), pi) == pi


def test_unit_and_counit_on_named():
    for lat in (de_morgan_chain4(), reversal(2), boolean(2)):
        assert unit_iso_check(lat)
        assert counit_iso_check(canonical_frame(lat).frame)


@pytest.mark.parametrize(
    "lat, variety, category",
    [
        (benzene(), "O", "nuO"),
        (boolean(3), "BA", "nuBA"),
        (trivial_nu(pentagon()), "G", "nuG"),
        (chain(3, [2, 2, 0]), "M", "nuM"),
    ],
)
def test_roundtrips(lat, variety, category):
    r = roundtrip(lat)
    assert r.passed
    assert r.variety == variety and r.frame_category == category
    assert r.double_dual_variety == variety


@given(st.sampled_from(SMALL))
def test_roundtrip_property(lat):
    assert roundtrip(lat).passed


@given(st.sampled_from(SMALL))
def test_unit_iso_property(lat):
    assert unit_iso_check(lat)
