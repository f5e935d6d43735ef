import pytest

from semitop.algebra import Homomorphism, boolean, projection, self_module, vector_module, zmod
from semitop.corpus import homomorphisms
from semitop.errors import ContractionError
from semitop.maps import check_contraction, continuity_check, density_check, pullback, report, surjective_homeo_check

F2SQ = vector_module(zmod(2), 2)


def test_projection_f2_squared_to_f2():
    pm = pullback(projection(F2SQ, 2, [0]), "prime")
    h = surjective_homeo_check(pm)
    assert F2SQ.label_set(pm.hom.kernel()) == ["(0,0)", "(0,1)"]
    assert pm.target_space.set_labels(h.onto) == ["{(0,0),(0,1)}"]
    assert h.homeomorphic
    d = density_check(pm)
    assert not d.dense and not d.criterion and d.biconditional


def test_continuity_certificate_is_exact():
    for nh in homomorphisms(F2SQ):
        for kind in ("prime", "maximal", "proper"):
            if check_contraction(nh.hom, kind):
                res = continuity_check(pullback(nh.hom, kind))
                assert res.continuous and all(a == b for a, b in res.certificate.values())


def test_identity_is_dense_homeomorphism():
    M = self_module(zmod(6))
    nh = homomorphisms(M)[0]
    pm = pullback(nh.hom, "prime")
    assert surjective_homeo_check(pm).homeomorphic and density_check(pm).dense


def test_contraction_failure_raises():
    # x -> (x, x) pulls the line {(0,0),(0,1)} back to {0}, which is not maximal in Z2
    M = self_module(zmod(2))
    diag = Homomorphism(M, F2SQ, (0, 3))
    assert not check_contraction(diag, "maximal")
    with pytest.raises(ContractionError):
        pullback(diag, "maximal")


def test_homeo_check_needs_surjection():
    M = self_module(zmod(2))
    inc = Homomorphism(M, F2SQ, (0, 3))
    pm = pullback(inc, "strong")  # empty class on F2^2: contraction holds vacuously
    with pytest.raises(ValueError):
        surjective_homeo_check(pm)


def test_boolean_square_projection_is_not_onto_v_kernel():
    # a genuine counterexample: a subsemimodule above the kernel need not be a preimage
    B2 = vector_module(boolean(), 2)
    pm = pullback(projection(B2, 2, [0]), "prime")
    h = surjective_homeo_check(pm)
    assert h.onto != h.v_kernel and not h.homeomorphic and not h.closed_map
    assert "{(0,0),(0,1),(1,1)}" in pm.target_space.set_labels(h.v_kernel)


def test_report_shape():
    rep = report(pullback(projection(F2SQ, 2, [0]), "prime"))
    assert set(rep) == {"kind", "contraction", "pullback", "continuity", "homeomorphism", "density"}
    assert rep["density"]["dense"] is False
