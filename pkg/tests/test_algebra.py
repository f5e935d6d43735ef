import pytest
from hypothesis import given

from semitop.algebra import (
    Homomorphism,
    Semimodule,
    Semiring,
    boolean,
    enumerate_ideals,
    identity_map,
    is_ideal,
    make_standard,
    product,
    projection,
    quotient_bourne,
    self_module,
    submodule,
    subtractive_closure,
    trunc_nat,
    vector_module,
    verify_homomorphism,
    verify_semimodule,
    verify_semiring,
    zero_map,
    zmod,
)
from semitop.errors import AxiomError, StructureError

import oracles
from strategies import structure_and_subset


def test_boolean_semiring_ok():
    B = boolean()
    assert verify_semiring(B)
    assert B.add[1][1] == 1


def test_truncated_naturals_ok_and_saturating():
    N3 = trunc_nat(3)
    assert verify_semiring(N3)
    assert N3.elements == ("0", "1", "2", "3")
    assert N3.add[2][2] == 3 and N3.mul[2][2] == 3


def test_broken_identity_reports_axiom_and_witness():
    B = boolean()
    rep = verify_semiring(Semiring(B.elements, B.add, ((0, 0), (0, 0)), 0, 1))
    assert not rep
    assert rep.axiom == "multiplicative identity"
    assert rep.witness == (1,)


def test_structural_errors_are_distinct():
    with pytest.raises(StructureError):
        Semiring(("0", "1"), ((0, 1),), ((0, 0), (0, 1)), 0, 1)
    with pytest.raises(StructureError):
        Semiring(("0", "1"), ((0, 1), (1, 2)), ((0, 0), (0, 1)), 0, 1)
    assert not issubclass(StructureError, AxiomError)


def test_semimodule_axiom_iv_violation():
    M = vector_module(zmod(2), 2)
    rep = verify_semimodule(Semimodule(M.ring, M.elements, M.add, 0, ((0,) * 4, (0,) * 4)))
    assert not rep and "(iv)" in rep.axiom


@pytest.mark.parametrize(
    "family,params,size",
    [("boolean", (), 2), ("trunc_nat", (3,), 4), ("zmod", (6,), 6), ("vector_module", (zmod(2), 3), 8)],
)
def test_make_standard(family, params, size):
    assert len(make_standard(family, *params)) == size


def test_make_standard_rejects_bad_parameters():
    with pytest.raises(ValueError):
        make_standard("zmod", 1)
    with pytest.raises(ValueError):
        make_standard("nope")


def test_product_ring():
    R = product(boolean(), zmod(2))
    assert len(R) == 4 and verify_semiring(R)


def test_ideals_of_small_semirings():
    assert sorted(enumerate_ideals(boolean())) == [0b01, 0b11]
    assert sorted(enumerate_ideals(zmod(4))) == [0b0001, 0b0101, 0b1111]
    assert is_ideal(zmod(4), 0b0101) and not is_ideal(zmod(4), 0b0011)


@given(structure_and_subset())
def test_bourne_quotient_matches_congruence_closure(case):
    _, M, seed = case
    N = M.generate(seed)
    Q, pi = quotient_bourne(M, N)
    assert verify_semimodule(Q) and verify_homomorphism(pi)
    ours = {frozenset(x for x in range(len(M)) if pi.table[x] == c) for c in range(len(Q))}
    assert ours == oracles.bourne_partition(M, oracles.from_mask(N))
    assert pi.kernel() == subtractive_closure(M, N)


def test_quotient_by_absorbing_element_collapses():
    M = self_module(trunc_nat(3))
    Q, _ = quotient_bourne(M, M.mask_from_labels(["0", "3"]))
    assert len(Q) == 1


def test_homomorphism_constructors():
    M = vector_module(zmod(2), 2)
    p = projection(M, 2, [0])
    assert verify_homomorphism(p) and p.is_surjective() and not p.is_injective()
    assert M.label_set(p.kernel()) == ["(0,0)", "(0,1)"]
    assert verify_homomorphism(identity_map(M)) and verify_homomorphism(zero_map(M, M))
    sub, inc = submodule(M, M.mask_from_labels(["(0,0)", "(1,1)"]))
    assert len(sub) == 2 and inc.is_injective() and verify_homomorphism(inc)


def test_non_homomorphism_detected():
    M = self_module(zmod(3))
    assert not verify_homomorphism(Homomorphism(M, M, (0, 1, 1)))
