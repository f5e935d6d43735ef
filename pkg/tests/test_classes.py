import pytest
from hypothesis import given

from semitop.algebra import self_module, trunc_nat, vector_module, zmod
from semitop.classes import KINDS, classify_matrix, is_in_class, prime_to_set, select_class
from semitop.lattice import lattice_of

import oracles
from strategies import STRUCTURES, structures


@pytest.mark.parametrize("name,M", STRUCTURES, ids=[n for n, _ in STRUCTURES])
def test_membership_matches_literal_definitions(name, M):
    family = oracles.subs(M)
    lat = lattice_of(M)
    for N in family:
        for kind in KINDS:
            got = bool(is_in_class(oracles.to_mask(N), kind, lat))
            assert got == oracles.member(M, N, kind, family), (name, sorted(N), kind)


def labels(kind, M):
    lat = lattice_of(M)
    return [lat.label(i) for i in select_class(kind, lat).points]


def test_f2_squared_classes():
    M = vector_module(zmod(2), 2)
    lines = ["{(0,0),(0,1)}", "{(0,0),(1,0)}", "{(0,0),(1,1)}"]
    assert labels("maximal", M) == lines
    assert labels("prime", M) == ["{(0,0)}"] + lines
    assert labels("minimal", M) == lines
    assert labels("strong", M) == []


def test_truncated_naturals_classes():
    M = self_module(trunc_nat(3))
    assert labels("maximal", M) == ["{0,2,3}"]
    assert labels("subtractive", M) == ["{0}"]
    assert labels("minimal_prime", M) == []


def test_points_never_include_the_module():
    for _, M in STRUCTURES[:9]:
        lat = lattice_of(M)
        for kind in KINDS:
            assert lat.top not in select_class(kind, lat).masks


def test_prime_to_set():
    M = self_module(zmod(4))
    lat = lattice_of(M)
    two = M.mask_from_labels(["0", "2"])
    # scalars r with r*m in {0,2} forcing m in {0,2}: the units 1 and 3
    assert prime_to_set(two, lat) == 0b1010


@given(structures())
def test_kind_implications(case):
    _, M = case
    lat = lattice_of(M)
    mat = classify_matrix(lat)
    for i in range(len(lat)):
        if mat["maximal"][i]:
            assert mat["proper"][i] and mat["irreducible"][i]
        if mat["prime"][i]:
            assert mat["primary"][i] and mat["weakly_prime"][i] and mat["semiprime"][i]
        if mat["minimal_prime"][i]:
            assert mat["minimal"][i] and mat["prime"][i]
        if mat["completely_irreducible"][i]:
            assert mat["irreducible"][i]
        if mat["cyclic"][i]:
            assert mat["finitely_generated"][i]
        assert mat["finitely_generated"][i]  # finite modules


def test_membership_witness_on_failure():
    M = vector_module(zmod(2), 2)
    lat = lattice_of(M)
    res = is_in_class(lat.bottom, "maximal", lat)
    assert not res and res.witness
