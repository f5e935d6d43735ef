import os

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semitop import _kernels_py as py
from semitop import kernels
from semitop.errors import CapExceeded

from strategies import structure_and_subset, structures

native = pytest.importorskip("semitop._kernels")


def test_backend_selection():
    expected = "python" if os.environ.get("SEMITOP_PURE") == "1" else "cython"
    assert kernels.BACKEND == expected


@given(structure_and_subset())
def test_closure_backends_agree(case):
    _, M, seed = case
    args = (M.flat_add, M.flat_action, len(M), len(M.ring), M.zero, seed)
    assert native.closure(*args) == py.closure(*args)


@given(structures())
@settings(max_examples=60)
def test_subsemimodules_backends_agree(case):
    _, M = case
    args = (M.flat_add, M.flat_action, len(M), len(M.ring), M.zero, 4096)
    assert sorted(native.subsemimodules(*args)) == sorted(py.subsemimodules(*args))


families = st.lists(st.integers(0, (1 << 10) - 1), max_size=8)


@given(families)
def test_union_closure_backends_agree(masks):
    assert sorted(native.union_closure(masks, 1 << 20)) == sorted(py.union_closure(masks, 1 << 20))


@given(families)
def test_intersection_closure_backends_agree(masks):
    full = (1 << 10) - 1
    assert sorted(native.intersection_closure(masks, full, 1 << 20)) == sorted(py.intersection_closure(masks, full, 1 << 20))


@given(st.lists(st.integers(0, 255), max_size=10), st.lists(st.integers(0, 255), max_size=10))
def test_up_masks_backends_agree(subs, points):
    assert list(native.up_masks(subs, points)) == list(py.up_masks(subs, points))


@given(families)
def test_union_closure_is_closed_and_minimal(masks):
    fam = set(py.union_closure(masks, 1 << 20))
    assert 0 in fam and set(masks) <= fam
    assert all(a | b in fam for a in fam for b in fam)


@pytest.mark.parametrize("mod", [native, py])
def test_caps_raise(mod):
    with pytest.raises(CapExceeded):
        mod.union_closure([1 << i for i in range(12)], 100)
