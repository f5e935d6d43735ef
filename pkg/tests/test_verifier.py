import json

from semitop.algebra import boolean, self_module, trunc_nat, vector_module, zmod
from semitop.corpus import Corpus, homomorphisms
from semitop.io import structure_from_dict
from semitop.sweep import SweepSpec, semimodules, semirings, sweep
from semitop.verifier import (
    QUERIES,
    REGISTRY,
    mine_counterexamples,
    report_json,
    resolve_claims,
    run_theorem_suite,
    write_witnesses,
)

F2SQ = vector_module(zmod(2), 2)
CLAIM_IDS = {
    "v.antitone", "v.generated", "v.extremes", "v.sum", "v.meet_union", "v.radical", "v.radical_equality",
    "omega.extensive", "omega.fixes_points", "omega.same_v", "omega.order",
    "scc.needs_maximal", "scc.finite_converse",
    "t0", "point_closure", "proper.subbasis_irreducible", "t1.iff_maximal",
    "sober.generic_is_omega", "sober.per_set", "sober.global", "sober.selection", "sober.corollary",
    "sober.strongly_irreducible",
    "connected.zero_point", "connected.corollary", "basis.intersection_closed", "disconnected.iff_basis",
    "map.continuous", "map.homeomorphism", "map.density", "map.quotient", "map.identities",
}


def test_registry_covers_every_claim():
    assert set(REGISTRY) == CLAIM_IDS
    for c in REGISTRY.values():
        assert c.statement and callable(c.check) and c.scope in ("space", "map")


def test_resolve_claims_prefixes():
    assert set(resolve_claims("omega")) == {c for c in CLAIM_IDS if c.startswith("omega.")}
    assert resolve_claims("t0") == ["t0"]


def test_sweep_counts():
    assert [len(list(semirings(k))) for k in (2, 3)] == [2, 6]
    assert len(list(sweep(SweepSpec()))) == 16
    assert len(list(sweep(SweepSpec.parse("r<=3,m<=3")))) == 46
    for R in semirings(2):
        assert len(list(semimodules(R, 1))) == 1


def test_one_point_space_all_pass():
    rows = run_theorem_suite(Corpus([("B", self_module(boolean()))]), kinds=["prime"])
    assert rows and all(r.status == "pass" for r in rows if r.hom is None)


def test_reports_are_deterministic_across_workers():
    corpus = Corpus([("F2^2", F2SQ), ("Z4", self_module(zmod(4)))])
    a = report_json(run_theorem_suite(corpus, kinds=["prime", "maximal", "minimal"]))
    b = report_json(run_theorem_suite(corpus, kinds=["prime", "maximal", "minimal"], jobs=2))
    assert a == b


def test_caps_mark_rows_skipped():
    rows = run_theorem_suite(Corpus([("F2^3", vector_module(zmod(2), 3))]), kinds=["prime"], claims="t0", max_lattice=4)
    assert [r.status for r in rows] == ["skipped"]


def test_union_strict_witness():
    res = mine_counterexamples(Corpus([("F2^2", F2SQ)]), "union_strict", kinds=["prime"])
    w = res.witnesses[0]
    assert w["N"] == ["(0,0)", "(0,1)"] and w["K"] == ["(0,0)", "(1,0)"]
    assert w["V(N)|V(K)"] == ["{(0,0),(0,1)}", "{(0,0),(1,0)}"]
    assert w["V(N&K)"] == ["{(0,0)}", "{(0,0),(0,1)}", "{(0,0),(1,0)}", "{(0,0),(1,1)}"]


def test_subbasis_no_strong_disconnect():
    res = mine_counterexamples(Corpus([("F2^2", F2SQ)]), "subbasis_no_strong_disconnect", kinds=["maximal"])
    assert len(res.witnesses) == 1


def test_non_sober_certified_none_in_sweep():
    res = mine_counterexamples(Corpus.default(with_sweep=True), "non_sober")
    assert res.witnesses == [] and res.exhausted and res.skipped == 0 and res.searched > 0


def test_every_query_runs():
    for q in QUERIES:
        res = mine_counterexamples(Corpus([("N3", self_module(trunc_nat(3)))]), q)
        assert res.searched > 0


def test_witness_files_replay(tmp_path):
    corpus = Corpus([("B^2", vector_module(boolean(), 2))])
    rows = run_theorem_suite(corpus, kinds=["prime"], claims="map.homeomorphism")
    fails = [r for r in rows if r.status == "fail"]
    assert fails
    paths = write_witnesses(rows, corpus, tmp_path)
    doc = json.loads(paths[0].read_text())
    M = structure_from_dict(doc["structure"])
    hom = {h.name: h.hom for h in homomorphisms(M)}[doc["hom"]]
    assert [[M.elements[x], hom.target.elements[y]] for x, y in enumerate(hom.table)] == doc["map"]
    again = run_theorem_suite(Corpus([("B^2", M)]), kinds=[doc["kind"]], claims=doc["claim"])
    assert any(r.status == "fail" and r.hom == doc["hom"] for r in again)
