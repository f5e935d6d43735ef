import json

import pytest

from semitop.cli import main


def run(capsys, *argv):
    code = main(list(map(str, argv)))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_describe_counts(capsys, corpus_dir):
    code, out, _ = run(capsys, "describe", corpus_dir / "f2sq.json", "--format", "text")
    assert code == 0 and "5 subsemimodules" in out
    code, out, _ = run(capsys, "describe", corpus_dir / "boolean.json", "--format", "text")
    assert "2 subsemimodules" in out
    code, out, _ = run(capsys, "describe", corpus_dir / "f2sq.json", "--dot")
    assert json.loads(out)["dot"].startswith("digraph")


def test_describe_broken_file(capsys, corpus_dir, tmp_path):
    d = json.loads((corpus_dir / "boolean.json").read_text())
    d["semiring"]["mul"][1][1] = "0"
    (tmp_path / "bad.json").write_text(json.dumps(d))
    code, _, err = run(capsys, "describe", tmp_path / "bad.json")
    assert code != 0 and "multiplicative identity" in err and "witness" in err


def test_topology_examples(capsys, corpus_dir):
    _, out, _ = run(capsys, "topology", corpus_dir / "f2sq.json", "--kind", "prime")
    rep = json.loads(out)
    assert (rep["t0"], rep["t1"], rep["sober"], rep["connectivity"]["connected"]) == (True, False, True, True)
    _, out, _ = run(capsys, "topology", corpus_dir / "f2sq.json", "--kind", "maximal", "--dot")
    rep = json.loads(out)
    assert rep["t1"] and not rep["connectivity"]["connected"] and rep["connectivity"]["basis_witness"]
    assert "dot" in rep
    _, out, _ = run(capsys, "topology", corpus_dir / "boolean.json", "--kind", "prime")
    assert json.loads(out)["points"] == ["{0}"]


def test_classify_text_table(capsys, corpus_dir):
    code, out, _ = run(capsys, "classify", corpus_dir / "f2sq.json", "--format", "text", "--kinds", "prime,maximal")
    lines = out.splitlines()
    assert code == 0 and lines[0].split()[0] == "kind" and lines[2].startswith("prime")


def test_maps_projection(capsys, corpus_dir):
    code, out, _ = run(
        capsys, "maps", corpus_dir / "f2sq.json", corpus_dir / "f2.json", corpus_dir / "maps" / "f2sq_first.json", "--kind", "prime"
    )
    rep = json.loads(out)
    assert code == 0 and rep["homeomorphism"]["image"] == ["{(0,0),(0,1)}"] and rep["density"]["dense"] is False


def test_verify_exit_codes_and_reproducible(capsys, tmp_path):
    argv = ["verify", "--corpus", "curated", "--kinds", "prime,maximal", "--claims", "t0,v"]
    code, out1, _ = run(capsys, *argv)
    assert code == 0
    _, out2, _ = run(capsys, *argv)
    assert out1 == out2
    code, _, _ = run(capsys, "verify", "--kinds", "minimal", "--claims", "t1", "--witness-dir", tmp_path / "w", "--out", tmp_path / "r.json")
    assert code == 1 and list((tmp_path / "w").glob("*.json"))
    assert json.loads((tmp_path / "r.json").read_text())["summary"]["status"]["fail"] > 0


def test_global_flags_before_or_after_verb(capsys, corpus_dir):
    code, _, err = run(capsys, "--max-module-size", "2", "describe", corpus_dir / "f2sq.json")
    assert code == 3 and "refused" in err
    code, _, err = run(capsys, "describe", corpus_dir / "f2sq.json", "--max-lattice", "3")
    assert code == 3


def test_mine(capsys):
    code, out, _ = run(capsys, "mine", "union_strict", "--kinds", "prime", "--limit", "1")
    assert code == 0 and len(json.loads(out)["witnesses"]) == 1


def test_unknown_flag_rejected():
    with pytest.raises(SystemExit):
        main(["describe", "x.json", "--bogus"])
