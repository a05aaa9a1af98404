"""Command-line interface: exit codes, document round trips, determinism."""

import json

import pytest

import families as fam
from thma import documents as docs
from thma.cli import main
from thma.core import validate_category
from thma.simplicial import nerve


@pytest.fixture()
def workspace(tmp_path):
    two = fam.walking_arrow()
    cat = tmp_path / "two.json"
    cat.write_text(docs.canonical_json(docs.category_to_doc(two)))
    pt = tmp_path / "pt.json"
    from thma.core import disc
    pt.write_text(docs.canonical_json(docs.category_to_doc(disc(("*",)))))
    sel = tmp_path / "sel.json"
    sel.write_text(json.dumps({
        "format": "functor/1", "dom_file": "pt.json", "cod_file": "two.json",
        "obj_map": {"*": "1"}, "mor_map": {"*": "le(1,1)"}}))
    cover = tmp_path / "cover.json"
    cover.write_text(json.dumps({
        "format": "cover/1", "base": ["1", "2"],
        "pieces": {"U": ["1", "2"], "V": ["2"]}}))
    surj = tmp_path / "surj.json"
    surj.write_text(json.dumps({
        "format": "surjection/1", "map": {"a": "0", "b": "0", "c": "1"}}))
    return tmp_path


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_validate_ok(workspace, capsys):
    code, out = run(capsys, "validate", str(workspace / "two.json"))
    assert code == 0
    assert json.loads(out)["results"]["valid"] is True


def test_validate_rejects_broken_category(workspace, capsys, tmp_path):
    doc = json.loads((workspace / "two.json").read_text())
    doc["composition"] = [c for c in doc["composition"]
                          if c[2] != "le(0,1)"][:2]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    code, out = run(capsys, "validate", str(bad))
    assert code == 1
    assert json.loads(out)["results"]["violations"]


def test_parse_error_exit_code(tmp_path, capsys):
    p = tmp_path / "junk.json"
    p.write_text("{not json")
    assert main(["validate", str(p)]) == 2
    q = tmp_path / "wrong.json"
    q.write_text(json.dumps({"format": "nope/1"}))
    assert main(["homology", str(q)]) == 2


def test_budget_exit_code(workspace, capsys):
    assert main(["homology", str(workspace / "two.json"),
                 "--budget", "2"]) == 3


def test_build_constructions_roundtrip(workspace, capsys, tmp_path):
    for kind, expected in (("T", (3, 4)), ("Top", (3, 4)),
                           ("twisted", (3, 5))):
        out_file = tmp_path / f"{kind}.json"
        code, out = run(capsys, "build", kind, str(workspace / "two.json"),
                        "-o", str(out_file))
        assert code == 0
        built = docs.category_from_doc(json.loads(out_file.read_text()))
        assert (len(built.objects), len(built.morphisms)) == expected
        assert validate_category(built).ok


def test_build_fatten_and_validate_output(workspace, capsys, tmp_path):
    out_file = tmp_path / "fat.json"
    code, out = run(capsys, "build", "fatten", str(workspace / "two.json"),
                    str(workspace / "surj.json"), "-o", str(out_file))
    assert code == 0
    fat = docs.category_from_doc(json.loads(out_file.read_text()))
    assert (len(fat.objects), len(fat.morphisms)) == (3, 7)


def test_build_diag_emits_simplicial_document(workspace, capsys, tmp_path):
    out_file = tmp_path / "diag.json"
    code, _ = run(capsys, "build", "diag", str(workspace / "sel.json"),
                  "--trunc", "3", "-o", str(out_file))
    assert code == 0
    X = docs.sset_from_doc(json.loads(out_file.read_text()))
    assert X.trunc == 3


def test_homology_of_sset_document(workspace, capsys, tmp_path):
    X = nerve(fam.cyclic_group_category(2), 4)
    p = tmp_path / "bz2.json"
    p.write_text(docs.canonical_json(docs.sset_to_doc(X)))
    code, out = run(capsys, "homology", str(p))
    assert code == 0
    degrees = json.loads(out)["results"]["homology"]["degrees"]
    assert degrees["1"] == {"betti": 0, "torsion": [2], "certified": True}


def test_check_exit_codes(workspace, capsys):
    assert main(["check", "a", str(workspace / "sel.json")]) == 0
    capsys.readouterr()
    assert main(["check", "morita", str(workspace / "sel.json")]) == 4
    capsys.readouterr()
    assert main(["check", "cover", str(workspace / "cover.json")]) == 0


def test_export_dot(workspace, capsys):
    code, out = run(capsys, "export-dot", str(workspace / "two.json"))
    assert code == 0
    assert out.startswith("digraph") and '"0" -> "1"' in out


def test_reports_are_deterministic(workspace, capsys):
    _, first = run(capsys, "homology", str(workspace / "two.json"))
    _, second = run(capsys, "homology", str(workspace / "two.json"))
    assert first == second


def test_reports_survive_input_shuffling(workspace, capsys, tmp_path):
    doc = json.loads((workspace / "two.json").read_text())
    doc["morphisms"].reverse()
    doc["objects"].reverse()
    doc["composition"].reverse()
    shuffled = tmp_path / "shuffled.json"
    shuffled.write_text(json.dumps(doc))
    _, a = run(capsys, "homology", str(workspace / "two.json"))
    _, b = run(capsys, "homology", str(shuffled))
    ja, jb = json.loads(a), json.loads(b)
    assert ja["inputs"] == jb["inputs"]
    assert ja["results"] == jb["results"]
