import json

import pytest

from arrlab.cli import EXIT_BUDGET, EXIT_FAIL, EXIT_OK, EXIT_USAGE, descriptor_from_args, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def files(tmp_path, capsys):
    def make(name, *argv):
        code, out, _ = run(capsys, "generate", *argv)
        assert code == EXIT_OK
        path = tmp_path / name
        path.write_text(out)
        return str(path)
    return make


def test_descriptor_from_args():
    assert descriptor_from_args("fermat", ["d=3", "p=7"]) == {
        "name": "fermat", "params": {"d": 3}, "field": {"kind": "finite", "p": 7, "k": 1}}
    assert descriptor_from_args("fermat_sub", ["d=3", "planes=1,4", "field=QQ"])["params"]["planes"] == [1, 4]


def test_generate_fermat_and_graphs(capsys):
    code, out, _ = run(capsys, "generate", "fermat", "d=3", "p=7")
    assert code == EXIT_OK and len(json.loads(out)["lines"]) == 27
    code, out, _ = run(capsys, "generate", "twenty_seven")
    assert code == EXIT_OK and json.loads(out)["vcount"] == 27


def test_generate_rejects_bad_parameters(capsys):
    code, _, err = run(capsys, "generate", "two_rulings", "m=0", "n=1", "p=7")
    assert code == EXIT_USAGE and "m >= 1" in err
    assert run(capsys, "generate", "nosuch")[0] == EXIT_USAGE
    assert run(capsys, "generate", "fermat", "d3")[0] == EXIT_USAGE


def test_analyze_eight_lines(files, capsys, tmp_path):
    path = files("e8.json", "example_eight")
    dot = tmp_path / "e8.dot"
    code, out, _ = run(capsys, "analyze", path, "--algebra", "--dot", str(dot))
    rep = json.loads(out)
    assert code == EXIT_OK
    assert (rep["graph"]["min_valency"], rep["graph"]["max_valency"]) == (3, 4)
    assert rep["algebra"]["regularity"] == 4 and rep["algebra"]["ci"] is True
    assert rep["planar_singularities"]["planar"] is False
    assert dot.read_text().startswith("graph {")


def test_analyze_is_byte_identical_without_meta(files, capsys):
    path = files("f3.json", "fermat_sub", "d=3", "planes=1,4", "p=7")
    first = run(capsys, "analyze", path, "--algebra")[1]
    assert first == run(capsys, "analyze", path, "--algebra")[1]
    assert "meta" not in json.loads(first)
    assert "meta" in json.loads(run(capsys, "analyze", path, "--meta")[1])


def test_analyze_fermat_four_and_budget(files, capsys):
    path = files("f4.json", "fermat", "d=4", "p=17")
    code, out, _ = run(capsys, "analyze", path)
    g = json.loads(out)["graph"]
    assert code == EXIT_OK and g["regular"] and g["max_valency"] == 14
    assert g["connectivity"] >= 14 and g["diameter"] <= g["diameter_bound"]
    code, out, _ = run(capsys, "analyze", path, "--algebra")
    rep = json.loads(out)
    assert code == EXIT_BUDGET
    assert rep["algebra"] == {"ci": None, "regularity": None, "predicted_valency": None, "link_degrees": None}


def test_analyze_descriptor_and_errors(tmp_path, capsys):
    desc = tmp_path / "d.json"
    desc.write_text(json.dumps({"name": "two_rulings", "params": {"m": 2, "n": 2},
                                "field": {"kind": "rational"}}))
    code, out, _ = run(capsys, "analyze", str(desc), "--algebra")
    assert code == EXIT_OK and json.loads(out)["algebra"]["predicted_valency"] == 2
    empty = tmp_path / "empty.json"
    empty.write_text("")
    assert run(capsys, "analyze", str(empty))[0] == EXIT_USAGE
    assert run(capsys, "analyze", str(tmp_path / "missing.json"))[0] == EXIT_USAGE


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "twenty-seven")
    assert code == EXIT_OK and out.startswith("[PASS]")
    code, out, _ = run(capsys, "verify", "fermat-small", "--json")
    rows = json.loads(out)[0]["rows"]
    assert code == EXIT_FAIL
    assert [r["check"] for r in rows if r["status"] == "FAIL"] == [
        "d=4: geometric dual graph equals rule graph label for label"]
    assert run(capsys, "verify", "nosuch")[0] == EXIT_USAGE


def test_nerve_commands(tmp_path, capsys):
    tri = tmp_path / "tri.json"
    tri.write_text(json.dumps({"n": 3, "facets": [[1, 2], [2, 3], [1, 3]]}))
    out = json.loads(run(capsys, "nerve", "roundtrip", str(tri))[1])
    assert out["nerve_equal"] and out["s_within_bounds"]
    sphere = tmp_path / "sphere.json"
    sphere.write_text(json.dumps({"n": 4, "facets": [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]}))
    assert json.loads(run(capsys, "nerve", "homology", str(sphere))[1])["reduced_betti"] == [0, 0, 1]
    simplex = tmp_path / "simplex.json"
    simplex.write_text(json.dumps({"n": 3, "facets": [[1, 2, 3]]}))
    assert json.loads(run(capsys, "nerve", "skeleton", str(simplex))[1])["edges"] == [[0, 1], [0, 2], [1, 2]]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"n": 2, "facets": [[1, 3]]}))
    assert run(capsys, "nerve", "homology", str(bad))[0] == EXIT_USAGE


def test_export_dot(files, capsys):
    path = files("tr.json", "two_rulings", "m=1", "n=2", "p=7")
    code, out, _ = run(capsys, "export-dot", path)
    assert code == EXIT_OK and out.count(" -- ") == 2


def test_usage_errors(capsys):
    assert run(capsys)[0] == EXIT_USAGE
    assert run(capsys, "--help")[0] == EXIT_OK
