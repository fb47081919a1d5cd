"""File formats and the command line surface."""

import json
import subprocess
import sys

import pytest

from leibnizalg import catalog, files
from leibnizalg.cli import main
from leibnizalg.cohomology import BilinearForm
from leibnizalg.linalg import Matrix


@pytest.fixture
def nf4_file(tmp_path):
    path = tmp_path / "nf4.json"
    files.write_algebra_file(path, catalog.make("NF", 4), name="NF")
    return str(path)


@pytest.fixture
def top_cocycle_file(tmp_path):
    path = tmp_path / "coc.json"
    files.write_cocycle_file(path, 4, (BilinearForm.singleton(4, 4, 1),))
    return str(path)


# ------------------------------------------------------------------ formats


def test_algebra_round_trip_bit_identical(tmp_path):
    a = catalog.make("F1param", 6, alpha6=1, theta="1/2")
    p1 = tmp_path / "a.json"
    p2 = tmp_path / "b.json"
    files.write_algebra_file(p1, a, name="X", params={"alpha6": 1, "theta": "1/2"})
    loaded, meta = files.read_algebra_file(p1)
    assert loaded.sc == a.sc
    assert meta["name"] == "X"
    files.write_algebra_file(p2, loaded, name=meta.get("name"), params=meta.get("params"))
    assert p1.read_bytes() == p2.read_bytes()


def test_brackets_serialized_sorted_and_exact():
    d = files.algebra_to_dict(catalog.make("NF", 3))
    assert [tuple((e["i"], e["j"], e["k"])) for e in d["brackets"]] == [(1, 1, 2), (2, 1, 3)]
    assert all(isinstance(e["c"], str) for e in d["brackets"])


def test_duplicate_brackets_rejected():
    payload = {"dim": 2, "brackets": [
        {"i": 1, "j": 1, "k": 2, "c": "1"},
        {"i": 1, "j": 1, "k": 2, "c": "2"},
    ]}
    with pytest.raises(files.FileFormatError, match="duplicate"):
        files.algebra_from_dict(payload)


def test_float_coefficients_rejected():
    payload = {"dim": 2, "brackets": [{"i": 1, "j": 1, "k": 2, "c": 0.5}]}
    with pytest.raises(files.FileFormatError):
        files.algebra_from_dict(payload)


def test_out_of_range_index_rejected():
    payload = {"dim": 2, "brackets": [{"i": 1, "j": 3, "k": 2, "c": "1"}]}
    with pytest.raises(files.FileFormatError):
        files.algebra_from_dict(payload)


def test_cocycle_round_trip(tmp_path):
    forms = (BilinearForm.singleton(4, 4, 1), BilinearForm.from_entries(4, {(1, 1): "2/3"}))
    path = tmp_path / "c.json"
    files.write_cocycle_file(path, 4, forms)
    dim, loaded = files.read_cocycle_file(path)
    assert dim == 4
    assert loaded == forms


def test_cocycle_duplicate_entry_rejected():
    payload = {"dim": 3, "k": 1, "entries": [
        {"t": 1, "i": 1, "j": 2, "c": "1"},
        {"t": 1, "i": 1, "j": 2, "c": "2"},
    ]}
    with pytest.raises(files.FileFormatError):
        files.forms_from_dict(payload)


def test_matrix_round_trip(tmp_path):
    m = Matrix([[1, "1/2"], [0, 3]])
    path = tmp_path / "m.json"
    files.write_matrix_file(path, m)
    assert files.read_matrix_file(path) == m


# ---------------------------------------------------------------- commands


def test_validate_ok(nf4_file, capsys):
    assert main(["validate", nf4_file]) == 0
    assert "satisfies" in capsys.readouterr().out


def test_validate_broken_exits_1(tmp_path, capsys):
    payload = files.algebra_to_dict(catalog.make("NF", 3))
    payload["brackets"].append({"i": 2, "j": 2, "k": 1, "c": "1"})
    bad = tmp_path / "bad.json"
    bad.write_text(files.dumps_canonical(payload))
    assert main(["validate", str(bad)]) == 1
    assert "FAIL" in capsys.readouterr().out


def test_validate_missing_file_exits_3(capsys):
    assert main(["validate", "no-such-file.json"]) == 3


def test_validate_garbage_json_exits_3(tmp_path):
    bad = tmp_path / "garbage.json"
    bad.write_text("{nope")
    assert main(["validate", str(bad)]) == 3


def test_invariants_json(nf4_file, capsys):
    assert main(["invariants", nf4_file, "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["lcs_dims"] == [4, 3, 2, 1, 0]
    assert data["shape"] == "null-filiform"
    assert data["charseq"] == [4]


def test_invariants_from_family(capsys):
    assert main(["invariants", "--family", "F2", "--n", "6", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["nilindex"] == 6


def test_invariants_non_nilpotent_exits_1(tmp_path, capsys):
    payload = {"dim": 2, "brackets": [{"i": 1, "j": 2, "k": 1, "c": "1"}]}
    path = tmp_path / "solv.json"
    path.write_text(files.dumps_canonical(payload))
    assert main(["invariants", str(path)]) == 1


def test_cohomology_json(capsys):
    assert main(["cohomology", "--family", "F1", "--n", "6", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert (data["cocycles"], data["coboundaries"], data["cohomology"]) == (8, 4, 4)


def test_extend_writes_canonical_file(nf4_file, top_cocycle_file, tmp_path, capsys):
    out = tmp_path / "ext.json"
    assert main(["extend", nf4_file, "--cocycle", top_cocycle_file, "--out", str(out)]) == 0
    capsys.readouterr()
    ext, meta = files.read_algebra_file(out)
    assert ext.dim == 5
    assert meta["name"] == "NF+ext1"
    assert main(["invariants", str(out), "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["nilindex"] == 6


def test_extend_dim_mismatch_exits_3(nf4_file, tmp_path):
    path = tmp_path / "c5.json"
    files.write_cocycle_file(path, 5, (BilinearForm.singleton(5, 5, 1),))
    assert main(["extend", nf4_file, "--cocycle", str(path)]) == 3


def test_extend_component_count_mismatch_exits_2(nf4_file, top_cocycle_file):
    assert main(["extend", nf4_file, "--cocycle", top_cocycle_file, "-k", "3"]) == 2


def test_extend_invalid_cocycle_exits_1(nf4_file, tmp_path):
    path = tmp_path / "badc.json"
    files.write_cocycle_file(path, 4, (BilinearForm.singleton(4, 1, 3),))
    assert main(["extend", nf4_file, "--cocycle", str(path)]) == 1


def test_split_check_json(nf4_file, top_cocycle_file, capsys):
    assert main(["split-check", nf4_file, "--cocycle", top_cocycle_file,
                 "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["class_rank"] == 1
    assert data["split"] is False
    assert data["witness"] is None


def test_iso_verify_roundtrip(tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    m = tmp_path / "m.json"
    files.write_algebra_file(a, catalog.make("NF", 3))
    files.write_algebra_file(b, catalog.make("NF", 3))
    files.write_matrix_file(m, Matrix.identity(3))
    assert main(["iso", "verify", str(a), str(b), str(m)]) == 0
    assert "isomorphism" in capsys.readouterr().out


def test_iso_verify_failure_exits_1(tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    m = tmp_path / "m.json"
    files.write_algebra_file(a, catalog.make("NF", 3))
    files.write_algebra_file(b, catalog.make("F1", 3))
    files.write_matrix_file(m, Matrix.identity(3))
    assert main(["iso", "verify", str(a), str(b), str(m)]) == 1


def test_iso_search_json(tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    files.write_algebra_file(a, catalog.make("NF", 4))
    files.write_algebra_file(b, catalog.make("F1", 4))
    assert main(["iso", "search", str(a), str(b), "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["status"] == "distinguished"


def test_catalog_list_mentions_every_family(capsys):
    assert main(["catalog", "list"]) == 0
    out = capsys.readouterr().out
    for fam in catalog.family_ids():
        assert fam in out


def test_catalog_make_with_params(tmp_path, capsys):
    out = tmp_path / "fp.json"
    assert main(["catalog", "make", "F1param", "--n", "6",
                 "--param", "alpha6=1/2,theta=3", "--out", str(out)]) == 0
    a, meta = files.read_algebra_file(out)
    assert a.dim == 6
    assert meta["params"] == {"alpha6": "1/2", "theta": "3"}


def test_catalog_make_unknown_family_exits_2(capsys):
    assert main(["catalog", "make", "BOGUS", "--n", "4"]) == 2


def test_catalog_make_bad_param_syntax_exits_2(capsys):
    assert main(["catalog", "make", "L1l", "--n", "6", "--param", "lam"]) == 2


def test_reproduce_unknown_id_exits_2(capsys):
    assert main(["reproduce", "9.9"]) == 2


def test_reproduce_smallest_experiment(capsys):
    assert main(["reproduce", "3.1", "--n", "3"]) == 0
    out = capsys.readouterr().out
    assert "result: PASS" in out


def test_module_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "leibnizalg.cli", "catalog", "list"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "NF" in proc.stdout
