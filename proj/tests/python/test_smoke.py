import json
from pathlib import Path

import pytest

import hsr

DATA = Path(__file__).resolve().parents[1] / "data"


def load(name):
    return json.loads((DATA / name).read_text())


def test_validate():
    assert hsr.validate(load("u24.json"))["passed"]
    report = hsr.validate(load("broken.json"))
    assert not report["passed"]
    failed = [c for c in report["checks"] if not c["passed"]]
    assert failed[0]["detail"].startswith("not meet-closed")


def test_represent_u24():
    out = hsr.represent(load("u24.json"))
    assert out["flag"] == [[], ["1"], ["1", "2", "3", "4"]]
    bottom = out["complexes"][0]
    assert bottom["flat"] == []
    assert len(bottom["maximal_faces"]) == 4
    assert all(len(f) == 4 for f in bottom["maximal_faces"])
    for entry in out["complexes"][1:5]:
        assert len(entry["vertices"]) == 2
        assert {v["sign"] for v in entry["vertices"]} == {"+", "-"}


def test_represent_with_flag():
    flag = load("flag_u34_b.json")
    out = hsr.represent(load("u34.json"), flag)
    assert out["flag"][1] == ["3"]


def test_verify():
    report = hsr.verify(load("fano_gf2.json"), exact_nerve=True)
    assert report["passed"], [c for c in report["checks"] if not c["passed"]]


def test_homology_projective_plane():
    faces = load("rp2.json")["maximal_faces"]
    dims = hsr.homology(faces)["dims"]
    assert dims[1] == {"d": 1, "betti": 0, "torsion": ["2"]}


def test_covectors():
    out = hsr.covectors(load("coord2.json"))
    assert out["count"] == 9
    assert len(out["cocircuits"]) == 4


def test_weak_maps():
    assert hsr.weak_map(load("u34.json"), load("n134.json"))["weak_map"]
    back = hsr.weak_map(load("n134.json"), load("u34.json"))
    assert not back["weak_map"]
    assert back["rank_witnesses"][0]["subset"] == ["1", "3", "4"]
    cov = hsr.weak_map(load("rank2_general.json"), load("rank2_special.json"))
    assert cov["weak_map"] and cov["underlying_weak_map"]


def test_poset_map_search():
    none = hsr.poset_map_search(load("u34.json"), load("n134.json"))
    assert none["status"] == "none"
    faces = [o["face"] for o in none["minimal_obstructions"]]
    assert ["{1,4}-", "{3,4}+"] in faces
    found = hsr.poset_map_search(load("u34.json"), load("u34.json"))
    assert found["found"] and found["map"]["{1,2}+"] == "{1,2}+"
    capped = hsr.poset_map_search(load("u34.json"), load("n134.json"), max_assignments=5)
    assert capped["status"] == "cap-exceeded"


def test_compare_flags():
    out = hsr.compare_flags(load("u34.json"), load("flag_u34_a.json"), load("flag_u34_b.json"))
    assert out["passed"]
    assert out["selection"][0] == {"coatom": ["3", "4"], "first_part": 0, "second_part": 2}


def test_input_errors():
    with pytest.raises(hsr.InputError):
        hsr.represent(load("u34.json"), load("flag_incomplete.json"))
    with pytest.raises(ValueError):
        hsr.validate({"format": "wheel"})
