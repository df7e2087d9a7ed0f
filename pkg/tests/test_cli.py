import json

import pytest

from z2kgray.cli import main

SPECS = {
    "z6_span2": {"blocks": [{"modulus": 6, "length": 1}], "generators": [[2]]},
    "z6_span3": {"blocks": [{"modulus": 6, "length": 1}], "generators": [[3]]},
    "z6_full": {"blocks": [{"modulus": 6, "length": 1}], "generators": [[1]]},
    "z4_full": {"blocks": [{"modulus": 4, "length": 1}], "generators": [[1]]},
    "z4sq": {"blocks": [{"modulus": 4, "length": 2}], "generators": [[1, 2]]},
    "z6_tail": {"blocks": [{"modulus": 6, "length": 1}, {"modulus": 2, "length": 4}],
                "generators": [[int(i == p) for i in range(5)] for p in range(5)]},
    "big": {"blocks": [{"modulus": 6, "length": 9}],
            "generators": [[int(i == p) for i in range(9)] for p in range(9)]},
}


@pytest.fixture
def spec_file(tmp_path):
    def make(name):
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps(SPECS[name]))
        return str(path)
    return make


@pytest.fixture
def run(capsys):
    def invoke(*argv):
        code = main(list(argv))
        out = capsys.readouterr()
        return code, out.out, out.err
    return invoke


def as_json(run, *argv):
    code, out, _ = run(*argv, "--json", "--seed", "0", "--threads", "1")
    return code, json.loads(out), out


def test_gray_table_text(run):
    assert run("gray", "--k", "2") == (0, "0:00 0\n1:01 1\n2:11 2\n3:10 1\n", "")
    assert run("gray", "--k", "1")[1] == "0:0 0\n1:1 1\n"
    assert "4:110 2\n" in run("gray", "--k", "3")[1]


def test_gray_invalid_k(run):
    assert run("gray", "--k", "0")[0] == 2
    assert run("gray", "--k", "17")[0] == 2


def test_map_unmap(run):
    assert run("map", "--k", "2", "--vector", "1,2")[:2] == (0, "0111\n")
    assert run("unmap", "--k", "2", "--bits", "1001")[:2] == (0, "3,1\n")
    code, out, err = run("unmap", "--k", "3", "--bits", "010")
    assert code == 3 and "not in image" in out + err
    assert run("map", "--k", "2", "--vector", "1,x")[0] == 2
    assert run("map", "--k", "2", "--vector", "1,4")[0] == 2
    assert run("unmap", "--k", "2", "--bits", "102")[0] == 2
    assert run("unmap", "--k", "2", "--bits", "101")[0] == 2


def test_analyze(run, spec_file):
    code, doc, _ = as_json(run, "analyze", spec_file("z6_span2"))
    v = doc["values"]
    assert code == 0 and v["N"] == 3 and v["min_lee_distance"] == 2 and v["min_hamming_distance"] == 2
    assert round(v["R"], 4) == 0.6131 and round(v["R_prime"], 4) == 0.5283
    assert doc["notes"]  # evenness rule fired
    _, doc, _ = as_json(run, "analyze", spec_file("z6_span3"))
    assert doc["values"]["minimized_type"] == "Z2^1"
    _, doc, _ = as_json(run, "analyze", spec_file("z4_full"))
    assert doc["values"]["R"] == doc["values"]["R_prime"] == 1.0


def test_malformed_spec(run, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"blocks": [{"modulus": 5, "length": 1}], "generators": [[1]]}')
    assert run("analyze", str(bad))[0] == 2
    bad.write_text("not json")
    assert run("verify", str(bad), "--property", "hamming")[0] == 2
    bad.write_text('{"blocks": [{"modulus": 4, "length": 2}], "generators": [[1]]}')
    assert run("perfect", str(bad))[0] == 2
    assert run("analyze", str(tmp_path / "missing.json"))[0] == 2


def test_size_cap(run, spec_file):
    assert run("analyze", spec_file("big"), "--size-limit", "1000")[0] == 4


def test_verify(run, spec_file):
    code, doc, _ = as_json(run, "verify", spec_file("z6_full"), "--property", "translation")
    assert code == 1 and doc["verdict"] is False
    assert doc["witnesses"][0]["u"] == "101"
    assert doc["witnesses"][0]["d(x,y)"] == 1 and doc["witnesses"][0]["d(x*u,y*u)"] == 3
    code, _, _ = as_json(run, "verify", spec_file("z6_full"), "--property", "translation", "--expect", "false")
    assert code == 0
    for name in ("z6_span2", "z6_span3", "z6_full", "z4sq", "z6_tail"):
        code, doc, _ = as_json(run, "verify", spec_file(name), "--property", "propelinear")
        assert code == 0 and doc["verdict"] is True
    code, doc, _ = as_json(run, "verify", spec_file("z4sq"), "--property", "hamming")
    assert code == 0 and doc["values"]["exhaustive"] and doc["values"]["checked"] == 64


def test_verify_sampled_records_seed(run, spec_file):
    _, doc, _ = as_json(run, "verify", spec_file("z6_tail"), "--property", "hamming",
                        "--exhaustive-limit", "16")
    assert doc["seed"] == 0 and doc["values"]["exhaustive"] is False


def test_perfect(run, spec_file):
    code, doc, _ = as_json(run, "perfect", spec_file("z6_span3"))
    assert code == 0 and doc["verdict"] is True and doc["values"]["minimized_type"] == "Z2^1"
    code, doc, _ = as_json(run, "perfect", spec_file("z6_tail"))
    assert doc["verdict"] is False
    obstruction = doc["witnesses"][-1]["obstruction"]
    assert obstruction["witnesses"]["u"] == "1011000" and obstruction["witnesses"]["v"] == "1010100"
    assert obstruction["certificate"]["words"] == ["1111000", "1110100"]
    code, doc, _ = as_json(run, "perfect", "--hamming", "3", "--scan")
    assert code == 0 and doc["verdict"] is True and doc["values"]["covering_radius_checked"]
    assert run("perfect")[0] == 2
    assert run("perfect", "--hamming", "9")[0] == 2


def test_search(run):
    code, out, _ = run("search", "--r", "4", "--m", "2", "--orbits")
    assert code == 0 and out.startswith("total=8 compatible=2 orbits=1")
    assert run("search", "--r", "3", "--m", "3")[1] == "total=0\n"
    code, doc, _ = as_json(run, "search", "--r", "6", "--m", "3", "--compatible-only")
    assert doc["values"]["compatible"] == 6 and len(doc["witnesses"]) == 6
    assert doc["values"]["all_coordinate_permutations_of_standard"] is True
    assert run("search", "--r", "13", "--m", "3")[0] == 2
    assert run("search", "--r", "4", "--m", "7")[0] == 2


def test_threads_flag(run):
    assert run("gray", "--k", "2", "--threads", "0")[0] == 2


def test_json_is_byte_stable(run, spec_file):
    for argv in (["gray", "--k", "3"], ["analyze", spec_file("z6_span2")],
                 ["verify", spec_file("z6_full"), "--property", "translation"],
                 ["perfect", spec_file("z6_tail")], ["search", "--r", "6", "--m", "3", "--orbits"]):
        first = as_json(run, *argv)[2]
        assert first == as_json(run, *argv)[2]
        doc = json.loads(first)
        assert {"command", "input_digest", "values", "witnesses", "notes"} <= set(doc)
