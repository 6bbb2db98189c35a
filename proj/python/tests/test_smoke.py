import json
import os
from pathlib import Path

import pytest

import cutmatch

DATA = Path(os.environ.get("CUTMATCH_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))
C17 = DATA / "iscas85" / "c17.bench"


@pytest.fixture(scope="module")
def c17():
    return cutmatch.Netlist.read(C17)


def test_read_and_round_trip(c17):
    assert c17.design == "c17"
    assert c17.num_gates == 6
    assert len(c17.inputs) == 5 and len(c17.outputs) == 2
    assert c17.validate() == []
    again = cutmatch.Netlist.from_bench(c17.to_bench(), design="c17")
    assert again == c17


def test_parse_error_is_raised():
    with pytest.raises(cutmatch.Error):
        cutmatch.Netlist.from_bench("OUTPUT(z)\nz = FOO(a)\n")


def test_lock_and_label(c17):
    locked, key = cutmatch.lock(c17, "TRLL", key_size=3, seed=7)
    assert key["scheme"] == "TRLL"
    assert len(key["key_bits"]) == 3
    assert sorted(locked.key_inputs) == sorted(key["key_inputs"])
    labeled, report = cutmatch.label(locked, "TRLL", ground_truth=key["lock_gates"])
    assert report["recall"] == pytest.approx(1.0)
    assert sorted(labeled.lock_gates) == sorted(report["labeled"])
    assert cutmatch.area_ratio(c17, locked) > 1.0


def test_unknown_scheme(c17):
    with pytest.raises(ValueError):
        cutmatch.lock(c17, "XYZ")


def test_npn_canonical_merges_and2_variants():
    and2, exact = cutmatch.npn_canonical("2:8")
    nor2, _ = cutmatch.npn_canonical("2:1")
    assert exact and and2 == nor2
    assert cutmatch.npn_canonical("2:6")[0] != and2


def test_signature_json_and_ranking(c17):
    sig = cutmatch.build_signature(cutmatch.normalize(c17), k=4, n_select=5)
    assert sig.total > 0 and sig.exact_fraction == 1.0
    assert cutmatch.Signature.from_json(sig.to_json()) == sig
    assert cutmatch.jaccard(sig, sig) == 1.0

    other = cutmatch.build_signature(cutmatch.normalize(cutmatch.Netlist.read(DATA / "iscas85" / "c432.bench")), k=4, n_select=5)
    db = cutmatch.make_corpus([sig, other])
    assert len(db) == 2
    assert json.loads(db.to_json())["entries"][0]["design"] == "c17"
    ranking = cutmatch.compare(sig, db)
    assert ranking[0] == ("c17", 1.0)


def test_run_repro_smoke(tmp_path):
    manifest = {
        "benchmarks": [str(DATA / "iscas85" / f"{d}.bench") for d in ("c17", "c432")],
        "locks": {"schemes": ["TRLL"], "key_sizes": [4], "seeds": [1]},
        "cuts": {"k": [4], "n_select": [5]},
        "output": str(tmp_path / "out"),
    }
    path = tmp_path / "m.json"
    path.write_text(json.dumps(manifest))
    steps, reused, failed = cutmatch.run_repro(path)
    assert steps > 0 and reused == 0 and failed == 0
    assert (tmp_path / "out" / "accuracy.csv").exists()
    steps2, reused2, _ = cutmatch.run_repro(path)
    assert reused2 == steps2
