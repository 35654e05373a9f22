import json
import subprocess
import sys

import numpy as np
import pytest

from sdcodes import codefile
from sdcodes.cli import main
from sdcodes.cyclic import CyclicCode, construct_dual_containing_bch, dual_code
from sdcodes.linalg import in_row_space


def run(capsys, *argv):
    rc = main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


@pytest.fixture
def files(tmp_path, capsys):
    bch = tmp_path / "bch15.json"
    sd = tmp_path / "sd30.json"
    assert run(capsys, "construct", "bch", "--q", "2", "--m", "4", "--mu", "1", "--delta", "3", "--out", str(bch))[0] == 0
    assert run(capsys, "construct", "selfdual", "--from", str(bch), "--out", str(sd))[0] == 0
    return bch, sd


def test_construct_bch_writes_15_11(files):
    bch, _ = files
    code = codefile.load(str(bch))
    assert isinstance(code, CyclicCode) and (code.n, code.k) == (15, 11)
    raw = bch.read_bytes()
    assert raw.endswith(b"\n") and b"\r" not in raw
    assert json.loads(raw)["format_version"] == 1


def test_construct_to_stdout_is_one_document(capsys):
    rc, out, err = run(capsys, "construct", "family", "--theorem", "4.1", "--q", "2", "--m", "3", "--mu", "1")
    assert rc == 0 and err == ""
    assert out.count("\n") == 1
    L = codefile.loads(out)
    assert (L.n, L.k) == (14, 7)
    assert L.provenance["family"]["tag"] == "4.1"


@pytest.mark.parametrize("argv", [
    ["construct", "bch", "--q", "2", "--m", "3", "--mu", "7"],
    ["construct", "bch", "--q", "6", "--m", "3"],
    ["construct", "rs", "--q", "5", "--n", "4", "--kso", "1"],
    ["construct", "family", "--theorem", "5.1", "--q", "3", "--m", "3", "--mu", "1"],
])
def test_precondition_failures_exit_2(capsys, argv):
    rc, out, err = run(capsys, *argv)
    assert rc == 2 and out == ""
    assert err.startswith("error: precondition: ") and err.count("\n") == 1


def test_self_paired_length_refused(capsys):
    rc, _, err = run(capsys, "construct", "bch", "--q", "2", "--m", "4", "--mu", "3", "--delta", "2")
    assert rc == 2 and "self-paired" in err


def test_verify_pass_and_fail(files, tmp_path, capsys):
    bch, sd = files
    rc, out, _ = run(capsys, "verify", "--code", str(sd), "--check", "self-dual")
    assert rc == 0 and out == "PASS self-dual\n"
    rc, out, _ = run(capsys, "verify", "--code", str(bch), "--check", "dual-containing")
    assert rc == 0 and out.startswith("PASS")
    full = tmp_path / "full.json"
    run(capsys, "construct", "rs", "--q", "4", "--n", "3", "--kso", "0", "--out", str(full))
    rc, out, _ = run(capsys, "verify", "--code", str(full), "--check", "self-dual")
    assert rc == 1 and out == "FAIL self-dual\n"


def test_verify_repeated_root_emits_permutation(files, capsys):
    _, sd = files
    rc, out, _ = run(capsys, "verify", "--code", str(sd), "--check", "repeated-root", "--check", "shift2")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0].startswith("PASS repeated-root permutation=[")
    perm = json.loads(lines[0].split("permutation=")[1].split(" ")[0])
    assert sorted(perm) == list(range(30))
    assert lines[1] == "PASS shift2"


def test_verify_malformed_input(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "verify", "--code", str(bad))[0] == 2
    bad.write_text(json.dumps({"format_version": 7, "kind": "cyclic"}))
    assert run(capsys, "verify", "--code", str(bad))[0] == 2
    assert run(capsys, "verify", "--code", str(tmp_path / "missing.json"))[0] == 2


def test_analyze_mindist_30_15(files, capsys):
    _, sd = files
    for strategy in ("auto", "exhaustive"):
        rc, out, _ = run(capsys, "analyze", "--code", str(sd), "mindist", "--strategy", strategy)
        doc = json.loads(out)
        assert rc == 0 and doc["d"] == 6 and doc["exact"]
        w = np.array(doc["witness"])
        assert np.count_nonzero(w) == 6
        L = codefile.load(str(sd))
        assert in_row_space(L.field, L.G, w)


def test_analyze_weights_of_dual(tmp_path, capsys):
    path = tmp_path / "dual.json"
    codefile.dump(dual_code(construct_dual_containing_bch(2, 4, 1, delta=3)), str(path))
    rc, out, _ = run(capsys, "analyze", "--code", str(path), "weights")
    doc = json.loads(out)
    assert rc == 0 and doc["n"] == 15 and sum(doc["counts"]) == 16
    assert all(isinstance(c, int) for c in doc["counts"])


def test_analyze_budget_exit_3(files, capsys):
    _, sd = files
    rc, out, err = run(capsys, "analyze", "--code", str(sd), "mindist", "--strategy", "exhaustive", "--budget", "100")
    assert rc == 3 and out == "" and err.startswith("error: budget")


def test_search_outputs(capsys):
    rc, out, _ = run(capsys, "search", "--n", "15", "--q", "2", "--dim", "15")
    assert rc == 0 and out.count("\n") == 1
    assert codefile.loads(out).k == 15
    rc, out, err = run(capsys, "search", "--n", "5", "--q", "2", "--dim", "4")
    assert rc == 0 and out == "" and "self-paired" in err
    rc, out, _ = run(capsys, "search", "--n", "63", "--q", "2", "--dim", "42", "--limit", "2")
    docs = [json.loads(x) for x in out.splitlines()]
    assert len(docs) == 2 and docs[0]["defining_set"]["coset_reps"] < docs[1]["defining_set"]["coset_reps"]


def test_table(capsys):
    rc, out, _ = run(capsys, "table", "--theorem", "4.1", "--m-range", "3:7")
    lines = out.splitlines()
    assert rc == 0 and len(lines) == 4
    header = lines[0].split()
    assert header == ["q", "m", "mu", "n", "dim", "delta", "claimed", "computed", "exact_d", "extremal"]
    for line in lines[1:]:
        row = dict(zip(header, line.split()))
        assert int(row["computed"]) >= float(row["claimed"])
    rc, out, _ = run(capsys, "table", "--theorem", "5.1", "--q", "5", "--m-range", "3:3", "--mu", "1", "2", "4")
    assert rc == 0 and len(out.splitlines()) == 4
    rc, out, _ = run(capsys, "table", "--theorem", "4.1", "--m-range", "4:4")
    assert rc == 0 and len(out.splitlines()) == 1


def test_round_trip_identity(files, tmp_path, capsys):
    for path in files:
        text = path.read_text()
        code = codefile.loads(text)
        assert codefile.dumps(code) + "\n" == text
        assert codefile.loads(codefile.dumps(code)) == code
    rs = tmp_path / "rs.json"
    run(capsys, "construct", "rs", "--q", "8", "--n", "8", "--kso", "3", "--out", str(rs))
    assert codefile.dumps(codefile.load(str(rs))) + "\n" == rs.read_text()


def test_byte_identical_runs(files, capsys, monkeypatch):
    _, sd = files
    outs = []
    for threads in ("1", "4", "1"):
        monkeypatch.setenv("SDF_THREADS", threads)
        outs.append(run(capsys, "analyze", "--code", str(sd), "mindist", "--strategy", "exhaustive")[1])
        outs.append(run(capsys, "construct", "family", "--theorem", "5.1", "--q", "5", "--m", "3", "--mu", "4")[1])
    assert outs[0] == outs[2] == outs[4]
    assert outs[1] == outs[3] == outs[5]


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "sdcodes", "construct", "bch", "--q", "2", "--m", "3"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert codefile.loads(proc.stdout).k == 4
    proc = subprocess.run([sys.executable, "-m", "sdcodes", "construct", "bch", "--q", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 2
