import json
import random
import subprocess
import sys

import pytest

from lcsk.cli import main
from lcsk.edk_dp import EditOp, EdkResult
from lcsk.lcsk_dp import LcskResult
from lcsk.seq import KMatchSpan


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_lcsk_json(capsys):
    code, out, _ = run(capsys, "lcsk", "--k", "2", "--a", "TGCGTGTG", "--b", "GTTGTGCC")
    assert code == 0
    assert json.loads(out) == {"metric": "lcsk", "k": 2, "score": 2}


def test_lcsk_traceback_round_trip(capsys):
    a, b = "CTGCTTTG", "CTTGCTTT"
    code, out, _ = run(capsys, "lcsk", "--k", "2", "--a", a, "--b", b, "--traceback")
    report = json.loads(out)
    matches = [KMatchSpan(**m) for m in report["matches"]]
    LcskResult(report["score"], matches).validate(a, b, 2)
    assert report["score"] == 3


def test_edk_tsv(capsys):
    code, out, _ = run(capsys, "edk", "--k", "2", "--a", "CTGCTTTG", "--b", "CTTGCTTT", "--format", "tsv")
    assert code == 0
    assert out == "metric\tk\tscore\nedk\t2\t3\n"


def test_edk_traceback_round_trip(capsys):
    a, b = "TGCGTGTG", "GTTGTGCC"
    for mode in ("full", "indel"):
        code, out, _ = run(capsys, "edk", "--k", "2", "--a", a, "--b", b, "--mode", mode, "--traceback")
        report = json.loads(out)
        assert report["mode"] == mode
        EdkResult(report["score"], [EditOp.from_dict(d) for d in report["script"]]).validate(a, b, 2, mode)
    assert report["score"] == 8


def test_degenerate_k_warns():
    proc = subprocess.run(
        [sys.executable, "-m", "lcsk", "lcsk", "--k", "5", "--a", "AB", "--b", "AB"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["score"] == 0
    assert "k=5" in proc.stderr


def test_sequences_from_files(tmp_path, capsys, caplog):
    fa = tmp_path / "a.fa"
    fa.write_text(">x\ntgcg\ntgtg\n>y\nAAAA\n")
    txt = tmp_path / "b.txt"
    txt.write_text("GTTGTGCC\n")
    code, out, err = run(capsys, "lcsk", "--k", "2", "--a", f"@{fa}", "--b", f"@{txt}", "--uppercase")
    assert code == 0
    assert json.loads(out)["score"] == 2
    assert "2 records" in caplog.text


@pytest.mark.parametrize(
    "argv",
    [
        ["lcsk", "--k", "2", "--a", "AC"],
        ["lcsk", "--k", "0", "--a", "AC", "--b", "AC"],
        ["edk", "--k", "2", "--a", "AC", "--b", "AC", "--mode", "weighted"],
        ["nosuch"],
        ["oracle-check", "--max-len", "30"],
        ["bench", "--sizes", "20,10"],
    ],
)
def test_usage_errors_exit_1(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        code = main(argv)
        raise SystemExit(code)
    assert exc.value.code == 1


def test_parse_errors_exit_2(tmp_path, capsys):
    bad = tmp_path / "dup.fa"
    bad.write_text(">a\nAC\n>a\nGT\n")
    assert main(["lcsk", "--k", "1", "--a", f"@{bad}", "--b", "A"]) == 2
    assert main(["lcsk", "--k", "1", "--a", f"@{tmp_path / 'missing'}", "--b", "A"]) == 2
    assert main(["matrix", "--k", "1", "--input", str(bad)]) == 2


def test_matrix(tmp_path, capsys):
    fa = tmp_path / "in.fa"
    fa.write_text(">s1\nTGCGTGTG\n>s2\nGTTGTGCC\n")
    out = tmp_path / "m.tsv"
    assert main(["matrix", "--k", "2", "--input", str(fa), "--out", str(out)]) == 0
    assert out.read_text() == "lcsk\ts1\ts2\ns1\t4\t2\ns2\t2\t4\n"
    assert main(["matrix", "--k", "2", "--input", str(fa), "--out", str(tmp_path / "no" / "dir.tsv")]) == 2


def test_matrix_jobs_byte_identical(tmp_path, capsys):
    rng = random.Random(42)
    fa = tmp_path / "in.fa"
    fa.write_text("".join(
        f">r{i}\n{''.join(rng.choice('ACGT') for _ in range(rng.randint(10, 60)))}\n" for i in range(20)
    ))
    outs = []
    for jobs in ("1", "8"):
        path = tmp_path / f"m{jobs}.tsv"
        assert main(["matrix", "--metric", "edk", "--k", "2", "--input", str(fa), "--out", str(path), "--jobs", jobs]) == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_oracle_check_clean(capsys):
    code, out, _ = run(capsys, "oracle-check", "--metric", "lcsk", "--k", "1,2,3", "--max-len", "5")
    assert code == 0
    assert "mismatches=0" in out


def test_oracle_check_random(capsys):
    code, out, _ = run(
        capsys, "oracle-check", "--metric", "edk", "--k", "2", "--max-len", "8",
        "--trials", "300", "--seed", "42",
    )
    assert code == 0
    assert "trials=300 mismatches=0" in out


def test_bench_single_row(capsys):
    code, out, _ = run(capsys, "bench", "--sizes", "50", "--repeats", "3")
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 2
    assert lines[1].startswith("lcsk\t2\t50\t")


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "lcsk", "lcsk", "--k", "3", "--a", "TGCGTGTG", "--b", "GTTGTGCC", "--format", "tsv"],
        capture_output=True, text=True, check=True,
    )
    assert proc.stdout.splitlines()[1] == "lcsk\t3\t1"
