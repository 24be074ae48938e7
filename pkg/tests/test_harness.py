import pytest

from lcsk import harness
from lcsk.harness import EXIT_DOCUMENTED, EXIT_MISMATCH, Mismatch, OracleReport, run_oracle_check
from lcsk.oracle import OracleGuardError


def test_exhaustive_lcsk_clean():
    report = run_oracle_check("lcsk", [1, 2, 3], max_len=4, alphabet="AC")
    assert report.trials == 31 * 31
    assert report.mismatches == []
    assert report.exit_code == 0


def test_random_edk_reproducible():
    r1 = run_oracle_check("edk", [2, 3], max_len=8, trials=200, seed=9)
    r2 = run_oracle_check("edk", [2, 3], max_len=8, trials=200, seed=9)
    assert r1.trials == r2.trials == 200
    assert r1.mismatches == r2.mismatches == []


def test_guard():
    with pytest.raises(OracleGuardError):
        run_oracle_check("lcsk", [1], max_len=15)
    with pytest.raises(OracleGuardError):
        run_oracle_check("edk", [2], max_len=13)


def test_exit_codes_by_configuration():
    documented = Mismatch("edk", 3, "full", "AAA", "AAA", 2, 1, seed=1, trial=0)
    asserted = Mismatch("edk", 2, "full", "AAA", "AAA", 2, 1)
    report = OracleReport("edk", [3], "full", 1, [documented])
    assert report.exit_code == EXIT_DOCUMENTED
    assert "DOCUMENTED k=3 a='AAA' b='AAA' dp=2 oracle=1 seed=1 trial=0" in report.summary_lines()[1]
    report.mismatches.append(asserted)
    assert report.exit_code == EXIT_MISMATCH
    assert Mismatch("lcsk", 5, "full", "", "", 0, 1).asserted


def test_divergence_is_logged(monkeypatch):
    # a deliberately wrong DP must surface as a logged mismatch, never silently
    monkeypatch.setattr(harness, "edk_score", lambda a, b, k, mode: 0)
    report = run_oracle_check("edk", [2, 3], max_len=2, alphabet="A")
    assert report.mismatches
    assert {m.k for m in report.mismatches} == {2, 3}
    assert report.exit_code == EXIT_MISMATCH
    k3 = [m for m in report.mismatches if m.k == 3]
    assert all(not m.asserted for m in k3)
    for m in report.mismatches:
        assert m.to_dict()["a"] == m.a and m.oracle != m.dp
