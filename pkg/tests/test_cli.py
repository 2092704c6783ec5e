import json

import pytest

from hankelforge import cli, term, verify
from hankelforge.reports import ReportEntry, VerificationReport, Witness
from hankelforge.sequences import franel


def run_cli(capsys, *argv):
    code = cli.run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_seq_text(capsys):
    code, out, _ = run_cli(capsys, "seq", "--family", "franel", "--r", "3", "--n", "4")
    assert code == 0
    assert out == "1 2 10 56 346\n"


def test_seq_defaults_param(capsys):
    code, out, _ = run_cli(capsys, "seq", "--family", "franel", "--n", "3")
    assert code == 0
    assert out == "1 2 10 56\n"
    code, out, _ = run_cli(capsys, "seq", "--family", "domb", "--n", "2")
    assert out == "1 4 28\n"


def test_seq_csv(capsys):
    code, out, _ = run_cli(capsys, "seq", "--family", "central", "--n", "3", "--format", "csv")
    assert code == 0
    assert out == "index,value\n0,1\n1,2\n2,6\n3,20\n"


def test_seq_json_round_trips_big_integers(capsys):
    from hankelforge.sequences import APERY_A

    code, out, _ = run_cli(capsys, "seq", "--family", "apery-a", "--n", "40", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["family"] == "apery-a"
    assert obj["param"] is None
    for n, s in enumerate(obj["terms"]):
        assert isinstance(s, str)
        assert int(s) == term(APERY_A, n)
    # the last term overflows 64-bit by a wide margin and must survive exactly
    assert term(APERY_A, 40) > 2**127


def test_hankel_with_quotient(capsys):
    code, out, _ = run_cli(
        capsys, "hankel", "--family", "domb", "--n", "1", "--engine", "bareiss",
        "--base", "12", "--exp", "1",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "det 12"
    assert lines[1] == "engine BAREISS"
    assert lines[4] == "quotient 1 (odd=yes positive=yes)"


def test_hankel_non_divisible_quotient(capsys):
    code, out, _ = run_cli(
        capsys, "hankel", "--family", "franel", "--n", "1", "--base", "7", "--exp", "2"
    )
    assert code == 0
    assert "quotient none (6 not divisible by 7^2)" in out


def test_hankel_exp_requires_base(capsys):
    code, _, err = run_cli(capsys, "hankel", "--family", "franel", "--n", "1", "--exp", "2")
    assert code == 2
    assert "requires --base" in err


def test_usage_errors_exit_2(capsys):
    assert run_cli(capsys, "frobnicate")[0] == 2
    assert run_cli(capsys, "seq", "--family", "nope", "--n", "3")[0] == 2
    assert run_cli(capsys, "seq", "--family", "clf", "--r", "4", "--n", "3")[0] == 2
    assert run_cli(capsys, "seq", "--family", "franel", "--m", "2", "--n", "3")[0] == 2
    assert run_cli(capsys, "verify", "--claim", "bogus")[0] == 2
    assert run_cli(capsys, "verify", "--all", "--primes", "5,x")[0] == 2
    assert run_cli(capsys, "bench", "--family", "clf", "--n", "2", "--engines", "qr")[0] == 2
    assert run_cli(capsys, "seq", "--family", "franel", "--r", "0", "--n", "3")[0] == 2


def test_help_exits_zero(capsys):
    assert run_cli(capsys, "--help")[0] == 0


def test_verify_single_claim_csv(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--claim", "domb-mod3", "--n-max", "3", "--format", "csv"
    )
    assert code == 0
    assert out == (
        "claim_id,n,value,status\n"
        "domb-mod3,n=0,1,pass\n"
        "domb-mod3,n=1,1,pass\n"
        "domb-mod3,n=2,1,pass\n"
        "domb-mod3,n=3,1,pass\n"
    )


def test_verify_all_passes(capsys):
    code, out, err = run_cli(
        capsys, "verify", "--all", "--n-max", "4", "--primes", "5,7", "--format", "text"
    )
    assert code == 0
    assert "WARNING" not in err
    assert out.count("[PASS]") == len(verify.CLAIM_IDS) - 1
    assert "[EXPERIMENTAL:PASS] apery-positivity" in out


def test_verify_output_is_deterministic(capsys):
    args = ("verify", "--all", "--n-max", "4", "--primes", "5,7", "--format", "json")
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    assert first == second
    reports = json.loads(first)
    assert [r["claim_id"] for r in reports] == list(verify.CLAIM_IDS)
    for r in reports:
        for e in r["entries"]:
            assert isinstance(e["value"], str)


def test_experimental_failure_warns_but_exits_zero(capsys, monkeypatch):
    failing = VerificationReport(
        "apery-positivity",
        "n=0..1",
        (ReportEntry("n=0", "-5", "fail"),),
        (Witness("n=0", "-5", "> 0"),),
        experimental=True,
    )
    monkeypatch.setattr(verify, "run_claim", lambda *a, **k: failing)
    code, out, err = run_cli(capsys, "verify", "--claim", "apery-positivity")
    assert code == 0
    assert "EXPERIMENTAL:FAIL" in out
    assert "non-gating" in err


def test_proven_failure_exits_one(capsys, monkeypatch):
    failing = VerificationReport(
        "domb-mod3",
        "n=0..1",
        (ReportEntry("n=0", "2", "fail"),),
        (Witness("n=0", "2", "= 1 (mod 3)"),),
    )
    monkeypatch.setattr(verify, "run_claim", lambda *a, **k: failing)
    code, out, _ = run_cli(capsys, "verify", "--claim", "domb-mod3")
    assert code == 1
    assert "FAIL at n=0" in out


def test_bench_runs(capsys):
    code, out, _ = run_cli(
        capsys, "bench", "--family", "franel", "--n", "6",
        "--engines", "bareiss,dodgson", "--repeat", "2",
    )
    assert code == 0
    assert "engine bareiss:" in out and "engine dodgson:" in out
    assert "max_bits" in out


def test_emit_report_formats():
    report = verify.run_claim("gsum-mod3", n_max=3)
    csv_bytes = cli.emit_report(report, "csv")
    assert csv_bytes.startswith(b"claim_id,n,value,status\n")
    obj = json.loads(cli.emit_report(report, "json"))
    assert obj["claim_id"] == "gsum-mod3"
    text = cli.emit_report(report, "text").decode()
    assert text.startswith("[PASS] gsum-mod3")
    with pytest.raises(ValueError):
        cli.emit_report(report, "xml")


def test_spec_json_quotient_example():
    # determinants 1, 6, 180 give base-6 quotients "1", "1", "5"
    report = verify.verify_theorem_1_1(2, (3,))
    obj = json.loads(cli.emit_report(report, "json"))
    quotients = [e["value"] for e in obj["entries"] if e["n"].endswith("base=6")]
    assert quotients == ["1", "1", "5"]
