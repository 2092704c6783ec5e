import pytest

from hankelforge import verify
from hankelforge.sequences import Family
from hankelforge.verify import (
    CONGRUENCES,
    CongruenceClaim,
    congruence_claim,
    probe_positivity_conjecture,
    run_all,
    run_claim,
    verify_congruence,
    verify_franel_prime_congruences,
    verify_theorem_1_1,
    verify_theorem_1_2,
    verify_theorem_1_3,
)

EXPECTED_CLAIM_IDS = (
    "hankel-franel",
    "hankel-domb-clf",
    "hankel-apery",
    "calkin-divisibility",
    "parity-matrix-unimodular",
    "domb-mod8",
    "domb-mod3",
    "domb-iterated-mod3",
    "apery-b-congruences",
    "apery-a-transform-mod24",
    "gessel-mod24",
    "barrucand-identity",
    "clf-doubling-identity",
    "gsum-mod3",
    "franel-prime-sums",
    "apery-positivity",
)


def test_registry_completeness():
    assert verify.CLAIM_IDS == EXPECTED_CLAIM_IDS


def test_registry_experimental_flags():
    for c in verify.REGISTRY:
        assert c.experimental == (c.claim_id == "apery-positivity")


def test_unknown_claim_rejected():
    with pytest.raises(ValueError):
        run_claim("no-such-claim")
    with pytest.raises(ValueError):
        congruence_claim("no-such-claim")


def test_theorem_1_1_quotients():
    report = verify_theorem_1_1(2, (3, 4))
    assert report.passed
    by_index = {e.index: e.value for e in report.entries}
    assert by_index["r=3 n=1 base=6"] == "1"
    assert by_index["r=3 n=2 base=6"] == "5"
    assert by_index["r=4 n=1"] == "7"


def test_theorem_1_1_validates_r_set():
    with pytest.raises(ValueError):
        verify_theorem_1_1(4, (2, 3))
    with pytest.raises(ValueError):
        verify_theorem_1_1(4, ())


def test_theorem_1_2_quotients():
    report = verify_theorem_1_2(2)
    assert report.passed
    by_index = {e.index: e.value for e in report.entries}
    assert by_index["D n=1"] == "1"  # (28 - 16) / 12
    assert by_index["P n=1"] == "1"  # (80 - 64) / 2^4
    assert by_index["D1 n=1"] == "1"  # (20 - 16) / 4


def test_theorem_1_3_integrality_only():
    report = verify_theorem_1_3(2)
    assert report.passed
    by_index = {e.index: e.value for e in report.entries}
    assert by_index["b n=1"] == "1"  # 10 / 10
    assert by_index["a n=1"] == "2"  # 48 / 24: integer but even, still passing


def test_positivity_probe_is_experimental():
    report = probe_positivity_conjecture(Family.APERY_B, 3)
    assert report.experimental
    assert report.passed
    with pytest.raises(ValueError):
        probe_positivity_conjecture(Family.CLF, 3)


def test_congruence_claims_pass():
    for claim_id in CONGRUENCES:
        assert verify_congruence(claim_id, 60).passed


def test_congruence_entry_count_matches_range():
    report = verify_congruence("domb-mod3", 50)
    assert len(report.entries) == 51
    report = verify_congruence("apery-a-transform-mod24", 50)
    assert len(report.entries) == 48  # starts at n=3


def test_congruence_empty_range_rejected():
    with pytest.raises(ValueError):
        verify_congruence("apery-a-transform-mod24", 2)


def test_congruence_claim_validation():
    with pytest.raises(ValueError):
        CongruenceClaim("bad", 1, (0, 10), "", lambda n: [], lambda n: 0)
    with pytest.raises(ValueError):
        CongruenceClaim("bad", 3, (5, 4), "", lambda n: [], lambda n: 0)


def test_failing_claim_produces_witnesses():
    wrong = CongruenceClaim(
        "wrong-on-purpose",
        3,
        (0, 10),
        "deliberately false residues",
        lambda n_max: list(range(n_max + 1)),
        lambda n: 1,
    )
    report = verify_congruence(wrong)
    assert not report.passed
    passes, fails = report.totals()
    assert passes + fails == 11
    assert len(report.witnesses) == fails
    assert report.witnesses[0].index == "n=0"


def test_franel_prime_values():
    report = verify_franel_prime_congruences(5)
    assert report.passed
    values = {e.index: e.value for e in report.entries}
    assert values["p=5 alt-sum"] == "4"  # 299 = -1 (mod 5)
    assert values["p=5 half-weight-sum"] == "5"  # both sides 5 (mod 25)

    report = verify_franel_prime_congruences(7)
    assert report.passed
    labels = [e.index for e in report.entries]
    assert "p=7 half-weight-sum x=-2 y=1" in labels
    values = {e.index: e.value for e in report.entries}
    assert values["p=7 half-weight-sum x=-2 y=1"] == "10"  # both sides 10 (mod 49)


def test_franel_prime_validation():
    for bad in (3, 4, 9, -5):
        with pytest.raises(ValueError):
            verify_franel_prime_congruences(bad)


def test_run_all_small_scope():
    reports = run_all(n_max=4, primes=(5, 7))
    assert [r.claim_id for r in reports] == list(EXPECTED_CLAIM_IDS)
    for r in reports:
        assert r.passed, r.claim_id


def test_reports_are_deterministic():
    a = run_claim("domb-mod8", n_max=16)
    b = run_claim("domb-mod8", n_max=16)
    assert a == b


def test_report_invariant_witnesses_iff_fail():
    for report in run_all(n_max=4, primes=(5,)):
        fails = [e for e in report.entries if e.status == "fail"]
        assert bool(fails) == bool(report.witnesses)
        assert report.passed == (not report.witnesses)
