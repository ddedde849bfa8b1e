import pytest

from secantzeta.verify import IDENTITIES, SUITES, default_threshold, run_suite, verify_identity


@pytest.mark.parametrize("name", SUITES)
def test_default_cases_pass(name):
    for case in IDENTITIES[name].cases:
        rep = verify_identity(name, case, 192)
        assert rep.passed, rep.to_json()


def test_report_json_fields():
    rep = verify_identity("functional_equation", {"m": 1, "tau": "i"}, 128)
    js = rep.to_json()
    assert js["passed"] and js["residual_log2"] < -70
    assert set(js) >= {"identity", "params", "lhs", "rhs", "residual", "threshold"}


def test_wrong_parity_threshold_is_looser():
    assert default_threshold(256, True) > default_threshold(256, False)


def test_a_wrong_claim_fails():
    # a 1000-term partial sum cannot reach 1e-30
    rep = verify_identity("exact_sqrt", {"m": 1, "r": "2", "terms": 1000}, 64, threshold="1e-30")
    assert not rep.passed


def test_unknown_identity():
    with pytest.raises(KeyError):
        verify_identity("nope", {}, 64)


def test_run_suite_subset():
    reps = run_suite(["lerch_cotangent"], 128)
    assert reps and all(r.passed for r in reps)
