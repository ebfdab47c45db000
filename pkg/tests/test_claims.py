from paulidecomp.claims import CHECKS, EXPECTED, run_suite
from paulidecomp.reports import CLAIMS, STATUSES


def test_registry_consistency():
    assert set(CHECKS) == set(CLAIMS)
    assert set(EXPECTED) == set(CHECKS)
    assert all(v in STATUSES for v in EXPECTED.values())


def test_single_scope():
    reports = run_suite("eq19")
    assert len(reports) == 1
    assert reports[0].claim == "eq19"
    assert reports[0].status == "confirmed"


def test_report_json_shape():
    rep = run_suite("eq19")[0]
    d = rep.to_json()
    for key in ("claim", "locator", "status", "witness", "wall_time_s"):
        assert key in d
