import pytest

from smashprod import verify


@pytest.mark.parametrize(
    "suite,degree",
    [
        ("interpolation", 5),
        ("oracle", 4),
        ("closure", 4),
        ("hopf", 4),
        ("duality", 5),
        ("alphabet", 3),
        ("antipode", 3),
        ("phi", 4),
        ("psi", 4),
        ("assoc", 4),
    ],
)
def test_suites_pass(suite, degree):
    report = verify.run_suite(suite, degree)
    assert report.passed, report.lines()
    assert report.cases > 0


def test_unknown_suite():
    with pytest.raises(KeyError):
        verify.run_suite("nope", 2)


def test_report_order_independent_of_threads():
    a = verify.run_suite("hopf", 4, threads=1).to_json()
    b = verify.run_suite("hopf", 4, threads=4).to_json()
    assert a == b


def test_failures_render_counterexamples():
    cases = [verify.Case("broken", lambda: verify._compare("nsym", verify.nsym.X(1), verify.nsym.X(2)))]
    [result] = verify.run_cases(cases)
    assert not result.ok
    assert result.detail == "got X[1]; expected X[2]"


def test_crashing_case_is_reported_not_raised():
    def boom():
        raise ZeroDivisionError("x")

    [result] = verify.run_cases([verify.Case("boom", boom)])
    assert not result.ok and "ZeroDivisionError" in result.detail


def test_antipode_suite_names_convention():
    report = verify.run_suite("antipode", 3)
    assert report.notes["certified_convention"] == "per-letter-length"
    assert report.notes["conventions"]["global-part-count"].startswith("differs")


def test_antipode_suite_in_degree_four_reports_the_mismatch():
    report = verify.run_suite("antipode", 4)
    assert not report.passed
    assert [f["case"] for f in report.failures] == ["sign conventions"]
    assert report.notes["conventions"]["parity-strict"] == "matches"


def test_noncommutativity_witness():
    a, b = verify.NONCOMMUTATIVE_WITNESS
    assert verify.nsym.smash_X(a, b) != verify.nsym.smash_X(b, a)


def test_psi_matrix_is_invertible():
    basis, mat = verify.psi_matrix(4)
    assert mat.rank() == len(basis) == 16
    assert mat.det() == 1
