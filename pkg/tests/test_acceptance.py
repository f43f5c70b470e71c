"""Acceptance gate: eleven criteria, each with a wall-clock limit.

Every criterion prints one PASS/FAIL line; the lines are repeated in the
pytest terminal summary.  Run directly (``python3 tests/test_acceptance.py``)
for the lines alone.
"""

import time
from math import comb, factorial

import pytest

from smashprod import alphabet as al
from smashprod import nsym, sym, verify
from smashprod.formal import FormalSum
from smashprod.nsym import X
from smashprod.sym import h

RESULTS: list[str] = []


def _stirling2(n, k):
    # S(n, k) = k S(n-1, k) + S(n-1, k-1)
    table = [[0] * (n + 1) for _ in range(n + 1)]
    table[0][0] = 1
    for i in range(1, n + 1):
        for j in range(1, i + 1):
            table[i][j] = j * table[i - 1][j] + table[i - 1][j - 1]
    return table[n][k]


def _gate(number: int, title: str, limit: float, body) -> None:
    start = time.perf_counter()
    problems = []
    try:
        problems = list(body() or [])
    except Exception as e:
        problems = [f"{type(e).__name__}: {e}"]
    elapsed = time.perf_counter() - start
    if elapsed >= limit:
        problems.append(f"took {elapsed:.2f}s, limit {limit:.0f}s")
    status = "PASS" if not problems else "FAIL"
    line = f"criterion {number:2d} {status} ({elapsed:6.2f}s / {limit:.0f}s) {title}"
    if problems:
        line += " -- " + "; ".join(str(p) for p in problems[:3])
    RESULTS.append(line)
    print(line)
    assert not problems, line


def _suite(name, max_degree, **options):
    report = verify.run_suite(name, max_degree, **options)
    return [f"{name}: {f['case']}: {f['detail']}" for f in report.failures]


def test_criterion_01_h21_smash_h3():
    def body():
        got = sym.smash(h(2, 1), h(3))
        want = h(2, 1) + h(1, 1, 1, 1) + h(2, 1, 1) + h(2, 2, 1) + h(2, 1, 1, 1) + h(3, 2, 1)
        if got != want:
            yield f"h[2,1] # h[3] = {dict(got)}"

    _gate(1, "h[2,1] # h[3] six-term expansion", 1, body)


def test_criterion_02_binomial_identity():
    def body():
        for p in range(1, 6):
            for q in range(1, 6):
                want = FormalSum(
                    ((1,) * n, comb(p, n - q) * comb(q, n - p) * factorial(p + q - n))
                    for n in range(max(p, q), p + q + 1)
                )
                if nsym.smash_X((1,) * p, (1,) * q) != want:
                    yield f"p={p}, q={q}"

    _gate(2, "binomial identity for X_(1^p) # X_(1^q), p, q <= 5", 5, body)


def test_criterion_03_stirling_identity():
    def body():
        for n in range(1, 7):
            want = FormalSum(((1,) * k, _stirling2(n, k)) for k in range(1, n + 1))
            if nsym.smash_power(X(1), n) != want:
                yield f"n={n}"

    _gate(3, "Stirling identity for powers of X_(1), n <= 6", 5, body)


def test_criterion_04_interpolation():
    _gate(4, "top = concatenation, bottom = internal product, p+q <= 8", 60, lambda: _suite("interpolation", 8))


def test_criterion_05_oracle_equivalence():
    _gate(
        5,
        "closed-form smash = diagram evaluation, p+q <= 6 plus 50 random pairs at 7",
        120,
        lambda: _suite("oracle", 6, random_total=7, random_count=50, seed=7),
    )


def test_criterion_06_descent_closure():
    _gate(6, "permutation smash of descent classes lands in NSym, p+q <= 7", 60, lambda: _suite("closure", 7))


def test_criterion_07_hopf_structure():
    def body():
        yield from _suite("hopf", 6, coproduct_degree=6, commutative_degree=8, antipode_degree=6)
        a, b = verify.NONCOMMUTATIVE_WITNESS
        if nsym.smash_X(a, b) == nsym.smash_X(b, a):
            yield "recorded witness commutes"

    _gate(7, "coproduct compatibility, Sym commutative, NSym witness, antipode", 120, body)


def test_criterion_08_morphisms():
    def body():
        yield from _suite("phi", 7)
        yield from _suite("psi", 6, exponential=False)

    _gate(8, "phi intertwines all products and the coproduct; psi is a unitriangular Hopf map", 60, body)


def test_criterion_09_duality_and_alphabets():
    def body():
        yield from _suite("duality", 6)
        yield from _suite("alphabet", 5, variables=6, smash_degree=4)

    _gate(9, "quasi-shuffle duality; product, sum and smash alphabets", 120, body)


def test_criterion_10_antipode():
    notes = {}

    def body():
        report = verify.run_suite("antipode", 3)
        notes.update(report.notes)
        yield from (f"{f['case']}: {f['detail']}" for f in report.failures)
        certified = report.notes.get("certified_convention")
        if certified not in al.SIGN_CONVENTIONS:
            yield f"no certified convention ({certified})"

    _gate(10, "duality antipode axiom and the certified sign convention through degree 3", 60, body)
    RESULTS[-1] += f" [certified: {notes.get('certified_convention')}]"


def test_criterion_11_exponential_alphabet():
    def body():
        for case, r in zip(cases := verify.exponential_cases(4, variables=5), verify.run_cases(cases)):
            if not r.ok:
                yield f"{case.name}: {r.detail}"

    _gate(11, "<f(e(X)), X_a> = <f, psi(X_a)>, |a|, |b| <= 4, m = 5", 60, body)


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-s"]))
