"""Verification suites: every closed-form rule checked against an independent
route (brute force, duality, or alphabet evaluation).

Each suite expands into independent cases.  Cases run on a thread pool whose
size comes from ``SMASHPROD_THREADS`` (default 1); reports list cases in
construction order whatever the scheduling.
"""

from __future__ import annotations

import itertools
import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from smashprod import alphabet as al
from smashprod import combinatorics as cb
from smashprod import nsym, perm, qsym, sym
from smashprod import tensor_oracle as oracle
from smashprod.expr import Type, Value, render
from smashprod.formal import FormalSum, TensorSum

THREADS_ENV = "SMASHPROD_THREADS"

# smallest pair with X_a # X_b != X_b # X_a
NONCOMMUTATIVE_WITNESS = ((1,), (2,))


@dataclass(frozen=True)
class CaseResult:
    ok: bool
    detail: str = ""
    data: Any = None


@dataclass(frozen=True)
class Case:
    name: str
    check: Callable[[], CaseResult]


@dataclass
class Report:
    suite: str
    max_degree: int
    cases: int
    failures: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "max_degree": self.max_degree,
            "passed": self.passed,
            "cases": self.cases,
            "failures": self.failures,
            "notes": self.notes,
        }

    def lines(self) -> list[str]:
        status = "PASS" if self.passed else "FAIL"
        out = [f"{status} {self.suite} (max degree {self.max_degree}): {self.cases} cases, {len(self.failures)} failures"]
        for f in self.failures:
            out.append(f"  counterexample {f['case']}: {f['detail']}")
        for k, v in self.notes.items():
            out.append(f"  {k}: {v}")
        return out


def _ok(data=None) -> CaseResult:
    return CaseResult(True, data=data)


def _show(algebra: str, x, tensor: bool = False) -> str:
    return render(Value(Type(algebra, tensor), x))


def _compare(algebra: str, got, want, tensor: bool = False) -> CaseResult:
    if got == want:
        return _ok()
    return CaseResult(False, f"got {_show(algebra, got, tensor)}; expected {_show(algebra, want, tensor)}")


def _name(*keys) -> str:
    return " ".join(str(list(k)) for k in keys)


def _comps(lo: int, hi: int):
    for n in range(lo, hi + 1):
        yield from cb.compositions_of(n)


def _pairs(total: int, lo: int = 1, gen=cb.compositions_of):
    """Pairs of basis keys with degrees ``p, q >= lo`` and ``p + q <= total``."""
    for p in range(lo, total + 1):
        for q in range(lo, total - p + 1):
            for a in gen(p):
                for b in gen(q):
                    yield a, b


def _top(x: FormalSum, n: int, degree=sum) -> FormalSum:
    return FormalSum._raw({k: c for k, c in x.items() if degree(k) == n})


# ---------------------------------------------------------------------------
# interpolation: top component is the external product, bottom the internal


def interpolation_cases(max_degree: int, perm_degree: int | None = None) -> list[Case]:
    perm_degree = min(max_degree, 6) if perm_degree is None else perm_degree
    cases = []
    for a, b in _pairs(max_degree):
        p, q = sum(a), sum(b)

        def check(a=a, b=b, p=p, q=q):
            s = nsym.smash_X(a, b)
            r = _compare("nsym", _top(s, p + q), nsym.convolve_X(a, b))
            if r.ok and p == q:
                r = _compare("nsym", _top(s, p), nsym.internal_X(a, b))
                if r.ok:
                    # internal product re-derived through permutations
                    via_perms = nsym.express_in_X(perm.compose(nsym.embed(nsym.X(*a)), nsym.embed(nsym.X(*b))))
                    r = _compare("nsym", nsym.internal_X(a, b), via_perms)
            return r

        cases.append(Case(f"nsym {_name(a, b)}", check))
    for a, b in _pairs(max_degree, gen=cb.partitions_of):
        p, q = sum(a), sum(b)

        def check_sym(a=a, b=b, p=p, q=q):
            s = sym.smash_h(a, b)
            r = _compare("sym", _top(s, p + q), FormalSum.basis(sym.external_h(a, b)))
            if r.ok and p == q:
                r = _compare("sym", _top(s, p), sym.internal_h(a, b))
            return r

        cases.append(Case(f"sym {_name(a, b)}", check_sym))
    for p in range(1, perm_degree + 1):
        for q in range(1, perm_degree - p + 1):

            def check_perm(p=p, q=q):
                for s in cb.permutations_of(p):
                    for t in cb.permutations_of(q):
                        x, y = FormalSum.basis(s), FormalSum.basis(t)
                        sm = perm.smash(x, y)
                        r = _compare("perm", perm.degree_component(sm, p + q), perm.convolve(x, y))
                        if r.ok and p == q:
                            r = _compare("perm", perm.degree_component(sm, p), perm.compose(x, y))
                        if not r.ok:
                            return CaseResult(False, f"{_name(s, t)}: {r.detail}")
                return _ok()

            cases.append(Case(f"perm degrees {p},{q}", check_perm))
    return cases


# ---------------------------------------------------------------------------
# closed-form permutation products against the tensor-algebra diagram


def _oracle_pair(s, t) -> CaseResult:
    x, y = FormalSum.basis(s), FormalSum.basis(t)
    r = _compare("perm", perm.smash(x, y), oracle.endo_smash(x, y))
    if r.ok:
        r = _compare("perm", perm.convolve(x, y), oracle.endo_convolve(x, y))
    if r.ok and len(s) == len(t):
        # endomorphism composition f o g is the permutation product g o f
        r = _compare("perm", perm.compose(y, x), oracle.endo_compose(x, y))
    if not r.ok:
        return CaseResult(False, f"{_name(s, t)}: {r.detail}")
    return _ok()


def random_perm_pairs(total: int, count: int, seed: int = 0) -> list[tuple]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        p = rng.randint(1, total - 1)
        out.append((rng.choice(cb.permutations_of(p)), rng.choice(cb.permutations_of(total - p))))
    return out


def oracle_cases(max_degree: int, random_total: int | None = None, random_count: int = 0, seed: int = 0) -> list[Case]:
    cases = []
    for p in range(0, max_degree + 1):
        for q in range(0, max_degree - p + 1):

            def check(p=p, q=q):
                for s in cb.permutations_of(p):
                    for t in cb.permutations_of(q):
                        r = _oracle_pair(s, t)
                        if not r.ok:
                            return r
                return _ok()

            cases.append(Case(f"degrees {p},{q}", check))
    if random_total is not None and random_count:
        for s, t in random_perm_pairs(random_total, random_count, seed):
            cases.append(Case(f"random {_name(s, t)}", lambda s=s, t=t: _oracle_pair(s, t)))
    return cases


# ---------------------------------------------------------------------------
# closure of descent classes


def closure_cases(max_degree: int) -> list[Case]:
    cases = []
    for a, b in _pairs(max_degree):

        def check(a=a, b=b):
            x, y = nsym.embed(nsym.X(*a)), nsym.embed(nsym.X(*b))
            try:
                got = nsym.express_in_X(perm.smash(x, y))
            except nsym.NotInSpan as e:
                return CaseResult(False, f"smash leaves the descent span: {e}")
            r = _compare("nsym", got, nsym.smash_X(a, b))
            if r.ok:
                r = _compare("nsym", nsym.express_in_X(perm.convolve(x, y)), nsym.convolve_X(a, b))
            return r

        cases.append(Case(_name(a, b), check))
    return cases


# ---------------------------------------------------------------------------
# Hopf structure


def _antipode_sides(algebra, coproduct, smash, antipode, key) -> CaseResult:
    x = FormalSum.basis(key)
    unit = FormalSum() if key else FormalSum.basis(())
    left = right = FormalSum()
    for (u, v), c in coproduct(x).items():
        left = left + c * smash(antipode(FormalSum.basis(u)), FormalSum.basis(v))
        right = right + c * smash(FormalSum.basis(u), antipode(FormalSum.basis(v)))
    r = _compare(algebra, left, unit)
    if r.ok:
        r = _compare(algebra, right, unit)
    return r


def hopf_cases(
    max_degree: int,
    coproduct_degree: int | None = None,
    commutative_degree: int | None = None,
    antipode_degree: int | None = None,
) -> list[Case]:
    cd = max_degree if coproduct_degree is None else coproduct_degree
    md = max_degree if commutative_degree is None else commutative_degree
    ad = max_degree if antipode_degree is None else antipode_degree
    cases = []
    for a, b in _pairs(cd):

        def check_n(a=a, b=b):
            got = nsym.coproduct(nsym.smash_X(a, b))
            return _compare("nsym", got, nsym.smash_tensor(nsym.coproduct_X(a), nsym.coproduct_X(b)), True)

        cases.append(Case(f"nsym coproduct {_name(a, b)}", check_n))
    for a, b in _pairs(cd, gen=cb.partitions_of):

        def check_s(a=a, b=b):
            got = sym.coproduct(sym.smash_h(a, b))
            return _compare("sym", got, sym.smash_tensor(sym.coproduct_h(a), sym.coproduct_h(b)), True)

        cases.append(Case(f"sym coproduct {_name(a, b)}", check_s))
    for a, b in _pairs(md, gen=cb.partitions_of):
        if a <= b:
            cases.append(Case(f"sym commutative {_name(a, b)}", lambda a=a, b=b: _compare("sym", sym.smash_h(a, b), sym.smash_h(b, a))))
    a, b = NONCOMMUTATIVE_WITNESS
    if sum(a) + sum(b) <= md:

        def witness():
            if nsym.smash_X(a, b) == nsym.smash_X(b, a):
                return CaseResult(False, f"X{list(a)} and X{list(b)} commute")
            return _ok()

        cases.append(Case(f"nsym noncommutative {_name(a, b)}", witness))
    for alpha in _comps(0, ad):

        def check_cocomm(alpha=alpha):
            d = nsym.coproduct_X(alpha)
            return _compare("nsym", d.swap(), d, True)

        cases.append(Case(f"nsym cocommutative {_name(alpha)}", check_cocomm))
        cases.append(
            Case(
                f"nsym antipode {_name(alpha)}",
                lambda alpha=alpha: _antipode_sides("nsym", nsym.coproduct, nsym.smash, nsym.antipode_sigma, alpha),
            )
        )
    for n in range(0, ad + 1):
        for lam in cb.partitions_of(n):
            cases.append(
                Case(
                    f"sym antipode {_name(lam)}",
                    lambda lam=lam: _antipode_sides("sym", sym.coproduct, sym.smash, sym.antipode, lam),
                )
            )
    return cases


# ---------------------------------------------------------------------------
# duality between NSym and QSym


def duality_cases(max_degree: int) -> list[Case]:
    cases = []
    for gamma in _comps(0, max_degree):

        def check(gamma=gamma):
            n = sum(gamma)
            # quasi-shuffle structure constants read as a coproduct
            acc = {}
            for i in range(n + 1):
                for a in cb.compositions_of(i):
                    for b in cb.compositions_of(n - i):
                        c = qsym.quasi_shuffle_basis(a, b).coefficient(gamma)
                        if c:
                            acc[(a, b)] = c
            r = _compare("nsym", nsym.coproduct_X(gamma), TensorSum(acc), True)
            if r.ok:
                # deconcatenation against concatenation of X
                acc = {}
                for i in range(n + 1):
                    for a in cb.compositions_of(i):
                        for b in cb.compositions_of(n - i):
                            c = nsym.convolve_X(a, b).coefficient(gamma)
                            if c:
                                acc[(a, b)] = c
                r = _compare("qsym", qsym.coproduct_star(qsym.M(*gamma)), TensorSum(acc), True)
            return r

        cases.append(Case(_name(gamma), check))
    return cases


# ---------------------------------------------------------------------------
# alphabet evaluations against duality


def alphabet_cases(max_degree: int, variables: int | None = None, smash_degree: int | None = None) -> list[Case]:
    m = max_degree + 1 if variables is None else variables
    sd = max_degree if smash_degree is None else smash_degree
    cases = []
    for alpha in _comps(1, max_degree):

        def check(alpha=alpha):
            f = qsym.M(*alpha)
            r = _compare("qsym", qsym.coproduct_circ_alphabet(f, m), qsym.coproduct_circ(f), True)
            if r.ok:
                r = _compare("qsym", qsym.coproduct_star_alphabet(f, m), qsym.coproduct_star(f), True)
            return r

        cases.append(Case(f"product and sum alphabets {_name(alpha)}", check))
    for alpha in _comps(1, sd):
        cases.append(
            Case(
                f"smash alphabet {_name(alpha)}",
                lambda alpha=alpha: _compare(
                    "qsym", qsym.coproduct_smash_alphabet(qsym.M(*alpha)), qsym.coproduct_smash(qsym.M(*alpha)), True
                ),
            )
        )
    return cases


# ---------------------------------------------------------------------------
# antipode of QSym: duality against f(-X*)


def antipode_cases(max_degree: int) -> tuple[list[Case], Callable]:
    d = max_degree
    comps = list(_comps(1, d))
    cases = []
    for alpha in comps:

        def axiom(alpha=alpha):
            defect = qsym.antipode_axiom_defect(qsym.M(*alpha), d)
            if defect:
                return CaseResult(False, f"axiom defect {_show('qsym', defect)}")
            return _ok()

        cases.append(Case(f"axiom {_name(alpha)}", axiom))
    for conv in al.ALL_CONVENTIONS:

        def measure(conv=conv):
            # which compositions the convention gets wrong; a measurement, never a failure
            wrong = []
            for alpha in comps:
                f = qsym.M(*alpha)
                if qsym.antipode_smash_alphabet(f, d, convention=conv).terms != qsym.antipode_smash(f, d).terms:
                    wrong.append(list(alpha))
            return _ok(wrong)

        cases.append(Case(f"convention {conv}", measure))

    def summarize(results: list[CaseResult]) -> tuple[list, dict]:
        wrong = {conv: r.data for conv, r in zip(al.ALL_CONVENTIONS, results[len(comps):])}
        matching = [c for c in al.SIGN_CONVENTIONS if not wrong[c]]
        notes = {
            "certified_convention": matching[0] if len(matching) == 1 else None,
            "conventions": {c: ("matches" if not w else f"differs at {w[:3]}") for c, w in wrong.items()},
        }
        failures = []
        if len(matching) != 1:
            failures.append(
                {
                    "case": "sign conventions",
                    "detail": f"expected exactly one of {list(al.SIGN_CONVENTIONS)} to match through degree {d}, "
                    f"matching: {matching}",
                }
            )
        return failures, notes

    return cases, summarize


# ---------------------------------------------------------------------------
# phi: NSym -> Sym


def phi_cases(max_degree: int) -> list[Case]:
    cases = []
    for a, b in _pairs(max_degree):

        def check(a=a, b=b):
            x, y = nsym.X(*a), nsym.X(*b)
            r = _compare("sym", sym.phi(nsym.smash(x, y)), sym.smash(sym.phi(x), sym.phi(y)))
            if r.ok:
                r = _compare("sym", sym.phi(nsym.convolve(x, y)), sym.external(sym.phi(x), sym.phi(y)))
            if r.ok and sum(a) == sum(b):
                r = _compare("sym", sym.phi(nsym.internal(x, y)), sym.internal(sym.phi(x), sym.phi(y)))
            return r

        cases.append(Case(f"products {_name(a, b)}", check))
    for alpha in _comps(0, max_degree):
        cases.append(
            Case(
                f"coproduct {_name(alpha)}",
                lambda alpha=alpha: _compare(
                    "sym", sym.phi_tensor(nsym.coproduct_X(alpha)), sym.coproduct(sym.phi(nsym.X(*alpha))), True
                ),
            )
        )
    return cases


# ---------------------------------------------------------------------------
# psi: (NSym, *) -> (NSym, #)


def psi_matrix(max_degree: int) -> tuple[list, DomainMatrix]:
    """Matrix of Psi on the span of ``X_alpha`` with ``|alpha| <= max_degree``."""
    basis = list(_comps(0, max_degree))
    index = {a: i for i, a in enumerate(basis)}
    rows = [[0] * len(basis) for _ in basis]
    for j, a in enumerate(basis):
        for k, c in nsym.iso_psi_basis(a).items():
            rows[index[k]][j] = c
    return basis, DomainMatrix([[ZZ(v) for v in row] for row in rows], (len(basis), len(basis)), ZZ)


def exponential_cases(max_degree: int, variables: int | None = None) -> list[Case]:
    """``<f(e(X)), X_alpha> = <f, psi(X_alpha)>`` for ``f = M_beta``, ``|alpha|, |beta| <= max_degree``."""
    ed = max_degree
    m = ed + 1 if variables is None else variables
    cases = []
    for beta in _comps(0, ed):

        def exp_check(beta=beta):
            f = qsym.M(*beta)
            series = qsym.phi_hat(f, ed, m)
            for alpha in _comps(0, ed):
                lhs = series.pair(nsym.X(*alpha))
                rhs = qsym.pairing(f, nsym.iso_psi_basis(alpha))
                if lhs != rhs:
                    return CaseResult(False, f"<f(e(X)), X{list(alpha)}> = {lhs} but <f, psi(X{list(alpha)})> = {rhs}")
            return _ok()

        cases.append(Case(f"exponential alphabet {_name(beta)}", exp_check))
    return cases


def psi_cases(max_degree: int, exponential: bool = True, variables: int | None = None) -> list[Case]:
    cases = []
    for a, b in _pairs(max_degree, lo=0):
        cases.append(
            Case(
                f"product {_name(a, b)}",
                lambda a=a, b=b: _compare(
                    "nsym", nsym.iso_psi(nsym.convolve_X(a, b)), nsym.smash(nsym.iso_psi_basis(a), nsym.iso_psi_basis(b))
                ),
            )
        )
    for alpha in _comps(0, max_degree):

        def check(alpha=alpha):
            img = nsym.iso_psi_basis(alpha)
            r = _compare("nsym", nsym.psi_tensor(nsym.coproduct_X(alpha)), nsym.coproduct(img), True)
            if r.ok:
                n = sum(alpha)
                top = _top(img, n)
                above = [k for k in img if sum(k) > n]
                if top != FormalSum.basis(alpha) or above:
                    r = CaseResult(False, f"not unitriangular: {_show('nsym', img)}")
            return r

        cases.append(Case(f"coproduct and filtration {_name(alpha)}", check))

    def rank():
        basis, mat = psi_matrix(max_degree)
        rk = mat.rank()
        if rk != len(basis):
            return CaseResult(False, f"rank {rk} < {len(basis)}")
        return _ok(rk)

    cases.append(Case(f"rank through degree {max_degree}", rank))
    if exponential:
        cases.extend(exponential_cases(max_degree, variables))
    return cases


# ---------------------------------------------------------------------------
# associativity of the smash product


def assoc_cases(max_degree: int) -> list[Case]:
    cases = []
    for n in range(3, max_degree + 1):
        for degs in itertools.product(range(1, n - 1), repeat=3):
            if sum(degs) != n:
                continue

            def check_n(degs=degs):
                for a in cb.compositions_of(degs[0]):
                    for b in cb.compositions_of(degs[1]):
                        for c in cb.compositions_of(degs[2]):
                            x, y, z = nsym.X(*a), nsym.X(*b), nsym.X(*c)
                            r = _compare("nsym", nsym.smash(nsym.smash(x, y), z), nsym.smash(x, nsym.smash(y, z)))
                            if not r.ok:
                                return CaseResult(False, f"{_name(a, b, c)}: {r.detail}")
                for a in cb.partitions_of(degs[0]):
                    for b in cb.partitions_of(degs[1]):
                        for c in cb.partitions_of(degs[2]):
                            x, y, z = sym.h(*a), sym.h(*b), sym.h(*c)
                            r = _compare("sym", sym.smash(sym.smash(x, y), z), sym.smash(x, sym.smash(y, z)))
                            if not r.ok:
                                return CaseResult(False, f"{_name(a, b, c)}: {r.detail}")
                for s in cb.permutations_of(degs[0]):
                    for t in cb.permutations_of(degs[1]):
                        for u in cb.permutations_of(degs[2]):
                            x, y, z = FormalSum.basis(s), FormalSum.basis(t), FormalSum.basis(u)
                            r = _compare("perm", perm.smash(perm.smash(x, y), z), perm.smash(x, perm.smash(y, z)))
                            if not r.ok:
                                return CaseResult(False, f"{_name(s, t, u)}: {r.detail}")
                return _ok()

            cases.append(Case(f"degrees {degs}", check_n))
    return cases


# ---------------------------------------------------------------------------
# runner

SUITES: dict[str, Callable] = {
    "interpolation": interpolation_cases,
    "oracle": oracle_cases,
    "closure": closure_cases,
    "hopf": hopf_cases,
    "duality": duality_cases,
    "alphabet": alphabet_cases,
    "antipode": antipode_cases,
    "phi": phi_cases,
    "psi": psi_cases,
    "assoc": assoc_cases,
}


def thread_count() -> int:
    raw = os.environ.get(THREADS_ENV, "")
    try:
        return max(1, int(raw)) if raw else 1
    except ValueError:
        return 1


def _safe(case: Case) -> CaseResult:
    try:
        return case.check()
    except Exception as e:  # reported as a failing case, not a crash
        return CaseResult(False, f"{type(e).__name__}: {e}")


def run_cases(cases: list[Case], threads: int | None = None) -> list[CaseResult]:
    threads = thread_count() if threads is None else threads
    if threads <= 1:
        return [_safe(c) for c in cases]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(_safe, cases))


def run_suite(name: str, max_degree: int, threads: int | None = None, **options) -> Report:
    """Run one suite; extra keyword options go to the case builder."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    built = SUITES[name](max_degree, **options)
    cases, summarize = built if isinstance(built, tuple) else (built, None)
    results = run_cases(cases, threads)
    report = Report(name, max_degree, len(cases))
    for case, r in zip(cases, results):
        if not r.ok:
            report.failures.append({"case": case.name, "detail": r.detail})
    if summarize is not None:
        extra, notes = summarize(results)
        report.failures.extend(extra)
        report.notes.update(notes)
    return report

