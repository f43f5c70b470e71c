import itertools

import pytest
from hypothesis import given

from conftest import compositions, partitions
from smashprod import combinatorics as cb
from smashprod import nsym, sym
from smashprod.formal import FormalSum, TensorSum
from smashprod.sym import h


def _ssyt_count(shape, content):
    """Brute-force count of semistandard tableaux."""
    cells = [(i, j) for i, r in enumerate(shape) for j in range(r)]
    letters = [v for v, k in enumerate(content, start=1) for _ in range(k)]
    seen = set()
    for filling in set(itertools.permutations(letters)):
        t = dict(zip(cells, filling))
        rows_ok = all(t[(i, j)] <= t[(i, j + 1)] for (i, j) in cells if (i, j + 1) in t)
        cols_ok = all(t[(i, j)] < t[(i + 1, j)] for (i, j) in cells if (i + 1, j) in t)
        if rows_ok and cols_ok:
            seen.add(filling)
    return len(seen)


def test_paper_example():
    want = h(2, 1) + h(1, 1, 1, 1) + h(2, 1, 1) + h(2, 2, 1) + h(2, 1, 1, 1) + h(3, 2, 1)
    assert sym.smash(h(2, 1), h(3)) == want


def test_unit_and_external():
    assert sym.smash(h(), h(2, 1)) == h(2, 1)
    assert sym.external_h((2,), (1,)) == (2, 1)
    assert sym.external_h((), (3, 1)) == (3, 1)
    assert sym.external_h((2, 1), (3,)) == (3, 2, 1)


@given(partitions(1, 4), partitions(1, 4))
def test_top_component_is_external(lam, mu):
    s = sym.smash_h(lam, mu)
    top = FormalSum._raw({k: c for k, c in s.items() if sum(k) == sum(lam) + sum(mu)})
    assert top == h(*sym.external_h(lam, mu))


@given(partitions(1, 4), partitions(1, 4))
def test_smash_commutative(lam, mu):
    assert sym.smash_h(lam, mu) == sym.smash_h(mu, lam)


@given(compositions(1, 3), compositions(1, 3))
def test_phi_is_multiplicative(alpha, beta):
    assert sym.phi(nsym.smash_X(alpha, beta)) == sym.smash(sym.phi(nsym.X(*alpha)), sym.phi(nsym.X(*beta)))


def test_internal_on_h():
    # h_(n) is the trivial representation, the unit of the Kronecker product
    assert sym.internal(h(3), h(2, 1)) == h(2, 1)
    with pytest.raises(cb.RangeError):
        sym.internal(h(2), h(1))


def test_coproduct():
    assert sym.coproduct(h(2)) == TensorSum({((2,), ()): 1, ((1,), (1,)): 1, ((), (2,)): 1})


def test_antipode_axiom():
    for n in range(0, 5):
        for lam in cb.partitions_of(n):
            total = FormalSum()
            for (u, v), c in sym.coproduct_h(lam).items():
                total = total + c * sym.smash(sym.antipode(FormalSum.basis(u)), FormalSum.basis(v))
            assert total == (h() if n == 0 else FormalSum())


@pytest.mark.parametrize("n", range(1, 6))
def test_kostka_matches_tableau_count(n):
    for lam in cb.partitions_of(n):
        for mu in cb.partitions_of(n):
            assert sym.kostka(lam, mu) == _ssyt_count(lam, mu)


def test_schur_round_trip():
    for n in range(5):
        for lam in cb.partitions_of(n):
            s = FormalSum.basis(lam)
            assert sym.schur_expand(sym.schur_to_h(s)) == s


def test_schur_expansion_example():
    assert sym.schur_expand(h(2, 1)) == FormalSum({(3,): 1, (2, 1): 1})


def test_schur_smash_contains_littlewood_richardson_top():
    # top degree of s_(1) # s_(1) is s_(1)*s_(1) = s_(2) + s_(1,1)
    got = sym.smash_s((1,), (1,))
    assert FormalSum._raw({k: c for k, c in got.items() if sum(k) == 2}) == FormalSum({(2,): 1, (1, 1): 1})
