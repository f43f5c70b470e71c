import itertools

import pytest
from hypothesis import given

from conftest import compositions, permutations
from smashprod import combinatorics as cb


def _compositions_oracle(n):
    if n == 0:
        return {()}
    return {(a,) + rest for a in range(1, n + 1) for rest in _compositions_oracle(n - a)}


def _margin_oracle(cols, rows):
    """Every matrix with entries bounded by the margins, filtered."""
    out = []
    cells = len(cols) * len(rows)
    bound = max(cols + rows) + 1
    for flat in itertools.product(range(bound), repeat=cells):
        m = [flat[i * len(cols):(i + 1) * len(cols)] for i in range(len(rows))]
        if m[0][0] != 0:
            continue
        if [sum(r) for r in m] == list(rows) and [sum(c) for c in zip(*m)] == list(cols):
            out.append(tuple(flat))
    return sorted(out)


def test_small_compositions():
    assert cb.compositions_of(0) == ((),)
    assert set(cb.compositions_of(3)) == {(3,), (2, 1), (1, 2), (1, 1, 1)}
    assert len(cb.compositions_of(5)) == 16


@pytest.mark.parametrize("n", range(8))
def test_compositions_match_recursion(n):
    got = cb.compositions_of(n)
    assert len(got) == len(set(got))
    assert set(got) == _compositions_oracle(n)


def test_partitions():
    assert cb.partitions_of(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert [len(cb.partitions_of(n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]


def test_constructors_validate():
    assert cb.partition([1, 2, 1]) == (2, 1, 1)
    with pytest.raises(ValueError):
        cb.composition([2, 0])
    with pytest.raises(ValueError):
        cb.permutation([1, 3])


def test_subset_to_composition():
    assert cb.subset_to_composition(cb.DescentSubset(9, frozenset({1, 3, 7}))) == (1, 2, 4, 2)
    assert cb.subset_to_composition(cb.DescentSubset(4, frozenset())) == (4,)
    assert cb.subset_to_composition(cb.DescentSubset(3, frozenset({1, 2}))) == (1, 1, 1)


def test_descent_subset_range_checked():
    with pytest.raises(cb.RangeError):
        cb.DescentSubset(3, frozenset({3}))


def test_descent_sets():
    assert cb.descent_set((1, 2, 3, 4)).elements == frozenset()
    assert cb.descent_set((3, 1, 4, 2)).elements == frozenset({1, 3})
    assert cb.descent_set((5, 4, 3, 2, 1)).elements == frozenset({1, 2, 3, 4})


@given(compositions(max_size=7))
def test_subset_composition_round_trip(alpha):
    assert cb.subset_to_composition(cb.composition_to_subset(alpha)) == alpha


def test_times():
    assert cb.times((1, 2), (1,)) == (1, 2, 3)
    assert cb.times((2, 1), (1,)) == (2, 1, 3)
    assert cb.times((1,), (2, 1)) == (1, 3, 2)


def test_compose_orientation():
    assert cb.compose((2, 1), (2, 1)) == (1, 2)
    assert cb.compose((2, 3, 1), (3, 1, 2)) == (1, 2, 3)
    # functional: (s o t)(i) = s(t(i))
    s, t = (2, 3, 1), (1, 3, 2)
    assert cb.compose(s, t) == tuple(s[t[i] - 1] for i in range(3))


@given(permutations(max_size=6))
def test_inverse(sigma):
    assert cb.compose(sigma, cb.inverse(sigma)) == cb.identity(len(sigma))


def test_shuffles():
    assert set(cb.shuffles(1, 1)) == {(1, 2), (2, 1)}
    assert set(cb.shuffles(2, 1)) == {(1, 2, 3), (1, 3, 2), (2, 3, 1)}
    assert cb.shuffles(0, 3) == ((1, 2, 3),)


@pytest.mark.parametrize("p,q", [(2, 3), (3, 3), (1, 4)])
def test_shuffles_are_the_increasing_blocks(p, q):
    want = {s for s in itertools.permutations(range(1, p + q + 1)) if list(s[:p]) == sorted(s[:p]) and list(s[p:]) == sorted(s[p:])}
    assert set(cb.shuffles(p, q)) == want


def test_max_shuffle():
    assert cb.max_shuffle(1, 1) == (2, 1)
    assert cb.max_shuffle(2, 1) == (2, 3, 1)
    assert cb.max_shuffle(0, 3) == (1, 2, 3)
    for u, v in [(2, 2), (3, 1), (1, 3)]:
        best = max(cb.shuffles(u, v), key=cb.inversions)
        assert cb.max_shuffle(u, v) == best


def test_margin_examples():
    ms = cb.margin_matrices((2, 1), (3,), 3)
    assert [m.entries for m in ms] == [((0, 0, 0), (0, 2, 1))]
    assert len(cb.margin_matrices((2, 1), (3,), 4)) == 2
    assert [m.entries for m in cb.margin_matrices((1,), (1,), 2)] == [((0, 1), (1, 0))]


def test_reading():
    m = cb.MarginMatrix(((0, 2, 1), (3, 0, 0)))
    assert cb.reading_composition(m) == (2, 1, 3)
    assert cb.reading_partition(m) == (3, 2, 1)
    assert cb.reading_composition(cb.MarginMatrix(((0, 1, 0), (1, 1, 1)))) == (1, 1, 1, 1)


def test_margin_matrix_validation():
    with pytest.raises(ValueError):
        cb.MarginMatrix(((1, 0), (0, 1)))
    with pytest.raises(cb.RangeError):
        cb.margin_matrices((1,), (1,), 3)


@pytest.mark.parametrize(
    "alpha,beta",
    [((1,), (1,)), ((2, 1), (3,)), ((1, 1), (1, 2)), ((2,), (1, 1, 1)), ((1, 2), (2, 1))],
)
def test_margin_matrices_match_exhaustive_fill(alpha, beta):
    p, q = sum(alpha), sum(beta)
    for n in range(max(p, q), p + q + 1):
        got = [tuple(v for row in m.entries for v in row) for m in cb.margin_matrices(alpha, beta, n)]
        assert got == _margin_oracle((n - p,) + alpha, (n - q,) + beta)


@given(compositions(1, 4), compositions(1, 4))
def test_margin_matrices_have_the_margins(alpha, beta):
    p, q = sum(alpha), sum(beta)
    for n in range(max(p, q), p + q + 1):
        for m in cb.margin_matrices(alpha, beta, n):
            assert m.col_sums == (n - p,) + alpha
            assert m.row_sums == (n - q,) + beta
            assert m.entries[0][0] == 0
