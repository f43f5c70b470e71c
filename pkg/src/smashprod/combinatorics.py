"""Compositions, partitions, permutations, descent sets and margin matrices.

Conventions
-----------
* A composition or partition is a plain ``tuple`` of positive ints; the
  empty tuple is the unique composition of 0.
* A permutation is a ``tuple`` in one-line notation on ``1..n``.
* Permutations multiply as functions: ``compose(s, t)(i) == s[t[i]]``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import NewType

from smashprod import kernels

Composition = NewType("Composition", tuple)
Partition = NewType("Partition", tuple)
Permutation = NewType("Permutation", tuple)


class RangeError(ValueError):
    """An integer parameter lies outside its admissible range."""


def is_composition(alpha) -> bool:
    return isinstance(alpha, tuple) and all(isinstance(a, int) and a >= 1 for a in alpha)


def is_partition(lam) -> bool:
    return is_composition(lam) and all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1))


def is_permutation(sigma) -> bool:
    return isinstance(sigma, tuple) and sorted(sigma) == list(range(1, len(sigma) + 1))


def composition(parts) -> Composition:
    alpha = tuple(int(a) for a in parts)
    if not is_composition(alpha):
        raise ValueError(f"not a composition: {parts!r}")
    return Composition(alpha)


def partition(parts) -> Partition:
    """Sort the parts decreasingly; h_alpha only depends on the multiset."""
    return Partition(tuple(sorted(composition(parts), reverse=True)))


def permutation(images) -> Permutation:
    sigma = tuple(int(i) for i in images)
    if not is_permutation(sigma):
        raise ValueError(f"not a permutation of 1..{len(sigma)}: {images!r}")
    return Permutation(sigma)


@lru_cache(maxsize=None)
def compositions_of(n: int) -> tuple[Composition, ...]:
    """All ``2**(n-1)`` compositions of ``n`` (one for ``n == 0``).

    Ordered by decreasing first part, recursively: ``(3), (2,1), (1,2), (1,1,1)``.
    """
    if n < 0:
        raise RangeError(f"n must be non-negative, got {n}")
    if n == 0:
        return ((),)
    out = []
    for first in range(n, 0, -1):
        for rest in compositions_of(n - first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if n < 0:
        raise RangeError(f"n must be non-negative, got {n}")

    def gen(m, largest):
        if m == 0:
            yield ()
            return
        for first in range(min(m, largest), 0, -1):
            for rest in gen(m - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


@dataclass(frozen=True)
class DescentSubset:
    """A subset of ``{1, ..., n-1}``."""

    n: int
    elements: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "elements", frozenset(self.elements))
        bad = [i for i in self.elements if not (1 <= i <= self.n - 1)]
        if bad:
            raise RangeError(f"elements {sorted(bad)} outside 1..{self.n - 1}")

    def __le__(self, other: DescentSubset) -> bool:
        return self.n == other.n and self.elements <= other.elements


def subset_to_composition(J: DescentSubset) -> Composition:
    cuts = [0] + sorted(J.elements) + [J.n]
    if J.n == 0:
        return Composition(())
    return Composition(tuple(cuts[i + 1] - cuts[i] for i in range(len(cuts) - 1)))


def composition_to_subset(alpha) -> DescentSubset:
    partial = list(itertools.accumulate(alpha))
    return DescentSubset(sum(alpha), frozenset(partial[:-1]))


def descent_set(sigma) -> DescentSubset:
    return DescentSubset(len(sigma), frozenset(i + 1 for i in range(len(sigma) - 1) if sigma[i] > sigma[i + 1]))


def descent_composition(sigma) -> Composition:
    return subset_to_composition(descent_set(sigma))


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def compose(sigma, tau) -> Permutation:
    """Functional composition ``sigma o tau``; degrees must agree."""
    if len(sigma) != len(tau):
        raise RangeError(f"cannot compose permutations of {len(sigma)} and {len(tau)}")
    return Permutation(tuple(sigma[t - 1] for t in tau))


def inverse(sigma) -> Permutation:
    inv = [0] * len(sigma)
    for i, s in enumerate(sigma, 1):
        inv[s - 1] = i
    return Permutation(tuple(inv))


def times(sigma, tau) -> Permutation:
    """Block-diagonal permutation: ``sigma`` on the first block, ``tau`` shifted."""
    p = len(sigma)
    return Permutation(tuple(sigma) + tuple(t + p for t in tau))


def inversions(sigma) -> int:
    n = len(sigma)
    return sum(1 for i in range(n) for j in range(i + 1, n) if sigma[i] > sigma[j])


@lru_cache(maxsize=None)
def shuffles(p: int, q: int) -> tuple[Permutation, ...]:
    """The ``(p, q)``-shuffles: increasing on ``1..p`` and on ``p+1..p+q``."""
    if p < 0 or q < 0:
        raise RangeError("shuffle block sizes must be non-negative")
    n = p + q
    out = []
    for first in itertools.combinations(range(1, n + 1), p):
        chosen = set(first)
        rest = tuple(i for i in range(1, n + 1) if i not in chosen)
        out.append(Permutation(first + rest))
    return tuple(out)


@lru_cache(maxsize=None)
def max_shuffle(u: int, v: int) -> Permutation:
    """The longest ``(u, v)``-shuffle: the first block moves past the second."""
    if u < 0 or v < 0:
        raise RangeError("shuffle block sizes must be non-negative")
    return Permutation(tuple(range(v + 1, v + u + 1)) + tuple(range(1, v + 1)))


@lru_cache(maxsize=None)
def permutations_of(n: int) -> tuple[Permutation, ...]:
    return tuple(Permutation(s) for s in itertools.permutations(range(1, n + 1)))


@dataclass(frozen=True)
class MarginMatrix:
    """Non-negative integer matrix with a zero top-left corner.

    Rows are indexed ``0..s`` and columns ``0..r``.  ``col_sums`` is
    ``(n-p, a_1, ..., a_r)`` and ``row_sums`` is ``(n-q, b_1, ..., b_s)``.
    """

    entries: tuple
    row_sums: tuple = ()
    col_sums: tuple = ()

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        if not rows or not rows[0]:
            raise ValueError("margin matrix needs at least one row and one column")
        if any(len(row) != len(rows[0]) for row in rows):
            raise ValueError("ragged matrix")
        if any(v < 0 for row in rows for v in row):
            raise ValueError("entries must be non-negative")
        if rows[0][0] != 0:
            raise ValueError("top-left entry must be 0")
        rs = tuple(sum(row) for row in rows)
        cs = tuple(sum(col) for col in zip(*rows))
        if self.row_sums and tuple(self.row_sums) != rs:
            raise ValueError(f"row sums {rs} != {self.row_sums}")
        if self.col_sums and tuple(self.col_sums) != cs:
            raise ValueError(f"column sums {cs} != {self.col_sums}")
        object.__setattr__(self, "row_sums", rs)
        object.__setattr__(self, "col_sums", cs)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.entries), len(self.entries[0])


def _check_degree(alpha, beta, n):
    p, q = sum(alpha), sum(beta)
    if not (max(p, q) <= n <= p + q):
        raise RangeError(f"n={n} outside [max(p,q), p+q] = [{max(p, q)}, {p + q}]")
    return p, q


@lru_cache(maxsize=65536)
def _margin_flat(alpha: tuple, beta: tuple, n: int) -> tuple:
    p, q = _check_degree(alpha, beta, n)
    return tuple(kernels.margin_fill((n - p,) + alpha, (n - q,) + beta))


def margin_matrices(alpha, beta, n: int) -> list[MarginMatrix]:
    """The set of margin matrices for ``alpha |= p``, ``beta |= q`` in degree ``n``.

    Column sums ``(n-p, alpha)``, row sums ``(n-q, beta)``, zero corner,
    lexicographic order on row-major entries.
    """
    alpha, beta = tuple(alpha), tuple(beta)
    ncols = len(alpha) + 1
    out = []
    for flat in _margin_flat(alpha, beta, n):
        rows = tuple(flat[i:i + ncols] for i in range(0, len(flat), ncols))
        out.append(MarginMatrix(rows))
    return out


def reading_compositions(alpha, beta, n: int) -> tuple[Composition, ...]:
    """Row-major readings of all margin matrices in degree ``n`` (fast path)."""
    return _readings(tuple(alpha), tuple(beta), n)


@lru_cache(maxsize=65536)
def _readings(alpha: tuple, beta: tuple, n: int) -> tuple:
    return tuple(tuple(v for v in flat if v) for flat in _margin_flat(alpha, beta, n))


def reading_composition(M: MarginMatrix) -> Composition:
    """Nonzero entries read left to right, top to bottom."""
    return Composition(tuple(v for row in M.entries for v in row if v))


def reading_partition(M: MarginMatrix) -> Partition:
    return Partition(tuple(sorted(reading_composition(M), reverse=True)))


def dominates(lam, mu) -> bool:
    """Dominance order ``lam >= mu`` for partitions of the same size."""
    if sum(lam) != sum(mu):
        return False
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True
