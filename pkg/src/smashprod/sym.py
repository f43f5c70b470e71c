"""Symmetric functions on the complete basis ``h_lambda``, plus Schur
coordinates through Kostka numbers.

Representations are never built; every product is read off margin
matrices, with each reading sorted to a partition.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from smashprod import combinatorics as cb
from smashprod import nsym
from smashprod.formal import (
    FormalSum,
    TensorSum,
    apply_tensor,
    bilinear_extend,
    linear_combination,
    tensor_product,
)

UNIT = ()


def _sorted(parts) -> tuple:
    return tuple(sorted(parts, reverse=True))


def h(*parts) -> FormalSum:
    """``h(1, 2) == h(2, 1)``: keys are normalized to partitions."""
    return FormalSum.basis(cb.partition(parts))


@lru_cache(maxsize=None)
def _smash_basis(lam: tuple, mu: tuple) -> FormalSum:
    p, q = sum(lam), sum(mu)
    acc: dict = {}
    for n in range(max(p, q), p + q + 1):
        for reading in cb.reading_compositions(lam, mu, n):
            key = _sorted(reading)
            acc[key] = acc.get(key, 0) + 1
    return FormalSum._raw(acc)


def smash_h(lam, mu) -> FormalSum:
    """``h_lam # h_mu`` = sum over all margin matrices ``M`` of ``h_p(M)``."""
    return _smash_basis(_sorted(lam), _sorted(mu))


def external_h(lam, mu) -> tuple:
    return _sorted(tuple(lam) + tuple(mu))


def _external_rule(lam, mu) -> FormalSum:
    return FormalSum.basis(external_h(lam, mu))


@lru_cache(maxsize=None)
def _internal_basis(lam: tuple, mu: tuple) -> FormalSum:
    n = sum(lam)
    if n != sum(mu):
        raise cb.RangeError(f"internal product needs equal degrees, got {n} and {sum(mu)}")
    acc: dict = {}
    for reading in cb.reading_compositions(lam, mu, n):
        key = _sorted(reading)
        acc[key] = acc.get(key, 0) + 1
    return FormalSum._raw(acc)


def internal_h(lam, mu) -> FormalSum:
    """Kronecker product on the h basis (degree-``n`` margin matrices only)."""
    return _internal_basis(_sorted(lam), _sorted(mu))


smash = bilinear_extend(smash_h)
external = bilinear_extend(_external_rule)
internal = bilinear_extend(internal_h)


@lru_cache(maxsize=None)
def coproduct_h(lam) -> TensorSum:
    """``Delta(h_n) = sum_{i+j=n} h_i (x) h_j``, multiplicative over parts."""
    acc: dict = {}
    for split in itertools.product(*(range(a + 1) for a in lam)):
        left = _sorted(b for b in split if b)
        right = _sorted(a - b for a, b in zip(lam, split) if a - b)
        acc[(left, right)] = acc.get((left, right), 0) + 1
    return TensorSum._raw(acc)


def coproduct(x: FormalSum) -> TensorSum:
    return linear_combination(((c, coproduct_h(k)) for k, c in x.items()), cls=TensorSum)


smash_tensor = tensor_product(smash_h, smash_h)


def _phi_key(alpha) -> FormalSum:
    return FormalSum.basis(_sorted(alpha))


def phi(x: FormalSum) -> FormalSum:
    """``X_alpha -> h_alpha`` (sort the composition)."""
    return x.map_keys(_sorted)


def phi_tensor(x: TensorSum) -> TensorSum:
    return apply_tensor(_phi_key, _phi_key, x)


def antipode(x: FormalSum) -> FormalSum:
    """Antipode of (Sym, #, coproduct), pushed through ``phi``.

    ``phi`` is a surjective Hopf map, so ``S(h_lam) = phi(S(X_lam))``.
    """
    return phi(nsym.antipode_sigma(x))


# ---------------------------------------------------------------------------
# Schur coordinates


def _horizontal_strips(shape: tuple, k: int):
    """Shapes obtained from ``shape`` by adding a horizontal strip of size ``k``."""
    rows = list(shape) + [0]

    def grow(i, remaining, new):
        if i == len(rows):
            if remaining == 0:
                yield tuple(r for r in new if r)
            return
        cap = remaining if i == 0 else min(remaining, rows[i - 1] - rows[i])
        for add in range(cap, -1, -1):
            yield from grow(i + 1, remaining - add, new + [rows[i] + add])

    yield from grow(0, k, [])


@lru_cache(maxsize=None)
def kostka_row(mu: tuple) -> dict:
    """``{lam: K_{lam, mu}}``: semistandard tableaux of content ``mu``,
    enumerated by adding one horizontal strip per letter."""
    counts = {(): 1}
    for k in mu:
        nxt: dict = {}
        for shape, c in counts.items():
            for bigger in _horizontal_strips(shape, k):
                nxt[bigger] = nxt.get(bigger, 0) + c
        counts = nxt
    return counts


def kostka(lam, mu) -> int:
    return kostka_row(tuple(mu)).get(tuple(lam), 0)


def schur_expand(x: FormalSum) -> FormalSum:
    """h coordinates to Schur coordinates: ``h_mu = sum_lam K_{lam,mu} s_lam``."""
    return linear_combination((c, FormalSum(kostka_row(_sorted(mu)))) for mu, c in x.items())


@lru_cache(maxsize=None)
def _schur_to_h_basis(lam: tuple) -> FormalSum:
    # s_lam = h_lam - sum_{nu > lam} K_{nu,lam} s_nu; Kostka is unitriangular
    result = FormalSum.basis(lam)
    for nu, k in kostka_row(lam).items():
        if nu != lam and k:
            result = result - k * _schur_to_h_basis(nu)
    return result


def schur_to_h(s: FormalSum) -> FormalSum:
    """Schur coordinates to h coordinates (inverse Kostka matrix)."""
    return linear_combination((c, _schur_to_h_basis(_sorted(lam))) for lam, c in s.items())


def smash_s(lam, mu) -> FormalSum:
    """``s_lam # s_mu`` in Schur coordinates (exploratory)."""
    return schur_expand(smash(schur_to_h(FormalSum.basis(_sorted(lam))), schur_to_h(FormalSum.basis(_sorted(mu)))))


def smash_table(p: int, q: int) -> dict:
    return {(a, b): smash_h(a, b) for a in cb.partitions_of(p) for b in cb.partitions_of(q)}
