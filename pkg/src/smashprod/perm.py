"""The algebra of permutations with composition, convolution and smash
products, computed from closed formulas (no tensor-algebra evaluation)."""

from __future__ import annotations

from functools import lru_cache

from smashprod import combinatorics as cb
from smashprod.formal import FormalSum, bilinear_extend


def perm_sum(*perms, coeffs=None) -> FormalSum:
    coeffs = coeffs or [1] * len(perms)
    return FormalSum((cb.permutation(p), c) for p, c in zip(perms, coeffs))


def _compose_rule(sigma, tau) -> FormalSum:
    if len(sigma) != len(tau):
        return FormalSum()
    return FormalSum.basis(cb.compose(sigma, tau))


@lru_cache(maxsize=200_000)
def _convolve_terms(sigma, tau) -> tuple:
    p, q = len(sigma), len(tau)
    st = cb.times(sigma, tau)
    terms = [cb.compose(xi, st) for xi in cb.shuffles(p, q)]
    # distinct shuffles give distinct products
    assert len(set(terms)) == len(terms)
    return tuple(terms)


def _convolve_rule(sigma, tau) -> FormalSum:
    return FormalSum._raw(dict.fromkeys(_convolve_terms(sigma, tau), 1))


@lru_cache(maxsize=200_000)
def _smash_terms(sigma, tau) -> dict:
    p, q = len(sigma), len(tau)
    acc: dict = {}
    for n in range(max(p, q), p + q + 1):
        k = p + q - n
        beta = cb.max_shuffle(2 * n - p - q, k)
        right = cb.compose(beta, cb.times(cb.identity(n - q), tau))
        one = cb.identity(n - p)
        for eta in cb.shuffles(k, n - q):
            left_block = cb.times(cb.compose(sigma, eta), one)
            tail = cb.compose(left_block, right)
            for xi in cb.shuffles(p, n - p):
                w = cb.compose(xi, tail)
                acc[w] = acc.get(w, 0) + 1
    return acc


def _smash_rule(sigma, tau) -> FormalSum:
    """Sum over ``n``, ``xi in Sh(p, n-p)``, ``eta in Sh(p+q-n, n-q)`` of
    ``xi o ((sigma o eta) x 1_{n-p}) o beta_{2n-p-q, p+q-n} o (1_{n-q} x tau)``."""
    return FormalSum._raw(dict(_smash_terms(tuple(sigma), tuple(tau))))


compose = bilinear_extend(_compose_rule)
compose.__doc__ = "Group-algebra product ``sigma o tau``; pairs of different degree give 0."

convolve = bilinear_extend(_convolve_rule)
convolve.__doc__ = "Malvenuto-Reutenauer convolution: sum over shuffles of ``xi o (sigma x tau)``."

smash = bilinear_extend(_smash_rule)
smash.__doc__ = "Smash product; output degrees run from ``max(p, q)`` to ``p + q``."


def degree_component(x: FormalSum, n: int) -> FormalSum:
    return FormalSum._raw({s: c for s, c in x.items() if len(s) == n})
