"""Non-commutative symmetric functions on the basis ``X_alpha``.

``X_alpha`` is the sum of all permutations whose descent set is contained in
the subset attached to ``alpha``.  Elements are :class:`FormalSum` objects over
composition tuples.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from smashprod import combinatorics as cb
from smashprod.formal import (
    FormalSum,
    TensorSum,
    apply_tensor,
    bilinear_extend,
    linear_combination,
    tensor_product,
)

UNIT = ()


def X(*parts) -> FormalSum:
    """``X(2, 1)`` is the basis element ``X_(2,1)``."""
    return FormalSum.basis(cb.composition(parts))


def degree(alpha) -> int:
    return sum(alpha)


def counit(x: FormalSum) -> int:
    return x.coefficient(UNIT)


# ---------------------------------------------------------------------------
# embedding into the permutation algebra


@lru_cache(maxsize=None)
def _descent_classes(n: int) -> dict:
    classes: dict = {}
    for sigma in cb.permutations_of(n):
        classes.setdefault(cb.descent_set(sigma).elements, []).append(sigma)
    return classes


@lru_cache(maxsize=4096)
def _embed_basis(alpha: tuple) -> tuple:
    J = cb.composition_to_subset(alpha)
    return tuple(s for elems, perms in _descent_classes(J.n).items() if elems <= J.elements for s in perms)


def embed(x: FormalSum) -> FormalSum:
    acc: dict = {}
    for alpha, c in x.items():
        for sigma in _embed_basis(alpha):
            acc[sigma] = acc.get(sigma, 0) + c
    return FormalSum(acc)


class NotInSpan(ValueError):
    """A combination of permutations is not a combination of descent classes."""


def express_in_X(f: FormalSum) -> FormalSum:
    """Inverse of :func:`embed` on its image.

    The coefficient must be constant on each descent class; the class sums
    are then converted to the X basis by inclusion-exclusion over subsets.
    Raises :class:`NotInSpan` otherwise.
    """
    by_degree: dict[int, dict] = {}
    for sigma, c in f.items():
        by_degree.setdefault(len(sigma), {})[sigma] = c
    out: dict = {}
    for n, coeffs in by_degree.items():
        ribbon: dict = {}
        for elems, perms in _descent_classes(n).items():
            values = {coeffs.get(s, 0) for s in perms}
            if len(values) != 1:
                raise NotInSpan(f"coefficients vary within the descent class {sorted(elems)} of S_{n}")
            v = values.pop()
            if v:
                ribbon[elems] = v
        # ribbon_J = sum over K inside J of (-1)^{|J - K|} X_K
        for elems, v in ribbon.items():
            inside = sorted(elems)
            for k in range(len(inside) + 1):
                for dropped in itertools.combinations(inside, k):
                    K = cb.DescentSubset(n, elems - set(dropped))
                    alpha = cb.subset_to_composition(K)
                    out[alpha] = out.get(alpha, 0) + (-1) ** k * v
    return FormalSum(out)


# ---------------------------------------------------------------------------
# products


@lru_cache(maxsize=None)
def _smash_basis(alpha: tuple, beta: tuple) -> FormalSum:
    p, q = sum(alpha), sum(beta)
    acc: dict = {}
    for n in range(max(p, q), p + q + 1):
        for gamma in cb.reading_compositions(alpha, beta, n):
            acc[gamma] = acc.get(gamma, 0) + 1
    return FormalSum._raw(acc)


def smash_X(alpha, beta) -> FormalSum:
    """``X_alpha # X_beta``: one ``X_c(M)`` per margin matrix, all degrees."""
    return _smash_basis(tuple(alpha), tuple(beta))


def convolve_X(alpha, beta) -> FormalSum:
    return FormalSum.basis(tuple(alpha) + tuple(beta))


@lru_cache(maxsize=None)
def _internal_basis(alpha: tuple, beta: tuple) -> FormalSum:
    n = sum(alpha)
    if n != sum(beta):
        raise cb.RangeError(f"internal product needs equal degrees, got {n} and {sum(beta)}")
    acc: dict = {}
    for gamma in cb.reading_compositions(alpha, beta, n):
        acc[gamma] = acc.get(gamma, 0) + 1
    return FormalSum._raw(acc)


def internal_X(alpha, beta) -> FormalSum:
    """Descent-algebra product: margin matrices with column sums ``alpha``
    and row sums ``beta`` (the zero border row and column are forced)."""
    return _internal_basis(tuple(alpha), tuple(beta))


smash = bilinear_extend(smash_X)
convolve = bilinear_extend(convolve_X)


def _internal_rule(alpha, beta):
    if sum(alpha) != sum(beta):
        raise cb.RangeError(f"internal product needs equal degrees, got {sum(alpha)} and {sum(beta)}")
    return internal_X(alpha, beta)


internal = bilinear_extend(_internal_rule)


def smash_power(x: FormalSum, k: int) -> FormalSum:
    result = FormalSum.basis(UNIT)
    for _ in range(k):
        result = smash(result, x)
    return result


def component(x: FormalSum, n: int) -> FormalSum:
    return FormalSum._raw({a: c for a, c in x.items() if sum(a) == n})


# ---------------------------------------------------------------------------
# coproduct, antipode, isomorphism


@lru_cache(maxsize=None)
def coproduct_X(alpha) -> TensorSum:
    """Split every part ``a_i = b_i + c_i`` and drop zero parts on each side."""
    acc: dict = {}
    for split in itertools.product(*(range(a + 1) for a in alpha)):
        left = tuple(b for b in split if b)
        right = tuple(a - b for a, b in zip(alpha, split) if a - b)
        acc[(left, right)] = acc.get((left, right), 0) + 1
    return TensorSum._raw(acc)


def coproduct(x: FormalSum) -> TensorSum:
    return linear_combination(((c, coproduct_X(a)) for a, c in x.items()), cls=TensorSum)


smash_tensor = tensor_product(smash_X, smash_X)
convolve_tensor = tensor_product(convolve_X, convolve_X)


@lru_cache(maxsize=None)
def _antipode_basis(alpha: tuple) -> FormalSum:
    if not alpha:
        return FormalSum.basis(UNIT)
    result = FormalSum.basis(alpha, -1)
    for (left, right), c in coproduct_X(alpha).items():
        if not left or not right:
            continue
        result = result - c * smash(_antipode_basis(left), FormalSum.basis(right))
    return result


def antipode_sigma(x: FormalSum) -> FormalSum:
    """Antipode of (NSym, #, coproduct) from ``sum S(u1) # u2 = counit(u)``."""
    return linear_combination((c, _antipode_basis(a)) for a, c in x.items())


@lru_cache(maxsize=None)
def _psi_basis(alpha: tuple) -> FormalSum:
    result = FormalSum.basis(UNIT)
    for a in alpha:
        result = smash(result, FormalSum.basis((a,)))
    return result


def iso_psi(x: FormalSum) -> FormalSum:
    """``X_(a1,...,ar) -> X_(a1) # ... # X_(ar)``, extended linearly."""
    return linear_combination((c, _psi_basis(a)) for a, c in x.items())


def iso_psi_basis(alpha) -> FormalSum:
    return _psi_basis(tuple(alpha))


def psi_tensor(x: TensorSum) -> TensorSum:
    return apply_tensor(_psi_basis, _psi_basis, x)


def smash_table(p: int, q: int) -> dict:
    """``{(alpha, beta): X_alpha # X_beta}`` over all compositions of ``p`` and ``q``."""
    return {(a, b): smash_X(a, b) for a in cb.compositions_of(p) for b in cb.compositions_of(q)}
