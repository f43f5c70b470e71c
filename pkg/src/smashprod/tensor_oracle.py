"""The tensor algebra T(V) on words, used as ground truth for products of
endomorphisms.

A word is a tuple of positive ints (letters index a basis of V).  A
permutation ``sigma`` of degree ``n`` acts on words of length ``n`` from the
right, ``v_1...v_n -> v_sigma(1)...v_sigma(n)``, and kills words of any other
length.  Products of endomorphisms are evaluated on the multilinear word
``(1, ..., n)``; the resulting combination of words *is* the combination of
permutations in one-line notation, since every permutation moves that word to
a distinct word.
"""

from __future__ import annotations

from collections.abc import Callable

from smashprod.combinatorics import RangeError
from smashprod.formal import FormalSum, TensorSum

Word = tuple


def concat(w1: Word, w2: Word) -> Word:
    return tuple(w1) + tuple(w2)


def unshuffle_coproduct(w: Word) -> TensorSum:
    """Sum over position subsets ``S`` of ``w|S (x) w|S^c``."""
    n = len(w)
    acc: dict = {}
    for mask in range(1 << n):
        left = tuple(w[i] for i in range(n) if mask >> i & 1)
        right = tuple(w[i] for i in range(n) if not mask >> i & 1)
        acc[(left, right)] = acc.get((left, right), 0) + 1
    return TensorSum(acc)


def coproduct(x: FormalSum) -> TensorSum:
    acc: dict = {}
    for w, c in x.items():
        for key, v in unshuffle_coproduct(w).items():
            acc[key] = acc.get(key, 0) + c * v
    return TensorSum(acc)


def multiply(x: TensorSum) -> FormalSum:
    return FormalSum((concat(a, b), c) for (a, b), c in x.items())


def act(sigma, w: Word) -> Word:
    if len(sigma) != len(w):
        raise RangeError(f"permutation of degree {len(sigma)} applied to a word of length {len(w)}")
    return tuple(w[s - 1] for s in sigma)


def endo_apply(f: FormalSum, x: FormalSum) -> FormalSum:
    """Apply a combination of permutations to a combination of words."""
    acc: dict = {}
    for w, cw in x.items():
        for sigma, cs in f.items():
            if len(sigma) == len(w):
                v = act(sigma, w)
                acc[v] = acc.get(v, 0) + cs * cw
    return FormalSum(acc)


def _generic(n: int) -> FormalSum:
    return FormalSum.basis(tuple(range(1, n + 1)))


def _degrees(f: FormalSum) -> set[int]:
    return {len(s) for s in f}


def _homogeneous(f: FormalSum) -> dict[int, FormalSum]:
    parts: dict[int, dict] = {}
    for s, c in f.items():
        parts.setdefault(len(s), {})[s] = c
    return {n: FormalSum(d) for n, d in parts.items()}


def _bilinear_by_degree(op: Callable[[FormalSum, int, FormalSum, int], FormalSum]):
    def extended(f: FormalSum, g: FormalSum) -> FormalSum:
        total = FormalSum()
        for p, fp in _homogeneous(f).items():
            for q, gq in _homogeneous(g).items():
                total = total + op(fp, p, gq, q)
        return total

    return extended


def _compose(f, p, g, q):
    if p != q:
        raise RangeError(f"composition needs equal degrees, got {p} and {q}")
    # (f o g)(w) = f(g(w))
    return endo_apply(f, endo_apply(g, _generic(p)))


def _convolve(f, p, g, q):
    n = p + q
    pieces = coproduct(_generic(n))
    acc: dict = {}
    for (a, b), c in pieces.items():
        if len(a) != p or len(b) != q:
            continue
        fa = endo_apply(f, FormalSum.basis(a))
        gb = endo_apply(g, FormalSum.basis(b))
        for u, cu in fa.items():
            for v, cv in gb.items():
                w = u + v
                acc[w] = acc.get(w, 0) + c * cu * cv
    return FormalSum(acc)


def _smash(f, p, g, q):
    """H -> H(x)H -> (f(x)1) -> (Delta(x)1) -> cyclic -> (1(x)m) -> (1(x)g) -> m."""
    total: dict = {}
    for n in range(max(p, q), p + q + 1):
        for (w1, w2), c in coproduct(_generic(n)).items():
            if len(w1) != p:
                continue
            for u, cu in endo_apply(f, FormalSum.basis(w1)).items():
                for (a, b), cab in unshuffle_coproduct(u).items():
                    # a (x) b (x) w2  ->  b (x) w2 (x) a  ->  b (x) (w2 a)
                    inner = w2 + a
                    if len(inner) != q:
                        continue
                    for v, cv in endo_apply(g, FormalSum.basis(inner)).items():
                        w = b + v
                        total[w] = total.get(w, 0) + c * cu * cab * cv
    return FormalSum(total)


endo_compose = _bilinear_by_degree(_compose)
endo_compose.__doc__ = """Composition ``f o g`` of endomorphisms, read off as permutations.

Because permutations act from the right this equals ``perm.compose(g, f)``.
"""

endo_convolve = _bilinear_by_degree(_convolve)
endo_convolve.__doc__ = "Convolution ``m o (f (x) g) o Delta`` read off as permutations."

endo_smash = _bilinear_by_degree(_smash)
endo_smash.__doc__ = """Smash product of endomorphisms, evaluated on generic words of every
degree ``n`` in ``[max(p, q), p + q]``."""
