"""Ordered alphabets and exact evaluation of quasi-symmetric functions on them.

An alphabet expression is a small tree of frozen dataclasses.  Enumerating
it gives a totally ordered list of letters; each letter carries a monomial
over the base variables (the value it is substituted by), its word length
and a display label.

``M_alpha(A)`` sums ``value(l_1)^a_1 ... value(l_r)^a_r`` over strictly
increasing letter chains ``l_1 < ... < l_r``.  Under :class:`Negative` the
chains are weakly decreasing and signed:

* ``global-part-count``: sign ``(-1)**r``, any letter may repeat;
* ``per-letter-length``: a letter of word length ``l`` contributes
  ``(-1)**l`` per use, any letter may repeat;
* ``parity-strict``: signs as per-letter-length, but letters of even length
  may not be used twice in a row (they behave as ordinary, positive letters).
"""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Union

from smashprod import kernels
from smashprod.formal import FormalSum, TensorSum

GLOBAL_PART_COUNT = "global-part-count"
PER_LETTER_LENGTH = "per-letter-length"
# as PER_LETTER_LENGTH, but even-length letters may not repeat in a chain
PARITY_STRICT = "parity-strict"
SIGN_CONVENTIONS = (GLOBAL_PART_COUNT, PER_LETTER_LENGTH)
ALL_CONVENTIONS = SIGN_CONVENTIONS + (PARITY_STRICT,)


class AlphabetError(ValueError):
    pass


class TruncationError(AlphabetError):
    """The finite model is too small to represent the requested degree."""


@dataclass(frozen=True)
class Base:
    tag: str
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise AlphabetError("a base alphabet needs at least one variable")


@dataclass(frozen=True)
class Sum:
    """Every letter of ``left`` precedes every letter of ``right``."""

    left: "AlphabetExpr"
    right: "AlphabetExpr"


@dataclass(frozen=True)
class Product:
    """Pairs in reverse lexicographic order (compare right factors first)."""

    left: "AlphabetExpr"
    right: "AlphabetExpr"


@dataclass(frozen=True)
class OnePlus:
    """A new unit letter, smaller than all others, in front of ``inner``."""

    inner: "AlphabetExpr"


@dataclass(frozen=True)
class ProductMinusOne:
    """``Product(left, right)`` without the pair of leading unit letters."""

    left: "AlphabetExpr"
    right: "AlphabetExpr"


@dataclass(frozen=True)
class Star:
    """Words of length ``1..max_len`` in reverse lexicographic order."""

    inner: "AlphabetExpr"
    max_len: int

    def __post_init__(self):
        if self.max_len < 1:
            raise AlphabetError("max_len must be at least 1")


@dataclass(frozen=True)
class Exp:
    """Strictly increasing words of length ``1..max_len`` (a subalphabet of Star)."""

    inner: "AlphabetExpr"
    max_len: int

    def __post_init__(self):
        if self.max_len < 1:
            raise AlphabetError("max_len must be at least 1")


@dataclass(frozen=True)
class Negative:
    inner: "AlphabetExpr"
    convention: str = PER_LETTER_LENGTH

    def __post_init__(self):
        if self.convention not in ALL_CONVENTIONS:
            raise AlphabetError(f"unknown sign convention {self.convention!r}")


AlphabetExpr = Union[Base, Sum, Product, OnePlus, ProductMinusOne, Star, Exp, Negative]


class Letter(NamedTuple):
    mono: tuple
    length: int
    label: str

    @property
    def degree(self) -> int:
        return sum(self.mono)

    @property
    def is_unit(self) -> bool:
        return not any(self.mono)


@lru_cache(maxsize=None)
def variables(expr: AlphabetExpr) -> tuple:
    """Base variables ``(tag, i)`` in order of first appearance."""
    sizes: dict[str, int] = {}

    def walk(e):
        if isinstance(e, Base):
            if sizes.setdefault(e.tag, e.m) != e.m:
                raise AlphabetError(f"alphabet {e.tag!r} used with sizes {sizes[e.tag]} and {e.m}")
        elif isinstance(e, (Sum, Product, ProductMinusOne)):
            walk(e.left)
            walk(e.right)
        elif isinstance(e, (OnePlus, Star, Exp, Negative)):
            walk(e.inner)
        else:
            raise AlphabetError(f"not an alphabet expression: {e!r}")

    walk(expr)
    return tuple((tag, i) for tag, m in sizes.items() for i in range(1, m + 1))


def _join(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


@lru_cache(maxsize=None)
def letters(expr: AlphabetExpr, _vars: tuple | None = None) -> tuple[Letter, ...]:
    """The ordered letters of a sign-free alphabet expression."""
    vs = _vars if _vars is not None else variables(expr)
    index = {v: i for i, v in enumerate(vs)}
    zero = (0,) * len(vs)

    def rec(e) -> list[Letter]:
        if isinstance(e, Base):
            out = []
            for i in range(1, e.m + 1):
                mono = list(zero)
                mono[index[(e.tag, i)]] = 1
                out.append(Letter(tuple(mono), 1, f"{e.tag}{i}"))
            return out
        if isinstance(e, Sum):
            return rec(e.left) + rec(e.right)
        if isinstance(e, OnePlus):
            return [Letter(zero, 0, "1")] + rec(e.inner)
        if isinstance(e, (Product, ProductMinusOne)):
            left, right = rec(e.left), rec(e.right)
            out = [
                Letter(_join(a.mono, b.mono), 1, f"({a.label},{b.label})")
                for b in right
                for a in left
            ]
            if isinstance(e, ProductMinusOne):
                if not (left and right and left[0].is_unit and right[0].is_unit):
                    raise AlphabetError("ProductMinusOne needs both factors to start with a unit letter")
                out = out[1:]
            return out
        if isinstance(e, (Star, Exp)):
            inner = rec(e.inner)
            words = []
            for n in range(1, e.max_len + 1):
                if isinstance(e, Star):
                    words.extend(itertools.product(range(len(inner)), repeat=n))
                else:
                    words.extend(itertools.combinations(range(len(inner)), n))
            # reverse lexicographic: compare last letters first; a proper
            # suffix precedes the longer word
            words.sort(key=lambda w: w[::-1])
            out = []
            for w in words:
                mono = zero
                for i in w:
                    mono = _join(mono, inner[i].mono)
                label = "(" + ",".join(inner[i].label for i in w) + ")"
                out.append(Letter(mono, len(w), label))
            return out
        if isinstance(e, Negative):
            raise AlphabetError("Negative may only appear at the top of an alphabet expression")
        raise AlphabetError(f"not an alphabet expression: {e!r}")

    return tuple(rec(expr))


def enumerate_alphabet(expr: AlphabetExpr) -> list[tuple[tuple, int]]:
    """Ordered ``(monomial, sign)`` pairs.

    Under ``Negative`` with a per-letter convention a word of length ``l``
    carries ``(-1)**l``; with the global convention letters carry +1 and the
    sign ``(-1)**r`` is applied per evaluated ``M_alpha`` with ``r`` parts.
    """
    return [(mono, sign) for mono, sign, _ in _signed_letters(expr)]


def _signed_letters(expr: AlphabetExpr) -> list[tuple[tuple, int, bool]]:
    """``(monomial, sign, may_repeat)`` in alphabet order."""
    if isinstance(expr, Negative):
        ls = letters(expr.inner, variables(expr))
        if expr.convention == GLOBAL_PART_COUNT:
            return [(l.mono, 1, True) for l in ls]
        if expr.convention == PER_LETTER_LENGTH:
            return [(l.mono, (-1) ** l.length, True) for l in ls]
        return [(l.mono, (-1) ** l.length, l.length % 2 == 1) for l in ls]
    return [(l.mono, 1, False) for l in letters(expr)]


class SparsePolynomial:
    """Integer polynomial over named variables, ``{exponent tuple: coeff}``."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence, terms=()):
        self.variables = tuple(variables)
        self.terms = terms if isinstance(terms, FormalSum) else FormalSum(terms)

    def __eq__(self, other):
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __add__(self, other):
        if self.variables != other.variables:
            raise AlphabetError("polynomials over different variables")
        return SparsePolynomial(self.variables, self.terms + other.terms)

    def __mul__(self, c: int):
        return SparsePolynomial(self.variables, c * self.terms)

    __rmul__ = __mul__

    def coefficient(self, exponents) -> int:
        return self.terms.coefficient(tuple(exponents))

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def truncate(self, d: int) -> SparsePolynomial:
        return SparsePolynomial(self.variables, FormalSum._raw({e: c for e, c in self.terms.items() if sum(e) <= d}))

    def to_sympy(self):
        import sympy

        syms = [sympy.Symbol(f"{t}{i}") for t, i in self.variables]
        return sum(
            (c * sympy.Mul(*(s**k for s, k in zip(syms, e))) for e, c in self.terms.items()),
            sympy.Integer(0),
        )

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"SparsePolynomial({self.to_sympy()})"


def _natural_bound(expr: AlphabetExpr, alpha_degree: int) -> int:
    ls = letters(expr.inner if isinstance(expr, Negative) else expr, variables(expr))
    top = max((l.degree for l in ls), default=0)
    if isinstance(expr, Negative) and any(l.is_unit for l in ls):
        raise TruncationError("weakly decreasing chains over a unit letter need a degree bound")
    return alpha_degree * top


@lru_cache(maxsize=None)
def _packed_letters(expr: AlphabetExpr, bits: int):
    vs = variables(expr)
    shift = len(vs) * bits
    signed = _signed_letters(expr)
    keys = []
    for mono, _, _ in signed:
        packed = 0
        for i, e in enumerate(mono):
            packed |= e << (i * bits)
        keys.append(packed | (sum(mono) << shift))
    return keys, [s for _, s, _ in signed], [r for _, _, r in signed], shift


def _unpack(key: int, nvars: int, bits: int) -> tuple:
    mask = (1 << bits) - 1
    return tuple((key >> (i * bits)) & mask for i in range(nvars))


def evaluate_basis(alpha, expr: AlphabetExpr, max_degree: int | None = None) -> SparsePolynomial:
    """``M_alpha(expr)`` truncated to total degree ``max_degree``."""
    alpha = tuple(alpha)
    if max_degree is None:
        max_degree = _natural_bound(expr, sum(alpha))
    vs = variables(expr)
    bits = max(max_degree, 1).bit_length()
    keys, signs, repeats, shift = _packed_letters(expr, bits)
    raw = kernels.chain_sum(keys, signs, repeats, alpha, isinstance(expr, Negative), max_degree, shift)
    sign = (-1) ** len(alpha) if isinstance(expr, Negative) and expr.convention == GLOBAL_PART_COUNT else 1
    terms = {_unpack(k, len(vs), bits): sign * c for k, c in raw.items()}
    return SparsePolynomial(vs, FormalSum._raw(terms))


def evaluate(f: FormalSum, expr: AlphabetExpr, max_degree: int | None = None) -> SparsePolynomial:
    """Evaluate a combination of ``M_alpha`` on an alphabet."""
    vs = variables(expr)
    if max_degree is None:
        max_degree = max((_natural_bound(expr, sum(a)) for a in f), default=0)
    total = SparsePolynomial(vs)
    for alpha, c in f.items():
        total = total + c * evaluate_basis(alpha, expr, max_degree)
    return total


def _leading_composition(exps: Sequence[int]):
    """``(a_1, ..., a_r)`` if the nonzero exponents fill a prefix, else None."""
    r = 0
    while r < len(exps) and exps[r]:
        r += 1
    if any(exps[r:]):
        return None
    return tuple(exps[:r])


def extract_qsym(P: SparsePolynomial, groups: Sequence[str], d: int):
    """Read M-coordinates off the leading-variable monomials of ``P``.

    One group gives a :class:`FormalSum` over compositions, two groups a
    :class:`TensorSum`.  Each group needs at least ``d`` variables so that
    every composition of degree ``<= d`` has a witness monomial; parts of
    degree above ``d`` are ignored.
    """
    groups = list(groups)
    if not 1 <= len(groups) <= 2:
        raise AlphabetError("extract_qsym handles one or two variable groups")
    positions = []
    for tag in groups:
        pos = [i for i, (t, _) in enumerate(P.variables) if t == tag]
        if len(pos) < d:
            raise TruncationError(f"group {tag!r} has {len(pos)} variables, need at least {d}")
        positions.append(pos)
    covered = {i for pos in positions for i in pos}
    acc: dict = {}
    for e, c in P.terms.items():
        if any(e[i] for i in range(len(e)) if i not in covered):
            continue
        keys = []
        for pos in positions:
            comp = _leading_composition([e[i] for i in pos])
            if comp is None or sum(comp) > d:
                break
            keys.append(comp)
        else:
            key = keys[0] if len(keys) == 1 else tuple(keys)
            acc[key] = acc.get(key, 0) + c
    return FormalSum(acc) if len(groups) == 1 else TensorSum(acc)
