"""Exact integer linear combinations over hashable basis keys.

A :class:`FormalSum` is an immutable mapping ``key -> int`` that never stores
a zero coefficient.  A :class:`TensorSum` is the same thing with keys that are
ordered pairs ``(left, right)``; it supports componentwise products so that
coproduct compatibility can be written as ``coprod(u * v) == coprod(u) * coprod(v)``.
"""

from __future__ import annotations

from collections.abc import Callable, Hashable, Iterable, Iterator, Mapping
from typing import Any

Key = Hashable


def _accumulate(pairs: Iterable[tuple[Key, int]]) -> dict:
    acc: dict = {}
    for k, c in pairs:
        if not isinstance(c, int):
            raise TypeError(f"coefficients must be integers, got {c!r}")
        if c:
            v = acc.get(k, 0) + c
            if v:
                acc[k] = v
            else:
                del acc[k]
    return acc


class FormalSum(Mapping):
    """Immutable finite linear combination with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable[tuple[Key, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        self._terms = _accumulate(items)
        self._hash = None

    @classmethod
    def _raw(cls, d: dict):
        obj = cls.__new__(cls)
        obj._terms = d
        obj._hash = None
        return obj

    @classmethod
    def basis(cls, key: Key, coeff: int = 1):
        return cls._raw({key: coeff} if coeff else {})

    @classmethod
    def zero(cls):
        return cls._raw({})

    # Mapping protocol
    def __getitem__(self, key):
        return self._terms[key]

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __contains__(self, key) -> bool:
        return key in self._terms

    def coefficient(self, key) -> int:
        return self._terms.get(key, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, FormalSum):
            return type(self) is type(other) and self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # linear structure
    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if type(other) is not type(self):
            return NotImplemented
        d = dict(self._terms)
        for k, c in other._terms.items():
            v = d.get(k, 0) + c
            if v:
                d[k] = v
            else:
                del d[k]
        return self._raw(d)

    __radd__ = __add__

    def __neg__(self):
        return self._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def __mul__(self, c):
        if isinstance(c, int) and not isinstance(c, bool):
            return scale(c, self)
        return NotImplemented

    __rmul__ = __mul__

    def map_keys(self, fn: Callable[[Key], Key]):
        """Linear extension of a map on keys (colliding images add up)."""
        return type(self)((fn(k), c) for k, c in self._terms.items())

    def sorted_items(self, order: Callable | None = None) -> list[tuple[Key, int]]:
        return sorted(self._terms.items(), key=(lambda kc: order(kc[0])) if order else (lambda kc: kc[0]))

    def __repr__(self) -> str:
        if not self._terms:
            return f"{type(self).__name__}()"
        inner = ", ".join(f"{k!r}: {c}" for k, c in self.sorted_items())
        return f"{type(self).__name__}({{{inner}}})"


class TensorSum(FormalSum):
    """Linear combination of ordered key pairs ``(left, right)``."""

    __slots__ = ()

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return scale(other, self)
        return NotImplemented

    __rmul__ = __mul__

    def swap(self) -> TensorSum:
        return self.map_keys(lambda k: (k[1], k[0]))


def add(x: FormalSum, y: FormalSum) -> FormalSum:
    return x + y


def scale(c: int, x: FormalSum) -> FormalSum:
    if c == 0:
        return type(x)._raw({})
    if c == 1:
        return x
    return type(x)._raw({k: c * v for k, v in x.items()})


def coefficient(x: FormalSum, key) -> int:
    return x.coefficient(key)


def graded_component(x: FormalSum, n: int, degree: Callable[[Key], int]) -> FormalSum:
    """The part of ``x`` supported on keys of degree ``n``."""
    return type(x)._raw({k: c for k, c in x.items() if degree(k) == n})


def degrees(x: FormalSum, degree: Callable[[Key], int]) -> set[int]:
    return {degree(k) for k in x}


def linear_combination(terms: Iterable[tuple[int, FormalSum]], cls=FormalSum) -> FormalSum:
    """Sum of ``c * x`` over the given pairs, accumulated in one pass."""
    acc: dict = {}
    for c, x in terms:
        if not c:
            continue
        for k, v in x.items():
            w = acc.get(k, 0) + c * v
            if w:
                acc[k] = w
            else:
                del acc[k]
    return cls._raw(acc)


def bilinear_extend(rule: Callable[[Key, Key], FormalSum]) -> Callable[[FormalSum, FormalSum], FormalSum]:
    """Extend ``rule`` on basis pairs to the unique bilinear map.

    The result type is whatever ``rule`` returns; an empty input gives an
    empty :class:`FormalSum`.
    """

    def extended(x: FormalSum, y: FormalSum) -> FormalSum:
        acc: dict = {}
        cls = FormalSum
        for a, ca in x.items():
            for b, cb in y.items():
                r = rule(a, b)
                cls = type(r)
                c = ca * cb
                for k, v in r.items():
                    w = acc.get(k, 0) + c * v
                    if w:
                        acc[k] = w
                    else:
                        del acc[k]
        return cls._raw(acc)

    return extended


def tensor_product(rule_left: Callable, rule_right: Callable) -> Callable[[TensorSum, TensorSum], TensorSum]:
    """Componentwise bilinear product on tensor sums.

    ``(a (x) b) * (c (x) d) = rule_left(a, c) (x) rule_right(b, d)``.
    """

    def product(x: TensorSum, y: TensorSum) -> TensorSum:
        acc: dict = {}
        for (a, b), c1 in x.items():
            for (c, d), c2 in y.items():
                left = rule_left(a, c)
                right = rule_right(b, d)
                coeff = c1 * c2
                for k1, v1 in left.items():
                    for k2, v2 in right.items():
                        key = (k1, k2)
                        w = acc.get(key, 0) + coeff * v1 * v2
                        if w:
                            acc[key] = w
                        else:
                            del acc[key]
        return TensorSum._raw(acc)

    return product


def tensor(x: FormalSum, y: FormalSum) -> TensorSum:
    return TensorSum._raw({(a, b): ca * cb for a, ca in x.items() for b, cb in y.items()})


def apply_tensor(f: Callable[[Key], FormalSum], g: Callable[[Key], FormalSum], x: TensorSum) -> TensorSum:
    """``(f (x) g)(x)`` for linear maps given on keys."""
    acc: dict = {}
    for (a, b), c in x.items():
        fa = f(a)
        gb = g(b)
        for k1, v1 in fa.items():
            for k2, v2 in gb.items():
                key = (k1, k2)
                w = acc.get(key, 0) + c * v1 * v2
                if w:
                    acc[key] = w
                else:
                    del acc[key]
    return TensorSum._raw(acc)


def to_json(x: FormalSum, key_json: Callable[[Key], Any] = list, order: Callable | None = None) -> dict:
    """Canonical JSON form ``{"terms": [{"key": ..., "coeff": "<int>"}]}``.

    Coefficients are decimal strings so arbitrarily large integers survive
    any JSON reader.
    """
    return {"terms": [{"key": key_json(k), "coeff": str(c)} for k, c in x.sorted_items(order)]}


def from_json(data: dict, key_parse: Callable[[Any], Key] = tuple, cls=FormalSum) -> FormalSum:
    return cls((key_parse(t["key"]), int(t["coeff"])) for t in data["terms"])
