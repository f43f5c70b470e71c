"""Quasi-symmetric functions on the monomial basis ``M_alpha``.

Every structure map here is defined by duality with NSym under
``<M_alpha, X_beta> = delta``; the alphabet formulas in
:mod:`smashprod.alphabet` are independent second routes checked against it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from smashprod import alphabet as al
from smashprod import combinatorics as cb
from smashprod import nsym
from smashprod.formal import FormalSum, TensorSum, bilinear_extend, linear_combination

UNIT = ()


def M(*parts) -> FormalSum:
    return FormalSum.basis(cb.composition(parts))


def counit(f: FormalSum) -> int:
    return f.coefficient(UNIT)


def pairing(f: FormalSum, u: FormalSum) -> int:
    """``<f, u>`` with ``<M_alpha, X_beta> = delta_{alpha, beta}``."""
    if len(f) > len(u):
        f, u = u, f
    return sum(c * u.coefficient(k) for k, c in f.items())


def pairing_tensor(F: TensorSum, U: TensorSum) -> int:
    return pairing(F, U)


# ---------------------------------------------------------------------------
# product


@lru_cache(maxsize=None)
def _qsh(alpha: tuple, beta: tuple) -> FormalSum:
    if not alpha:
        return FormalSum.basis(beta)
    if not beta:
        return FormalSum.basis(alpha)
    a, b = alpha[0], beta[0]
    parts = []
    for head, rest in (
        (a, _qsh(alpha[1:], beta)),
        (b, _qsh(alpha, beta[1:])),
        (a + b, _qsh(alpha[1:], beta[1:])),
    ):
        parts.append((1, FormalSum._raw({(head,) + k: c for k, c in rest.items()})))
    return linear_combination(parts)


def quasi_shuffle_basis(alpha, beta) -> FormalSum:
    return _qsh(tuple(alpha), tuple(beta))


quasi_shuffle = bilinear_extend(quasi_shuffle_basis)
quasi_shuffle.__doc__ = "Product of quasi-symmetric functions (overlapping shuffle of compositions)."


def power(f: FormalSum, k: int) -> FormalSum:
    out = FormalSum.basis(UNIT)
    for _ in range(k):
        out = quasi_shuffle(out, f)
    return out


# ---------------------------------------------------------------------------
# coproducts by duality


@lru_cache(maxsize=None)
def _circ_table(n: int) -> dict:
    table: dict = {}
    comps = cb.compositions_of(n)
    for u in comps:
        for v in comps:
            for gamma, c in nsym.internal_X(u, v).items():
                table.setdefault(gamma, {})[(u, v)] = c
    return {g: TensorSum(d) for g, d in table.items()}


@lru_cache(maxsize=None)
def _smash_table(n: int) -> dict:
    """``gamma -> sum_{u,v} [X_gamma](X_u # X_v) M_u (x) M_v`` for ``|gamma| = n``."""
    table: dict = {}
    for i in range(n + 1):
        for j in range(n - i, n + 1):
            for u in cb.compositions_of(i):
                for v in cb.compositions_of(j):
                    for gamma, c in nsym.smash_X(u, v).items():
                        if sum(gamma) == n:
                            table.setdefault(gamma, {})[(u, v)] = c
    return {g: TensorSum(d) for g, d in table.items()}


def coproduct_circ(f: FormalSum) -> TensorSum:
    """Dual of the internal product of NSym."""
    return linear_combination(((c, _circ_table(sum(g)).get(g, TensorSum())) for g, c in f.items()), cls=TensorSum)


def coproduct_star(f: FormalSum) -> TensorSum:
    """Dual of concatenation: deconcatenation."""
    acc: dict = {}
    for gamma, c in f.items():
        for i in range(len(gamma) + 1):
            key = (gamma[:i], gamma[i:])
            acc[key] = acc.get(key, 0) + c
    return TensorSum(acc)


def coproduct_smash(f: FormalSum, d: int | None = None) -> TensorSum:
    """Dual of the smash product of NSym.

    For ``deg f = n`` every term ``M_u (x) M_v`` has ``|u|, |v| <= n <= |u| + |v|``,
    so the sum is finite; ``d`` optionally drops terms with a side above ``d``.
    """
    out = linear_combination(((c, _smash_table(sum(g)).get(g, TensorSum())) for g, c in f.items()), cls=TensorSum)
    if d is not None:
        out = TensorSum._raw({(u, v): c for (u, v), c in out.items() if sum(u) <= d and sum(v) <= d})
    return out


# ---------------------------------------------------------------------------
# completed series


@dataclass(frozen=True)
class GradedSeries:
    """An element of the completion, known through degree ``max_degree``."""

    terms: FormalSum
    max_degree: int

    def __post_init__(self):
        if any(sum(a) > self.max_degree for a in self.terms):
            object.__setattr__(
                self, "terms", FormalSum._raw({a: c for a, c in self.terms.items() if sum(a) <= self.max_degree})
            )

    def component(self, n: int) -> FormalSum:
        if n > self.max_degree:
            raise al.TruncationError(f"series only known through degree {self.max_degree}")
        return FormalSum._raw({a: c for a, c in self.terms.items() if sum(a) == n})

    def __add__(self, other: GradedSeries) -> GradedSeries:
        return GradedSeries(self.terms + other.terms, min(self.max_degree, other.max_degree))

    def pair(self, u: FormalSum) -> int:
        if any(sum(a) > self.max_degree for a in u):
            raise al.TruncationError(f"series only known through degree {self.max_degree}")
        return pairing(self.terms, u)


@lru_cache(maxsize=None)
def _antipode_coords(gamma: tuple) -> FormalSum:
    return nsym.antipode_sigma(FormalSum.basis(gamma))


def antipode_smash(f: FormalSum, d: int) -> GradedSeries:
    """Antipode for the smash coproduct, through degree ``d``.

    The coefficient of ``M_gamma`` is ``<f, S(X_gamma)>`` with ``S`` the
    antipode of (NSym, #, coproduct).
    """
    acc: dict = {}
    for n in range(d + 1):
        for gamma in cb.compositions_of(n):
            v = pairing(f, _antipode_coords(gamma))
            if v:
                acc[gamma] = v
    return GradedSeries(FormalSum._raw(acc), d)


def _x(m: int) -> al.Base:
    return al.Base("x", m)


def antipode_smash_alphabet(f: FormalSum, d: int, m: int | None = None, convention: str = al.PER_LETTER_LENGTH) -> GradedSeries:
    """``f(-X*)`` through degree ``d`` on ``m >= d`` variables."""
    m = d if m is None else m
    expr = al.Negative(al.Star(_x(m), max(d, 1)), convention)
    P = al.evaluate(f, expr, max_degree=d)
    return GradedSeries(al.extract_qsym(P, ["x"], d), d)


def phi_hat(f: FormalSum | GradedSeries, d: int, m: int | None = None) -> GradedSeries:
    """``f(e(X))`` through degree ``d``.

    Words of ``e(X)`` have degree equal to their length, so words longer than
    ``d`` never reach degree ``d``.
    """
    m = d if m is None else m
    terms = f.terms if isinstance(f, GradedSeries) else f
    if isinstance(f, GradedSeries) and f.max_degree < d:
        raise al.TruncationError(f"input known only through degree {f.max_degree}")
    expr = al.Exp(_x(m), max(d, 1))
    P = al.evaluate(terms, expr, max_degree=d)
    return GradedSeries(al.extract_qsym(P, ["x"], d), d)


def coproduct_smash_alphabet(f: FormalSum, d: int | None = None, m: int | None = None) -> TensorSum:
    """``f((1+X) x (1+Y) - 1)`` separated into ``M (x) M`` coordinates."""
    n = max((sum(a) for a in f), default=0)
    d = n if d is None else d
    m = max(d, 1) if m is None else m
    expr = al.ProductMinusOne(al.OnePlus(al.Base("x", m)), al.OnePlus(al.Base("y", m)))
    P = al.evaluate(f, expr, max_degree=2 * d)
    return al.extract_qsym(P, ["x", "y"], d)


def coproduct_circ_alphabet(f: FormalSum, m: int | None = None) -> TensorSum:
    """``f(X x Y)`` separated into ``M (x) M`` coordinates."""
    n = max((sum(a) for a in f), default=0)
    m = max(n, 1) if m is None else m
    P = al.evaluate(f, al.Product(al.Base("x", m), al.Base("y", m)))
    return al.extract_qsym(P, ["x", "y"], n)


def coproduct_star_alphabet(f: FormalSum, m: int | None = None) -> TensorSum:
    """``f(X + Y)`` separated into ``M (x) M`` coordinates."""
    n = max((sum(a) for a in f), default=0)
    m = max(n, 1) if m is None else m
    P = al.evaluate(f, al.Sum(al.Base("x", m), al.Base("y", m)))
    return al.extract_qsym(P, ["x", "y"], n)


def antipode_axiom_defect(f: FormalSum, d: int) -> FormalSum:
    """``sum S(f_i) f'_i - counit(f)`` over the smash coproduct, through degree ``d``.

    Zero exactly when the truncated antipode axiom holds for ``f``.
    """
    total = FormalSum.basis(UNIT, -counit(f))
    for (u, v), c in coproduct_smash(f).items():
        s = antipode_smash(FormalSum.basis(u), d).terms
        prod = quasi_shuffle(s, FormalSum.basis(v))
        total = total + c * FormalSum._raw({a: k for a, k in prod.items() if sum(a) <= d})
    return total


# ---------------------------------------------------------------------------
# symmetric functions inside QSym


def h_image(lam) -> FormalSum:
    """Image of ``h_lam``: ``h_n -> sum of M_alpha over alpha |= n``, multiplied out."""
    out = FormalSum.basis(UNIT)
    for n in lam:
        out = quasi_shuffle(out, FormalSum((a, 1) for a in cb.compositions_of(n)))
    return out


def is_symmetric(f: FormalSum, m: int | None = None) -> bool:
    """Evaluate on ``m`` variables and test invariance under adjacent swaps."""
    n = max((sum(a) for a in f), default=0)
    m = max(n, 2) if m is None else m
    P = al.evaluate(f, al.Base("x", m))
    for i in range(m - 1):
        swapped = FormalSum((e[:i] + (e[i + 1], e[i]) + e[i + 2:], c) for e, c in P.terms.items())
        if swapped != P.terms:
            return False
    return True
