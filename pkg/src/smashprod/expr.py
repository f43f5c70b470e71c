"""Expression language over the four algebras.

Atoms: ``X[2,1]`` (NSym), ``h[2,1]`` (Sym, complete basis), ``s[2,1]``
(Sym, Schur basis), ``M[1,2]`` (QSym) and ``P312`` or ``P[3,1,2]``
(permutations).  Binary operators all share one precedence level and
associate to the left:

    #   smash product
    *   convolution / external product; ``3*X[1]`` scales
    o   internal product / composition
    .   quasi-shuffle

``@`` forms tensors and binds looser than the products, ``+`` and ``-``
loosest.  Functions: coprod, coprodCirc, coprodStar, coprodSmash, antipode,
phi, phihat, psi, embed, pair, schur.

Types are checked before anything is evaluated, so ``X[1] # M[1]`` fails
without computing.  Error offsets are 1-based byte offsets into the UTF-8
source.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Any

from smashprod import alphabet as al
from smashprod import combinatorics as cb
from smashprod import nsym, perm, qsym, sym
from smashprod.formal import FormalSum, tensor, tensor_product


class ExpressionError(ValueError):
    """Base class; ``offset`` is the 1-based byte offset, or None."""

    kind = "error"

    def __init__(self, message: str, offset: int | None = None):
        self.message = message
        self.offset = offset
        where = f" at offset {offset}" if offset is not None else ""
        super().__init__(f"{self.kind}{where}: {message}")


class ParseError(ExpressionError):
    kind = "syntax error"


class AlgebraError(ExpressionError):
    kind = "type error"


class EvaluationError(ExpressionError):
    kind = "evaluation error"


# ---------------------------------------------------------------------------
# tokens

_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<sym>[\[\](),+\-#*.@])"
)


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "sym", "end"
    text: str
    offset: int


def tokenize(text: str) -> list[Token]:
    out = []
    raw = text.encode("utf-8")
    pos = 0
    # character index -> byte offset, computed incrementally
    byte = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", byte + 1)
        if m.lastgroup != "ws":
            out.append(Token(m.lastgroup, m.group(), byte + 1))
        byte += len(m.group().encode("utf-8"))
        pos = m.end()
    out.append(Token("end", "", len(raw) + 1))
    return out


# ---------------------------------------------------------------------------
# syntax tree

ATOM_KINDS = {"X": "nsym", "h": "sym", "s": "schur", "M": "qsym", "P": "perm"}
PREFIX = {v: k for k, v in ATOM_KINDS.items()}
PRODUCT_OPS = ("#", "*", "o", ".")
FUNCTIONS = {
    "coprod": (1, 1),
    "coprodCirc": (1, 1),
    "coprodStar": (1, 1),
    "coprodSmash": (1, 2),
    "antipode": (1, 2),
    "phi": (1, 1),
    "phihat": (1, 2),
    "psi": (1, 1),
    "embed": (1, 1),
    "pair": (2, 2),
    "schur": (1, 1),
}


@dataclass(frozen=True)
class Node:
    offset: int


@dataclass(frozen=True)
class Int(Node):
    value: int


@dataclass(frozen=True)
class Atom(Node):
    algebra: str
    key: tuple


@dataclass(frozen=True)
class Neg(Node):
    operand: Node


@dataclass(frozen=True)
class BinOp(Node):
    op: str
    left: Node
    right: Node


@dataclass(frozen=True)
class Call(Node):
    name: str
    args: tuple


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def at(self, text: str) -> bool:
        return self.tok.kind in ("sym", "name") and self.tok.text == text

    def expect(self, text: str) -> Token:
        if not self.at(text):
            raise ParseError(f"expected {text!r}, found {self._describe()}", self.tok.offset)
        return self.advance()

    def _describe(self) -> str:
        return "end of input" if self.tok.kind == "end" else repr(self.tok.text)

    def parse(self) -> Node:
        node = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self._describe()}", self.tok.offset)
        return node

    def expr(self) -> Node:
        node = self.tensor()
        while self.at("+") or self.at("-"):
            t = self.advance()
            node = BinOp(t.offset, t.text, node, self.tensor())
        return node

    def tensor(self) -> Node:
        node = self.product()
        while self.at("@"):
            t = self.advance()
            node = BinOp(t.offset, "@", node, self.product())
        return node

    def product(self) -> Node:
        node = self.unary()
        while any(self.at(op) for op in PRODUCT_OPS):
            t = self.advance()
            node = BinOp(t.offset, t.text, node, self.unary())
        return node

    def unary(self) -> Node:
        if self.at("-"):
            t = self.advance()
            return Neg(t.offset, self.unary())
        return self.primary()

    def primary(self) -> Node:
        t = self.tok
        if t.kind == "int":
            self.advance()
            return Int(t.offset, int(t.text))
        if self.at("("):
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        if t.kind == "name":
            return self.named()
        raise ParseError(f"unexpected {self._describe()}", t.offset)

    def named(self) -> Node:
        t = self.advance()
        name = t.text
        if name in ATOM_KINDS:
            algebra = ATOM_KINDS[name]
            parts = self.int_list()
            if algebra == "perm":
                parts = _check_perm(parts, t.offset)
            elif algebra in ("sym", "schur"):
                parts = cb.partition(parts)
            return Atom(t.offset, algebra, parts)
        if name[0] == "P" and name[1:].isdigit():
            digits = tuple(int(c) for c in name[1:])
            return Atom(t.offset, "perm", _check_perm(digits, t.offset))
        if name in FUNCTIONS:
            self.expect("(")
            args = [self.expr()]
            while self.at(","):
                self.advance()
                args.append(self.expr())
            self.expect(")")
            lo, hi = FUNCTIONS[name]
            if not lo <= len(args) <= hi:
                raise ParseError(f"{name} takes {lo if lo == hi else f'{lo} or {hi}'} argument(s), got {len(args)}", t.offset)
            return Call(t.offset, name, tuple(args))
        raise ParseError(f"unknown basis or function {name!r}", t.offset)

    def int_list(self) -> tuple:
        self.expect("[")
        items = []
        if not self.at("]"):
            items.append(self._positive())
            while self.at(","):
                self.advance()
                items.append(self._positive())
        self.expect("]")
        return tuple(items)

    def _positive(self) -> int:
        t = self.tok
        if t.kind != "int":
            raise ParseError(f"expected a positive integer, found {self._describe()}", t.offset)
        self.advance()
        if int(t.text) <= 0:
            raise ParseError("basis indices must be positive", t.offset)
        return int(t.text)


def _check_perm(images: tuple, offset: int) -> tuple:
    if not cb.is_permutation(images):
        raise ParseError(f"{images} is not a permutation of 1..{len(images)}", offset)
    return images


def parse(text: str) -> Node:
    """Parse ``text`` into a syntax tree, raising :class:`ParseError`."""
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# static types


@dataclass(frozen=True)
class Type:
    algebra: str  # "scalar", "perm", "nsym", "sym", "schur", "qsym"
    tensor: bool = False

    def __str__(self):
        return f"{self.algebra}{' (x) ' + self.algebra if self.tensor else ''}"


SCALAR = Type("scalar")

# which algebras carry which product, and whether tensors are supported
_PRODUCTS = {
    "#": {"perm": False, "nsym": True, "sym": True, "schur": False},
    "*": {"perm": False, "nsym": True, "sym": True, "schur": False},
    "o": {"perm": False, "nsym": False, "sym": False, "schur": False},
    ".": {"qsym": True},
}
_OP_NAMES = {"#": "smash", "*": "convolution", "o": "internal", ".": "quasi-shuffle"}


def typecheck(node: Node) -> Type:
    if isinstance(node, Int):
        return SCALAR
    if isinstance(node, Atom):
        return Type(node.algebra)
    if isinstance(node, Neg):
        return typecheck(node.operand)
    if isinstance(node, BinOp):
        return _type_binop(node)
    if isinstance(node, Call):
        return _type_call(node)
    raise TypeError(node)


def _type_binop(node: BinOp) -> Type:
    lt, rt = typecheck(node.left), typecheck(node.right)
    op = node.op
    if op in "+-":
        if lt == rt:
            return lt
        raise AlgebraError(f"cannot add {lt} and {rt}", node.offset)
    if op == "@":
        if lt.tensor or rt.tensor or lt == SCALAR:
            raise AlgebraError(f"tensor needs two plain elements, got {lt} and {rt}", node.offset)
        if lt != rt:
            raise AlgebraError(f"tensor factors must live in one algebra, got {lt} and {rt}", node.offset)
        return Type(lt.algebra, True)
    if op == "*" and SCALAR in (lt, rt):
        return rt if lt == SCALAR else lt
    if lt != rt:
        raise AlgebraError(f"{_OP_NAMES[op]} product of {lt} and {rt}", node.offset)
    allowed = _PRODUCTS[op]
    if lt.algebra not in allowed or (lt.tensor and not allowed[lt.algebra]):
        raise AlgebraError(f"no {_OP_NAMES[op]} product on {lt}", node.offset)
    return lt


def _require(node: Node, t: Type, algebras: tuple, tensor_ok: bool, fname: str):
    if t.algebra not in algebras or (t.tensor and not tensor_ok):
        raise AlgebraError(f"{fname} does not accept {t}", node.offset)


def _degree_arg(node: Call, i: int):
    if len(node.args) > i:
        arg = node.args[i]
        if not isinstance(arg, Int):
            raise AlgebraError(f"{node.name}: degree bound must be an integer literal", arg.offset)


def _type_call(node: Call) -> Type:
    name = node.name
    ts = [typecheck(a) for a in node.args]
    t = ts[0]
    if name == "coprod":
        _require(node, t, ("nsym", "sym", "qsym"), False, name)
        return Type(t.algebra, True)
    if name in ("coprodCirc", "coprodStar", "coprodSmash"):
        _require(node, t, ("qsym",), False, name)
        _degree_arg(node, 1)
        return Type("qsym", True)
    if name == "antipode":
        _require(node, t, ("nsym", "sym", "qsym"), False, name)
        _degree_arg(node, 1)
        return t
    if name == "phi":
        _require(node, t, ("nsym",), True, name)
        return Type("sym", t.tensor)
    if name == "phihat":
        _require(node, t, ("qsym",), False, name)
        _degree_arg(node, 1)
        return t
    if name == "psi":
        _require(node, t, ("nsym",), True, name)
        return t
    if name == "embed":
        _require(node, t, ("nsym",), False, name)
        return Type("perm")
    if name == "schur":
        _require(node, t, ("sym",), False, name)
        return Type("schur")
    if name == "pair":
        a, b = ts
        if {a.algebra, b.algebra} != {"qsym", "nsym"} or a.tensor != b.tensor:
            raise AlgebraError(f"pair needs QSym and NSym elements of the same tensor rank, got {a} and {b}", node.offset)
        return SCALAR
    raise AlgebraError(f"unknown function {name}", node.offset)


# ---------------------------------------------------------------------------
# evaluation


@dataclass(frozen=True)
class Value:
    type: Type
    data: Any  # int for scalars, FormalSum / TensorSum otherwise
    max_degree: int | None = field(default=None)  # set for truncated series


def _external_rule(a, b):
    return FormalSum.basis(sym.external_h(a, b))


_sym_external_tensor = tensor_product(_external_rule, _external_rule)
_qsym_tensor_product = tensor_product(qsym.quasi_shuffle_basis, qsym.quasi_shuffle_basis)


def _via_h(op):
    def run(x, y):
        return sym.schur_expand(op(sym.schur_to_h(x), sym.schur_to_h(y)))

    return run


_BINARY = {
    ("#", "perm", False): perm.smash,
    ("#", "nsym", False): nsym.smash,
    ("#", "nsym", True): nsym.smash_tensor,
    ("#", "sym", False): sym.smash,
    ("#", "sym", True): sym.smash_tensor,
    ("#", "schur", False): _via_h(sym.smash),
    ("*", "perm", False): perm.convolve,
    ("*", "nsym", False): nsym.convolve,
    ("*", "nsym", True): nsym.convolve_tensor,
    ("*", "sym", False): sym.external,
    ("*", "sym", True): _sym_external_tensor,
    ("*", "schur", False): _via_h(sym.external),
    ("o", "perm", False): perm.compose,
    ("o", "nsym", False): nsym.internal,
    ("o", "sym", False): sym.internal,
    ("o", "schur", False): _via_h(sym.internal),
    (".", "qsym", False): qsym.quasi_shuffle,
    (".", "qsym", True): _qsym_tensor_product,
}


def _max_degree(x: FormalSum) -> int:
    return max((sum(k) for k in x), default=0)


def evaluate(node: Node) -> Value:
    """Type-check, then evaluate.  Errors carry the offset of the failing node."""
    typecheck(node)
    return _eval(node)


def _eval(node: Node) -> Value:
    if isinstance(node, Int):
        return Value(SCALAR, node.value)
    if isinstance(node, Atom):
        return Value(Type(node.algebra), FormalSum.basis(node.key))
    if isinstance(node, Neg):
        v = _eval(node.operand)
        return Value(v.type, -v.data, v.max_degree)
    if isinstance(node, BinOp):
        return _eval_binop(node)
    return _eval_call(node)


def _min_trunc(a: Value, b: Value):
    ds = [d for d in (a.max_degree, b.max_degree) if d is not None]
    return min(ds) if ds else None


def _eval_binop(node: BinOp) -> Value:
    left, right = _eval(node.left), _eval(node.right)
    t = typecheck(node)
    op = node.op
    try:
        if op == "+":
            return Value(t, left.data + right.data, _min_trunc(left, right))
        if op == "-":
            return Value(t, left.data - right.data, _min_trunc(left, right))
        if op == "@":
            return Value(t, tensor(left.data, right.data))
        if op == "*" and SCALAR in (left.type, right.type):
            if left.type == SCALAR and right.type == SCALAR:
                return Value(SCALAR, left.data * right.data)
            c, x = (left, right) if left.type == SCALAR else (right, left)
            return Value(t, x.data * c.data, x.max_degree)
        if left.max_degree is not None or right.max_degree is not None:
            raise EvaluationError("products of truncated series are not supported", node.offset)
        fn = _BINARY[(op, t.algebra, t.tensor)]
        return Value(t, fn(left.data, right.data))
    except cb.RangeError as e:
        raise EvaluationError(str(e), node.offset) from None


def _degree_bound(node: Call, i: int, default: int) -> int:
    return node.args[i].value if len(node.args) > i else default


def _eval_call(node: Call) -> Value:
    t = typecheck(node)
    args = [_eval(a) for a in node.args]
    x = args[0]
    name = node.name
    try:
        if x.max_degree is not None and name not in ("pair",):
            raise EvaluationError(f"{name} of a truncated series is not supported", node.offset)
        if name == "coprod":
            fn = {"nsym": nsym.coproduct, "sym": sym.coproduct, "qsym": qsym.coproduct_star}[x.type.algebra]
            return Value(t, fn(x.data))
        if name == "coprodCirc":
            return Value(t, qsym.coproduct_circ(x.data))
        if name == "coprodStar":
            return Value(t, qsym.coproduct_star(x.data))
        if name == "coprodSmash":
            d = _degree_bound(node, 1, None)
            return Value(t, qsym.coproduct_smash(x.data, d))
        if name == "antipode":
            if x.type.algebra == "nsym":
                return Value(t, nsym.antipode_sigma(x.data))
            if x.type.algebra == "sym":
                return Value(t, sym.antipode(x.data))
            d = _degree_bound(node, 1, _max_degree(x.data))
            return Value(t, qsym.antipode_smash(x.data, d).terms, d)
        if name == "phi":
            return Value(t, sym.phi_tensor(x.data) if x.type.tensor else sym.phi(x.data))
        if name == "phihat":
            d = _degree_bound(node, 1, _max_degree(x.data))
            return Value(t, qsym.phi_hat(x.data, d).terms, d)
        if name == "psi":
            return Value(t, nsym.psi_tensor(x.data) if x.type.tensor else nsym.iso_psi(x.data))
        if name == "embed":
            return Value(t, nsym.embed(x.data))
        if name == "schur":
            return Value(t, sym.schur_expand(x.data))
        if name == "pair":
            f, u = args if args[0].type.algebra == "qsym" else args[::-1]
            if f.max_degree is not None and _max_degree(u.data) > f.max_degree:
                raise EvaluationError(f"series only known through degree {f.max_degree}", node.offset)
            return Value(SCALAR, qsym.pairing(f.data, u.data))
    except (cb.RangeError, al.AlphabetError) as e:
        raise EvaluationError(str(e), node.offset) from None
    raise EvaluationError(f"unknown function {name}", node.offset)


def run(text: str) -> Value:
    return evaluate(parse(text))


# ---------------------------------------------------------------------------
# rendering


def render_key(algebra: str, key: tuple) -> str:
    if algebra == "perm" and key and len(key) < 10:
        return "P" + "".join(map(str, key))
    return f"{PREFIX[algebra]}[{','.join(map(str, key))}]"


def _render_term(t: Type, key) -> str:
    if t.tensor:
        return f"{render_key(t.algebra, key[0])} @ {render_key(t.algebra, key[1])}"
    return render_key(t.algebra, key)


def render(value: Value) -> str:
    """Text form; ``parse(render(v))`` evaluates back to ``v``."""
    if value.type == SCALAR:
        return str(value.data)
    pieces = []
    for key, c in value.data.sorted_items():
        body = _render_term(value.type, key)
        mag = abs(c)
        term = body if mag == 1 else f"{mag}*{body}"
        if not pieces:
            pieces.append(term if c > 0 else f"-{term}")
        else:
            pieces.append(f"{'+' if c > 0 else '-'} {term}")
    return " ".join(pieces) if pieces else "0"


def key_json(t: Type, key):
    if t.tensor:
        return [list(key[0]), list(key[1])]
    return list(key)


def to_json(value: Value) -> dict:
    if value.type == SCALAR:
        return {"algebra": "scalar", "value": str(value.data)}
    out = {"algebra": str(value.type)}
    if value.max_degree is not None:
        out["max_degree"] = value.max_degree
    out["terms"] = [{"key": key_json(value.type, k), "coeff": str(c)} for k, c in value.data.sorted_items()]
    return out
