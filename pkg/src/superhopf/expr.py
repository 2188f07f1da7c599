"""Expression language for the command line.

Grammar::

    expr   := term (("+" | "-") term)*
    term   := factor ("*" factor)*
    factor := "-" factor | number ["/" number] | NAME "[" index "]" | "(" expr ")"

``NAME`` is one of ``M L Lb H`` (dotted-composition index, e.g. ``3.,2``) or
``m p e h s sb s* sb*`` (superpartition index, e.g. ``2,0;1``).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from . import slambda, snsym, squsym
from .combinatorics import DottedComposition, SuperPartition
from .kernel import LinComb, TensorComb, fmt_coeff

QS_BASES = ("M", "L", "Lb")
NS_BASES = ("H",)
SYM_BASES = ("m", "p", "e", "h", "s", "sb", "s*", "sb*")


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int | None = None):
        self.pos = pos
        super().__init__(msg if pos is None else f"{msg} (at position {pos})")


# ----------------------------------------------------------------------------
# syntax tree


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Basis:
    name: str
    index: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Neg:
    arg: object


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>sb\*|s\*|Lb|sb|[MLHmpehs])\s*\[(?P<index>[^\]]*)\]|(?P<op>[-+*/()]))")


def tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        mt = _TOKEN.match(text, pos)
        if not mt:
            at = pos + len(text[pos:]) - len(text[pos:].lstrip())
            if re.match(r"(sb\*|s\*|Lb|sb|[MLHmpehs])\s*\[", text[at:]):
                raise ParseError("unterminated index bracket", at)
            raise ParseError(f"unexpected character {text[at]!r}", at)
        start = mt.start() + len(mt.group(0)) - len(mt.group(0).lstrip())
        if mt.group("num"):
            out.append(("num", int(mt.group("num")), start))
        elif mt.group("name"):
            out.append(("basis", (mt.group("name"), mt.group("index")), start))
        else:
            out.append((mt.group("op"), None, start))
        pos = mt.end()
    out.append(("end", None, len(text)))
    return out


def parse_index(name: str, text: str, pos: int = 0):
    try:
        if name in SYM_BASES:
            return SuperPartition.parse(text)
        return DottedComposition.parse(text)
    except ValueError as exc:
        raise ParseError(f"invalid index for {name}[{text}]: {exc}", pos) from None


class _Parser:
    def __init__(self, text):
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[0]!r}", tok[2])
        self.i += 1
        return tok

    def expr(self):
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.peek()[0] == "*":
            self.take()
            node = BinOp("*", node, self.factor())
        return node

    def factor(self):
        kind, val, pos = self.peek()
        if kind == "-":
            self.take()
            return Neg(self.factor())
        if kind == "num":
            self.take()
            if self.peek()[0] == "/":
                self.take()
                _, den, dpos = self.take("num")
                if den == 0:
                    raise ParseError("zero denominator", dpos)
                return Num(Fraction(val, den))
            return Num(Fraction(val))
        if kind == "basis":
            self.take()
            name, idx = val
            return Basis(name, parse_index(name, idx, pos))
        if kind == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        raise ParseError(f"unexpected {kind!r}", pos)


def degree(node) -> int:
    """Upper bound on ``n + m`` of the value of ``node`` (checked before evaluating)."""
    if isinstance(node, Num):
        return 0
    if isinstance(node, Basis):
        return node.index.n + node.index.m
    if isinstance(node, Neg):
        return degree(node.arg)
    if node.op == "*":
        return degree(node.left) + degree(node.right)
    return max(degree(node.left), degree(node.right))


def parse(text: str):
    p = _Parser(text)
    node = p.expr()
    if p.peek()[0] != "end":
        raise ParseError(f"trailing input {p.peek()[0]!r}", p.peek()[2])
    return node


# ----------------------------------------------------------------------------
# evaluation


@dataclass
class Value:
    """An evaluated expression: ``kind`` is ``num``, ``qs``, ``ns`` or ``sym``."""

    kind: str
    data: object

    def bidegrees(self):
        if self.kind == "num":
            return []
        terms = self.data.terms if self.kind == "sym" else self.data
        return [(k.n, k.m) for k in terms]


def _basis_value(node: Basis) -> Value:
    name, idx = node.name, node.index
    if name == "M":
        return Value("qs", squsym.M(idx))
    if name == "L":
        return Value("qs", squsym.fundamental_L(idx))
    if name == "Lb":
        return Value("qs", squsym.fundamental_Lbar(idx))
    if name == "H":
        return Value("ns", snsym.H(idx))
    if name == "s*":
        return Value("sym", slambda.dual_schur(idx))
    if name == "sb*":
        return Value("sym", slambda.dual_schur_bar(idx))
    return Value("sym", slambda.element(name, idx))


def _scale(v: Value, c) -> Value:
    if v.kind == "num":
        return Value("num", v.data * c)
    if v.kind == "sym":
        return Value("sym", v.data.scale(c))
    return Value(v.kind, v.data.scale(c))


def _add(a: Value, b: Value) -> Value:
    if a.kind == "num" and not a.data:
        return b
    if b.kind == "num" and not b.data:
        return a
    if a.kind != b.kind:
        raise ParseError(f"cannot add {a.kind} and {b.kind} elements")
    if a.kind == "num":
        return Value("num", a.data + b.data)
    if a.kind == "sym":
        f, g = a.data, b.data
        if f.basis != g.basis:
            f, g = slambda.convert(f, "m"), slambda.convert(g, "m")
        return Value("sym", f + g)
    return Value(a.kind, a.data + b.data)


def _mul(a: Value, b: Value) -> Value:
    if a.kind == "num":
        return _scale(b, a.data)
    if b.kind == "num":
        return _scale(a, b.data)
    if a.kind != b.kind:
        raise ParseError(f"cannot multiply {a.kind} and {b.kind} elements")
    if a.kind == "qs":
        return Value("qs", squsym.mul_M(a.data, b.data))
    if a.kind == "ns":
        return Value("ns", snsym.mul_H(a.data, b.data))
    return Value("sym", slambda.mul(a.data, b.data))


def evaluate(node) -> Value:
    if isinstance(node, Num):
        return Value("num", node.value)
    if isinstance(node, Basis):
        return _basis_value(node)
    if isinstance(node, Neg):
        return _scale(evaluate(node.arg), -1)
    if node.op == "+":
        return _add(evaluate(node.left), evaluate(node.right))
    if node.op == "-":
        return _add(evaluate(node.left), _scale(evaluate(node.right), -1))
    return _mul(evaluate(node.left), evaluate(node.right))


def evaluate_text(text: str) -> Value:
    return evaluate(parse(text))


# ----------------------------------------------------------------------------
# rendering


def basis_name(v: Value) -> str:
    return {"qs": "M", "ns": "H"}.get(v.kind) or (v.data.basis if v.kind == "sym" else "")


def terms_of(v: Value) -> LinComb:
    if v.kind == "sym":
        return v.data.terms
    if v.kind == "num":
        return LinComb()
    return v.data


def index_list(idx) -> list[str]:
    if isinstance(idx, SuperPartition):
        return [",".join(map(str, idx.fermionic)), ",".join(map(str, idx.symmetric))]
    return [f"{v}." if d else str(v) for v, d in idx.parts]


def render_pretty(terms: LinComb, basis: str) -> str:
    pieces = []
    for idx, c in terms.sorted_items():
        mag = abs(c)
        body = f"{basis}[{idx}]"
        text = body if mag == 1 else f"{fmt_coeff(mag)}*{body}"
        sign = "-" if c < 0 else "+"
        pieces.append((sign, text))
    if not pieces:
        return "0"
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, text in pieces[1:]:
        out += f" {sign} {text}"
    return out


def render_tensor_pretty(t: TensorComb, left: str, right: str) -> str:
    pieces = []
    for (a, b), c in t.sorted_items():
        mag = abs(c)
        body = f"{left}[{a}] ⊗ {right}[{b}]"
        pieces.append(("-" if c < 0 else "+", body if mag == 1 else f"{fmt_coeff(mag)}*{body}"))
    if not pieces:
        return "0"
    out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, text in pieces[1:]:
        out += f" {sign} {text}"
    return out


def to_json(terms: LinComb, basis: str) -> dict:
    return {"basis": basis,
            "terms": [{"index": index_list(k), "coeff": fmt_coeff(c)} for k, c in terms.sorted_items()]}


def tensor_to_json(t: TensorComb, left: str, right: str) -> dict:
    return {"basis": f"{left}⊗{right}",
            "terms": [{"index_pair": [index_list(a), index_list(b)], "coeff": fmt_coeff(c)}
                      for (a, b), c in t.sorted_items()]}
