"""A tiny expression language naming the groups the suites work with.

Grammar:

    expr  := name "(" args ")" | "x(" expr "," expr ")"
           | "wr(" expr "," expr ")" | "q(" expr "," expr ")"
           | atlas-name
    args  := (integer | key "=" integer) ("," ...)*

Examples: ``A(5)``, ``x(S(5), AGL1(5))``, ``GLQ(l=2,q=3)``, ``M12.2``.
Parsed expressions round-trip through ``str`` and evaluate to PermGroup
instances, memoised so repeated evaluations share class-table caches.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from . import constructors as C
from .errors import ExprParseError, NotNormal
from .numtheory import factorize

_ATLAS_TOKENS = set(C.ATLAS_NAMES) | {"M10"}

_CONSTRUCTOR_HEADS = ("C", "S", "A", "D", "AGL1", "AGammaL1", "GLQ", "SYL2",
                      "PSL2", "PGL2", "PGammaL2", "PSL3", "x", "wr", "q")

_TOKEN_RE = re.compile(r"\s*([A-Za-z][A-Za-z0-9_.^]*|\d+|[(),=])")


@dataclass(frozen=True)
class GroupExpr:
    head: str                      # constructor name, atlas name, or x/wr/q
    args: tuple = ()               # integers (possibly keyed) or GroupExpr

    def __str__(self) -> str:
        if not self.args:
            return self.head
        parts = []
        for a in self.args:
            if isinstance(a, tuple):
                parts.append(f"{a[0]}={a[1]}")
            else:
                parts.append(str(a))
        return f"{self.head}({', '.join(parts)})"

    def int_args(self) -> list:
        out = []
        for a in self.args:
            out.append(a[1] if isinstance(a, tuple) else a)
        return out

    def keyed(self) -> dict:
        return {a[0]: a[1] for a in self.args if isinstance(a, tuple)}


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ExprParseError(f"unexpected character {text[pos]!r}", pos)
        tok = m.group(1)
        tokens.append((tok, pos))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, len(self.text))

    def take(self, expected: Optional[str] = None):
        tok, pos = self.peek()
        if tok is None:
            raise ExprParseError("unexpected end of input", pos,
                                 {expected} if expected else set())
        if expected is not None and tok != expected:
            raise ExprParseError(f"got {tok!r}", pos, {expected})
        self.i += 1
        return tok, pos

    def parse_expr(self) -> GroupExpr:
        tok, pos = self.peek()
        if tok is None:
            raise ExprParseError("empty expression", pos, {"name"})
        if tok in _ATLAS_TOKENS:
            self.take()
            return GroupExpr(tok)
        if tok not in _CONSTRUCTOR_HEADS:
            raise ExprParseError(f"got {tok!r}", pos,
                                 set(_CONSTRUCTOR_HEADS) | {"atlas-name"})
        self.take()
        self.take("(")
        if tok in ("x", "wr", "q"):
            left = self.parse_expr()
            self.take(",")
            right = self.parse_expr()
            self.take(")")
            return GroupExpr(tok, (left, right))
        args = []
        nxt, _ = self.peek()
        if nxt != ")":
            while True:
                args.append(self.parse_arg())
                nxt, _ = self.peek()
                if nxt == ",":
                    self.take()
                    continue
                break
        self.take(")")
        return GroupExpr(tok, tuple(args))

    def parse_arg(self):
        tok, pos = self.peek()
        if tok is None:
            raise ExprParseError("unexpected end of input", pos, {"integer", "key"})
        if tok.isdigit():
            self.take()
            return int(tok)
        if re.fullmatch(r"[A-Za-z]+", tok):
            self.take()
            self.take("=")
            val, vpos = self.take()
            if not val.isdigit():
                raise ExprParseError(f"got {val!r}", vpos, {"integer"})
            return (tok, int(val))
        raise ExprParseError(f"got {tok!r}", pos, {"integer", "key=value"})


def parse_group_expr(text: str) -> GroupExpr:
    p = _Parser(text)
    expr = p.parse_expr()
    tok, pos = p.peek()
    if tok is not None:
        raise ExprParseError(f"trailing input {tok!r}", pos)
    return expr


_memo: dict = {}


def evaluate(expr: GroupExpr):
    """Evaluate an expression tree to a PermGroup (memoised)."""
    key = str(expr)
    if key in _memo:
        return _memo[key]
    G = _evaluate(expr)
    _memo[key] = G
    return G


def _single_int(expr, count=1):
    vals = expr.int_args()
    if len(vals) != count:
        raise ExprParseError(f"{expr.head} needs {count} argument(s)", 0)
    return vals if count > 1 else vals[0]


def _evaluate(expr: GroupExpr):
    head = expr.head
    if head in C.ATLAS_NAMES:
        return C.from_generator_data(head)
    if head == "M10":
        return C.m10()
    if head == "x":
        return C.direct_product(evaluate(expr.args[0]), evaluate(expr.args[1]))
    if head == "wr":
        return C.wreath(evaluate(expr.args[0]), evaluate(expr.args[1]))
    if head == "q":
        G = evaluate(expr.args[0])
        N = evaluate(expr.args[1])
        if not N.is_normal_in(G):
            raise NotNormal(f"{expr.args[1]} is not normal in {expr.args[0]}")
        return G.quotient(N)
    if head in ("C", "S", "A", "D"):
        n = _single_int(expr)
        kind = {"C": "cyclic", "S": "symmetric", "A": "alternating", "D": "dihedral"}[head]
        return C.base_group(kind, n)
    if head in ("AGL1", "AGammaL1"):
        q = _single_int(expr)
        (p, k), = factorize(q).items()
        return C.affine_semilinear(p, k, include_galois=(head == "AGammaL1"))
    if head == "GLQ":
        kw = expr.keyed()
        if kw:
            return C.glq_family(kw["l"], kw["q"])
        l, q = _single_int(expr, 2)
        return C.glq_family(l, q)
    if head == "SYL2":
        return C.sylow2_sym2l(_single_int(expr))
    if head in ("PSL2", "PGL2", "PGammaL2", "PSL3"):
        q = _single_int(expr)
        kind = {"PSL2": "psl2", "PGL2": "pgl2",
                "PGammaL2": "pgammal2", "PSL3": "psl3"}[head]
        return C.projective_group(kind, q)
    raise ExprParseError(f"unknown constructor {head!r}", 0,
                         {"C", "S", "A", "D", "AGL1", "AGammaL1", "GLQ", "SYL2",
                          "PSL2", "PGL2", "PGammaL2", "PSL3", "x", "wr", "q"})


def group_from_text(text: str):
    return evaluate(parse_group_expr(text))
