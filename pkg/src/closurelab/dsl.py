"""Parser and pretty-printer for ``.cca`` scripts.

Grammar (LL(1) apart from one token of lookahead for keyword arguments)::

    script    := statement*
    statement := ('ring' | 'ideal' | 'let') NAME '=' expr ';'
               | 'assert' expr (('==' | '!=') expr)? ';'
               | 'report' expr ';'
    expr      := term (('+' | '-') term)*
    term      := unary (('*' | '/') unary)*
    unary     := '-' unary | power
    power     := atom ('^' INT)?
    atom      := INT | STRING | NAME | NAME '(' args? ')' | '(' expr ')' | '[' (expr (',' expr)*)? ']'
    args      := arg (',' arg)*
    arg       := NAME '=' expr | expr

Comments run from ``#`` or ``//`` to the end of the line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional

from .errors import ClosureLabError


class ParseError(ClosureLabError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.line = line
        self.col = col
        self.bare = message


@dataclass(frozen=True)
class Loc:
    line: int
    col: int

    def __str__(self):
        return f"{self.line}:{self.col}"


def _loc():
    return field(default=None, compare=False, repr=False)


# -- AST ----------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: int
    loc: Optional[Loc] = _loc()


@dataclass(frozen=True)
class Str:
    value: str
    loc: Optional[Loc] = _loc()


@dataclass(frozen=True)
class Name:
    id: str
    loc: Optional[Loc] = _loc()


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple
    kwargs: tuple  # ((name, expr), ...)
    loc: Optional[Loc] = _loc()


@dataclass(frozen=True)
class ListExpr:
    items: tuple
    loc: Optional[Loc] = _loc()


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    loc: Optional[Loc] = _loc()


@dataclass(frozen=True)
class Neg:
    operand: object
    loc: Optional[Loc] = _loc()


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int
    loc: Optional[Loc] = _loc()


@dataclass(frozen=True)
class Define:
    kind: str  # ring | ideal | let
    name: str
    expr: object
    loc: Optional[Loc] = _loc()


@dataclass(frozen=True)
class Assert:
    expr: object
    op: Optional[str] = None
    rhs: object = None
    loc: Optional[Loc] = _loc()


@dataclass(frozen=True)
class ReportStmt:
    expr: object
    loc: Optional[Loc] = _loc()


@dataclass(frozen=True)
class Script:
    statements: tuple

    def __len__(self):
        return len(self.statements)


# -- builtins known to the static checker ------------------------------------

# name -> (min positional, max positional or None, allowed keywords)
SIGNATURES = {
    "poly": (2, 2, {"weights"}),
    "quotient": (2, 2, set()),
    "toric": (2, 3, set()),
    "GF": (1, 1, set()),
    "ideal": (0, None, set()),
    "maximal": (1, 1, set()),
    "unit": (1, 1, set()),
    "zero": (1, 1, set()),
    "sum": (2, 2, set()),
    "product": (2, 2, set()),
    "power": (2, 2, set()),
    "colon": (2, 2, set()),
    "saturate": (2, 2, set()),
    "saturation_exponent": (2, 2, set()),
    "intersect": (2, 2, set()),
    "contains": (2, 2, set()),
    "subset": (2, 2, set()),
    "equal": (2, 2, set()),
    "dim": (1, 1, set()),
    "colength": (1, 1, set()),
    "standard_monomials": (1, 1, set()),
    "minimal_primes": (1, 1, set()),
    "is_sop": (2, 2, set()),
    "infty": (2, 2, set()),
    "lim": (2, 2, {"window", "max_n"}),
    "closure": (1, 1, set()),
    "is_integrally_closed": (1, 1, {"assume_equidim"}),
    "rees": (2, 2, {"assume_equidim"}),
    "in_closure": (2, 2, {"assume_equidim"}),
    "mult": (1, 1, {"max_n", "window"}),
    "mult_param": (2, 2, set()),
    "additivity": (1, 1, set()),
    "reduction": (1, 1, set()),
    "check_inequality": (1, 1, {"assume_equidim", "assume_closed"}),
    "check_cm_via_lim": (2, 2, {"assume_unmixed"}),
    "check_chain": (2, 2, {"assume_equidim"}),
    "check_regular": (1, 2, {"assume_unmixed"}),
    "check_f_rational": (0, None, set()),
}

CONSTANTS = {"Q", "QQ", "k", "Fp", "true", "false"}
# positional slots holding fresh variable names rather than expressions
DECLARING_SLOTS = {("poly", 1), ("toric", 2)}


# -- tokenizer -------------------------------------------------------------------

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r\f]+)
  | (?P<nl>\n)
  | (?P<comment>(\#|//)[^\n]*)
  | (?P<num>\d+)
  | (?P<str>"[^"\n]*")
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>==|!=|[=+\-*/^(),;\[\]])
""", re.VERBOSE)

KEYWORDS = {"ring", "ideal", "let", "assert", "report"}


@dataclass
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(source: str) -> list:
    tokens = []
    pos = 0
    line, col = 1, 1
    while pos < len(source):
        m = _TOKEN.match(source, pos)
        if not m:
            raise ParseError(f"unexpected character {source[pos]!r}", line, col)
        kind = m.lastgroup
        text = m.group()
        if kind == "nl":
            line, col = line + 1, 1
        else:
            if kind not in ("ws", "comment"):
                tokens.append(Token(kind, text, line, col))
            col += len(text)
        pos = m.end()
    tokens.append(Token("eof", "", line, col))
    return tokens


# -- parser ------------------------------------------------------------------------

class _Parser:
    def __init__(self, source: str):
        self.toks = tokenize(source)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def peek(self, k: int = 1) -> Token:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def advance(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, message: str, tok: Token | None = None):
        tok = tok or self.tok
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise ParseError(f"{message}, found {found}", tok.line, tok.col)

    def expect(self, text: str) -> Token:
        if self.tok.text != text or self.tok.kind in ("str",):
            self.error(f"expected {text!r}")
        return self.advance()

    def expect_name(self) -> Token:
        if self.tok.kind != "name":
            self.error("expected a name")
        return self.advance()

    def script(self) -> Script:
        out = []
        while self.tok.kind != "eof":
            out.append(self.statement())
        return Script(tuple(out))

    def statement(self):
        t = self.tok
        loc = Loc(t.line, t.col)
        if t.kind == "name" and t.text in ("ring", "ideal", "let") and self.peek().kind == "name":
            self.advance()
            name = self.expect_name().text
            self.expect("=")
            expr = self.expr()
            self.expect(";")
            return Define(t.text, name, expr, loc)
        if t.kind == "name" and t.text == "assert":
            self.advance()
            lhs = self.expr()
            op = rhs = None
            if self.tok.text in ("==", "!="):
                op = self.advance().text
                rhs = self.expr()
            self.expect(";")
            return Assert(lhs, op, rhs, loc)
        if t.kind == "name" and t.text == "report":
            self.advance()
            expr = self.expr()
            self.expect(";")
            return ReportStmt(expr, loc)
        self.error("expected a statement (ring, ideal, let, assert, report)")

    def expr(self):
        left = self.term()
        while self.tok.text in ("+", "-") and self.tok.kind == "op":
            t = self.advance()
            left = BinOp(t.text, left, self.term(), Loc(t.line, t.col))
        return left

    def term(self):
        left = self.unary()
        while self.tok.text in ("*", "/") and self.tok.kind == "op":
            t = self.advance()
            left = BinOp(t.text, left, self.unary(), Loc(t.line, t.col))
        return left

    def unary(self):
        if self.tok.text == "-" and self.tok.kind == "op":
            t = self.advance()
            return Neg(self.unary(), Loc(t.line, t.col))
        return self.power()

    def power(self):
        base = self.atom()
        if self.tok.text == "^" and self.tok.kind == "op":
            t = self.advance()
            if self.tok.kind != "num":
                self.error("expected a nonnegative integer exponent")
            exp = int(self.advance().text)
            return Pow(base, exp, Loc(t.line, t.col))
        return base

    def atom(self):
        t = self.tok
        loc = Loc(t.line, t.col)
        if t.kind == "num":
            self.advance()
            return Num(int(t.text), loc)
        if t.kind == "str":
            self.advance()
            return Str(t.text[1:-1], loc)
        if t.kind == "name":
            if t.text in KEYWORDS - {"ideal"}:
                self.error("keyword cannot be used as a value")
            self.advance()
            if self.tok.text == "(" and self.tok.kind == "op":
                return self.call(t.text, loc)
            return Name(t.text, loc)
        if t.text == "(" and t.kind == "op":
            self.advance()
            e = self.expr()
            self.expect(")")
            return e
        if t.text == "[" and t.kind == "op":
            self.advance()
            items = []
            if self.tok.text != "]":
                items.append(self.expr())
                while self.tok.text == ",":
                    self.advance()
                    items.append(self.expr())
            if self.tok.text != "]":
                self.error("expected ',' or ']'")
            self.advance()
            return ListExpr(tuple(items), loc)
        self.error("expected an expression")

    def call(self, func: str, loc: Loc):
        self.expect("(")
        args, kwargs = [], []
        if self.tok.text != ")":
            while True:
                if self.tok.kind == "name" and self.peek().text == "=" and self.peek().kind == "op":
                    key = self.advance().text
                    self.advance()
                    kwargs.append((key, self.expr()))
                else:
                    if kwargs:
                        self.error("positional argument after keyword argument")
                    args.append(self.expr())
                if self.tok.text == ",":
                    self.advance()
                    continue
                break
        if self.tok.text != ")":
            self.error("expected ',' or ')'")
        self.advance()
        return Call(func, tuple(args), tuple(kwargs), loc)


def _check_names(script: Script):
    """Static pass: names defined before use, known functions, arities."""
    defined: set = set()
    ring_vars: set = set()

    def visit(node, declaring=False):
        if isinstance(node, Name):
            if declaring:
                ring_vars.add(node.id)
                return
            if node.id not in defined and node.id not in CONSTANTS and node.id not in ring_vars:
                raise ParseError(f"undefined name {node.id!r}", node.loc.line, node.loc.col)
        elif isinstance(node, Call):
            sig = SIGNATURES.get(node.func)
            if sig is None:
                raise ParseError(f"unknown function {node.func!r}", node.loc.line, node.loc.col)
            lo, hi, kws = sig
            n = len(node.args)
            if n < lo or (hi is not None and n > hi):
                want = f"{lo}" if lo == hi else f"{lo}..{hi if hi is not None else 'n'}"
                raise ParseError(f"{node.func} takes {want} positional arguments, got {n}",
                                 node.loc.line, node.loc.col)
            for key, _ in node.kwargs:
                if key not in kws:
                    raise ParseError(f"{node.func} has no keyword argument {key!r}",
                                     node.loc.line, node.loc.col)
            for idx, a in enumerate(node.args):
                visit(a, (node.func, idx) in DECLARING_SLOTS)
            for _, a in node.kwargs:
                visit(a)
        elif isinstance(node, ListExpr):
            for item in node.items:
                visit(item, declaring)
        elif isinstance(node, BinOp):
            visit(node.left)
            visit(node.right)
        elif isinstance(node, Neg):
            visit(node.operand)
        elif isinstance(node, Pow):
            visit(node.base)

    for st in script.statements:
        if isinstance(st, Define):
            visit(st.expr)
            defined.add(st.name)
        elif isinstance(st, Assert):
            visit(st.expr)
            if st.rhs is not None:
                visit(st.rhs)
        elif isinstance(st, ReportStmt):
            visit(st.expr)


def parse_script(source: str) -> Script:
    """Parse and statically check a script; raises :class:`ParseError` with line/column."""
    script = _Parser(source).script()
    _check_names(script)
    return script


def parse_expression(source: str):
    p = _Parser(source)
    e = p.expr()
    if p.tok.kind != "eof":
        p.error("unexpected trailing input")
    return e


# -- pretty printer -------------------------------------------------------------------

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def format_expr(node) -> str:
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Str):
        return f'"{node.value}"'
    if isinstance(node, Name):
        return node.id
    if isinstance(node, ListExpr):
        return "[" + ", ".join(format_expr(x) for x in node.items) + "]"
    if isinstance(node, Call):
        parts = [format_expr(a) for a in node.args] + [f"{k}={format_expr(v)}" for k, v in node.kwargs]
        return f"{node.func}(" + ", ".join(parts) + ")"
    if isinstance(node, BinOp):
        return f"{_wrap(node.left)} {node.op} {_wrap(node.right)}"
    if isinstance(node, Neg):
        return "-" + _wrap(node.operand, tight=isinstance(node.operand, (Neg, Pow)))
    if isinstance(node, Pow):
        base = format_expr(node.base)
        if isinstance(node.base, (BinOp, Neg, Pow)):
            base = f"({base})"
        return f"{base}^{node.exp}"
    raise TypeError(f"cannot format {node!r}")


def _wrap(node, tight: bool = False) -> str:
    text = format_expr(node)
    if isinstance(node, (BinOp, Neg)) and not tight:
        return f"({text})"
    return text


def format_statement(st) -> str:
    if isinstance(st, Define):
        return f"{st.kind} {st.name} = {format_expr(st.expr)};"
    if isinstance(st, Assert):
        if st.op is None:
            return f"assert {format_expr(st.expr)};"
        return f"assert {format_expr(st.expr)} {st.op} {format_expr(st.rhs)};"
    if isinstance(st, ReportStmt):
        return f"report {format_expr(st.expr)};"
    raise TypeError(f"cannot format {st!r}")


def format_script(script: Script) -> str:
    return "\n".join(format_statement(s) for s in script.statements) + "\n"
