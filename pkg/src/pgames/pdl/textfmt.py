"""Cheat-sheet text format: tokenizer, recursive-descent parser, renderer.

Format (comments run from '#' to end of line):

    params: p1, p2
      if p2 == 0 -> wager0
      if p1 >= 1/2 and p2 >= 1/2 -> wager2
      else -> {wager1: (1 - p1) * (1 - 2*p2) / (1 - p1 + p1*p2), wager2: rest}

Rendering is canonical: one rule per line, two-space indent, numbers with
up to 12 significant digits.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import (
    PDL,
    BinOp,
    Comparison,
    Expr,
    Func,
    Neg,
    Num,
    Param,
    ParamStrategy,
    PdlError,
    REST,
    Rule,
)


class PdlSyntaxError(PdlError):
    """Malformed cheat-sheet text, with 1-based line/column position."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.line = line
        self.col = col


# ---------------------------------------------------------------------------
# Tokenizer
# ---------------------------------------------------------------------------

_SYMBOLS = ["->", "<=", ">=", "==", "!=", "<", ">", "{", "}", "(", ")",
            ":", ",", "+", "-", "*", "/"]
_KEYWORDS = {"params", "if", "else", "and", "rest"}
_FUNCS = {"abs", "floor", "ceil"}
_CMP_OPS = {"<", "<=", ">", ">=", "==", "!="}


@dataclass(frozen=True)
class Token:
    kind: str  # 'num', 'ident', 'sym', 'eof'
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        matched = False
        for sym in _SYMBOLS:
            if text.startswith(sym, i):
                tokens.append(Token("sym", sym, line, col))
                i += len(sym)
                col += len(sym)
                matched = True
                break
        if matched:
            continue
        if ch.isdigit() or (ch == "." and i + 1 < n and text[i + 1].isdigit()):
            j = i
            while j < n and (text[j].isdigit() or text[j] == "."):
                j += 1
            if j < n and text[j] in "eE":
                k = j + 1
                if k < n and text[k] in "+-":
                    k += 1
                if k < n and text[k].isdigit():
                    j = k
                    while j < n and text[j].isdigit():
                        j += 1
            lit = text[i:j]
            try:
                float(lit)
            except ValueError:
                raise PdlSyntaxError(f"bad number literal {lit!r}", line, col)
            tokens.append(Token("num", lit, line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("ident", text[i:j], line, col))
            col += j - i
            i = j
            continue
        raise PdlSyntaxError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token("eof", "", line, col))
    return tokens


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message: str) -> PdlSyntaxError:
        tok = self.peek()
        got = "end of input" if tok.kind == "eof" else repr(tok.text)
        return PdlSyntaxError(f"{message}, got {got}", tok.line, tok.col)

    def expect(self, kind: str, text: str | None = None) -> Token:
        tok = self.peek()
        if tok.kind != kind or (text is not None and tok.text != text):
            raise self.fail(f"expected {text or kind}")
        return self.next()

    def at_keyword(self, word: str) -> bool:
        tok = self.peek()
        return tok.kind == "ident" and tok.text == word

    # -- grammar ----------------------------------------------------------

    def parse_pdl(self) -> PDL:
        self.expect_keyword("params")
        self.expect("sym", ":")
        names = [self.ident("parameter name")]
        while self.peek().text == ",":
            self.next()
            names.append(self.ident("parameter name"))
        rules = []
        while self.at_keyword("if"):
            self.next()
            conds = [self.comparison()]
            while self.at_keyword("and"):
                self.next()
                conds.append(self.comparison())
            self.expect("sym", "->")
            rules.append(Rule(tuple(conds), self.strategy()))
        self.expect_keyword("else")
        self.expect("sym", "->")
        default = self.strategy()
        self.expect("eof")
        try:
            return PDL(tuple(names), tuple(rules), default)
        except PdlError as exc:
            tok = self.tokens[0]
            raise PdlSyntaxError(str(exc), tok.line, tok.col) from exc

    def expect_keyword(self, word: str) -> None:
        if not self.at_keyword(word):
            raise self.fail(f"expected {word!r}")
        self.next()

    def ident(self, what: str) -> str:
        tok = self.peek()
        if tok.kind != "ident" or tok.text in _KEYWORDS:
            raise self.fail(f"expected {what}")
        return self.next().text

    def comparison(self) -> Comparison:
        lhs = self.expr()
        tok = self.peek()
        if tok.kind != "sym" or tok.text not in _CMP_OPS:
            raise self.fail("expected comparison operator")
        op = self.next().text
        rhs = self.expr()
        return Comparison(lhs, op, rhs)

    def strategy(self) -> ParamStrategy:
        if self.peek().text != "{":
            return ParamStrategy.pure(self.ident("action label"))
        brace = self.next()
        entries = [self.entry()]
        while self.peek().text == ",":
            self.next()
            entries.append(self.entry())
        self.expect("sym", "}")
        try:
            return ParamStrategy(tuple(entries))
        except PdlError as exc:
            raise PdlSyntaxError(str(exc), brace.line, brace.col) from exc

    def entry(self):
        action = self.ident("action label")
        self.expect("sym", ":")
        if self.at_keyword("rest"):
            self.next()
            return (action, REST)
        return (action, self.expr())

    def expr(self) -> Expr:
        node = self.term()
        while self.peek().kind == "sym" and self.peek().text in ("+", "-"):
            op = self.next().text
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.peek().kind == "sym" and self.peek().text in ("*", "/"):
            op = self.next().text
            node = BinOp(op, node, self.factor())
        return node

    def factor(self) -> Expr:
        tok = self.peek()
        if tok.kind == "sym" and tok.text == "-":
            self.next()
            return Neg(self.factor())
        if tok.kind == "sym" and tok.text == "(":
            self.next()
            node = self.expr()
            self.expect("sym", ")")
            return node
        if tok.kind == "num":
            self.next()
            return Num(float(tok.text))
        if tok.kind == "ident" and tok.text in _FUNCS:
            name = self.next().text
            self.expect("sym", "(")
            arg = self.expr()
            self.expect("sym", ")")
            return Func(name, arg)
        if tok.kind == "ident" and tok.text not in _KEYWORDS:
            self.next()
            return Param(tok.text)
        raise self.fail("expected expression")


def parse_pdl(text: str) -> PDL:
    """Parse cheat-sheet text; raises PdlSyntaxError with line/column."""
    return _Parser(tokenize(text)).parse_pdl()


# ---------------------------------------------------------------------------
# Renderer
# ---------------------------------------------------------------------------

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def _fmt_num(x: float) -> str:
    if x == int(x) and abs(x) < 1e15:
        return str(int(x))
    return format(x, ".12g")


def _render_expr(e: Expr, parent_prec: int = 0, right_side: bool = False) -> str:
    if isinstance(e, Num):
        s = _fmt_num(e.value)
        if e.value < 0 and parent_prec > 0:
            return f"({s})"
        return s
    if isinstance(e, Param):
        return e.name
    if isinstance(e, Func):
        return f"{e.name}({_render_expr(e.arg)})"
    if isinstance(e, Neg):
        inner = _render_expr(e.arg, 3)
        s = f"-{inner}"
        return f"({s})" if parent_prec > 0 else s
    if isinstance(e, BinOp):
        prec = _PREC[e.op]
        left = _render_expr(e.left, prec)
        right = _render_expr(e.right, prec, right_side=True)
        s = f"{left} {e.op} {right}"
        needs = prec < parent_prec or (prec == parent_prec and right_side)
        return f"({s})" if needs else s
    raise TypeError(f"unknown expression node {e!r}")


def _render_strategy(s: ParamStrategy) -> str:
    if len(s.entries) == 1:
        action, w = s.entries[0]
        if isinstance(w, Num) and w.value == 1.0:
            return action
    parts = []
    for action, w in s.entries:
        if not isinstance(w, Expr):
            parts.append(f"{action}: rest")
        else:
            parts.append(f"{action}: {_render_expr(w)}")
    return "{" + ", ".join(parts) + "}"


def render_pdl(pdl: PDL) -> str:
    """Canonical text: header, one indented line per rule, 'else' last."""
    lines = ["params: " + ", ".join(pdl.param_names)]
    for rule in pdl.rules:
        conds = " and ".join(
            f"{_render_expr(c.lhs)} {c.op} {_render_expr(c.rhs)}"
            for c in rule.conditions
        )
        lines.append(f"  if {conds} -> {_render_strategy(rule.strategy)}")
    lines.append(f"  else -> {_render_strategy(pdl.default)}")
    return "\n".join(lines) + "\n"
