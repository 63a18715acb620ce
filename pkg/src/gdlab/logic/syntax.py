"""Formulas, sequents, a small recursive-descent parser and a minimal-parenthesis printer.

Grammar, loosest first::

    sequent := formula "|-" formula
    formula := conj ("|" conj)*
    conj    := unary ("&" unary)*
    unary   := "~" unary | atom
    atom    := IDENT | "T" | "F" | "(" formula ")"

Binary connectives associate to the left. ``T`` and ``F`` are the constants.
"""
from __future__ import annotations

import re
from dataclasses import dataclass


class FormulaSyntaxError(SyntaxError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.position = position
        self.text = text


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Top:
    pass


@dataclass(frozen=True)
class Bot:
    pass


@dataclass(frozen=True)
class Neg:
    arg: Formula


@dataclass(frozen=True)
class And:
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or:
    left: Formula
    right: Formula


Formula = Var | Top | Bot | Neg | And | Or


@dataclass(frozen=True)
class Sequent:
    left: Formula
    right: Formula

    def __str__(self) -> str:
        return f"{to_text(self.left)} |- {to_text(self.right)}"

    def variables(self) -> list[str]:
        return sorted(set(variables(self.left)) | set(variables(self.right)))


_UNICODE = {"¬": "~", "∧": "&", "∨": "|", "⊤": "T", "⊥": "F", "⊢": "|-"}
_TOKEN = re.compile(r"\s*(?:(\|-)|([~&|()])|([A-Za-z_][A-Za-z0-9_]*))")


def _tokens(text: str) -> list[tuple[str, int]]:
    for u, a in _UNICODE.items():
        text = text.replace(u, a)
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise FormulaSyntaxError("unexpected character", text, pos)
        tok = m.group(1) or m.group(2) or m.group(3)
        out.append((tok, m.start(m.lastindex)))
        pos = m.end()
    out.append(("<end>", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokens(text)
        self.i = 0

    def peek(self) -> str:
        return self.toks[self.i][0]

    def take(self, expected: str | None = None) -> str:
        tok, pos = self.toks[self.i]
        if expected is not None and tok != expected:
            raise FormulaSyntaxError(f"expected {expected!r}, found {tok!r}", self.text, pos)
        self.i += 1
        return tok

    def error(self, msg: str):
        raise FormulaSyntaxError(msg, self.text, self.toks[self.i][1])

    def formula(self) -> Formula:
        f = self.conj()
        while self.peek() == "|":
            self.take()
            f = Or(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.unary()
        while self.peek() == "&":
            self.take()
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        if self.peek() == "~":
            self.take()
            return Neg(self.unary())
        return self.atom()

    def atom(self) -> Formula:
        tok = self.peek()
        if tok == "(":
            self.take()
            f = self.formula()
            self.take(")")
            return f
        if tok == "T":
            self.take()
            return Top()
        if tok == "F":
            self.take()
            return Bot()
        if tok in ("<end>", ")", "&", "|", "|-"):
            self.error(f"expected a formula, found {tok!r}")
        self.take()
        return Var(tok)


def parse_formula(text: str) -> Formula:
    p = _Parser(text)
    f = p.formula()
    if p.peek() != "<end>":
        p.error(f"unexpected {p.peek()!r}")
    return f


def parse_sequent(text: str) -> Sequent:
    p = _Parser(text)
    left = p.formula()
    p.take("|-")
    right = p.formula()
    if p.peek() != "<end>":
        p.error(f"unexpected {p.peek()!r}")
    return Sequent(left, right)


_PREC = {Or: 1, And: 2}


def _prec(f: Formula) -> int:
    return _PREC.get(type(f), 3)


def to_text(f: Formula) -> str:
    if isinstance(f, Var):
        return f.name
    if isinstance(f, Top):
        return "T"
    if isinstance(f, Bot):
        return "F"
    if isinstance(f, Neg):
        inner = to_text(f.arg)
        return "~" + (inner if _prec(f.arg) == 3 else f"({inner})")
    op = " & " if isinstance(f, And) else " | "
    p = _prec(f)
    left = to_text(f.left)
    right = to_text(f.right)
    if _prec(f.left) < p:
        left = f"({left})"
    if _prec(f.right) <= p:
        right = f"({right})"
    return left + op + right


def variables(f: Formula) -> list[str]:
    out: list[str] = []

    def walk(g):
        if isinstance(g, Var):
            if g.name not in out:
                out.append(g.name)
        elif isinstance(g, Neg):
            walk(g.arg)
        elif isinstance(g, (And, Or)):
            walk(g.left)
            walk(g.right)

    walk(f)
    return out


def substitute(f: Formula, sigma: dict[str, Formula]) -> Formula:
    if isinstance(f, Var):
        return sigma.get(f.name, f)
    if isinstance(f, Neg):
        return Neg(substitute(f.arg, sigma))
    if isinstance(f, And):
        return And(substitute(f.left, sigma), substitute(f.right, sigma))
    if isinstance(f, Or):
        return Or(substitute(f.left, sigma), substitute(f.right, sigma))
    return f


def match(pattern: Formula, target: Formula, sigma: dict[str, Formula] | None = None) -> dict[str, Formula] | None:
    """One-sided matching: a substitution ``s`` with ``s(pattern) == target``, extending ``sigma``."""
    sigma = dict(sigma or {})
    stack = [(pattern, target)]
    while stack:
        p, t = stack.pop()
        if isinstance(p, Var):
            if p.name in sigma and sigma[p.name] != t:
                return None
            sigma[p.name] = t
        elif type(p) is not type(t):
            return None
        elif isinstance(p, Neg):
            stack.append((p.arg, t.arg))
        elif isinstance(p, (And, Or)):
            stack.append((p.left, t.left))
            stack.append((p.right, t.right))
    return sigma
