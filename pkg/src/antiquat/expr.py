"""Infix expression language over antiquaternions.

Grammar (left-associative binaries, longest-match lexing):

    expr    := term (('+' | '-') term)*
    term    := factor (('*' | '/') factor)*
    factor  := ('-' | '~') factor | primary
    primary := NUMBER | BASIS | IDENT '(' expr (',' expr)* ')' | IDENT
             | '(' expr ')' | '(' expr ',' expr ',' expr ',' expr ')'

``e1``..``e4`` lex as basis elements; any other identifier must be a call to
a registered function (``conj``, ``inv``, ``pnorm``, ``norm``, ``ldiv``) or
evaluation fails.  ``~`` is conjugation and binds tighter than ``*``.  ``/``
is the right quotient a * b^-1; the left quotient is spelled ``ldiv(a, b)``.
Note the exponent of a number wins the longest match: ``1.5e2`` is 150, so
write ``1.5*e2`` for a multiple of the basis element.  The 4-component form
``(a1, a2, a3, a4)`` is an element literal; each component must evaluate to
a real scalar.  Scalars embed as multiples of e1.

All errors carry the character offset they refer to.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Callable

from .antiquaternion import (
    AntiQuaternion,
    NotInvertible,
    SingularSystem,
    ZeroElement,
    div_left,
    div_right,
)

__all__ = [
    "LexError", "ParseError", "EvalError",
    "TokenKind", "Token", "tokenize",
    "Literal", "Name", "Unary", "Binary", "Call", "Components",
    "parse", "eval_ast", "evaluate",
]


class LexError(ValueError):
    def __init__(self, offset: int, message: str):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class ParseError(ValueError):
    def __init__(self, offset: int, message: str):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class EvalError(ValueError):
    def __init__(self, offset: int, message: str):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class TokenKind(enum.Enum):
    NUMBER = "number"
    BASIS = "basis"
    PLUS = "+"
    MINUS = "-"
    STAR = "*"
    SLASH = "/"
    TILDE = "~"
    LPAREN = "("
    RPAREN = ")"
    COMMA = ","
    IDENT = "identifier"
    END = "end of input"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    lexeme: str
    pos: int


_NUMBER_RE = re.compile(r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")
_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_BASIS_RE = re.compile(r"e[1-4]\Z")
_SINGLE = {
    "+": TokenKind.PLUS, "-": TokenKind.MINUS, "*": TokenKind.STAR,
    "/": TokenKind.SLASH, "~": TokenKind.TILDE, "(": TokenKind.LPAREN,
    ")": TokenKind.RPAREN, ",": TokenKind.COMMA,
}


def tokenize(src: str) -> list[Token]:
    """Longest-match lexing; raises LexError at the first bad character."""
    tokens = []
    pos = 0
    n = len(src)
    while pos < n:
        ch = src[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch in _SINGLE:
            tokens.append(Token(_SINGLE[ch], ch, pos))
            pos += 1
            continue
        m = _NUMBER_RE.match(src, pos)
        if m:
            tokens.append(Token(TokenKind.NUMBER, m.group(), pos))
            pos = m.end()
            continue
        m = _IDENT_RE.match(src, pos)
        if m:
            kind = TokenKind.BASIS if _BASIS_RE.match(m.group()) else TokenKind.IDENT
            tokens.append(Token(kind, m.group(), pos))
            pos = m.end()
            continue
        raise LexError(pos, f"unexpected character {ch!r}")
    tokens.append(Token(TokenKind.END, "", n))
    return tokens


# -- AST ---------------------------------------------------------------------

@dataclass(frozen=True)
class Literal:
    value: AntiQuaternion
    pos: int


@dataclass(frozen=True)
class Name:
    name: str
    pos: int


@dataclass(frozen=True)
class Unary:
    op: str
    operand: object
    pos: int


@dataclass(frozen=True)
class Binary:
    op: str
    left: object
    right: object
    pos: int


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple
    pos: int


@dataclass(frozen=True)
class Components:
    parts: tuple
    pos: int


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def expect(self, kind: TokenKind) -> Token:
        if self.current.kind is not kind:
            raise ParseError(
                self.current.pos,
                f"expected {kind.value!r}, got {self.current.kind.value!r}",
            )
        return self.advance()

    def parse_expr(self):
        node = self.parse_term()
        while self.current.kind in (TokenKind.PLUS, TokenKind.MINUS):
            op = self.advance()
            node = Binary(op.lexeme, node, self.parse_term(), op.pos)
        return node

    def parse_term(self):
        node = self.parse_factor()
        while self.current.kind in (TokenKind.STAR, TokenKind.SLASH):
            op = self.advance()
            node = Binary(op.lexeme, node, self.parse_factor(), op.pos)
        return node

    def parse_factor(self):
        if self.current.kind in (TokenKind.MINUS, TokenKind.TILDE):
            op = self.advance()
            return Unary(op.lexeme, self.parse_factor(), op.pos)
        return self.parse_primary()

    def parse_primary(self):
        token = self.current
        if token.kind is TokenKind.NUMBER:
            self.advance()
            return Literal(AntiQuaternion(float(token.lexeme)), token.pos)
        if token.kind is TokenKind.BASIS:
            self.advance()
            return Literal(AntiQuaternion.basis(int(token.lexeme[1])), token.pos)
        if token.kind is TokenKind.IDENT:
            self.advance()
            if self.current.kind is TokenKind.LPAREN:
                self.advance()
                args = [self.parse_expr()]
                while self.current.kind is TokenKind.COMMA:
                    self.advance()
                    args.append(self.parse_expr())
                self.expect(TokenKind.RPAREN)
                return Call(token.lexeme, tuple(args), token.pos)
            return Name(token.lexeme, token.pos)
        if token.kind is TokenKind.LPAREN:
            self.advance()
            first = self.parse_expr()
            if self.current.kind is TokenKind.COMMA:
                parts = [first]
                while self.current.kind is TokenKind.COMMA:
                    self.advance()
                    parts.append(self.parse_expr())
                if len(parts) != 4:
                    raise ParseError(
                        self.current.pos,
                        f"element literal needs 4 components, got {len(parts)}",
                    )
                self.expect(TokenKind.RPAREN)
                return Components(tuple(parts), token.pos)
            self.expect(TokenKind.RPAREN)
            return first
        raise ParseError(
            token.pos,
            f"expected a number, basis element, identifier or '(', "
            f"got {token.kind.value!r}",
        )


def parse(tokens: list[Token]):
    """Parse a token stream (ending in END) into an AST."""
    parser = _Parser(tokens)
    node = parser.parse_expr()
    if parser.current.kind is not TokenKind.END:
        raise ParseError(parser.current.pos, f"unexpected {parser.current.kind.value!r}")
    return node


def _scalar(w: AntiQuaternion) -> AntiQuaternion:
    return AntiQuaternion(w)


_FUNCTIONS: dict[str, tuple[int, Callable[..., AntiQuaternion]]] = {
    "conj": (1, lambda w: w.conjugate()),
    "inv": (1, lambda w: w.inverse()),
    "pnorm": (1, lambda w: AntiQuaternion(w.pseudonorm())),
    "norm": (1, lambda w: AntiQuaternion(w.norm())),
    "ldiv": (2, div_left),
}


def eval_ast(node) -> AntiQuaternion:
    """Evaluate an AST; arithmetic failures become EvalError with an offset."""
    if isinstance(node, Literal):
        return node.value
    if isinstance(node, Name):
        raise EvalError(node.pos, f"unknown identifier {node.name!r}")
    if isinstance(node, Unary):
        value = eval_ast(node.operand)
        return -value if node.op == "-" else value.conjugate()
    if isinstance(node, Binary):
        left = eval_ast(node.left)
        right = eval_ast(node.right)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left * right
        try:
            return div_right(left, right)
        except NotInvertible as exc:
            raise EvalError(node.pos, str(exc)) from exc
    if isinstance(node, Call):
        registered = _FUNCTIONS.get(node.name)
        if registered is None:
            raise EvalError(node.pos, f"unknown function {node.name!r}")
        arity, fn = registered
        if len(node.args) != arity:
            raise EvalError(
                node.pos,
                f"{node.name} expects {arity} argument{'s' if arity != 1 else ''}, "
                f"got {len(node.args)}",
            )
        args = [eval_ast(arg) for arg in node.args]
        try:
            return fn(*args)
        except (NotInvertible, SingularSystem, ZeroElement) as exc:
            raise EvalError(node.pos, str(exc)) from exc
    if isinstance(node, Components):
        values = []
        for part in node.parts:
            value = eval_ast(part)
            if not (value.a2 == 0.0 and value.a3 == 0.0 and value.a4 == 0.0):
                raise EvalError(part.pos, "element literal component must be a real scalar")
            values.append(value.a1)
        return AntiQuaternion(*values)
    raise TypeError(f"not an AST node: {node!r}")


def evaluate(src: str) -> AntiQuaternion:
    """Tokenize, parse and evaluate a source string."""
    return eval_ast(parse(tokenize(src)))
