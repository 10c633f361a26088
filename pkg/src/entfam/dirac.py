"""Parser and renderer for ASCII Dirac-notation state expressions.

Grammar (recursive descent, one token of lookahead)::

    state        := [ "+" | "-" ] term { ("+" | "-") term }
    term         := [ coeff [ "*" ] ] ket | coeff
    ket          := "|" bit { bit } ">"          bit := "0" | "1"
    coeff        := factor { ("*" | "/") factor }
    factor       := literal | param | "(" signed_coeff ")"
    signed_coeff := [ "+" | "-" ] coeff { ("+" | "-") coeff }

Literals are Gaussian-rational: ``3``, ``-2/5``, ``i``, ``-i``, ``2/3i``,
``1+2i``, ``(1-i)/2``.  ``i`` is reserved for the imaginary unit; any other
``[A-Za-z][A-Za-z0-9_]*`` word is a parameter name (the docs map lambda_1 to
``l1``).  Whitespace between tokens is ignored.  Qubit 1 is the leftmost bit
of a ket and the most significant bit of the basis index.

A term that is a bare coefficient is accepted by the grammar but rejected
when the expression is assembled: a state term needs a ket.  Parameters are
never evaluated symbolically; :func:`bind_params` substitutes exact values
and produces a :class:`~entfam.states.PureState`.
"""

from __future__ import annotations

import re as _re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Union

from .errors import DiracParseError, StateError
from .scalars import ONE, ZERO, GaussianRational
from .states import PureState

# Coefficient expression tree: ("lit", value) | ("param", name) |
# ("neg", e) | ("add", l, r) | ("mul", l, r) | ("div", l, r)
CoeffExpr = tuple


@dataclass(frozen=True)
class StateExpr:
    """Parsed state expression; coefficients may still contain parameters."""

    qubit_count: int
    terms: tuple[tuple[CoeffExpr, int], ...]

    def param_names(self) -> frozenset[str]:
        names: set[str] = set()
        for expr, _ in self.terms:
            _collect_params(expr, names)
        return frozenset(names)


ParamBinding = Mapping[str, Union[GaussianRational, int, Fraction]]


def _collect_params(expr: CoeffExpr, out: set[str]) -> None:
    kind = expr[0]
    if kind == "param":
        out.add(expr[1])
    elif kind == "neg":
        _collect_params(expr[1], out)
    elif kind in ("add", "mul", "div"):
        _collect_params(expr[1], out)
        _collect_params(expr[2], out)


# -- lexer ----------------------------------------------------------------------

_IDENT_RE = _re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_IDENT_CONT = _re.compile(r"[A-Za-z0-9_]")


@dataclass(frozen=True)
class _Token:
    kind: str  # number ident ket + - * / ( ) end
    pos: int
    text: str
    value: object = None


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c in "+-*/()":
            tokens.append(_Token(c, i, c))
            i += 1
            continue
        if c == "|":
            j = i + 1
            while j < n and text[j] in "01":
                j += 1
            if j == i + 1:
                raise DiracParseError("expected ket bits (0 or 1) after '|'", j)
            if j >= n or text[j] != ">":
                raise DiracParseError("unterminated ket, expected '>'", j)
            tokens.append(_Token("ket", i, text[i : j + 1], text[i + 1 : j]))
            i = j + 1
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            numerator = int(text[i:j])
            denominator = 1
            if j + 1 < n and text[j] == "/" and text[j + 1].isdigit():
                j += 1
                k = j
                while j < n and text[j].isdigit():
                    j += 1
                denominator = int(text[k:j])
            imag = False
            if j < n and text[j] == "i" and not (
                j + 1 < n and _IDENT_CONT.match(text[j + 1])
            ):
                imag = True
                j += 1
            if denominator == 0:
                raise DiracParseError("zero denominator in literal", i)
            tokens.append(
                _Token("number", i, text[i:j], (Fraction(numerator, denominator), imag))
            )
            i = j
            continue
        m = _IDENT_RE.match(text, i)
        if m:
            name = m.group()
            if name == "i":
                tokens.append(_Token("number", i, "i", (Fraction(1), True)))
            else:
                tokens.append(_Token("ident", i, name, name))
            i = m.end()
            continue
        raise DiracParseError(f"unexpected character {c!r}", i)
    tokens.append(_Token("end", n, ""))
    return tokens


# -- parser ---------------------------------------------------------------------


class _Parser:
    def __init__(self, tokens: list[_Token], allow_params: bool = True):
        self._tokens = tokens
        self._k = 0
        self._allow_params = allow_params

    def _peek(self) -> _Token:
        return self._tokens[self._k]

    def _advance(self) -> _Token:
        tok = self._tokens[self._k]
        self._k += 1
        return tok

    def _expect(self, kind: str, what: str) -> _Token:
        tok = self._peek()
        if tok.kind != kind:
            found = repr(tok.text) if tok.kind != "end" else "end of input"
            raise DiracParseError(f"expected {what}, found {found}", tok.pos)
        return self._advance()

    def state(self) -> StateExpr:
        first = self._peek()
        if first.kind == "end":
            raise DiracParseError("empty state expression", first.pos)
        terms: list[tuple[CoeffExpr, str, int]] = []
        negate = False
        if first.kind in "+-":
            negate = first.kind == "-"
            self._advance()
        terms.append(self._term(negate))
        while self._peek().kind in "+-":
            op = self._advance()
            terms.append(self._term(op.kind == "-"))
        end = self._peek()
        if end.kind != "end":
            raise DiracParseError(f"unexpected {end.text!r} after term", end.pos)
        width = None
        assembled = []
        for expr, bits, pos in terms:
            if bits is None:
                raise DiracParseError("term has no ket", pos)
            if width is None:
                width = len(bits)
            elif len(bits) != width:
                raise DiracParseError(
                    f"inconsistent ket lengths: expected {width} bits, found {len(bits)}",
                    pos,
                )
            assembled.append((expr, int(bits, 2)))
        assert width is not None
        return StateExpr(qubit_count=width, terms=tuple(assembled))

    def _term(self, negate: bool):
        tok = self._peek()
        if tok.kind == "ket":
            self._advance()
            expr: CoeffExpr = ("lit", ONE)
        else:
            expr = self.coeff()
            nxt = self._peek()
            if nxt.kind == "*":
                self._advance()
                tok = self._expect("ket", "a ket after '*'")
            elif nxt.kind == "ket":
                tok = self._advance()
            else:
                # bare-coefficient term: grammatically allowed, semantically not
                return (("neg", expr) if negate else expr, None, tok.pos)
        if negate:
            expr = ("neg", expr)
        return (expr, tok.value, tok.pos)

    def coeff(self) -> CoeffExpr:
        expr = self.factor()
        while self._peek().kind in "*/":
            # A '*' directly before a ket belongs to the term, not the coeff.
            if self._peek().kind == "*" and self._tokens[self._k + 1].kind == "ket":
                break
            op = self._advance()
            rhs = self.factor()
            expr = ("mul" if op.kind == "*" else "div", expr, rhs)
        return expr

    def factor(self) -> CoeffExpr:
        tok = self._peek()
        if tok.kind == "number":
            self._advance()
            value, imag = tok.value
            lit = GaussianRational(0, value) if imag else GaussianRational(value)
            return ("lit", lit)
        if tok.kind == "ident":
            if not self._allow_params:
                raise DiracParseError(
                    f"parameter {tok.text!r} is not allowed in a plain literal", tok.pos
                )
            self._advance()
            return ("param", tok.value)
        if tok.kind == "(":
            self._advance()
            expr = self.signed_coeff()
            self._expect(")", "')'")
            return expr
        found = repr(tok.text) if tok.kind != "end" else "end of input"
        raise DiracParseError(f"expected a coefficient, found {found}", tok.pos)

    def signed_coeff(self) -> CoeffExpr:
        tok = self._peek()
        negate = False
        if tok.kind in "+-":
            negate = tok.kind == "-"
            self._advance()
        expr = self.coeff()
        if negate:
            expr = ("neg", expr)
        while self._peek().kind in "+-":
            op = self._advance()
            rhs = self.coeff()
            if op.kind == "-":
                rhs = ("neg", rhs)
            expr = ("add", expr, rhs)
        return expr


def parse_state(text: str) -> StateExpr:
    """Parse a state expression; raises DiracParseError with a position."""
    return _Parser(_tokenize(text)).state()


def parse_scalar(text: str) -> GaussianRational:
    """Parse a standalone Gaussian-rational literal such as ``(1-i)/2``."""
    parser = _Parser(_tokenize(text), allow_params=False)
    expr = parser.signed_coeff()
    end = parser._peek()
    if end.kind != "end":
        raise DiracParseError(f"unexpected {end.text!r} after literal", end.pos)
    return _eval_expr(expr, {})


# -- evaluation -------------------------------------------------------------------


def _eval_expr(expr: CoeffExpr, bindings: Mapping[str, GaussianRational]) -> GaussianRational:
    kind = expr[0]
    if kind == "lit":
        return expr[1]
    if kind == "param":
        try:
            return bindings[expr[1]]
        except KeyError:
            raise StateError(f"unbound parameter {expr[1]!r}") from None
    if kind == "neg":
        return -_eval_expr(expr[1], bindings)
    lhs = _eval_expr(expr[1], bindings)
    rhs = _eval_expr(expr[2], bindings)
    if kind == "add":
        return lhs + rhs
    if kind == "mul":
        return lhs * rhs
    if kind == "div":
        try:
            return lhs / rhs
        except ZeroDivisionError:
            raise StateError("division by zero in a coefficient") from None
    raise AssertionError(f"unknown expression node {kind!r}")  # pragma: no cover


def bind_params(expr: StateExpr, bindings: ParamBinding | None = None) -> PureState:
    """Evaluate all coefficients exactly and assemble the amplitude vector.

    Duplicate basis terms are merged by summation.  No normalization is
    applied.  Raises StateError for unbound parameters, division by zero,
    or a state that cancels to zero.
    """
    values = {
        name: GaussianRational.coerce(v) for name, v in (bindings or {}).items()
    }
    amps = [ZERO] * (1 << expr.qubit_count)
    for coeff, index in expr.terms:
        amps[index] = amps[index] + _eval_expr(coeff, values)
    return PureState(expr.qubit_count, amps)


def state_from_text(text: str, bindings: ParamBinding | None = None) -> PureState:
    """Convenience wrapper: parse then bind."""
    return bind_params(parse_state(text), bindings)


# -- rendering -------------------------------------------------------------------


def render_state(state: PureState) -> str:
    """Canonical text for a state: terms by increasing basis index, 1 elided.

    Parsing and binding the output reproduces the state exactly.
    """
    n = state.qubit_count
    parts: list[str] = []
    for index, amp in enumerate(state.amplitudes):
        if amp.is_zero:
            continue
        ket = f"|{index:0{n}b}>"
        negative, body = _coefficient_text(amp)
        if not parts:
            parts.append(("-" if negative else "") + body + ket)
        else:
            parts.append(("-" if negative else "+") + body + ket)
    return "".join(parts)


def _coefficient_text(c: GaussianRational) -> tuple[bool, str]:
    """Split a coefficient into (is_negative, magnitude text) for rendering."""
    if not c.im:
        mag = abs(c.re)
        return c.re < 0, "" if mag == 1 else f"{mag}"
    if not c.re:
        mag = abs(c.im)
        return c.im < 0, "i" if mag == 1 else f"{mag}i"
    # Mixed real/imaginary coefficients are parenthesized and keep their sign.
    return False, f"({c})"
