"""Tiny grammar for typical right-hand sides, and the matching renderer.

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := [coef] ['*'] factor ('*'? factor)*  |  coef
    factor := 'x' ['^' int] | 'exp(' lin ')' | 'sin(' lin ')' | 'cos(' lin ')'
    lin    := ['+'|'-'] [rational] ['*'] 'x'
    coef   := rational
    rational := int ['/' int] | decimal | '(' ['+'|'-'] rational ')'

Whitespace is ignored. Rendered output parses back to the same terms.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .diffop import BasisTerm, canonical_term
from .errors import ParseError
from .rational import fmt

_FUNCS = ("exp", "sin", "cos")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    # -- low level
    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, s: str) -> bool:
        self.skip()
        if self.text.startswith(s, self.pos):
            self.pos += len(s)
            return True
        return False

    def expect(self, s: str):
        if not self.eat(s):
            found = self.peek() or "end of input"
            raise ParseError(f"expected {s!r}, found {found!r}", self.pos)

    def word(self) -> str:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        return self.text[start:self.pos]

    def digits(self) -> str:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        return self.text[start:self.pos]

    # -- grammar
    def rational(self) -> Fraction:
        start = self.pos
        if self.eat("("):
            sign = -1 if self.eat("-") else 1
            if sign == 1:
                self.eat("+")
            value = self.rational()
            self.expect(")")
            return sign * value
        whole = self.digits()
        if not whole:
            raise ParseError("expected a rational literal", start)
        if self.pos < len(self.text) and self.text[self.pos] == ".":
            self.pos += 1
            frac = self.digits()
            if not frac:
                raise ParseError("malformed decimal literal", self.pos)
            return Fraction(f"{whole}.{frac}")
        save = self.pos
        if self.eat("/"):
            den = self.digits()
            if not den:
                # not a fraction after all
                self.pos = save
                return Fraction(int(whole))
            if int(den) == 0:
                raise ParseError("zero denominator", save)
            return Fraction(int(whole), int(den))
        return Fraction(int(whole))

    def starts_number(self) -> bool:
        c = self.peek()
        return c.isdigit() or c == "("

    def lin(self) -> Fraction:
        """Coefficient a of 'a x' inside exp/sin/cos."""
        sign = 1
        if self.eat("-"):
            sign = -1
        else:
            self.eat("+")
        a = Fraction(1)
        if self.starts_number():
            a = self.rational()
            self.eat("*")
        at = self.pos
        if self.word() != "x":
            raise ParseError("expected 'x' in function argument", at)
        return sign * a

    def term(self):
        coef = Fraction(1)
        power = 0
        alpha = Fraction(0)
        trig = None
        seen_any = False
        if self.starts_number():
            coef = self.rational()
            seen_any = True
            self.eat("*")
        while True:
            self.skip()
            at = self.pos
            name = self.word()
            if not name:
                break
            seen_any = True
            if name == "x":
                if self.eat("^"):
                    d = self.digits()
                    if not d:
                        raise ParseError("expected an integer exponent", self.pos)
                    power += int(d)
                else:
                    power += 1
            elif name in _FUNCS:
                self.expect("(")
                a = self.lin()
                self.expect(")")
                if name == "exp":
                    alpha += a
                else:
                    if trig is not None:
                        raise ParseError("at most one sin/cos factor per term", at)
                    trig = (name, a)
            else:
                raise ParseError(f"unknown symbol {name!r}", at)
            if not self.eat("*"):
                nxt = self.peek()
                if not nxt.isalpha():
                    break
        if not seen_any:
            raise ParseError("expected a term", self.pos)
        kind, beta = trig if trig else ("exp", Fraction(0))
        sign, t = canonical_term(power, alpha, beta, kind)
        return coef * sign, t

    def expr(self):
        out: dict = {}
        sign = -1 if self.eat("-") else 1
        if sign == 1:
            self.eat("+")
        while True:
            c, t = self.term()
            if t is not None:
                out[t] = out.get(t, Fraction(0)) + sign * c
            if self.eat("+"):
                sign = 1
            elif self.eat("-"):
                sign = -1
            else:
                break
        self.skip()
        if self.pos != len(self.text):
            raise ParseError(f"unexpected {self.text[self.pos]!r}", self.pos)
        return [(c, t) for t, c in out.items() if c]


def parse_rhs_expression(text: str) -> list[tuple[Fraction, BasisTerm]]:
    """Parse e.g. ``"4*exp(2x)*sin(3x) + 2*exp(2x)*cos(3x)"`` into terms.

    Identical terms are merged and zero terms dropped, so "0" parses to [].
    """
    if not text or not text.strip():
        raise ParseError("empty expression", 0)
    return _Parser(text).expr()


def _lin(a: Fraction) -> str:
    if a == 1:
        return "x"
    if a == -1:
        return "-x"
    if a.denominator == 1:
        return f"{a.numerator}x"
    return f"({fmt(a)})x"


def render_term_body(t: BasisTerm) -> str:
    parts = []
    if t.power == 1:
        parts.append("x")
    elif t.power > 1:
        parts.append(f"x^{t.power}")
    if t.alpha:
        parts.append(f"exp({_lin(t.alpha)})")
    if t.kind != "exp":
        parts.append(f"{t.kind}({_lin(t.beta)})")
    return "*".join(parts)


def render_terms(terms: Iterable[tuple[Fraction, BasisTerm]]) -> str:
    """Deterministic plain-text sum; "0" when nothing is left."""
    out = []
    for c, t in terms:
        if not c:
            continue
        body = render_term_body(t)
        a = abs(c)
        if not body:
            piece = fmt(a)
        elif a == 1:
            piece = body
        elif a.denominator == 1:
            piece = f"{a.numerator}*{body}"
        else:
            piece = f"({fmt(a)})*{body}"
        if not out:
            out.append(piece if c > 0 else f"-{piece}")
        else:
            out.append(("+ " if c > 0 else "- ") + piece)
    return " ".join(out) if out else "0"


def render_solution(y) -> str:
    return render_terms(zip(y.coords, y.basis))
