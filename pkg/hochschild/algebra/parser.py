"""
Reading and printing polynomials.

Grammar (ASCII, no implicit multiplication)::

    poly   := [sign] term { sign term }
    sign   := '+' | '-'
    term   := item { '*' item }
    item   := scalar
            | group [ '/' group ]     quotient of polynomials in q
            | var [ '^' nat ]          variable of the ambient
    scalar := nat [ '/' nat ]          rational constant
            | 'q' [ '^' ['-'] nat ]    power of the parameter q
    group  := '(' [sign] qterm { sign qterm } ')'
    qterm  := scalar { '*' scalar }

Parentheses only ever enclose a coefficient; a variable inside them is an
error reported at the opening parenthesis.

The printer emits terms in descending ambient order and splits a Q(q)
coefficient whose denominator is a power of q into one term per power.
Any other Q(q) coefficient prints as `(num)/(den)`. Either way the output
parses back to the same polynomial.
"""

import re
from fractions import Fraction
from typing import List, Tuple

from hochschild.algebra.coeff import RatFun, dup_format
from hochschild.algebra.poly import Ambient, Monomial, Polynomial
from hochschild.exceptions import ParseError, SpecializationPole

_TOKEN = re.compile(r"\s*(?:(?P<nat>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))")

_TERM_START = ("number", "q", "variable")


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if not match:
            stripped = len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[pos + stripped]!r}", pos + stripped)
        kind = match.lastgroup
        start = match.start(kind)
        value = match.group(kind)
        tokens.append((kind, value, start))
        pos = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ambient: Ambient):
        self.tokens = _tokenize(text)
        self.index = 0
        self.ambient = ambient
        self.field = ambient.field

    @property
    def current(self):
        return self.tokens[self.index]

    def advance(self):
        token = self.tokens[self.index]
        self.index += 1
        return token

    def accept(self, value: str) -> bool:
        kind, text, _ = self.current
        if kind == "op" and text == value:
            self.index += 1
            return True
        return False

    def expect_nat(self) -> int:
        kind, text, pos = self.current
        if kind != "nat":
            raise ParseError(f"expected a number, found {text or 'end of input'!r}", pos, ("number",))
        self.index += 1
        return int(text)

    def parse(self) -> Polynomial:
        if self.current[0] == "end":
            raise ParseError("empty polynomial", self.current[2], _TERM_START)
        terms = {}
        negative = False
        if self.accept("+"):
            pass
        elif self.accept("-"):
            negative = True
        while True:
            mono, coeff = self.term()
            if negative:
                coeff = -coeff
            if coeff:
                total = terms.get(mono, self.field.zero) + coeff
                if total:
                    terms[mono] = total
                else:
                    terms.pop(mono, None)
            kind, text, pos = self.current
            if kind == "end":
                break
            if self.accept("+"):
                negative = False
            elif self.accept("-"):
                negative = True
            else:
                raise ParseError(f"unexpected {text!r}", pos, ("+", "-", "*", "end"))
        return Polynomial(self.ambient, terms)

    def term(self):
        exps = [0] * self.ambient.nvars
        coeff = self.field.one
        coeff = self.item(exps, coeff)
        while self.accept("*"):
            coeff = self.item(exps, coeff)
        return tuple(exps), coeff

    def scalar(self, kind: str, text: str):
        """The rational constant or power of q just read, or None."""
        if kind == "nat":
            value = Fraction(int(text))
            if self.accept("/"):
                den_pos = self.current[2]
                den = self.expect_nat()
                if den == 0:
                    raise ParseError("zero denominator", den_pos, ("number",))
                value /= den
            return self.field.convert(value)
        if kind == "ident" and text == "q":
            power = 1
            if self.accept("^"):
                sign = -1 if self.accept("-") else 1
                power = sign * self.expect_nat()
            return self.field.q(power)
        return None

    def group(self, open_pos: int):
        value = self.group_sum(open_pos)
        if not self.accept("/"):
            return value
        den_pos = self.current[2]
        if not self.accept("("):
            raise ParseError("expected a parenthesized denominator", den_pos, ("(",))
        den = self.group_sum(den_pos)
        if not den:
            if self.field.kind == "Qq-specialized":
                raise SpecializationPole(f"the denominator at position {den_pos} vanishes at q = {self.field.value}")
            raise ParseError("zero denominator", den_pos, ("number", "q"))
        return value / den

    def group_sum(self, open_pos: int):
        """Signed q-terms up to the closing parenthesis, which is consumed."""
        total = self.field.zero
        negative = self.accept("-")
        if not negative:
            self.accept("+")
        while True:
            term = self.group_term(open_pos)
            total = total - term if negative else total + term
            if self.accept("+"):
                negative = False
            elif self.accept("-"):
                negative = True
            elif self.accept(")"):
                return total
            else:
                kind, text, pos = self.current
                raise ParseError(f"unexpected {text or 'end of input'!r} in parentheses", pos, (")", "*", "+", "-"))

    def group_term(self, open_pos: int):
        value = self.group_scalar(open_pos)
        while self.accept("*"):
            value = value * self.group_scalar(open_pos)
        return value

    def group_scalar(self, open_pos: int):
        kind, text, pos = self.advance()
        value = self.scalar(kind, text)
        if value is not None:
            return value
        if kind == "ident":
            raise ParseError("parentheses may only enclose a coefficient in q", open_pos, _TERM_START)
        raise ParseError(f"expected a number or q, found {text or 'end of input'!r}", pos, ("number", "q"))

    def item(self, exps, coeff):
        kind, text, pos = self.advance()
        value = self.scalar(kind, text)
        if value is not None:
            return coeff * value
        if kind == "op" and text == "(":
            return coeff * self.group(pos)
        if kind == "ident":
            i = self.ambient.index(text)
            power = 1
            if self.accept("^"):
                power = self.expect_nat()
            exps[i] += power
            return coeff
        found = text or "end of input"
        raise ParseError(f"expected a term, found {found!r}", pos, _TERM_START)


def parse_polynomial(text: str, ambient: Ambient) -> Polynomial:
    """
    Parse polynomial text into the given ambient.

    Example:
    >>> parse_polynomial("z1^3+z2^3+z3^3+3*q*z1*z2*z3", Ambient())
    Polynomial(z1^3+3*q*z1*z2*z3+z2^3+z3^3)
    """
    return _Parser(text, ambient).parse()


def format_monomial(m: Monomial, variables) -> str:
    parts = []
    for name, e in zip(variables, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) or "1"


def _signed_pieces(c) -> List[Tuple[bool, str]]:
    """(negative, magnitude text) pieces of a coefficient; text is '' for a unit."""
    if isinstance(c, RatFun):
        if c.denominator_is_q_power():
            shift = len(c.denominator) - 1
            pieces = []
            for k in range(len(c.numerator) - 1, -1, -1):
                a = c.numerator[k]
                if not a:
                    continue
                e = k - shift
                q_part = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
                mag = abs(a)
                if not q_part:
                    text = "" if mag == 1 else str(mag)
                elif mag == 1:
                    text = q_part
                else:
                    text = f"{mag}*{q_part}"
                pieces.append((a < 0, text))
            return pieces
        return [(False, f"({dup_format(c.numerator)})/({dup_format(c.denominator)})")]
    c = Fraction(c)
    return [(c < 0, "" if abs(c) == 1 else str(abs(c)))]


def format_coefficient(c) -> str:
    """A field element written in the polynomial grammar where possible."""
    pieces = _signed_pieces(c)
    if not pieces:
        return "0"
    out = ""
    for i, (negative, text) in enumerate(pieces):
        text = text or "1"
        if i == 0:
            out = ("-" if negative else "") + text
        else:
            out += ("-" if negative else "+") + text
    return out


def format_polynomial(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    variables = p.ambient.variables
    out = []
    for mono, c in p.terms():
        mono_text = format_monomial(mono, variables)
        is_one = mono_text == "1"
        for negative, text in _signed_pieces(c):
            if not text:
                body = mono_text
            elif is_one:
                body = text
            else:
                body = f"{text}*{mono_text}"
            out.append(("-" if negative else "+") + body)
    text = "".join(out)
    return text[1:] if text.startswith("+") else text
