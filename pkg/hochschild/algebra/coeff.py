"""
Exact coefficient fields.

Three fields are supported, described by a `CoefficientField`:

- ``Q``: the rationals, elements are `fractions.Fraction`
- ``Qq``: the rational-function field Q(q), elements are `RatFun`
- ``Qq@r``: Q(q) with q specialized to the rational r, elements are `Fraction`

Univariate polynomials in q are dense tuples of Fractions in ascending
powers (``(c0, c1, c2)`` is c0 + c1*q + c2*q^2), with no trailing zeros.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

from hochschild.exceptions import (
    ConfigurationError,
    DivisionByZero,
    FieldMismatch,
    SpecializationPole,
)

Dup = Tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)
_ONE_DUP: Dup = (ONE,)


# Dense univariate arithmetic over Q


def dup_strip(f) -> Dup:
    f = tuple(f)
    end = len(f)
    while end and not f[end - 1]:
        end -= 1
    return f[:end]


def dup_add(f: Dup, g: Dup) -> Dup:
    if len(f) < len(g):
        f, g = g, f
    return dup_strip(tuple(a + b for a, b in zip(f, g)) + f[len(g):])


def dup_neg(f: Dup) -> Dup:
    return tuple(-a for a in f)


def dup_sub(f: Dup, g: Dup) -> Dup:
    return dup_add(f, dup_neg(g))


def dup_mul(f: Dup, g: Dup) -> Dup:
    if not f or not g:
        return ()
    out = [ZERO] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if not a:
            continue
        for j, b in enumerate(g):
            if b:
                out[i + j] += a * b
    return dup_strip(out)


def dup_mul_ground(f: Dup, c: Fraction) -> Dup:
    if not c:
        return ()
    return tuple(a * c for a in f)


def dup_divmod(f: Dup, g: Dup) -> Tuple[Dup, Dup]:
    """Euclidean division of f by g over Q."""
    if not g:
        raise DivisionByZero("polynomial division by zero")
    rem = list(f)
    dg = len(g) - 1
    inv_lc = 1 / g[-1]
    quo = [ZERO] * max(len(f) - dg, 0)
    for k in range(len(f) - 1 - dg, -1, -1):
        c = rem[k + dg] * inv_lc
        if not c:
            continue
        quo[k] = c
        for j, b in enumerate(g):
            rem[k + j] -= c * b
    return dup_strip(quo), dup_strip(rem[:dg])


def dup_monic(f: Dup) -> Dup:
    if not f or f[-1] == 1:
        return f
    return dup_mul_ground(f, 1 / f[-1])


def _low_order(f: Dup) -> int:
    """Number of vanishing low-order coefficients, i.e. the power of q dividing f."""
    k = 0
    while not f[k]:
        k += 1
    return k


def dup_gcd(f: Dup, g: Dup) -> Dup:
    """Monic greatest common divisor; gcd(0, 0) is 0."""
    if not f:
        return dup_monic(g)
    if not g:
        return dup_monic(f)
    # a pure power of q on either side only shares a power of q
    if not any(f[:-1]) or not any(g[:-1]):
        k = min(_low_order(f), _low_order(g))
        return (ZERO,) * k + _ONE_DUP
    while g:
        f, g = g, dup_divmod(f, g)[1]
    return dup_monic(f)


def dup_eval(f: Dup, x: Fraction) -> Fraction:
    value = ZERO
    for c in reversed(f):
        value = value * x + c
    return value


def dup_format(f: Dup, symbol: str = "q") -> str:
    if not f:
        return "0"
    parts = []
    for k in range(len(f) - 1, -1, -1):
        c = f[k]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if k == 0:
            body = str(c)
        else:
            power = symbol if k == 1 else f"{symbol}^{k}"
            body = power if c == 1 else f"{c}*{power}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        text += sign + body
    return text


class RatFun:
    """
    An element of Q(q) in canonical form.

    The numerator and denominator are coprime, the denominator is monic, and
    zero is stored as 0/1. Every constructor and operator returns a canonical
    value, so equality is structural.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, num=(), den=_ONE_DUP):
        num = dup_strip(Fraction(c) for c in num)
        den = dup_strip(Fraction(c) for c in den)
        if not den:
            raise DivisionByZero("rational function with zero denominator")
        self._num, self._den = _canonical(num, den)

    @classmethod
    def _raw(cls, num: Dup, den: Dup) -> "RatFun":
        obj = cls.__new__(cls)
        obj._num = num
        obj._den = den
        return obj

    @classmethod
    def constant(cls, c) -> "RatFun":
        c = Fraction(c)
        return cls._raw((c,) if c else (), _ONE_DUP)

    @classmethod
    def q(cls, power: int = 1) -> "RatFun":
        if power >= 0:
            return cls._raw((ZERO,) * power + _ONE_DUP, _ONE_DUP)
        return cls._raw(_ONE_DUP, (ZERO,) * (-power) + _ONE_DUP)

    @property
    def numerator(self) -> Dup:
        return self._num

    @property
    def denominator(self) -> Dup:
        return self._den

    def is_zero(self) -> bool:
        return not self._num

    def is_polynomial(self) -> bool:
        return self._den == _ONE_DUP

    def is_constant(self) -> bool:
        return self._den == _ONE_DUP and len(self._num) <= 1

    def denominator_is_q_power(self) -> bool:
        return not any(self._den[:-1])

    def complexity(self) -> Tuple[int, int]:
        size = sum(c.numerator.bit_length() + c.denominator.bit_length() for c in self._num + self._den)
        return (len(self._num) + len(self._den), size)

    def _coerce(self, other) -> Optional["RatFun"]:
        if isinstance(other, RatFun):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFun.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other._num:
            return self
        if not self._num:
            return other
        if self._den == other._den:
            return RatFun._from_parts(dup_add(self._num, other._num), self._den)
        num = dup_add(dup_mul(self._num, other._den), dup_mul(other._num, self._den))
        return RatFun._from_parts(num, dup_mul(self._den, other._den))

    __radd__ = __add__

    def __neg__(self):
        return RatFun._raw(dup_neg(self._num), self._den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self._num or not other._num:
            return RatFun._raw((), _ONE_DUP)
        if self._den == _ONE_DUP and other._den == _ONE_DUP:
            return RatFun._raw(dup_mul(self._num, other._num), _ONE_DUP)
        # cross-cancel before multiplying keeps the factors small
        g1 = dup_gcd(self._num, other._den)
        g2 = dup_gcd(other._num, self._den)
        n1, d2 = _exquo(self._num, g1), _exquo(other._den, g1)
        n2, d1 = _exquo(other._num, g2), _exquo(self._den, g2)
        num, den = dup_mul(n1, n2), dup_mul(d1, d2)
        lc = den[-1]
        if lc != 1:
            num, den = dup_mul_ground(num, 1 / lc), dup_mul_ground(den, 1 / lc)
        return RatFun._raw(num, den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFun":
        if not self._num:
            raise DivisionByZero("division by the zero rational function")
        lc = self._num[-1]
        return RatFun._raw(dup_mul_ground(self._den, 1 / lc), dup_mul_ground(self._num, 1 / lc))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = RatFun.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __bool__(self):
        return bool(self._num)

    def __eq__(self, other):
        if isinstance(other, RatFun):
            return self._num == other._num and self._den == other._den
        if isinstance(other, (int, Fraction)):
            if self._den != _ONE_DUP or len(self._num) > 1:
                return False
            return (self._num[0] if self._num else ZERO) == other
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self._num[0] if self._num else ZERO)
        return hash((self._num, self._den))

    def __repr__(self):
        return f"RatFun({self})"

    def __str__(self):
        num = dup_format(self._num)
        if self._den == _ONE_DUP:
            return num
        den = dup_format(self._den)
        if len([c for c in self._num if c]) > 1:
            num = f"({num})"
        if len([c for c in self._den if c]) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    @classmethod
    def _from_parts(cls, num: Dup, den: Dup) -> "RatFun":
        if not num:
            return cls._raw((), _ONE_DUP)
        num, den = _canonical(num, den)
        return cls._raw(num, den)


def _exquo(f: Dup, g: Dup) -> Dup:
    if g == _ONE_DUP:
        return f
    return dup_divmod(f, g)[0]


def _canonical(num: Dup, den: Dup) -> Tuple[Dup, Dup]:
    if not num:
        return (), _ONE_DUP
    if len(den) > 1:
        g = dup_gcd(num, den)
        if len(g) > 1:
            num, den = _exquo(num, g), _exquo(den, g)
    lc = den[-1]
    if lc != 1:
        num, den = dup_mul_ground(num, 1 / lc), dup_mul_ground(den, 1 / lc)
    return num, den


FieldElement = Union[Fraction, RatFun]


def normalize(x):
    """Canonical form of an element; idempotent."""
    if isinstance(x, RatFun):
        return RatFun(x.numerator, x.denominator)
    return Fraction(x)


def specialize(x, q0) -> Fraction:
    """Evaluate a generic-q element at the rational point q0."""
    q0 = Fraction(q0)
    if not isinstance(x, RatFun):
        return Fraction(x)
    den = dup_eval(x.denominator, q0)
    if not den:
        raise SpecializationPole(f"{x} has a pole at q = {q0}")
    return dup_eval(x.numerator, q0) / den


def field_arith(a, b, op: str):
    """
    Combine two elements of the same field.

    Args:
    - a, b: Fractions (or ints) of Q, or RatFuns of Q(q)
    - op: one of "add", "sub", "mul", "div"

    Returns:
    - the canonical result

    Example:
    >>> field_arith(Fraction(1, 2), Fraction(1, 3), "add")
    Fraction(5, 6)
    """
    if isinstance(a, int):
        a = Fraction(a)
    if isinstance(b, int):
        b = Fraction(b)
    if isinstance(a, RatFun) != isinstance(b, RatFun):
        raise FieldMismatch(f"cannot combine {type(a).__name__} with {type(b).__name__}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if not b:
            raise DivisionByZero("field division by zero")
        return a / b
    raise ValueError(f"unknown field operation {op!r}")


def complexity(x) -> Tuple[int, int]:
    """Size measure used to pick elimination pivots."""
    if isinstance(x, RatFun):
        return x.complexity()
    return (0, x.numerator.bit_length() + x.denominator.bit_length())


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigurationError(f"not a rational number: {text!r}") from exc


@dataclass(frozen=True)
class CoefficientField:
    """
    Descriptor shared by every element of one computation.

    `kind` is "Q", "Qq" or "Qq-specialized"; `value` is the rational that q
    is specialized to, present only for the last kind.
    """

    kind: str = "Qq"
    value: Optional[Fraction] = None

    def __post_init__(self):
        if self.kind not in ("Q", "Qq", "Qq-specialized"):
            raise ConfigurationError(f"unknown coefficient field {self.kind!r}")
        if (self.kind == "Qq-specialized") != (self.value is not None):
            raise ConfigurationError("a specialization value goes with Qq-specialized only")

    @classmethod
    def parse(cls, spec: str) -> "CoefficientField":
        """
        Read a field from its command-line form.

        Example:
        >>> CoefficientField.parse("Qq@-1")
        CoefficientField(kind='Qq-specialized', value=Fraction(-1, 1))
        """
        spec = spec.strip()
        if spec == "Q":
            return cls("Q")
        if spec == "Qq":
            return cls("Qq")
        if spec.startswith("Qq@"):
            return cls("Qq-specialized", parse_rational(spec[3:]))
        raise ConfigurationError(f"unknown coefficient field {spec!r}, expected Q, Qq or Qq@<rational>")

    @property
    def is_generic(self) -> bool:
        return self.kind == "Qq"

    @property
    def has_parameter(self) -> bool:
        return self.kind != "Q"

    @property
    def zero(self):
        return RatFun.constant(0) if self.is_generic else ZERO

    @property
    def one(self):
        return RatFun.constant(1) if self.is_generic else ONE

    def q(self, power: int = 1):
        """The element standing for q^power."""
        if self.kind == "Q":
            raise FieldMismatch("the field Q has no parameter q")
        if self.is_generic:
            return RatFun.q(power)
        if not self.value and power < 0:
            raise SpecializationPole(f"q^{power} has a pole at q = 0")
        return self.value**power

    def convert(self, x):
        """Bring an int, Fraction or RatFun into this field."""
        if isinstance(x, RatFun):
            if self.is_generic:
                return x
            if self.kind == "Qq-specialized":
                return specialize(x, self.value)
            if x.is_constant():
                return x.numerator[0] if x.numerator else ZERO
            raise FieldMismatch(f"{x} is not an element of Q")
        if isinstance(x, (int, Fraction)):
            return RatFun.constant(x) if self.is_generic else Fraction(x)
        raise FieldMismatch(f"cannot convert {type(x).__name__} into {self}")

    def check(self, x) -> None:
        if isinstance(x, RatFun) != self.is_generic:
            raise FieldMismatch(f"{x!r} does not belong to {self}")

    def specialized(self, q0) -> "CoefficientField":
        return CoefficientField("Qq-specialized", Fraction(q0))

    def __str__(self):
        if self.kind == "Qq-specialized":
            return f"Qq@{self.value}"
        return self.kind


QQ = CoefficientField("Q")
QQ_Q = CoefficientField("Qq")
