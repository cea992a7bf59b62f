"""Sparse multivariate polynomials over an exact coefficient field."""

from dataclasses import dataclass, field as dataclass_field, replace
from fractions import Fraction
from functools import cached_property, partial
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from hochschild.algebra.coeff import QQ_Q, CoefficientField, RatFun
from hochschild.exceptions import AmbientMismatch, ConfigurationError, UnknownVariable, ZeroPolynomial

Monomial = Tuple[int, ...]

ORDER_KINDS = ("lex", "grlex", "grevlex")


class _MinusInfinity:
    """Degree of the zero polynomial. Compares below every integer and supports no arithmetic."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("-inf")

    def __repr__(self):
        return "-inf"

    def __reduce__(self):
        return (_MinusInfinity, ())


NEG_INF = _MinusInfinity()


# Monomial helpers


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True when a divides b."""
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return not any(x and y for x, y in zip(a, b))


def mono_degree(a: Monomial) -> int:
    return sum(a)


def monomials_of_degree(nvars: int, degree: int) -> Iterable[Monomial]:
    """Every exponent vector of the given total degree, first exponent largest first."""
    if nvars == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - first):
            yield (first,) + rest


# Monomial orders


def _key_identity_lex(m):
    return m


def _key_lex(priority, m):
    return tuple(m[i] for i in priority)


def _key_grlex(priority, m):
    return (sum(m), tuple(m[i] for i in priority))


def _key_grevlex(reversed_priority, m):
    return (sum(m), tuple(-m[i] for i in reversed_priority))


@dataclass(frozen=True)
class MonomialOrder:
    """
    A monomial order: lex, grlex or grevlex over a priority permutation.

    `priority` lists variable indices from most to least significant; an
    empty tuple means the natural order z1 > z2 > ... and is filled in by the
    `Ambient` the order is attached to.
    """

    kind: str = "lex"
    priority: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise ConfigurationError(f"unknown monomial order {self.kind!r}")
        if self.priority and sorted(self.priority) != list(range(len(self.priority))):
            raise ConfigurationError(f"order priority {self.priority} is not a permutation")

    @classmethod
    def parse(cls, spec: str, variables: Sequence[str]) -> "MonomialOrder":
        """
        Read ``lex``, ``grevlex:z3,z1,z2`` or ``grlex:3,1,2`` (1-based indices).
        """
        kind, _, rest = spec.strip().partition(":")
        if not rest:
            return cls(kind).complete(len(variables))
        priority = []
        for item in rest.split(","):
            item = item.strip()
            if item in variables:
                priority.append(list(variables).index(item))
            elif item.isdigit() and 1 <= int(item) <= len(variables):
                priority.append(int(item) - 1)
            else:
                raise ConfigurationError(f"unknown variable {item!r} in order priority")
        if len(priority) != len(variables):
            raise ConfigurationError("order priority must list every variable once")
        return cls(kind, tuple(priority))

    def complete(self, nvars: int) -> "MonomialOrder":
        if self.priority:
            if len(self.priority) != nvars:
                raise ConfigurationError("order priority does not match the variable count")
            return self
        return replace(self, priority=tuple(range(nvars)))

    def sort_key(self):
        """Key function under which larger monomials compare greater."""
        if self.kind == "lex":
            if self.priority == tuple(range(len(self.priority))):
                return _key_identity_lex
            return partial(_key_lex, self.priority)
        if self.kind == "grlex":
            return partial(_key_grlex, self.priority)
        return partial(_key_grevlex, tuple(reversed(self.priority)))

    def eliminates(self, discarded: Iterable[int]) -> bool:
        """True when this is a lex order whose most significant variables are exactly `discarded`."""
        discarded = set(discarded)
        if not discarded:
            return True
        return self.kind == "lex" and set(self.priority[: len(discarded)]) == discarded

    def __str__(self):
        return f"{self.kind}:{','.join(str(i + 1) for i in self.priority)}" if self.priority else self.kind


@dataclass(frozen=True)
class Ambient:
    """Variable names, coefficient field and monomial order shared by polynomials."""

    variables: Tuple[str, ...] = ("z1", "z2", "z3")
    field: CoefficientField = dataclass_field(default=QQ_Q)
    order: MonomialOrder = dataclass_field(default_factory=MonomialOrder)

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(set(self.variables)) != len(self.variables):
            raise ConfigurationError(f"repeated variable names in {self.variables}")
        for name in self.variables:
            if name == "q":
                raise ConfigurationError("q is reserved for the coefficient parameter")
            if not name or not (name[0].isalpha() or name[0] == "_") or not name.replace("_", "a").isalnum():
                raise ConfigurationError(f"invalid variable name {name!r}")
        object.__setattr__(self, "order", self.order.complete(len(self.variables)))

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @cached_property
    def sort_key(self):
        return self.order.sort_key()

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise UnknownVariable(f"unknown variable {name!r}; ambient has {', '.join(self.variables)}") from None

    def with_order(self, order: MonomialOrder) -> "Ambient":
        return Ambient(self.variables, self.field, order)

    def with_field(self, field: CoefficientField) -> "Ambient":
        return Ambient(self.variables, field, self.order)

    @property
    def one_monomial(self) -> Monomial:
        return (0,) * self.nvars

    def zero(self) -> "Polynomial":
        return Polynomial._make(self, {})

    def const(self, c) -> "Polynomial":
        c = self.field.convert(c)
        return Polynomial._make(self, {self.one_monomial: c} if c else {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def var(self, which) -> "Polynomial":
        i = which if isinstance(which, int) else self.index(which)
        exps = [0] * self.nvars
        exps[i] = 1
        return Polynomial._make(self, {tuple(exps): self.field.one})

    def monomial(self, exps: Monomial, coeff=1) -> "Polynomial":
        coeff = self.field.convert(coeff)
        return Polynomial._make(self, {tuple(exps): coeff} if coeff else {})

    def parse(self, text: str) -> "Polynomial":
        from hochschild.algebra.parser import parse_polynomial

        return parse_polynomial(text, self)

    def __str__(self):
        return f"{self.field}[{','.join(self.variables)}] ({self.order})"


class Polynomial:
    """
    An immutable sparse polynomial: a map from exponent tuples to nonzero
    coefficients of the ambient field.
    """

    __slots__ = ("ambient", "_terms", "_sorted", "_hash")

    def __init__(self, ambient: Ambient, terms: Optional[Dict[Monomial, object]] = None):
        convert = ambient.field.convert
        clean = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            if len(m) != ambient.nvars or any(e < 0 for e in m):
                raise ValueError(f"bad exponent vector {m} for {ambient.nvars} variables")
            c = convert(c)
            if c:
                clean[m] = c
        self.ambient = ambient
        self._terms = clean
        self._sorted = None
        self._hash = None

    @classmethod
    def _make(cls, ambient: Ambient, terms: Dict[Monomial, object]) -> "Polynomial":
        # terms must already be clean: converted, no zeros
        obj = cls.__new__(cls)
        obj.ambient = ambient
        obj._terms = terms
        obj._sorted = None
        obj._hash = None
        return obj

    # inspection

    @property
    def field(self) -> CoefficientField:
        return self.ambient.field

    def terms(self) -> List[Tuple[Monomial, object]]:
        """Terms in descending ambient order."""
        if self._sorted is None:
            key = self.ambient.sort_key
            self._sorted = sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True)
        return self._sorted

    def as_dict(self) -> Dict[Monomial, object]:
        return dict(self._terms)

    def monomials(self) -> List[Monomial]:
        return [m for m, _ in self.terms()]

    def coefficient(self, m: Monomial):
        return self._terms.get(tuple(m), self.field.zero)

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {self.ambient.one_monomial}

    def leading_term(self, order: Optional[MonomialOrder] = None) -> Tuple[Monomial, object]:
        if not self._terms:
            raise ZeroPolynomial("the zero polynomial has no leading term")
        if order is None:
            key = self.ambient.sort_key
        else:
            key = order.complete(self.ambient.nvars).sort_key()
        m = max(self._terms, key=key)
        return m, self._terms[m]

    def leading_monomial(self) -> Monomial:
        return self.leading_term()[0]

    def leading_coefficient(self):
        return self.leading_term()[1]

    def degree_info(self):
        """(total degree, homogeneous flag); the zero polynomial gives (NEG_INF, True)."""
        if not self._terms:
            return NEG_INF, True
        degrees = {sum(m) for m in self._terms}
        return max(degrees), len(degrees) == 1

    @property
    def total_degree(self):
        return self.degree_info()[0]

    def is_homogeneous(self) -> bool:
        return self.degree_info()[1]

    # arithmetic

    def _check(self, other: "Polynomial") -> None:
        if other.ambient != self.ambient:
            raise AmbientMismatch(f"cannot combine polynomials of {self.ambient} and {other.ambient}")

    def _lift(self, other) -> Optional["Polynomial"]:
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, RatFun)):
            return self.ambient.const(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if len(other._terms) > len(self._terms):
            return other.__add__(self)
        terms = dict(self._terms)
        for m, c in other._terms.items():
            s = terms.get(m)
            if s is None:
                terms[m] = c
            else:
                s = s + c
                if s:
                    terms[m] = s
                else:
                    del terms[m]
        return Polynomial._make(self.ambient, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._make(self.ambient, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, RatFun)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        terms: Dict[Monomial, object] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                s = terms.get(m)
                terms[m] = c1 * c2 if s is None else s + c1 * c2
        return Polynomial._make(self.ambient, {m: c for m, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = self.ambient.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        c = self.field.convert(c)
        if not c:
            return self.ambient.zero()
        return Polynomial._make(self.ambient, {m: a * c for m, a in self._terms.items()})

    def mul_term(self, mono: Monomial, c) -> "Polynomial":
        """Multiply by the single term c * z^mono."""
        if not c:
            return self.ambient.zero()
        return Polynomial._make(self.ambient, {mono_mul(m, mono): a * c for m, a in self._terms.items()})

    def monic(self) -> "Polynomial":
        if not self._terms:
            return self
        lc = self.leading_coefficient()
        return self if lc == 1 else self.scale(1 / lc)

    # calculus

    def partial_derivative(self, i) -> "Polynomial":
        if not isinstance(i, int):
            i = self.ambient.index(i)
        terms = {}
        for m, c in self._terms.items():
            e = m[i]
            if e:
                terms[m[:i] + (e - 1,) + m[i + 1:]] = c * e
        return Polynomial._make(self.ambient, terms)

    def gradient(self) -> List["Polynomial"]:
        return [self.partial_derivative(i) for i in range(self.ambient.nvars)]

    # moving between ambients

    def transfer(self, ambient: Ambient, positions: Optional[Sequence[int]] = None) -> "Polynomial":
        """
        Re-embed into another ambient.

        `positions[i]` is the index in `ambient` of this polynomial's i-th
        variable; by default variables keep their positions. Coefficients are
        converted into the target field.
        """
        if positions is None:
            if ambient.nvars != self.ambient.nvars:
                raise AmbientMismatch("variable counts differ; give explicit positions")
            return Polynomial(ambient, self._terms)
        terms = {}
        for m, c in self._terms.items():
            exps = [0] * ambient.nvars
            for i, e in enumerate(m):
                if e:
                    exps[positions[i]] = e
            terms[tuple(exps)] = c
        return Polynomial(ambient, terms)

    def specialize(self, q0) -> "Polynomial":
        """Evaluate every coefficient at q = q0."""
        return self.transfer(self.ambient.with_field(self.field.specialized(q0)))

    def uses_variable(self, i: int) -> bool:
        return any(m[i] for m in self._terms)

    # comparison and display

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ambient == other.ambient and self._terms == other._terms
        if isinstance(other, (int, Fraction, RatFun)):
            return self == self.ambient.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ambient, frozenset(self._terms.items())))
        return self._hash

    def __str__(self):
        from hochschild.algebra.parser import format_polynomial

        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({self})"

    def __getstate__(self):
        return (self.ambient, self._terms)

    def __setstate__(self, state):
        self.ambient, self._terms = state
        self._sorted = None
        self._hash = None
