from fractions import Fraction
from typing import Any, Iterable, List

from hochschild.algebra.coeff import RatFun
from hochschild.algebra.koszul import DimensionProfile, GeneratorLabel
from hochschild.algebra.parser import format_coefficient, format_monomial
from hochschild.algebra.poly import Ambient, Monomial, Polynomial
from hochschild.algebra.quotient import INFINITE


def to_jsonable(value: Any) -> Any:
    """
    Function to turn algebra objects into plain JSON values

    Args:
    - value: Polynomial, field element, DimensionProfile, container of those, ...

    Returns:
    - str, int, bool, None, list or dict

    Example:
    >>> to_jsonable([Fraction(1, 2), 3])
    ["1/2", 3]
    """
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if value == INFINITE:
        return "infinite"
    if isinstance(value, Polynomial):
        return str(value)
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else str(value)
    if isinstance(value, RatFun):
        return format_coefficient(value)
    if isinstance(value, DimensionProfile):
        return value.to_dict()
    if isinstance(value, GeneratorLabel):
        return value.text()
    if isinstance(value, dict):
        return {str(to_jsonable(k)): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [to_jsonable(v) for v in value]
        return sorted(items) if isinstance(value, (set, frozenset)) else items
    return str(value)


def split_polynomials(text: str) -> List[str]:
    """Comma-separated polynomial texts; the grammar has no commas of its own."""
    return [part.strip() for part in text.split(",") if part.strip()]


def monomial_texts(monomials: Iterable[Monomial], ambient: Ambient) -> List[str]:
    return [format_monomial(m, ambient.variables) for m in monomials]
