"""
Multivariate division, Buchberger's algorithm and the ideal operations built
on it: normal forms, membership, elimination, intersection, colon ideals and
regular sequences.
"""

import heapq
import logging
from dataclasses import dataclass, field as dataclass_field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from hochschild.algebra.coeff import RatFun, specialize
from hochschild.algebra.poly import (
    Ambient,
    Monomial,
    MonomialOrder,
    Polynomial,
    mono_coprime,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)
from hochschild.exceptions import (
    AmbientMismatch,
    InternalDivisionFailure,
    OrderNotEliminating,
    SpecializationPole,
    ZeroPolynomial,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DivisionResult:
    quotients: Tuple[Polynomial, ...]
    remainder: Polynomial


@dataclass(frozen=True)
class GroebnerBasis:
    """
    A Groebner basis together with the ambient (and so the order) it was
    computed in.

    `pivots` holds the Q(q) values a generic-q run divided by or relied on
    being nonzero; see `specializes_at`.
    """

    generators: Tuple[Polynomial, ...]
    ambient: Ambient
    reduced: bool = True
    pivots: Tuple[RatFun, ...] = dataclass_field(default=(), compare=False, repr=False)

    @property
    def order(self) -> MonomialOrder:
        return self.ambient.order

    @property
    def leading_monomials(self) -> List[Monomial]:
        return [g.leading_monomial() for g in self.generators]

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def is_zero_ideal(self) -> bool:
        return not self.generators

    def is_unit_ideal(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_constant()

    def specializes_at(self, q0) -> bool:
        """
        True when running Buchberger at q = q0 retraces this generic-q run
        step for step, so the specialized generators are the reduced basis of
        the specialized ideal.
        """
        if not self.ambient.field.is_generic:
            return True
        for value in self.pivots:
            try:
                if not specialize(value, q0):
                    return False
            except SpecializationPole:
                return False
        return True

    def specialize(self, q0) -> "GroebnerBasis":
        ambient = self.ambient.with_field(self.ambient.field.specialized(q0))
        return GroebnerBasis(tuple(g.transfer(ambient) for g in self.generators), ambient, self.reduced)


class _Entry:
    """A monic basis element prepared for repeated reduction."""

    __slots__ = ("lm", "terms", "poly")

    def __init__(self, poly: Polynomial):
        self.poly = poly
        self.lm = poly.leading_monomial()
        self.terms = poly.terms()


def _leading(terms: Dict[Monomial, object], key) -> Monomial:
    return max(terms, key=key)


def _subtract_multiple(target: Dict[Monomial, object], entry: _Entry, shift: Monomial, factor) -> None:
    for m, c in entry.terms:
        m = mono_mul(m, shift)
        value = target.get(m)
        value = -(factor * c) if value is None else value - factor * c
        if value:
            target[m] = value
        else:
            target.pop(m, None)


def _reduce(terms: Dict[Monomial, object], entries: Sequence[_Entry], key) -> Dict[Monomial, object]:
    """Full reduction of a term map by monic entries; returns the remainder."""
    work = dict(terms)
    remainder = {}
    while work:
        m = _leading(work, key)
        c = work[m]
        for entry in entries:
            if mono_divides(entry.lm, m):
                _subtract_multiple(work, entry, mono_div(m, entry.lm), c)
                break
        else:
            remainder[m] = c
            del work[m]
    return remainder


def divide(dividend: Polynomial, divisors: Sequence[Polynomial], order: Optional[MonomialOrder] = None) -> DivisionResult:
    """
    Multivariate division with remainder.

    dividend = sum(quotients[i] * divisors[i]) + remainder, and no term of the
    remainder is divisible by a leading monomial of a divisor. Divisors are
    tried in the given order.
    """
    ambient = dividend.ambient
    if order is not None and order.complete(ambient.nvars) != ambient.order:
        ambient = ambient.with_order(order)
        dividend = dividend.transfer(ambient)
        divisors = [g.transfer(ambient) for g in divisors]
    for g in divisors:
        if g.ambient != ambient:
            raise AmbientMismatch("divisors live in a different ambient than the dividend")
        if g.is_zero():
            raise ZeroPolynomial("division by the zero polynomial")
    key = ambient.sort_key
    leads = [g.leading_term() for g in divisors]
    quotients: List[Dict[Monomial, object]] = [{} for _ in divisors]
    work = dividend.as_dict()
    remainder = {}
    while work:
        m = _leading(work, key)
        c = work[m]
        for i, (lm, lc) in enumerate(leads):
            if mono_divides(lm, m):
                shift = mono_div(m, lm)
                factor = c / lc
                quotients[i][shift] = quotients[i].get(shift, ambient.field.zero) + factor
                for gm, gc in divisors[i].terms():
                    gm = mono_mul(gm, shift)
                    value = work.get(gm, ambient.field.zero) - factor * gc
                    if value:
                        work[gm] = value
                    else:
                        work.pop(gm, None)
                break
        else:
            remainder[m] = c
            del work[m]
    return DivisionResult(
        tuple(Polynomial._make(ambient, {m: c for m, c in q.items() if c}) for q in quotients),
        Polynomial._make(ambient, remainder),
    )


def _record(pivots: List[RatFun], value) -> None:
    if isinstance(value, RatFun) and not value.is_constant():
        pivots.append(value)


def buchberger(gens: Iterable[Polynomial], order: Optional[MonomialOrder] = None) -> GroebnerBasis:
    """
    Reduced Groebner basis of the ideal generated by `gens`.

    Pairs are treated by the normal strategy (smallest lcm degree first, ties
    by the lcm in the ambient order, then by index). Pairs with coprime
    leading monomials and pairs covered by Buchberger's chain criterion are
    skipped. The result is monic, inter-reduced and sorted by leading
    monomial, descending. An all-zero input gives the zero ideal.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("buchberger needs at least one generator")
    ambient = gens[0].ambient
    for g in gens:
        if g.ambient != ambient:
            raise AmbientMismatch("generators live in different ambients")
    if order is not None and order.complete(ambient.nvars) != ambient.order:
        ambient = ambient.with_order(order)
        gens = [g.transfer(ambient) for g in gens]
    key = ambient.sort_key
    pivots: List[RatFun] = []

    entries: List[_Entry] = []
    for g in gens:
        if g.is_zero():
            continue
        for c in g.as_dict().values():
            if isinstance(c, RatFun) and not c.is_polynomial():
                pivots.append(RatFun(c.denominator))
        lc = g.leading_coefficient()
        _record(pivots, lc)
        if g.is_constant():
            return _unit(ambient, pivots)
        entries.append(_Entry(g.monic()))
    if not entries:
        return GroebnerBasis((), ambient, True, tuple(pivots))

    queue: List[Tuple] = []
    pending = set()

    def push(i: int, j: int) -> None:
        lcm = mono_lcm(entries[i].lm, entries[j].lm)
        heapq.heappush(queue, (sum(lcm), key(lcm), i, j, lcm))
        pending.add((i, j))

    for j in range(len(entries)):
        for i in range(j):
            push(i, j)

    treated = skipped = 0
    while queue:
        _, _, i, j, lcm = heapq.heappop(queue)
        pending.discard((i, j))
        gi, gj = entries[i], entries[j]
        if mono_coprime(gi.lm, gj.lm) or _chain_criterion(i, j, lcm, entries, pending):
            skipped += 1
            continue
        treated += 1
        spoly: Dict[Monomial, object] = {}
        _subtract_multiple(spoly, gi, mono_div(lcm, gi.lm), -ambient.field.one)
        _subtract_multiple(spoly, gj, mono_div(lcm, gj.lm), ambient.field.one)
        remainder = _reduce(spoly, entries, key)
        if not remainder:
            continue
        poly = Polynomial._make(ambient, remainder)
        _record(pivots, poly.leading_coefficient())
        if poly.is_constant():
            logger.debug("unit ideal detected after %d pairs", treated)
            return _unit(ambient, pivots)
        entries.append(_Entry(poly.monic()))
        new = len(entries) - 1
        for k in range(new):
            push(k, new)

    logger.debug("buchberger: %d pairs reduced, %d skipped, %d elements before reduction", treated, skipped, len(entries))
    return GroebnerBasis(_interreduce(entries, key), ambient, True, tuple(pivots))


def _chain_criterion(i: int, j: int, lcm: Monomial, entries: List[_Entry], pending) -> bool:
    for k, entry in enumerate(entries):
        if k in (i, j) or not mono_divides(entry.lm, lcm):
            continue
        if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
            return True
    return False


def _unit(ambient: Ambient, pivots) -> GroebnerBasis:
    return GroebnerBasis((ambient.one(),), ambient, True, tuple(pivots))


def _interreduce(entries: List[_Entry], key) -> Tuple[Polynomial, ...]:
    minimal = []
    for idx, entry in enumerate(entries):
        covered = False
        for jdx, other in enumerate(entries):
            if jdx == idx or not mono_divides(other.lm, entry.lm):
                continue
            # equal leading monomials: keep the first
            if other.lm != entry.lm or jdx < idx:
                covered = True
                break
        if not covered:
            minimal.append(entry)
    reduced = []
    for entry in minimal:
        others = [e for e in minimal if e is not entry]
        remainder = _reduce(entry.poly.as_dict(), others, key)
        reduced.append(Polynomial._make(entry.poly.ambient, remainder).monic())
    reduced.sort(key=lambda g: key(g.leading_monomial()), reverse=True)
    return tuple(reduced)


def _check_ambient(p: Polynomial, G: GroebnerBasis) -> None:
    if p.ambient != G.ambient:
        raise AmbientMismatch(f"polynomial of {p.ambient} reduced against a basis of {G.ambient}")


def normal_form(p: Polynomial, G: GroebnerBasis) -> Polynomial:
    """The unique remainder of p modulo the ideal of the reduced basis G."""
    _check_ambient(p, G)
    entries = [_Entry(g) for g in G.generators]
    return Polynomial._make(p.ambient, _reduce(p.as_dict(), entries, G.ambient.sort_key))


def ideal_member(p: Polynomial, G: GroebnerBasis) -> bool:
    return normal_form(p, G).is_zero()


def _indices(ambient: Ambient, variables: Iterable) -> List[int]:
    return sorted({v if isinstance(v, int) else ambient.index(v) for v in variables})


def _restricted_ambient(ambient: Ambient, keep: List[int]) -> Ambient:
    new_index = {old: new for new, old in enumerate(keep)}
    priority = tuple(new_index[i] for i in ambient.order.priority if i in new_index)
    return Ambient(
        tuple(ambient.variables[i] for i in keep),
        ambient.field,
        MonomialOrder(ambient.order.kind, priority),
    )


def eliminate(G: GroebnerBasis, keep: Iterable) -> GroebnerBasis:
    """
    Reduced basis of the ideal of G intersected with the subring in `keep`.

    G must have been computed under a lex order whose most significant
    variables are the discarded ones.
    """
    ambient = G.ambient
    keep = _indices(ambient, keep)
    discarded = [i for i in range(ambient.nvars) if i not in keep]
    if not discarded:
        return G
    if not ambient.order.eliminates(discarded):
        raise OrderNotEliminating(
            f"order {ambient.order} does not eliminate {', '.join(ambient.variables[i] for i in discarded)}"
        )
    target = _restricted_ambient(ambient, keep)
    kept = []
    for g in G.generators:
        if any(g.uses_variable(i) for i in discarded):
            continue
        terms = {tuple(m[i] for i in keep): c for m, c in g.as_dict().items()}
        kept.append(Polynomial._make(target, terms))
    return GroebnerBasis(tuple(kept), target, G.reduced, G.pivots)


def _auxiliary_name(ambient: Ambient) -> str:
    name = "_t"
    while name in ambient.variables:
        name = "_" + name
    return name


def intersect_ideals(first: Sequence[Polynomial], second: Sequence[Polynomial]) -> GroebnerBasis:
    """
    Reduced basis of the intersection of two ideals, from the elimination of
    an auxiliary variable t out of <t*first, (1-t)*second>.
    """
    ambient = (list(first) + list(second))[0].ambient
    aux = Ambient(
        (_auxiliary_name(ambient),) + ambient.variables,
        ambient.field,
        MonomialOrder("lex", (0,) + tuple(i + 1 for i in ambient.order.priority)),
    )
    positions = [i + 1 for i in range(ambient.nvars)]
    t = aux.var(0)
    one_minus_t = aux.one() - t
    lifted = [t * p.transfer(aux, positions) for p in first if p]
    lifted += [one_minus_t * p.transfer(aux, positions) for p in second if p]
    if not lifted:
        return GroebnerBasis((), ambient)
    eliminated = eliminate(buchberger(lifted), range(1, aux.nvars))
    back = [g.transfer(ambient) for g in eliminated.generators]
    if not back:
        return GroebnerBasis((), ambient, True, eliminated.pivots)
    result = buchberger(back)
    return GroebnerBasis(result.generators, ambient, True, eliminated.pivots + result.pivots)


def colon_ideal(J: Sequence[Polynomial], g: Polynomial) -> GroebnerBasis:
    """
    Reduced basis of J : <g> = {h : h*g in J}, via J intersected with <g>
    divided exactly by g.
    """
    if g.is_zero():
        raise ZeroPolynomial("colon by the zero polynomial")
    J = [p for p in J if p]
    if not J:
        # the polynomial ring is a domain
        return GroebnerBasis((), g.ambient)
    meet = intersect_ideals(J, [g])
    quotients = []
    for h in meet.generators:
        result = divide(h, [g])
        if not result.remainder.is_zero():
            raise InternalDivisionFailure(f"intersection generator {h} is not a multiple of {g}")
        quotients.append(result.quotients[0])
    if not quotients:
        return GroebnerBasis((), g.ambient, True, meet.pivots)
    result = buchberger(quotients)
    return GroebnerBasis(result.generators, result.ambient, True, meet.pivots + result.pivots)


@dataclass(frozen=True)
class RegularityResult:
    regular: bool
    failing_index: Optional[int] = None  # 1-based position of the first zero divisor

    def __bool__(self):
        return self.regular


def same_ideal(G: GroebnerBasis, H: GroebnerBasis) -> bool:
    """Equality of ideals given by reduced bases of one ambient."""
    return G.ambient == H.ambient and G.generators == H.generators


def is_regular_sequence(seq: Sequence[Polynomial]) -> RegularityResult:
    """
    Check that each element is a non-zero-divisor modulo the ideal of its
    predecessors, i.e. colon(<t1..t(j-1)>, tj) = <t1..t(j-1)> for every j.
    """
    seq = list(seq)
    if not seq:
        return RegularityResult(True)
    ambient = seq[0].ambient
    for j, theta in enumerate(seq, start=1):
        previous = [p for p in seq[: j - 1] if p]
        current = buchberger(previous) if previous else GroebnerBasis((), ambient)
        if theta.is_zero():
            colon = GroebnerBasis((ambient.one(),), ambient)
        else:
            colon = colon_ideal(previous, theta)
        if not same_ideal(current, colon):
            logger.debug("element %d of the sequence is a zero divisor", j)
            return RegularityResult(False, j)
    return RegularityResult(True)
