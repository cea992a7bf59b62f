"""
Quotient algebras k[z]/I presented by standard monomials.

By Macaulay's theorem the monomials divisible by no leading monomial of a
Groebner basis of I form a vector-space basis of k[z]/I. This module
enumerates them, builds multiplication matrices in that basis, and solves
for annihilators. `GradedQuotient` gives the same basis degree by degree for
homogeneous ideals, which is what the Koszul computations work in.
"""

import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, List, Optional, Sequence, Tuple, Union

from hochschild.algebra.groebner import GroebnerBasis, buchberger, normal_form
from hochschild.algebra.linalg import ExactMatrix, kernel_basis
from hochschild.algebra.poly import Monomial, Polynomial, mono_divides, monomials_of_degree
from hochschild.exceptions import InfiniteQuotient, InfiniteWithoutBound, NotHomogeneous

logger = logging.getLogger(__name__)


class _Infinite:
    """Dimension of an infinite-dimensional quotient."""

    def __repr__(self):
        return "infinite"

    __str__ = __repr__

    def __eq__(self, other):
        return isinstance(other, _Infinite)

    def __hash__(self):
        return hash("infinite")

    def __reduce__(self):
        return (_Infinite, ())


INFINITE = _Infinite()
PRODUCT_CACHE_SIZE = 65536


def is_finite(G: GroebnerBasis) -> bool:
    """Finite-dimensional quotient iff every variable has a pure power among the leading monomials."""
    if G.is_unit_ideal():
        return True
    nvars = G.ambient.nvars
    powers = set()
    for lm in G.leading_monomials:
        support = [i for i, e in enumerate(lm) if e]
        if len(support) == 1:
            powers.add(support[0])
    return len(powers) == nvars


def standard_monomials_of_degree(G: GroebnerBasis, degree: int) -> List[Monomial]:
    """Standard monomials of one degree, ascending in the ambient order."""
    if degree < 0:
        return []
    if G.is_unit_ideal():
        return []
    leads = G.leading_monomials
    layer = [
        m
        for m in monomials_of_degree(G.ambient.nvars, degree)
        if not any(mono_divides(lm, m) for lm in leads)
    ]
    layer.sort(key=G.ambient.sort_key)
    return layer


@dataclass(frozen=True)
class QuotientPresentation:
    """
    A Groebner basis with its standard monomials.

    When the quotient is infinite-dimensional `standard_monomials` holds only
    the monomials up to `bound` and `dimension` is INFINITE.
    """

    basis_ideal: GroebnerBasis
    standard_monomials: Tuple[Monomial, ...]
    finite: bool
    dimension: Union[int, _Infinite]
    bound: Optional[int] = None

    @property
    def ambient(self):
        return self.basis_ideal.ambient

    @cached_property
    def positions(self) -> Dict[Monomial, int]:
        return {m: i for i, m in enumerate(self.standard_monomials)}

    def coordinates(self, p: Polynomial) -> Tuple:
        """Coefficients of the normal form of p on the standard monomials."""
        field = self.ambient.field
        vector = [field.zero] * len(self.standard_monomials)
        for m, c in normal_form(p, self.basis_ideal).as_dict().items():
            vector[self.positions[m]] = c
        return tuple(vector)

    def polynomial(self, vector: Sequence) -> Polynomial:
        return Polynomial(self.ambient, {m: c for m, c in zip(self.standard_monomials, vector) if c})

    def monomial_polynomials(self) -> List[Polynomial]:
        return [self.ambient.monomial(m) for m in self.standard_monomials]


def standard_monomials(G: GroebnerBasis, bound: Optional[int] = None) -> QuotientPresentation:
    """
    Macaulay basis of the quotient by the ideal of G.

    Monomials are listed by degree, then ascending ambient order. A finite
    quotient is always listed in full; an infinite one needs `bound`.
    """
    finite = is_finite(G)
    if not finite and bound is None:
        raise InfiniteWithoutBound(
            "the quotient is infinite-dimensional; pass a degree bound to list its standard monomials"
        )
    collected: List[Monomial] = []
    degree = 0
    while finite or degree <= bound:
        layer = standard_monomials_of_degree(G, degree)
        if finite and not layer:
            break
        collected.extend(layer)
        degree += 1
    return QuotientPresentation(
        G,
        tuple(collected),
        finite,
        len(collected) if finite else INFINITE,
        None if finite else bound,
    )


def hilbert_function(G: GroebnerBasis, up_to: int) -> List[int]:
    """Number of standard monomials in each degree 0..up_to."""
    return [len(standard_monomials_of_degree(G, k)) for k in range(up_to + 1)]


def milnor_algebra(f: Polynomial, bound: Optional[int] = None) -> QuotientPresentation:
    """
    The Milnor algebra k[z]/<grad f>; its dimension is the Milnor number when
    the singularity is isolated. A non-isolated singularity raises
    InfiniteWithoutBound unless a bound is given.
    """
    G = buchberger(f.gradient())
    logger.debug("gradient ideal has %d basis elements", len(G))
    return standard_monomials(G, bound)


def multiplication_matrix(g: Polynomial, Q: QuotientPresentation) -> ExactMatrix:
    """Matrix of multiplication by g; column j is the image of the j-th standard monomial."""
    if not Q.finite:
        raise InfiniteQuotient("multiplication matrices need a finite-dimensional quotient")
    n = len(Q.standard_monomials)
    columns = [Q.coordinates(g.mul_term(m, Q.ambient.field.one)) for m in Q.standard_monomials]
    return ExactMatrix(n, n, tuple(columns[j][i] for i in range(n) for j in range(n)), Q.ambient.field)


def annihilator_in_quotient(g: Polynomial, Q: QuotientPresentation) -> List[Polynomial]:
    """
    Basis of {p : p*g = 0 in the quotient}, each element scaled so that its
    largest standard monomial has coefficient 1.
    """
    key = Q.ambient.sort_key
    basis = []
    for vector in kernel_basis(multiplication_matrix(g, Q)):
        p = Q.polynomial(vector)
        basis.append(p.monic())
    basis.sort(key=lambda p: key(p.leading_monomial()))
    return basis


def is_system_of_parameters(seq: Sequence[Polynomial]) -> bool:
    """
    True for n homogeneous elements of positive degree in n variables whose
    quotient is finite-dimensional.
    """
    seq = list(seq)
    if not seq or len(seq) != seq[0].ambient.nvars:
        return False
    for theta in seq:
        degree, homogeneous = theta.degree_info()
        if theta.is_zero() or not homogeneous or degree < 1:
            return False
    return is_finite(buchberger(seq))


@lru_cache(maxsize=PRODUCT_CACHE_SIZE)
def _reduced_product(basis: GroebnerBasis, entry: Polynomial, m: Monomial) -> Dict[Monomial, object]:
    # shared by every GradedQuotient over the same basis; callers must not mutate
    return normal_form(entry.mul_term(m, basis.ambient.field.one), basis).as_dict()


def free_basis(seq: Sequence[Polynomial]) -> List[Polynomial]:
    """
    Standard monomials of <seq>. For a regular system of parameters they
    form a basis of k[z] as a free module over k[seq].
    """
    if not is_system_of_parameters(seq):
        raise InfiniteQuotient("the sequence is not a homogeneous system of parameters")
    return standard_monomials(buchberger(seq)).monomial_polynomials()


class GradedQuotient:
    """
    Degree-by-degree model of A = k[z]/I for a homogeneous ideal I.

    A_k is spanned by the standard monomials of degree k. `graded_matrix`
    turns a matrix of polynomials between free A-modules into the exact
    matrix of its degree-s piece.
    """

    def __init__(self, generators: Sequence[Polynomial]):
        for g in generators:
            if g.is_zero() or not g.is_homogeneous():
                raise NotHomogeneous(f"{g} is not a nonzero homogeneous polynomial")
        self.basis = buchberger(generators)
        self.ambient = self.basis.ambient
        self.field = self.ambient.field
        self._layers: Dict[int, Tuple[Monomial, ...]] = {}
        self._positions: Dict[int, Dict[Monomial, int]] = {}

    def layer(self, degree: int) -> Tuple[Monomial, ...]:
        if degree not in self._layers:
            self._layers[degree] = tuple(standard_monomials_of_degree(self.basis, degree))
            self._positions[degree] = {m: i for i, m in enumerate(self._layers[degree])}
        return self._layers[degree]

    def dimension(self, degree: int) -> int:
        return len(self.layer(degree))

    def profile(self, up_to: int) -> List[int]:
        return [self.dimension(k) for k in range(up_to + 1)]

    def product(self, entry: Polynomial, m: Monomial) -> Dict[Monomial, object]:
        """Normal form of entry * z^m as a monomial map."""
        return _reduced_product(self.basis, entry, m)

    def graded_matrix(
        self,
        entries: Sequence[Sequence[Polynomial]],
        source_shifts: Sequence[int],
        target_shifts: Sequence[int],
        s: int,
    ) -> ExactMatrix:
        """
        Degree-s piece of the map given by `entries`.

        entries[i][j] maps source generator j to target generator i. A
        source generator of shift w carries coefficients in A_(s - w), and
        likewise for targets. Rows follow target generators, columns source
        generators, each expanded over its standard monomials.
        """
        row_offsets, rows = self._offsets(target_shifts, s)
        col_offsets, cols = self._offsets(source_shifts, s)
        table = [[self.field.zero] * cols for _ in range(rows)]
        for j, w in enumerate(source_shifts):
            for a, m in enumerate(self.layer(s - w)):
                col = col_offsets[j] + a
                for i, tw in enumerate(target_shifts):
                    entry = entries[i][j]
                    if entry.is_zero():
                        continue
                    self.layer(s - tw)
                    positions = self._positions[s - tw]
                    for mono, c in self.product(entry, m).items():
                        table[row_offsets[i] + positions[mono]][col] += c
        return ExactMatrix(rows, cols, tuple(x for row in table for x in row), self.field)

    def _offsets(self, shifts: Sequence[int], s: int):
        offsets = []
        total = 0
        for w in shifts:
            offsets.append(total)
            total += self.dimension(s - w)
        return offsets, total
