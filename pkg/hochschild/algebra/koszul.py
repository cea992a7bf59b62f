"""
Koszul-type complexes computing Hochschild cohomology and homology of a
hypersurface algebra A = k[z1..zn]/<f>, with f homogeneous.

Cohomology uses Phi = A[eps_1..eps_n, u] with odd eps (degree 1) and even u
(degree 2), differential

    delta(a u^k eps_I) = sum_j d_j f * a u^(k+1) * d/d(eps_j)(eps_I)

Homology uses Psi = A[zeta_1..zeta_n, v] with odd zeta (degree -1) and even
v (degree -2), differential

    theta(a v^k zeta_I) = k * sum_i d_i f * a v^(k-1) * zeta_i zeta_I

The odd derivative is a left derivative: d/d(eps_j) picks up (-1)^position.

Both differentials preserve an internal degree once odd generators carry a
weight: (d-1) per eps and (1-d) per zeta, d = deg f, even generators weight 0
and z_i weight 1. Each graded piece is a finite-dimensional matrix problem
over the coefficient field, assembled on the standard monomials of <f>.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dataclass_field
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from hochschild.algebra.linalg import ExactMatrix, rank
from hochschild.algebra.poly import Polynomial
from hochschild.algebra.quotient import GradedQuotient
from hochschild.exceptions import ComplexNotClosed, ConfigurationError, NotHomogeneous, OutOfBuiltRange

logger = logging.getLogger(__name__)

COHOMOLOGY = "cohomology"
HOMOLOGY = "homology"
KINDS = (COHOMOLOGY, HOMOLOGY)
# non-degree keys of a serialized DimensionProfile
PROFILE_KEYS = ("total", "stabilized")

PolynomialMatrix = Tuple[Tuple[Polynomial, ...], ...]


@dataclass(frozen=True)
class GeneratorLabel:
    """
    The free generator (u or v)^even_power times the ordered odd product
    `epsilons`, e.g. ((3, 1), 1) is u*eps3*eps1.
    """

    epsilons: Tuple[int, ...]
    even_power: int = 0

    def degree(self, kind: str = COHOMOLOGY) -> int:
        degree = len(self.epsilons) + 2 * self.even_power
        return degree if kind == COHOMOLOGY else -degree

    def text(self, kind: str = COHOMOLOGY) -> str:
        even, odd = ("u", "eps") if kind == COHOMOLOGY else ("v", "zeta")
        parts = []
        if self.even_power == 1:
            parts.append(even)
        elif self.even_power > 1:
            parts.append(f"{even}^{self.even_power}")
        parts.extend(f"{odd}{i}" for i in self.epsilons)
        return "*".join(parts) or "1"

    def __str__(self):
        return self.text()


def _odd_products(nvars: int, size: int) -> List[Tuple[int, ...]]:
    if nvars == 3 and size == 2:
        # cyclic pairs, so that eps3*eps1 rather than eps1*eps3 is a basis element
        return [(1, 2), (2, 3), (3, 1)]
    return list(combinations(range(1, nvars + 1), size))


def _permutation_sign(produced: Sequence[int], canonical: Sequence[int]) -> int:
    positions = [canonical.index(x) for x in produced]
    inversions = sum(1 for a in range(len(positions)) for b in range(a + 1, len(positions)) if positions[a] > positions[b])
    return -1 if inversions % 2 else 1


@dataclass(frozen=True)
class GradedFreeModule:
    """Free A-module on labelled generators, each with an internal weight."""

    generators: Tuple[GeneratorLabel, ...]
    weights: Tuple[int, ...]

    def __len__(self):
        return len(self.generators)

    def index(self, label: GeneratorLabel) -> int:
        return self.generators.index(label)

    @property
    def minimal_weight(self) -> Optional[int]:
        return min(self.weights) if self.weights else None

    def dimension(self, quotient: GradedQuotient, s: int) -> int:
        """Dimension of the internal-degree-s piece."""
        return sum(quotient.dimension(s - w) for w in self.weights)

    def canonical(self, epsilons: Sequence[int], even_power: int) -> Tuple[int, int]:
        """(position, sign) of the generator equal to +-(even^k * product) in this module."""
        target = frozenset(epsilons)
        for position, label in enumerate(self.generators):
            if label.even_power == even_power and frozenset(label.epsilons) == target:
                return position, _permutation_sign(epsilons, label.epsilons)
        raise KeyError((tuple(epsilons), even_power))


def free_module(nvars: int, index: int, degree: int, kind: str) -> GradedFreeModule:
    """
    Phi(index) for cohomology or Psi(-index) for homology: generators
    u^k eps_I with |I| + 2k = index, ordered by |I| ascending.
    """
    sign = 1 if kind == COHOMOLOGY else -1
    generators = []
    weights = []
    for size in range(0, min(nvars, index) + 1):
        if (index - size) % 2:
            continue
        for product in _odd_products(nvars, size):
            generators.append(GeneratorLabel(product, (index - size) // 2))
            weights.append(sign * (degree - 1) * size)
    return GradedFreeModule(tuple(generators), tuple(weights))


@dataclass(frozen=True)
class GradedPiece:
    domain_dimension: int
    outgoing: ExactMatrix
    incoming: ExactMatrix


@dataclass(frozen=True)
class DimensionProfile:
    """
    Dimensions of a graded space, degree by degree, through `truncation`.

    `stabilized` means the last `window` values are all zero, which is
    taken as evidence (not proof) that the support is finite.
    """

    values: Dict[int, int]
    truncation: int
    stabilized: bool
    window: int = 4

    @classmethod
    def from_values(cls, values: Dict[int, int], truncation: int, window: int) -> "DimensionProfile":
        ordered = dict(sorted(values.items()))
        tail = [ordered[s] for s in ordered if s > truncation - window]
        stabilized = len(tail) >= window and not any(tail)
        return cls(ordered, truncation, stabilized, window)

    @property
    def total(self) -> int:
        return sum(self.values.values())

    @property
    def support(self) -> List[int]:
        return [s for s, v in self.values.items() if v]

    def __getitem__(self, s: int) -> int:
        return self.values.get(s, 0)

    def nonzero(self) -> Dict[int, int]:
        return {s: v for s, v in self.values.items() if v}

    def to_dict(self) -> dict:
        """{"<degree>": dim, ..., "total": n, "stabilized": bool}"""
        return {**{str(s): v for s, v in self.values.items()}, "total": self.total, "stabilized": self.stabilized}


def is_profile_dict(data) -> bool:
    """True for the output of DimensionProfile.to_dict."""
    if not isinstance(data, dict) or not set(PROFILE_KEYS) <= set(data):
        return False
    return all(k in PROFILE_KEYS or str(k).lstrip("-").isdigit() for k in data)


def profile_degrees(data: dict) -> Dict[int, int]:
    """Degree entries of a serialized profile."""
    return {int(k): v for k, v in data.items() if k not in PROFILE_KEYS}


@dataclass(frozen=True)
class KoszulComplex:
    """
    A complex built through index `pmax`.

    modules[p] is Phi(p) for cohomology and Psi(-p) for homology.
    differentials[p] is the polynomial matrix leaving modules[p] (rows follow
    the target generators, columns the source generators): delta^(p) into
    Phi(p+1), or theta^(-p) into Psi(-p+1).
    """

    kind: str
    f: Polynomial
    pmax: int
    modules: Tuple[GradedFreeModule, ...]
    differentials: Dict[int, PolynomialMatrix]
    quotient: GradedQuotient = dataclass_field(compare=False, repr=False)

    @property
    def degree(self) -> int:
        return self.f.total_degree

    def differential(self, p: int) -> PolynomialMatrix:
        if p not in self.differentials:
            raise OutOfBuiltRange(f"no differential leaves index {p} in a {self.kind} complex built through {self.pmax}")
        return self.differentials[p]

    def target_index(self, p: int) -> int:
        return p + 1 if self.kind == COHOMOLOGY else p - 1

    def image_of(self, p: int, label: GeneratorLabel) -> Dict[GeneratorLabel, Polynomial]:
        """Nonzero components of the differential applied to one generator of modules[p]."""
        column = self.modules[p].index(label)
        target = self.modules[self.target_index(p)]
        return {
            target.generators[i]: row[column]
            for i, row in enumerate(self.differential(p))
            if not row[column].is_zero()
        }


def _cohomology_differential(f: Polynomial, source: GradedFreeModule, target: GradedFreeModule) -> PolynomialMatrix:
    gradient = f.gradient()
    zero = f.ambient.zero()
    table = [[zero] * len(source) for _ in target.generators]
    for col, label in enumerate(source.generators):
        for position, j in enumerate(label.epsilons):
            rest = label.epsilons[:position] + label.epsilons[position + 1:]
            row, sign = target.canonical(rest, label.even_power + 1)
            sign *= -1 if position % 2 else 1
            table[row][col] = table[row][col] + gradient[j - 1].scale(sign)
    return tuple(tuple(r) for r in table)


def _homology_differential(f: Polynomial, source: GradedFreeModule, target: GradedFreeModule) -> PolynomialMatrix:
    gradient = f.gradient()
    zero = f.ambient.zero()
    nvars = f.ambient.nvars
    table = [[zero] * len(source) for _ in target.generators]
    for col, label in enumerate(source.generators):
        k = label.even_power
        if not k:
            continue
        for i in range(1, nvars + 1):
            if i in label.epsilons:
                continue
            row, sign = target.canonical((i,) + label.epsilons, k - 1)
            table[row][col] = table[row][col] + gradient[i - 1].scale(k * sign)
    return tuple(tuple(r) for r in table)


def _compose(outer: PolynomialMatrix, inner: PolynomialMatrix, zero: Polynomial) -> List[List[Polynomial]]:
    middle = len(inner)
    columns = len(inner[0]) if inner else 0
    product = []
    for row in outer:
        out = []
        for c in range(columns):
            total = zero
            for m in range(middle):
                if not row[m].is_zero() and not inner[m][c].is_zero():
                    total = total + row[m] * inner[m][c]
            out.append(total)
        product.append(out)
    return product


def build_complex(f: Polynomial, kind: str = COHOMOLOGY, pmax: int = 8) -> KoszulComplex:
    """
    Phi or Psi for the hypersurface f = 0 through index pmax, with the
    consecutive compositions checked to vanish identically.
    """
    if kind not in KINDS:
        raise ConfigurationError(f"unknown complex kind {kind!r}; expected one of {', '.join(KINDS)}")
    if pmax < 1:
        raise ConfigurationError("pmax must be at least 1")
    degree, homogeneous = f.degree_info()
    if f.is_zero() or not homogeneous:
        raise NotHomogeneous(f"{f} is not a nonzero homogeneous polynomial")
    if degree < 1:
        raise ConfigurationError("f must have positive degree")
    nvars = f.ambient.nvars
    modules = tuple(free_module(nvars, p, degree, kind) for p in range(pmax + 1))
    differentials: Dict[int, PolynomialMatrix] = {}
    if kind == COHOMOLOGY:
        for p in range(pmax):
            differentials[p] = _cohomology_differential(f, modules[p], modules[p + 1])
        pairs = [(p, p + 1) for p in range(pmax - 1)]
    else:
        for p in range(1, pmax + 1):
            differentials[p] = _homology_differential(f, modules[p], modules[p - 1])
        pairs = [(p, p - 1) for p in range(2, pmax + 1)]
    zero = f.ambient.zero()
    for first, second in pairs:
        composed = _compose(differentials[second], differentials[first], zero)
        if any(not entry.is_zero() for row in composed for entry in row):
            raise ComplexNotClosed(f"{kind} differentials out of index {first} and {second} do not compose to zero")
    logger.debug("built %s complex of %s through index %d", kind, f, pmax)
    return KoszulComplex(kind, f, pmax, modules, differentials, GradedQuotient([f]))


def _check_index(C: KoszulComplex, p: int) -> None:
    if p < 0 or p + 1 > C.pmax:
        raise OutOfBuiltRange(f"index {p} needs a complex built through {p + 1}; this one stops at {C.pmax}")


def graded_piece(C: KoszulComplex, p: int, s: int) -> GradedPiece:
    """
    The internal-degree-s part of modules[p] with the differentials leaving
    and entering it, as matrices over the coefficient field.
    """
    _check_index(C, p)
    module = C.modules[p]
    A = C.quotient
    if C.kind == COHOMOLOGY:
        out_target = C.modules[p + 1]
        outgoing = A.graded_matrix(C.differentials[p], module.weights, out_target.weights, s)
        if p == 0:
            incoming = ExactMatrix.zeros(module.dimension(A, s), 0, A.field)
        else:
            incoming = A.graded_matrix(C.differentials[p - 1], C.modules[p - 1].weights, module.weights, s)
    else:
        if p == 0:
            outgoing = ExactMatrix.zeros(0, module.dimension(A, s), A.field)
        else:
            outgoing = A.graded_matrix(C.differentials[p], module.weights, C.modules[p - 1].weights, s)
        incoming = A.graded_matrix(C.differentials[p + 1], C.modules[p + 1].weights, module.weights, s)
    domain = module.dimension(A, s)
    logger.debug("%s piece p=%d s=%d: domain %d, outgoing %dx%d, incoming %dx%d",
                 C.kind, p, s, domain, outgoing.rows, outgoing.cols, incoming.rows, incoming.cols)
    return GradedPiece(domain, outgoing, incoming)


def cohomology_dimension(C: KoszulComplex, p: int, s: int) -> int:
    """dim ker(outgoing) - rank(incoming) in internal degree s."""
    piece = graded_piece(C, p, s)
    if not piece.domain_dimension:
        return 0
    return piece.domain_dimension - rank(piece.outgoing) - rank(piece.incoming)


# set once per worker process by _init_worker
_worker_job: Optional[Tuple[KoszulComplex, int]] = None


def _init_worker(C: KoszulComplex, p: int) -> None:
    global _worker_job
    _worker_job = (C, p)


def _dimension_in_worker(s: int) -> int:
    C, p = _worker_job
    return cohomology_dimension(C, p, s)


def dimension_profile(C: KoszulComplex, p: int, s_max: int, window: int = 4, workers: int = 1) -> DimensionProfile:
    """
    (Co)homology dimensions of index p for every internal degree from the
    smallest generator weight of modules[p] through s_max.
    """
    _check_index(C, p)
    start = C.modules[p].minimal_weight
    degrees = list(range(start, s_max + 1)) if start is not None else []
    if workers > 1 and len(degrees) > 1:
        with ProcessPoolExecutor(max_workers=workers, initializer=_init_worker, initargs=(C, p)) as executor:
            dims = list(executor.map(_dimension_in_worker, degrees))
    else:
        dims = [cohomology_dimension(C, p, s) for s in degrees]
    return DimensionProfile.from_values(dict(zip(degrees, dims)), s_max, window)


@dataclass(frozen=True)
class StructuralSpaces:
    """
    Profiles of the auxiliary spaces over A, indexed by the polynomial degree
    of the A-components (of the output for images, of g for kernels).
    """

    A: DimensionProfile
    milnor: DimensionProfile
    gradient_multiples: DimensionProfile
    wedge_image: DimensionProfile
    wedge_kernel: DimensionProfile
    dot_kernel: DimensionProfile
    gradient_annihilator: DimensionProfile

    def as_dict(self) -> Dict[str, DimensionProfile]:
        return {
            "A": self.A,
            "milnor": self.milnor,
            "gradient_multiples": self.gradient_multiples,
            "wedge_image": self.wedge_image,
            "wedge_kernel": self.wedge_kernel,
            "dot_kernel": self.dot_kernel,
            "gradient_annihilator": self.gradient_annihilator,
        }


def structural_spaces(f: Polynomial, bound: int, window: int = 4) -> StructuralSpaces:
    """
    Degree-by-degree dimensions of A, A/<grad f>, {g grad f}, {grad f ^ g},
    {g : grad f ^ g = 0}, {g : g . grad f = 0} and {g : g grad f = 0}, from
    ranks of the maps g -> g grad f, g -> grad f ^ g and g -> g . grad f.
    """
    if f.ambient.nvars != 3:
        raise ConfigurationError("structural spaces use the cross product and need three variables")
    degree, homogeneous = f.degree_info()
    if f.is_zero() or not homogeneous:
        raise NotHomogeneous(f"{f} is not a nonzero homogeneous polynomial")
    A = GradedQuotient([f])
    d1, d2, d3 = f.gradient()
    zero = f.ambient.zero()
    shift = degree - 1

    times_gradient = ((d1,), (d2,), (d3,))
    wedge = ((zero, -d3, d2), (d3, zero, -d1), (-d2, d1, zero))
    dot = ((d1, d2, d3),)

    def rank_at(entries, sources, targets, s):
        return rank(A.graded_matrix(entries, sources, targets, s))

    degrees = range(0, bound + 1)
    values: Dict[str, Dict[int, int]] = {name: {} for name in StructuralSpaces.__dataclass_fields__}
    for k in degrees:
        a_k = A.dimension(k)
        values["A"][k] = a_k
        values["milnor"][k] = a_k - rank_at(dot, (shift,) * 3, (0,), k)
        values["gradient_multiples"][k] = rank_at(times_gradient, (shift,), (0,) * 3, k)
        values["wedge_image"][k] = rank_at(wedge, (shift,) * 3, (0,) * 3, k)
        values["wedge_kernel"][k] = 3 * a_k - rank_at(wedge, (shift,) * 3, (0,) * 3, k + shift)
        values["dot_kernel"][k] = 3 * a_k - rank_at(dot, (shift,) * 3, (0,), k + shift)
        values["gradient_annihilator"][k] = a_k - rank_at(times_gradient, (shift,), (0,) * 3, k + shift)
    logger.debug("structural spaces of %s through degree %d", f, bound)
    return StructuralSpaces(
        **{name: DimensionProfile.from_values(v, bound, window) for name, v in values.items()}
    )
