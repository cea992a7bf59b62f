"""
Service running the verification checklist for the cubic surface
f = z1^3 + z2^3 + z3^3 + 3q z1 z2 z3.

Each check records what it certifies in its anchor. Checks whose expected
value is stated for generic q are skipped, not failed, when the working
field specializes q to a value where the generic computation does not carry
over; dimension-level checks always run.
"""

import logging
from typing import Dict, List, Optional, Sequence

from hochschild.algebra.coeff import QQ_Q
from hochschild.algebra.groebner import (
    GroebnerBasis,
    buchberger,
    colon_ideal,
    ideal_member,
    is_regular_sequence,
    normal_form,
    same_ideal,
)
from hochschild.algebra.koszul import (
    COHOMOLOGY,
    HOMOLOGY,
    GeneratorLabel,
    KoszulComplex,
    build_complex,
    dimension_profile,
    structural_spaces,
)
from hochschild.algebra.poly import Polynomial
from hochschild.algebra.quotient import (
    INFINITE,
    annihilator_in_quotient,
    hilbert_function,
    is_finite,
    is_system_of_parameters,
    standard_monomials,
)
from hochschild.exceptions import ComplexNotClosed, SpecializationPole
from hochschild.models import Report
from hochschild.services.base import BaseService
from hochschild.utils import monomial_texts, to_jsonable

logger = logging.getLogger(__name__)

GRADIENT_BASIS = (
    "z1^2+q*z2*z3",
    "z1*z2+q^-1*z3^2",
    "z1*z3+q^-1*z2^2",
    "z2^3-z3^3",
    "z2^2*z3",
    "z2*z3^2",
    "z3^4",
)
GRADIENT_MONOMIALS = ("1", "z1", "z2", "z3", "z2^2", "z2*z3", "z3^2", "z3^3")

JACOBIAN2_BASIS = (
    "z1^3-z3^3",
    "z1*z2+q^-1*z3^2",
    "z1*z3+q^-1*z2^2",
    "z2^3-z3^3",
    "z2*z3^3",
    "z3^4",
)
JACOBIAN2_MONOMIALS = (
    "1", "z1", "z1^2", "z2", "z2^2", "z3", "z2*z3", "z2^2*z3", "z3^2", "z2*z3^2", "z2^2*z3^2", "z3^3",
)
NORMAL_FORM_Z2_D1F = "3*q*z2^2*z3+3*q^-2*z2^2*z3"
ANNIHILATOR_D1F = ("z1", "z1^2", "z2^2", "z2^2*z3", "z3^2", "z2*z3^2", "z2^2*z3^2", "z3^3")

MILNOR_NUMBER = 8
# dimensions of {g : g . grad f = 0} beyond the wedge image, by degree of g
DOT_KERNEL_CORRECTION = {1: 1, 2: 3, 3: 3, 4: 1}
# internal degrees carrying HH^p and HH_p for p >= 3, by parity of p
STABLE_SUPPORT = {
    (COHOMOLOGY, 0): {0: 1, 1: 3, 2: 3, 3: 1},
    (COHOMOLOGY, 1): {3: 1, 4: 3, 5: 3, 6: 1},
    (HOMOLOGY, 0): {-3: 1, -2: 3, -1: 3, 0: 1},
    (HOMOLOGY, 1): {-6: 1, -5: 3, -4: 3, -3: 1},
}
STABLE_INDICES = (3, 4, 5, 6)

# anchors: the statement each check certifies
EULER = "euler identity: z1*d1f+z2*d2f+z3*d3f = 3f"
KEY_RELATION_Z2 = "key relation: z2^2*d1f = (z1^2+2q*z2*z3)*d2f - 3q*z3*f + q*z3^2*d3f"
KEY_RELATION_Z3 = "key relation: z3^2*d1f = (z1^2+2q*z2*z3)*d3f - 3q*z2*f + q*z2^2*d2f"
GRADIENT_QUOTIENT = "milnor algebra k[z]/<grad f> has dimension 8"
ANNIHILATOR = "annihilator of d1f in k[z]/<f,d2f,d3f> has dimension 8"
COLON_IDENTITY = "colon identity: <f,d3f> : <d2f> = <f,d3f>"
REGULAR_SEQUENCE = "z1,z2,z3 and f,d3f,d2f are regular sequences"
PARAMETERS = "f,d3f,d2f is a homogeneous system of parameters"
SQUARES_ZERO = "consecutive differentials compose to zero"
DELTA1 = "delta1 is grad f over a zero block"
DELTA3 = "delta3(e1e2e3) = d1f*ue2e3 + d2f*ue3e1 + d3f*ue1e2"
THETA2 = "theta2 rows are (d1f,0,0,0), (d2f,0,0,0), (d3f,0,0,0)"
HH0_COHOMOLOGY = "HH^0 = A"
HH0_HOMOLOGY = "HH_0 = A"
COHOMOLOGY_THEOREM = "HH^p = k^8 for p >= 3, HH^1 and HH^2 infinite"
HOMOLOGY_THEOREM = "HH_p = k^8 for p >= 3, HH_1 and HH_2 infinite"
DOT_KERNEL = "{g : g.grad f = 0} = grad f ^ A^3 plus (0,1,3,3,1) by degree"
WEDGE_KERNEL = "{g : grad f ^ g = 0} = A grad f"
STRUCTURAL = "g grad f = 0 in A^3 forces g = 0"
FERMAT = "q = 0 (Fermat cubic): both dimension-8 statements persist"
HESSE = "q = -1 (singular member): the gradient quotient is infinite"


class VerificationService(BaseService):
    """
    Service class to run every check and collect them in one report.
    """

    SUBCOMMAND = "verify-paper"
    ALIASES = ("verify",)

    def __init__(self, config):
        super().__init__(config)
        self.generic = self.ambient.with_field(QQ_Q)
        self.field = self.ambient.field

    def get_data(self, **kwargs):
        return self.polynomial()

    def process_data(self, **kwargs) -> Report:
        f = self.get_data()
        report = self.new_report()
        self.check_identities(report, f)
        self.check_ideals(report, f)
        finite = self.check_quotients(report, f)
        complexes = self.check_complexes(report, f)
        if finite and complexes:
            self.check_profiles(report, f, complexes)
        else:
            reason = "the gradient ideal has an infinite quotient here (singular surface)" if not finite else "complexes failed to build"
            for name, anchor in (("hochschild-profiles", COHOMOLOGY_THEOREM), ("structural-spaces", DOT_KERNEL)):
                self.skip(report, name, anchor, reason)
        if self.field.is_generic:
            self.check_specializations(report)
        return report

    # helpers

    def check(self, report: Report, name: str, anchor: str, computed, expected, detail: Optional[str] = None) -> bool:
        passed = computed == expected
        report.add(name, anchor, to_jsonable(computed), to_jsonable(expected), "pass" if passed else "fail", detail)
        if not passed:
            logger.warning("check %s failed (%s)", name, anchor)
        return passed

    def skip(self, report: Report, name: str, anchor: str, reason: str, expected=None) -> None:
        logger.info("skipping %s: %s", name, reason)
        report.add(name, anchor, None, to_jsonable(expected), "skipped", reason)

    def expected(self, texts: Sequence[str]) -> Optional[List[Polynomial]]:
        """Generic-q polynomials carried into the working field, or None at a pole."""
        polys = [self.generic.parse(t) for t in texts]
        if self.field.is_generic:
            return polys
        try:
            return [p.transfer(self.ambient) for p in polys]
        except SpecializationPole:
            return None

    def generic_issue(self, generic_basis: GroebnerBasis) -> Optional[str]:
        """Why a literal generic-q expectation does not apply here, if it does not."""
        order = self.ambient.order
        if order.kind != "lex" or order.priority != tuple(range(self.ambient.nvars)):
            return "the expected bases are stated for lex with z1 > z2 > z3"
        if not self.field.is_generic and not generic_basis.specializes_at(self.field.value):
            return f"q = {self.field.value} is not a lucky specialization of the generic basis"
        return None

    def compare_literal(self, report: Report, name: str, anchor: str, computed, texts: Sequence[str], issue: Optional[str], as_set=True) -> None:
        expected = None if issue else self.expected(texts)
        if issue or expected is None:
            self.skip(report, name, anchor, issue or "the expected value has a pole at this q", list(texts))
            return
        if as_set:
            self.check(report, name, anchor, set(computed), set(expected))
        else:
            self.check(report, name, anchor, computed, expected[0])

    # checks

    def check_identities(self, report: Report, f: Polynomial) -> None:
        A = self.ambient
        z1, z2, z3 = (A.var(i) for i in range(3))
        d1, d2, d3 = f.gradient()
        q = A.const(self.field.q())
        degree = f.total_degree
        euler = f.scale(degree) - (z1 * d1 + z2 * d2 + z3 * d3)
        self.check(report, "euler-identity", EULER, euler, A.zero())
        shared = z1 * z1 + q * 2 * z2 * z3
        relation_z2 = z2 * z2 * d1 - shared * d2 + q * 3 * z3 * f - q * z3 * z3 * d3
        relation_z3 = z3 * z3 * d1 - shared * d3 + q * 3 * z2 * f - q * z2 * z2 * d2
        self.check(report, "key-relation-z2", KEY_RELATION_Z2, relation_z2, A.zero())
        self.check(report, "key-relation-z3", KEY_RELATION_Z3, relation_z3, A.zero())

    def check_ideals(self, report: Report, f: Polynomial) -> None:
        d1, d2, d3 = f.gradient()
        G = buchberger([d1, d2, d3])
        self.check(report, "euler-inclusion", EULER, ideal_member(f, G), True)
        fg = self.generic.parse(self.config.f)
        generic_gradient = buchberger(fg.gradient())
        self.compare_literal(report, "gradient-groebner-basis", GRADIENT_QUOTIENT, G.generators, GRADIENT_BASIS, self.generic_issue(generic_gradient))

        H = buchberger([f, d2, d3])
        generic_jacobian = buchberger([fg] + fg.gradient()[1:])
        self.compare_literal(report, "jacobian2-groebner-basis", ANNIHILATOR, H.generators, JACOBIAN2_BASIS, self.generic_issue(generic_jacobian))

        J = [f, d3]
        self.check(report, "colon-identity", COLON_IDENTITY, same_ideal(buchberger(J), colon_ideal(J, d2)), True)
        A = self.ambient
        self.check(report, "regular-sequence-variables", REGULAR_SEQUENCE, is_regular_sequence([A.var(i) for i in range(A.nvars)]).regular, True)
        self.check(report, "regular-sequence-jacobian", REGULAR_SEQUENCE, is_regular_sequence([f, d3, d2]).regular, True)
        self.check(report, "system-of-parameters", PARAMETERS, is_system_of_parameters([f, d3, d2]), True)

    def check_quotients(self, report: Report, f: Polynomial) -> bool:
        """Returns False when the Milnor algebra is infinite-dimensional."""
        fg = self.generic.parse(self.config.f)
        d1, d2, d3 = f.gradient()
        G = buchberger([d1, d2, d3])
        if not is_finite(G):
            self.check(
                report, "milnor-number", GRADIENT_QUOTIENT, INFINITE, MILNOR_NUMBER,
                detail="the singularity at the origin is not isolated for this q",
            )
            return False
        Q = standard_monomials(G)
        self.check(report, "milnor-number", GRADIENT_QUOTIENT, Q.dimension, MILNOR_NUMBER)
        issue = self.generic_issue(buchberger(fg.gradient()))
        self.compare_standard(report, "gradient-standard-monomials", GRADIENT_QUOTIENT, Q, GRADIENT_MONOMIALS, issue)

        dims = []
        for i, j in ((1, 2), (0, 2), (0, 1)):
            B = buchberger([f, f.gradient()[i], f.gradient()[j]])
            dims.append(standard_monomials(B).dimension if is_finite(B) else INFINITE)
        self.check(report, "jacobian-quotient-dimensions", ANNIHILATOR, dims, [12, 12, 12])

        H = buchberger([f, d2, d3])
        if not is_finite(H):
            self.skip(report, "annihilator-of-d1f", ANNIHILATOR, "the quotient by <f, d2f, d3f> is infinite here")
            return True
        R = standard_monomials(H)
        issue = self.generic_issue(buchberger([fg] + fg.gradient()[1:]))
        self.compare_standard(report, "jacobian2-standard-monomials", ANNIHILATOR, R, JACOBIAN2_MONOMIALS, issue)
        self.compare_literal(
            report, "normal-form-z2-d1f", ANNIHILATOR,
            normal_form(self.ambient.var(1) * d1, H), [NORMAL_FORM_Z2_D1F], issue, as_set=False,
        )
        annihilator = annihilator_in_quotient(d1, R)
        self.check(report, "annihilator-dimension", ANNIHILATOR, len(annihilator), 8)
        self.compare_literal(report, "annihilator-basis", ANNIHILATOR, annihilator, ANNIHILATOR_D1F, issue)
        return True

    def compare_standard(self, report: Report, name: str, anchor: str, Q, texts: Sequence[str], issue: Optional[str]) -> None:
        if issue:
            self.skip(report, name, anchor, issue, list(texts))
            return
        self.check(report, name, anchor, set(monomial_texts(Q.standard_monomials, Q.ambient)), set(texts))

    def check_complexes(self, report: Report, f: Polynomial) -> Optional[Dict[str, KoszulComplex]]:
        pmax = max(self.config.pmax, max(STABLE_INDICES) + 1)
        try:
            complexes = {kind: build_complex(f, kind, pmax) for kind in (COHOMOLOGY, HOMOLOGY)}
        except ComplexNotClosed as error:
            report.add("differential-squares-zero", SQUARES_ZERO, str(error), "0", "fail")
            return None
        report.add("differential-squares-zero", SQUARES_ZERO, f"through index {pmax}", f"through index {pmax}")

        zero = self.ambient.zero()
        gradient = tuple(f.gradient())
        phi = complexes[COHOMOLOGY]
        self.check(report, "delta1-matrix", DELTA1, phi.differential(1), (gradient,) + ((zero,) * 3,) * 3)
        top = phi.image_of(3, GeneratorLabel((1, 2, 3), 0))
        expected_top = {
            GeneratorLabel((2, 3), 1): gradient[0],
            GeneratorLabel((3, 1), 1): gradient[1],
            GeneratorLabel((1, 2), 1): gradient[2],
        }
        self.check(report, "delta3-top-form", DELTA3, top, expected_top)
        psi = complexes[HOMOLOGY]
        self.check(report, "theta2-matrix", THETA2, psi.differential(2), tuple((g, zero, zero, zero) for g in gradient))
        return complexes

    def check_profiles(self, report: Report, f: Polynomial, complexes: Dict[str, KoszulComplex]) -> None:
        smax, window, workers = self.config.smax, self.config.window, self.config.workers
        profiles = {
            (kind, p): dimension_profile(C, p, smax, window, workers)
            for kind, C in complexes.items()
            for p in range(0, max(STABLE_INDICES) + 1)
        }
        A = complexes[COHOMOLOGY].quotient
        a_profile = {s: A.dimension(s) for s in range(0, smax + 1)}
        self.check(report, "HH^0", HH0_COHOMOLOGY, profiles[(COHOMOLOGY, 0)].nonzero(), a_profile)
        self.check(report, "HH_0", HH0_HOMOLOGY, profiles[(HOMOLOGY, 0)].nonzero(), a_profile)

        for kind, anchor in ((COHOMOLOGY, COHOMOLOGY_THEOREM), (HOMOLOGY, HOMOLOGY_THEOREM)):
            mark = "^" if kind == COHOMOLOGY else "_"
            for p in STABLE_INDICES:
                profile = profiles[(kind, p)]
                self.check(
                    report, f"HH{mark}{p}", anchor,
                    {"total": profile.total, "stabilized": profile.stabilized, "support": profile.nonzero()},
                    {"total": MILNOR_NUMBER, "stabilized": True, "support": STABLE_SUPPORT[(kind, p % 2)]},
                )
            for p in STABLE_INDICES[:2]:
                self.check(
                    report, f"HH{mark}{p}-periodicity", anchor,
                    profiles[(kind, p)].values, profiles[(kind, p + 2)].values,
                )
            for p in (1, 2):
                self.check(report, f"HH{mark}{p}-infinite", anchor, profiles[(kind, p)].stabilized, False)

        tail = [profiles[(HOMOLOGY, 2)][s] for s in range(smax - window + 1, smax + 1)]
        self.check(report, "HH_2-nonvanishing-tail", HOMOLOGY_THEOREM, all(tail), True)

        spaces = structural_spaces(f, smax, window)
        shift = f.total_degree - 1
        correction = {k: spaces.wedge_image[k] + DOT_KERNEL_CORRECTION.get(k, 0) for k in range(0, smax + 1)}
        self.check(report, "dot-kernel-decomposition", DOT_KERNEL, dict(spaces.dot_kernel.values), correction)
        h1 = profiles[(COHOMOLOGY, 1)]
        self.check(
            report, "HH^1-decomposition", DOT_KERNEL,
            {k: h1[k + shift] for k in range(0, smax - shift + 1)},
            {k: correction[k] for k in range(0, smax - shift + 1)},
        )
        self.check(report, "wedge-kernel", WEDGE_KERNEL, spaces.wedge_kernel.values, spaces.gradient_multiples.values)
        milnor_degrees = hilbert_function(buchberger(f.gradient()), smax)
        self.check(report, "milnor-profile", GRADIENT_QUOTIENT, spaces.milnor.values, dict(enumerate(milnor_degrees)))
        self.check(report, "gradient-annihilator", STRUCTURAL, spaces.gradient_annihilator.total, 0)

    def check_specializations(self, report: Report) -> None:
        for value, name in ((0, FERMAT), (-1, HESSE)):
            field = self.field.specialized(value)
            f = self.ambient.with_field(field).parse(self.config.f)
            d1, d2, d3 = f.gradient()
            G = buchberger([d1, d2, d3])
            if value == 0:
                self.check(report, "fermat-milnor-number", name, standard_monomials(G).dimension if is_finite(G) else INFINITE, MILNOR_NUMBER)
                R = standard_monomials(buchberger([f, d2, d3]))
                self.check(report, "fermat-annihilator-dimension", name, len(annihilator_in_quotient(d1, R)), 8)
            else:
                # q^3 = -1 puts the surface on the singular locus
                self.check(report, "hesse-degenerate-gradient", name, "infinite" if not is_finite(G) else "finite", "infinite")
