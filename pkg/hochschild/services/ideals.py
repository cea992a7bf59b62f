"""Services for the ideal-theoretic subcommands: gb, nf, member, colon, regseq."""

import logging

from hochschild.algebra.groebner import buchberger, colon_ideal, ideal_member, is_regular_sequence, normal_form, same_ideal
from hochschild.algebra.quotient import INFINITE, is_finite, is_system_of_parameters, standard_monomials
from hochschild.exceptions import ConfigurationError
from hochschild.models import Report
from hochschild.services.base import BaseService
from hochschild.utils import monomial_texts, split_polynomials, to_jsonable

logger = logging.getLogger(__name__)


class GroebnerService(BaseService):
    """
    Reduced Groebner basis of an ideal, with the dimension of its quotient.
    """

    SUBCOMMAND = "gb"

    def get_data(self, ideal: str = "gradient", **kwargs):
        return self.ideal_generators(ideal)

    def process_data(self, ideal: str = "gradient", **kwargs) -> Report:
        generators = self.get_data(ideal)
        report = self.new_report()
        G = buchberger(generators)
        report.add("generators", "input", to_jsonable(generators))
        report.add("groebner-basis", "reduced-groebner-basis", to_jsonable(G.generators))
        report.add("leading-monomials", "reduced-groebner-basis", monomial_texts(G.leading_monomials, G.ambient))
        if is_finite(G):
            report.add("quotient-dimension", "standard-monomials", standard_monomials(G).dimension)
        else:
            # q values on the singular locus land here; report, never truncate
            report.add(
                "quotient-dimension",
                "standard-monomials",
                to_jsonable(INFINITE),
                detail="the quotient is infinite-dimensional (no pure power of some variable leads)",
            )
        return report


class NormalFormService(BaseService):
    SUBCOMMAND = "nf"

    def get_data(self, ideal: str = "gradient", poly: str = None, **kwargs):
        if not poly:
            raise ConfigurationError("nf needs --poly")
        return self.polynomial(poly), buchberger(self.ideal_generators(ideal))

    def process_data(self, ideal: str = "gradient", poly: str = None, **kwargs) -> Report:
        p, G = self.get_data(ideal, poly)
        report = self.new_report()
        report.add("normal-form", "normal-form", to_jsonable(normal_form(p, G)))
        return report


class MembershipService(BaseService):
    SUBCOMMAND = "member"

    def get_data(self, ideal: str = "gradient", poly: str = None, **kwargs):
        if not poly:
            raise ConfigurationError("member needs --poly")
        return self.polynomial(poly), buchberger(self.ideal_generators(ideal))

    def process_data(self, ideal: str = "gradient", poly: str = None, **kwargs) -> Report:
        p, G = self.get_data(ideal, poly)
        report = self.new_report()
        report.add("member", "ideal-membership", ideal_member(p, G))
        return report


class ColonService(BaseService):
    """
    J : <g>, and whether it equals J (g a non-zero-divisor modulo J).
    """

    SUBCOMMAND = "colon"

    def get_data(self, ideal: str = "gradient", by: str = None, **kwargs):
        if not by:
            raise ConfigurationError("colon needs --by")
        return self.ideal_generators(ideal), self.polynomial(by)

    def process_data(self, ideal: str = "gradient", by: str = None, **kwargs) -> Report:
        J, g = self.get_data(ideal, by)
        report = self.new_report()
        colon = colon_ideal(J, g)
        report.add("colon-ideal", "colon-ideal", to_jsonable(colon.generators))
        report.add("colon-equals-ideal", "colon-ideal", same_ideal(buchberger(J), colon))
        return report


class RegularSequenceService(BaseService):
    SUBCOMMAND = "regseq"

    def get_data(self, seq: str = None, **kwargs):
        if not seq:
            raise ConfigurationError("regseq needs --seq")
        return [self.polynomial(t) for t in split_polynomials(seq)]

    def process_data(self, seq: str = None, **kwargs) -> Report:
        sequence = self.get_data(seq)
        report = self.new_report()
        result = is_regular_sequence(sequence)
        report.add(
            "regular-sequence",
            "regular-sequence",
            result.regular,
            detail=None if result.regular else f"element {result.failing_index} is a zero divisor",
        )
        report.add("system-of-parameters", "homogeneous-system-of-parameters", is_system_of_parameters(sequence))
        return report
