"""Services for milnor and std-basis."""

from hochschild.algebra.groebner import buchberger
from hochschild.algebra.quotient import hilbert_function, milnor_algebra, standard_monomials
from hochschild.models import Report
from hochschild.services.base import BaseService
from hochschild.utils import monomial_texts, to_jsonable


def _add_presentation(report: Report, Q) -> None:
    report.add("dimension", "standard-monomials", to_jsonable(Q.dimension))
    report.add("standard-monomials", "standard-monomials", monomial_texts(Q.standard_monomials, Q.ambient))
    top = Q.bound if Q.bound is not None else max((sum(m) for m in Q.standard_monomials), default=0)
    report.add("hilbert-function", "hilbert-function", hilbert_function(Q.basis_ideal, top))


class MilnorService(BaseService):
    """
    Milnor algebra k[z]/<grad f>; a non-isolated singularity is an input
    error unless --bound is given.
    """

    SUBCOMMAND = "milnor"

    def get_data(self, **kwargs):
        return self.polynomial()

    def process_data(self, bound: int = None, **kwargs) -> Report:
        report = self.new_report()
        _add_presentation(report, milnor_algebra(self.get_data(), bound))
        return report


class StandardBasisService(BaseService):
    SUBCOMMAND = "std-basis"

    def get_data(self, ideal: str = "gradient", **kwargs):
        return buchberger(self.ideal_generators(ideal))

    def process_data(self, ideal: str = "gradient", bound: int = None, **kwargs) -> Report:
        report = self.new_report()
        _add_presentation(report, standard_monomials(self.get_data(ideal), bound))
        return report
