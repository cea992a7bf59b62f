"""Services for hh and structural."""

from hochschild.algebra.koszul import COHOMOLOGY, build_complex, dimension_profile, structural_spaces
from hochschild.models import Report
from hochschild.services.base import BaseService
from hochschild.utils import to_jsonable


class HochschildService(BaseService):
    """
    Dimension profile of HH^p (cohomology) or HH_p (homology) of k[z]/<f>.
    """

    SUBCOMMAND = "hh"

    def get_data(self, kind: str = COHOMOLOGY, p: int = 0, **kwargs):
        return build_complex(self.polynomial(), kind, max(self.config.pmax, p + 1))

    def process_data(self, kind: str = COHOMOLOGY, p: int = 0, **kwargs) -> Report:
        C = self.get_data(kind, p)
        profile = dimension_profile(C, p, self.config.smax, self.config.window, self.config.workers)
        report = self.new_report()
        name = f"HH^{p}" if kind == COHOMOLOGY else f"HH_{p}"
        report.add(
            name,
            f"{kind}-profile",
            to_jsonable(profile),
            detail=None if profile.stabilized else f"not stable through degree {profile.truncation}",
        )
        return report


class StructuralService(BaseService):
    SUBCOMMAND = "structural"

    def get_data(self, **kwargs):
        return structural_spaces(self.polynomial(), self.config.smax, self.config.window)

    def process_data(self, **kwargs) -> Report:
        report = self.new_report()
        for name, profile in self.get_data().as_dict().items():
            report.add(name, "structural-spaces", to_jsonable(profile))
        return report
