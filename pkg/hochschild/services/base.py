"""
Base service class to handle one subcommand
"""

import logging
from abc import ABC, abstractmethod
from typing import List

from hochschild.algebra.poly import Ambient, Polynomial
from hochschild.exceptions import ConfigurationError
from hochschild.models import JobConfig, Report
from hochschild.utils import split_polynomials

logger = logging.getLogger(__name__)


class BaseService(ABC):
    """
    Base class for services
    """

    SUBCOMMAND = None
    ALIASES = ()

    def __init__(self, config: JobConfig):
        self.config = config
        self.ambient: Ambient = config.ambient()

    def polynomial(self, text: str = None) -> Polynomial:
        return self.config.polynomial(text)

    def ideal_generators(self, spec: str = "gradient") -> List[Polynomial]:
        """
        Generators named by an ideal spec.

        - gradient: the partial derivatives of f
        - jacobian2: f with its partial derivatives in all variables but the first
        - custom:p1,p2,...: explicit polynomials
        """
        spec = spec.strip()
        if spec.startswith("custom:"):
            texts = split_polynomials(spec[len("custom:"):])
            if not texts:
                raise ConfigurationError("custom ideal needs at least one polynomial")
            return [self.polynomial(t) for t in texts]
        f = self.polynomial()
        if spec == "gradient":
            return f.gradient()
        if spec == "jacobian2":
            return [f] + f.gradient()[1:]
        raise ConfigurationError(f"unknown ideal {spec!r}; expected gradient, jacobian2 or custom:<polynomials>")

    def new_report(self) -> Report:
        return Report(subcommand=self.SUBCOMMAND, config=self.config)

    @abstractmethod
    def get_data(self, **kwargs):
        """
        Build the algebraic inputs of the subcommand from the configuration.
        """

    @abstractmethod
    def process_data(self, **kwargs) -> Report:
        pass

    def run(self, **kwargs) -> Report:
        logger.info("running %s with f=%s over %s", self.SUBCOMMAND, self.config.f, self.ambient)
        report = self.process_data(**kwargs)
        logger.info("%s finished: %d results, %d failing", self.SUBCOMMAND, len(report.results), len(report.failures))
        return report
