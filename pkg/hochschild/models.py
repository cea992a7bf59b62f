"""Data models for job configuration and reports."""

from typing import Any, List, Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from hochschild.algebra.coeff import CoefficientField
from hochschild.algebra.poly import Ambient, MonomialOrder, Polynomial
from hochschild.exceptions import HochschildError
from hochschild.settings import settings


class JobConfig(BaseModel):
    """Everything a subcommand needs to know about the ambient ring and its bounds."""

    f: str = settings.DEFAULT_F
    variables: List[str] = Field(default_factory=lambda: settings.DEFAULT_VARS.split(","))
    order: str = settings.DEFAULT_ORDER
    coeff: str = settings.DEFAULT_COEFF
    smax: int = settings.SMAX
    pmax: int = settings.PMAX
    window: int = settings.WINDOW
    workers: int = settings.WORKERS

    @field_validator("variables", mode="before")
    @classmethod
    def split_variables(cls, value):
        if isinstance(value, str):
            value = value.split(",")
        return [v.strip() for v in value if v.strip()]

    @field_validator("smax", "pmax", "window", "workers")
    @classmethod
    def positive(cls, value: int, info):
        if value < 1:
            raise ValueError(f"{info.field_name} must be positive")
        return value

    @model_validator(mode="after")
    def specs_parse(self):
        try:
            self.ambient()
        except HochschildError as error:
            raise ValueError(str(error)) from error
        return self

    def field(self) -> CoefficientField:
        return CoefficientField.parse(self.coeff)

    def ambient(self) -> Ambient:
        return Ambient(
            tuple(self.variables),
            self.field(),
            MonomialOrder.parse(self.order, self.variables),
        )

    def polynomial(self, text: Optional[str] = None) -> Polynomial:
        return self.ambient().parse(self.f if text is None else text)


Status = Literal["pass", "fail", "skipped"]


class CheckResult(BaseModel):
    """One named result; `anchor` names the statement it certifies."""

    name: str
    anchor: str
    status: Status = "pass"
    expected: Any = None
    computed: Any = None
    detail: Optional[str] = None


class Report(BaseModel):
    subcommand: str
    config: JobConfig
    results: List[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.status != "fail" for r in self.results)

    @property
    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if r.status == "fail"]

    def add(self, name: str, anchor: str, computed: Any = None, expected: Any = None, status: Status = "pass", detail: Optional[str] = None) -> CheckResult:
        result = CheckResult(name=name, anchor=anchor, status=status, expected=expected, computed=computed, detail=detail)
        self.results.append(result)
        return result
