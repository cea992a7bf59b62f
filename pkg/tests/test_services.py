import pytest
from pydantic import ValidationError

from hochschild.exceptions import ConfigurationError, InfiniteWithoutBound
from hochschild.models import JobConfig, Report
from hochschild.services import (
    SERVICES,
    ColonService,
    GroebnerService,
    HochschildService,
    MembershipService,
    MilnorService,
    NormalFormService,
    RegularSequenceService,
    StandardBasisService,
    StructuralService,
    VerificationService,
)
from hochschild.settings import Settings

from .conftest import CUBIC
from .test_groebner import GRADIENT_BASIS


def _by_name(report: Report) -> dict:
    return {r.name: r for r in report.results}


def test_settings_read_the_environment(monkeypatch):
    monkeypatch.setenv("HOCHSCHILD_SMAX", "9")
    monkeypatch.setenv("HOCHSCHILD_DEFAULT_COEFF", "Qq@3")
    settings = Settings()
    assert settings.SMAX == 9
    assert settings.DEFAULT_COEFF == "Qq@3"


def test_job_config_defaults():
    config = JobConfig()
    assert config.f == CUBIC
    assert config.variables == ["z1", "z2", "z3"]
    assert config.field().is_generic
    assert config.polynomial() == config.ambient().parse(CUBIC)


def test_job_config_splits_variables():
    assert JobConfig(variables="x, y ,w").variables == ["x", "y", "w"]


@pytest.mark.parametrize(
    "overrides",
    [{"smax": 0}, {"window": -1}, {"coeff": "R"}, {"order": "lex:z4,z1,z2"}, {"variables": "z1,q"}],
)
def test_job_config_rejects(overrides):
    with pytest.raises(ValidationError):
        JobConfig(**overrides)


def test_registry_covers_every_subcommand():
    assert set(SERVICES) == {
        "gb", "nf", "member", "colon", "regseq", "milnor", "std-basis", "hh", "structural", "verify-paper", "verify",
    }
    assert SERVICES["verify"] is SERVICES["verify-paper"] is VerificationService


def test_ideal_specs():
    service = GroebnerService(JobConfig())
    assert len(service.ideal_generators("gradient")) == 3
    f, d2, d3 = service.ideal_generators("jacobian2")
    assert f == service.polynomial()
    assert [str(p) for p in service.ideal_generators("custom:z1^2, z2")] == ["z1^2", "z2"]
    for bad in ("bogus", "custom:"):
        with pytest.raises(ConfigurationError):
            service.ideal_generators(bad)


def test_groebner_service():
    results = _by_name(GroebnerService(JobConfig()).run())
    assert results["groebner-basis"].computed == GRADIENT_BASIS
    assert results["leading-monomials"].computed[0] == "z1^2"
    assert results["quotient-dimension"].computed == 8
    assert all(r.status == "pass" for r in results.values())


def test_groebner_service_reports_infinite_quotient():
    results = _by_name(GroebnerService(JobConfig(coeff="Qq@-1")).run())
    assert results["quotient-dimension"].computed == "infinite"
    assert results["quotient-dimension"].detail


def test_normal_form_and_membership():
    config = JobConfig()
    nf = _by_name(NormalFormService(config).run(ideal="jacobian2", poly="3*z1^2*z2+3*q*z2^2*z3"))
    assert nf["normal-form"].computed == "3*q*z2^2*z3+3*q^-2*z2^2*z3"
    member = _by_name(MembershipService(config).run(poly=CUBIC))
    assert member["member"].computed is True
    with pytest.raises(ConfigurationError):
        NormalFormService(config).run()


def test_colon_service():
    config = JobConfig(coeff="Q", f="z1*z2")
    results = _by_name(ColonService(config).run(ideal="custom:z1*z2", by="z1"))
    assert results["colon-ideal"].computed == ["z2"]
    assert results["colon-equals-ideal"].computed is False


def test_regular_sequence_service():
    config = JobConfig(coeff="Q")
    results = _by_name(RegularSequenceService(config).run(seq="z1, z1*z2"))
    assert results["regular-sequence"].computed is False
    assert results["regular-sequence"].detail == "element 2 is a zero divisor"
    assert results["system-of-parameters"].computed is False
    results = _by_name(RegularSequenceService(config).run(seq="z1,z2,z3"))
    assert results["regular-sequence"].computed is True
    assert results["system-of-parameters"].computed is True


def test_milnor_service():
    results = _by_name(MilnorService(JobConfig()).run())
    assert results["dimension"].computed == 8
    assert results["standard-monomials"].computed == ["1", "z3", "z2", "z1", "z3^2", "z2*z3", "z2^2", "z3^3"]
    assert results["hilbert-function"].computed == [1, 3, 3, 1]


def test_milnor_service_at_singular_point():
    config = JobConfig(coeff="Qq@-1")
    with pytest.raises(InfiniteWithoutBound):
        MilnorService(config).run()
    results = _by_name(MilnorService(config).run(bound=2))
    assert results["dimension"].computed == "infinite"
    assert len(results["hilbert-function"].computed) == 3


def test_standard_basis_service():
    results = _by_name(StandardBasisService(JobConfig()).run(ideal="jacobian2"))
    assert results["dimension"].computed == 12
    assert results["hilbert-function"].computed == [1, 3, 4, 3, 1]


def test_hochschild_service():
    config = JobConfig(coeff="Qq@2", smax=7, window=3)
    (result,) = HochschildService(config).run(kind="cohomology", p=4).results
    assert result.name == "HH^4"
    assert result.computed["total"] == 8
    assert result.computed["stabilized"] is True
    assert result.detail is None


def test_hochschild_service_homology_zero():
    config = JobConfig(coeff="Qq@2", smax=3, window=2)
    (result,) = HochschildService(config).run(kind="homology", p=0).results
    assert result.name == "HH_0"
    assert result.computed == {"0": 1, "1": 3, "2": 6, "3": 9, "total": 19, "stabilized": False}
    assert result.detail == "not stable through degree 3"


def test_structural_service():
    report = StructuralService(JobConfig(coeff="Qq@2", smax=4, window=2)).run()
    results = _by_name(report)
    assert results["milnor"].computed["total"] == 8
    assert results["gradient_annihilator"].computed["total"] == 0


@pytest.mark.slow
def test_verification_passes_at_q2():
    report = VerificationService(JobConfig(coeff="Qq@2", smax=10, window=3)).run()
    assert report.passed, [f"{r.name}: {r.computed} != {r.expected}" for r in report.failures]
    names = {r.name for r in report.results}
    assert {"euler-identity", "milnor-number", "HH^3", "HH_4", "dot-kernel-decomposition"} <= names


@pytest.mark.slow
def test_verification_flags_a_wrong_surface():
    config = JobConfig(coeff="Qq@2", f="z1^3+z2^3+z3^3+2*q*z1*z2*z3", smax=8, window=3)
    report = VerificationService(config).run()
    assert not report.passed
    assert "key-relation-z2" in {r.name for r in report.failures}
    (failure,) = [r for r in report.failures if r.name == "key-relation-z2"]
    assert failure.anchor.startswith("key relation: z2^2*d1f =")
