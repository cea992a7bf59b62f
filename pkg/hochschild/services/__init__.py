from .base import BaseService
from .ideals import ColonService, GroebnerService, MembershipService, NormalFormService, RegularSequenceService
from .quotients import MilnorService, StandardBasisService
from .complexes import HochschildService, StructuralService
from .verification import VerificationService

# keyed by subcommand name and by every alias
SERVICES = {
    name: service
    for service in (
        GroebnerService,
        NormalFormService,
        MembershipService,
        ColonService,
        RegularSequenceService,
        MilnorService,
        StandardBasisService,
        HochschildService,
        StructuralService,
        VerificationService,
    )
    for name in (service.SUBCOMMAND,) + service.ALIASES
}
