from darbouxverifier.substitution.classify import ClassifiedPartition, classify, eta_partition
from darbouxverifier.substitution.oriented import image_points, oriented_integral, signed_integral
from darbouxverifier.substitution.ledger import (
    BoundLedger,
    LedgerRow,
    VerificationPartition,
    build_verification_partition,
    substituted_integrand,
    verify_ledger,
)
from darbouxverifier.substitution.verdict import (
    SubstitutionVerdict,
    change_of_variable,
    default_eta,
    fits_integrator_share,
    integrator_tolerance,
    substitution_ledger,
)
from darbouxverifier.substitution.converse import ConverseReport, converse_check
from darbouxverifier.substitution.monotone import (
    MeshLevel,
    MonotoneReport,
    mean_value_points,
    monotone_unbounded_check,
    options_from_config,
)
