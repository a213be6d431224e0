from darbouxverifier.aux.enclosure import Enclosure, Rigor
from darbouxverifier.darboux.sums import (
    DarbouxSums,
    darboux_sums,
    lower_sum,
    oscillation_sum,
    upper_sum,
)
from darbouxverifier.darboux.refinement import AdaptiveRefinement, Measure, Strategy
from darbouxverifier.darboux.integrability import (
    Inconclusive,
    IntegrabilityCertificate,
    certify_integrable,
    integral_enclosure,
)
