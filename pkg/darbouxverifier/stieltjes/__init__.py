from darbouxverifier.stieltjes.integrator import Integrator, Monotonicity
from darbouxverifier.stieltjes.indefinite import build_indefinite_integral
from darbouxverifier.stieltjes.checks import (
    ReductionReport,
    TransferReport,
    reduce_check,
    stieltjes_enclosure,
    transfer_check,
)
