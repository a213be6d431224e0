from darbouxverifier.partition.interval import ClosedInterval, OrientedInterval
from darbouxverifier.partition.partition import (
    Partition,
    common_refinement,
    concatenate,
    induced_partition,
    mesh,
    refine,
    uniform_partition,
)
