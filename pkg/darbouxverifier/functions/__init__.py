from darbouxverifier.functions.oracles import OracleKind
from darbouxverifier.functions.real_function import (
    RangeEnclosure,
    RealFunction,
    compose_with,
    eval_range,
    is_nonnegative,
    is_positive,
    multiply,
    negate,
    reflect,
    restrict,
)
from darbouxverifier.functions.gallery import Gallery, GalleryEntry, resolve
