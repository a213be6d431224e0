from dataclasses import dataclass

from darbouxverifier.aux.errors import ArgumentError


@dataclass(frozen=True)
class ClosedInterval:
    a: float
    b: float

    def __post_init__(self):
        a, b = float(self.a), float(self.b)
        if not a <= b:
            raise ArgumentError("interval endpoints out of order: [{}, {}]".format(a, b))
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def length(self):
        return self.b - self.a

    @property
    def midpoint(self):
        return 0.5 * (self.a + self.b)

    @property
    def is_degenerate(self):
        return self.a == self.b

    def contains(self, x):
        return self.a <= x <= self.b

    def contains_interval(self, other):
        return self.a <= other.a and other.b <= self.b

    def split(self, x):
        return ClosedInterval(self.a, x), ClosedInterval(x, self.b)

    def to_list(self):
        return [self.a, self.b]


@dataclass(frozen=True)
class OrientedInterval:
    """Interval traversed from `start` to `end`; reversed traversal flips integrals."""

    start: float
    end: float

    def __post_init__(self):
        object.__setattr__(self, "start", float(self.start))
        object.__setattr__(self, "end", float(self.end))

    @property
    def sign(self):
        return 1 if self.start <= self.end else -1

    @property
    def carrier(self):
        return ClosedInterval(min(self.start, self.end), max(self.start, self.end))

    @property
    def is_degenerate(self):
        return self.start == self.end

    def reversed(self):
        return OrientedInterval(self.end, self.start)

    def to_list(self):
        return [self.start, self.end]
