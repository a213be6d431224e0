import numpy as np


class Functor(object):
    def __init__(self, func=lambda *args: None):
        assert callable(func)
        self.func = func

    def __or__(self, other):
        return Functor(lambda *args, **kwargs: other(self(*args, **kwargs)))

    def __call__(self, *args, **kwargs):
        return self.func(*args, **kwargs)


def as_array(x):
    return np.asarray(x, dtype=float)


def is_scalar(x):
    return np.ndim(x) == 0


def vectorize_scalar_callable(func):
    """Lift a scalar callable to arrays, leaving numpy-aware callables alone."""

    def vectorized(x):
        x = as_array(x)
        try:
            y = as_array(func(x))
            if y.shape == x.shape:
                return y
        except (TypeError, ValueError):
            pass
        return np.vectorize(lambda t: float(func(float(t))), otypes=[float])(x)

    return vectorized
