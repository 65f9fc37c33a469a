"""Input validation helpers shared by the numerical modules."""
import math
from numbers import Integral, Real

from .exceptions import DomainError

LN2 = math.log(2.0)

# inputs this far above ln 2 are treated as ln 2 (absorbs 1-ulp overshoot)
CLAMP_EPS = 4e-16

# distributions must sum to one within this absolute tolerance
SUM_TOL = 1e-9


def _as_float(x, name):
    if isinstance(x, bool) or not isinstance(x, Real):
        raise TypeError(f"{name} must be a real number, got {type(x).__name__}")
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {x!r}")
    return x


def check_probability(p, name="p"):
    """Return ``p`` as a float, raising DomainError unless 0 <= p <= 1."""
    p = _as_float(p, name)
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"{name} must lie in [0, 1], got {p!r}")
    return p


def check_nonnegative(h, name="h"):
    h = _as_float(h, name)
    if h < 0.0:
        raise DomainError(f"{name} must be nonnegative, got {h!r}")
    return h


def check_binary_entropy(h_nats, name="h"):
    """Validate a binary entropy value in nats and clamp it to [0, ln 2].

    Values in ``(ln 2, ln 2 + CLAMP_EPS]`` are mapped to ``ln 2``; anything
    larger has no binary preimage and raises DomainError.
    """
    h = check_nonnegative(h_nats, name)
    if h > LN2:
        if h - LN2 > CLAMP_EPS:
            raise DomainError(
                f"{name}={h!r} nats exceeds the binary entropy maximum ln 2"
            )
        h = LN2
    return h


def check_distribution(probabilities):
    """Validate a discrete distribution and return it renormalized as a tuple."""
    if isinstance(probabilities, (str, bytes)):
        raise TypeError("probabilities must be a sequence of reals")
    ps = tuple(
        check_probability(p, name=f"probabilities[{i}]")
        for i, p in enumerate(probabilities)
    )
    if not ps:
        raise DomainError("a distribution needs at least one probability")
    total = math.fsum(ps)
    if abs(total - 1.0) > SUM_TOL:
        raise DomainError(f"probabilities sum to {total!r}, not 1")
    return tuple(p / total for p in ps)


def check_positive_int(n, name):
    if isinstance(n, bool) or not isinstance(n, Integral):
        raise TypeError(f"{name} must be an integer, got {type(n).__name__}")
    if n < 1:
        raise DomainError(f"{name} must be >= 1, got {n}")
    return int(n)
