"""Forward entropy computations.

Everything is computed in nats; bits are obtained by conversion. The
convention ``0 * log 0 = 0`` is used throughout.
"""
import math
from dataclasses import dataclass
from enum import Enum

from ._validation import (
    LN2,
    check_distribution,
    check_nonnegative,
    check_positive_int,
    check_probability,
)

__all__ = [
    "Unit",
    "EntropyValue",
    "binary_entropy",
    "entropy_general",
    "sequence_count",
    "convert",
    "to_nats",
]


class Unit(str, Enum):
    NATS = "nats"
    BITS = "bits"


@dataclass(frozen=True)
class EntropyValue:
    """An entropy magnitude tagged with its unit."""

    value: float
    unit: Unit = Unit.NATS

    def __post_init__(self):
        object.__setattr__(self, "value", check_nonnegative(self.value, "value"))
        object.__setattr__(self, "unit", Unit(self.unit))

    def __float__(self):
        return self.value

    def to(self, unit):
        return convert(self, unit)


def _from_nats(h, unit):
    return h if Unit(unit) is Unit.NATS else h / LN2


def to_nats(h, unit=Unit.NATS):
    """Return ``h`` in nats.

    ``h`` may be a plain number, interpreted in ``unit``, or an
    :class:`EntropyValue`, whose own unit takes precedence.
    """
    if isinstance(h, EntropyValue):
        return h.value if h.unit is Unit.NATS else h.value * LN2
    h = check_nonnegative(h)
    return h if Unit(unit) is Unit.NATS else h * LN2


def convert(h, target):
    """Convert an :class:`EntropyValue` to ``target`` units."""
    target = Unit(target)
    if not isinstance(h, EntropyValue):
        raise TypeError("convert expects an EntropyValue")
    if h.unit is target:
        return h
    if target is Unit.NATS:
        return EntropyValue(h.value * LN2, target)
    return EntropyValue(h.value / LN2, target)


def _binary_entropy_nats(p):
    if p == 0.0 or p == 1.0:
        return 0.0
    # 1 - p is exact for p >= 1/2, so folding makes H(p) == H(1 - p) there
    if p > 0.5:
        p = 1.0 - p
    h = -(p * math.log(p) + (1.0 - p) * math.log1p(-p))
    return min(h, LN2)


def binary_entropy(p, unit=Unit.NATS):
    """Entropy of a Bernoulli(p) source, ``-p log p - (1-p) log(1-p)``.

    >>> binary_entropy(0.5, "bits")
    1.0
    """
    p = check_probability(p)
    return _from_nats(_binary_entropy_nats(p), unit)


def entropy_general(probabilities, unit=Unit.NATS):
    """Entropy ``-sum p_k log p_k`` of a discrete distribution.

    Probabilities summing to one within 1e-9 are renormalized first.
    """
    ps = check_distribution(probabilities)
    h = -math.fsum(p * math.log(p) for p in ps if p > 0.0)
    return _from_nats(max(h, 0.0), unit)


def sequence_count(h, length, unit=Unit.NATS):
    """Expected number of length-``length`` sequences, ``exp(length * H)``."""
    length = check_positive_int(length, "length")
    h = to_nats(h, unit)
    try:
        return math.exp(length * h)
    except OverflowError:
        raise OverflowError(
            f"exp({length} * {h!r}) overflows a double"
        ) from None


