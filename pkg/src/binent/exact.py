"""Numerical inversion of the binary entropy function.

There is no closed form for the inverse, so it is found by root finding on
``[0, 1/2]``, where H is strictly increasing: bisection down to a narrow
bracket, then safeguarded Newton steps using ``dH/dp = ln((1-p)/p)``.
"""
import math
import sys
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from ._validation import LN2, check_binary_entropy
from .entropy import Unit, _binary_entropy_nats, to_nats
from .exceptions import ConfigError, NonConvergenceError

__all__ = ["Branch", "InversionResult", "SolverConfig", "invert_exact"]

_EPS = sys.float_info.epsilon

# width at which the bisection phase hands over to Newton
_BRACKET_WIDTH = 1e-6

# convergence also requires |H(p) - h| below this
_RESIDUAL_TOL = 5e-14

# Newton is abandoned for a bisection step below this slope
_MIN_SLOPE = 1e-12


class Branch(str, Enum):
    LOWER = "lower"
    UPPER = "upper"
    BOTH = "both"


class InversionResult(NamedTuple):
    """The two preimages ``p <= 1/2 <= 1 - p`` of an entropy value."""

    lower: float
    upper: float

    def select(self, branch):
        branch = Branch(branch)
        if branch is Branch.BOTH:
            return self
        return self.lower if branch is Branch.LOWER else self.upper


@dataclass(frozen=True)
class SolverConfig:
    abs_tol_p: float = 1e-14
    max_bisection_iters: int = 200
    max_newton_iters: int = 50

    def __post_init__(self):
        if not (math.isfinite(self.abs_tol_p) and self.abs_tol_p > 0):
            raise ConfigError(f"abs_tol_p must be positive, got {self.abs_tol_p!r}")
        for name in ("max_bisection_iters", "max_newton_iters"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise ConfigError(f"{name} must be an integer >= 1, got {value!r}")


DEFAULT_SOLVER = SolverConfig()


def _solve_lower(h, cfg):
    if h == 0.0:
        return 0.0
    if h == LN2:
        return 0.5

    lo, hi = 0.0, 0.5
    n = 0
    while hi - lo > _BRACKET_WIDTH:
        if n == cfg.max_bisection_iters:
            raise NonConvergenceError(
                f"bisection did not bracket the root of H(p) = {h!r} "
                f"within {n} iterations",
                h=h,
            )
        mid = 0.5 * (lo + hi)
        f = _binary_entropy_nats(mid) - h
        if f == 0.0:
            return mid
        if f < 0.0:
            lo = mid
        else:
            hi = mid
        n += 1

    tol = cfg.abs_tol_p
    # residuals this small are rounding noise; near p = 1/2 they are all
    # that limits the attainable accuracy in p
    noise = 4.0 * _EPS * h
    x = 0.5 * (lo + hi)
    for _ in range(cfg.max_newton_iters):
        f = _binary_entropy_nats(x) - h
        if abs(f) <= noise:
            return x
        if f < 0.0:
            lo = x
        else:
            hi = x
        small_residual = abs(f) <= _RESIDUAL_TOL

        slope = math.log1p(-x) - math.log(x)
        x_new = x - f / slope if abs(slope) >= _MIN_SLOPE else math.nan
        if lo < x_new < hi:
            if small_residual and abs(x_new - x) <= tol:
                return x_new
        else:
            if small_residual and hi - lo <= tol:
                return x
            x_new = 0.5 * (lo + hi)
        x = x_new

    raise NonConvergenceError(
        f"Newton refinement for H(p) = {h!r} did not converge within "
        f"{cfg.max_newton_iters} iterations",
        h=h,
    )


def invert_exact(h, unit=Unit.NATS, config=None):
    """Solve ``binary_entropy(p) == h`` for both preimages.

    Parameters
    ----------
    h : float or EntropyValue
        Entropy to invert; must lie in ``[0, ln 2]`` nats (``[0, 1]`` bits).
    unit : Unit, default "nats"
        Unit of ``h`` when it is a plain number.
    config : SolverConfig, optional
        Tolerance and iteration caps.

    Returns
    -------
    InversionResult
        ``(p, 1 - p)`` with ``p <= 1/2``.

    Raises
    ------
    DomainError
        If ``h`` is negative or above the maximum entropy.
    NonConvergenceError
        If the iteration caps are exhausted.
    """
    cfg = DEFAULT_SOLVER if config is None else config
    h = check_binary_entropy(to_nats(h, unit))
    p = _solve_lower(h, cfg)
    return InversionResult(p, 1.0 - p)
