"""Error of the closed-form estimates against the numerical inverse."""
import math
from dataclasses import dataclass, field, replace
from typing import NamedTuple

from ._validation import LN2
from .approximations import Method, invert_improved, invert_kimura_crow
from .exact import SolverConfig, invert_exact
from .exceptions import ConfigError, NonConvergenceError

__all__ = [
    "SweepConfig",
    "ErrorRow",
    "MethodSummary",
    "ErrorSummary",
    "Table",
    "grid",
    "sweep",
    "summarize",
    "figure_data",
    "sweep_table",
]

_ESTIMATORS = {
    Method.KIMURA_CROW: invert_kimura_crow,
    Method.IMPROVED: invert_improved,
}
_METHOD_ORDER = (Method.KIMURA_CROW, Method.IMPROVED)

# floor for the relative-error denominator
_TINY = 1e-300


def _canonical_methods(methods):
    chosen = {Method(m) for m in methods}
    if Method.EXACT in chosen:
        raise ConfigError("'exact' is the reference, not an estimate to sweep")
    if not chosen:
        raise ConfigError("at least one method is required")
    return tuple(m for m in _METHOD_ORDER if m in chosen)


@dataclass(frozen=True)
class SweepConfig:
    """Grid over the entropy domain, in nats."""

    h_min: float = 0.0
    h_max: float = LN2
    step: float = 1e-4
    methods: tuple = _METHOD_ORDER
    relative: bool = False
    solver: SolverConfig = field(default_factory=SolverConfig)

    def __post_init__(self):
        for name in ("h_min", "h_max", "step"):
            if not math.isfinite(getattr(self, name)):
                raise ConfigError(f"{name} must be finite")
        if not 0.0 <= self.h_min < self.h_max <= LN2:
            raise ConfigError(
                f"need 0 <= h_min < h_max <= ln 2, got "
                f"h_min={self.h_min!r}, h_max={self.h_max!r}"
            )
        if not 0.0 < self.step < self.h_max - self.h_min:
            raise ConfigError(
                f"step must be positive and smaller than h_max - h_min, "
                f"got {self.step!r}"
            )
        object.__setattr__(self, "methods", _canonical_methods(self.methods))


@dataclass(frozen=True)
class ErrorRow:
    h: float
    p_exact_lower: float
    p_lower: dict
    abs_err: dict
    rel_err: dict = None


class MethodSummary(NamedTuple):
    max_abs_err: float
    argmax_h: float
    mean_abs_err: float


@dataclass(frozen=True)
class ErrorSummary:
    by_method: dict

    def __getitem__(self, method):
        return self.by_method[Method(method)]

    def __iter__(self):
        return iter(self.by_method)


class Table(NamedTuple):
    columns: tuple
    rows: list

    def column(self, name):
        i = self.columns.index(name)
        return [row[i] for row in self.rows]


def grid(cfg):
    """Points ``h_min + k * step`` up to ``h_max``, which is always included."""
    n = math.floor((cfg.h_max - cfg.h_min) / cfg.step)
    points = [cfg.h_min + k * cfg.step for k in range(n + 1)]
    while points and points[-1] > cfg.h_max:
        points.pop()
    # a final point within rounding of h_max is h_max itself
    if cfg.h_max - points[-1] <= 1e-9 * cfg.step:
        points[-1] = cfg.h_max
    else:
        points.append(cfg.h_max)
    return points


def _row(h, cfg):
    try:
        exact = invert_exact(h, config=cfg.solver).lower
    except NonConvergenceError as exc:
        raise NonConvergenceError(f"at h={h!r}: {exc}", h=h) from exc
    p_lower, abs_err = {}, {}
    for m in cfg.methods:
        p_lower[m] = _ESTIMATORS[m](h, branch="lower")
        abs_err[m] = abs(p_lower[m] - exact)
    rel_err = None
    if cfg.relative:
        rel_err = {m: abs_err[m] / max(exact, _TINY) for m in cfg.methods}
    return ErrorRow(h, exact, p_lower, abs_err, rel_err)


def sweep(cfg=None):
    """Evaluate every configured estimate on the grid, ascending in h."""
    cfg = SweepConfig() if cfg is None else cfg
    return [_row(h, cfg) for h in grid(cfg)]


def summarize(rows):
    if not rows:
        raise ValueError("cannot summarize an empty sweep")
    out = {}
    for m in rows[0].abs_err:
        errs = [r.abs_err[m] for r in rows]
        i = max(range(len(errs)), key=errs.__getitem__)
        out[m] = MethodSummary(errs[i], rows[i].h, math.fsum(errs) / len(errs))
    return ErrorSummary(out)


def sweep_table(rows):
    """Flatten a sweep: h, absolute errors, lower-branch p values, then
    relative errors when they were computed."""
    methods = list(rows[0].abs_err) if rows else list(_METHOD_ORDER)
    relative = bool(rows) and rows[0].rel_err is not None
    columns = ["h"]
    columns += [f"abs_err_{m.short}" for m in methods]
    columns += ["p_exact_lower"] + [f"p_{m.short}_lower" for m in methods]
    if relative:
        columns += [f"rel_err_{m.short}" for m in methods]
    table = []
    for r in rows:
        values = [r.h]
        values += [r.abs_err[m] for m in methods]
        values += [r.p_exact_lower] + [r.p_lower[m] for m in methods]
        if relative:
            values += [r.rel_err[m] for m in methods]
        table.append(tuple(values))
    return Table(tuple(columns), table)


def figure_data(which, cfg=None):
    """Data behind the branch plot (``which=1``) or the error plot (``2``)."""
    cfg = SweepConfig() if cfg is None else cfg
    if which not in (1, 2):
        raise ConfigError(f"which must be 1 or 2, got {which!r}")
    rows = sweep(replace(cfg, methods=_METHOD_ORDER, relative=False))
    kc, imp = Method.KIMURA_CROW, Method.IMPROVED
    if which == 1:
        columns = ("h", "p_exact_lower", "p_exact_upper", "p_kc_lower",
                   "p_kc_upper", "p_improved_lower", "p_improved_upper")
        table = [
            (r.h, r.p_exact_lower, 1.0 - r.p_exact_lower,
             r.p_lower[kc], 1.0 - r.p_lower[kc],
             r.p_lower[imp], 1.0 - r.p_lower[imp])
            for r in rows
        ]
    else:
        columns = ("h", "abs_err_kc", "abs_err_improved")
        table = [(r.h, r.abs_err[kc], r.abs_err[imp]) for r in rows]
    return Table(columns, table)
