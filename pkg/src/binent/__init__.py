"""Binary entropy, its numerical inverse, and closed-form inverse estimates."""
from .analysis import (
    ErrorRow,
    ErrorSummary,
    MethodSummary,
    SweepConfig,
    Table,
    figure_data,
    summarize,
    sweep,
    sweep_table,
)
from .approximations import (
    Method,
    effective_alleles,
    effective_symbols_modified,
    heterozygosity,
    invert,
    invert_improved,
    invert_kimura_crow,
)
from .entropy import (
    EntropyValue,
    Unit,
    binary_entropy,
    convert,
    entropy_general,
    sequence_count,
    to_nats,
)
from .estimator import InverseBinaryEntropy
from .exact import Branch, InversionResult, SolverConfig, invert_exact
from .exceptions import ConfigError, DomainError, NonConvergenceError

__version__ = "0.1.0"

__all__ = [
    "Branch",
    "ConfigError",
    "DomainError",
    "EntropyValue",
    "ErrorRow",
    "ErrorSummary",
    "InverseBinaryEntropy",
    "InversionResult",
    "Method",
    "MethodSummary",
    "NonConvergenceError",
    "SolverConfig",
    "SweepConfig",
    "Table",
    "Unit",
    "binary_entropy",
    "convert",
    "effective_alleles",
    "effective_symbols_modified",
    "entropy_general",
    "figure_data",
    "heterozygosity",
    "invert",
    "invert_exact",
    "invert_improved",
    "invert_kimura_crow",
    "sequence_count",
    "summarize",
    "sweep",
    "sweep_table",
    "to_nats",
]
