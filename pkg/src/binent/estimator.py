"""scikit-learn compatible wrapper around the inverse entropy routines."""

import numpy as np
from sklearn.base import BaseEstimator, OneToOneFeatureMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted, validate_data

from .approximations import Method, invert
from .entropy import Unit, binary_entropy
from .exact import Branch, SolverConfig


class InverseBinaryEntropy(OneToOneFeatureMixin, TransformerMixin, BaseEstimator):
    """Map entropy values to Bernoulli probabilities, elementwise.

    Stateless: ``fit`` only validates parameters and records the input
    width, so the transformer can sit inside a ``Pipeline``.

    Parameters
    ----------
    method : {"improved", "kimura_crow", "kc", "exact"}, default "improved"
        Inversion procedure.
    branch : {"lower", "upper"}, default "lower"
        Which preimage to return.
    unit : {"nats", "bits"}, default "nats"
        Unit of the input entropies.
    tol : float, default 1e-14
        Absolute tolerance in p for ``method="exact"``.

    Examples
    --------
    >>> import numpy as np
    >>> InverseBinaryEntropy(method="exact").fit_transform(np.array([[np.log(2)]]))
    array([[0.5]])
    """

    def __init__(self, method="improved", branch="lower", unit="nats", tol=1e-14):
        self.method = method
        self.branch = branch
        self.unit = unit
        self.tol = tol

    def _check_params(self):
        try:
            method = Method(self.method)
            branch = Branch(self.branch)
            unit = Unit(self.unit)
        except ValueError as exc:
            raise ValueError(f"invalid parameter: {exc}") from None
        if branch is Branch.BOTH:
            raise ValueError("branch must be 'lower' or 'upper' for a transformer")
        return method, branch, unit, SolverConfig(abs_tol_p=self.tol)

    def fit(self, X, y=None):
        self._check_params()
        validate_data(self, X, dtype=np.float64)
        return self

    def transform(self, X):
        check_is_fitted(self, "n_features_in_")
        method, branch, unit, solver = self._check_params()
        X = validate_data(self, X, dtype=np.float64, reset=False)
        out = np.empty_like(X)
        for idx, h in np.ndenumerate(X):
            out[idx] = invert(float(h), method, branch, unit, solver)
        return out

    def inverse_transform(self, X):
        """Entropy of each probability, in ``unit``."""
        check_is_fitted(self, "n_features_in_")
        unit = Unit(self.unit)
        X = validate_data(self, X, dtype=np.float64, reset=False)
        out = np.empty_like(X)
        for idx, p in np.ndenumerate(X):
            out[idx] = binary_entropy(float(p), unit)
        return out

    def __sklearn_tags__(self):
        tags = super().__sklearn_tags__()
        tags.requires_fit = True
        tags.input_tags.allow_nan = False
        tags.transformer_tags.preserves_dtype = ["float64"]
        return tags
