"""Estimator-style wrappers: fit builds the quotient, transform projects onto it."""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from . import linalg
from .cohit import build_quotient_blocks
from .glinv import TWISTS, invariants_of
from .validation import check_params, check_prefer, check_residues


class CohitQuotient(TransformerMixin, BaseEstimator):
    """Projection of degree-m polynomials onto the cohit quotient Q(P_h)_m.

    Samples are coefficient vectors over the degree-m monomials (in
    ``monomials_`` order); ``transform`` returns coordinates over the admissible
    representatives. A vector is hit iff its coordinates vanish.
    """

    def __init__(self, h=2, p=3, m=0, mode="edge_sum", order="balanced", prefer=None):
        self.h = h
        self.p = p
        self.m = m
        self.mode = mode
        self.order = order
        self.prefer = prefer

    def fit(self, X=None, y=None):
        h, p, m, mode, order = check_params(self.h, self.p, self.m, self.mode, self.order)
        prefer = check_prefer(self.prefer, h, m)
        blocks = build_quotient_blocks(h, p, m, mode, order, prefer)
        B = blocks.basis
        self.blocks_ = blocks
        self.monomials_ = list(B.rows.monomials)
        self.representatives_ = B.monomials
        self.representative_indices_ = list(B.representatives)
        self.hit_matrix_ = B.hit.matrix
        self.rank_ = B.rank
        self.dim_ = B.dim
        self.n_features_in_ = B.ambient
        return self

    def transform(self, X):
        check_is_fitted(self, "blocks_")
        X = check_residues(X, self.n_features_in_, self.blocks_.p)
        return self.blocks_.coordinates(X.T).T.astype(np.int64)

    def inverse_transform(self, Z):
        """Canonical lift: coordinates placed on the representative monomials."""
        check_is_fitted(self, "blocks_")
        Z = check_residues(Z, self.dim_, self.blocks_.p, name="Z")
        out = np.zeros((Z.shape[0], self.n_features_in_), dtype=np.int64)
        out[:, self.representative_indices_] = Z
        return out

    def is_hit(self, X) -> np.ndarray:
        return ~np.any(self.transform(X), axis=1)

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "blocks_")
        return np.array([f"e_{t}" for t in range(1, self.dim_ + 1)], dtype=object)


class GLInvariants(BaseEstimator):
    """GL(h, F_p)-fixed vectors of the cohit quotient, optionally det^{-1}-twisted.

    ``components_`` holds a kernel basis, one row per invariant, in coordinates
    over the quotient representatives.
    """

    def __init__(self, h=2, p=3, m=0, mode="edge_sum", order="balanced", prefer=None, twist="none"):
        self.h = h
        self.p = p
        self.m = m
        self.mode = mode
        self.order = order
        self.prefer = prefer
        self.twist = twist

    def fit(self, X=None, y=None):
        if self.twist not in TWISTS:
            raise ValueError(f"unknown twist {self.twist!r}; expected one of {', '.join(TWISTS)}")
        q = CohitQuotient(self.h, self.p, self.m, self.mode, self.order, self.prefer).fit()
        space = invariants_of(q.blocks_, self.twist)
        self.quotient_ = q
        self.space_ = space
        self.dimension_ = space.dimension
        d = q.dim_
        self.components_ = (np.array(space.kernel_vectors, dtype=np.int64).reshape(-1, d)
                            if space.dimension else np.zeros((0, d), dtype=np.int64))
        self.supports_ = [space.support(k) for k in range(space.dimension)]
        return self

    def contains(self, Z) -> np.ndarray:
        """Whether each row of quotient coordinates lies in the invariant span."""
        check_is_fitted(self, "components_")
        p = self.quotient_.blocks_.p
        Z = check_residues(Z, self.quotient_.dim_, p, name="Z")
        if self.dimension_ == 0:
            return ~np.any(Z, axis=1)
        C = self.components_.T
        return np.array([linalg.in_column_span(C, z, p) for z in Z])
