import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline

from oddhit.estimators import CohitQuotient, GLInvariants


def test_quotient_fit_attributes():
    q = CohitQuotient(h=2, p=3, m=18).fit()
    assert (q.dim_, q.rank_, q.n_features_in_) == (4, 15, 19)
    assert q.representatives_ == [(8, 10), (7, 11), (1, 17), (17, 1)]
    assert list(q.get_feature_names_out()) == ["e_1", "e_2", "e_3", "e_4"]


def test_transform_kills_hit_and_lifts():
    q = CohitQuotient(h=3, p=3, m=13).fit()
    H = q.hit_matrix_.T.astype(np.int64)
    assert not q.transform(H).any()
    assert q.is_hit(H).all()
    eye = np.eye(q.dim_, dtype=np.int64)
    assert (q.transform(q.inverse_transform(eye)) == eye).all()
    rng = np.random.default_rng(0)
    X = rng.integers(-5, 5, size=(7, q.n_features_in_))
    assert (q.transform(X) == q.transform(X % 3)).all()
    assert q.transform(X[0]).shape == (1, q.dim_)


def test_validation():
    with pytest.raises(NotFittedError):
        CohitQuotient().transform(np.zeros((1, 1)))
    with pytest.raises(ValueError):
        CohitQuotient(h=2, p=4, m=3).fit()
    with pytest.raises(ValueError):
        CohitQuotient(h=2, p=3, m=3, order="random").fit()
    with pytest.raises(ValueError):
        CohitQuotient(h=2, p=3, m=3, mode="cartan").fit()
    with pytest.raises(TypeError):
        CohitQuotient(h=2.5, p=3, m=3).fit()
    with pytest.raises(ValueError):
        CohitQuotient(h=2, p=3, m=3, prefer=[(1, 1)]).fit()
    q = CohitQuotient(h=2, p=3, m=5).fit()
    with pytest.raises(ValueError):
        q.transform(np.zeros((2, 5)))
    with pytest.raises(ValueError):
        q.transform(np.full((1, 6), 0.5))


def test_params_and_clone():
    q = CohitQuotient(h=3, p=5, m=21, mode="full", prefer=[(7, 7, 7)])
    assert q.get_params()["mode"] == "full"
    c = clone(q)
    assert c.get_params() == q.get_params() and not hasattr(c, "dim_")
    q.set_params(mode="edge_sum")
    assert q.mode == "edge_sum"


def test_pipeline_compatible():
    pipe = make_pipeline(CohitQuotient(h=2, p=3, m=5))
    X = np.eye(6, dtype=np.int64)
    assert pipe.fit_transform(X).shape == (6, 4)


def test_gl_invariants():
    g = GLInvariants(h=2, p=3, m=18, twist="det_inverse").fit()
    assert g.dimension_ == 1 and g.components_.shape == (1, 4)
    assert set(g.supports_[0]) == {(7, 11), (1, 17), (17, 1)}
    assert g.contains(g.components_ * 2).all()
    assert not g.contains(np.eye(4, dtype=np.int64)).any()
    g0 = GLInvariants(h=2, p=3, m=18).fit()
    assert g0.dimension_ == 0 and g0.components_.shape == (0, 4)
    assert list(g0.contains(np.zeros((1, 4), dtype=np.int64))) == [True]
    with pytest.raises(ValueError):
        GLInvariants(twist="det").fit()
