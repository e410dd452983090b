import numpy as np
import pytest

from oracles import ridge_oracle
from peet.errors import DimensionMismatch, NameMismatch, TooFewRows
from peet.features import (
    FeatureLevel,
    FeatureVector,
    Standardizer,
    feature_names,
    fit_standardizer,
    standardize_matrix,
)
from peet.model import (
    EvalReport,
    PeetModel,
    evaluate,
    evaluate_over_seeds,
    fit_on_features,
    from_json,
    predict,
    predict_rows,
    standardized_coefficients,
    to_json,
    train_ridge,
    train_svr,
)


def synthetic(n=200, d=10, seed=0, noise=0.0):
    rng = np.random.default_rng(seed)
    X = rng.normal(size=(n, d))
    w = rng.normal(scale=3.0, size=d)
    b = rng.normal(scale=5.0)
    y = X @ w + b + noise * rng.normal(size=n)
    return X, y, w, b


def stationarity_residual(X, y, m):
    w = m.weight_array()
    r = X @ w + m.intercept - y
    return np.max(np.abs(X.T @ r + m.hyper["alpha"] * w))


class TestRidge:
    def test_recovers_planted_solution(self):
        X, y, w, b = synthetic(n=50, d=2, seed=3)
        m = train_ridge(X, y, alpha=1e-8)
        assert np.allclose(m.weight_array(), w, atol=1e-6)
        assert abs(m.intercept - b) < 1e-6

    def test_matches_independent_oracle(self):
        for seed in range(5):
            X, y, _, _ = synthetic(n=60, d=6, seed=seed, noise=0.5)
            for alpha in (1e-6, 1.0, 100.0):
                m = train_ridge(X, y, alpha=alpha)
                w_ref, b_ref = ridge_oracle(X, y, alpha)
                assert np.allclose(m.weight_array(), w_ref, atol=1e-8)
                assert abs(m.intercept - b_ref) < 1e-8

    def test_stationarity(self):
        for seed in range(5):
            X, y, _, _ = synthetic(n=80, d=5, seed=seed, noise=1.0)
            m = train_ridge(X, y, alpha=1.0)
            assert stationarity_residual(X, y, m) < 1e-8

    def test_constant_target(self):
        X, _, _, _ = synthetic(n=40, d=3, seed=1)
        m = train_ridge(X, np.full(40, 7.0), alpha=1.0)
        assert np.all(np.abs(m.weight_array()) < 1e-8)
        assert abs(m.intercept - 7.0) < 1e-8

    def test_large_alpha_limit(self):
        X, y, _, _ = synthetic(n=40, d=3, seed=2)
        m = train_ridge(X, y, alpha=1e12)
        assert np.all(np.abs(m.weight_array()) < 1e-6)
        assert abs(m.intercept - y.mean()) < 1e-3

    def test_alpha_must_be_positive(self):
        X, y, _, _ = synthetic(n=10, d=2, seed=4)
        with pytest.raises(ValueError):
            train_ridge(X, y, alpha=0.0)

    def test_dimension_mismatch(self):
        X, y, _, _ = synthetic(n=10, d=2, seed=5)
        with pytest.raises(DimensionMismatch):
            train_ridge(X, y[:-1])


class TestSvr:
    def test_noise_free_predictions_within_tube(self):
        X, y, _, _ = synthetic(n=100, d=4, seed=7)
        m = train_svr(X, y, C=1.0, epsilon=0.1)
        assert m.converged
        resid = np.abs(X @ m.weight_array() + m.intercept - y)
        assert np.max(resid) <= 0.1 + 1e-2

    def test_holdout_agreement_with_ridge(self):
        X, y, _, _ = synthetic(n=240, d=10, seed=8)
        train, test = slice(0, 200), slice(200, 240)
        svr = train_svr(X[train], y[train])
        ridge = train_ridge(X[train], y[train], alpha=1e-8)
        svr_pred = X[test] @ svr.weight_array() + svr.intercept
        ridge_pred = X[test] @ ridge.weight_array() + ridge.intercept
        from peet.gec_metrics import pearson

        assert pearson(svr_pred.tolist(), y[test].tolist()) >= 0.99
        assert np.mean(np.abs(svr_pred - ridge_pred)) < 0.1

    def test_tiny_c_shrinks_weights(self):
        X, y, _, _ = synthetic(n=50, d=3, seed=9)
        m = train_svr(X, y, C=1e-9)
        assert np.all(np.abs(m.weight_array()) < 1e-5)

    def test_epsilon_zero_large_c_approaches_least_squares(self):
        X, y, _, _ = synthetic(n=80, d=4, seed=10)
        svr = train_svr(X, y, C=1e4, epsilon=0.0)
        ridge = train_ridge(X, y, alpha=1e-8)
        from peet.gec_metrics import pearson

        svr_pred = X @ svr.weight_array() + svr.intercept
        ridge_pred = X @ ridge.weight_array() + ridge.intercept
        assert pearson(svr_pred.tolist(), ridge_pred.tolist()) >= 0.999

    def test_against_sklearn_reference(self):
        sklearn_svm = pytest.importorskip("sklearn.svm")
        X, y, _, _ = synthetic(n=150, d=5, seed=11, noise=2.0)
        ours = train_svr(X, y, C=1.0, epsilon=0.1)
        ref = sklearn_svm.LinearSVR(
            C=1.0, epsilon=0.1, loss="epsilon_insensitive", max_iter=50_000, tol=1e-6
        ).fit(X, y)
        from peet.gec_metrics import pearson

        ours_pred = X @ ours.weight_array() + ours.intercept
        ref_pred = ref.predict(X)
        assert pearson(ours_pred.tolist(), ref_pred.tolist()) >= 0.999


def toy_model(weights=(2.0, -1.0), intercept=5.0):
    names = ("f0", "f1")
    std = Standardizer(names, (0.0, 0.0), (1.0, 1.0), (False, False))
    return PeetModel(
        kind="ridge",
        weights=tuple(weights),
        intercept=intercept,
        level=FeatureLevel.COARSE4,
        standardizer=std,
        hyper={"alpha": 1.0},
        feature_names=names,
    )


def vec(*values):
    return FeatureVector(("f0", "f1"), tuple(values), FeatureLevel.COARSE4)


class TestPredict:
    def test_linear_form(self):
        m = toy_model()
        assert predict(m, vec(1.0, 1.0)) == 2.0 - 1.0 + 5.0

    def test_mean_vector_gives_intercept(self):
        rows = [vec(1.0, 4.0), vec(3.0, 0.0), vec(2.0, 2.0)]
        m = fit_on_features(rows, [1.0, 2.0, 3.0])
        mean_row = vec(2.0, 2.0)
        assert abs(predict(m, mean_row) - m.intercept) < 1e-9

    def test_affine_in_standardized_space(self):
        m = toy_model()
        v1, v2 = vec(1.0, 2.0), vec(3.0, -1.0)
        for a in (0.0, 0.3, 1.0):
            blended = vec(
                a * v1.values[0] + (1 - a) * v2.values[0],
                a * v1.values[1] + (1 - a) * v2.values[1],
            )
            expected = a * predict(m, v1) + (1 - a) * predict(m, v2)
            assert predict(m, blended) == pytest.approx(expected)

    def test_name_mismatch(self):
        m = toy_model()
        wrong = FeatureVector(("g0", "g1"), (1.0, 1.0), FeatureLevel.COARSE4)
        with pytest.raises(NameMismatch):
            predict(m, wrong)


class TestEvaluate:
    def test_perfect_predictor(self):
        m = toy_model(weights=(1.0, 0.0), intercept=0.0)
        pairs = [(vec(x, 0.0), float(x)) for x in (1, 2, 5, 9)]
        report = evaluate(m, pairs)
        assert report.mae == 0.0
        assert report.pearson_r == pytest.approx(1.0)
        assert report.n == 4

    def test_anticorrelated(self):
        m = toy_model(weights=(-1.0, 0.0), intercept=0.0)
        pairs = [(vec(x, 0.0), float(x)) for x in (1, 2, 5)]
        assert evaluate(m, pairs).pearson_r == pytest.approx(-1.0)

    def test_too_few_rows(self):
        m = toy_model()
        with pytest.raises(TooFewRows):
            evaluate(m, [(vec(1.0, 1.0), 1.0)])

    def test_mae_shuffle_invariant(self):
        m = toy_model()
        pairs = [(vec(i, -i), float(i * 2)) for i in range(6)]
        forward = evaluate(m, pairs)
        backward = evaluate(m, list(reversed(pairs)))
        assert forward.mae == backward.mae


class TestCoefficients:
    def test_planted_ordering(self):
        rng = np.random.default_rng(21)
        X = rng.normal(size=(300, 3))
        y = X @ np.array([3.0, 1.0, 0.0]) + 2.0
        m = train_ridge(X, y, alpha=1e-6, feature_names=("a", "b", "c"))
        names = [n for n, _ in standardized_coefficients(m)]
        assert names == ["a", "b", "c"]

    def test_ties_sorted_by_name(self):
        m = toy_model(weights=(1.0, -1.0))
        assert [n for n, _ in standardized_coefficients(m)] == ["f0", "f1"]


class TestPersistence:
    def test_round_trip_preserves_predictions(self):
        rows = [vec(1.0, 4.0), vec(3.0, 0.0), vec(2.0, 2.0), vec(0.0, 1.0)]
        y = [4.0, 1.0, 2.5, 3.0]
        for kind in ("ridge", "svr"):
            m = fit_on_features(rows, y, kind=kind)
            m2 = from_json(to_json(m))
            for r in rows:
                assert abs(predict(m, r) - predict(m2, r)) <= 1e-12
            assert m2.kind == m.kind
            assert m2.level == m.level
            assert m2.hyper == m.hyper


class TestSeedProtocol:
    def test_deterministic_and_counted(self):
        rng = np.random.default_rng(33)
        names = feature_names(FeatureLevel.COARSE4)
        rows = [
            FeatureVector(names, tuple(rng.poisson(2.0, size=len(names)).astype(float)), FeatureLevel.COARSE4)
            for _ in range(60)
        ]
        y = [float(sum(r.values) + rng.normal()) for r in rows]
        reports1, model1, summary1 = evaluate_over_seeds(rows, y, seeds=range(42, 47))
        reports2, model2, summary2 = evaluate_over_seeds(rows, y, seeds=range(42, 47))
        assert summary1 == summary2
        assert summary1["runs"] == 5
        assert reports1 == reports2
        assert model1.weights == model2.weights

    def test_summary_fields(self):
        rng = np.random.default_rng(34)
        rows = [vec(float(i), float(i % 3)) for i in range(40)]
        y = [float(i) + rng.normal() for i in range(40)]
        _, _, summary = evaluate_over_seeds(rows, y, seeds=range(1, 4))
        for key in ("r_mean", "r_std", "mae_mean", "mae_std"):
            assert np.isfinite(summary[key])
