"""Time-to-correct regression: ridge (closed form) and linear SVR (dual
coordinate descent), with persistence and the multi-seed evaluation
protocol."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from peet import gec_metrics
from peet.errors import DimensionMismatch, NameMismatch, SingularSystem, TooFewRows
from peet.features import (
    FeatureLevel,
    FeatureVector,
    Standardizer,
    apply_standardizer,
    fit_standardizer,
    standardize_matrix,
)

KIND_RIDGE = "ridge"
KIND_SVR = "svr"

SVR_TOL = 1e-3
SVR_MAX_EPOCHS = 10_000


@dataclass(frozen=True)
class PeetModel:
    kind: str
    weights: tuple[float, ...]
    intercept: float
    level: FeatureLevel
    standardizer: Standardizer
    hyper: dict
    feature_names: tuple[str, ...]
    converged: bool = True

    def weight_array(self) -> np.ndarray:
        return np.asarray(self.weights, dtype=float)


@dataclass(frozen=True)
class EvalReport:
    mae: float
    pearson_r: float
    n: int


def _check_xy(X, y):
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    if X.ndim != 2:
        raise DimensionMismatch(f"X must be 2-dimensional, got shape {X.shape}")
    if y.ndim != 1 or y.shape[0] != X.shape[0]:
        raise DimensionMismatch(f"y shape {y.shape} does not match X rows {X.shape[0]}")
    return X, y


def train_ridge(
    X,
    y,
    alpha: float = 1.0,
    feature_names=None,
    level: FeatureLevel = FeatureLevel.TYPE25,
    standardizer: Standardizer | None = None,
) -> PeetModel:
    """Least squares with an L2 penalty on the weights; the intercept is not
    penalized. Solved in closed form via the augmented normal equations."""
    X, y = _check_xy(X, y)
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    n, d = X.shape
    A = np.empty((d + 1, d + 1))
    A[:d, :d] = X.T @ X + alpha * np.eye(d)
    A[:d, d] = X.sum(axis=0)
    A[d, :d] = X.sum(axis=0)
    A[d, d] = n
    b = np.concatenate([X.T @ y, [y.sum()]])
    try:
        solution = np.linalg.solve(A, b)
    except np.linalg.LinAlgError as exc:
        raise SingularSystem(str(exc)) from exc
    weights, intercept = solution[:d], float(solution[d])
    return PeetModel(
        kind=KIND_RIDGE,
        weights=tuple(weights),
        intercept=intercept,
        level=level,
        standardizer=standardizer or _identity_standardizer(feature_names, d),
        hyper={"alpha": alpha},
        feature_names=_names_or_default(feature_names, d),
    )


def train_svr(
    X,
    y,
    C: float = 1.0,
    epsilon: float = 0.1,
    feature_names=None,
    level: FeatureLevel = FeatureLevel.TYPE25,
    standardizer: Standardizer | None = None,
    tol: float = SVR_TOL,
    max_epochs: int = SVR_MAX_EPOCHS,
) -> PeetModel:
    """Epsilon-insensitive linear SVR trained by dual coordinate descent.

    Features and target are centered and the dual is solved without an
    intercept; the intercept is then induced from the means, which is exact
    for data a linear function can interpolate and a close approximation
    otherwise. Dual variables are cycled in a fixed order for determinism.
    If the maximum projected-gradient violation does not fall below ``tol``
    within ``max_epochs`` epochs, the best iterate is returned with
    ``converged=False``.
    """
    X, y = _check_xy(X, y)
    if C <= 0:
        raise ValueError("C must be positive")
    if epsilon < 0:
        raise ValueError("epsilon must be nonnegative")
    n, d = X.shape
    y_mean = float(y.mean())
    x_mean = X.mean(axis=0)
    Xc = X - x_mean
    yc = y - y_mean

    beta = np.zeros(n)
    w = np.zeros(d)
    q_diag = np.einsum("ij,ij->i", Xc, Xc)
    converged = False
    for _ in range(max_epochs):
        max_violation = 0.0
        for i in range(n):
            qi = q_diag[i]
            if qi == 0.0:
                continue
            x_i = Xc[i]
            g = float(x_i @ w) - yc[i]
            b_i = beta[i]
            gp = g + epsilon
            gn = g - epsilon
            if b_i == 0.0:
                violation = max(0.0, -gp, gn)
            elif b_i > 0.0:
                violation = max(0.0, gp) if b_i >= C else abs(gp)
            else:
                violation = max(0.0, -gn) if b_i <= -C else abs(gn)
            if violation > max_violation:
                max_violation = violation

            u = b_i - g / qi
            shift = epsilon / qi
            if u > shift:
                new = u - shift
            elif u < -shift:
                new = u + shift
            else:
                new = 0.0
            new = min(max(new, -C), C)
            if new != b_i:
                w += (new - b_i) * x_i
                beta[i] = new
        if max_violation < tol:
            converged = True
            break

    return PeetModel(
        kind=KIND_SVR,
        weights=tuple(w),
        intercept=y_mean - float(x_mean @ w),
        level=level,
        standardizer=standardizer or _identity_standardizer(feature_names, d),
        hyper={"C": C, "epsilon": epsilon},
        feature_names=_names_or_default(feature_names, d),
        converged=converged,
    )


def _names_or_default(names, d) -> tuple[str, ...]:
    if names is None:
        return tuple(f"x{i}" for i in range(d))
    names = tuple(names)
    if len(names) != d:
        raise DimensionMismatch(f"{len(names)} names for {d} columns")
    return names


def _identity_standardizer(names, d) -> Standardizer:
    names = _names_or_default(names, d)
    return Standardizer(names, (0.0,) * d, (1.0,) * d, (False,) * d)


def predict(m: PeetModel, v: FeatureVector) -> float:
    """Predicted seconds for one feature vector (may be negative; consumers
    clamp for display if desired)."""
    if v.names != m.feature_names:
        raise NameMismatch("feature names do not match the model")
    x = apply_standardizer(m.standardizer, v)
    return float(x @ m.weight_array() + m.intercept)


def predict_rows(m: PeetModel, rows) -> np.ndarray:
    rows = list(rows)
    if not rows:
        return np.zeros(0)
    for r in rows:
        if r.names != m.feature_names:
            raise NameMismatch("feature names do not match the model")
    X = standardize_matrix(m.standardizer, rows)
    return X @ m.weight_array() + m.intercept


def evaluate(m: PeetModel, pairs) -> EvalReport:
    """MAE and Pearson r of model predictions against recorded seconds."""
    pairs = list(pairs)
    if len(pairs) < 2:
        raise TooFewRows("need at least 2 evaluation pairs")
    rows = [p[0] for p in pairs]
    y = np.array([p[1] for p in pairs], dtype=float)
    yhat = predict_rows(m, rows)
    mae = float(np.mean(np.abs(yhat - y)))
    r = gec_metrics.pearson(yhat.tolist(), y.tolist())
    return EvalReport(mae=mae, pearson_r=r, n=len(pairs))


def standardized_coefficients(m: PeetModel) -> list[tuple[str, float]]:
    """(name, weight) pairs sorted by decreasing magnitude, ties by name."""
    pairs = list(zip(m.feature_names, m.weights))
    pairs.sort(key=lambda p: (-abs(p[1]), p[0]))
    return pairs


def fit_on_features(
    rows,
    seconds,
    kind: str = KIND_RIDGE,
    alpha: float = 1.0,
    C: float = 1.0,
    epsilon: float = 0.1,
) -> PeetModel:
    """Fit a standardizer on raw feature rows, then train the requested model
    on the standardized matrix."""
    rows = list(rows)
    std = fit_standardizer(rows)
    X = standardize_matrix(std, rows)
    y = np.asarray(list(seconds), dtype=float)
    common = dict(
        feature_names=rows[0].names, level=rows[0].level, standardizer=std
    )
    if kind == KIND_RIDGE:
        return train_ridge(X, y, alpha=alpha, **common)
    if kind == KIND_SVR:
        return train_svr(X, y, C=C, epsilon=epsilon, **common)
    raise ValueError(f"unknown model kind {kind!r}")


def evaluate_over_seeds(
    rows,
    seconds,
    kind: str = KIND_RIDGE,
    seeds=range(42, 92),
    ratio: float = 0.8,
    alpha: float = 1.0,
    C: float = 1.0,
    epsilon: float = 0.1,
):
    """Repeat shuffled train/test splits over the given seeds.

    Returns (per-seed EvalReports, final model, summary dict with mean/std
    of r and MAE).
    """
    import random

    rows = list(rows)
    seconds = list(seconds)
    if len(rows) != len(seconds):
        raise DimensionMismatch("rows and seconds must have equal length")
    reports = []
    last_model = None
    for seed in seeds:
        indices = list(range(len(rows)))
        random.Random(seed).shuffle(indices)
        cut = int(ratio * len(indices))
        train_idx, test_idx = indices[:cut], indices[cut:]
        last_model = fit_on_features(
            [rows[i] for i in train_idx],
            [seconds[i] for i in train_idx],
            kind=kind,
            alpha=alpha,
            C=C,
            epsilon=epsilon,
        )
        reports.append(
            evaluate(last_model, [(rows[i], seconds[i]) for i in test_idx])
        )
    rs = [rep.pearson_r for rep in reports]
    maes = [rep.mae for rep in reports]
    summary = {
        "runs": len(reports),
        "r_mean": _mean(rs),
        "r_std": _std(rs),
        "mae_mean": _mean(maes),
        "mae_std": _std(maes),
    }
    return reports, last_model, summary


def _mean(xs):
    return sum(xs) / len(xs)


def _std(xs):
    mu = _mean(xs)
    return math.sqrt(sum((x - mu) ** 2 for x in xs) / len(xs))


def to_json(m: PeetModel) -> str:
    return json.dumps(
        {
            "kind": m.kind,
            "level": m.level.value,
            "feature_names": list(m.feature_names),
            "means": list(m.standardizer.means),
            "stds": list(m.standardizer.stds),
            "binary_mask": list(m.standardizer.binary_mask),
            "weights": list(m.weights),
            "intercept": m.intercept,
            "hyper": m.hyper,
            "converged": m.converged,
        },
        indent=2,
    )


def from_json(text: str) -> PeetModel:
    obj = json.loads(text)
    names = tuple(obj["feature_names"])
    std = Standardizer(
        names,
        tuple(obj["means"]),
        tuple(obj["stds"]),
        tuple(bool(b) for b in obj["binary_mask"]),
    )
    return PeetModel(
        kind=obj["kind"],
        weights=tuple(obj["weights"]),
        intercept=float(obj["intercept"]),
        level=FeatureLevel(obj["level"]),
        standardizer=std,
        hyper=dict(obj["hyper"]),
        feature_names=names,
        converged=bool(obj.get("converged", True)),
    )
