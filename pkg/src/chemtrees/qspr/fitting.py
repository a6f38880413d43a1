"""Least-squares fitting of regression models and their precision statistics."""

from __future__ import annotations

import logging
from collections.abc import Collection, Sequence
from dataclasses import dataclass

import torch
from torch import Tensor

from .dataset import DataRecord
from .models import ACTIVE_FLAGS, RegressionModel, descriptors, normalize_flag, predict

logger = logging.getLogger(__name__)


class InsufficientDataError(ValueError):
    """Raised when there are no more records than coefficients to fit."""


class RankDeficiencyError(ValueError):
    """Raised when the design matrix does not have full column rank.

    Attributes:
        columns (tuple[str, ...]): Regressors linearly dependent on the preceding columns.

    """

    def __init__(self, message: str, columns: Sequence[str]) -> None:
        super().__init__(message)
        self.columns = tuple(columns)


@dataclass(frozen=True)
class PrecisionStats:
    """Agreement between predicted and observed boiling points."""

    correlation: float
    sd: float


def design_matrix(records: Sequence[DataRecord], active: Collection[str]) -> tuple[Tensor, list[str]]:
    """Intercept column followed by one column per active regressor, in canonical flag order."""
    flags = {normalize_flag(flag) for flag in active}
    columns = [flag for flag in ACTIVE_FLAGS if flag in flags]
    rows = []
    for record in records:
        values = descriptors(record.skeleton)
        rows.append([1.0, *(values.value(flag) for flag in columns)])
    return torch.tensor(rows, dtype=torch.float64).reshape(len(records), len(columns) + 1), columns


def _dependent_columns(matrix: Tensor, names: Sequence[str]) -> list[str]:
    dependent = []
    rank = 0
    for j in range(matrix.shape[1]):
        current = int(torch.linalg.matrix_rank(matrix[:, : j + 1]).item())
        if current == rank:
            dependent.append(names[j])
        rank = current
    return dependent


def fit(records: Sequence[DataRecord], active: Collection[str]) -> RegressionModel:
    """Fit a model by ordinary least squares.

    The system is solved through a QR factorization of the design matrix :math:`X = QR`, so that
    :math:`R\\beta = Q^\\top y` replaces the normal equations without squaring the condition number.

    Args:
        records (Sequence[DataRecord]): Observed boiling points.
        active (Collection[str]): Regressors to include besides the intercept.

    Raises:
        InsufficientDataError: If there are not more records than coefficients.
        RankDeficiencyError: If some regressor is a linear combination of the others.

    """
    matrix, columns = design_matrix(records, active)
    coefficient_count = len(columns) + 1
    if len(records) <= coefficient_count:
        msg = (
            f"Expected more than {coefficient_count} records to fit {coefficient_count} coefficients, "
            f"but got {len(records)}."
        )
        raise InsufficientDataError(msg)

    rank = int(torch.linalg.matrix_rank(matrix).item())
    logger.debug("Design matrix %s has rank %d", tuple(matrix.shape), rank)
    if rank < coefficient_count:
        dependent = _dependent_columns(matrix, ["intercept", *columns])
        msg = f"Expected a full-rank design matrix, but columns {dependent} are linearly dependent."
        raise RankDeficiencyError(msg, dependent)

    target = torch.tensor([record.bp_celsius for record in records], dtype=torch.float64)
    q, r = torch.linalg.qr(matrix)
    solution = torch.linalg.solve_triangular(r, (q.T @ target).unsqueeze(1), upper=True).squeeze(1)
    values = solution.tolist()
    return RegressionModel.from_coefficients(values[0], dict(zip(columns, values[1:])))


def precision(model: RegressionModel, records: Sequence[DataRecord]) -> PrecisionStats:
    """Pearson correlation of predictions with observations and the residual standard deviation.

    The standard deviation is :math:`\\sqrt{\\sum_i r_i^2 / (N - 1)}` over residuals :math:`r_i`.
    """
    if len(records) < 2:
        msg = f"Expected at least 2 records, but got {len(records)}."
        raise ValueError(msg)
    observed = torch.tensor([record.bp_celsius for record in records], dtype=torch.float64)
    predicted = torch.tensor([predict(model, record.skeleton) for record in records], dtype=torch.float64)
    if torch.all(observed == observed[0]):
        msg = "Expected observations with non-zero variance, but all boiling points are equal."
        raise ValueError(msg)
    if torch.all(predicted == predicted[0]):
        msg = "Expected predictions with non-zero variance, but all predictions are equal."
        raise ValueError(msg)
    correlation = float(torch.corrcoef(torch.stack([predicted, observed]))[0, 1].item())
    residuals = predicted - observed
    sd = float(torch.sqrt((residuals**2).sum() / (len(records) - 1)).item())
    return PrecisionStats(correlation=max(-1.0, min(1.0, correlation)), sd=sd)
