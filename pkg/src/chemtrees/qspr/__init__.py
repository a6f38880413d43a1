"""Boiling-point regressions of alcohols: descriptors, presets, fitting and datasets."""

from .dataset import DataRecord, DatasetError, load_dataset, parse_record, save_dataset
from .fitting import (
    InsufficientDataError,
    PrecisionStats,
    RankDeficiencyError,
    design_matrix,
    fit,
    precision,
)
from .models import (
    ACTIVE_FLAGS,
    BASIC,
    PRESETS,
    REGRESSION_I,
    REGRESSION_II,
    DescriptorVector,
    RegressionModel,
    descriptors,
    get_preset,
    load_model,
    normalize_flag,
    parse_active,
    predict,
    save_model,
)

__all__ = [
    "ACTIVE_FLAGS",
    "BASIC",
    "PRESETS",
    "REGRESSION_I",
    "REGRESSION_II",
    "DataRecord",
    "DatasetError",
    "DescriptorVector",
    "InsufficientDataError",
    "PrecisionStats",
    "RankDeficiencyError",
    "RegressionModel",
    "descriptors",
    "design_matrix",
    "fit",
    "get_preset",
    "load_dataset",
    "load_model",
    "normalize_flag",
    "parse_active",
    "parse_record",
    "precision",
    "predict",
    "save_dataset",
    "save_model",
]
