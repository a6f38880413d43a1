"""Boiling-point regression models of alcohols and the descriptors they use."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from ..indices import DegreeCostVector, degree_counts, oxygen_distance, second_zagreb, subroot_indicator
from ..trees import PendentRootedTree

logger = logging.getLogger(__name__)

ACTIVE_FLAGS = ("wio3", "n1", "n2", "n3", "n4", "s2", "m2")
"""Regressors a model may use, in design-matrix column order after the intercept."""

FLAG_ALIASES = {"wio_cuberoot": "wio3"}


@dataclass(frozen=True)
class DescriptorVector:
    """Descriptors of an alcohol skeleton entering the boiling-point regressions."""

    wio: int
    wio_cuberoot: float
    n1: int
    n2: int
    n3: int
    n4: int
    s2: int
    m2: int

    def value(self, flag: str) -> float:
        """Value of the regressor named by an activity flag."""
        flag = normalize_flag(flag)
        return self.wio_cuberoot if flag == "wio3" else float(getattr(self, flag))


def _cube_root(value: int) -> float:
    root = value ** (1 / 3)
    nearest = round(root)
    return float(nearest) if nearest**3 == value else root


def descriptors(tree: PendentRootedTree) -> DescriptorVector:
    """Compute the regression descriptors of a pendent-rooted tree.

    Args:
        tree (PendentRootedTree): Alcohol skeleton of order at least 3.

    Example:
        >>> descriptors(parse_tree("O(C(C))"))
        DescriptorVector(wio=3, wio_cuberoot=1.4422495703074083, n1=2, n2=1, n3=0, n4=0, s2=1, m2=4)

    """
    if not isinstance(tree, PendentRootedTree):
        msg = f"Expected a PendentRootedTree, but got {type(tree).__name__}."
        raise TypeError(msg)
    if tree.order < 3:
        msg = f"Expected a rooted tree of order at least 3, but got order {tree.order}."
        raise ValueError(msg)
    wio = oxygen_distance(tree)
    counts = degree_counts(tree)
    return DescriptorVector(
        wio=wio,
        wio_cuberoot=_cube_root(wio),
        n1=counts.n1,
        n2=counts.n2,
        n3=counts.n3,
        n4=counts.n4,
        s2=subroot_indicator(tree, 2),
        m2=second_zagreb(tree),
    )


def normalize_flag(flag: str) -> str:
    """Map an activity flag or its alias to its canonical name."""
    name = FLAG_ALIASES.get(flag, flag)
    if name not in ACTIVE_FLAGS:
        msg = f"Expected an activity flag in {ACTIVE_FLAGS}, but got {flag!r}."
        raise ValueError(msg)
    return name


def parse_active(text: str) -> frozenset[str]:
    """Parse a comma-separated list of activity flags such as ``"wio3,n2,n3,s2"``."""
    return frozenset(normalize_flag(part.strip()) for part in text.split(",") if part.strip())


@dataclass(frozen=True)
class RegressionModel:
    r"""Affine boiling-point model in °C.

    .. math::
        BP = b_0 + b_1 \mathrm{WI_O}^{1/3} + \sum_{d=1}^{4} c(d)\, n_d + b_2 S_2 + b_3 M_2

    Args:
        b0 (float): Intercept.
        b1 (float): Coefficient of the cube root of the oxygen-distance index.
        b2 (float): Coefficient of the sub-root degree-2 indicator.
        b3 (float): Coefficient of the second Zagreb index.
        c (DegreeCostVector): Coefficient of each degree count.
        active (frozenset[str]): Regressors in use; every other coefficient must be exactly zero.

    """

    b0: float
    b1: float = 0.0
    b2: float = 0.0
    b3: float = 0.0
    c: DegreeCostVector = field(default_factory=DegreeCostVector)
    active: frozenset[str] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "active", frozenset(normalize_flag(flag) for flag in self.active))
        coefficients = self.coefficients().items()
        inactive = [flag for flag, value in coefficients if flag not in self.active and value != 0]
        if inactive:
            msg = f"Expected zero coefficients for inactive regressors, but {inactive} are non-zero."
            raise ValueError(msg)

    def coefficients(self) -> dict[str, float]:
        """Coefficient of every regressor, keyed by activity flag."""
        return {
            "wio3": self.b1,
            "n1": self.c.c1,
            "n2": self.c.c2,
            "n3": self.c.c3,
            "n4": self.c.c4,
            "s2": self.b2,
            "m2": self.b3,
        }

    @classmethod
    def from_coefficients(cls, intercept: float, coefficients: dict[str, float]) -> RegressionModel:
        """Build a model from an intercept and per-flag coefficients; absent flags are inactive."""
        values = {normalize_flag(flag): float(value) for flag, value in coefficients.items()}
        costs = DegreeCostVector(*(values.get(f"n{d}", 0.0) for d in range(1, 5)))
        return cls(
            b0=float(intercept),
            b1=values.get("wio3", 0.0),
            b2=values.get("s2", 0.0),
            b3=values.get("m2", 0.0),
            c=costs,
            active=frozenset(values),
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "b0": self.b0,
            "b1": self.b1,
            "b2": self.b2,
            "b3": self.b3,
            "c": list(self.c.as_tuple()),
            "active": sorted(self.active, key=ACTIVE_FLAGS.index),
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> RegressionModel:
        missing = {"b0", "b1", "b2", "b3", "c", "active"} - set(data)
        if missing:
            msg = f"Expected model keys b0, b1, b2, b3, c and active, but {sorted(missing)} are missing."
            raise ValueError(msg)
        return cls(
            b0=float(data["b0"]),
            b1=float(data["b1"]),
            b2=float(data["b2"]),
            b3=float(data["b3"]),
            c=DegreeCostVector.from_sequence(data["c"]),
            active=frozenset(data["active"]),
        )


BASIC = RegressionModel(
    b0=35.245,
    b1=12.233,
    b2=9.170,
    b3=1.486,
    c=DegreeCostVector(0.0, 9.514, 9.380, 0.0),
    active=frozenset({"wio3", "n2", "n3", "s2", "m2"}),
)
REGRESSION_I = RegressionModel(
    b0=50.626,
    b1=0.0,
    b2=11.295,
    b3=1.0,
    c=DegreeCostVector(0.0, 14.534, 20.172, 17.015),
    active=frozenset({"n2", "n3", "n4", "s2", "m2"}),
)
REGRESSION_II = RegressionModel(
    b0=44.134,
    b1=3.851,
    b2=10.980,
    b3=0.0,
    c=DegreeCostVector(0.0, 17.727, 29.673, 36.470),
    active=frozenset({"wio3", "n2", "n3", "n4", "s2"}),
)
PRESETS = {"basic": BASIC, "reg1": REGRESSION_I, "reg2": REGRESSION_II}


def get_preset(name: str) -> RegressionModel:
    """Return the preset model ``basic``, ``reg1`` or ``reg2``."""
    if name not in PRESETS:
        msg = f"Expected a preset in {sorted(PRESETS)}, but got {name!r}."
        raise ValueError(msg)
    return PRESETS[name]


def predict(model: RegressionModel, tree: PendentRootedTree | DescriptorVector) -> float:
    """Predicted boiling point in °C.

    Example:
        >>> round(predict(BASIC, parse_tree("O(C(C))")), 3)
        77.516

    """
    values = tree if isinstance(tree, DescriptorVector) else descriptors(tree)
    return model.b0 + sum(
        coefficient * values.value(flag)
        for flag, coefficient in model.coefficients().items()
        if flag in model.active
    )


def save_model(model: RegressionModel, path: str | Path) -> None:
    """Write a model as JSON ``{b0, b1, b2, b3, c: [c1, c2, c3, c4], active: [...]}``."""
    Path(path).write_text(json.dumps(model.to_dict(), indent=2) + "\n", encoding="utf-8")
    logger.debug("Saved model to %s", path)


def load_model(path: str | Path) -> RegressionModel:
    """Read a model written by :func:`save_model`."""
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as error:
        msg = f"Expected a JSON model file, but {path} is not valid JSON: {error.msg}."
        raise ValueError(msg) from error
    if not isinstance(data, dict):
        msg = f"Expected a JSON object in {path}, but got {type(data).__name__}."
        raise ValueError(msg)
    return RegressionModel.from_dict(data)
