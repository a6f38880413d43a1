"""Named objectives that extremal search minimizes over free or pendent-rooted trees."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

from ..indices import (
    ad_hoc_c,
    first_zagreb,
    generalized_first_zagreb,
    oxygen_distance,
    second_zagreb,
    subroot_indicator,
    wiener,
)
from ..qspr import BASIC, REGRESSION_I, REGRESSION_II, RegressionModel, predict
from ..trees import ChemicalTree, PendentRootedTree


@dataclass(frozen=True)
class Objective:
    """An index to minimize.

    Attributes:
        name (str): Registry name.
        evaluate (Callable[[ChemicalTree], float]): The index.
        rooted_only (bool): Whether the index needs a pendent root.
        integer_valued (bool): Whether values compare exactly.
        refine (Callable[[ChemicalTree], int] | None): Secondary key minimized among exact ties.

    """

    name: str
    evaluate: Callable[[ChemicalTree], float]
    rooted_only: bool = False
    integer_valued: bool = True
    refine: Callable[[ChemicalTree], int] | None = None

    def __call__(self, tree: ChemicalTree) -> float:
        if self.rooted_only and not isinstance(tree, PendentRootedTree):
            msg = f"Expected a PendentRootedTree for objective {self.name!r}, but got {type(tree).__name__}."
            raise TypeError(msg)
        return self.evaluate(tree)


OBJECTIVE_NAMES = ("c", "c1", "m1", "m2", "wiener", "wio", "wio-raw", "s2", "s3", "s4", "bp0", "bp1", "bp2")


def _subroot(degree: int) -> Callable[[ChemicalTree], float]:
    return lambda tree: subroot_indicator(tree, degree)  # type: ignore[arg-type]


def _boiling_point(model: RegressionModel) -> Callable[[ChemicalTree], float]:
    return lambda tree: predict(model, tree)  # type: ignore[arg-type]


def get_objective(name: str, model: RegressionModel | None = None) -> Objective:
    """Look up an objective by name.

    The ``wio`` objective breaks ties of the oxygen-distance index by the Wiener index of the whole tree, the
    limit of the vertex-weighted Wiener index as the root weight dominates; ``wio-raw`` keeps every tie.

    Args:
        name (str): One of ``c``, ``c1``, ``m1``, ``m2``, ``wiener``, ``wio``, ``wio-raw``, ``s2``, ``s3``,
            ``s4``, ``bp0``, ``bp1``, ``bp2``.
        model (RegressionModel | None): Source of the degree costs and ``b3`` of ``c`` and ``c1``.
            Default: if `None`, uses the Regression I preset.

    """
    costs_model = REGRESSION_I if model is None else model
    if name == "c":
        return Objective(
            name, lambda tree: ad_hoc_c(tree, costs_model.c, costs_model.b3), integer_valued=False
        )
    if name == "c1":
        return Objective(
            name, lambda tree: generalized_first_zagreb(tree, costs_model.c), integer_valued=False
        )
    if name == "m1":
        return Objective(name, first_zagreb)
    if name == "m2":
        return Objective(name, second_zagreb)
    if name == "wiener":
        return Objective(name, wiener)
    if name == "wio":
        return Objective(name, oxygen_distance, rooted_only=True, refine=wiener)  # type: ignore[arg-type]
    if name == "wio-raw":
        return Objective(name, oxygen_distance, rooted_only=True)  # type: ignore[arg-type]
    if name in ("s2", "s3", "s4"):
        return Objective(name, _subroot(int(name[1])), rooted_only=True)
    presets = {"bp0": BASIC, "bp1": REGRESSION_I, "bp2": REGRESSION_II}
    if name in presets:
        return Objective(name, _boiling_point(presets[name]), rooted_only=True, integer_valued=False)
    msg = f"Expected an objective in {OBJECTIVE_NAMES}, but got {name!r}."
    raise ValueError(msg)
