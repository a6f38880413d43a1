"""Weak majorization of non-negative vectors."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import torch

from ..utils import initialize_tensor, tolerance_or_default

if TYPE_CHECKING:
    from ..types import Vector

VALID_RELATIONS = ("strict", "weak_equal_sorted", "incomparable")


@dataclass(frozen=True)
class MajorizationVerdict:
    """Outcome of comparing two vectors.

    Attributes:
        relation (str): ``"strict"`` when the majorization holds and the sorted vectors differ,
            ``"weak_equal_sorted"`` when the sorted vectors coincide, ``"incomparable"`` otherwise.
        prefix_gap (int | None): Length of the first sorted prefix whose sum violates the majorization, or
            `None` when it holds.

    """

    relation: str
    prefix_gap: int | None = None

    def __post_init__(self) -> None:
        if self.relation not in VALID_RELATIONS:
            msg = f"Expected relation to be one of {VALID_RELATIONS}, but got {self.relation!r}."
            raise ValueError(msg)

    @property
    def holds(self) -> bool:
        return self.relation != "incomparable"


def weak_majorize(x: Vector, y: Vector, tolerance: float | None = None) -> MajorizationVerdict:
    r"""Test whether ``x`` weakly majorizes ``y``, written :math:`x \succeq y`.

    With both vectors sorted ascending, :math:`x \succeq y` when every prefix sum of ``x`` is at most the
    matching prefix sum of ``y``:

    .. math::
        \sum_{i=1}^{k} x_{(i)} \le \sum_{i=1}^{k} y_{(i)}, \quad k = 1, \dots, n.

    Args:
        x (Vector): Non-negative vector.
        y (Vector): Non-negative vector of the same length.
        tolerance (float | None): Relative tolerance on prefix sums. Default: if `None`, uses a global
            default.

    Returns:
        MajorizationVerdict: The relation of ``x`` to ``y``.

    """
    tol = tolerance_or_default(tolerance)
    xs = initialize_tensor("x", x, is_non_negative=True).reshape(-1)
    ys = initialize_tensor("y", y, is_non_negative=True).reshape(-1)
    if xs.numel() != ys.numel():
        msg = f"Expected vectors of equal length, but got {xs.numel()} and {ys.numel()}."
        raise ValueError(msg)
    if xs.numel() == 0:
        return MajorizationVerdict("weak_equal_sorted")

    x_sorted = torch.sort(xs).values
    y_sorted = torch.sort(ys).values
    x_prefix = torch.cumsum(x_sorted, 0)
    y_prefix = torch.cumsum(y_sorted, 0)
    slack = tol * torch.clamp(torch.maximum(x_prefix.abs(), y_prefix.abs()), min=1.0)
    violated = torch.nonzero(x_prefix > y_prefix + slack)
    if violated.numel():
        return MajorizationVerdict("incomparable", int(violated[0].item()) + 1)

    scale = tol * torch.clamp(torch.maximum(x_sorted.abs(), y_sorted.abs()), min=1.0)
    if torch.all((x_sorted - y_sorted).abs() <= scale):
        return MajorizationVerdict("weak_equal_sorted")
    return MajorizationVerdict("strict")
