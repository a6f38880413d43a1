"""Sufficient conditions under which every minimizer of the ad-hoc index C is extremely branched."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from ..indices import DegreeCostVector

LOW_ORDER_LIMIT = 17
"""Largest order for which the weakened degree-2/degree-3 condition suffices."""


@dataclass(frozen=True)
class ConditionReport:
    """Strict inequalities on the degree costs ``c`` and the weight ``b3`` of the second Zagreb index.

    Attributes:
        cond_23 (bool): :math:`c(1) + c(4) + 18 b_3 < c(2) + c(3)`.
        cond_22 (bool): :math:`c(1) + c(3) + 8 b_3 < 2 c(2)`.
        cond_33 (bool): :math:`c(2) + c(4) + 8 b_3 < 2 c(3)`.
        cond_23bis (bool): :math:`c(1) + c(4) + 17 b_3 < c(2) + c(3)`, enough for orders up to 17.

    """

    cond_23: bool
    cond_22: bool
    cond_33: bool
    cond_23bis: bool

    @property
    def theorem1_applies(self) -> bool:
        """All three conditions for arbitrary order hold."""
        return self.cond_23 and self.cond_22 and self.cond_33

    @property
    def theorem1_applies_n_le_17(self) -> bool:
        """The weakened conditions for orders up to 17 hold."""
        return self.cond_23bis and self.cond_22 and self.cond_33

    def applies_to(self, order: int) -> bool:
        """Return whether the conditions guarantee extremely branched minimizers at ``order``."""
        return self.theorem1_applies_n_le_17 if order <= LOW_ORDER_LIMIT else self.theorem1_applies

    def to_dict(self) -> dict[str, bool]:
        return {
            **asdict(self),
            "theorem1_applies": self.theorem1_applies,
            "theorem1_applies_n_le_17": self.theorem1_applies_n_le_17,
        }


def check_c_conditions(costs: DegreeCostVector, b3: float) -> ConditionReport:
    """Evaluate the four conditions for degree costs ``costs`` and Zagreb weight ``b3``.

    Example:
        >>> check_c_conditions(DegreeCostVector(0.0, 14.534, 20.172, 17.015), 1.0).theorem1_applies_n_le_17
        True

    """
    c1, c2, c3, c4 = costs.as_tuple()
    return ConditionReport(
        cond_23=c1 + c4 + 18 * b3 < c2 + c3,
        cond_22=c1 + c3 + 8 * b3 < 2 * c2,
        cond_33=c2 + c4 + 8 * b3 < 2 * c3,
        cond_23bis=c1 + c4 + 17 * b3 < c2 + c3,
    )
