"""Type aliases for the chemtrees package."""

from collections.abc import Sequence
from typing import TypeAlias

from torch import Tensor

Scalar: TypeAlias = int | float | Tensor
Vector: TypeAlias = Sequence[int] | Sequence[float] | Tensor
Edge: TypeAlias = tuple[int, int]
