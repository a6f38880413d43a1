"""Utility functions for chemtrees."""

from typing import Any

import torch
from torch import Tensor

from .config import get_default_dtype, get_default_max_degree, get_default_tolerance


def initialize_tensor(
    name: str,
    value: Any,
    *,
    length: int | None = None,
    is_scalar: bool = False,
    is_integer: bool = False,
    is_positive: bool = False,
    is_non_negative: bool = False,
) -> Tensor:
    """Initialize a tensor with validation checks.

    Args:
        name (str): The name of the tensor.
        value (Any): The value to initialize the tensor with.
        length (int | None): If given, the tensor must be one-dimensional with this many entries.
            Default: `None`.
        is_scalar (bool): If `True`, the tensor is a scalar. Default: `False`.
        is_integer (bool): If `True`, the tensor is integer. Default: `False`.
        is_positive (bool): If `True`, validates the tensor is positive. Default: `False`.
        is_non_negative (bool): If `True`, validates the tensor is non-negative. Default: `False`.

    """
    if is_scalar and length is not None:
        msg = "Expected is_scalar and length to be mutually exclusive, but both are set."
        raise ValueError(msg)

    value_dtype = torch.as_tensor(value).dtype
    if is_integer and value_dtype not in (torch.int8, torch.int16, torch.int32, torch.int64, torch.uint8):
        msg = f"Expected {name} to contain integer values, but found non-integer values."
        raise ValueError(msg)

    dtype = torch.int64 if is_integer else get_default_dtype()
    if isinstance(value, Tensor):
        tensor = value.detach().clone().to(dtype)
    else:
        tensor = torch.tensor(value, dtype=dtype)

    if is_scalar:
        if tensor.numel() != 1:
            msg = f"Expected {name} to be a scalar, but got a tensor with shape {tuple(tensor.shape)}."
            raise ValueError(msg)
        tensor = tensor.squeeze()

    if length is not None:
        if tensor.ndim != 1 or tensor.numel() != length:
            msg = f"Expected {name} to be a vector of length {length}, but got shape {tuple(tensor.shape)}."
            raise ValueError(msg)

    if not torch.all(torch.isfinite(tensor)):
        msg = f"Expected {name} to contain finite values, but found non-finite values."
        raise ValueError(msg)
    if is_positive and not torch.all(tensor > 0):
        msg = f"Expected {name} to contain positive values, but found non-positive values."
        raise ValueError(msg)
    if is_non_negative and not torch.all(tensor >= 0):
        msg = f"Expected {name} to contain non-negative values, but found negative values."
        raise ValueError(msg)

    return tensor


def max_degree_or_default(max_degree: int | None) -> int:
    """Get the maximum degree or the default value if ``max_degree`` is ``None``."""
    if max_degree is None:
        return get_default_max_degree()
    if isinstance(max_degree, bool) or not isinstance(max_degree, int):
        msg = f"Expected max_degree to be an int, but got {type(max_degree).__name__}."
        raise TypeError(msg)
    if max_degree < 2:
        msg = f"Expected max_degree to be at least 2, but got {max_degree}."
        raise ValueError(msg)
    return max_degree


def tolerance_or_default(tolerance: float | None) -> float:
    """Get the tolerance or the default value if ``tolerance`` is ``None``."""
    if tolerance is None:
        return get_default_tolerance()
    if tolerance < 0:
        msg = f"Expected tolerance to be non-negative, but got {tolerance}."
        raise ValueError(msg)
    return float(tolerance)


def is_close(a: float, b: float, tolerance: float | None = None) -> bool:
    """Return whether two real values tie, i.e. ``|a - b| <= tol * max(1, |a|, |b|)``.

    Args:
        a (float): First value.
        b (float): Second value.
        tolerance (float | None): Relative tolerance. Default: if `None`, uses a global default
            (see :meth:`chemtrees.set_default_tolerance()`).

    """
    tol = tolerance_or_default(tolerance)
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def validate_order(name: str, value: int, minimum: int, maximum: int | None = None) -> None:
    """Validate that an integer order lies in ``[minimum, maximum]``.

    Args:
        name (str): The name of the value, used for error messages.
        value (int): The value to validate.
        minimum (int): Smallest accepted value.
        maximum (int | None): Largest accepted value. Default: `None` (unbounded).

    """
    if isinstance(value, bool) or not isinstance(value, int):
        msg = f"Expected {name} to be an int, but got {type(value).__name__}."
        raise TypeError(msg)
    if value < minimum or (maximum is not None and value > maximum):
        upper = "" if maximum is None else f" and at most {maximum}"
        msg = f"Expected {name} to be at least {minimum}{upper}, but got {value}."
        raise ValueError(msg)
