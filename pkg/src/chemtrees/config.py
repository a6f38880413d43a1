"""Methods for getting and setting default values for max_degree, tolerance, and dtype."""

import torch


class Config:
    """Global configuration values for chemtrees."""

    max_degree: int = 4
    tolerance: float = 1e-9
    dtype: torch.dtype = torch.double


def get_default_max_degree() -> int:
    """Get the current default ``max_degree`` value."""
    return Config.max_degree


def set_default_max_degree(value: int) -> None:
    """Set the default ``max_degree`` value.

    Args:
        value (int): The default maximum vertex degree :math:`\\Delta`. Must be at least 2.

    Example:
        >>> chemtrees.set_default_max_degree(3)

    """
    if isinstance(value, bool) or not isinstance(value, int):
        msg = f"Expected value to be an int, but got {type(value).__name__}."
        raise TypeError(msg)
    if value < 2:
        msg = f"Expected value to be at least 2, but got {value}."
        raise ValueError(msg)
    Config.max_degree = value


def get_default_tolerance() -> float:
    """Get the current default ``tolerance`` value."""
    return Config.tolerance


def set_default_tolerance(value: float) -> None:
    """Set the default relative ``tolerance`` used when comparing real values.

    Args:
        value (float): The default tolerance. Must be positive and smaller than 1.

    Example:
        >>> chemtrees.set_default_tolerance(1e-12)

    """
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        msg = f"Expected value to be a float, but got {type(value).__name__}."
        raise TypeError(msg)
    if not 0 < value < 1:
        msg = f"Expected value to be in (0, 1), but got {value}."
        raise ValueError(msg)
    Config.tolerance = float(value)


def get_default_dtype() -> torch.dtype:
    """Get the current default ``dtype`` value."""
    return Config.dtype


def set_default_dtype(value: torch.dtype) -> None:
    """Set the default ``dtype`` value of weight tensors.

    Args:
        value (torch.dtype): The default dtype.

    Example:
        >>> chemtrees.set_default_dtype(torch.float32)

    """
    if not isinstance(value, torch.dtype):
        msg = f"Expected value to be a torch.dtype, but got {type(value).__name__}."
        raise TypeError(msg)
    if value not in (torch.float32, torch.float64):
        msg = f"Expected value to be torch.float32 or torch.float64, but got {value}."
        raise ValueError(msg)
    Config.dtype = value
