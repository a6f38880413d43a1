import pytest
import torch

import chemtrees


@pytest.fixture(autouse=True)
def restore_chemtrees_defaults():
    original_max_degree = chemtrees.get_default_max_degree()
    original_tolerance = chemtrees.get_default_tolerance()
    original_dtype = chemtrees.get_default_dtype()

    chemtrees.set_default_dtype(torch.float64)

    try:
        yield
    finally:
        chemtrees.set_default_max_degree(original_max_degree)
        chemtrees.set_default_tolerance(original_tolerance)
        chemtrees.set_default_dtype(original_dtype)
