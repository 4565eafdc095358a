from .evaluation import (
    block_coefficient,
    block_value_tensor,
    contract_except,
    evaluate,
)
from .generators import diagonal_form, gaussian_form, hadamard_form, sign_form
from .io import form_from_dict, form_to_dict, load_form, save_form
from .multilinear import MultilinearForm

__all__ = [
    "MultilinearForm",
    "evaluate",
    "contract_except",
    "block_coefficient",
    "block_value_tensor",
    "gaussian_form",
    "sign_form",
    "diagonal_form",
    "hadamard_form",
    "form_to_dict",
    "form_from_dict",
    "save_form",
    "load_form",
]
