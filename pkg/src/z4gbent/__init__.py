"""Self-orthogonal and self-dual Z4-codes built from generalized bent functions."""

from .boolfn import BooleanFunction, GeneralizedBooleanFunction, enumerate_bent, is_bent, is_gbent
from .construct import build_cf, circulant_code, closed_form, extend_type_II, gray_image_code
from .kernels import BACKEND
from .z4code import Z4Code
from .z4vec import Z4Vector

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BooleanFunction",
    "GeneralizedBooleanFunction",
    "Z4Code",
    "Z4Vector",
    "build_cf",
    "circulant_code",
    "closed_form",
    "enumerate_bent",
    "extend_type_II",
    "gray_image_code",
    "is_bent",
    "is_gbent",
]
