"""Exact computation of pi_3 of pseudo-projective spaces as pi_1-modules."""

__version__ = "0.1.0"

from .ring import GroupRingElement, TensorElement, norm_element  # noqa: E402,F401
from .pi3 import assemble_pi3, compute_H3, compute_pi2, special_x  # noqa: E402,F401
from .ext import tau_class  # noqa: E402,F401
