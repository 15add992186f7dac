"""Kostant t-root systems, parabolic subalgebras and invariants of symmetric algebras."""

from .classical import make_datum, t_root_system
from .instances import invariants_up_to_degree
from .positivity import find_parabolic_containing, saturate, zero_in_positive_span
from .rootsystems import generate_roots

__all__ = [
    "find_parabolic_containing",
    "generate_roots",
    "invariants_up_to_degree",
    "make_datum",
    "saturate",
    "t_root_system",
    "zero_in_positive_span",
]
