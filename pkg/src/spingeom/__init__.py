"""Exact Pauli, hypercomplex and finite-geometry computations for one, two and N spins."""

from .geometry import (
    IncidenceStructure,
    are_isomorphic,
    design_params,
    dual,
    find_configuration,
    gq22_check,
    is_projective_plane,
    operator_lines,
    symplectic_polar_space,
)
from .hypercomplex import Octonion, Quaternion, fano_from_table, oct_mul, quat_mul
from .liealg import StructureConstantAlgebra, make_so4
from .pauli import PauliString, PhasedPauli, commutes, multiply, parse_pauli
from .subalgebra import OperatorSet, classify, heptads, pentads

__version__ = "0.1.0"
