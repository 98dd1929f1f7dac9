"""Schur expansions of positroid classes via the bounded affine L-S tree."""

from .affperm import (
    AffinePermutation,
    Diagram,
    bounded_class,
    bounded_permutations,
    from_window,
    in_t_bound,
    parse_window,
    rothe_diagram,
)
from .bridge import (
    KBruhatInterval,
    f_from_cylindric_shape,
    f_from_interval,
    grassmannian_permutation,
    schubert_times_schur,
    three_row_decompose,
    toric_gw_expand,
)
from .cylindric import CylindricSkewShape, parse_shape
from .errors import BudgetExceeded, PositroidError
from .lstree import LsExpansion, expand, ls_children, trace
from .schurring import SchurVector

__all__ = [
    "AffinePermutation", "Diagram", "bounded_class", "bounded_permutations",
    "from_window", "in_t_bound", "parse_window", "rothe_diagram",
    "KBruhatInterval", "f_from_cylindric_shape", "f_from_interval",
    "grassmannian_permutation", "schubert_times_schur", "three_row_decompose",
    "toric_gw_expand", "CylindricSkewShape", "parse_shape", "BudgetExceeded",
    "PositroidError", "LsExpansion", "expand", "ls_children", "trace", "SchurVector",
]
