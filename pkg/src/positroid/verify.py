"""Sweeps that cross-check the tree against the brute-force oracles.

Each sweep returns the number of cases it checked and raises
:class:`VerificationFailure` naming the first failing input.
"""

from __future__ import annotations

import random

from .affperm import (
    Diagram,
    bounded_permutations,
    code,
    in_t_bound,
    in_t_bound_by_diagram,
    inverse,
    normalize_to_bound,
    rothe_diagram,
)
from .bridge import three_row_decompose, toric_gw_expand
from .cylindric import TWELVE_CELL_SHAPE, CylindricSkewShape, toric_shapes
from .lstree import expand
from .oracle.cylindric import cylindric_schur
from .oracle.schur_module import schur_module_character
from .oracle.stanley import DEFAULT_LENGTH_BUDGET, affine_stanley_truncated
from .schurring import omega_dual

__all__ = ["VerificationFailure", "BUNDLED_SHAPES", "affperm_sweep",
           "oracle_sweep", "omega_sweep", "toric_sweep", "three_row_sweep",
           "run_all"]


class VerificationFailure(AssertionError):
    pass


BUNDLED_SHAPES = (
    TWELVE_CELL_SHAPE,
    CylindricSkewShape(2, 4, "VVHH", "HHVV", 0),
    CylindricSkewShape(2, 5, "VHVHH", "HVHVH", 0),
    CylindricSkewShape(3, 6, "VHVHVH", "HVHVHV", 0),
)


def _all_bounded(max_n):
    for n in range(1, max_n + 1):
        for k in range(n + 1):
            for f in bounded_permutations(k, n):
                yield f, k


def affperm_sweep(max_n: int = 5) -> int:
    count = 0
    for f, k in _all_bounded(max_n):
        d = rothe_diagram(f)
        if len(d) != f.length:
            raise VerificationFailure(f"|D(f)| != length for window {f}")
        sizes = d.row_sizes()
        if tuple(sizes.get(i, 0) for i in range(1, f.n + 1)) != code(f):
            raise VerificationFailure(f"row sizes differ from the code for window {f}")
        if rothe_diagram(inverse(f)) != d.transpose():
            raise VerificationFailure(f"D(f^-1) is not the transpose for window {f}")
        if not d.is_toric():
            raise VerificationFailure(f"D(f) is not toric for window {f}")
        for j in range(f.n + 1):
            if in_t_bound(f, j) != in_t_bound_by_diagram(f, j):
                raise VerificationFailure(f"boundedness tests disagree: window {f}, k={j}")
        count += 1
    return count


def oracle_sweep(max_n: int = 5, budget: int = DEFAULT_LENGTH_BUDGET,
                 threads: int = 1) -> int:
    count = 0
    for f, k in _all_bounded(max_n):
        got = expand(f, k, threads=threads).result
        if got != affine_stanley_truncated(f, k, budget=budget):
            raise VerificationFailure(f"tree and oracle disagree: window {f}, k={k}")
        if not got or not got.is_schur_positive():
            raise VerificationFailure(f"expansion not Schur positive: window {f}, k={k}")
        count += 1
    return count


def omega_sweep(max_n: int = 5) -> int:
    count = 0
    for f, k in _all_bounded(max_n):
        dual = normalize_to_bound(inverse(f), f.n - k)
        if omega_dual(expand(f, k).result) != expand(dual, f.n - k).result:
            raise VerificationFailure(f"omega duality fails: window {f}, k={k}")
        count += 1
    return count


def toric_sweep(shapes=BUNDLED_SHAPES) -> int:
    for shape in shapes:
        got = dict(toric_gw_expand(shape))
        if got != dict(cylindric_schur(shape)):
            raise VerificationFailure(f"toric pipeline disagrees on {shape.to_text()}")
    return len(shapes)


def random_three_row_diagram(rng: random.Random, max_cells: int = 8,
                             max_cols: int = 6) -> Diagram:
    size = rng.randint(1, max_cells)
    cells = set()
    while len(cells) < size:
        cells.add((rng.randint(1, 3), rng.randint(1, max_cols)))
    return Diagram(frozenset(cells))


def three_row_sweep(samples: int = 50, seed: int = 0, budget: int = 8) -> int:
    rng = random.Random(seed)
    for _ in range(samples):
        d = random_three_row_diagram(rng, max_cells=budget)
        if three_row_decompose(d) != dict(schur_module_character(d, 3, budget=budget)):
            raise VerificationFailure(
                "three-row decomposition disagrees on diagram " + d.to_text().replace("\n", "; "))
    return samples


def run_all(max_n: int = 5, budget: int = DEFAULT_LENGTH_BUDGET, threads: int = 1) -> int:
    """Run every sweep in order; returns the number of permutations checked."""
    affperm_sweep(max_n)
    checked = oracle_sweep(max_n, budget, threads)
    omega_sweep(max_n)
    toric_sweep()
    toric_sweep([s for m in range(1, 4) for s in toric_shapes(3, m, 7)])
    three_row_sweep()
    return checked
