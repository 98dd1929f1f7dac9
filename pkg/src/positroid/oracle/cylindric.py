"""Cylindric Schur polynomials by enumerating semistandard cylindric tableaux.

Entries lie in ``1..k``. Rows weakly increase to the right and columns
strictly increase upward, where neighbours are taken on the cylinder: the cell
above row 0 is a cell of row ``k - 1`` shifted ``m`` columns to the right.
"""

from __future__ import annotations

from ..cylindric import CylindricSkewShape
from ..errors import BudgetExceeded
from ..schurring import SchurVector, partitions_of, schur_expand_from_monomials

__all__ = ["DEFAULT_SHAPE_BUDGET", "cylindric_weights", "cylindric_schur"]

DEFAULT_SHAPE_BUDGET = 14


def cylindric_weights(shape: CylindricSkewShape, k: int) -> dict:
    """Number of semistandard fillings for every content (as a k-tuple)."""
    cells = list(shape.cells)
    pos = {cell: i for i, cell in enumerate(cells)}
    # constraints against earlier cells: (index, relation) with relation
    # "le" meaning T[earlier] <= T[cell] and so on
    checks = [[] for _ in cells]

    def link(a, b, rel):
        # constraint T[a] rel T[b]; attach it to whichever is filled later
        ia, ib = pos[shape.canonical(a)], pos[shape.canonical(b)]
        if ia == ib:
            raise AssertionError("cell is its own neighbour; shape is degenerate")
        if ia < ib:
            checks[ib].append((ia, rel, False))
        else:
            checks[ia].append((ib, rel, True))

    members = set(cells)
    for r, c in cells:
        right = shape.canonical((r, c + 1))
        if right in members:
            link((r, c), right, "le")
        above = shape.canonical((r - 1, c))
        if above in members:
            link((r, c), above, "lt")

    values = [0] * len(cells)
    counts = {}
    content = [0] * k

    def ok(i, v):
        for j, rel, flipped in checks[i]:
            a, b = (v, values[j]) if flipped else (values[j], v)
            if rel == "le" and not a <= b:
                return False
            if rel == "lt" and not a < b:
                return False
        return True

    def rec(i):
        if i == len(cells):
            key = tuple(content)
            counts[key] = counts.get(key, 0) + 1
            return
        for v in range(1, k + 1):
            if ok(i, v):
                values[i] = v
                content[v - 1] += 1
                rec(i + 1)
                content[v - 1] -= 1
        values[i] = 0

    rec(0)
    return counts


def cylindric_schur(shape: CylindricSkewShape, k=None,
                    budget: int = DEFAULT_SHAPE_BUDGET) -> SchurVector:
    """``s_Θ(x_1..x_k)`` in the Schur basis, without column truncation."""
    k = shape.k if k is None else k
    if len(shape) > budget:
        raise BudgetExceeded("cells", budget, len(shape))
    weights = cylindric_weights(shape, k)
    table = {}
    for mu in partitions_of(len(shape), k):
        c = weights.get(tuple(mu) + (0,) * (k - len(mu)), 0)
        if c:
            table[mu] = c
    return SchurVector(k, None, schur_expand_from_monomials(table, k))
