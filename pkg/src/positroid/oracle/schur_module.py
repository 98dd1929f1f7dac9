"""Characters of Schur modules V[D] from ranks of Young symmetrizer images.

For a planar diagram ``D`` and ``V = C^k``, the ``mu``-weight space of
``V[D] = V^{⊗D} y_D`` is spanned by ``e_T · A · S`` where ``T`` runs over
fillings of content ``mu``, ``A`` is the column antisymmetrizer and ``S`` the
row symmetrizer. Fillings with a repeated entry in a column are killed by
``A`` and fillings that differ by column permutations give the same vector up
to sign, so it suffices to take fillings with increasing columns. After
``S`` the vector is constant on row orbits; it is stored in the basis of
orbit sums, indexed by the multiset of entries in each row.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations, permutations
from math import factorial, prod

from ..affperm import Diagram
from ..errors import BudgetExceeded
from ..schurring import SchurVector, partitions_of, schur_expand_from_monomials
from .linalg import integer_rank

__all__ = ["DEFAULT_CELL_BUDGET", "DEFAULT_MAX_K", "weight_space_dim",
           "schur_module_character"]

DEFAULT_CELL_BUDGET = 8
DEFAULT_MAX_K = 3


def _sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _column_fillings(columns, content):
    """Fillings with strictly increasing columns, as tuples of column tuples."""
    remaining = Counter({v: c for v, c in enumerate(content, start=1) if c})

    def rec(i, acc):
        if i == len(columns):
            if not +remaining:
                yield tuple(acc)
            return
        avail = sorted(v for v, c in remaining.items() if c > 0)
        for choice in combinations(avail, len(columns[i])):
            for v in choice:
                remaining[v] -= 1
            acc.append(choice)
            yield from rec(i + 1, acc)
            acc.pop()
            for v in choice:
                remaining[v] += 1

    yield from rec(0, [])


def weight_space_dim(diagram: Diagram, content) -> int:
    """Dimension of the weight space of V[D] for the given content."""
    cells = sorted(diagram.cells)
    col_keys = sorted({c for _, c in cells})
    columns = [[cell for cell in cells if cell[1] == c] for c in col_keys]
    row_keys = sorted({r for r, _ in cells})
    col_perms = [[(p, _sign(p)) for p in permutations(range(len(col)))]
                 for col in columns]

    vectors = []
    for filling in _column_fillings(columns, content):
        # expand the column antisymmetrizer as a product over columns
        terms = [({}, 1)]
        for col, entries, perms in zip(columns, filling, col_perms):
            new_terms = []
            for assign, sgn in terms:
                for p, s in perms:
                    a = dict(assign)
                    for cell, idx in zip(col, p):
                        a[cell] = entries[idx]
                    new_terms.append((a, sgn * s))
            terms = new_terms
        vec = {}
        for assign, sgn in terms:
            rows = tuple(tuple(sorted(assign[cell] for cell in cells if cell[0] == r))
                         for r in row_keys)
            stab = prod(prod(factorial(m) for m in Counter(row).values()) for row in rows)
            vec[rows] = vec.get(rows, 0) + sgn * stab
        vectors.append(vec)

    index = {}
    numbered = []
    for vec in vectors:
        numbered.append({index.setdefault(key, len(index)): v for key, v in vec.items()})
    return integer_rank(numbered)


def schur_module_character(diagram: Diagram, k: int,
                           budget: int = DEFAULT_CELL_BUDGET,
                           max_k: int = DEFAULT_MAX_K) -> SchurVector:
    """Schur expansion of ``ch V[D]`` in ``k`` variables (no column bound)."""
    if diagram.period is not None:
        diagram = diagram.torus_image()
    if len(diagram) > budget:
        raise BudgetExceeded("cells", budget, len(diagram))
    if k > max_k:
        raise BudgetExceeded("k", max_k, k)
    d = len(diagram)
    table = {}
    for mu in partitions_of(d, k):
        dim = weight_space_dim(diagram, mu)
        if dim:
            table[mu] = dim
    return SchurVector(k, None, schur_expand_from_monomials(table, k))
