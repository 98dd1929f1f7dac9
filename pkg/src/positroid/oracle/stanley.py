"""Affine Stanley symmetric functions by brute-force factorization.

``F~_f`` counts length-additive factorizations of ``tau^{-av(f)} f`` into
cyclically decreasing elements. Only monomials at partition weights are
computed; symmetry fills in the rest.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from ..affperm import (
    AffinePermutation,
    compose,
    identity,
    inverse,
    normalize_to_bound,
    simple_reflection,
)
from ..errors import BudgetExceeded, FullSubset, PositroidError, SizeMismatch
from ..schurring import SchurVector, partitions_of, schur_expand_from_monomials

__all__ = [
    "DEFAULT_LENGTH_BUDGET", "WeightTable", "cyclically_decreasing_from_subset",
    "affine_stanley_monomial_coeff", "weight_table", "affine_stanley_truncated",
    "count_reduced_words",
]

DEFAULT_LENGTH_BUDGET = 10


@dataclass(frozen=True)
class WeightTable:
    """Monomial coefficients of a symmetric polynomial at partition weights."""

    degree: int
    k: int
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        for mu in self.entries:
            if sum(mu) != self.degree or len(mu) > self.k:
                raise PositroidError(f"weight {mu} does not belong in the table")

    def schur_expand(self) -> dict:
        return schur_expand_from_monomials(self.entries, self.k)


def _cyclic_runs(n: int, members: frozenset) -> list:
    """Maximal runs ``a, a+1, ..., a+L-1`` (mod n) of a proper subset."""
    runs = []
    for a in sorted(members):
        if (a - 1) % n in members:
            continue
        run = [a]
        while (run[-1] + 1) % n in members:
            run.append((run[-1] + 1) % n)
        runs.append(run)
    return runs


@lru_cache(maxsize=None)
def _cyclically_decreasing(n: int, members: frozenset) -> AffinePermutation:
    f = identity(n)
    for run in _cyclic_runs(n, members):
        for i in reversed(run):
            f = compose(f, simple_reflection(n, i))
    return f


def cyclically_decreasing_from_subset(n: int, subset) -> AffinePermutation:
    """Product of ``s_i``, ``i`` in ``subset``, with ``s_{j+1}`` before ``s_j``.

    >>> cyclically_decreasing_from_subset(4, {1, 0, 3}).window
    (0, 1, 6, 3)
    """
    members = frozenset(x % n for x in subset)
    if len(members) >= n:
        raise FullSubset(f"{sorted(members)} is all of Z/{n}")
    return _cyclically_decreasing(n, members)


@lru_cache(maxsize=None)
def _decreasing_of_size(n: int, size: int) -> tuple:
    # (d_S, d_S^{-1}) for all proper S of the given size, S ordered by bitmask
    subsets = sorted(combinations(range(n), size),
                     key=lambda s: sum(1 << i for i in s))
    out = []
    for s in subsets:
        d = _cyclically_decreasing(n, frozenset(s))
        out.append((d, inverse(d)))
    return tuple(out)


def _factorizations(g: AffinePermutation, parts: tuple) -> int:
    @lru_cache(maxsize=None)
    def count(window, index):
        if index == len(parts):
            return 1 if window == tuple(range(1, g.n + 1)) else 0
        h = AffinePermutation(g.n, window)
        size = parts[index]
        if size >= g.n and size > 0:
            return 0
        total = 0
        for d, dinv in _decreasing_of_size(g.n, size):
            rest = compose(dinv, h)
            if rest.length == h.length - size:
                total += count(rest.window, index + 1)
        return total

    return count(g.window, 0)


def affine_stanley_monomial_coeff(f: AffinePermutation, mu) -> int:
    """Coefficient of ``x^mu`` in ``F~_f``; ``mu`` may be any composition."""
    mu = tuple(int(x) for x in mu)
    if sum(mu) != f.length:
        raise SizeMismatch(f"weight {mu} has size {sum(mu)}, length is {f.length}")
    g = normalize_to_bound(f, 0)
    return _factorizations(g, mu)


def weight_table(f: AffinePermutation, k: int) -> WeightTable:
    d = f.length
    entries = {}
    for mu in partitions_of(d, k):
        c = affine_stanley_monomial_coeff(f, mu)
        if c:
            entries[mu] = c
    return WeightTable(d, k, entries)


def affine_stanley_truncated(f: AffinePermutation, k: int, n=None,
                             budget: int = DEFAULT_LENGTH_BUDGET) -> SchurVector:
    """Image of ``F~_f`` in the ``k x (n-k)`` truncated ring."""
    n = f.n if n is None else n
    if f.length > budget:
        raise BudgetExceeded("length", budget, f.length)
    if k == 0:
        return SchurVector(0, n, {(): 1} if f.length == 0 else {})
    return SchurVector(k, n - k, weight_table(f, k).schur_expand())


def count_reduced_words(f: AffinePermutation) -> int:
    """Number of reduced words, by peeling right descents."""

    @lru_cache(maxsize=None)
    def count(window):
        h = AffinePermutation(f.n, window)
        if h.length == 0:
            return 1
        total = 0
        for i in range(f.n):
            if h(i) > h(i + 1):
                total += count(compose(h, simple_reflection(f.n, i)).window)
        return total

    return count(f.window)
