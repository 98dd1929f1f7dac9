"""k-Bruhat order on S_n: covers, maximal chains and the chain quasisymmetric function.

Permutations are tuples in one-line notation with values ``1..n``; positions
in the docstrings are 1-based.
"""

from __future__ import annotations

from functools import lru_cache

from ..errors import BudgetExceeded, PositroidError
from ..schurring import SchurVector, partitions_of, schur_expand_from_monomials

__all__ = [
    "DEFAULT_CHAIN_BUDGET", "LABEL_CONVENTIONS", "perm_length", "k_bruhat_covers",
    "is_k_bruhat_cover", "is_k_bruhat_leq", "count_maximal_chains",
    "maximal_chains", "chain_quasisym_schur",
]

DEFAULT_CHAIN_BUDGET = 100_000
LABEL_CONVENTIONS = ("position", "value")


def _check_perm(w) -> tuple:
    w = tuple(int(x) for x in w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise PositroidError(f"{w} is not a permutation of 1..{len(w)}")
    return w


def perm_length(w) -> int:
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def k_bruhat_covers(w, k: int) -> list:
    """``[(i, j, w t_ij)]`` for all covers ``w ⋖_k w t_ij`` with ``i <= k < j``."""
    n = len(w)
    out = []
    for i in range(1, k + 1):
        for j in range(k + 1, n + 1):
            a, b = w[i - 1], w[j - 1]
            if a < b and not any(a < w[p - 1] < b for p in range(i + 1, j)):
                u = list(w)
                u[i - 1], u[j - 1] = b, a
                out.append((i, j, tuple(u)))
    return out


def is_k_bruhat_cover(u, v, k: int) -> bool:
    u, v = _check_perm(u), _check_perm(v)
    return any(x == v for _, _, x in k_bruhat_covers(u, k))


def _chain_counter(v: tuple, k: int):
    target = perm_length(v)

    @lru_cache(maxsize=None)
    def count(w):
        if w == v:
            return 1
        if perm_length(w) >= target:
            return 0
        return sum(count(x) for _, _, x in k_bruhat_covers(w, k))

    return count


def count_maximal_chains(u, v, k: int) -> int:
    """Number of saturated chains from ``u`` to ``v`` in k-Bruhat order."""
    u, v = _check_perm(u), _check_perm(v)
    if len(u) != len(v):
        raise PositroidError("permutations of different sizes")
    return _chain_counter(v, k)(u)


def is_k_bruhat_leq(u, v, k: int) -> bool:
    return tuple(u) == tuple(v) or count_maximal_chains(u, v, k) > 0


def maximal_chains(u, v, k: int, labels: str = "value",
                   budget: int = DEFAULT_CHAIN_BUDGET) -> list:
    """Label words of all maximal chains from ``u`` to ``v``.

    With ``labels="position"`` a cover ``w ⋖_k w t_ij`` is labelled ``j``; with
    ``labels="value"`` it is labelled by the larger swapped value ``w(j)``,
    i.e. the ``b`` of the left-multiplication form ``t_ab w``.
    """
    if labels not in LABEL_CONVENTIONS:
        raise PositroidError(f"unknown label convention {labels!r}")
    u, v = _check_perm(u), _check_perm(v)
    counter = _chain_counter(v, k)
    total = counter(u)
    if total > budget:
        raise BudgetExceeded("chains", budget, total)
    out = []

    def walk(w, word):
        if w == v:
            out.append(tuple(word))
            return
        for i, j, x in k_bruhat_covers(w, k):
            if counter(x):
                word.append(j if labels == "position" else w[j - 1])
                walk(x, word)
                word.pop()

    if total:
        walk(u, [])
    return out


def _partial_sums(mu) -> set:
    out, s = set(), 0
    for x in mu:
        s += x
        out.add(s)
    return out


def chain_quasisym_schur(u, v, k: int, labels: str = "value",
                         budget: int = DEFAULT_CHAIN_BUDGET) -> SchurVector:
    """Schur expansion of ``sum_c Q_{Des(c)}`` over maximal chains ``c``.

    Uses ``max(k, chain length)`` variables so that nothing is lost.
    """
    words = maximal_chains(u, v, k, labels, budget)
    if not words:
        raise PositroidError(f"{u} is not below {v} in {k}-Bruhat order")
    length = len(words[0])
    nvars = max(k, length, 1)
    descents = [frozenset(i for i in range(1, length) if w[i - 1] > w[i]) for w in words]
    table = {}
    for mu in partitions_of(length, nvars):
        sums = _partial_sums(mu)
        c = sum(1 for d in descents if d <= sums)
        if c:
            table[mu] = c
    return SchurVector(nvars, None, schur_expand_from_monomials(table, nvars))
