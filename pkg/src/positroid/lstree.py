"""The bounded affine Lascoux-Schützenberger tree.

Each non-leaf ``f`` in Bound(k, n) has children obtained from its maximal
inversion ``(r, s)``: the ``+`` children are BΦ⁻(f t_rs, r) and the ``-``
children are BΦ⁺(f t_rs, r) without ``f``. Leaves are 0-Grassmannian, and the
class of ``f`` is the signed sum of the Schur functions of the leaf shapes.

>>> from positroid.affperm import from_window
>>> expand(from_window(4, [5, 2, 7, 4]), 2).result.to_text()
'1 * s[2,2]'
"""

from __future__ import annotations

import json
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .affperm import (
    AffinePermutation,
    bounded_class,
    format_window,
    grassmannian_shape,
    is_zero_grassmannian,
    max_inversion,
    normalize_to_bound,
    phi_minus_bounded,
    phi_plus_bounded,
    right_multiply_t,
)
from .errors import NotBounded, PeriodMismatch, ZeroGrassmannianLeaf
from .schurring import SchurVector, format_partition

__all__ = ["LsStats", "LsExpansion", "ls_children", "expand", "trace", "word_inversions"]


def word_inversions(f: AffinePermutation) -> int:
    """Inversions of the finite word ``f(1) ... f(n)``."""
    w = f.window
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def _check_progress(parent: AffinePermutation, child: AffinePermutation) -> None:
    a, b = word_inversions(child), word_inversions(parent)
    if not (a < b or (a == b and child.window > parent.window)):
        raise AssertionError(
            f"tree measure did not decrease from {format_window(parent)} "
            f"to {format_window(child)}")


def ls_children(f: AffinePermutation, k: int, n: Optional[int] = None):
    """``(plus, minus)`` children of ``f``, each sorted by window."""
    if n is not None and n != f.n:
        raise PeriodMismatch(f"window has period {f.n}, expected {n}")
    pivot = max_inversion(f)
    if pivot is None:
        raise ZeroGrassmannianLeaf(f"{format_window(f)} is 0-Grassmannian")
    r, s = pivot
    h = right_multiply_t(f, r, s)
    plus = phi_minus_bounded(h, r, k)
    minus = [g for g in phi_plus_bounded(h, r, k) if g != f]
    for g in plus + minus:
        _check_progress(f, g)
    return plus, minus


@dataclass(frozen=True)
class LsStats:
    node_count: int
    max_depth: int
    memo_hits: int

    def to_dict(self) -> dict:
        return {"node_count": self.node_count, "max_depth": self.max_depth,
                "memo_hits": self.memo_hits}


@dataclass(frozen=True)
class LsExpansion:
    f: AffinePermutation
    k: int
    n: int
    result: SchurVector
    stats: LsStats

    def to_dict(self) -> dict:
        out = self.result.to_dict()
        out.update(window=list(self.f.window), n=self.n, k=self.k,
                   stats=self.stats.to_dict())
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> LsExpansion:
        f = AffinePermutation(data["n"], tuple(data["window"]))
        return cls(f, data["k"], data["n"], SchurVector.from_dict(data),
                   LsStats(**data["stats"]))


@dataclass
class _Node:
    value: SchurVector
    size: int   # nodes in the (unshared) subtree
    depth: int  # longest path to a leaf
    fanout: int


class _Memo:
    """Window-keyed table; ``setdefault`` is atomic so racing threads agree."""

    def __init__(self):
        self._table = {}
        self._lock = threading.Lock()

    def get(self, key):
        with self._lock:
            return self._table.get(key)

    def setdefault(self, key, node):
        with self._lock:
            return self._table.setdefault(key, node)

    def values(self):
        with self._lock:
            return list(self._table.values())


def _normalize(f: AffinePermutation, k: int, n: Optional[int]) -> AffinePermutation:
    if n is not None and n != f.n:
        raise PeriodMismatch(f"window has period {f.n}, expected {n}")
    if f.av != k:
        f = normalize_to_bound(f, k)
    if bounded_class(f) != k:
        raise NotBounded(f"{format_window(f)} is not in Bound({k}, {f.n}) up to shift")
    return f


def _solve(root: AffinePermutation, k: int, memo: _Memo) -> _Node:
    m = root.n - k
    stack = [(root, False)]
    while stack:
        g, ready = stack.pop()
        key = g.window
        if memo.get(key) is not None:
            continue
        if is_zero_grassmannian(g):
            leaf = SchurVector.basis(grassmannian_shape(g, k), k, m)
            memo.setdefault(key, _Node(leaf, 1, 0, 0))
            continue
        plus, minus = ls_children(g, k)
        if not ready:
            stack.append((g, True))
            stack.extend((c, False) for c in reversed(plus + minus)
                         if memo.get(c.window) is None)
            continue
        kids_plus = [memo.get(c.window) for c in plus]
        kids_minus = [memo.get(c.window) for c in minus]
        coeffs = {}
        for sign, kids in ((1, kids_plus), (-1, kids_minus)):
            for kid in kids:
                for lam, c in kid.value:
                    coeffs[lam] = coeffs.get(lam, 0) + sign * c
        kids = kids_plus + kids_minus
        memo.setdefault(key, _Node(
            SchurVector(k, m, coeffs),
            1 + sum(x.size for x in kids),
            1 + max((x.depth for x in kids), default=-1),
            len(kids)))
    return memo.get(root.window)


def expand(f: AffinePermutation, k: int, n: Optional[int] = None,
           threads: int = 1) -> LsExpansion:
    """Schur expansion of the class of ``f`` in the ``k x (n-k)`` truncated ring.

    ``f`` may be any shift of an element of Bound(k, n). With ``threads > 1``
    the root's subtrees are solved concurrently over a shared memo table.
    """
    f = _normalize(f, k, n)
    memo = _Memo()
    if threads > 1 and not is_zero_grassmannian(f):
        plus, minus = ls_children(f, k)
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(lambda c: _solve(c, k, memo), plus + minus))
    root = _solve(f, k, memo)
    nodes = memo.values()
    edges = sum(x.fanout for x in nodes)
    stats = LsStats(root.size, root.depth, edges - (len(nodes) - 1))
    return LsExpansion(f, k, f.n, root.value, stats)


def trace(f: AffinePermutation, k: int, n: Optional[int] = None) -> str:
    """Preorder rendering of the full tree, one node per line.

    Lines read ``<sign><window>`` for inner nodes and
    ``<sign><window> → leaf [shape]`` for leaves, indented two spaces per level.
    """
    f = _normalize(f, k, n)
    lines = []
    stack = [(f, "+", 0)]
    while stack:
        g, sign, depth = stack.pop()
        text = "  " * depth + sign + format_window(g)
        if is_zero_grassmannian(g):
            text += " → leaf " + format_partition(grassmannian_shape(g, k))
            lines.append(text)
            continue
        lines.append(text)
        plus, minus = ls_children(g, k)
        children = [(c, "+") for c in plus] + [(c, "-") for c in minus]
        stack.extend((c, s, depth + 1) for c, s in reversed(children))
    return "\n".join(lines)
