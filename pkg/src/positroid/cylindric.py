"""Cylindric skew shapes on the cylinder C_{k, n-k}.

Coordinates are matrix style: ``r`` grows downward and ``c`` to the right, and
``(r, c)`` is identified with ``(r + k, c + m)`` where ``m = n - k``. A closed
lattice path is a cyclic word in ``V`` (one row down) and ``H`` (one column
right) with ``k`` V's and ``m`` H's. Edges are labelled by the integers,
increasing along the path. The lower path's edge 1 starts at ``(0, 0)`` and the
upper path's edge 1 starts at ``(-offset, offset)``; both vertices lie on the
antidiagonal ``r + c = 0``, which every closed path meets exactly once per
period.

Cell ``(r, c)`` is the unit square with top-left corner ``(r, c)``. Row ``r``
of the shape is the interval of columns between the vertical edges of the two
paths in that row.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .affperm import Diagram
from .errors import InvalidShape

__all__ = ["ClosedPath", "CylindricSkewShape", "parse_shape", "toric_shapes",
           "TWELVE_CELL_SHAPE"]


@dataclass(frozen=True)
class ClosedPath:
    word: str
    origin: tuple  # start vertex of edge 1
    k: int
    m: int

    @cached_property
    def _period(self):
        # (label, start vertex, step) for the edges 1..n
        r, c = self.origin
        out = []
        for t, step in enumerate(self.word, start=1):
            out.append((t, (r, c), step))
            if step == "V":
                r += 1
            else:
                c += 1
        return out

    def edge_start(self, t: int) -> tuple:
        n = len(self.word)
        q, rem = divmod(t - 1, n)
        _, (r, c), _ = self._period[rem]
        return (r + q * self.k, c + q * self.m)

    def v_edge(self, row: int) -> tuple:
        """``(label, column)`` of the vertical edge spanning ``row``."""
        n = len(self.word)
        for t, (r, c), step in self._period:
            if step == "V" and (row - r) % self.k == 0:
                q = (row - r) // self.k
                return (t + q * n, c + q * self.m)
        raise InvalidShape("path has no vertical steps")

    def h_edge(self, col: int) -> tuple:
        """``(label, row)`` of the horizontal edge spanning ``col``."""
        n = len(self.word)
        for t, (r, c), step in self._period:
            if step == "H" and (col - c) % self.m == 0:
                q = (col - c) // self.m
                return (t + q * n, r + q * self.k)
        raise InvalidShape("path has no horizontal steps")


@dataclass(frozen=True)
class CylindricSkewShape:
    """Region between two non-crossing closed paths on C_{k, n-k}."""

    k: int
    n: int
    lower: str
    upper: str
    offset: int = 0

    def __post_init__(self):
        k, n = self.k, self.n
        if not 0 < k < n:
            raise InvalidShape(f"need 0 < k < n, got k={k}, n={n}")
        for name, word in (("lower", self.lower), ("upper", self.upper)):
            if len(word) != n or set(word) - {"V", "H"}:
                raise InvalidShape(f"{name} path must be {n} letters from V/H, got {word!r}")
            if word.count("V") != k:
                raise InvalidShape(f"{name} path has {word.count('V')} V steps, expected {k}")
        for r in range(k):
            a, b = self.row_interval(r)
            if b < a:
                raise InvalidShape(f"paths cross in row {r}")
        for c in range(self.m):
            if self.upper_path.h_edge(c)[1] > self.lower_path.h_edge(c)[1]:
                raise InvalidShape(f"paths cross in column {c}")

    @property
    def m(self) -> int:
        return self.n - self.k

    @cached_property
    def lower_path(self) -> ClosedPath:
        return ClosedPath(self.lower, (0, 0), self.k, self.m)

    @cached_property
    def upper_path(self) -> ClosedPath:
        return ClosedPath(self.upper, (-self.offset, self.offset), self.k, self.m)

    def row_interval(self, r: int) -> tuple:
        """Half-open column range ``[a, b)`` of row ``r``."""
        return (self.lower_path.v_edge(r)[1], self.upper_path.v_edge(r)[1])

    @cached_property
    def cells(self) -> tuple:
        """Cells with rows in ``[0, k)``, in row-major order."""
        out = []
        for r in range(self.k):
            a, b = self.row_interval(r)
            out.extend((r, c) for c in range(a, b))
        return tuple(out)

    def __len__(self):
        return len(self.cells)

    def canonical(self, cell) -> tuple:
        r, c = cell
        q, r0 = divmod(r, self.k)
        return (r0, c - q * self.m)

    def row_sizes(self) -> tuple:
        return tuple(b - a for a, b in map(self.row_interval, range(self.k)))

    def is_toric(self) -> bool:
        """Injective under the quotient to the (k, m)-torus."""
        return all(s <= self.m for s in self.row_sizes())

    def torus_image(self) -> Diagram:
        """Planar diagram on rows ``1..k`` and columns ``1..m``."""
        cells = {(r % self.k + 1, c % self.m + 1) for r, c in self.cells}
        if len(cells) != len(self.cells):
            raise InvalidShape("shape is not toric")
        return Diagram(frozenset(cells))

    def f_theta_window(self) -> tuple:
        """Window of f_Θ for the labelling fixed by this encoding (not normalized)."""
        lo, up = self.lower_path, self.upper_path
        out = []
        for t in range(1, self.n + 1):
            step = self.lower[t - 1]
            r, c = lo.edge_start(t)
            if step == "V":
                out.append(up.v_edge(r)[0])
            else:
                out.append(up.h_edge(c)[0])
        return tuple(out)

    def label_cells(self) -> frozenset:
        """Cells as (lower row label, upper column label) pairs."""
        lo, up = self.lower_path, self.upper_path
        return frozenset((lo.v_edge(r)[0], up.h_edge(c)[0]) for r, c in self.cells)

    def to_text(self) -> str:
        return f"lower={self.lower} upper={self.upper} offset={self.offset}"

    @classmethod
    def from_row_intervals(cls, m: int, intervals: Sequence[tuple]) -> CylindricSkewShape:
        """Shape whose row ``r`` is ``[a_r, b_r)`` for ``r = 0..k-1``, period ``(k, m)``."""
        k = len(intervals)
        a = [x for x, _ in intervals]
        b = [y for _, y in intervals]
        a.append(a[0] + m)
        b.append(b[0] + m)
        if any(x > y for x, y in zip(a, a[1:])) or any(x > y for x, y in zip(b, b[1:])):
            raise InvalidShape("row boundaries must be weakly increasing")
        shift = a[0]

        def word_from(cols):
            return "".join("V" + "H" * (cols[i + 1] - cols[i]) for i in range(k))

        lower = word_from(a)
        raw_upper = word_from(b)
        # the upper word starts at (0, b_0 - shift); rotate back to the antidiagonal
        back = b[0] - shift
        if back < 0:
            raise InvalidShape("paths cross in row 0")
        n = k + m
        start = -back % n
        upper = raw_upper[start:] + raw_upper[:start]
        r, c = 0, back
        for i in range(back):
            step = raw_upper[(-1 - i) % n]
            if step == "V":
                r -= 1
            else:
                c -= 1
        if r + c != 0:
            raise AssertionError("rotation missed the antidiagonal")
        return cls(k, n, lower, upper, c)


_SHAPE_RE = re.compile(r"^\s*lower=([VH]+)\s+upper=([VH]+)(?:\s+offset=(-?\d+))?\s*$")


def parse_shape(text: str) -> CylindricSkewShape:
    """Parse ``"lower=VHVVHHVHH upper=VHVHHVHVH offset=1"``."""
    match = _SHAPE_RE.match(text)
    if not match:
        raise InvalidShape(f"cannot parse shape {text!r}")
    lower, upper, offset = match.groups()
    return CylindricSkewShape(lower.count("V"), len(lower), lower, upper,
                              int(offset or 0))


def toric_shapes(k: int, m: int, max_cells: int):
    """All toric shapes on C_{k,m} with at most ``max_cells`` cells.

    Shapes are produced from their row intervals with ``a_0 = 0``; shapes with
    the same cells but different paths through empty rows are listed separately.
    """
    def rec(a, b, used):
        r = len(a)
        if r == k:
            if a[-1] <= a[0] + m and b[-1] <= b[0] + m:
                yield CylindricSkewShape.from_row_intervals(m, list(zip(a, b)))
            return
        lo_a = a[-1] if a else 0
        hi_a = a[0] + m if a else 0
        for ar in range(lo_a, hi_a + 1):
            lo_b = max(ar, b[-1]) if b else ar
            hi_b = min(ar + m, ar + max_cells - used)
            if b:
                hi_b = min(hi_b, b[0] + m)
            for br in range(lo_b, hi_b + 1):
                yield from rec(a + [ar], b + [br], used + br - ar)

    yield from rec([], [], 0)


# a 12-cell toric shape on C_{4,5} with rows of sizes 2, 3, 4, 3
TWELVE_CELL_SHAPE = CylindricSkewShape(4, 9, "VHVVHHVHH", "VHVHHVHVH", 1)
