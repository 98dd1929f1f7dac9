"""Affine permutations of quasi-period ``n``.

An affine permutation is a bijection ``f`` of the integers with
``f(i + n) == f(i) + n``; it is stored by its window ``f(1), ..., f(n)``.
Windows are kept unreduced, so two permutations are equal exactly when their
windows are equal.

>>> f = from_window(4, [5, 2, 7, 4])
>>> f(8), f(-1)
(8, 3)
>>> length(f), code(f), av(f)
(4, (2, 0, 2, 0), 2)
>>> bounded_class(f)
2
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from .errors import (
    BadWindowSum,
    DuplicateResidue,
    EqualResidues,
    NotBounded,
    NotZeroGrassmannian,
    PeriodMismatch,
    PositroidError,
)

__all__ = [
    "AffinePermutation", "Diagram",
    "from_window", "parse_window", "format_window", "identity", "tau_power",
    "evaluate", "compose", "inverse", "length", "code", "av", "delta",
    "rothe_diagram", "bounded_class", "in_t_bound", "in_t_bound_by_diagram",
    "normalize_to_bound", "right_multiply_t", "reflection_of", "is_bruhat_cover",
    "max_inversion", "is_zero_grassmannian", "grassmannian_shape",
    "bcov", "phi_minus_bounded", "phi_plus_bounded", "simple_reflection",
    "bounded_permutations", "t_orbit_equal",
]


@dataclass(frozen=True)
class AffinePermutation:
    """A bijection of Z with ``f(i + n) = f(i) + n``, stored by its window."""

    n: int
    window: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise PositroidError(f"quasi-period must be positive, got {self.n}")
        if len(self.window) != self.n:
            raise PositroidError(
                f"window has {len(self.window)} entries, expected {self.n}")
        residues = [v % self.n for v in self.window]
        if len(set(residues)) != self.n:
            seen = {}
            for pos, r in enumerate(residues, start=1):
                if r in seen:
                    raise DuplicateResidue(
                        f"f({seen[r]}) = {self.window[seen[r] - 1]} and "
                        f"f({pos}) = {self.window[pos - 1]} agree mod {self.n}")
                seen[r] = pos
        excess = sum(self.window) - self.n * (self.n + 1) // 2
        if excess % self.n:
            raise BadWindowSum(
                f"sum of f(i) - i is {excess}, not divisible by {self.n}")

    def __call__(self, i: int) -> int:
        q, r = divmod(i - 1, self.n)
        return self.window[r] + q * self.n

    def __mul__(self, other: AffinePermutation) -> AffinePermutation:
        return compose(self, other)

    def __str__(self):
        return format_window(self)

    @cached_property
    def delta(self) -> tuple[int, ...]:
        return tuple(v - i for i, v in enumerate(self.window, start=1))

    @cached_property
    def av(self) -> int:
        return sum(self.delta) // self.n

    @cached_property
    def length(self) -> int:
        # an inversion (i, j), i < j, needs j - i < f(i) - i - (f(j) - j)
        span = max(self.delta) - min(self.delta)
        count = 0
        for i in range(1, self.n + 1):
            fi = self.window[i - 1]
            for j in range(i + 1, i + span):
                if fi > self(j):
                    count += 1
        return count

    @cached_property
    def code(self) -> tuple[int, ...]:
        span = max(self.delta) - min(self.delta)
        out = []
        for i in range(1, self.n + 1):
            fi = self.window[i - 1]
            out.append(sum(1 for j in range(i + 1, i + span) if fi > self(j)))
        return tuple(out)

    def inverse(self) -> AffinePermutation:
        return inverse(self)


@dataclass(frozen=True)
class Diagram:
    """A finite set of cells, either planar or on a cylinder.

    ``period`` is ``None`` for planar diagrams, or ``(p, q)`` for diagrams on
    the cylinder Z^2 / Z(p, q); in that case cells are stored with row
    representatives in ``[1, p]``.
    """

    cells: frozenset
    period: Optional[tuple[int, int]] = None

    def __post_init__(self):
        cells = frozenset((int(r), int(c)) for r, c in self.cells)
        if self.period is not None:
            p, q = self.period
            canon = set()
            for r, c in cells:
                r0 = (r - 1) % p + 1
                canon.add((r0, c - q * ((r - r0) // p)))
            if len(canon) != len(cells):
                raise PositroidError("cells coincide on the cylinder")
            cells = frozenset(canon)
        object.__setattr__(self, "cells", cells)

    def __len__(self):
        return len(self.cells)

    def __iter__(self):
        return iter(sorted(self.cells))

    def row_key(self, cell):
        return cell[0]

    def column_key(self, cell):
        if self.period is None:
            return cell[1]
        return cell[1] % self.period[1]

    def rows(self) -> dict:
        out = {}
        for cell in sorted(self.cells):
            out.setdefault(self.row_key(cell), []).append(cell[1])
        return out

    def row_sizes(self) -> dict:
        return {r: len(cs) for r, cs in self.rows().items()}

    def column_sizes(self) -> dict:
        out = {}
        for cell in self.cells:
            key = self.column_key(cell)
            out[key] = out.get(key, 0) + 1
        return out

    def transpose(self) -> Diagram:
        period = None if self.period is None else self.period[::-1]
        return Diagram(frozenset((c, r) for r, c in self.cells), period)

    def is_toric(self) -> bool:
        """True when the quotient map to the torus is injective on cells."""
        if self.period is None:
            return True
        p, q = self.period
        return len({(r % p, c % q) for r, c in self.cells}) == len(self.cells)

    def torus_image(self) -> Diagram:
        """Planar diagram with the row and column partitions of a toric diagram."""
        if self.period is None:
            return self
        if not self.is_toric():
            raise PositroidError("diagram is not toric")
        p, q = self.period
        return Diagram(frozenset(((r - 1) % p + 1, (c - 1) % q + 1)
                                 for r, c in self.cells))

    def canonical_form(self) -> tuple:
        """Invariant of the diagram up to permuting rows and columns.

        Brute force over row orders, so only meant for a handful of rows.
        """
        from itertools import permutations
        planar = self.torus_image()
        rows = sorted({r for r, _ in planar.cells})
        cols = sorted({c for _, c in planar.cells})
        best = None
        for order in permutations(rows):
            pos = {r: i for i, r in enumerate(order)}
            columns = sorted(
                tuple(sorted(pos[r] for r, cc in planar.cells if cc == c))
                for c in cols)
            key = (len(rows), tuple(columns))
            if best is None or key < best:
                best = key
        return best if best is not None else (0, ())

    def to_text(self) -> str:
        return "\n".join(f"{r}: {','.join(str(c) for c in cs)}"
                         for r, cs in self.rows().items())

    @classmethod
    def from_text(cls, text: str, period=None) -> Diagram:
        cells = set()
        for raw in text.replace(";", "\n").splitlines():
            line = raw.strip()
            if not line:
                continue
            if ":" not in line:
                raise PositroidError(f"diagram line {line!r} lacks 'row:'")
            head, tail = line.split(":", 1)
            try:
                r = int(head)
                cols = [int(t) for t in tail.split(",") if t.strip()]
            except ValueError as exc:
                raise PositroidError(f"bad diagram line {line!r}") from exc
            for c in cols:
                if (r, c) in cells:
                    raise PositroidError(f"repeated cell ({r}, {c})")
                cells.add((r, c))
        return cls(frozenset(cells), period)


def from_window(n: int, values: Iterable[int]) -> AffinePermutation:
    return AffinePermutation(n, tuple(int(v) for v in values))


def parse_window(text: str, n: Optional[int] = None) -> AffinePermutation:
    """Parse ``"5,2,7,4"``; ``n`` defaults to the number of entries."""
    try:
        values = [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError as exc:
        raise PositroidError(f"bad window {text!r}") from exc
    if n is None:
        n = len(values)
    if len(values) != n:
        raise PositroidError(f"window {text!r} has {len(values)} entries, expected {n}")
    return from_window(n, values)


def format_window(f: AffinePermutation) -> str:
    return ",".join(str(v) for v in f.window)


def identity(n: int) -> AffinePermutation:
    return AffinePermutation(n, tuple(range(1, n + 1)))


def tau_power(n: int, j: int) -> AffinePermutation:
    """The shift ``i -> i + j``."""
    return AffinePermutation(n, tuple(range(1 + j, n + 1 + j)))


def simple_reflection(n: int, i: int) -> AffinePermutation:
    """``s_i``, swapping ``i + pn`` and ``i + 1 + pn`` for every p."""
    if n < 2:
        raise PositroidError("simple reflections need n >= 2")
    return AffinePermutation(
        n, tuple(_transposition_image(n, i, i + 1, x) for x in range(1, n + 1)))


def evaluate(f: AffinePermutation, i: int) -> int:
    return f(i)


def compose(f: AffinePermutation, g: AffinePermutation) -> AffinePermutation:
    """``(f g)(i) = f(g(i))``."""
    if f.n != g.n:
        raise PeriodMismatch(f"cannot compose periods {f.n} and {g.n}")
    return AffinePermutation(f.n, tuple(f(v) for v in g.window))


def inverse(f: AffinePermutation) -> AffinePermutation:
    n = f.n
    window = [0] * n
    for pos, v in enumerate(f.window, start=1):
        target = (v - 1) % n + 1
        window[target - 1] = pos + (target - v)
    return AffinePermutation(n, tuple(window))


def length(f: AffinePermutation) -> int:
    """Number of inversions ``(i, j)``, ``i in [1, n]``, ``i < j``, ``f(i) > f(j)``."""
    return f.length


def code(f: AffinePermutation) -> tuple[int, ...]:
    return f.code


def av(f: AffinePermutation) -> int:
    return f.av


def delta(f: AffinePermutation) -> tuple[int, ...]:
    return f.delta


def t_orbit_equal(f: AffinePermutation, g: AffinePermutation) -> bool:
    """Whether ``f`` and ``g`` differ by a left power of the shift."""
    if f.n != g.n:
        return False
    shift = g.av - f.av
    return all(a + shift == b for a, b in zip(f.window, g.window))


def rothe_diagram(f: AffinePermutation) -> Diagram:
    """Cells ``(i, f(j))`` with ``i < j`` and ``f(i) > f(j)``, rows in ``[1, n]``."""
    span = max(f.delta) - min(f.delta)
    cells = set()
    for i in range(1, f.n + 1):
        fi = f(i)
        for j in range(i + 1, i + span):
            fj = f(j)
            if fi > fj:
                cells.add((i, fj))
    return Diagram(frozenset(cells), (f.n, f.n))


def _is_bounded(f: AffinePermutation) -> bool:
    return all(0 <= d <= f.n for d in f.delta)


def bounded_class(f: AffinePermutation) -> Optional[int]:
    """``k`` with ``f`` in Bound(k, n), or ``None`` if ``f`` is not bounded."""
    if not _is_bounded(f):
        return None
    return sum(1 for v in f.window if v > f.n)


def normalize_to_bound(f: AffinePermutation, k: int) -> AffinePermutation:
    """Left-shift ``f`` so that its average is ``k``."""
    shift = k - f.av
    return AffinePermutation(f.n, tuple(v + shift for v in f.window))


def in_t_bound(f: AffinePermutation, k: int) -> bool:
    """Whether some left shift of ``f`` lies in Bound(k, n)."""
    return _is_bounded(normalize_to_bound(f, k))


def in_t_bound_by_diagram(f: AffinePermutation, k: int) -> bool:
    """Row/column test: rows of D(f) have at most n-k cells, columns at most k."""
    d = rothe_diagram(f)
    return (all(s <= f.n - k for s in d.row_sizes().values())
            and all(s <= k for s in d.column_sizes().values()))


def _transposition_image(n: int, i: int, j: int, x: int) -> int:
    if (x - i) % n == 0:
        return x - i + j
    if (x - j) % n == 0:
        return x - j + i
    return x


def right_multiply_t(f: AffinePermutation, i: int, j: int) -> AffinePermutation:
    """``f t_{ij}``, where ``t_{ij}`` swaps ``i + pn`` and ``j + pn`` for all p."""
    if (i - j) % f.n == 0:
        raise EqualResidues(f"{i} and {j} are congruent mod {f.n}")
    return AffinePermutation(
        f.n, tuple(f(_transposition_image(f.n, i, j, x)) for x in range(1, f.n + 1)))


def reflection_of(h: AffinePermutation) -> Optional[tuple[int, int]]:
    """``(i, j)`` with ``i < j`` and ``h == t_{ij}``, or ``None``."""
    moved = [(x, v) for x, v in enumerate(h.window, start=1) if v != x]
    if len(moved) != 2:
        return None
    (a, va), (b, vb) = moved
    if va - a != -(vb - b) or (va - b) % h.n:
        return None
    return (a, va) if a < va else (va, a)


def is_bruhat_cover(f: AffinePermutation, g: AffinePermutation) -> bool:
    """Whether ``g = f t_{ij}`` for a reflection and ``l(g) = l(f) + 1``."""
    if f.n != g.n or g.length != f.length + 1:
        return False
    return reflection_of(compose(inverse(f), g)) is not None


def max_inversion(f: AffinePermutation) -> Optional[tuple[int, int]]:
    """Lexicographically largest ``(r, s)``, ``1 <= r < s <= n``, ``f(r) > f(s)``."""
    w = f.window
    for r in range(f.n - 1, 0, -1):
        for s in range(f.n, r, -1):
            if w[r - 1] > w[s - 1]:
                return (r, s)
    return None


def is_zero_grassmannian(f: AffinePermutation) -> bool:
    return all(a < b for a, b in zip(f.window, f.window[1:]))


def grassmannian_shape(f: AffinePermutation, k: int) -> tuple[int, ...]:
    """Shape of a 0-Grassmannian ``f`` in Bound(k, n): sorted code of ``f tau^-k``."""
    if bounded_class(f) != k:
        raise NotBounded(f"{format_window(f)} is not in Bound({k}, {f.n})")
    if not is_zero_grassmannian(f):
        raise NotZeroGrassmannian(f"{format_window(f)} has a descent inside its window")
    w = compose(f, tau_power(f.n, -k))
    return tuple(sorted((c for c in w.code if c), reverse=True))


def _covers_up(f: AffinePermutation, i: int, j: int) -> Optional[AffinePermutation]:
    g = right_multiply_t(f, i, j)
    return g if g.length == f.length + 1 else None


def bcov(f: AffinePermutation, r: int) -> list[tuple[int, int]]:
    """Pairs ``(i, j)``, ``i in [1, n]``, with ``r`` in ``[i, j)`` mod n and
    ``f < f t_{ij}`` a bounded Bruhat cover."""
    n = f.n
    out = []
    for i in range(1, n + 1):
        for j in range(i + 1, i + n):
            if (r - i) % n >= j - i:
                continue
            g = _covers_up(f, i, j)
            if g is not None and _is_bounded(g):
                out.append((i, j))
    return out


def phi_minus_bounded(f: AffinePermutation, r: int, k: int) -> list[AffinePermutation]:
    """Covers ``f t_{ir}``, ``r - n < i < r``, that lie in Bound(k, n)."""
    out = []
    for i in range(r - f.n + 1, r):
        g = _covers_up(f, i, r)
        if g is not None and bounded_class(g) == k:
            out.append(g)
    return sorted(out, key=lambda g: g.window)


def phi_plus_bounded(f: AffinePermutation, r: int, k: int) -> list[AffinePermutation]:
    """Covers ``f t_{rj}``, ``r < j < r + n``, that lie in Bound(k, n)."""
    out = []
    for j in range(r + 1, r + f.n):
        g = _covers_up(f, r, j)
        if g is not None and bounded_class(g) == k:
            out.append(g)
    return sorted(out, key=lambda g: g.window)


def bounded_permutations(k: int, n: int) -> list[AffinePermutation]:
    """All of Bound(k, n), sorted by window."""
    out = []

    def extend(prefix, used):
        i = len(prefix) + 1
        if i > n:
            if sum(1 for v in prefix if v > n) == k:
                out.append(AffinePermutation(n, tuple(prefix)))
            return
        for v in range(i, i + n + 1):
            res = v % n
            if res not in used:
                used.add(res)
                prefix.append(v)
                extend(prefix, used)
                prefix.pop()
                used.discard(res)

    extend([], set())
    return sorted(out, key=lambda g: g.window)
