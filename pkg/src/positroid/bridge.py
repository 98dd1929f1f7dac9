"""From k-Bruhat intervals, cylindric shapes and small diagrams to Bound(k, n).

The applications read Schur coefficients off the tree: Schubert structure
constants from intervals, Gromov-Witten invariants from toric shapes, and the
decomposition of Schur modules of diagrams with at most three rows.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .affperm import (
    AffinePermutation,
    Diagram,
    bounded_class,
    compose,
    from_window,
    inverse,
    normalize_to_bound,
    rothe_diagram,
)
from .cylindric import CylindricSkewShape
from .errors import (
    InvalidShape,
    NormalizationFailed,
    NotComparable,
    NotToric,
    PositroidError,
    RectangleOverflow,
    TooManyRows,
)
from .lstree import expand
from .oracle.chains import count_maximal_chains, perm_length
from .schurring import SchurVector, complement, conjugate, fits_in_rect

__all__ = [
    "KBruhatInterval", "parse_interval", "g_kn", "f_from_interval",
    "schubert_times_schur", "grassmannian_permutation",
    "f_from_cylindric_shape", "toric_gw_expand", "three_row_shape",
    "three_row_decompose",
]


@dataclass(frozen=True)
class KBruhatInterval:
    """``[u, v]_k`` in S_n; construction checks ``u <=_k v`` by chain search."""

    u: tuple
    v: tuple
    k: int

    def __post_init__(self):
        u = tuple(int(x) for x in self.u)
        v = tuple(int(x) for x in self.v)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)
        n = len(u)
        for w in (u, v):
            if sorted(w) != list(range(1, n + 1)):
                raise PositroidError(f"{w} is not a permutation of 1..{n}")
        if len(v) != n:
            raise PositroidError("u and v have different sizes")
        if not 0 <= self.k <= n:
            raise PositroidError(f"k={self.k} out of range for n={n}")
        if u != v and count_maximal_chains(u, v, self.k) == 0:
            raise NotComparable(f"{u} is not below {v} in {self.k}-Bruhat order")

    @property
    def n(self) -> int:
        return len(self.u)

    def to_text(self) -> str:
        fmt = lambda w: ",".join(map(str, w))
        return f"u={fmt(self.u)} v={fmt(self.v)} k={self.k}"


_INTERVAL_RE = re.compile(r"^\s*u=([\d,\s]+?)\s+v=([\d,\s]+?)\s+k=(\d+)\s*$")


def parse_interval(text: str) -> KBruhatInterval:
    """Parse ``"u=2,4,3,1,5 v=2,4,5,1,3 k=3"``."""
    match = _INTERVAL_RE.match(text)
    if not match:
        raise PositroidError(f"cannot parse interval {text!r}")
    u, v, k = match.groups()
    parse = lambda s: tuple(int(t) for t in s.split(",") if t.strip())
    return KBruhatInterval(parse(u), parse(v), int(k))


def g_kn(k: int, n: int) -> AffinePermutation:
    """Window ``n+1, ..., n+k, k+1, ..., n``."""
    return from_window(n, list(range(n + 1, n + k + 1)) + list(range(k + 1, n + 1)))


def f_from_interval(interval: KBruhatInterval) -> AffinePermutation:
    """``u g_{k,n} v^{-1}``, an element of Bound(k, n)."""
    n, k = interval.n, interval.k
    u = from_window(n, interval.u)
    v = from_window(n, interval.v)
    f = compose(compose(u, g_kn(k, n)), inverse(v))
    expected = k * (n - k) - perm_length(interval.v) + perm_length(interval.u)
    if f.length != expected or bounded_class(f) != k:
        raise AssertionError(f"f_(u,v) = {f} has the wrong length or class")
    return f


def schubert_times_schur(interval: KBruhatInterval) -> dict:
    """``lam -> c^v_{u, w(lam)}``, read from the coefficient of ``s_{lam^∨}``."""
    n, k = interval.n, interval.k
    result = expand(f_from_interval(interval), k).result
    out = {complement(lam, k, n - k): c for lam, c in result}
    if any(c < 0 for c in out.values()):
        raise AssertionError("negative structure constant")
    return dict(sorted(out.items()))


def grassmannian_permutation(lam, k: int, n: int) -> tuple:
    """The permutation with descent at most at ``k`` whose Rothe diagram is ``lam``."""
    lam = tuple(lam)
    if not fits_in_rect(lam, k, n - k):
        raise RectangleOverflow(f"{lam} does not fit in {k}x{n - k}")
    padded = list(lam) + [0] * (k - len(lam))
    head = [i + padded[k - i] for i in range(1, k + 1)]
    tail = sorted(set(range(1, n + 1)) - set(head))
    w = tuple(head + tail)
    sizes = sorted((sum(1 for j in range(i + 1, n) if w[i] > w[j]) for i in range(n)),
                   reverse=True)
    if tuple(s for s in sizes if s) != lam:
        raise AssertionError(f"code of {w} does not sort to {lam}")
    return w


def _shift_right(f: AffinePermutation, j: int) -> AffinePermutation:
    return AffinePermutation(f.n, tuple(f(i + j) for i in range(1, f.n + 1)))


def f_from_cylindric_shape(shape: CylindricSkewShape) -> AffinePermutation:
    """f_Θ, shifted into Bound(k, n).

    The labelling only pins f_Θ down up to shifts on both sides. The left
    shift making ``av = k`` is tried first; other right shifts are a fallback.
    Each call checks that D(f_Θ) is the image of the shape's cells.
    """
    k, n = shape.k, shape.n
    raw = from_window(n, shape.f_theta_window())
    for j in range(n):
        cand = normalize_to_bound(_shift_right(raw, j), k)
        if bounded_class(cand) == k:
            s = cand.av - raw.av
            cells = frozenset((r - j, c + s) for r, c in shape.label_cells())
            if Diagram(cells, (n, n)) != rothe_diagram(cand):
                raise AssertionError("Rothe diagram of f_Θ differs from the shape")
            return cand
    raise NormalizationFailed(f"no shift of {raw} lies in Bound({k}, {n})")


def toric_gw_expand(shape: CylindricSkewShape, threads: int = 1) -> SchurVector:
    """Schur expansion of the toric Schur polynomial ``s_Θ(x_1..x_k)``."""
    if not shape.is_toric():
        raise NotToric(f"{shape.to_text()} has a row longer than {shape.m}")
    f = f_from_cylindric_shape(shape)
    if f.length != len(shape):
        raise AssertionError("length of f_Θ differs from the number of cells")
    return expand(f, shape.k, threads=threads).result


_COLUMN_TYPES = ((0,), (0, 1), (1,), (1, 2), (2,), (0, 2))


def _three_row_split(diagram: Diagram):
    if diagram.period is not None:
        diagram = diagram.torus_image()
    rows = sorted({r for r, _ in diagram.cells})
    if len(rows) > 3:
        raise TooManyRows(f"diagram has {len(rows)} nonempty rows")
    index = {r: i for i, r in enumerate(rows)}
    counts = [0] * 6
    full = 0
    for c in sorted({c for _, c in diagram.cells}):
        occupied = tuple(sorted(index[r] for r, cc in diagram.cells if cc == c))
        if len(occupied) == 3:
            full += 1
        else:
            counts[_COLUMN_TYPES.index(occupied)] += 1
    return full, counts


def three_row_shape(counts) -> Optional[CylindricSkewShape]:
    """Toric shape on C_{3, p'} with the given numbers of columns of each type.

    The column types, in cyclic order, are rows {1}, {1,2}, {2}, {2,3}, {3},
    {1,3}; columns of the last type wrap around the seam.
    """
    t1, t2, t3, t4, t5, t6 = counts
    p = sum(counts)
    if p == 0:
        return None
    return CylindricSkewShape.from_row_intervals(p, [
        (1 - t6, 1 + t1 + t2),
        (1 + t1, 1 + t1 + t2 + t3 + t4),
        (1 + t1 + t2 + t3, 1 + p),
    ])


def three_row_decompose(diagram: Diagram, dim_v: int = 3, threads: int = 1) -> dict:
    """Multiplicities of ``V[lam]`` in ``V[D]`` for a diagram with at most three rows."""
    if dim_v < 3:
        raise PositroidError("dim V must be at least 3")
    full, counts = _three_row_split(diagram)
    shape = three_row_shape(counts)
    if shape is None:
        base = {(): 1}
    else:
        base = dict(toric_gw_expand(shape, threads))
    out = {}
    for lam, c in base.items():
        padded = list(lam) + [0] * (3 - len(lam))
        nu = tuple(x + full for x in padded if x + full)
        if len(nu) <= dim_v:
            out[nu] = out.get(nu, 0) + c
    return dict(sorted(out.items()))
