"""Partitions and the truncated ring of symmetric polynomials in the Schur basis.

Partitions are plain tuples of positive integers in weakly decreasing order
(the empty tuple is the empty partition). A :class:`SchurVector` is a finite
integer combination of Schur polynomials ``s_lambda(x_1..x_k)`` modulo the
span of those whose shape does not fit in the ``k x m`` rectangle; with
``m=None`` no column bound is imposed.
"""

from __future__ import annotations

import json
from functools import lru_cache
from math import factorial
from types import MappingProxyType
from typing import Iterable, Mapping, Optional

from .errors import (
    NotSymmetric,
    PositroidError,
    RectangleOverflow,
    RingMismatch,
    SizeMismatch,
)

Partition = tuple

__all__ = [
    "Partition", "SchurVector", "partition", "parse_partition", "format_partition",
    "partitions_of", "partitions_in_rect", "conjugate", "dominance_leq",
    "fits_in_rect", "complement", "syt_count", "kostka_number",
    "schur_to_monomials", "schur_expand_from_monomials", "multiply_by_s1",
    "omega_dual", "delta", "add", "scale", "is_schur_positive",
]


def partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and strip trailing zeros."""
    p = [int(x) for x in parts]
    while p and p[-1] == 0:
        p.pop()
    if any(x <= 0 for x in p) or any(a < b for a, b in zip(p, p[1:])):
        raise PositroidError(f"{p} is not a partition")
    return tuple(p)


def parse_partition(text: str) -> Partition:
    """Parse ``"[2,1]"`` (brackets optional)."""
    body = text.strip().lstrip("[").rstrip("]")
    try:
        return partition(int(t) for t in body.split(",") if t.strip())
    except ValueError as exc:
        raise PositroidError(f"bad partition {text!r}") from exc


def format_partition(lam: Partition) -> str:
    return "[" + ",".join(str(x) for x in lam) + "]"


@lru_cache(maxsize=None)
def partitions_of(d: int, max_parts: Optional[int] = None,
                  max_part: Optional[int] = None) -> tuple:
    """All partitions of ``d``, in reverse lexicographic order."""
    if max_part is None:
        max_part = d
    if d == 0:
        return ((),)
    if max_parts == 0:
        return ()
    out = []
    for first in range(min(d, max_part), 0, -1):
        rest_parts = None if max_parts is None else max_parts - 1
        for rest in partitions_of(d - first, rest_parts, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_in_rect(k: int, m: int) -> list:
    """All partitions fitting in ``k`` rows and ``m`` columns."""
    out = []
    for d in range(k * m + 1):
        out.extend(partitions_of(d, k, m))
    return out


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def dominance_leq(lam: Partition, mu: Partition) -> bool:
    """Whether ``lam <= mu`` in dominance order. Sizes must agree."""
    if sum(lam) != sum(mu):
        raise SizeMismatch(f"{lam} and {mu} have different sizes")
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a > b:
            return False
    return True


def fits_in_rect(lam: Partition, k: int, m: Optional[int]) -> bool:
    if len(lam) > k:
        return False
    return m is None or not lam or lam[0] <= m


def complement(lam: Partition, k: int, m: int) -> Partition:
    """Complement of ``lam`` in the ``k x m`` rectangle, rotated a half turn."""
    if not fits_in_rect(lam, k, m):
        raise RectangleOverflow(f"{lam} does not fit in {k}x{m}")
    padded = list(lam) + [0] * (k - len(lam))
    return partition(m - x for x in reversed(padded))


def syt_count(lam: Partition) -> int:
    """Number of standard Young tableaux of shape ``lam`` (hook-length formula)."""
    conj = conjugate(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j) + (conj[j] - i) - 1
    return factorial(sum(lam)) // hooks


@lru_cache(maxsize=None)
def _horizontal_strip_count(lam: Partition, content: tuple) -> int:
    # SSYT of shape lam and the given content, peeling the largest letter
    # as a horizontal strip
    if not content:
        return 1 if not lam else 0
    size = content[-1]
    rest = content[:-1]
    total = 0
    # nu ⊆ lam with lam/nu a horizontal strip of `size` boxes: lam_{i+1} <= nu_i <= lam_i
    rows = len(lam)

    def choose(i, remaining, nu):
        nonlocal total
        if i == rows:
            if remaining == 0:
                total += _horizontal_strip_count(partition(nu), rest)
            return
        lo = lam[i + 1] if i + 1 < rows else 0
        for x in range(lam[i], lo - 1, -1):
            taken = lam[i] - x
            if taken > remaining:
                break
            nu.append(x)
            choose(i + 1, remaining - taken, nu)
            nu.pop()

    choose(0, size, [])
    return total


def kostka_number(lam: Partition, mu: Iterable[int]) -> int:
    """Number of semistandard tableaux of shape ``lam`` and content ``mu``.

    ``mu`` may be any composition; the count does not depend on its order.
    """
    mu = tuple(int(x) for x in mu)
    if sum(lam) != sum(mu):
        raise SizeMismatch(f"shape {lam} and content {mu} have different sizes")
    return _horizontal_strip_count(tuple(lam), tuple(x for x in mu if x))


def schur_to_monomials(lam: Partition, k: int) -> dict:
    """Monomial expansion of ``s_lam(x_1..x_k)`` at partition weights."""
    return {mu: kostka_number(lam, mu)
            for mu in partitions_of(sum(lam), k)
            if kostka_number(lam, mu)}


def schur_expand_from_monomials(table: Mapping, k: int) -> dict:
    """Schur coefficients of the symmetric polynomial ``sum table[mu] m_mu(X_k)``.

    Peels dominance-maximal terms: lexicographic order refines dominance, so
    the lexicographically largest surviving weight is always maximal.
    """
    residue = {}
    degree = None
    for mu, c in table.items():
        mu = tuple(mu)
        if any(a < b for a, b in zip(mu, mu[1:])) or any(x < 0 for x in mu):
            raise NotSymmetric(f"weight {mu} is not a partition")
        mu = partition(mu)
        if degree is None:
            degree = sum(mu)
        elif sum(mu) != degree:
            raise SizeMismatch("weights of mixed degree")
        if len(mu) <= k and c:
            residue[mu] = residue.get(mu, 0) + c
    out = {}
    if degree is None:
        return out
    for lam in partitions_of(degree, k):
        c = residue.get(lam, 0)
        if not c:
            continue
        out[lam] = c
        for mu, kk in schur_to_monomials(lam, k).items():
            residue[mu] = residue.get(mu, 0) - c * kk
    if any(residue.values()):
        raise NotSymmetric("residue left after peeling")
    return out


class SchurVector:
    """Integer combination of ``s_lambda`` in the ``k x m`` truncated ring.

    Terms outside the rectangle are dropped on construction, which is the
    quotient map; zero coefficients are never stored.
    """

    __slots__ = ("k", "m", "_coeffs")

    def __init__(self, k: int, m: Optional[int], coeffs: Optional[Mapping] = None):
        if k < 0 or (m is not None and m < 0):
            raise PositroidError(f"bad ring bounds ({k}, {m})")
        self.k = k
        self.m = m
        clean = {}
        for lam, c in (coeffs or {}).items():
            lam = partition(lam)
            if c and fits_in_rect(lam, k, m):
                clean[lam] = clean.get(lam, 0) + int(c)
        self._coeffs = MappingProxyType({lam: c for lam, c in sorted(clean.items()) if c})

    @classmethod
    def basis(cls, lam, k, m=None) -> SchurVector:
        return cls(k, m, {tuple(lam): 1})

    @classmethod
    def zero(cls, k, m=None) -> SchurVector:
        return cls(k, m)

    @property
    def coeffs(self) -> Mapping:
        return self._coeffs

    def __getitem__(self, lam) -> int:
        return self._coeffs.get(tuple(lam), 0)

    def __iter__(self):
        return iter(self._coeffs.items())

    def __len__(self):
        return len(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, SchurVector):
            return NotImplemented
        return (self.k, self.m, dict(self._coeffs)) == (other.k, other.m, dict(other._coeffs))

    def __hash__(self):
        return hash((self.k, self.m, tuple(self._coeffs.items())))

    def __repr__(self):
        return f"SchurVector(k={self.k}, m={self.m}, {dict(self._coeffs)!r})"

    def __str__(self):
        return self.to_text()

    def _check_ring(self, other):
        if (self.k, self.m) != (other.k, other.m):
            raise RingMismatch(f"ring ({self.k}, {self.m}) vs ({other.k}, {other.m})")

    def __add__(self, other: SchurVector) -> SchurVector:
        self._check_ring(other)
        out = dict(self._coeffs)
        for lam, c in other:
            out[lam] = out.get(lam, 0) + c
        return SchurVector(self.k, self.m, out)

    def __neg__(self) -> SchurVector:
        return self.scale(-1)

    def __sub__(self, other: SchurVector) -> SchurVector:
        return self + (-other)

    def scale(self, c: int) -> SchurVector:
        return SchurVector(self.k, self.m, {lam: c * v for lam, v in self})

    def truncate(self, m: int) -> SchurVector:
        """Image in the ``k x m`` quotient."""
        return SchurVector(self.k, m, self._coeffs)

    def degrees(self) -> set:
        return {sum(lam) for lam in self._coeffs}

    def is_schur_positive(self) -> bool:
        return all(c >= 0 for c in self._coeffs.values())

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "m": self.m,
            "terms": [{"partition": list(lam), "coeff": c}
                      for lam, c in sorted(self._coeffs.items())],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Mapping) -> SchurVector:
        return cls(data["k"], data["m"],
                   {tuple(t["partition"]): t["coeff"] for t in data["terms"]})

    @classmethod
    def from_json(cls, text: str) -> SchurVector:
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        if not self._coeffs:
            return "0"
        return " + ".join(f"{c} * s{format_partition(lam)}"
                          for lam, c in sorted(self._coeffs.items()))


def add(F: SchurVector, G: SchurVector) -> SchurVector:
    return F + G


def scale(F: SchurVector, c: int) -> SchurVector:
    return F.scale(c)


def is_schur_positive(F: SchurVector) -> bool:
    return F.is_schur_positive()


def _addable_corners(lam: Partition):
    rows = list(lam)
    for i in range(len(rows) + 1):
        cur = rows[i] if i < len(rows) else 0
        above = rows[i - 1] if i > 0 else None
        if above is None or cur < above:
            new = rows[:i] + [cur + 1] + rows[i + 1:]
            yield tuple(new)


def multiply_by_s1(F: SchurVector) -> SchurVector:
    """Pieri rule for ``s_1 * F`` inside the same truncated ring."""
    out = {}
    for lam, c in F:
        for nu in _addable_corners(lam):
            out[nu] = out.get(nu, 0) + c
    return SchurVector(F.k, F.m, out)


def omega_dual(F: SchurVector) -> SchurVector:
    """``s_lam -> s_{lam^t}``, from the ``(k, m)`` ring to the ``(m, k)`` ring."""
    if F.m is None:
        raise RingMismatch("omega_dual needs a column bound")
    return SchurVector(F.m, F.k, {conjugate(lam): c for lam, c in F})


def delta(F: SchurVector) -> int:
    """Degree functional: ``s_lam -> f^{lam complement}`` in the k x m rectangle."""
    if F.m is None:
        raise RingMismatch("delta needs a column bound")
    return sum(c * syt_count(complement(lam, F.k, F.m)) for lam, c in F)
