"""Exact rank of integer matrices by fraction-free elimination."""

from __future__ import annotations

from math import gcd


def integer_rank(rows) -> int:
    """Rank over Q of a list of integer vectors (dicts or sequences).

    Rows are reduced in place with integer combinations and divided by their
    content to keep entries small; no fractions or floats are involved.

    >>> integer_rank([[2, 4], [1, 2], [0, 3]])
    2
    """
    pivots = {}  # column -> reduced row with a nonzero entry there
    rank = 0
    for raw in rows:
        row = dict(raw) if isinstance(raw, dict) else {i: v for i, v in enumerate(raw)}
        row = {c: v for c, v in row.items() if v}
        while row:
            col = min(row)
            if col not in pivots:
                g = 0
                for v in row.values():
                    g = gcd(g, v)
                pivots[col] = {c: v // g for c, v in row.items()}
                rank += 1
                break
            piv = pivots[col]
            a, b = piv[col], row[col]
            new = {c: a * v for c, v in row.items()}
            for c, v in piv.items():
                new[c] = new.get(c, 0) - b * v
            row = {c: v for c, v in new.items() if v}
            if row:
                g = 0
                for v in row.values():
                    g = gcd(g, v)
                row = {c: v // g for c, v in row.items()}
    return rank
