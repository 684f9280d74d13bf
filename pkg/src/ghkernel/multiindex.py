"""Multi-index combinatorics: lengths, factorials, compositions, multinomials.

A multi-index is a plain tuple of naturals.  Everything here is computed with
exact big integers; the only Scalar-valued operation is the Pochhammer
symbol, which must work at rational (half-integer) arguments.
"""

from __future__ import annotations

import math
from collections.abc import Iterator

from .scalars import Scalar, lift

MultiIndex = tuple[int, ...]


def mi_length(m: MultiIndex) -> int:
    """Sum of the parts, |m| = m1 + ... + mn."""
    return sum(m)


def mi_factorial(m: MultiIndex) -> int:
    """Product of the factorials of the parts, m! = m1! ... mn!."""
    out = 1
    for part in m:
        out *= math.factorial(part)
    return out


def compositions(total: int, n: int) -> Iterator[MultiIndex]:
    """Every n-part composition of `total`, exactly once.

    Order is lexicographic descending on the parts, so enumeration (and any
    report built from it) is reproducible byte for byte:
    compositions(2, 2) -> (2,0), (1,1), (0,2).
    """
    if n < 1:
        raise ValueError("a multi-index needs at least one part")
    if total < 0:
        raise ValueError("total must be a natural number")
    if n == 1:
        yield (total,)
        return
    for head in range(total, -1, -1):
        for tail in compositions(total - head, n - 1):
            yield (head,) + tail


def multinomial(m: int, parts: MultiIndex) -> int:
    """Exact multinomial coefficient m! / (m1! ... mn!)."""
    if mi_length(parts) != m:
        raise ValueError(f"parts {parts} do not sum to {m}")
    return math.factorial(m) // mi_factorial(parts)


def pochhammer(a: Scalar, j: int) -> Scalar:
    """Rising factorial a (a+1) ... (a+j-1); empty product 1 when j = 0.

    Computed by iterated products rather than Gamma ratios so rational and
    half-integer arguments stay exact.
    """
    if j < 0:
        raise ValueError("order must be a natural number")
    out = lift(1, a.mode)
    for step in range(j):
        out = out * (a + lift(step, a.mode))
    return out
