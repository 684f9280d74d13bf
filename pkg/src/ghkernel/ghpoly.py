"""Gould-Hopper polynomial evaluation and the Hermite specialization.

g_m(x, p) is the gap-2 polynomial family

    g_m(x, p) = sum_{k=0}^{floor(m/2)} m! / (k! (m-2k)!) * p^k * x^(m-2k),

equal to the shifted Gaussian moment E (x + sigma N)^m with sigma^2 = 2p.
Three independent evaluation routes are provided (direct sum, three-term
recurrence, moment expansion); in exact mode they must agree to the bit.
"""

from __future__ import annotations

import math
from collections.abc import Sequence

from .multiindex import MultiIndex
from .scalars import ModeMismatchError, Scalar, lift, one, zero


def _common_mode(x: Scalar, p: Scalar) -> str:
    if x.mode != p.mode:
        raise ModeMismatchError("argument and parameter must share a mode")
    return x.mode


def gh_eval(m: int, x: Scalar, p: Scalar) -> Scalar:
    """Direct gap-2 sum; the reference evaluation path."""
    if m < 0:
        raise ValueError("degree must be a natural number")
    mode = _common_mode(x, p)
    total = zero(mode)
    m_fact = math.factorial(m)
    for k in range(m // 2 + 1):
        coeff = m_fact // (math.factorial(k) * math.factorial(m - 2 * k))
        total = total + lift(coeff, mode) * p**k * x ** (m - 2 * k)
    return total


def gh_eval_recurrence(m: int, x: Scalar, p: Scalar) -> Scalar:
    """Three-term path: g_0 = 1, g_1 = x, g_{m+1} = x g_m + 2p m g_{m-1}."""
    if m < 0:
        raise ValueError("degree must be a natural number")
    mode = _common_mode(x, p)
    if m == 0:
        return one(mode)
    two_p = lift(2, mode) * p
    prev, cur = one(mode), x
    for degree in range(1, m):
        prev, cur = cur, x * cur + two_p * lift(degree, mode) * prev
    return cur


def gh_multi_eval(m: MultiIndex, xs: Sequence[Scalar], p: Scalar) -> Scalar:
    """Coordinate-wise product g_m(x, p) = prod_i g_{m_i}(x_i, p)."""
    if len(m) != len(xs):
        raise ValueError(f"index has {len(m)} parts but vector has {len(xs)}")
    out = one(p.mode)
    for part, coord in zip(m, xs):
        out = out * gh_eval(part, coord, p)
    return out


def hermite_eval(n: int, x: Scalar) -> Scalar:
    """Physicists' Hermite polynomial H_n(x) = g_n(2x, -1)."""
    mode = x.mode
    return gh_eval(n, lift(2, mode) * x, lift(-1, mode))


def gaussian_moment(order: int) -> int:
    """E N^order for a standard normal: 0 for odd order, (2k)!/(2^k k!) else."""
    if order < 0:
        raise ValueError("order must be a natural number")
    if order % 2:
        return 0
    k = order // 2
    return math.factorial(2 * k) // (2**k * math.factorial(k))


def gh_moment_oracle(m: int, x: Scalar, p: Scalar) -> Scalar:
    """Moment route: E (x + sigma N)^m expanded binomially, sigma^2 = 2p.

    Odd Gaussian moments vanish, so only sigma^2 = 2p enters and no square
    root of p is ever taken.  Independent of the coefficient formula used by
    gh_eval; the two must agree exactly in exact mode.
    """
    if m < 0:
        raise ValueError("degree must be a natural number")
    mode = _common_mode(x, p)
    sigma_sq = lift(2, mode) * p
    total = zero(mode)
    for k in range(m // 2 + 1):
        weight = math.comb(m, 2 * k) * gaussian_moment(2 * k)
        total = total + lift(weight, mode) * sigma_sq**k * x ** (m - 2 * k)
    return total
