"""Algebraic sum rules: both sides evaluated, residuals reported.

Every checker computes the left and right side of one identity through
independent code paths and wraps them in an :class:`IdentityReport`.  In
exact mode a report passes only with a literally zero residual; in float
mode it passes when the relative residual stays under the caller's
tolerance.  Nothing in this module is randomized.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

# The recurrence path is the numerically accurate float evaluator (the
# direct sum cancels catastrophically in the oscillatory regime); in exact
# mode the two are interchangeable, which the polynomial tests enforce.
from .ghpoly import gh_eval_recurrence as _gh
from .multiindex import compositions, mi_factorial, multinomial, pochhammer
from .scalars import (
    EXACT,
    FLOAT,
    NotExactlyRepresentableError,
    Scalar,
    exact_sqrt,
    lift,
    magnitude,
    one,
    zero,
)

Vector = tuple[Scalar, ...]
Matrix = tuple[Vector, ...]

EXACT_PASS = "exact-pass"
WITHIN_TOLERANCE = "within-tolerance"
FAIL = "fail"

DEFAULT_FLOAT_TOLERANCE = 1e-9


@dataclass(frozen=True)
class PolarizationPair:
    """The two scalars (|u+v| +/- |u-v|) / 2 carrying a vector pair's norms
    and inner product; x >= |y| always."""

    x: Scalar
    y: Scalar

    @property
    def mode(self) -> str:
        return self.x.mode


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one identity check at one parameter point."""

    identity: str
    params: dict[str, str]
    lhs: Scalar
    rhs: Scalar
    residual: Scalar
    mode: str
    verdict: str

    @property
    def passed(self) -> bool:
        return self.verdict in (EXACT_PASS, WITHIN_TOLERANCE)


def relative_residual(lhs: Scalar, rhs: Scalar) -> float:
    """|lhs - rhs| / max(1, |lhs|, |rhs|) as a double."""
    scale = max(1.0, magnitude(lhs), magnitude(rhs))
    return magnitude(lhs - rhs) / scale


def make_report(
    identity: str,
    params: dict[str, str],
    lhs: Scalar,
    rhs: Scalar,
    tolerance: float | None = None,
) -> IdentityReport:
    residual = lhs - rhs
    if lhs.mode == EXACT:
        verdict = EXACT_PASS if residual.is_zero() else FAIL
    else:
        tol = DEFAULT_FLOAT_TOLERANCE if tolerance is None else tolerance
        verdict = WITHIN_TOLERANCE if relative_residual(lhs, rhs) <= tol else FAIL
    return IdentityReport(identity, params, lhs, rhs, residual, lhs.mode, verdict)


# ---------------------------------------------------------------------------
# vector and matrix helpers over Scalars


def vec_add(u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    """Bilinear (transpose, non-conjugated) inner product sum_i u_i v_i."""
    if len(u) != len(v):
        raise ValueError("dimension mismatch")
    total = zero(u[0].mode)
    for a, b in zip(u, v):
        total = total + a * b
    return total


def norm_sq(u: Sequence[Scalar]) -> Scalar:
    return dot(u, u)


def mat_identity(n: int, mode: str) -> Matrix:
    return tuple(
        tuple(one(mode) if r == c else zero(mode) for c in range(n))
        for r in range(n)
    )


def mat_transpose(a: Matrix) -> Matrix:
    return tuple(tuple(row[i] for row in a) for i in range(len(a[0])))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if len(a[0]) != len(b):
        raise ValueError("shape mismatch")
    bt = mat_transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def mat_vec(a: Matrix, v: Sequence[Scalar]) -> Vector:
    if len(a[0]) != len(v):
        raise ValueError("shape mismatch")
    return tuple(dot(row, v) for row in a)


def mat_flatten(a: Matrix) -> Vector:
    return tuple(entry for row in a for entry in row)


def _check_rectangular(a: Matrix) -> tuple[int, int]:
    rows = len(a)
    cols = len(a[0])
    if any(len(row) != cols for row in a):
        raise ValueError("ragged matrix")
    return rows, cols


# ---------------------------------------------------------------------------
# polarization


def _real_norm(u: Sequence[Scalar]) -> Scalar:
    """Euclidean norm of a real vector, exact when representable."""
    nsq = norm_sq(u)
    if nsq.mode == FLOAT:
        return Scalar(FLOAT, math.sqrt(nsq.re), 0.0)
    root = exact_sqrt(nsq)
    if root is None:
        raise NotExactlyRepresentableError(
            f"norm^2 = {nsq.re} is not a perfect rational square; "
            "rerun in float mode"
        )
    return root


def polarization_pair(xv: Sequence[Scalar], yv: Sequence[Scalar]) -> PolarizationPair:
    """Reduce a real vector pair to the scalars x = (|u+v|+|u-v|)/2,
    y = (|u+v|-|u-v|)/2.

    Exact mode requires both squared norms to be perfect rational squares;
    otherwise NotExactlyRepresentableError is raised and the caller may rerun
    in float mode.
    """
    if len(xv) != len(yv):
        raise ValueError("dimension mismatch")
    if any(not s.is_real() for s in (*xv, *yv)):
        raise ValueError("polarization needs real vectors")
    plus = _real_norm(vec_add(xv, yv))
    minus = _real_norm(vec_sub(xv, yv))
    half = lift(Fraction(1, 2), plus.mode)
    return PolarizationPair((plus + minus) * half, (plus - minus) * half)


def matrix_polarization(xm: Matrix, ym: Matrix) -> PolarizationPair:
    """Polarization through unsquared Frobenius norms.

    || a ||_F is the Euclidean norm of the flattened matrix, so this is the
    vector construction applied entry-wise: x = (||xm+ym||_F + ||xm-ym||_F)/2
    and y with the minus sign.
    """
    shape_x = _check_rectangular(xm)
    shape_y = _check_rectangular(ym)
    if shape_x != shape_y:
        raise ValueError(f"shape mismatch: {shape_x} vs {shape_y}")
    return polarization_pair(mat_flatten(xm), mat_flatten(ym))


# ---------------------------------------------------------------------------
# Graczyk inner-product sum rule


def _gh_table(degree_max: int, v: Sequence[Scalar], p: Scalar) -> list[list[Scalar]]:
    """Per-coordinate evaluations for all degrees up to degree_max."""
    return [[_gh(d, coord, p) for d in range(degree_max + 1)] for coord in v]


def graczyk_lhs(M: int, xv: Sequence[Scalar], yv: Sequence[Scalar], p: Scalar) -> Scalar:
    """sum_{|m|=M} g_m(xv, p) g_m(yv, p) / m! over all compositions."""
    if len(xv) != len(yv):
        raise ValueError("dimension mismatch")
    mode = p.mode
    table_x = _gh_table(M, xv, p)
    table_y = _gh_table(M, yv, p)
    total = zero(mode)
    for m in compositions(M, len(xv)):
        term = one(mode)
        for j, mj in enumerate(m):
            term = term * table_x[j][mj] * table_y[j][mj]
        total = total + term / lift(mi_factorial(m), mode)
    return total


def graczyk_rhs(M: int, pair: PolarizationPair, n: int, p: Scalar) -> Scalar:
    """sum_j (2p)^(2j) / (j!(M-2j)!) ((n-1)/2)_j g_{M-2j}(x,p) g_{M-2j}(y,p)."""
    if n < 1:
        raise ValueError("dimension must be at least 1")
    mode = p.mode
    half_dof = lift(Fraction(n - 1, 2), mode)
    two_p = lift(2, mode) * p
    total = zero(mode)
    for j in range(M // 2 + 1):
        denom = math.factorial(j) * math.factorial(M - 2 * j)
        weight = two_p ** (2 * j) / lift(denom, mode) * pochhammer(half_dof, j)
        total = total + weight * _gh(M - 2 * j, pair.x, p) * _gh(
            M - 2 * j, pair.y, p
        )
    return total


def graczyk_identity(
    M: int,
    xv: Sequence[Scalar],
    yv: Sequence[Scalar],
    p: Scalar,
    tolerance: float | None = None,
) -> IdentityReport:
    """Both sides of the inner-product sum rule at one parameter point."""
    pair = polarization_pair(xv, yv)
    lhs = graczyk_lhs(M, xv, yv, p)
    rhs = graczyk_rhs(M, pair, len(xv), p)
    params = {
        "n": str(len(xv)),
        "M": str(M),
        "p": str(p),
        "xv": _fmt_vector(xv),
        "yv": _fmt_vector(yv),
        "pair_x": str(pair.x),
        "pair_y": str(pair.y),
    }
    return make_report("graczyk", params, lhs, rhs, tolerance)


def inner_product_moment_identity(
    M: int,
    xv: Sequence[Scalar],
    yv: Sequence[Scalar],
    p: Scalar,
    tolerance: float | None = None,
) -> IdentityReport:
    """Exact M-th moment of both sides of the stochastic inner-product form.

    The stochastic representation scales its noise by sqrt(p), while the
    polynomial parameter enters as sigma^2 = 2p; the conversion is p -> p/2.
    E[lhs^M] and E[rhs^M] are then M! times the two Graczyk sides.
    """
    half_p = p * lift(Fraction(1, 2), p.mode)
    pair = polarization_pair(xv, yv)
    scale = lift(math.factorial(M), p.mode)
    lhs = scale * graczyk_lhs(M, xv, yv, half_p)
    rhs = scale * graczyk_rhs(M, pair, len(xv), half_p)
    params = {
        "n": str(len(xv)),
        "M": str(M),
        "p": str(p),
        "p_convention": "sqrt(p)",
        "xv": _fmt_vector(xv),
        "yv": _fmt_vector(yv),
    }
    return make_report("inner-product-moments", params, lhs, rhs, tolerance)


def matrix_moment_identity(
    M: int,
    xm: Matrix,
    ym: Matrix,
    tolerance: float | None = None,
) -> IdentityReport:
    """Exact M-th moment of the matrix trace representation.

    tr((xm+N)^t (ym+M)) is the flattened-vector inner product with
    unit-variance noise, so the moment identity is the flattened Graczyk
    rule at polynomial parameter 1/2 and dimension rows*cols.
    """
    rows, cols = _check_rectangular(xm)
    pair = matrix_polarization(xm, ym)
    flat_x, flat_y = mat_flatten(xm), mat_flatten(ym)
    mode = pair.mode
    half = lift(Fraction(1, 2), mode)
    scale = lift(math.factorial(M), mode)
    lhs = scale * graczyk_lhs(M, flat_x, flat_y, half)
    rhs = scale * graczyk_rhs(M, pair, rows * cols, half)
    params = {
        "shape": f"{rows}x{cols}",
        "M": str(M),
        "p_convention": "unit-variance noise, polynomial parameter 1/2",
        "xm": _fmt_matrix(xm),
        "ym": _fmt_matrix(ym),
    }
    return make_report("matrix", params, lhs, rhs, tolerance)


# ---------------------------------------------------------------------------
# complex rotations


def complex_givens(n: int, i: int, j: int, t: Scalar) -> Matrix:
    """Complex-orthogonal Givens block from the Cayley parametrization.

    c = (1-t^2)/(1+t^2) and s = 2t/(1+t^2) satisfy c^2 + s^2 = 1 exactly for
    any rational or Gaussian-rational t with t^2 != -1; the (i, j) plane gets
    the block [[c, -s], [s, c]].
    """
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError("plane indices out of range")
    if i == j:
        raise ValueError("plane indices must differ")
    unit = one(t.mode)
    denom = unit + t * t
    if denom.is_zero():
        raise ValueError("t^2 = -1 is outside the Cayley chart")
    c = (unit - t * t) / denom
    s = (t + t) / denom
    rows = [list(row) for row in mat_identity(n, t.mode)]
    rows[i][i] = c
    rows[i][j] = -s
    rows[j][i] = s
    rows[j][j] = c
    return tuple(tuple(row) for row in rows)


def orthogonality_check(o: Matrix, tolerance: float = 1e-12) -> bool:
    """True iff O O^t = O^t O = I under the bilinear (non-conjugated) form."""
    rows, cols = _check_rectangular(o)
    if rows != cols:
        raise ValueError("matrix must be square")
    mode = o[0][0].mode
    target = mat_identity(rows, mode)
    for product in (mat_mul(o, mat_transpose(o)), mat_mul(mat_transpose(o), o)):
        for prow, trow in zip(product, target):
            for got, want in zip(prow, trow):
                if mode == EXACT:
                    if got != want:
                        return False
                elif magnitude(got - want) > tolerance:
                    return False
    return True


def rotation_sumrule(
    m: int,
    o: Matrix,
    i: int,
    xv: Sequence[Scalar],
    p: Scalar,
    tolerance: float | None = None,
    label: str | None = None,
) -> IdentityReport:
    """g_m((O xv)_i, p) against its multinomial expansion over rows of O."""
    n = len(o)
    if len(xv) != n:
        raise ValueError("dimension mismatch")
    if not (0 <= i < n):
        raise IndexError("row index out of range")
    mode = p.mode
    rotated = mat_vec(o, xv)
    lhs = _gh(m, rotated[i], p)
    table = _gh_table(m, xv, p)
    powers = [[o[i][j] ** d for d in range(m + 1)] for j in range(n)]
    rhs = zero(mode)
    for mi in compositions(m, n):
        term = lift(multinomial(m, mi), mode)
        for j, mj in enumerate(mi):
            term = term * powers[j][mj] * table[j][mj]
        rhs = rhs + term
    params = {
        "m": str(m),
        "n": str(n),
        "i": str(i),
        "p": str(p),
        "xv": _fmt_vector(xv),
        "rotation": label if label is not None else _fmt_matrix(o),
    }
    return make_report("rotation", params, lhs, rhs, tolerance)


# ---------------------------------------------------------------------------
# factorization sum rule


def coeff_C(m1: int, m2: int, r: int, c: Scalar, s: Scalar) -> Scalar:
    """Connection coefficient of the factorization rule.

    C_{m1,m2,r}(c,s) = sum_l binom(m1, r-l) binom(m2, l) (-1)^(m1-r+l)
                       c^(m2+r-2l) s^(m1-r+2l),
    with out-of-range binomials zero and the 0^0 = 1 convention.
    """
    if not (0 <= r <= m1 + m2):
        raise ValueError("r must lie in [0, m1+m2]")
    mode = c.mode
    total = zero(mode)
    for l in range(min(m2, r) + 1):
        b1 = math.comb(m1, r - l) if r - l <= m1 else 0
        if b1 == 0:
            continue
        weight = b1 * math.comb(m2, l) * (-1) ** (m1 - r + l)
        total = total + lift(weight, mode) * c ** (m2 + r - 2 * l) * s ** (
            m1 - r + 2 * l
        )
    return total


def factorization_sumrule(
    m1: int,
    m2: int,
    c: Scalar,
    s: Scalar,
    x: Scalar,
    y: Scalar,
    p: Scalar,
    tolerance: float | None = None,
) -> IdentityReport:
    """g_{m1}(cx-sy, p) g_{m2}(sx+cy, p) against its connection expansion."""
    mode = p.mode
    unit = one(mode)
    cs_check = c * c + s * s
    if mode == EXACT:
        if cs_check != unit:
            raise ValueError("c^2 + s^2 must equal 1 exactly")
    elif magnitude(cs_check - unit) > 1e-12:
        raise ValueError("c^2 + s^2 must equal 1")
    lhs = _gh(m1, c * x - s * y, p) * _gh(m2, s * x + c * y, p)
    rhs = zero(mode)
    for r in range(m1 + m2 + 1):
        rhs = rhs + coeff_C(m1, m2, r, c, s) * _gh(r, x, p) * _gh(
            m1 + m2 - r, y, p
        )
    params = {
        "m1": str(m1),
        "m2": str(m2),
        "c": str(c),
        "s": str(s),
        "x": str(x),
        "y": str(y),
        "p": str(p),
    }
    return make_report("factorization", params, lhs, rhs, tolerance)


def _fmt_vector(v: Sequence[Scalar]) -> str:
    return ",".join(str(s) for s in v)


def _fmt_matrix(a: Matrix) -> str:
    return ";".join(_fmt_vector(row) for row in a)
