#!/usr/bin/env python3
# Machine-checking the algebraic sum rules with zero residual.
#
# Every identity below is polynomial in its inputs, so over exact rational
# (or Gaussian-rational) parameters both sides can be compared literally.
# The checkers return IdentityReport records with lhs, rhs, residual and a
# verdict that is "exact-pass" only when the residual is exactly zero.

from fractions import Fraction

from ghkernel import (
    complex_givens,
    exact,
    factorization_sumrule,
    graczyk_identity,
    graczyk_sweep,
    mat_mul,
    matrix_moment_identity,
    orthogonality_check,
    polarization_pair,
    rotation_sumrule,
)

print("== inner-product sum rule (polarization reduces vectors to scalars) ==")
xv = (exact(3), exact(4))
pair = polarization_pair(xv, xv)
print(f"  xv = yv = (3,4) polarizes to (x, y) = ({pair.x}, {pair.y})")
report = graczyk_identity(2, xv, xv, exact(1))
print(f"  M=2, p=1: lhs = {report.lhs}, rhs = {report.rhs}, verdict = {report.verdict}")

print()
print("== the full built-in grid runs in a few seconds ==")
reports = graczyk_sweep()
print(f"  {len(reports)} parameter points, all exact:"
      f" {all(r.verdict == 'exact-pass' for r in reports)}")

print()
print("== complex rotations: Cayley parameters give exact c^2 + s^2 = 1 ==")
t = exact(0, Fraction(1, 2))  # t = i/2
rot = complex_givens(2, 0, 1, t)
print(f"  t = i/2: c = {rot[0][0]}, s = {rot[1][0]}")
print(f"  orthogonal under the bilinear form: {orthogonality_check(rot)}")
report = rotation_sumrule(3, rot, 0, (exact(1), exact(2)), exact(Fraction(1, 3)))
print(f"  degree-3 sum rule: lhs = {report.lhs}, verdict = {report.verdict}")

print()
print("== products of rotation blocks stay in the group ==")
prod = mat_mul(complex_givens(3, 0, 1, exact(1, 1)), complex_givens(3, 1, 2, exact(2)))
report = rotation_sumrule(4, prod, 1, (exact(1), exact(2), exact(3)), exact(1))
print(f"  n=3 product rotation, m=4: verdict = {report.verdict}")

print()
print("== factorization rule connects rotated products to cross terms ==")
report = factorization_sumrule(
    3, 2,
    exact(Fraction(3, 5)), exact(Fraction(4, 5)),
    exact(1), exact(2), exact(Fraction(-1, 2)),
)
print(f"  (c,s) = (3/5,4/5), m1=3, m2=2: lhs = {report.lhs}, verdict = {report.verdict}")

print()
print("== matrix version: trace moments through Frobenius polarization ==")
xm = ((exact(3), exact(0)), (exact(0), exact(0)))
ym = ((exact(0), exact(4)), (exact(0), exact(0)))
for m in (2, 4, 6):
    report = matrix_moment_identity(m, xm, ym)
    print(f"  M={m}: lhs = {report.lhs}, verdict = {report.verdict}")
