#!/usr/bin/env python3
# Testing the equality-in-distribution claims by seeded Monte Carlo.
#
# The inner product of two noisy vectors has the same law as a product of
# two noisy scalars plus an independent chi-coupled term.  Sampling both
# sides and matching moments 1..4 within 5 combined standard errors makes
# that claim checkable; identical seeds make every run bit-reproducible.

from ghkernel import (
    RngStream,
    chi_even_moment,
    chi_merge_samples,
    collect_stats,
    flt,
    inner_product_lhs_samples,
    inner_product_rhs_samples,
    moment_match,
    moment_match_exact,
    polarization_pair,
    sample_chi,
)

COUNT = 400_000

print("== inner product representation, n = 3, p = 2 ==")
xv, yv = [1.0, 2.0, 2.0], [0.5, 1.0, 1.0]
pair = polarization_pair(tuple(flt(v) for v in xv), tuple(flt(v) for v in yv))
print(f"  polarization pair: x = {pair.x.re:.4f}, y = {pair.y.re:.4f}")

lhs = inner_product_lhs_samples(xv, yv, 2.0, RngStream(1234, 0), COUNT)
rhs = inner_product_rhs_samples(pair, 3, 2.0, RngStream(1234, 1), COUNT)
for verdict in moment_match(collect_stats(lhs), collect_stats(rhs), order=4, z=5.0):
    print(f"  moment {verdict.order}: lhs = {verdict.lhs:12.4f}  rhs = {verdict.rhs:12.4f}"
          f"  |diff| = {abs(verdict.difference):9.4f}  tol = {verdict.tolerance:8.4f}"
          f"  -> {'pass' if verdict.passed else 'FAIL'}")

print()
print("== chi merge: sqrt(chi_3^2 + chi_4^2) has the chi_7 law ==")
merged = chi_merge_samples(RngStream(99, 0), 3, 4, COUNT)
direct = sample_chi(RngStream(99, 1), 7, COUNT)
for verdict in moment_match(collect_stats(merged), collect_stats(direct), order=4, z=5.0):
    print(f"  moment {verdict.order}: merged = {verdict.lhs:9.4f}  direct = {verdict.rhs:9.4f}"
          f"  -> {'pass' if verdict.passed else 'FAIL'}")

print()
print("== even chi moments also have exact rational values: E chi_k^2j = 2^j (k/2)_j ==")
targets = {2: float(chi_even_moment(7, 1)), 4: float(chi_even_moment(7, 2))}
print(f"  exact targets: E chi_7^2 = {targets[2]:.0f}, E chi_7^4 = {targets[4]:.0f}")
for verdict in moment_match_exact(collect_stats(merged), targets, z=5.0):
    print(f"  order {verdict.order}: empirical = {verdict.lhs:9.4f}"
          f"  -> {'pass' if verdict.passed else 'FAIL'}")

print()
print("== same seed, same stream, same numbers ==")
again = chi_merge_samples(RngStream(99, 0), 3, 4, COUNT)
print(f"  rerun is bit-identical: {(merged == again).all()}")
