#!/usr/bin/env python3
# Evaluating Gould-Hopper polynomials in both arithmetic modes.
#
# g_m(x, p) = sum_k m!/(k!(m-2k)!) p^k x^(m-2k) equals the Gaussian moment
# E (x + sqrt(2p) N)^m.  The library evaluates it three independent ways;
# in exact mode the results agree to the bit.

from fractions import Fraction

from ghkernel import (
    exact,
    flt,
    gh_eval,
    gh_eval_recurrence,
    gh_moment_oracle,
    hermite_eval,
)

print("== exact mode: rational inputs give rational values ==")
x, p = exact(Fraction(1, 2)), exact(Fraction(-1, 4))
for m in range(7):
    print(f"  g_{m}(1/2, -1/4) = {gh_eval(m, x, p)}")

print()
print("== three evaluation routes, one value ==")
x, p = exact(Fraction(7, 3)), exact(Fraction(-5, 2))
for m in (10, 25, 50):
    direct = gh_eval(m, x, p)
    rec = gh_eval_recurrence(m, x, p)
    mom = gh_moment_oracle(m, x, p)
    print(f"  m={m}: direct == recurrence == moment-expansion: {direct == rec == mom}")

print()
print("== Hermite polynomials are the p = -1 slice: H_n(x) = g_n(2x, -1) ==")
for n in range(6):
    print(f"  H_{n}(1) = {hermite_eval(n, exact(1))}")

print()
print("== float mode (doubles) tracks exact mode ==")
xe, pe = exact(Fraction(5, 2)), exact(Fraction(3, 4))
xf, pf = flt(2.5), flt(0.75)
for m in (5, 15, 30):
    want = float(gh_eval(m, xe, pe).re)
    got = gh_eval_recurrence(m, xf, pf).re
    print(f"  m={m}: exact={want:.6e}  float={got:.6e}  rel diff={abs(got-want)/abs(want):.1e}")

print()
print("== complex arguments work in both modes ==")
z = exact(Fraction(5, 3), Fraction(-8, 3))
print(f"  g_2((5-8i)/3, 1/3) = {gh_eval(2, z, exact(Fraction(1, 3)))}")
