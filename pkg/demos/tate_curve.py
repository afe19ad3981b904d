"""Vologodsky integrals of dz/z on a Tate curve with split multiplicative reduction.

The dual graph of a Tate curve with q = p^m is a cycle of m vertices. Its
period table records Berkovich-Coleman integrals: the loop has periods
(m ell)^k / k!, the base path (Log b - Log a)^k / k!. The engine removes the
path dependence and lands on (Log b - Log a - ell (lift b - lift a))^k / k!.
"""

import sys
from fractions import Fraction

from combint import TateCurveSpec, tate_expected, tate_graph, tate_periods, vologodsky, vologodsky_single

p, m, n = 5, 2, 3
a, b = Fraction(1, 5), Fraction(30)
if len(sys.argv) == 6:
    p, m, n = (int(x) for x in sys.argv[1:4])
    a, b = Fraction(sys.argv[4]), Fraction(sys.argv[5])

spec = TateCurveSpec.from_rationals(p, m, a, b, n, prec=20)
g = tate_graph(m)
table = tate_periods(spec)

print(f"p = {p}, m = {m}, level {n}, a = {a}, b = {b}")
print(f"lifts on R/{m}Z: {spec.a_lift} -> {spec.b_lift}, vertices {spec.start} -> {spec.end}")
print(f"base path edges: {' '.join(table.path.edges) or '(constant)'}")
print(f"loop period, level 1: {table.loops['gamma'][(0,)]}")
print(f"path period, level 1: {table.path.periods[(0,)]}")

got = vologodsky(g, table)
expected = tate_expected(spec)
for k in range(1, n + 1):
    print(f"\nlevel {k}:\n  engine   {got[(0,) * k]}\n  expected {expected[(0,) * k]}")
print(f"\nsingle-integral formula: {vologodsky_single(g, table)[0]}")
print(f"match: {got == expected}")

zero = TateCurveSpec.from_rationals(p, 1, 1, p, n)
print(f"\nfrom 1 to p on the nodal cubic: {vologodsky(tate_graph(1), tate_periods(zero))}")
