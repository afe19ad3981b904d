"""The canonical correction of a path on a cycle of three vertices.

A path from v0 to v2 along two edges picks up nonzero combinatorial integrals.
The correction is a series in (g - 1), g the loop, chosen so that the corrected
path has trivial signature. On an m-cycle the coefficients are the binomial
series of (1 + x)^(-k/m) for a path of k edges.
"""

from fractions import Fraction

from combint import build_graph, canonical_correction, signature

m = 3
cycle = build_graph([f"v{i}" for i in range(m)], [(f"e{i + 1}", f"v{i}", f"v{(i + 1) % m}") for i in range(m)])
path = cycle.path(["e1", "e2"])
n = 4

corr = canonical_correction(cycle, path, n)
print(f"path {' '.join(path.edges)} on a {m}-cycle, correction up to level {n}")
print(f"loop g = {' '.join(corr.loops[0].edges)}")


def binomial(a, j):
    out = Fraction(1)
    for i in range(j):
        out *= (a - i) / Fraction(i + 1)
    return out


for j in range(n + 1):
    c = corr.coefficients().get((0,) * j, 0)
    print(f"  (g - 1)^{j}: {str(c):>10}   binomial(-2/3, {j}) = {binomial(Fraction(-2, 3), j)}")

expanded = corr.symbolic()
print("\nas a combination of powers of g:")
for w in sorted(expanded, key=len):
    print(f"  g^{len(w)}: {expanded[w]}")

q_path = corr.canonical_path()
print(f"\nsignature of the corrected path: {signature(q_path, corr.forms, n)}")
print(f"signature of the bare path:      {signature(path, corr.forms, n)}")
