"""Iterated integrals on the theta graph: two vertices joined by three edges.

Shows the tropical 1-forms, the loops with their dual forms, how the order of
the forms in an iterated integral matters, and the shuffle relation behind
grouplike signatures.
"""

from combint import build_graph, cint, cycle_basis, dual_bases, is_grouplike, signature

theta = build_graph(["a", "b"], [("e1", "a", "b"), ("e2", "a", "b"), ("e3", "a", "b")])
print(f"theta: {len(theta.vertices)} vertices, {len(theta.closed)} edges, first Betti number {theta.betti}")

loops, etas = dual_bases(theta)
for loop, eta in zip(loops, etas):
    values = ", ".join(f"{e}={eta(e)}" for e in sorted(theta.closed))
    print(f"loop {' '.join(loop.edges):>8}   dual form: {values}")

g1, g2 = loops
path = g1 * g2
print(f"\npath g1 g2 = {' '.join(path.edges)}")
for word in ([0], [1], [0, 1], [1, 0], [0, 0]):
    label = " ".join(f"eta{i + 1}" for i in word)
    print(f"  cint over {label:<10} = {cint(path, [etas[i] for i in word])}")

# the two orders differ, their sum is the product of single integrals
a, b = cint(path, [etas[0], etas[1]]), cint(path, [etas[1], etas[0]])
single = cint(path, [etas[0]]) * cint(path, [etas[1]])
print(f"  eta1 eta2 + eta2 eta1 = {a + b}, product of single integrals = {single}")

sig = signature(path, etas, 3)
print(f"\nsignature up to level 3 is grouplike: {is_grouplike(sig)}")

print("\nthe default cycle basis starts with", [" ".join(w.edges) for w in cycle_basis(theta)])
