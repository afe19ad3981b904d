"""Seeded random graphs, paths, forms and embeddings for the property checks."""

from fractions import Fraction

from combint.forms import WeakEmbedding, forms_basis, TropicalOneForm
from combint.graph import PathWord, bar, build_graph, cycle_basis, reduce
from combint.scalars import EllPoly, Padic
from combint.tensor import TruncatedTensor, exp_letters
from combint.vologodsky import BasePath, PeriodTable


def random_graph(rng, max_vertices=8, max_edges=12, half_open=True, min_betti=0, max_betti=None):
    nv = rng.randint(1, max_vertices)
    vs = [f"v{i}" for i in range(nv)]
    closed = []
    for i in range(1, nv):
        j = rng.randrange(i)
        closed.append((vs[i], vs[j]) if rng.random() < 0.5 else (vs[j], vs[i]))
    room = max_edges - len(closed)
    hi = room if max_betti is None else min(room, max_betti)
    lo = min(min_betti, hi)
    for _ in range(rng.randint(lo, hi)):
        closed.append((rng.choice(vs), rng.choice(vs)))
    stubs = []
    if half_open:
        for _ in range(rng.randint(0, min(3, max_edges - len(closed)))):
            stubs.append(rng.choice(vs))
    return build_graph(vs, [(f"e{k + 1}", a, b) for k, (a, b) in enumerate(closed)],
                       [(f"h{k + 1}", v) for k, v in enumerate(stubs)])


def out_arrows(g, v):
    return [a for a in g.star(v) if a.lstrip("-") in g.closed]


def random_reduced_path(rng, g, length, start=None):
    """Non-backtracking random walk; stops early at a dead end."""
    v = rng.choice(sorted(g.vertices)) if start is None else start
    edges = []
    for _ in range(length):
        choices = [a for a in out_arrows(g, v) if not edges or a != bar(edges[-1])]
        if not choices:
            break
        a = rng.choice(choices)
        edges.append(a)
        v = g.terminal(a)
    return g.path(edges, start=None if edges else v) if edges else g.constant(v)


def random_walk_to(rng, g, start, end, length):
    """A random walk from ``start`` followed by the tree path back to ``end``, reduced."""
    from combint.graph import SpanningTree, core
    w = random_reduced_path(rng, g, length, start)
    t = SpanningTree(core(g))
    return reduce(w * t.between(w.end, end))


def random_loop(rng, g, base, max_letters=3):
    loops = cycle_basis(g, base)
    w = PathWord(base, base, ())
    if not loops:
        return w
    for _ in range(rng.randint(1, max_letters)):
        gen = rng.choice(loops)
        w = w * (gen if rng.random() < 0.5 else gen.inverse())
    return reduce(w)


def random_fraction(rng, lo=-3, hi=3, dens=(1, 2, 3)):
    return Fraction(rng.randint(lo, hi), rng.choice(dens))


def random_form(rng, g):
    total = {}
    for b in forms_basis(g):
        c = random_fraction(rng)
        for e, x in b.values.items():
            total[e] = total.get(e, 0) + c * x
    return TropicalOneForm(g, total)


def random_embedding(rng, target, extra_stubs=2):
    """Induced connected subgraph with every leaving arrow turned into a half-open edge.

    Every target edge at an image vertex is hit, so pullbacks stay harmonic.
    A few extra contracted stubs are added.
    """
    vs = sorted(target.vertices)
    seed = rng.choice(vs)
    chosen = {seed}
    size = rng.randint(1, len(vs))
    frontier = [seed]
    while frontier and len(chosen) < size:
        v = frontier.pop(rng.randrange(len(frontier)))
        for a in out_arrows(target, v):
            w = target.terminal(a)
            if w not in chosen and len(chosen) < size:
                chosen.add(w)
                frontier.append(w)
    names = {v: f"s{i}" for i, v in enumerate(sorted(chosen))}
    closed, half = [], []
    edge_map, half_map = {}, {}
    for e in sorted(target.closed):
        a, b = target.closed[e]
        if a in chosen and b in chosen:
            sid = f"c_{e}"
            closed.append((sid, names[a], names[b]))
            edge_map[sid] = e
        else:
            for arrow in (e, bar(e)):
                if target.initial(arrow) in chosen and target.terminal(arrow) not in chosen:
                    sid = f"o_{arrow.replace('-', 'r')}"
                    half.append((sid, names[target.initial(arrow)]))
                    half_map[sid] = arrow
    for h in sorted(target.half_open):
        v = target.half_open[h]
        if v in chosen:
            sid = f"t_{h}"
            half.append((sid, names[v]))
            half_map[sid] = h
    for k in range(rng.randint(0, extra_stubs)):
        sid = f"x{k}"
        half.append((sid, names[rng.choice(sorted(chosen))]))
        half_map[sid] = None
    source = build_graph(sorted(names.values()), closed, half)
    return WeakEmbedding(source, target, {names[v]: v for v in chosen},
                         edge_map, half_map)


def random_grouplike(rng, h, n, alphabet, kind):
    def scalar():
        c = random_fraction(rng)
        if kind == "ell":
            return EllPoly([c, random_fraction(rng)]) if rng.random() < 0.5 else EllPoly([c])
        if kind == "padic":
            return Padic.from_rational(c + 5 * random_fraction(rng), 5, 20)
        return c
    out = TruncatedTensor.one(h, n, alphabet)
    for _ in range(2):
        out = out * exp_letters([scalar() for _ in range(h)], n, alphabet)
    return out


def random_table(rng, g, n, kinds=("q", "ell", "padic")):
    a, b = rng.choice(sorted(g.vertices)), rng.choice(sorted(g.vertices))
    path = random_walk_to(rng, g, a, b, rng.randint(0, 6))
    nforms = rng.randint(1, 3)
    alphabet = tuple(f"w{i + 1}" for i in range(nforms))
    kind = rng.choice(kinds)
    loops = {f"g{i + 1}": random_grouplike(rng, nforms, n, alphabet, kind) for i in range(len(cycle_basis(g, a)))}
    return PeriodTable(n, alphabet, loops, BasePath(a, b, path.edges, random_grouplike(rng, nforms, n, alphabet, kind)))
