"""Tropical 1-forms on graphs and single combinatorial integration."""

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .errors import (
    HalfOpenEdgeInChain,
    InvalidEmbedding,
    NotABasis,
    NotHarmonic,
    NotHarmonicAfterPullback,
    UnknownEdge,
)
from .graph import PathWord, bar, core, cycle_basis, edge_of, is_reversed


class TropicalOneForm:
    """Antisymmetric, harmonic edge function.

    ``values`` maps edge ids to the value on the stored orientation (closed
    edges ``from -> to``, half-open edges pointing away from their vertex);
    missing edges are 0.
    """

    def __init__(self, graph, values=None, check=True):
        self.graph = graph
        vals = {}
        for e, c in (values or {}).items():
            if not graph.has_edge(e):
                raise UnknownEdge(e)
            c = Fraction(c)
            if c != 0:
                vals[e] = c
        self.values = vals
        if check:
            bad = self.defect()
            if bad:
                raise NotHarmonic(f"harmonicity fails at {bad}")

    def __call__(self, arrow):
        v = self.values.get(edge_of(arrow), Fraction(0))
        return -v if is_reversed(arrow) else v

    def defect(self):
        """Vertices where the outgoing values do not sum to zero."""
        return [v for v in self.graph.vertices if sum((self(a) for a in self.graph.star(v)), Fraction(0)) != 0]

    def vector(self):
        return [self.values.get(e, Fraction(0)) for e in self.graph.edges]

    def __add__(self, other):
        keys = set(self.values) | set(other.values)
        return TropicalOneForm(self.graph, {e: self.values.get(e, 0) + other.values.get(e, 0) for e in keys}, check=False)

    def __neg__(self):
        return TropicalOneForm(self.graph, {e: -c for e, c in self.values.items()}, check=False)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        return TropicalOneForm(self.graph, {e: v * c for e, v in self.values.items()}, check=False)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, TropicalOneForm) and self.values == other.values

    __hash__ = None

    def __repr__(self):
        return f"TropicalOneForm({ {e: str(c) for e, c in sorted(self.values.items())} })"


def harmonicity_matrix(g):
    """Rows indexed by sorted vertices, columns by ``g.edges``."""
    rows = []
    for v in sorted(g.vertices):
        row = []
        for e in g.edges:
            c = 0
            if g.initial(e) == v:
                c += 1
            if g.terminal(e) == v:
                c -= 1
            row.append(Fraction(c))
        rows.append(row)
    return rows


def forms_basis(g):
    """Basis of the tropical 1-forms, from the nullspace of the harmonicity system."""
    edges = g.edges
    basis = linalg.nullspace(harmonicity_matrix(g), n_cols=len(edges))
    return [TropicalOneForm(g, dict(zip(edges, v))) for v in basis]


def _as_chain(chain):
    if isinstance(chain, PathWord):
        chain = chain.edges
    if isinstance(chain, dict):
        return chain.items()
    return [(a, 1) for a in chain]


def single_cint(chain, form):
    """Integrate a form over a formal sum of closed arrows (or a path)."""
    total = Fraction(0)
    for a, c in _as_chain(chain):
        if edge_of(a) in form.graph.half_open:
            raise HalfOpenEdgeInChain(f"half-open edge {a!r} in a chain")
        if edge_of(a) not in form.graph.closed:
            raise UnknownEdge(a)
        total += c * form(a)
    return total


def form_to_cycle(form):
    """The log-homology representative ``sum_e form(e) e`` as ``{edge_id: coeff}``."""
    return dict(sorted(form.values.items()))


def chain_of(path):
    """Abelianize a path into ``{edge_id: coeff}`` on stored orientations."""
    out = {}
    for a in path.edges:
        e = edge_of(a)
        out[e] = out.get(e, 0) + (-1 if is_reversed(a) else 1)
    return {e: c for e, c in out.items() if c}


def dual_forms(g, loops):
    """Forms ``eta_i`` with ``single_cint(loops[j], eta_i) == delta_ij``.

    The forms vanish on half-open edges; restricted to the core they are the
    unique dual basis, since the core's forms pair perfectly with its cycles.
    """
    gc = core(g)
    basis = forms_basis(gc)
    if len(loops) != len(basis):
        raise NotABasis(f"{len(loops)} loops given but H_1 has rank {len(basis)}")
    if not basis:
        return []
    gram = [[single_cint(loop, b) for b in basis] for loop in loops]
    try:
        inv = linalg.inverse(gram)
    except ZeroDivisionError:
        raise NotABasis("loop classes are linearly dependent") from None
    out = []
    for i in range(len(loops)):
        vals = {}
        for k, b in enumerate(basis):
            for e, c in b.values.items():
                vals[e] = vals.get(e, 0) + c * inv[k][i]
        out.append(TropicalOneForm(g, vals))
    return out


def dual_bases(g, base=None):
    """Spanning-tree loops at ``base`` and their dual forms."""
    loops = cycle_basis(g, base)
    return loops, dual_forms(g, loops)


@dataclass
class WeakEmbedding:
    """Weak embedding ``source -> target``.

    ``edge_map`` sends each closed edge id to the target arrow that its stored
    orientation maps to. ``half_open_map`` sends each half-open edge id to
    ``None`` (contracted to its vertex) or to the target arrow of its outward
    orientation, which is either a half-open edge or a closed edge whose far
    end is outside the image.
    """

    source: object
    target: object
    vertex_map: dict
    edge_map: dict
    half_open_map: dict = field(default_factory=dict)

    def __post_init__(self):
        s, t = self.source, self.target
        if set(self.vertex_map) != set(s.vertices) or set(self.edge_map) != set(s.closed) \
                or set(self.half_open_map) != set(s.half_open):
            raise InvalidEmbedding("maps must be defined on every vertex and edge of the source")
        images = list(self.vertex_map.values())
        if len(set(images)) != len(images) or any(v not in t.vertices for v in images):
            raise InvalidEmbedding("vertex map must be injective into the target")
        arrows = []
        for e, a in self.edge_map.items():
            if edge_of(a) not in t.closed:
                raise InvalidEmbedding(f"closed edge {e!r} must map to a closed edge")
            frm, to = s.closed[e]
            if t.initial(a) != self.vertex_map[frm] or t.terminal(a) != self.vertex_map[to]:
                raise InvalidEmbedding(f"edge {e!r} does not commute with endpoints")
            arrows += [a, bar(a)]
        if len(set(arrows)) != len(arrows):
            raise InvalidEmbedding("closed directed edges must map injectively")
        image = set(images)
        for h, a in self.half_open_map.items():
            if a is None:
                continue
            if not t.has_edge(edge_of(a)) or t.initial(a) != self.vertex_map[s.half_open[h]]:
                raise InvalidEmbedding(f"half-open edge {h!r} must leave the image of its vertex")
            if edge_of(a) in t.closed and t.terminal(a) in image:
                raise InvalidEmbedding(f"half-open edge {h!r} maps to a closed edge inside the image")
            if edge_of(a) in t.half_open and is_reversed(a):
                raise InvalidEmbedding(f"half-open edge {h!r} must map to an outward orientation")

    def arrow(self, a):
        """Image of a closed source arrow."""
        b = self.edge_map[edge_of(a)]
        return bar(b) if is_reversed(a) else b

    def push_path(self, path):
        return PathWord(self.vertex_map[path.start], self.vertex_map[path.end],
                        tuple(self.arrow(a) for a in path.edges))

    def compose(self, after):
        """The embedding ``after o self``."""
        half = {}
        for h, a in self.half_open_map.items():
            if a is None:
                half[h] = None
            elif edge_of(a) in self.target.closed:
                half[h] = after.arrow(a)
            else:
                half[h] = after.half_open_map[a]
        return WeakEmbedding(
            self.source, after.target,
            {v: after.vertex_map[w] for v, w in self.vertex_map.items()},
            {e: after.arrow(a) for e, a in self.edge_map.items()},
            half,
        )


def pullback(f, form):
    """Pull a form on ``f.target`` back to ``f.source``.

    Contracted half-open edges map to a vertex and get the value 0; the
    result is checked for harmonicity.
    """
    vals = {e: form(a) for e, a in f.edge_map.items()}
    for h, a in f.half_open_map.items():
        vals[h] = Fraction(0) if a is None else form(a)
    try:
        return TropicalOneForm(f.source, vals)
    except NotHarmonic as exc:
        raise NotHarmonicAfterPullback(str(exc)) from None
