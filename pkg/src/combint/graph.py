"""Graphs with closed and half-open edges, edge-path words and the path group algebra.

A directed edge ("arrow") is written as the edge id for the stored orientation
and as ``"-id"`` for the reversed one. Closed edges are stored ``from -> to``;
a half-open edge is stored pointing away from its only vertex, so its reverse
starts at the missing vertex.
"""

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DanglingEndpoint,
    Disconnected,
    DuplicateId,
    NotComposable,
    UnknownEdge,
)


def bar(arrow):
    return arrow[1:] if arrow.startswith("-") else "-" + arrow


def edge_of(arrow):
    return arrow[1:] if arrow.startswith("-") else arrow


def is_reversed(arrow):
    return arrow.startswith("-")


def _check_id(x, kind):
    if not isinstance(x, str) or not x or x.startswith("-") or "," in x:
        raise DuplicateId(f"invalid {kind} id {x!r}: ids are non-empty strings without a leading '-' or ','")


class Graph:
    """Finite graph whose edges are closed (two ends) or half-open (one end).

    Use :func:`build_graph` to construct; it validates ids and connectivity.
    """

    def __init__(self, vertices, closed, half_open):
        self.vertices = tuple(vertices)
        self.closed = dict(closed)
        self.half_open = dict(half_open)

    def __repr__(self):
        return (f"Graph(vertices={list(self.vertices)}, closed={self.closed}, "
                f"half_open={self.half_open})")

    def __eq__(self, other):
        return (isinstance(other, Graph) and set(self.vertices) == set(other.vertices)
                and self.closed == other.closed and self.half_open == other.half_open)

    def __hash__(self):
        return hash((frozenset(self.vertices), frozenset(self.closed.items()),
                     frozenset(self.half_open.items())))

    @property
    def edges(self):
        """All edge ids, closed first, each group sorted."""
        return sorted(self.closed) + sorted(self.half_open)

    @property
    def is_proper(self):
        return not self.half_open

    @property
    def betti(self):
        return len(self.closed) - len(self.vertices) + 1

    def has_edge(self, edge):
        return edge in self.closed or edge in self.half_open

    def initial(self, arrow):
        """Initial vertex of an arrow, or ``None`` for the missing end of a half-open edge."""
        e = edge_of(arrow)
        if e in self.closed:
            frm, to = self.closed[e]
            return to if is_reversed(arrow) else frm
        if e in self.half_open:
            return None if is_reversed(arrow) else self.half_open[e]
        raise UnknownEdge(arrow)

    def terminal(self, arrow):
        return self.initial(bar(arrow))

    def star(self, v):
        """Arrows leaving ``v``; a closed self-loop contributes both orientations."""
        out = []
        for e in sorted(self.closed):
            frm, to = self.closed[e]
            if frm == v:
                out.append(e)
            if to == v:
                out.append(bar(e))
        out.extend(e for e in sorted(self.half_open) if self.half_open[e] == v)
        return out

    def path(self, arrows, start=None):
        """Validated :class:`PathWord` along closed arrows.

        ``start`` is required only for the empty path.
        """
        arrows = tuple(arrows)
        for a in arrows:
            if edge_of(a) in self.half_open:
                raise NotComposable(f"half-open edge {a!r} cannot occur in a path")
            if edge_of(a) not in self.closed:
                raise UnknownEdge(a)
        if not arrows:
            if start is None or start not in self.vertices:
                raise NotComposable("an empty path needs a start vertex of the graph")
            return PathWord(start, start, ())
        if start is not None and self.initial(arrows[0]) != start:
            raise NotComposable(f"path starts at {self.initial(arrows[0])!r}, not {start!r}")
        for a, b in zip(arrows, arrows[1:]):
            if self.terminal(a) != self.initial(b):
                raise NotComposable(f"{a!r} ends at {self.terminal(a)!r} but {b!r} starts at {self.initial(b)!r}")
        return PathWord(self.initial(arrows[0]), self.terminal(arrows[-1]), arrows)

    def constant(self, v):
        return self.path((), start=v)


def build_graph(vertices, closed_edge_pairs=(), half_open_stubs=()):
    """Build a connected :class:`Graph`.

    Args:
        vertices: vertex ids.
        closed_edge_pairs: ``(id, from, to)`` triples.
        half_open_stubs: ``(id, vertex)`` pairs.

    Raises:
        DuplicateId, DanglingEndpoint, Disconnected
    """
    vertices = list(vertices)
    for v in vertices:
        _check_id(v, "vertex")
    if len(set(vertices)) != len(vertices):
        raise DuplicateId("repeated vertex id")
    if not vertices:
        raise Disconnected("a graph needs at least one vertex")
    vset = set(vertices)
    closed, half_open = {}, {}
    for e, frm, to in closed_edge_pairs:
        _check_id(e, "edge")
        if e in closed or e in half_open or e in vset:
            raise DuplicateId(f"repeated id {e!r}")
        for x in (frm, to):
            if x not in vset:
                raise DanglingEndpoint(f"edge {e!r} references unknown vertex {x!r}")
        closed[e] = (frm, to)
    for e, frm in half_open_stubs:
        _check_id(e, "edge")
        if e in closed or e in half_open or e in vset:
            raise DuplicateId(f"repeated id {e!r}")
        if frm not in vset:
            raise DanglingEndpoint(f"half-open edge {e!r} references unknown vertex {frm!r}")
        half_open[e] = frm
    g = Graph(vertices, closed, half_open)
    root = min(vertices)
    if len(_bfs_tree(g, root)[0]) != len(vertices):
        raise Disconnected("graph is not connected through closed edges")
    return g


def core(g):
    """The proper graph obtained by discarding half-open edges."""
    return Graph(g.vertices, g.closed, {})


@dataclass(frozen=True)
class PathWord:
    """Edge path from ``start`` to ``end``; ``edges`` is a tuple of arrows."""

    start: str
    end: str
    edges: tuple = ()

    def __len__(self):
        return len(self.edges)

    def __mul__(self, other):
        if not isinstance(other, PathWord):
            return NotImplemented
        if self.end != other.start:
            raise NotComposable(f"cannot follow a path ending at {self.end!r} by one starting at {other.start!r}")
        return PathWord(self.start, other.end, self.edges + other.edges)

    def inverse(self):
        return PathWord(self.end, self.start, tuple(bar(a) for a in reversed(self.edges)))

    def is_reduced(self):
        return all(b != bar(a) for a, b in zip(self.edges, self.edges[1:]))

    def __str__(self):
        return ",".join(self.edges) if self.edges else f"<{self.start}>"


def reduce(w):
    """Free reduction: cancel adjacent backtracks ``a, -a`` until none remain."""
    out = []
    for a in w.edges:
        if out and out[-1] == bar(a):
            out.pop()
        else:
            out.append(a)
    return PathWord(w.start, w.end, tuple(out))


def _bfs_tree(g, root):
    """Breadth-first spanning tree through closed edges.

    Returns ``(parent_arrow, order)`` where ``parent_arrow[v]`` is the arrow from
    the parent of ``v`` into ``v`` (``None`` at the root).
    """
    parent = {root: None}
    order = [root]
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for a in g.star(v):
            if edge_of(a) not in g.closed:
                continue
            w = g.terminal(a)
            if w not in parent:
                parent[w] = a
                order.append(w)
                queue.append(w)
    return parent, order


class SpanningTree:
    """Deterministic BFS spanning tree rooted at the smallest vertex id."""

    def __init__(self, g):
        self.graph = g
        self.root = min(g.vertices)
        self.parent, self.order = _bfs_tree(g, self.root)
        self.tree_edges = {edge_of(a) for a in self.parent.values() if a is not None}
        self.cotree_edges = sorted(e for e in g.closed if e not in self.tree_edges)

    def from_root(self, v):
        target, arrows = v, []
        while self.parent[v] is not None:
            a = self.parent[v]
            arrows.append(a)
            v = self.graph.initial(a)
        return PathWord(self.root, target, tuple(reversed(arrows)))

    def between(self, u, v):
        """The reduced tree path from ``u`` to ``v``."""
        return reduce(self.from_root(u).inverse() * self.from_root(v))

    def generator(self, edge, base):
        g = self.graph
        loop = self.between(base, g.initial(edge)) * PathWord(g.initial(edge), g.terminal(edge), (edge,)) \
            * self.between(g.terminal(edge), base)
        return reduce(loop)

    def coordinates(self, loop):
        """Write a closed path as a word in the generator loops.

        Returns a tuple of ``(index, +1 | -1)`` pairs, indices into
        ``cotree_edges``; the word is freely reduced.
        """
        index = {e: i for i, e in enumerate(self.cotree_edges)}
        word = []
        for a in loop.edges:
            e = edge_of(a)
            if e in index:
                letter = (index[e], -1 if is_reversed(a) else 1)
                if word and word[-1] == (letter[0], -letter[1]):
                    word.pop()
                else:
                    word.append(letter)
        return tuple(word)


def cycle_basis(g, base=None):
    """Fundamental loops of the BFS spanning tree, all based at ``base``.

    One loop per non-tree closed edge, in edge-id order; the default base is
    the tree root (smallest vertex id).
    """
    t = SpanningTree(core(g))
    base = t.root if base is None else base
    if base not in g.vertices:
        raise NotComposable(f"unknown base vertex {base!r}")
    return [t.generator(e, base) for e in t.cotree_edges]


class GroupAlgebraElement:
    """Finite linear combination of reduced paths sharing endpoints ``base``."""

    def __init__(self, base, terms=None):
        self.base = tuple(base)
        self.terms = {}
        for w, c in (terms or {}).items():
            self._add(w, c)

    def _add(self, w, c):
        if (w.start, w.end) != self.base:
            raise NotComposable(f"path {w} does not run {self.base[0]!r} -> {self.base[1]!r}")
        w = reduce(w)
        c = self.terms.get(w, 0) + c
        if c == 0:
            self.terms.pop(w, None)
        else:
            self.terms[w] = c

    @classmethod
    def from_path(cls, w, coeff=1):
        return cls((w.start, w.end), {w: Fraction(coeff)})

    @classmethod
    def one(cls, v):
        return cls.from_path(PathWord(v, v, ()))

    def augmentation(self):
        return sum(self.terms.values(), Fraction(0))

    def __add__(self, other):
        if self.base != other.base:
            raise NotComposable("elements have different endpoints")
        out = GroupAlgebraElement(self.base, self.terms)
        for w, c in other.terms.items():
            out._add(w, c)
        return out

    def __neg__(self):
        return GroupAlgebraElement(self.base, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, GroupAlgebraElement):
            if self.base[1] != other.base[0]:
                raise NotComposable("elements are not composable")
            out = GroupAlgebraElement((self.base[0], other.base[1]))
            for u, a in self.terms.items():
                for v, b in other.terms.items():
                    out._add(u * v, a * b)
            return out
        if isinstance(other, PathWord):
            return self * GroupAlgebraElement.from_path(other)
        return GroupAlgebraElement(self.base, {w: c * other for w, c in self.terms.items()})

    def __rmul__(self, other):
        if isinstance(other, PathWord):
            return GroupAlgebraElement.from_path(other) * self
        return self * other

    def __eq__(self, other):
        return isinstance(other, GroupAlgebraElement) and self.base == other.base and self.terms == other.terms

    def __repr__(self):
        body = " + ".join(f"{c}*[{w}]" for w, c in sorted(self.terms.items(), key=lambda t: t[0].edges))
        return f"GroupAlgebraElement({self.base[0]}->{self.base[1]}: {body or '0'})"
