"""Combinatorial iterated integrals along graph paths.

The defining rules are: the empty word integrates to 1; on one edge
``cint_e(eta_1 ... eta_k) = prod eta_i(e) / k!``; and over a concatenation the
word is split at every position and the two halves multiplied. :func:`cint`
evaluates these rules directly, edge by edge; :func:`signature` packages all
words at once as a product of per-edge exponentials in the tensor algebra.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial

import numpy as np

from .errors import NotComposable, ShapeMismatch
from .forms import TropicalOneForm, dual_forms
from .graph import GroupAlgebraElement, PathWord, SpanningTree, core, cycle_basis, edge_of, reduce
from .tensor import TruncatedTensor, concat_mul, invert, mul_exp_letters, word_code, words


def _check_closed(path, graph):
    for a in path.edges:
        if edge_of(a) not in graph.closed:
            raise NotComposable(f"arrow {a!r} is not a closed edge of the graph")


def cint(p, word):
    """Iterated integral of the forms in ``word`` along ``p``.

    ``p`` is a :class:`PathWord` or a :class:`GroupAlgebraElement`
    (integrated linearly). One pass over the edges keeps the integrals of
    every prefix of ``word`` along the edges seen so far and extends them by
    the edge rule.
    """
    word = list(word)
    if isinstance(p, GroupAlgebraElement):
        return sum((c * cint(w, word) for w, c in p.terms.items()), Fraction(0))
    if word:
        _check_closed(p, word[0].graph)
    k = len(word)
    inv_fact = [Fraction(1, factorial(i)) for i in range(k + 1)]
    acc = [Fraction(1)] + [Fraction(0)] * k
    for a in p.edges:
        vals = [eta(a) for eta in word]
        # descending t so acc[s] for s < t is still the old value
        for t in range(k, 0, -1):
            total = acc[t]
            block = Fraction(1)
            for s in range(t - 1, -1, -1):
                block *= vals[s]
                if not block:
                    break
                if acc[s]:
                    total += acc[s] * block * inv_fact[t - s]
            acc[t] = total
    return acc[k]


def signature(p, forms, n, alphabet=None):
    """All iterated integrals of ``forms`` along ``p`` up to length ``n``.

    The coefficient of the word ``(i1, ..., ik)`` is
    ``cint(p, [forms[i1], ..., forms[ik]])``.
    """
    d = len(forms)
    if isinstance(p, GroupAlgebraElement):
        out = TruncatedTensor(d, n, alphabet=alphabet)
        for w, c in p.terms.items():
            out = out + signature(w, forms, n, alphabet) * c
        return out
    if forms:
        _check_closed(p, forms[0].graph)
    out = TruncatedTensor.one(d, n, alphabet)
    for a in p.edges:
        out = mul_exp_letters(out, [eta(a) for eta in forms])
    return out


class TropicalMultiform:
    """Word of form-valued matrices ``eta_1 ... eta_k``.

    ``eta_i`` has shape ``(n_i, n_{i-1})``; entries are
    :class:`TropicalOneForm` or 0. The integral maps ``K^{n_0}`` to ``K^{n_k}``.
    """

    def __init__(self, matrices):
        self.matrices = [[list(row) for row in m] for m in matrices]
        for m in self.matrices:
            if not m or len({len(row) for row in m}) != 1:
                raise ShapeMismatch("every multiform entry must be a non-empty rectangular matrix")
        for i in range(1, len(self.matrices)):
            if len(self.matrices[i][0]) != len(self.matrices[i - 1]):
                raise ShapeMismatch(f"letter {i + 1} has {len(self.matrices[i][0])} columns, "
                                    f"letter {i} has {len(self.matrices[i - 1])} rows")

    def __len__(self):
        return len(self.matrices)

    @property
    def shapes(self):
        return [(len(m), len(m[0])) for m in self.matrices]

    def at(self, i, arrow):
        """Matrix of values of letter ``i`` on ``arrow``."""
        m = self.matrices[i]
        out = np.empty((len(m), len(m[0])), dtype=object)
        for r, row in enumerate(m):
            for c, eta in enumerate(row):
                out[r, c] = eta(arrow) if isinstance(eta, TropicalOneForm) else Fraction(eta)
        return out

    def entry_word(self, chain):
        """Scalar word along an index chain ``(j0, j1, ..., jk)``."""
        return [self.matrices[i][chain[i + 1]][chain[i]] for i in range(len(self.matrices))]


def _identity(n):
    out = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            out[i, j] = Fraction(int(i == j))
    return out


def _zero(r, c):
    out = np.empty((r, c), dtype=object)
    out.fill(Fraction(0))
    return out


def cint_matrix(p, mf, n0=None):
    """Matrix-valued iterated integral, shape ``(n_k, n_0)``.

    Letters compose in path order: on a single edge the integral of
    ``eta_1 ... eta_k`` is ``eta_k(e) @ ... @ eta_1(e) / k!``, and over a
    concatenation ``p1 p2`` the ``p2`` factor is applied after the ``p1`` one.
    """
    k = len(mf)
    if k == 0:
        if n0 is None:
            raise ShapeMismatch("an empty multiform needs n0")
        return _identity(n0)
    shapes = mf.shapes
    dims = [shapes[0][1]] + [s[0] for s in shapes]
    for m in mf.matrices:
        for row in m:
            for eta in row:
                if isinstance(eta, TropicalOneForm):
                    _check_closed(p, eta.graph)
    # acc[t]: integral so far of letters 1..t, shape (dims[t], dims[0])
    acc = [_identity(dims[0])] + [_zero(dims[t], dims[0]) for t in range(1, k + 1)]
    for a in p.edges:
        vals = [mf.at(i, a) for i in range(k)]
        new = []
        for t in range(k + 1):
            total = acc[t].copy()
            block = _identity(dims[t])
            for s in range(t - 1, -1, -1):
                block = block.dot(vals[s])
                total = total + block.dot(acc[s]) * Fraction(1, factorial(t - s))
            new.append(total)
        acc = new
    return acc[k]


def monodromy_power(p, mf):
    """``k! * cint_matrix(p, mf)`` for a multiform of length ``k``."""
    return cint_matrix(p, mf) * factorial(len(mf))


@dataclass
class CanonicalCorrection:
    """Loop-algebra element ``q`` with ``signature(q * path) == 1`` through level ``n``.

    ``monomial`` is ``q`` in the basis of products ``(g_{w1} - 1) ... (g_{wk} - 1)``
    of the generator loops: its coefficient at the word ``w`` is the
    coefficient of that product.
    """

    graph: object
    path: PathWord
    loops: list
    forms: list
    n: int
    monomial: TruncatedTensor

    def coefficients(self):
        """``{word: coeff}`` over nonzero monomial coefficients."""
        return dict(self.monomial.items())

    def symbolic(self):
        """Expand into words in the loops: ``{(i1, ..., ij): coeff}``."""
        out = {}
        for w, c in self.monomial.items():
            k = len(w)
            for r in range(k + 1):
                sign = -1 if (k - r) % 2 else 1
                for keep in combinations(range(k), r):
                    key = tuple(w[i] for i in keep)
                    out[key] = out.get(key, 0) + sign * c
        return {w: c for w, c in out.items() if c != 0}

    def element(self):
        """``q`` as a combination of reduced loops at the start vertex."""
        a = self.path.start
        out = GroupAlgebraElement((a, a))
        for w, c in self.symbolic().items():
            loop = PathWord(a, a, ())
            for i in w:
                loop = loop * self.loops[i]
            out = out + GroupAlgebraElement.from_path(reduce(loop), c)
        return out

    def canonical_path(self):
        """The truncated canonical path ``q * path``."""
        return self.element() * self.path


def canonical_correction(g, p, n, loops=None):
    """Solve for the canonical correction of ``p`` through level ``n``.

    ``loops`` defaults to the spanning-tree loops at ``p.start``; their
    single-integral dual forms give an alphabet in which each generator's
    signature is ``1 + letter + (higher terms)``, so the products of
    ``(loop - 1)`` are unitriangular against words and the coefficients are
    found level by level.
    """
    if loops is None:
        loops = cycle_basis(g, p.start)
    for loop in loops:
        if loop.start != p.start or loop.end != p.start:
            raise NotComposable("generator loops must be based at the start of the path")
    forms = dual_forms(g, loops)
    h = len(forms)
    target = invert(signature(p, forms, n))
    gens = [signature(loop, forms, n) - TruncatedTensor.one(h, n) for loop in loops]
    coeffs = TruncatedTensor(h, n, alphabet=[f"g{i + 1}-1" for i in range(h)])
    reached = TruncatedTensor(h, n)
    monomials = {(): TruncatedTensor.one(h, n)}
    for k in range(n + 1):
        level = {}
        for w in words(h, k):
            if k:
                monomials[w] = concat_mul(monomials[w[:-1]], gens[w[-1]])
            c = target[w] - reached[w]
            coeffs.levels[k][word_code(w, h)] = c
            level[w] = c
        for w, c in level.items():
            if c != 0:
                reached = reached + monomials[w] * c
        if k:
            for w in words(h, k - 1):
                monomials.pop(w, None)
    return CanonicalCorrection(g, p, list(loops), forms, n, coeffs)


def monomial_coordinates(g, element, n):
    """Write a combination of loops at ``a`` in the monomial basis of ``cycle_basis(g, a)``.

    Each generator ``g_i`` maps to ``1 + x_i`` and its inverse to the
    geometric series; this identifies the loop algebra modulo the
    ``(n+1)``-st power of the augmentation ideal with the truncated tensor
    algebra on the ``x_i``.
    """
    tree = SpanningTree(core(g))
    h = len(tree.cotree_edges)
    out = TruncatedTensor(h, n)
    one = TruncatedTensor.one(h, n)
    pos = [one + TruncatedTensor.letter(i, h, n) for i in range(h)]
    neg = [invert(x) for x in pos]
    for w, c in element.terms.items():
        if w.start != w.end:
            raise NotComposable("monomial coordinates need loops")
        t = one
        for i, s in tree.coordinates(w):
            t = concat_mul(t, pos[i] if s > 0 else neg[i])
        out = out + t * c
    return out

