"""Path-independent integrals from path-dependent period data.

A :class:`PeriodTable` records, for the generator loops at a base vertex and
for one base path, the tensors of Berkovich--Coleman iterated integrals of a
list of analytic forms. The analytic forms are only labels here; everything
analytic enters through the table. :func:`vologodsky` corrects the base path
by the combinatorial canonical correction and evaluates the periods on the
result.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    DegreeCapExceeded,
    LevelMismatch,
    NotABasis,
    NotComposable,
    NotGrouplike,
    UnknownGenerator,
)
from .forms import dual_forms
from .graph import PathWord, cycle_basis, reduce
from .iint import canonical_correction, cint
from .scalars import EllPoly
from .tensor import TruncatedTensor, concat_mul, invert, is_grouplike

log = logging.getLogger(__name__)

PATH = "path"


@dataclass
class BasePath:
    """The symbolic base path: its edge word (for combinatorial integrals) and its periods."""

    start: str
    end: str
    edges: tuple
    periods: TruncatedTensor


@dataclass
class PeriodTable:
    """Berkovich--Coleman periods of the generator loops and one base path.

    ``loop_paths`` optionally records the edge word of each loop; when it is
    empty the loops are taken to be ``cycle_basis(graph, path.start)`` in the
    insertion order of ``loops``.
    """

    n: int
    forms: tuple
    loops: dict
    path: BasePath
    loop_paths: dict = field(default_factory=dict)

    def __post_init__(self):
        self.forms = tuple(self.forms)
        entries = list(self.loops.items()) + [(PATH, self.path.periods)]
        for name, t in entries:
            if t.n != self.n:
                raise LevelMismatch(f"entry {name!r} has level {t.n}, table has level {self.n}")
            if t.alphabet != self.forms:
                raise LevelMismatch(f"entry {name!r} uses alphabet {t.alphabet}, table has {self.forms}")
            if t.augmentation != 1:
                raise NotGrouplike(f"entry {name!r} has augmentation {t.augmentation!r}, expected 1")
            for _, c in t.items():
                if isinstance(c, EllPoly) and c.degree > self.n:
                    raise DegreeCapExceeded(f"entry {name!r} has an ell-degree {c.degree} above {self.n}")
        if PATH in self.loops:
            raise UnknownGenerator(f"{PATH!r} is reserved for the base path")
        if self.loop_paths and set(self.loop_paths) != set(self.loops):
            raise UnknownGenerator("loop_paths must name exactly the loops of the table")

    def entry(self, name):
        if name == PATH:
            return self.path.periods
        try:
            return self.loops[name]
        except KeyError:
            raise UnknownGenerator(f"no periods recorded for {name!r}") from None

    def check_grouplike(self, strict=False):
        """Whether every entry passes :func:`is_grouplike`; logs or raises on failure."""
        for name in list(self.loops) + [PATH]:
            if not is_grouplike(self.entry(name)):
                if strict:
                    raise NotGrouplike(f"entry {name!r} is not grouplike")
                log.warning("period entry %r is not grouplike", name)
                return False
        return True

    def truncate(self, m):
        if m > self.n:
            raise LevelMismatch(f"table has level {self.n}, requested {m}")
        return PeriodTable(m, self.forms, {k: v.truncate(m) for k, v in self.loops.items()},
                           BasePath(self.path.start, self.path.end, self.path.edges, self.path.periods.truncate(m)),
                           dict(self.loop_paths))

    def loop_words(self, g):
        """Loop names and their :class:`PathWord` realizations."""
        names = list(self.loops)
        if self.loop_paths:
            loops = [g.path(self.loop_paths[k], start=self.path.start) for k in names]
        else:
            loops = cycle_basis(g, self.path.start)
            if len(loops) != len(names):
                raise NotABasis(f"table has {len(names)} loops, the graph has {len(loops)} independent cycles")
        for name, loop in zip(names, loops):
            if loop.start != self.path.start or loop.end != self.path.start:
                raise NotComposable(f"loop {name!r} is not closed at {self.path.start!r}")
        return names, loops

    def base_path(self, g):
        w = g.path(self.path.edges, start=self.path.start)
        if w.end != self.path.end:
            raise NotComposable(f"base path ends at {w.end!r}, table says {self.path.end!r}")
        return w


def bc_evaluate(table, x):
    """Evaluate periods on a symbolic group-algebra element.

    ``x`` maps words to coefficients; a word is a tuple of ``(letter, ±1)``
    pairs where the letter is a loop name or ``"path"``, the base path being
    allowed only as the last letter.
    """
    one = TruncatedTensor.one(len(table.forms), table.n, table.forms)
    total = one * Fraction(0)
    for word, c in x.items():
        t = one
        for pos, (letter, sign) in enumerate(word):
            if letter == PATH and (pos != len(word) - 1 or sign != 1):
                raise NotComposable("the base path can only close a word, forwards")
            entry = table.entry(letter)
            t = concat_mul(t, entry if sign == 1 else invert(entry))
        total = total + t * c
    return total


def _symbolic(correction, names):
    return {tuple((names[i], 1) for i in w): c for w, c in correction.symbolic().items()}


def vologodsky(g, table, n=None):
    """Vologodsky integrals of all words of length at most ``n`` as a tensor.

    The canonical correction ``q`` of the base path is solved from
    combinatorial integrals against the forms dual to the table's loops; the
    result is ``BC(q) * BC(path)``.
    """
    n = table.n if n is None else n
    if n > table.n:
        raise LevelMismatch(f"table has level {table.n}, requested {n}")
    if n < table.n:
        table = table.truncate(n)
    names, loops = table.loop_words(g)
    p = table.base_path(g)
    corr = canonical_correction(g, p, n, loops=loops)
    sym = _symbolic(corr, names)
    return concat_mul(bc_evaluate(table, sym), table.path.periods)


def vologodsky_single(g, table):
    """Single Vologodsky integrals, one per analytic form.

    ``BC(path, w) - sum_i BC(loop_i, w) * cint(path, eta_i)`` with ``eta_i``
    the forms dual to the loops.
    """
    names, loops = table.loop_words(g)
    p = table.base_path(g)
    etas = dual_forms(g, loops)
    weights = [cint(p, [eta]) for eta in etas]
    out = []
    for j in range(len(table.forms)):
        v = table.path.periods[(j,)]
        for name, wgt in zip(names, weights):
            v = v - table.loops[name][(j,)] * wgt
        out.append(v)
    return out


def shift_path(g, table, loop_word, periods=None):
    """Table for the base path preceded by a loop.

    ``loop_word`` is a tuple of ``(loop_name, ±1)``; the new base path is the
    reduced edge word of that loop product followed by the old path, and its
    periods are the corresponding product of table entries.
    """
    names, loops = table.loop_words(g)
    by_name = dict(zip(names, loops))
    start = table.path.start
    w = PathWord(start, start, ())
    for name, s in loop_word:
        if name not in by_name:
            raise UnknownGenerator(name)
        w = w * (by_name[name] if s == 1 else by_name[name].inverse())
    new_edges = reduce(w * table.base_path(g)).edges
    if periods is None:
        periods = bc_evaluate(table, {tuple(loop_word) + ((PATH, 1),): Fraction(1)})
    loop_paths = table.loop_paths or {k: v.edges for k, v in by_name.items()}
    return PeriodTable(table.n, table.forms, dict(table.loops),
                       BasePath(start, table.path.end, new_edges, periods), dict(loop_paths))
