"""Tate curves ``C_p^* / p^(m Z)``: exact period tables and expected Vologodsky integrals.

The dual graph is a cycle of ``m`` vertices ``v0 .. v{m-1}`` with edges
``e_i: v_i -> v_{i+1 mod m}``, identified with ``R/mZ``. A point ``x`` with
``val(x) = k`` sits at the vertex ``v_{k mod m}`` and lifts to ``k`` on ``R``.
The only analytic form is ``nu = dz/z``.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidSpec, ZeroPoint
from .graph import bar, build_graph
from .scalars import EllPoly, Padic, branch_log
from .tensor import exp_letters
from .vologodsky import BasePath, PeriodTable

FORM = "nu"


@dataclass
class TateCurveSpec:
    """A Tate curve with two points.

    ``a_lift`` and ``b_lift`` default to the valuations of ``a`` and ``b``;
    when given they must agree with them.
    """

    p: int
    m: int
    a: Padic
    b: Padic
    n: int
    a_lift: int = None
    b_lift: int = None

    def __post_init__(self):
        if self.m < 1:
            raise InvalidSpec("the cycle needs at least one component")
        if self.n < 0:
            raise InvalidSpec("the level must be non-negative")
        for name in ("a", "b"):
            x = getattr(self, name)
            if not isinstance(x, Padic) or x.is_zero():
                raise ZeroPoint(f"point {name} must be a nonzero p-adic number")
            if x.p != self.p:
                raise InvalidSpec(f"point {name} is {x.p}-adic, the curve is {self.p}-adic")
            lift = getattr(self, name + "_lift")
            if lift is None:
                setattr(self, name + "_lift", x.val)
            elif lift != x.val:
                raise InvalidSpec(f"lift of {name} is {lift} but val({name}) = {x.val}")

    @classmethod
    def from_rationals(cls, p, m, a, b, n, prec=20):
        return cls(p, m, Padic.from_rational(a, p, prec), Padic.from_rational(b, p, prec), n)

    @property
    def start(self):
        return f"v{self.a_lift % self.m}"

    @property
    def end(self):
        return f"v{self.b_lift % self.m}"


def tate_graph(m):
    """Cycle of ``m`` vertices; a single vertex with a loop when ``m == 1``."""
    return build_graph([f"v{i}" for i in range(m)],
                       [(f"e{i}", f"v{i}", f"v{(i + 1) % m}") for i in range(m)])


def tate_path_edges(m, a_lift, b_lift):
    """Edge word of the path on ``R/mZ`` running straight from ``a_lift`` to ``b_lift``."""
    if b_lift >= a_lift:
        return tuple(f"e{(a_lift + j) % m}" for j in range(b_lift - a_lift))
    return tuple(bar(f"e{(a_lift - 1 - j) % m}") for j in range(a_lift - b_lift))


def tate_loop_edges(m, base):
    """Once around the cycle in the positive direction, starting at ``v_base``."""
    return tuple(f"e{(base + j) % m}" for j in range(m))


def tate_periods(spec):
    """Period table: the loop has periods ``(m ell)^k / k!``, the base path
    ``(Log b - Log a)^k / k!``."""
    m, n = spec.m, spec.n
    loop = exp_letters([EllPoly([0, m])], n, (FORM,))
    delta = branch_log(spec.b) - branch_log(spec.a)
    path = BasePath(spec.start, spec.end, tate_path_edges(m, spec.a_lift, spec.b_lift),
                    exp_letters([delta], n, (FORM,)))
    return PeriodTable(n, (FORM,), {"gamma": loop}, path,
                       {"gamma": tate_loop_edges(m, spec.a_lift % m)})


def tate_delta(spec):
    """``Log b - Log a - ell * (b_lift - a_lift)``."""
    return branch_log(spec.b) - branch_log(spec.a) - EllPoly([0, Fraction(spec.b_lift - spec.a_lift)])


def tate_expected(spec):
    """Closed form of the Vologodsky tensor: ``delta^k / k!`` in degree ``k``."""
    return exp_letters([tate_delta(spec)], spec.n, (FORM,))
