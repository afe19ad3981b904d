"""Exact combinatorial iterated integrals on dual graphs and p-adic Vologodsky integrals."""

from .errors import CombintError
from .forms import (
    TropicalOneForm,
    WeakEmbedding,
    dual_bases,
    dual_forms,
    forms_basis,
    pullback,
    single_cint,
)
from .graph import GroupAlgebraElement, PathWord, SpanningTree, build_graph, core, cycle_basis, reduce
from .iint import (
    CanonicalCorrection,
    TropicalMultiform,
    canonical_correction,
    cint,
    cint_matrix,
    monodromy_power,
    monomial_coordinates,
    signature,
)
from .scalars import EllPoly, Padic, branch_log, padic_log
from .tate import TateCurveSpec, tate_expected, tate_graph, tate_periods
from .tensor import TruncatedTensor, concat_mul, invert, is_grouplike, shuffle_mul
from .vologodsky import BasePath, PeriodTable, bc_evaluate, vologodsky, vologodsky_single

__all__ = [
    "BasePath", "CanonicalCorrection", "CombintError", "EllPoly", "GroupAlgebraElement", "Padic",
    "PathWord", "PeriodTable", "SpanningTree", "TateCurveSpec", "TropicalMultiform", "TropicalOneForm",
    "TruncatedTensor", "WeakEmbedding", "bc_evaluate", "branch_log", "build_graph", "canonical_correction",
    "cint", "cint_matrix", "concat_mul", "core", "cycle_basis", "dual_bases", "dual_forms", "forms_basis",
    "invert", "is_grouplike", "monodromy_power", "monomial_coordinates", "padic_log", "pullback", "reduce",
    "shuffle_mul", "signature", "single_cint", "tate_expected", "tate_graph", "tate_periods", "vologodsky",
    "vologodsky_single",
]
