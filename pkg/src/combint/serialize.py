"""JSON codecs. Numbers never travel as JSON floats: rationals are ``"a/b"``
strings and p-adics are digit arrays."""

from fractions import Fraction

from .forms import TropicalOneForm
from .graph import build_graph
from .iint import TropicalMultiform
from .scalars import EllPoly, Padic
from .tensor import TruncatedTensor, word_code
from .vologodsky import BasePath, PeriodTable


class MalformedInput(ValueError):
    """Input that does not parse to the documented schemas."""


def _need(obj, key, kind=dict):
    if not isinstance(obj, dict) or key not in obj:
        raise MalformedInput(f"missing key {key!r}")
    val = obj[key]
    if kind is not None and not isinstance(val, kind):
        raise MalformedInput(f"key {key!r} should be a {kind.__name__}")
    return val


# scalars

def encode_scalar(x):
    if isinstance(x, EllPoly):
        return [encode_scalar(c) for c in x.coeffs]
    if isinstance(x, Padic):
        return {"p": x.p, "val": x.val, "digits": x.digits(), "prec": x.prec}
    x = Fraction(x)
    return str(x)


def decode_scalar(obj):
    if isinstance(obj, list):
        return EllPoly([decode_scalar(c) for c in obj])
    if isinstance(obj, dict):
        try:
            return Padic.from_digits(int(obj["p"]), int(obj["val"]), [int(d) for d in obj["digits"]],
                                     None if obj["prec"] is None else int(obj["prec"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedInput(f"bad p-adic encoding {obj!r}") from exc
    if isinstance(obj, bool) or not isinstance(obj, (str, int)):
        raise MalformedInput(f"bad scalar {obj!r}: use an 'a/b' string")
    try:
        return Fraction(obj)
    except (ValueError, ZeroDivisionError) as exc:
        raise MalformedInput(f"bad rational {obj!r}") from exc


# graphs and paths

def encode_graph(g):
    return {
        "vertices": list(g.vertices),
        "closed_edges": [{"id": e, "from": g.closed[e][0], "to": g.closed[e][1]} for e in sorted(g.closed)],
        "half_open_edges": [{"id": e, "from": g.half_open[e]} for e in sorted(g.half_open)],
    }


def decode_graph(obj):
    vertices = _need(obj, "vertices", list)
    try:
        closed = [(e["id"], e["from"], e["to"]) for e in obj.get("closed_edges", [])]
        half = [(e["id"], e["from"]) for e in obj.get("half_open_edges", [])]
    except (KeyError, TypeError) as exc:
        raise MalformedInput("edges need 'id' and 'from' (and 'to' when closed)") from exc
    return build_graph(vertices, closed, half)


def parse_arrows(text):
    """``"e1,-e2"`` -> ``("e1", "-e2")``; a list is passed through."""
    if isinstance(text, (list, tuple)):
        return tuple(text)
    text = text.strip()
    return tuple(a.strip() for a in text.split(",")) if text else ()


def encode_path(w):
    return {"from": w.start, "to": w.end, "edges": list(w.edges)}


# forms

def encode_form(form):
    return {"edge_values": {e: encode_scalar(c) for e, c in sorted(form.values.items())}}


def decode_form(obj, graph):
    vals = _need(obj, "edge_values")
    return TropicalOneForm(graph, {e: decode_scalar(c) for e, c in vals.items()})


def encode_multiform(mf):
    return [{"shape": [r, c], "entries": [[encode_form(x) if isinstance(x, TropicalOneForm) else "0" for x in row]
                                           for row in m]}
            for (r, c), m in zip(mf.shapes, mf.matrices)]


def decode_multiform(obj, graph):
    if not isinstance(obj, list):
        raise MalformedInput("a multiform is a list of matrices")
    mats = []
    for item in obj:
        shape = _need(item, "shape", list)
        entries = _need(item, "entries", list)
        m = [[decode_form(x, graph) if isinstance(x, dict) else decode_scalar(x) for x in row] for row in entries]
        if [len(m), len(m[0]) if m else 0] != list(shape):
            raise MalformedInput(f"declared shape {shape} does not match the entries")
        mats.append(m)
    return TropicalMultiform(mats)


# tensors

def word_key(w):
    return ",".join(str(a + 1) for a in w)


def encode_tensor(t):
    return {"n": t.n, "alphabet": list(t.alphabet),
            "coeffs": {word_key(w): encode_scalar(c) for w, c in t.items()}}


def decode_tensor(obj):
    n = _need(obj, "n", int)
    alphabet = _need(obj, "alphabet", list)
    coeffs = _need(obj, "coeffs")
    d = len(alphabet)
    t = TruncatedTensor(d, n, alphabet=alphabet)
    for key, c in coeffs.items():
        try:
            w = tuple(int(a) - 1 for a in key.split(",")) if key else ()
        except ValueError as exc:
            raise MalformedInput(f"bad word key {key!r}") from exc
        if len(w) > n or any(not 0 <= a < d for a in w):
            raise MalformedInput(f"word key {key!r} is outside the alphabet or level")
        t.levels[len(w)][word_code(w, d)] = decode_scalar(c)
    return t


# period tables

def encode_table(table):
    out = {
        "n": table.n,
        "forms": list(table.forms),
        "loops": {k: encode_tensor(v) for k, v in table.loops.items()},
        "path": {"from": table.path.start, "to": table.path.end, "edges": list(table.path.edges),
                 "periods": encode_tensor(table.path.periods)},
    }
    if table.loop_paths:
        out["loop_edges"] = {k: list(v) for k, v in table.loop_paths.items()}
    return out


def decode_table(obj):
    n = _need(obj, "n", int)
    forms = _need(obj, "forms", list)
    loops = {k: decode_tensor(v) for k, v in _need(obj, "loops").items()}
    path = _need(obj, "path")
    base = BasePath(_need(path, "from", str), _need(path, "to", str), parse_arrows(_need(path, "edges", None)),
                    decode_tensor(_need(path, "periods")))
    loop_paths = {k: parse_arrows(v) for k, v in obj.get("loop_edges", {}).items()}
    return PeriodTable(n, forms, loops, base, loop_paths)
