"""Row reduction over exact rationals.

Matrices are lists of rows of :class:`fractions.Fraction`. Nothing here uses
floating point; pivots are taken left to right, first nonzero row wins.
"""

from fractions import Fraction


def _copy(rows):
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows):
    """Reduced row echelon form.

    Returns ``(reduced, pivot_columns)``. The input is not modified.
    """
    m = _copy(rows)
    if not m:
        return m, []
    n_rows, n_cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        pick = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if pick is None:
            continue
        m[r], m[pick] = m[pick], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(rows):
    return len(rref(rows)[1])


def nullspace(rows, n_cols=None):
    """Basis of ``{x : rows @ x = 0}``, one vector per free column.

    The free variable of each basis vector is set to 1 and the others to 0,
    so the output is determined by the column order.
    """
    if not rows:
        if n_cols is None:
            raise ValueError("n_cols is required for an empty system")
        return [[Fraction(int(i == j)) for i in range(n_cols)] for j in range(n_cols)]
    n_cols = len(rows[0])
    red, pivots = rref(rows)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n_cols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def inverse(rows):
    """Inverse of a square matrix; raises ``ZeroDivisionError`` if singular."""
    n = len(rows)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(_copy(rows))]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]


def matmul(a, b):
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in zip(*b)] for row in a]
