"""Truncated tensor algebra over a finite alphabet.

Level ``k`` of a :class:`TruncatedTensor` is a flat object array of length
``d**k``; the word ``(w1, ..., wk)`` (0-based letters) sits at the mixed-radix
code ``w1*d**(k-1) + ... + wk``. With that layout the concatenation of a
level-``i`` block with a level-``j`` block is ``np.multiply.outer(a, b).ravel()``.

Coefficients are any exact scalars from :mod:`combint.scalars`.
"""

from fractions import Fraction
from itertools import combinations, product
from math import factorial

import numpy as np

from .errors import AlphabetMismatch, LevelMismatch, NonUnitAugmentation
from .scalars import is_unit_scalar

ZERO = Fraction(0)
ONE = Fraction(1)


def _zeros(size):
    a = np.empty(size, dtype=object)
    a.fill(ZERO)
    return a


def _scale(arr, s):
    return arr * s


def word_code(word, d):
    code = 0
    for a in word:
        code = code * d + a
    return code


def code_word(code, k, d):
    word = []
    for _ in range(k):
        code, a = divmod(code, d)
        word.append(a)
    return tuple(reversed(word))


def words(d, k):
    """All words of length ``k`` in storage order."""
    return product(range(d), repeat=k)


def shuffles(u, v):
    """The ``C(|u|+|v|, |u|)`` interleavings of ``u`` and ``v``, with multiplicity."""
    u, v = tuple(u), tuple(v)
    k, n = len(u), len(u) + len(v)
    out = []
    for pos in combinations(range(n), k):
        pos = set(pos)
        it_u, it_v = iter(u), iter(v)
        out.append(tuple(next(it_u) if i in pos else next(it_v) for i in range(n)))
    return out


class TruncatedTensor:
    """Element of ``T_n`` over ``d`` letters.

    Args:
        d: alphabet size.
        n: truncation level.
        levels: optional list of ``n + 1`` flat arrays (level ``k`` of length ``d**k``).
        alphabet: optional letter labels (default ``"1" .. "d"``).
    """

    def __init__(self, d, n, levels=None, alphabet=None):
        self.d = d
        self.n = n
        self.alphabet = tuple(alphabet) if alphabet is not None else tuple(str(i + 1) for i in range(d))
        if len(self.alphabet) != d:
            raise AlphabetMismatch(f"{len(self.alphabet)} labels for an alphabet of size {d}")
        if levels is None:
            levels = [_zeros(d ** k) for k in range(n + 1)]
        else:
            levels = [np.asarray(lv, dtype=object).reshape(-1) for lv in levels]
            if len(levels) != n + 1 or any(len(lv) != d ** k for k, lv in enumerate(levels)):
                raise LevelMismatch("level arrays do not match alphabet size and truncation level")
        self.levels = levels

    # constructors

    @classmethod
    def zero(cls, d, n, alphabet=None):
        return cls(d, n, alphabet=alphabet)

    @classmethod
    def one(cls, d, n, alphabet=None):
        t = cls(d, n, alphabet=alphabet)
        t.levels[0][0] = ONE
        return t

    @classmethod
    def letter(cls, i, d, n, alphabet=None, coeff=ONE):
        """``coeff`` times the one-letter word ``(i,)``."""
        t = cls(d, n, alphabet=alphabet)
        if n >= 1:
            t.levels[1][i] = coeff
        return t

    @classmethod
    def from_dict(cls, coeffs, d, n, alphabet=None):
        """Build from ``{word: coeff}`` with 0-based letter tuples."""
        t = cls(d, n, alphabet=alphabet)
        for w, c in coeffs.items():
            w = tuple(w)
            if len(w) > n:
                raise LevelMismatch(f"word {w} is longer than the truncation level {n}")
            if any(not 0 <= a < d for a in w):
                raise AlphabetMismatch(f"word {w} uses letters outside 0..{d - 1}")
            t.levels[len(w)][word_code(w, d)] = c
        return t

    def like(self, levels):
        return TruncatedTensor(self.d, self.n, levels, self.alphabet)

    # access

    def __getitem__(self, word):
        word = tuple(word)
        if len(word) > self.n:
            return ZERO
        return self.levels[len(word)][word_code(word, self.d)]

    def items(self, nonzero=True):
        """Yield ``(word, coeff)`` pairs in level order."""
        for k, lv in enumerate(self.levels):
            for code, c in enumerate(lv):
                if not nonzero or c != 0:
                    yield code_word(code, k, self.d), c

    @property
    def augmentation(self):
        return self.levels[0][0]

    def truncate(self, m):
        """Drop all levels above ``m``."""
        if m > self.n:
            raise LevelMismatch(f"cannot raise the truncation level from {self.n} to {m}")
        return TruncatedTensor(self.d, m, [lv.copy() for lv in self.levels[: m + 1]], self.alphabet)

    def map(self, f):
        """Apply ``f`` to every coefficient."""
        return self.like([np.array([f(c) for c in lv], dtype=object).reshape(-1) for lv in self.levels])

    def __repr__(self):
        terms = []
        for w, c in self.items():
            key = "".join(f"[{self.alphabet[a]}]" for a in w) or "1"
            terms.append(f"{c}*{key}")
        return f"TruncatedTensor(d={self.d}, n={self.n}: " + (" + ".join(terms) or "0") + ")"

    # linear structure

    def _check(self, other):
        if not isinstance(other, TruncatedTensor):
            raise TypeError(f"expected a TruncatedTensor, got {type(other).__name__}")
        if self.d != other.d or self.alphabet != other.alphabet:
            raise AlphabetMismatch(f"alphabets {self.alphabet} and {other.alphabet} differ")
        if self.n != other.n:
            raise LevelMismatch(f"truncation levels {self.n} and {other.n} differ")

    def __add__(self, other):
        if not isinstance(other, TruncatedTensor):
            other = self.scalar(other)
        self._check(other)
        return self.like([a + b for a, b in zip(self.levels, other.levels)])

    __radd__ = __add__

    def __neg__(self):
        return self.like([_scale(lv, -1) for lv in self.levels])

    def __sub__(self, other):
        if not isinstance(other, TruncatedTensor):
            other = self.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scalar(self, c):
        """The constant tensor ``c * 1`` in the same algebra."""
        t = TruncatedTensor(self.d, self.n, alphabet=self.alphabet)
        t.levels[0][0] = c
        return t

    def __mul__(self, other):
        if isinstance(other, TruncatedTensor):
            return concat_mul(self, other)
        return self.like([_scale(lv, other) for lv in self.levels])

    def __rmul__(self, other):
        return self.like([_scale(lv, other) for lv in self.levels])

    def __truediv__(self, other):
        return self * (Fraction(1, other) if isinstance(other, int) else 1 / other)

    def __pow__(self, k):
        out = self.scalar(ONE)
        for _ in range(k):
            out = concat_mul(out, self)
        return out

    def __eq__(self, other):
        if not isinstance(other, TruncatedTensor):
            return NotImplemented
        if (self.d, self.n, self.alphabet) != (other.d, other.n, other.alphabet):
            return False
        return all(a == b for la, lb in zip(self.levels, other.levels) for a, b in zip(la, lb))

    __hash__ = None


def concat_mul(x, y):
    """Concatenation product, truncated at the common level."""
    x._check(y)
    d, n = x.d, x.n
    out = []
    for k in range(n + 1):
        acc = None
        for i in range(k + 1):
            a, b = x.levels[i], y.levels[k - i]
            block = np.multiply.outer(a, b).reshape(-1)
            acc = block if acc is None else acc + block
        out.append(acc)
    return TruncatedTensor(d, n, out, x.alphabet)


def invert(x):
    """Multiplicative inverse by the geometric series.

    ``x = a0 * (1 + u)`` with ``u`` of zero augmentation, hence nilpotent of
    order ``n + 1``; the inverse is ``(1 - u + u**2 - ... ± u**n) / a0``.
    """
    a0 = x.augmentation
    if not is_unit_scalar(a0):
        raise NonUnitAugmentation(f"augmentation {a0!r} is not invertible")
    inv_a0 = 1 / a0 if not isinstance(a0, int) else Fraction(1, a0)
    u = x * inv_a0 - x.scalar(ONE)
    total = x.scalar(ONE)
    term = x.scalar(ONE)
    for _ in range(x.n):
        term = -concat_mul(term, u)
        total = total + term
    return total * inv_a0


def shuffle_mul(x, y):
    """Shuffle product, truncated at the common level."""
    x._check(y)
    d, n = x.d, x.n
    out = TruncatedTensor(d, n, alphabet=x.alphabet)
    xs = list(x.items())
    ys = list(y.items())
    for u, a in xs:
        for v, b in ys:
            if len(u) + len(v) > n:
                continue
            c = a * b
            lv = out.levels[len(u) + len(v)]
            for w in shuffles(u, v):
                code = word_code(w, d)
                lv[code] = lv[code] + c
    return out


def is_grouplike(x):
    """Augmentation 1 and ``x[u] * x[v] == sum of x over the shuffles of u, v`` for ``|u|+|v| <= n``."""
    if x.augmentation != 1:
        return False
    d, n = x.d, x.n
    for i in range(1, n):
        for j in range(i, n - i + 1):
            for u in words(d, i):
                cu = x[u]
                for v in words(d, j):
                    s = ZERO
                    for w in shuffles(u, v):
                        s = s + x[w]
                    if cu * x[v] != s:
                        return False
    return True


def exp(x):
    """``sum x**k / k!`` for ``x`` of zero augmentation."""
    if x.augmentation != 0:
        raise NonUnitAugmentation("exp needs a tensor with zero augmentation")
    total = x.scalar(ONE)
    term = x.scalar(ONE)
    for k in range(1, x.n + 1):
        term = concat_mul(term, x) * Fraction(1, k)
        total = total + term
    return total


def log(x):
    """``sum (-1)**(k+1) (x - 1)**k / k`` for ``x`` of augmentation 1."""
    if x.augmentation != 1:
        raise NonUnitAugmentation("log needs a tensor with augmentation 1")
    u = x - x.scalar(ONE)
    total = x.scalar(ZERO)
    term = x.scalar(ONE)
    for k in range(1, x.n + 1):
        term = concat_mul(term, u)
        total = total + term * Fraction((-1) ** (k + 1), k)
    return total


def exp_letters(coeffs, n, alphabet=None):
    """``exp(sum_i coeffs[i] * letter_i)``, the signature of a straight segment.

    Level ``k`` is the ``k``-fold outer power of ``coeffs`` divided by ``k!``.
    """
    d = len(coeffs)
    base = np.empty(d, dtype=object)
    for i, c in enumerate(coeffs):
        base[i] = c
    levels = [np.array([ONE], dtype=object)]
    block = levels[0]
    for k in range(1, n + 1):
        block = np.multiply.outer(block, base).reshape(-1)
        levels.append(_scale(block, Fraction(1, factorial(k))))
    return TruncatedTensor(d, n, levels, alphabet)


def mul_exp_letters(x, coeffs):
    """``x * exp_letters(coeffs)`` without forming the exponential.

    Level ``k`` of the product is evaluated Horner-style as
    ``(...((x_0 v / k + x_1) v / (k-1) + x_2) ...) v / 1 + x_k``.
    """
    if len(coeffs) != x.d:
        raise AlphabetMismatch(f"{len(coeffs)} coefficients for an alphabet of size {x.d}")
    v = np.empty(x.d, dtype=object)
    for i, c in enumerate(coeffs):
        v[i] = c
    out = [x.levels[0].copy()]
    for k in range(1, x.n + 1):
        acc = x.levels[0]
        for j in range(1, k + 1):
            step = np.multiply.outer(acc, v).reshape(-1)
            if k - j + 1 > 1:
                step = _scale(step, Fraction(1, k - j + 1))
            acc = step + x.levels[j]
        out.append(acc)
    return TruncatedTensor(x.d, x.n, out, x.alphabet)

