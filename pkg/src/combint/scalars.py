"""Exact scalars: rationals (``fractions.Fraction``), capped p-adics and polynomials in ``ell``.

``ell`` is a formal symbol standing for the logarithm of the uniformizer, so
``branch_log(p) == ell``. The three scalar kinds interoperate through the
usual arithmetic operators: a rational meeting a :class:`Padic` is converted
at the precision of the p-adic operand, and anything meeting an
:class:`EllPoly` is promoted to a constant polynomial.
"""

import numbers
from fractions import Fraction

from .errors import NotAUnit, PrimeMismatch, ZeroArgument


def valuation(n, p):
    """p-adic valuation of a nonzero integer or fraction."""
    n = Fraction(n)
    if n == 0:
        raise ZeroArgument("valuation of zero")
    v = 0
    num, den = n.numerator, n.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


class Padic:
    """Element of Q_p known to a finite relative precision.

    The value is ``p**val * unit`` with ``unit`` a p-adic unit known modulo
    ``p**prec``. Two kinds of zero exist: the exact zero (``prec is None``)
    and a zero known only modulo ``p**val`` (``unit == 0``, ``prec == 0``).
    Precision is propagated pessimistically: sums keep the smaller absolute
    precision, products and quotients the smaller relative precision.
    """

    __slots__ = ("p", "val", "unit", "prec")
    __hash__ = None

    def __init__(self, p, val, unit, prec):
        self.p = p
        if prec is None:
            if unit != 0:
                raise ValueError("only zero may carry unbounded precision")
            self.val, self.unit, self.prec = 0, 0, None
            return
        prec = max(prec, 0)
        unit %= p ** prec
        if unit == 0:
            self.val, self.unit, self.prec = val + prec, 0, 0
            return
        while unit % p == 0:
            unit //= p
            val += 1
            prec -= 1
        self.val, self.unit, self.prec = val, unit, prec

    # construction

    @classmethod
    def zero(cls, p):
        return cls(p, 0, 0, None)

    @classmethod
    def from_rational(cls, x, p, prec):
        """Convert with ``prec`` digits of relative precision."""
        x = Fraction(x)
        if x == 0:
            return cls.zero(p)
        v = valuation(x, p)
        num, den = x.numerator, x.denominator
        if v > 0:
            num //= p ** v
        elif v < 0:
            den //= p ** (-v)
        mod = p ** max(prec, 0)
        unit = num * pow(den, -1, mod) % mod if mod > 1 else 0
        return cls(p, v, unit, prec)

    @classmethod
    def from_rational_abs(cls, x, p, absprec):
        """Convert so that the result is known modulo ``p**absprec``."""
        x = Fraction(x)
        if x == 0:
            return cls.zero(p)
        v = valuation(x, p)
        if absprec is None:
            raise ValueError("a nonzero rational has no finite p-adic expansion")
        if absprec <= v:
            return cls(p, absprec, 0, 0)
        return cls.from_rational(x, p, absprec - v)

    @classmethod
    def from_digits(cls, p, val, digits, prec):
        if prec is None:
            if any(digits):
                raise ValueError("only zero may carry unbounded precision")
            return cls.zero(p)
        unit = sum(d * p ** i for i, d in enumerate(digits))
        return cls(p, val, unit, prec)

    # inspection

    @property
    def is_exact_zero(self):
        return self.prec is None

    def is_zero(self):
        return self.unit == 0

    @property
    def absprec(self):
        return None if self.prec is None else self.val + self.prec

    def digits(self):
        """Base-p digits of the unit part, least significant first."""
        out, u = [], self.unit
        for _ in range(self.prec or 0):
            u, d = divmod(u, self.p)
            out.append(d)
        return out

    def lift(self):
        """The rational representative ``p**val * unit``."""
        return Fraction(self.unit) * Fraction(self.p) ** self.val

    def unit_part(self):
        if self.is_zero():
            raise NotAUnit("zero has no unit part")
        return Padic(self.p, 0, self.unit, self.prec)

    def __repr__(self):
        if self.is_exact_zero:
            return f"Padic({self.p}, 0)"
        if self.unit == 0:
            return f"Padic({self.p}, O({self.p}^{self.val}))"
        return f"Padic({self.p}, {self.unit}*{self.p}^{self.val} + O({self.p}^{self.absprec}))"

    # arithmetic

    def _lift_other(self, other, additive):
        if isinstance(other, Padic):
            if other.p != self.p:
                raise PrimeMismatch(f"{self.p}-adic and {other.p}-adic values do not mix")
            return other
        if isinstance(other, numbers.Rational):
            if additive:
                return Padic.from_rational_abs(other, self.p, self.absprec)
            return Padic.from_rational(other, self.p, self.prec)
        return NotImplemented

    def __add__(self, other):
        if self.is_exact_zero and isinstance(other, numbers.Rational):
            return other
        other = self._lift_other(other, True)
        if other is NotImplemented:
            return NotImplemented
        if self.is_exact_zero:
            return other
        if other.is_exact_zero:
            return self
        p = self.p
        ap = min(self.absprec, other.absprec)
        v = min(self.val, other.val)
        total = self.unit * p ** (self.val - v) + other.unit * p ** (other.val - v)
        return Padic(p, v, total, ap - v)

    __radd__ = __add__

    def __neg__(self):
        if self.is_exact_zero:
            return self
        return Padic(self.p, self.val, -self.unit, self.prec)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if self.is_exact_zero and isinstance(other, (numbers.Rational, Padic)):
            return self
        other = self._lift_other(other, False)
        if other is NotImplemented:
            return NotImplemented
        if other.is_exact_zero:
            return other
        return Padic(self.p, self.val + other.val, self.unit * other.unit, min(self.prec, other.prec))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift_other(other, False)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("p-adic division by zero")
        if self.is_exact_zero:
            return self
        prec = min(self.prec, other.prec)
        mod = self.p ** prec
        unit = self.unit * pow(other.unit, -1, mod) if mod > 1 else 0
        return Padic(self.p, self.val - other.val, unit, prec)

    def __rtruediv__(self, other):
        other = self._lift_other(other, False)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return 1 / (self ** (-k))
        if k == 0:
            return Fraction(1) if self.is_exact_zero else Padic(self.p, 0, 1, self.prec)
        base, result = self, None
        while k:
            if k & 1:
                result = base if result is None else result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, (Padic, numbers.Rational)):
            return NotImplemented
        if isinstance(other, Padic) and other.p != self.p:
            return False
        if self.is_exact_zero and isinstance(other, numbers.Rational):
            return other == 0
        return (self - other).is_zero()


def padic_log(u):
    """Iwasawa logarithm of a p-adic unit.

    The unit is raised to ``p - 1`` to kill its Teichmüller factor, the series
    ``log(1 + t)`` is summed until its terms vanish at the working precision,
    and the result is divided back by ``p - 1``.
    """
    if not isinstance(u, Padic) or u.is_zero() or u.val != 0:
        raise NotAUnit(f"padic_log needs a unit, got {u!r}")
    p = u.p
    t = u ** (p - 1) - 1
    target = t.absprec
    if t.is_zero():
        return Padic(p, target, 0, 0)
    total = Padic(p, target, 0, 0)
    power = t
    k = 1
    while k * t.val - valuation(k, p) < target:
        term = power / k
        total = total + term if k % 2 else total - term
        k += 1
        power = power * t
    return total / (p - 1)


def branch_log(x):
    """Logarithm with ``Log(p) = ell``: ``val(x)*ell + padic_log(unit(x))``."""
    if isinstance(x, numbers.Rational) and not isinstance(x, Padic):
        raise ZeroArgument("branch_log needs a p-adic argument")
    if x.is_zero():
        raise ZeroArgument("branch_log(0) is undefined")
    return EllPoly([padic_log(x.unit_part()), Fraction(x.val)])


def _is_scalar(x):
    return isinstance(x, (numbers.Rational, Padic))


class EllPoly:
    """Polynomial ``c0 + c1*ell + ... + cd*ell**d`` with rational or p-adic coefficients."""

    __slots__ = ("coeffs",)
    __hash__ = None

    def __init__(self, coeffs=()):
        coeffs = [c if isinstance(c, Padic) else Fraction(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def ell(cls):
        return cls([0, 1])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def coefficient(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def at_zero(self):
        """Evaluate at ``ell = 0``."""
        return self.coefficient(0)

    def is_unit(self):
        return self.degree == 0

    def __repr__(self):
        if not self.coeffs:
            return "EllPoly(0)"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0 and not isinstance(c, Padic):
                continue
            parts.append(f"({c})" + ("" if k == 0 else "*ell" if k == 1 else f"*ell^{k}"))
        return "EllPoly(" + " + ".join(parts) + ")"

    def _coerce(self, other):
        if isinstance(other, EllPoly):
            return other
        if _is_scalar(other):
            return EllPoly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return EllPoly([self.coefficient(k) + other.coefficient(k) for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return EllPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            return EllPoly([c * other for c in self.coeffs])
        if not isinstance(other, EllPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return EllPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return EllPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, EllPoly):
            if not other.is_unit():
                raise ZeroDivisionError("only nonzero constants are invertible in K[ell]")
            other = other.coeffs[0]
        if not _is_scalar(other):
            return NotImplemented
        return EllPoly([c / other for c in self.coeffs])

    def __rtruediv__(self, other):
        if not self.is_unit():
            raise ZeroDivisionError("only nonzero constants are invertible in K[ell]")
        return EllPoly([other / self.coeffs[0]])

    def __pow__(self, k):
        out = EllPoly([1])
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return all(self.coefficient(k) == other.coefficient(k) for k in range(n))


def is_unit_scalar(x):
    """Whether ``x`` is invertible in its scalar ring."""
    if isinstance(x, EllPoly):
        return x.is_unit()
    if isinstance(x, Padic):
        return not x.is_zero()
    return x != 0
