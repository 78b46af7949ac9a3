"""Scalar backends: exact elements of Q(sqrt 2), or 64-bit floats.

Every tensor in this package is a nested list over one backend, fixed per
model and never mixed.  Exact scalars make every verification residual
literally zero; the float backend compares residuals against ``1e-9``
relative to a caller-supplied scale.

Integers and :class:`fractions.Fraction` values interoperate with both
backends, so backend-neutral data (structure-constant tables, Clifford
matrices) can be written with plain ints.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import NotRepresentable, UnknownScalarFormat

EXACT = "exact"
FLOAT = "float"
BACKENDS = (EXACT, FLOAT)

FLOAT_ZERO_TOL = 1e-9

_SQRT2 = math.sqrt(2.0)


class Q2:
    """An element a + b*sqrt(2) of the real quadratic field Q(sqrt 2).

    Stored as a triple of integers (an + bn*sqrt2) / d with d > 0 and
    gcd(an, bn, d) = 1.  Instances are immutable; all arithmetic is exact
    and closed (Q(sqrt 2) is a field).  Mixing with ints and Fractions is
    allowed, mixing with floats is refused.
    """

    __slots__ = ("an", "bn", "d")

    def __init__(self, rational=0, radical=0):
        rational = Fraction(rational)
        radical = Fraction(radical)
        d = rational.denominator * radical.denominator // math.gcd(
            rational.denominator, radical.denominator
        )
        an = rational.numerator * (d // rational.denominator)
        bn = radical.numerator * (d // radical.denominator)
        object.__setattr__(self, "an", an)
        object.__setattr__(self, "bn", bn)
        object.__setattr__(self, "d", d)

    @classmethod
    def _make(cls, an, bn, d):
        if d < 0:
            an, bn, d = -an, -bn, -d
        g = math.gcd(math.gcd(abs(an), abs(bn)), d)
        if g > 1:
            an //= g
            bn //= g
            d //= g
        out = object.__new__(cls)
        object.__setattr__(out, "an", an)
        object.__setattr__(out, "bn", bn)
        object.__setattr__(out, "d", d)
        return out

    def __setattr__(self, name, value):
        raise AttributeError("Q2 is immutable")

    @property
    def rational_part(self):
        return Fraction(self.an, self.d)

    @property
    def radical_part(self):
        return Fraction(self.bn, self.d)

    # -- coercion ---------------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, Q2):
            return other
        if isinstance(other, (int, Fraction)):
            return Q2(other)
        return None

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Q2._make(
            self.an * o.d + o.an * self.d, self.bn * o.d + o.bn * self.d, self.d * o.d
        )

    __radd__ = __add__

    def __neg__(self):
        return Q2._make(-self.an, -self.bn, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Q2._make(
            self.an * o.d - o.an * self.d, self.bn * o.d - o.bn * self.d, self.d * o.d
        )

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Q2._make(
            self.an * o.an + 2 * self.bn * o.bn,
            self.an * o.bn + self.bn * o.an,
            self.d * o.d,
        )

    __rmul__ = __mul__

    def _inverse(self):
        # 1 / ((an + bn sqrt2)/d) = d (an - bn sqrt2) / (an^2 - 2 bn^2)
        norm = self.an * self.an - 2 * self.bn * self.bn
        if norm == 0:
            raise ZeroDivisionError("division by exact zero")
        return Q2._make(self.d * self.an, -self.d * self.bn, norm)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o._inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self._inverse()

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self._inverse() ** (-exponent)
        out = Q2(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # -- comparisons ------------------------------------------------------
    def _sign(self):
        an, bn = self.an, self.bn
        if bn == 0:
            return (an > 0) - (an < 0)
        if an == 0:
            return (bn > 0) - (bn < 0)
        if an > 0 and bn > 0:
            return 1
        if an < 0 and bn < 0:
            return -1
        # opposite signs: compare an^2 against 2 bn^2
        lhs, rhs = an * an, 2 * bn * bn
        if an > 0:
            return 1 if lhs > rhs else -1
        return 1 if lhs < rhs else -1

    def __bool__(self):
        return self.an != 0 or self.bn != 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.an == o.an and self.bn == o.bn and self.d == o.d

    def __hash__(self):
        return hash((self.an, self.bn, self.d))

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o)._sign() < 0

    def __le__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o)._sign() <= 0

    def __gt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o)._sign() > 0

    def __ge__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o)._sign() >= 0

    def __abs__(self):
        return -self if self._sign() < 0 else self

    def __float__(self):
        return (self.an + self.bn * _SQRT2) / self.d

    def __repr__(self):
        return f"Q2({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


SQRT2 = Q2(0, 1)


def q2(rational, radical=0):
    """Shorthand constructor for exact scalars."""
    return Q2(rational, radical)


def converter(backend):
    """Return a function mapping ints/Fractions/Q2/strings into `backend`."""
    if backend == EXACT:
        def conv(value):
            if isinstance(value, Q2):
                return value
            if isinstance(value, (int, Fraction)):
                return Q2(value)
            if isinstance(value, str):
                return parse_scalar(value, EXACT)
            if isinstance(value, float):
                return Q2(Fraction(value))
            raise UnknownScalarFormat(f"cannot convert {value!r} to an exact scalar")
        return conv
    if backend == FLOAT:
        def conv(value):
            if isinstance(value, str):
                return parse_scalar(value, FLOAT)
            return float(value)
        return conv
    raise ValueError(f"unknown backend {backend!r}")


def backend_of(x):
    """Which backend a scalar value belongs to."""
    return EXACT if isinstance(x, (Q2, int, Fraction)) else FLOAT


def is_zero(x, scale=1.0, tol=FLOAT_ZERO_TOL):
    """Zero test: exact for Q2/int/Fraction, |x| <= tol*max(1, scale) for floats."""
    if isinstance(x, (Q2, int, Fraction)):
        return not x
    s = float(scale)
    return abs(x) <= tol * max(1.0, abs(s))


def residual_norm(values):
    """Max of |v| over the values; 0 for an empty list.

    On the exact backend the result is an exact scalar (zero iff every
    entry is exactly zero); on the float backend it is the float max.
    """
    out = 0
    for v in values:
        a = abs(v)
        if a > out:
            out = a
    return out


def scalar_sqrt(x):
    """Square root staying inside the backend.

    Exact scalars must be nonnegative rationals of the form r^2 or 2 r^2
    (the only squares relevant here); anything else raises
    :class:`NotRepresentable`, signalling that the chosen parameters need
    the float backend.
    """
    if isinstance(x, (int, Fraction)):
        x = Q2(x)
    if isinstance(x, Q2):
        if x._sign() < 0:
            raise NotRepresentable(f"sqrt of negative value {x}")
        if x.bn != 0:
            raise NotRepresentable(f"sqrt of {x} not supported in Q(sqrt2)")
        r = Fraction(x.an, x.d)
        root = _fraction_sqrt(r)
        if root is not None:
            return Q2(root)
        root = _fraction_sqrt(r / 2)
        if root is not None:
            return Q2(0, root)
        raise NotRepresentable(f"{x} is neither r^2 nor 2 r^2 for rational r")
    if x < 0:
        raise NotRepresentable(f"sqrt of negative value {x}")
    return math.sqrt(x)


def _fraction_sqrt(r):
    if r < 0:
        return None
    p, q = r.numerator, r.denominator
    sp, sq = math.isqrt(p), math.isqrt(q)
    if sp * sp == p and sq * sq == q:
        return Fraction(sp, sq)
    return None


# -- text serialization ---------------------------------------------------
#
# Exact scalars render as "p/q+r/s*sqrt2" with zero parts omitted; floats
# render as the shortest round-trip decimal (Python repr).

_TERM_RE = re.compile(r"^(?:(?P<coef>\d+(?:/\d+)?)(?P<star>\*)?)?(?P<rad>sqrt2)?$")


def format_scalar(x):
    if isinstance(x, (int, Fraction)):
        x = Q2(x)
    if isinstance(x, Q2):
        rat, rad = x.rational_part, x.radical_part
        if not rat and not rad:
            return "0"
        parts = []
        if rat:
            parts.append(str(rat))
        if rad:
            if rad == 1:
                term = "sqrt2"
            elif rad == -1:
                term = "-sqrt2"
            else:
                term = f"{rad}*sqrt2"
            if parts and not term.startswith("-"):
                parts.append("+" + term)
            else:
                parts.append(term)
        return "".join(parts)
    return repr(float(x))


def parse_scalar(text, backend):
    """Parse the text form of a scalar for the given backend."""
    if backend == FLOAT:
        try:
            return float(text)
        except ValueError:
            raise UnknownScalarFormat(f"bad float scalar {text!r}") from None
    if backend != EXACT:
        raise ValueError(f"unknown backend {backend!r}")
    s = text.strip().replace(" ", "")
    if not s:
        raise UnknownScalarFormat("empty scalar string")
    # split into signed terms
    terms = re.findall(r"[+-]?[^+-]+", s)
    if "".join(terms) != s:
        raise UnknownScalarFormat(f"bad exact scalar {text!r}")
    rat = Fraction(0)
    rad = Fraction(0)
    for term in terms:
        sign = 1
        body = term
        if body[0] in "+-":
            sign = -1 if body[0] == "-" else 1
            body = body[1:]
        m = _TERM_RE.match(body)
        if not m or (m.group("coef") is None and m.group("rad") is None):
            raise UnknownScalarFormat(f"bad term {term!r} in {text!r}")
        if m.group("star") and not m.group("rad"):
            raise UnknownScalarFormat(f"bad term {term!r} in {text!r}")
        value = sign * Fraction(m.group("coef") or 1)
        if m.group("rad"):
            rad += value
        else:
            rat += value
    return Q2(rat, rad)
