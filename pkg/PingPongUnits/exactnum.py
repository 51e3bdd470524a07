"""
Exact rational and real-quadratic arithmetic.

Every other module computes on these types. There is no floating point in any
decision path: signs of a + b*sqrt(d) are resolved by comparing a**2 with
b**2*d. The mpmath conversion exists only for display and for cross-checks.
"""


import fractions
import functools
import typing

import mpmath

import PingPongUnits.exceptions


Rational = fractions.Fraction

_ZERO = Rational(0)
_ONE = Rational(1)


def is_square_free(n: int) -> bool:
    """
    Determines whether no prime square divides the provided integer.

    :param n: A positive integer.

    :type n: int

    :return: True if n is square-free.
    :rtype: bool
    """
    assert isinstance(n, int)
    assert n >= 1

    if n % 4 == 0:
        return False

    p = 3
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        p += 2

    return True


@functools.lru_cache(maxsize=None, typed=True)
def _checked_d(d: int) -> int:
    if isinstance(d, bool) or not isinstance(d, int) or d < 1:
        raise PingPongUnits.exceptions.NotSquareFree(d)

    if not is_square_free(d):
        raise PingPongUnits.exceptions.NotSquareFree(d)

    return d


def _sgn(value: Rational) -> int:
    return (value > 0) - (value < 0)


class SquareFreeD:
    """
    A positive square-free integer, validated at construction.
    """

    __slots__ = ("_d",)

    def __init__(self, d: typing.Union[int, "SquareFreeD"]):
        if isinstance(d, SquareFreeD):
            d = d.d

        self._d = _checked_d(d)

    @property
    def d(self) -> int:
        return self._d

    def __int__(self) -> int:
        return self._d

    def __eq__(self, other) -> bool:
        if isinstance(other, SquareFreeD):
            return self._d == other.d
        if isinstance(other, int):
            return self._d == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._d)

    def __str__(self) -> str:
        return str(self._d)

    def __repr__(self):
        return "<{}.{} object at {} d={}>".format(
            __class__.__module__,
            __class__.__name__,
            hex(id(self)),
            self._d,
        )


def as_d(d: typing.Union[int, SquareFreeD]) -> int:
    """
    Normalises an int or SquareFreeD into a validated plain integer.
    """
    if isinstance(d, SquareFreeD):
        return d.d

    return _checked_d(d)


@functools.total_ordering
class QuadElem:
    """
    The real number a + b*sqrt(d), with a and b rational and sqrt(d) > 0.

    Values are immutable. Arithmetic between two elements over different d
    raises MismatchedField; ints and Fractions are promoted automatically.
    For d = 1 the representation is folded into the rational part, so two
    elements are equal exactly when their (a, b, d) agree.
    """

    __slots__ = ("_a", "_b", "_d")

    def __init__(
        self,
        a: typing.Union[int, Rational] = 0,
        b: typing.Union[int, Rational] = 0,
        d: typing.Union[int, SquareFreeD] = 1,
    ):
        d = as_d(d)
        a = Rational(a)
        b = Rational(b)

        if d == 1:
            a, b = a + b, _ZERO

        self._a = a
        self._b = b
        self._d = d

    @classmethod
    def _make(cls, a: Rational, b: Rational, d: int) -> "QuadElem":
        # Trusted constructor for results of arithmetic; d is already checked
        obj = cls.__new__(cls)

        if d == 1 and b:
            a, b = a + b, _ZERO

        obj._a = a
        obj._b = b
        obj._d = d
        return obj

    @classmethod
    def rational(cls, value: typing.Union[int, Rational], d) -> "QuadElem":
        return cls._make(Rational(value), _ZERO, as_d(d))

    @property
    def a(self) -> Rational:
        return self._a

    @property
    def b(self) -> Rational:
        return self._b

    @property
    def d(self) -> int:
        return self._d

    def is_rational(self) -> bool:
        return self._b == 0

    def _coerce(self, other) -> typing.Optional["QuadElem"]:
        if isinstance(other, QuadElem):
            if other.d != self._d:
                raise PingPongUnits.exceptions.MismatchedField(self._d, other.d)
            return other

        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return QuadElem._make(Rational(other), _ZERO, self._d)

        return None

    def __add__(self, other) -> "QuadElem":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QuadElem._make(self._a + other.a, self._b + other.b, self._d)

    __radd__ = __add__

    def __sub__(self, other) -> "QuadElem":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QuadElem._make(self._a - other.a, self._b - other.b, self._d)

    def __rsub__(self, other) -> "QuadElem":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> "QuadElem":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QuadElem._make(
            self._a * other.a + self._d * self._b * other.b,
            self._a * other.b + self._b * other.a,
            self._d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "QuadElem":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other:
            raise PingPongUnits.exceptions.QuadDivisionByZero(self)
        return self * other.invert()

    def __rtruediv__(self, other) -> "QuadElem":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __neg__(self) -> "QuadElem":
        return QuadElem._make(-self._a, -self._b, self._d)

    def __pos__(self) -> "QuadElem":
        return self

    def __abs__(self) -> "QuadElem":
        return -self if self.sign() < 0 else self

    def __pow__(self, exponent: int) -> "QuadElem":
        assert isinstance(exponent, int)

        if exponent < 0:
            return self.invert() ** -exponent

        result = QuadElem._make(_ONE, _ZERO, self._d)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1

        return result

    def conjugate(self) -> "QuadElem":
        """
        The Galois conjugate a - b*sqrt(d).
        """
        return QuadElem._make(self._a, -self._b, self._d)

    def field_norm(self) -> Rational:
        """
        The field norm a**2 - d*b**2, multiplicative over products.
        """
        return self._a * self._a - self._d * self._b * self._b

    def invert(self) -> "QuadElem":
        """
        The multiplicative inverse, conjugate over norm.

        :raises QuadDivisionByZero: when self is zero.
        """
        if not self:
            raise PingPongUnits.exceptions.QuadDivisionByZero(1)

        norm = self.field_norm()
        return QuadElem._make(self._a / norm, -self._b / norm, self._d)

    def sign(self) -> int:
        return quad_sign(self)

    def __bool__(self) -> bool:
        return bool(self._a) or bool(self._b)

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadElem):
            if other.d != self._d:
                return self._b == 0 and other.b == 0 and self._a == other.a
            return self._a == other.a and self._b == other.b

        if isinstance(other, (int, Rational)):
            return self._b == 0 and self._a == other

        return NotImplemented

    def __lt__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() < 0

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b, self._d))

    def to_mpf(self, dps: int = 50) -> mpmath.mpf:
        """
        A high-precision approximation, for display and sanity checks only.
        """
        with mpmath.workdps(dps):
            value = mpmath.mpf(self._a.numerator) / self._a.denominator
            if self._b:
                value += (
                    mpmath.mpf(self._b.numerator)
                    / self._b.denominator
                    * mpmath.sqrt(self._d)
                )
            return +value

    def __str__(self) -> str:
        if self._b == 0:
            return str(self._a)

        if abs(self._b) == 1:
            radical = f"sqrt({ self._d })"
        else:
            radical = f"{ abs(self._b) }*sqrt({ self._d })"

        if self._a == 0:
            return radical if self._b > 0 else "-" + radical

        return "{}{}{}".format(self._a, "+" if self._b > 0 else "-", radical)

    def __repr__(self):
        return "<{}.{} object at {} value={}>".format(
            __class__.__module__,
            __class__.__name__,
            hex(id(self)),
            self,
        )


def quad_sign(q: QuadElem) -> int:
    """
    The exact sign of a + b*sqrt(d) under the embedding sqrt(d) > 0.

    If a and b agree in sign that sign is returned; otherwise the larger of
    a**2 and b**2*d decides, compared as exact rationals.

    :param q: The element to inspect.

    :type q: QuadElem

    :return: -1, 0 or +1.
    :rtype: int
    """
    sign_a = _sgn(q.a)
    sign_b = _sgn(q.b)

    if sign_b == 0:
        return sign_a
    if sign_a == 0 or sign_a == sign_b:
        return sign_b

    return sign_a * _sgn(q.a * q.a - q.b * q.b * q.d)


def sqrt_d(d: typing.Union[int, SquareFreeD]) -> QuadElem:
    """
    The element sqrt(d) itself.
    """
    return QuadElem(0, 1, d)


class ComplexQuad:
    """
    re + im*I with re and im in the same real quadratic field, where I is
    the imaginary unit of C.
    """

    __slots__ = ("_re", "_im")

    def __init__(self, re: QuadElem, im: typing.Optional[QuadElem] = None):
        assert isinstance(re, QuadElem)

        if im is None:
            im = QuadElem._make(_ZERO, _ZERO, re.d)

        assert isinstance(im, QuadElem)

        if im.d != re.d:
            raise PingPongUnits.exceptions.MismatchedField(re.d, im.d)

        self._re = re
        self._im = im

    @classmethod
    def imaginary_unit(cls, d) -> "ComplexQuad":
        return cls(QuadElem.rational(0, d), QuadElem.rational(1, d))

    @property
    def re(self) -> QuadElem:
        return self._re

    @property
    def im(self) -> QuadElem:
        return self._im

    @property
    def d(self) -> int:
        return self._re.d

    def is_real(self) -> bool:
        return not self._im

    def is_imaginary(self) -> bool:
        return not self._re

    def _coerce(self, other) -> typing.Optional["ComplexQuad"]:
        if isinstance(other, ComplexQuad):
            if other.d != self.d:
                raise PingPongUnits.exceptions.MismatchedField(self.d, other.d)
            return other

        if isinstance(other, (QuadElem, int, Rational)):
            return ComplexQuad(self._re._coerce(other))

        return None

    def __add__(self, other) -> "ComplexQuad":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return ComplexQuad(self._re + other.re, self._im + other.im)

    __radd__ = __add__

    def __sub__(self, other) -> "ComplexQuad":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return ComplexQuad(self._re - other.re, self._im - other.im)

    def __rsub__(self, other) -> "ComplexQuad":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> "ComplexQuad":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return ComplexQuad(
            self._re * other.re - self._im * other.im,
            self._re * other.im + self._im * other.re,
        )

    __rmul__ = __mul__

    def __neg__(self) -> "ComplexQuad":
        return ComplexQuad(-self._re, -self._im)

    def conjugate(self) -> "ComplexQuad":
        return ComplexQuad(self._re, -self._im)

    def abs2(self) -> QuadElem:
        """
        re**2 + im**2, which equals z * conj(z).
        """
        return self._re * self._re + self._im * self._im

    def __eq__(self, other) -> bool:
        if isinstance(other, ComplexQuad):
            return self._re == other.re and self._im == other.im
        if isinstance(other, (QuadElem, int, Rational)):
            return not self._im and self._re == other
        return NotImplemented

    def __hash__(self) -> int:
        if not self._im:
            return hash(self._re)
        return hash((self._re, self._im))

    def __str__(self) -> str:
        if not self._im:
            return str(self._re)
        if not self._re:
            return f"({ self._im })*I"
        return f"{ self._re }+({ self._im })*I"

    def __repr__(self):
        return "<{}.{} object at {} value={}>".format(
            __class__.__module__,
            __class__.__name__,
            hex(id(self)),
            self,
        )
