"""
The quaternion algebra (-1, -1 / K) over K = Q(sqrt(-d)), and constructors for
the Pell and Gauss unit families of its order spanned by 1, i, j, k.
"""


import enum
import logging
import math
import typing

import PingPongUnits.exactnum
import PingPongUnits.exceptions
import PingPongUnits.pell


module_logger = logging.getLogger(__name__)

Rational = PingPongUnits.exactnum.Rational

# Finite subgroups of these algebras have exponent dividing 24
TORSION_BOUND = 24


class BasisSlot(enum.Enum):
    """
    One of the basis elements 1, i, j, k.
    """

    ONE = "1"
    I = "i"
    J = "j"
    K = "k"


class WKind(enum.Enum):
    """
    The three shapes of the second generator w paired with the homothety
    unit u = x + y*sqrt(-d)*i.
    """

    W1 = "w1"
    W2 = "w2"
    W3 = "w3"


class ImagQuad:
    """
    r + s*sqrt(-d) with r and s rational.
    """

    __slots__ = ("_r", "_s", "_d")

    def __init__(self, r=0, s=0, d=1):
        self._d = PingPongUnits.exactnum.as_d(d)
        self._r = Rational(r)
        self._s = Rational(s)

    @classmethod
    def _make(cls, r: Rational, s: Rational, d: int) -> "ImagQuad":
        obj = cls.__new__(cls)
        obj._r = r
        obj._s = s
        obj._d = d
        return obj

    @property
    def r(self) -> Rational:
        return self._r

    @property
    def s(self) -> Rational:
        return self._s

    @property
    def d(self) -> int:
        return self._d

    def _coerce(self, other) -> typing.Optional["ImagQuad"]:
        if isinstance(other, ImagQuad):
            if other.d != self._d:
                raise PingPongUnits.exceptions.MismatchedField(self._d, other.d)
            return other
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return ImagQuad._make(Rational(other), Rational(0), self._d)
        return None

    def __add__(self, other) -> "ImagQuad":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return ImagQuad._make(self._r + other.r, self._s + other.s, self._d)

    __radd__ = __add__

    def __sub__(self, other) -> "ImagQuad":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return ImagQuad._make(self._r - other.r, self._s - other.s, self._d)

    def __rsub__(self, other) -> "ImagQuad":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> "ImagQuad":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return ImagQuad._make(
            self._r * other.r - self._d * self._s * other.s,
            self._r * other.s + self._s * other.r,
            self._d,
        )

    __rmul__ = __mul__

    def __neg__(self) -> "ImagQuad":
        return ImagQuad._make(-self._r, -self._s, self._d)

    def conjugate(self) -> "ImagQuad":
        return ImagQuad._make(self._r, -self._s, self._d)

    def field_norm(self) -> Rational:
        return self._r * self._r + self._d * self._s * self._s

    def is_rational(self) -> bool:
        return self._s == 0

    def in_ring(self) -> bool:
        """
        Membership in the ring of integers of Q(sqrt(-d)).

        For d = 3 (mod 4) the ring is Z[(1 + sqrt(-d))/2], so half-integers
        are allowed when r and s are both halves or both integers.
        """
        if self._d % 4 == 3:
            twice_r = 2 * self._r
            twice_s = 2 * self._s
            if twice_r.denominator != 1 or twice_s.denominator != 1:
                return False
            return (twice_r.numerator - twice_s.numerator) % 2 == 0

        return self._r.denominator == 1 and self._s.denominator == 1

    def __bool__(self) -> bool:
        return bool(self._r) or bool(self._s)

    def __eq__(self, other) -> bool:
        if isinstance(other, ImagQuad):
            if other.d != self._d:
                return self._s == 0 and other.s == 0 and self._r == other.r
            return self._r == other.r and self._s == other.s
        if isinstance(other, (int, Rational)):
            return self._s == 0 and self._r == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._s == 0:
            return hash(self._r)
        return hash((self._r, self._s, -self._d))

    def __str__(self) -> str:
        if self._s == 0:
            return str(self._r)

        if abs(self._s) == 1:
            radical = f"sqrt(-{ self._d })"
        else:
            radical = f"{ abs(self._s) }*sqrt(-{ self._d })"

        if self._r == 0:
            return radical if self._s > 0 else "-" + radical

        return "{}{}{}".format(self._r, "+" if self._s > 0 else "-", radical)

    def __repr__(self):
        return "<{}.{} object at {} value={}>".format(
            __class__.__module__,
            __class__.__name__,
            hex(id(self)),
            self,
        )


def sqrt_minus_d(d) -> ImagQuad:
    return ImagQuad(0, 1, d)


class QuatElem:
    """
    c1 + ci*i + cj*j + ck*k with coefficients in Q(sqrt(-d)), where
    i**2 = j**2 = -1 and ij = k = -ji. The coefficient field is central.
    """

    __slots__ = ("_coefficients",)

    def __init__(self, c1: ImagQuad, ci: ImagQuad, cj: ImagQuad, ck: ImagQuad):
        d = c1.d
        for coefficient in (ci, cj, ck):
            if coefficient.d != d:
                raise PingPongUnits.exceptions.MismatchedField(d, coefficient.d)

        self._coefficients = (c1, ci, cj, ck)

    @classmethod
    def from_slots(cls, d, terms: typing.Dict[BasisSlot, ImagQuad]) -> "QuatElem":
        """
        Builds an element from a sparse slot -> coefficient mapping.
        """
        d = PingPongUnits.exactnum.as_d(d)
        zero = ImagQuad._make(Rational(0), Rational(0), d)
        return cls(*(terms.get(slot, zero) for slot in BasisSlot))

    @classmethod
    def scalar(cls, value, d) -> "QuatElem":
        if not isinstance(value, ImagQuad):
            value = ImagQuad(value, 0, d)
        return cls.from_slots(d, {BasisSlot.ONE: value})

    @classmethod
    def one(cls, d) -> "QuatElem":
        return cls.scalar(1, d)

    @property
    def d(self) -> int:
        return self._coefficients[0].d

    @property
    def c1(self) -> ImagQuad:
        return self._coefficients[0]

    @property
    def ci(self) -> ImagQuad:
        return self._coefficients[1]

    @property
    def cj(self) -> ImagQuad:
        return self._coefficients[2]

    @property
    def ck(self) -> ImagQuad:
        return self._coefficients[3]

    @property
    def coefficients(self) -> typing.Tuple[ImagQuad, ImagQuad, ImagQuad, ImagQuad]:
        return self._coefficients

    def coefficient(self, slot: BasisSlot) -> ImagQuad:
        return self._coefficients[list(BasisSlot).index(slot)]

    def support(self) -> typing.FrozenSet[BasisSlot]:
        return frozenset(
            slot
            for slot, coefficient in zip(BasisSlot, self._coefficients)
            if coefficient
        )

    def __add__(self, other: "QuatElem") -> "QuatElem":
        if not isinstance(other, QuatElem):
            return NotImplemented
        return QuatElem(*(a + b for a, b in zip(self._coefficients, other.coefficients)))

    def __sub__(self, other: "QuatElem") -> "QuatElem":
        if not isinstance(other, QuatElem):
            return NotImplemented
        return QuatElem(*(a - b for a, b in zip(self._coefficients, other.coefficients)))

    def __neg__(self) -> "QuatElem":
        return QuatElem(*(-a for a in self._coefficients))

    def __mul__(self, other) -> "QuatElem":
        if isinstance(other, QuatElem):
            return quat_mul(self, other)
        if isinstance(other, (ImagQuad, int, Rational)):
            return QuatElem(*(a * other for a in self._coefficients))
        return NotImplemented

    def __rmul__(self, other) -> "QuatElem":
        if isinstance(other, (ImagQuad, int, Rational)):
            return QuatElem(*(other * a for a in self._coefficients))
        return NotImplemented

    def __pow__(self, exponent: int) -> "QuatElem":
        return quat_pow(self, exponent)

    def conjugate(self) -> "QuatElem":
        return quat_conj(self)

    def norm(self) -> ImagQuad:
        return quat_norm(self)

    def is_unit(self) -> bool:
        norm = quat_norm(self)
        return norm.s == 0 and norm.r in (1, -1)

    def in_order(self) -> bool:
        """
        Whether every coefficient is an algebraic integer of Q(sqrt(-d)).
        """
        return all(coefficient.in_ring() for coefficient in self._coefficients)

    def canonical_key(self) -> typing.Tuple[Rational, ...]:
        """
        The reduced rational coordinates, usable for sorting and hashing.
        """
        return tuple(
            part
            for coefficient in self._coefficients
            for part in (coefficient.r, coefficient.s)
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuatElem):
            return NotImplemented
        return self.d == other.d and self._coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash((self.d, self.canonical_key()))

    def __str__(self) -> str:
        terms = []
        for slot, coefficient in zip(BasisSlot, self._coefficients):
            if not coefficient:
                continue

            text = str(coefficient)
            if slot is BasisSlot.ONE:
                terms.append(text)
            elif text == "1":
                terms.append(slot.value)
            elif text == "-1":
                terms.append("-" + slot.value)
            elif coefficient.r and coefficient.s:
                terms.append(f"({ text })*{ slot.value }")
            else:
                terms.append(f"{ text }*{ slot.value }")

        if not terms:
            return "0"

        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self):
        return "<{}.{} object at {} value={}>".format(
            __class__.__module__,
            __class__.__name__,
            hex(id(self)),
            self,
        )


def quat_mul(p: QuatElem, q: QuatElem) -> QuatElem:
    """
    The Hamilton product; coefficients commute with i, j and k.
    """
    a1, b1, c1, d1 = p.coefficients
    a2, b2, c2, d2 = q.coefficients

    return QuatElem(
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def quat_conj(q: QuatElem) -> QuatElem:
    """
    Negates the i, j and k parts; the coefficients are not conjugated.
    """
    c1, ci, cj, ck = q.coefficients
    return QuatElem(c1, -ci, -cj, -ck)


def quat_norm(q: QuatElem) -> ImagQuad:
    """
    The reduced norm q * conj(q), i.e. c1**2 + ci**2 + cj**2 + ck**2 in K.
    """
    c1, ci, cj, ck = q.coefficients
    return c1 * c1 + ci * ci + cj * cj + ck * ck


def _require_unit(q: QuatElem) -> ImagQuad:
    norm = quat_norm(q)
    if norm.s != 0 or norm.r not in (1, -1):
        raise PingPongUnits.exceptions.NonUnit(norm)
    return norm


def quat_inverse(q: QuatElem) -> QuatElem:
    """
    conj(q) / norm(q) for a unit of reduced norm +1 or -1.

    :raises NonUnit: when the reduced norm is anything else.
    """
    norm = _require_unit(q)
    return quat_conj(q) * norm.r


def quat_pow(q: QuatElem, n: int) -> QuatElem:
    """
    Exact power by square-and-multiply; negative n needs a unit.
    """
    assert isinstance(n, int)

    if n < 0:
        return quat_pow(quat_inverse(q), -n)

    result = QuatElem.one(q.d)
    base = q
    while n:
        if n & 1:
            result = quat_mul(result, base)
        base = quat_mul(base, base)
        n >>= 1

    return result


def is_torsion(q: QuatElem, bound: int = TORSION_BOUND) -> bool:
    """
    Determines whether q**k = 1 for some 1 <= k <= bound.

    :param q: A unit of reduced norm +1 or -1.
    :param bound: The largest order tried.

    :type q: QuatElem
    :type bound: int

    :return: True if a finite order was found.
    :rtype: bool
    """
    _require_unit(q)

    one = QuatElem.one(q.d)
    power = q
    for k in range(1, bound + 1):
        if power == one:
            module_logger.debug("%s has order %r", q, k)
            return True
        power = quat_mul(power, q)

    return False


def _check_distinct(*slots: BasisSlot):
    if len(set(slots)) != len(slots):
        raise PingPongUnits.exceptions.SlotCollision([slot.value for slot in slots])


def _check_integral(unit: QuatElem):
    for coefficient in unit.coefficients:
        if not coefficient.in_ring():
            raise PingPongUnits.exceptions.NonIntegral(coefficient, unit.d)


def pell2_unit(
    fund: PingPongUnits.pell.PellSolution, xi: BasisSlot, psi: BasisSlot
) -> QuatElem:
    """
    The Pell 2-unit y*sqrt(-d)*xi + x*psi, whose reduced norm is N(x + y*sqrt(d)).

    :param fund: Any solution of Pell's equation, fundamental or a power.
    :param xi: The slot carrying y*sqrt(-d).
    :param psi: The slot carrying x.

    :type fund: PellSolution
    :type xi: BasisSlot
    :type psi: BasisSlot

    :return: The unit.
    :rtype: QuatElem
    """
    _check_distinct(xi, psi)

    d = fund.d
    unit = QuatElem.from_slots(
        d,
        {
            xi: ImagQuad(0, fund.y, d),
            psi: ImagQuad(fund.x, 0, d),
        },
    )

    assert quat_norm(unit) == fund.norm

    return unit


def pell4_unit(
    fund: PingPongUnits.pell.PellSolution,
    zeta: BasisSlot,
    xi: BasisSlot,
    psi: BasisSlot,
    phi: BasisSlot,
    sign: int = 1,
    require_integral: bool = True,
) -> QuatElem:
    """
    The Pell 4-unit (y/2)sqrt(-d)(zeta + xi) + ((1 +- x)/2)psi + ((1 -+ x)/2)phi.

    Its reduced norm is (N + 1)/2, so a norm +1 solution is required. The
    halves are algebraic integers only when y is even.

    :param fund: A Pell solution of norm +1.
    :param zeta: First slot carrying (y/2)*sqrt(-d).
    :param xi: Second slot carrying (y/2)*sqrt(-d).
    :param psi: Slot carrying (1 + sign*x)/2.
    :param phi: Slot carrying (1 - sign*x)/2.
    :param sign: +1 or -1.
    :param require_integral: Raise NonIntegral when the unit leaves the order.

    :type fund: PellSolution
    :type zeta: BasisSlot
    :type xi: BasisSlot
    :type psi: BasisSlot
    :type phi: BasisSlot
    :type sign: int
    :type require_integral: bool

    :return: The unit.
    :rtype: QuatElem
    """
    assert sign in (1, -1)

    if fund.norm != 1:
        raise PingPongUnits.exceptions.NormMinusOne(fund.d)

    _check_distinct(zeta, xi, psi, phi)

    d = fund.d
    half_y = ImagQuad(0, Rational(fund.y, 2), d)
    unit = QuatElem.from_slots(
        d,
        {
            zeta: half_y,
            xi: half_y,
            psi: ImagQuad(Rational(1 + sign * fund.x, 2), 0, d),
            phi: ImagQuad(Rational(1 - sign * fund.x, 2), 0, d),
        },
    )

    if require_integral:
        _check_integral(unit)

    assert quat_norm(unit) == 1

    return unit


def pell4_unit_from_square(fund: PingPongUnits.pell.PellSolution) -> QuatElem:
    """
    The Pell 4-unit xy*sqrt(-d) + xy*sqrt(-d)*i + x**2*j + y**2*d*k built from
    the square of a solution with y odd. Its reduced norm is N**2 = 1.
    """
    if fund.y % 2 == 0:
        raise PingPongUnits.exceptions.PreconditionViolated(
            f"The square construction needs y odd, got y={ fund.y }"
        )

    d = fund.d
    xy = ImagQuad(0, fund.x * fund.y, d)
    unit = QuatElem(
        xy,
        xy,
        ImagQuad(fund.x * fund.x, 0, d),
        ImagQuad(fund.y * fund.y * d, 0, d),
    )

    assert quat_norm(unit) == 1

    return unit


def pell3_unit(
    solution: PingPongUnits.pell.Pell3Solution,
    xi: BasisSlot,
    psi: BasisSlot,
    phi: BasisSlot,
) -> QuatElem:
    """
    The Pell 3-unit y*sqrt(-d)*xi + x*psi + (1 - x)*phi.
    """
    x, y, d = solution.x, solution.y, solution.d

    if (2 * x - 1) ** 2 - 2 * d * y * y != 1:
        raise PingPongUnits.exceptions.PreconditionViolated(
            f"(2x - 1)**2 - 2d*y**2 != 1 for x={ x } y={ y } d={ d }"
        )

    _check_distinct(xi, psi, phi)

    unit = QuatElem.from_slots(
        d,
        {
            xi: ImagQuad(0, y, d),
            psi: ImagQuad(x, 0, d),
            phi: ImagQuad(1 - x, 0, d),
        },
    )

    assert quat_norm(unit) == 1

    return unit


def three_squares_all(n: int) -> typing.Iterator[typing.Tuple[int, int, int]]:
    """
    Every p <= q <= r with p**2 + q**2 + r**2 = n, ordered lexicographically
    on (r, q, p), so the most balanced decomposition comes first.
    """
    assert isinstance(n, int)
    assert n >= 0

    r = math.isqrt(n // 3)
    if 3 * r * r < n:
        r += 1

    while r * r <= n:
        rest = n - r * r
        for q in range(r + 1):
            remainder = rest - q * q
            if remainder < 0:
                break
            p = math.isqrt(remainder)
            if p * p == remainder and p <= q:
                yield p, q, r
        r += 1


def three_squares(n: int) -> typing.Optional[typing.Tuple[int, int, int]]:
    """
    The first decomposition of n into three squares, or None exactly when n
    has the form 4**a * (8b + 7).

    :param n: A nonnegative integer.

    :type n: int

    :return: (p, q, r) with p <= q <= r, or None.
    :rtype: tuple or None
    """
    return next(three_squares_all(n), None)


def gauss_unit(d, m: int, sign: int = 1) -> typing.Optional[QuatElem]:
    """
    The Gauss unit m*sqrt(-d) + p*i + q*j + r*k with p**2 + q**2 + r**2 equal
    to m**2*d + sign, whose reduced norm is sign.

    :param d: The square-free radicand.
    :param m: A nonzero integer.
    :param sign: +1 or -1, the reduced norm of the result.

    :type d: int or SquareFreeD
    :type m: int
    :type sign: int

    :return: The first decomposition with support larger than one, or None.
    :rtype: QuatElem or None
    """
    assert sign in (1, -1)

    d = PingPongUnits.exactnum.as_d(d)
    if m == 0:
        raise PingPongUnits.exceptions.PreconditionViolated("Gauss units need m != 0")

    target = m * m * d + sign

    for p, q, r in three_squares_all(target):
        unit = QuatElem(
            ImagQuad(0, m, d),
            ImagQuad(p, 0, d),
            ImagQuad(q, 0, d),
            ImagQuad(r, 0, d),
        )

        if len(unit.support()) > 1:
            assert quat_norm(unit) == sign
            return unit

    module_logger.debug("No Gauss unit for d=%r m=%r sign=%r", d, m, sign)

    return None


def u_unit(fund: PingPongUnits.pell.PellSolution) -> QuatElem:
    """
    The homothety unit x + y*sqrt(-d)*i.
    """
    return pell2_unit(fund, BasisSlot.I, BasisSlot.ONE)


def w_unit(fund: PingPongUnits.pell.PellSolution, kind: WKind) -> QuatElem:
    """
    The second generator of each kind.

    W1 is y*sqrt(-d) + x*k and exists for either norm. W2 and W3 are the half
    and the squared forms and exist only for norm +1.
    """
    d = fund.d
    x, y = fund.x, fund.y

    if kind is WKind.W1:
        return pell2_unit(fund, BasisSlot.ONE, BasisSlot.K)

    if fund.norm != 1:
        raise PingPongUnits.exceptions.NormMinusOne(d)

    if kind is WKind.W2:
        half = Rational(1, 2)
        unit = QuatElem(
            ImagQuad((x + 1) * half, 0, d),
            ImagQuad(0, -y * half, d),
            ImagQuad((x - 1) * half, 0, d),
            ImagQuad(0, y * half, d),
        )
    elif kind is WKind.W3:
        unit = QuatElem(
            ImagQuad(x * x, 0, d),
            ImagQuad(0, -x * y, d),
            ImagQuad(-y * y * d, 0, d),
            ImagQuad(0, x * y, d),
        )
    else:
        raise PingPongUnits.exceptions.PreconditionViolated(f"Unknown kind { kind }")

    assert quat_norm(unit) == 1

    return unit


def prop_pp1_units(
    fund: PingPongUnits.pell.PellSolution, require_integral: bool = False
) -> typing.List[QuatElem]:
    """
    The four units attached to a norm +1 solution: the homothety unit and
    the W1, W2 and W3 generators, in that order.

    :param fund: A Pell solution of norm +1.
    :param require_integral: Raise NonIntegral when a unit leaves the order.

    :type fund: PellSolution
    :type require_integral: bool

    :return: The four units.
    :rtype: list
    """
    if fund.norm != 1:
        raise PingPongUnits.exceptions.NormMinusOne(fund.d)

    units = [u_unit(fund)] + [w_unit(fund, kind) for kind in WKind]

    if require_integral:
        for unit in units:
            _check_integral(unit)

    return units
