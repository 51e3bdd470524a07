"""
The embedding of the quaternion algebra into 2x2 complex matrices, the real
Mobius transformations it induces, and exact arcs on the circle R u {oo}.
"""


import enum
import functools
import logging
import re
import typing

import PingPongUnits.exactnum
import PingPongUnits.exceptions
import PingPongUnits.quaternion


module_logger = logging.getLogger(__name__)

QuadElem = PingPongUnits.exactnum.QuadElem
ComplexQuad = PingPongUnits.exactnum.ComplexQuad
Rational = PingPongUnits.exactnum.Rational

_RATIONAL = r"\d+(?:/\d+)?"
_QUAD_PATTERN = re.compile(
    rf"^(?P<a>[+-]?{ _RATIONAL })?"
    rf"(?:(?P<sign>[+-])?(?:(?P<b>{ _RATIONAL })\*)?sqrt\((?P<d>\d+)\))?$"
)
_RADICAND_PATTERN = re.compile(r"sqrt\((\d+)\)")
_INFINITY_TOKENS = ("inf", "+inf", "-inf", "oo", "-oo", "+oo")


def parse_quad(text: str, d=None) -> QuadElem:
    """
    Parses the exact forms "a", "a+b*sqrt(d)", "b*sqrt(d)" and "sqrt(d)",
    with a and b written as integers or p/q.

    :param text: The string to parse.
    :param d: The expected radicand, or None to take it from the text.

    :type text: str
    :type d: int or None

    :return: The parsed value.
    :rtype: QuadElem
    """
    cleaned = text.replace(" ", "")
    match = _QUAD_PATTERN.match(cleaned)

    if not cleaned or match is None:
        raise PingPongUnits.exceptions.MalformedNumber(text)

    a_text, sign, b_text, d_text = match.group("a", "sign", "b", "d")

    if a_text is None and d_text is None:
        raise PingPongUnits.exceptions.MalformedNumber(text)
    if a_text is not None and d_text is not None and sign is None:
        raise PingPongUnits.exceptions.MalformedNumber(text)

    try:
        a = Rational(a_text) if a_text else Rational(0)
        b = Rational(0)
        if d_text is not None:
            b = Rational(b_text) if b_text else Rational(1)
            if sign == "-":
                b = -b
    except ZeroDivisionError as error:
        raise PingPongUnits.exceptions.MalformedNumber(text) from error

    if d_text is None:
        return QuadElem(a, 0, 1 if d is None else d)

    parsed_d = int(d_text)
    if d is not None and parsed_d != PingPongUnits.exactnum.as_d(d):
        raise PingPongUnits.exceptions.MismatchedField(
            PingPongUnits.exactnum.as_d(d), parsed_d
        )

    return QuadElem(a, b, parsed_d)


def infer_d(text: str, d=None) -> int:
    """
    The radicand of a textual value: d itself if given, else the first
    sqrt(n) in the text, else 1.
    """
    if d is not None:
        return PingPongUnits.exactnum.as_d(d)

    match = _RADICAND_PATTERN.search(text)
    return int(match.group(1)) if match else 1


def embed(c: PingPongUnits.quaternion.ImagQuad) -> ComplexQuad:
    """
    Rewrites r + s*sqrt(-d) as the complex number r + (s*sqrt(d))*I.
    """
    return ComplexQuad(QuadElem(c.r, 0, c.d), QuadElem(0, c.s, c.d))


class ComplexMatrix2:
    """
    A 2x2 matrix of ComplexQuad entries sharing d.
    """

    __slots__ = ("_entries",)

    def __init__(self, e11: ComplexQuad, e12: ComplexQuad, e21: ComplexQuad, e22: ComplexQuad):
        self._entries = (e11, e12, e21, e22)

    @property
    def entries(self) -> typing.Tuple[ComplexQuad, ComplexQuad, ComplexQuad, ComplexQuad]:
        return self._entries

    @property
    def d(self) -> int:
        return self._entries[0].d

    def determinant(self) -> ComplexQuad:
        e11, e12, e21, e22 = self._entries
        return e11 * e22 - e12 * e21

    def __mul__(self, other: "ComplexMatrix2") -> "ComplexMatrix2":
        if not isinstance(other, ComplexMatrix2):
            return NotImplemented
        a11, a12, a21, a22 = self._entries
        b11, b12, b21, b22 = other.entries
        return ComplexMatrix2(
            a11 * b11 + a12 * b21,
            a11 * b12 + a12 * b22,
            a21 * b11 + a22 * b21,
            a21 * b12 + a22 * b22,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, ComplexMatrix2):
            return NotImplemented
        return self._entries == other.entries

    __hash__ = None

    def __str__(self) -> str:
        e11, e12, e21, e22 = self._entries
        return f"[[{ e11 }, { e12 }], [{ e21 }, { e22 }]]"

    def __repr__(self):
        return "<{}.{} object at {} entries={}>".format(
            __class__.__module__,
            __class__.__name__,
            hex(id(self)),
            self,
        )


def psi(q: PingPongUnits.quaternion.QuatElem) -> ComplexMatrix2:
    """
    The matrix ((c1 + ci*I, cj + ck*I), (-(cj - ck*I), c1 - ci*I)).

    The second row applies the automorphism that flips I in the coefficient
    form; the coefficients themselves are embedded unchanged.

    :param q: The quaternion to embed.

    :type q: QuatElem

    :return: Its matrix.
    :rtype: ComplexMatrix2
    """
    c1, ci, cj, ck = (embed(c) for c in q.coefficients)
    unit = ComplexQuad.imaginary_unit(q.d)

    return ComplexMatrix2(
        c1 + ci * unit,
        cj + ck * unit,
        -(cj - ck * unit),
        c1 - ci * unit,
    )


@functools.total_ordering
class ExtPoint:
    """
    A point of R u {oo}. Sorting places oo after every real number; the
    circle is read cyclically from that linear order.
    """

    __slots__ = ("_value", "_d")

    def __init__(self, value: typing.Optional[QuadElem], d=None):
        if value is None:
            self._d = PingPongUnits.exactnum.as_d(1 if d is None else d)
            self._value = None
            return

        if not isinstance(value, QuadElem):
            value = QuadElem(value, 0, 1 if d is None else d)

        self._value = value
        self._d = value.d

    @classmethod
    def infinity(cls, d=1) -> "ExtPoint":
        return cls(None, d)

    @classmethod
    def parse(cls, text: str, d=None) -> "ExtPoint":
        if text.strip() in _INFINITY_TOKENS:
            return cls.infinity(1 if d is None else d)
        return cls(parse_quad(text, d))

    @property
    def value(self) -> typing.Optional[QuadElem]:
        return self._value

    @property
    def d(self) -> int:
        return self._d

    def is_infinite(self) -> bool:
        return self._value is None

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExtPoint):
            return NotImplemented
        if self._value is None or other.value is None:
            return self._value is None and other.value is None
        return self._value == other.value

    def __lt__(self, other: "ExtPoint") -> bool:
        if self._value is None:
            return False
        if other.value is None:
            return True
        return self._value < other.value

    def __hash__(self) -> int:
        return hash(self._value)

    def __str__(self) -> str:
        return "inf" if self._value is None else str(self._value)

    def __repr__(self):
        return "<{}.{} object at {} value={}>".format(
            __class__.__module__,
            __class__.__name__,
            hex(id(self)),
            self,
        )


def midpoint(left: ExtPoint, right: ExtPoint) -> ExtPoint:
    """
    A point strictly inside the counterclockwise gap from left to right.
    """
    d = left.d
    if left == right:
        if left.is_infinite():
            return ExtPoint(QuadElem.rational(0, d))
        return ExtPoint.infinity(d)
    if right.is_infinite():
        return ExtPoint(left.value + 1)
    if left.is_infinite():
        return ExtPoint(right.value - 1)
    if left < right:
        return ExtPoint((left.value + right.value) / 2)
    return ExtPoint.infinity(d)


class MobiusMap:
    """
    z -> (m11*z + m12) / (m21*z + m22) with real quadratic entries.

    Matrices are kept unnormalised; two maps are equal when the matrices
    are proportional.
    """

    __slots__ = ("_entries",)

    def __init__(self, m11, m12, m21, m22, d=None):
        if d is None:
            d = next(
                (m.d for m in (m11, m12, m21, m22) if isinstance(m, QuadElem)),
                1,
            )

        entries = []
        for m in (m11, m12, m21, m22):
            if not isinstance(m, QuadElem):
                m = QuadElem.rational(m, d)
            elif m.d != PingPongUnits.exactnum.as_d(d):
                raise PingPongUnits.exceptions.MismatchedField(d, m.d)
            entries.append(m)

        self._entries = tuple(entries)

        if not self.determinant():
            raise PingPongUnits.exceptions.PreconditionViolated(
                f"Singular Mobius matrix { self }"
            )

    @classmethod
    def identity(cls, d=1) -> "MobiusMap":
        return cls(1, 0, 0, 1, d)

    @property
    def entries(self) -> typing.Tuple[QuadElem, QuadElem, QuadElem, QuadElem]:
        return self._entries

    @property
    def m11(self) -> QuadElem:
        return self._entries[0]

    @property
    def m12(self) -> QuadElem:
        return self._entries[1]

    @property
    def m21(self) -> QuadElem:
        return self._entries[2]

    @property
    def m22(self) -> QuadElem:
        return self._entries[3]

    @property
    def d(self) -> int:
        return self._entries[0].d

    def determinant(self) -> QuadElem:
        m11, m12, m21, m22 = self._entries
        return m11 * m22 - m12 * m21

    def orientation(self) -> int:
        """
        +1 if the map preserves the cyclic order of the circle, -1 if it
        reverses it.
        """
        return self.determinant().sign()

    def __call__(self, z: ExtPoint) -> ExtPoint:
        return mobius_apply(self, z)

    def compose(self, other: "MobiusMap") -> "MobiusMap":
        """
        self after other, i.e. the matrix product self * other.
        """
        a11, a12, a21, a22 = self._entries
        b11, b12, b21, b22 = other.entries
        return MobiusMap(
            a11 * b11 + a12 * b21,
            a11 * b12 + a12 * b22,
            a21 * b11 + a22 * b21,
            a21 * b12 + a22 * b22,
        )

    def inverse(self) -> "MobiusMap":
        m11, m12, m21, m22 = self._entries
        return MobiusMap(m22, -m12, -m21, m11)

    def power(self, n: int) -> "MobiusMap":
        assert isinstance(n, int)

        if n < 0:
            return self.inverse().power(-n)

        result = MobiusMap.identity(self.d)
        base = self
        while n:
            if n & 1:
                result = result.compose(base)
            base = base.compose(base)
            n >>= 1

        return result

    def pole(self) -> ExtPoint:
        m11, m12, m21, m22 = self._entries
        if not m21:
            return ExtPoint.infinity(self.d)
        return ExtPoint(-m22 / m21)

    def zero(self) -> ExtPoint:
        m11, m12, m21, m22 = self._entries
        if not m11:
            return ExtPoint.infinity(self.d)
        return ExtPoint(-m12 / m11)

    def projectively_equal(self, other: "MobiusMap") -> bool:
        mine = self._entries
        theirs = other.entries
        return all(
            mine[p] * theirs[q] == mine[q] * theirs[p]
            for p in range(4)
            for q in range(p + 1, 4)
        )

    def is_identity(self) -> bool:
        return self.projectively_equal(MobiusMap.identity(self.d))

    def has_finite_order(self, bound: int = PingPongUnits.quaternion.TORSION_BOUND) -> bool:
        power = self
        for _ in range(bound):
            if power.is_identity():
                return True
            power = power.compose(self)
        return False

    def image(self, arcs: typing.Union["Arc", "ArcSet"]) -> typing.Union["Arc", "ArcSet"]:
        return arcs.image(self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MobiusMap):
            return NotImplemented
        return self.projectively_equal(other)

    __hash__ = None

    def __str__(self) -> str:
        m11, m12, m21, m22 = self._entries
        return f"({ m11 }*z + { m12})/({ m21 }*z + { m22 })"

    def __repr__(self):
        return "<{}.{} object at {} map={}>".format(
            __class__.__module__,
            __class__.__name__,
            hex(id(self)),
            self,
        )


def to_real_mobius(matrix: ComplexMatrix2) -> MobiusMap:
    """
    The real Mobius map of a matrix whose entries are all real, or all
    purely imaginary (then the common factor I is dropped).

    :raises NotRealProjective: on mixed entries.
    """
    entries = matrix.entries

    if all(entry.is_real() for entry in entries):
        return MobiusMap(*(entry.re for entry in entries))

    if all(entry.is_imaginary() for entry in entries):
        return MobiusMap(*(entry.im for entry in entries))

    raise PingPongUnits.exceptions.NotRealProjective(matrix)


def mobius_from_unit(q: PingPongUnits.quaternion.QuatElem) -> MobiusMap:
    return to_real_mobius(psi(q))


def homothety(rho: QuadElem) -> MobiusMap:
    """
    z -> rho*z.
    """
    return MobiusMap(rho, 0, 0, 1, rho.d)


def mobius_apply(m: MobiusMap, z: ExtPoint) -> ExtPoint:
    """
    Exact evaluation on R u {oo}; the pole goes to oo and oo goes to m11/m21.
    """
    m11, m12, m21, m22 = m.entries

    if z.is_infinite():
        if not m21:
            return ExtPoint.infinity(m.d)
        return ExtPoint(m11 / m21)

    denominator = m21 * z.value + m22
    if not denominator:
        return ExtPoint.infinity(m.d)

    return ExtPoint((m11 * z.value + m12) / denominator)


def pole(m: MobiusMap) -> ExtPoint:
    return m.pole()


def zero(m: MobiusMap) -> ExtPoint:
    return m.zero()


def compose(m: MobiusMap, n: MobiusMap) -> MobiusMap:
    return m.compose(n)


def inverse(m: MobiusMap) -> MobiusMap:
    return m.inverse()


class ArcKind(enum.Enum):
    PROPER = "proper"
    POINT = "point"
    PUNCTURED = "punctured"
    FULL = "full"
    EMPTY = "empty"


class Arc:
    """
    A connected subset of the circle R u {oo}.

    A proper arc runs counterclockwise, i.e. in the increasing direction,
    from start to end and passes through oo when start > end. Each endpoint
    may be included or excluded. Single points, the circle minus a point,
    the full circle and the empty set are separate kinds.
    """

    __slots__ = ("_kind", "_start", "_end", "_start_closed", "_end_closed", "_d")

    def __init__(
        self,
        start: ExtPoint,
        end: ExtPoint,
        start_closed: bool = True,
        end_closed: bool = True,
    ):
        if start == end:
            raise PingPongUnits.exceptions.DegenerateArc(f"{ start } to { end }")

        self._kind = ArcKind.PROPER
        self._start = start
        self._end = end
        self._start_closed = start_closed
        self._end_closed = end_closed
        self._d = start.d if not start.is_infinite() else end.d

    @classmethod
    def _special(cls, kind: ArcKind, point: typing.Optional[ExtPoint], d) -> "Arc":
        arc = cls.__new__(cls)
        arc._kind = kind
        arc._start = point
        arc._end = point
        arc._start_closed = kind is ArcKind.POINT
        arc._end_closed = kind is ArcKind.POINT
        arc._d = PingPongUnits.exactnum.as_d(d)
        return arc

    @classmethod
    def closed(cls, start: ExtPoint, end: ExtPoint) -> "Arc":
        return cls(start, end, True, True)

    @classmethod
    def open(cls, start: ExtPoint, end: ExtPoint) -> "Arc":
        return cls(start, end, False, False)

    @classmethod
    def point(cls, p: ExtPoint) -> "Arc":
        return cls._special(ArcKind.POINT, p, p.d)

    @classmethod
    def punctured(cls, p: ExtPoint) -> "Arc":
        return cls._special(ArcKind.PUNCTURED, p, p.d)

    @classmethod
    def full(cls, d=1) -> "Arc":
        return cls._special(ArcKind.FULL, None, d)

    @classmethod
    def empty(cls, d=1) -> "Arc":
        return cls._special(ArcKind.EMPTY, None, d)

    @classmethod
    def parse(cls, text: str, d=None) -> "Arc":
        """
        Reads "[a, b]", "]a, b[", "[a, b[", "]a, b]", "{p}", "omega",
        "omega\\{p}" or "{}". Endpoints use the exact number format, or
        "inf" for the point at infinity.
        """
        text = text.strip()
        d = infer_d(text, d)

        if text == "{}":
            return cls.empty(d)
        if text == "omega":
            return cls.full(d)
        if text.startswith("omega\\{") and text.endswith("}"):
            return cls.punctured(ExtPoint.parse(text[len("omega\\{") : -1], d))
        if text.startswith("{") and text.endswith("}"):
            return cls.point(ExtPoint.parse(text[1:-1], d))

        if len(text) < 2 or text[0] not in "[]" or text[-1] not in "[]":
            raise PingPongUnits.exceptions.MalformedNumber(text)

        parts = text[1:-1].split(",")
        if len(parts) != 2:
            raise PingPongUnits.exceptions.MalformedNumber(text)

        start = ExtPoint.parse(parts[0], d)
        end = ExtPoint.parse(parts[1], d)

        return cls(start, end, text[0] == "[", text[-1] == "]")

    @property
    def kind(self) -> ArcKind:
        return self._kind

    @property
    def start(self) -> typing.Optional[ExtPoint]:
        return self._start

    @property
    def end(self) -> typing.Optional[ExtPoint]:
        return self._end

    @property
    def start_closed(self) -> bool:
        return self._start_closed

    @property
    def end_closed(self) -> bool:
        return self._end_closed

    @property
    def d(self) -> int:
        return self._d

    def endpoints(self) -> typing.List[ExtPoint]:
        if self._kind is ArcKind.PROPER:
            return [self._start, self._end]
        if self._kind in (ArcKind.POINT, ArcKind.PUNCTURED):
            return [self._start]
        return []

    def contains(self, z: ExtPoint) -> bool:
        kind = self._kind

        if kind is ArcKind.EMPTY:
            return False
        if kind is ArcKind.FULL:
            return True
        if kind is ArcKind.POINT:
            return z == self._start
        if kind is ArcKind.PUNCTURED:
            return z != self._start

        if z == self._start:
            return self._start_closed
        if z == self._end:
            return self._end_closed
        if self._start < self._end:
            return self._start < z < self._end
        return z > self._start or z < self._end

    def __contains__(self, z: ExtPoint) -> bool:
        return self.contains(z)

    def complement(self) -> "Arc":
        kind = self._kind

        if kind is ArcKind.EMPTY:
            return Arc.full(self._d)
        if kind is ArcKind.FULL:
            return Arc.empty(self._d)
        if kind is ArcKind.POINT:
            return Arc.punctured(self._start)
        if kind is ArcKind.PUNCTURED:
            return Arc.point(self._start)

        return Arc(self._end, self._start, not self._end_closed, not self._start_closed)

    def image(self, m: MobiusMap) -> "Arc":
        """
        The image under a Mobius map. Orientation-reversing maps swap the
        roles of the endpoints.
        """
        kind = self._kind

        if kind in (ArcKind.EMPTY, ArcKind.FULL):
            return self
        if kind is ArcKind.POINT:
            return Arc.point(m(self._start))
        if kind is ArcKind.PUNCTURED:
            return Arc.punctured(m(self._start))

        start, end = m(self._start), m(self._end)

        if m.orientation() > 0:
            return Arc(start, end, self._start_closed, self._end_closed)

        return Arc(end, start, self._end_closed, self._start_closed)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Arc):
            return NotImplemented
        return (
            self._kind,
            self._start,
            self._end,
            self._start_closed,
            self._end_closed,
        ) == (
            other.kind,
            other.start,
            other.end,
            other.start_closed,
            other.end_closed,
        )

    def __hash__(self) -> int:
        return hash((self._kind, self._start, self._end, self._start_closed, self._end_closed))

    def __str__(self) -> str:
        kind = self._kind

        if kind is ArcKind.EMPTY:
            return "{}"
        if kind is ArcKind.FULL:
            return "omega"
        if kind is ArcKind.POINT:
            return f"{{{ self._start }}}"
        if kind is ArcKind.PUNCTURED:
            return f"omega\\{{{ self._start }}}"

        return "{}{}, {}{}".format(
            "[" if self._start_closed else "]",
            self._start,
            self._end,
            "]" if self._end_closed else "[",
        )

    def __repr__(self):
        return "<{}.{} object at {} arc={}>".format(
            __class__.__module__,
            __class__.__name__,
            hex(id(self)),
            self,
        )


def arc_image(m: MobiusMap, arc: Arc) -> Arc:
    return arc.image(m)


class Piece:
    """
    One cell of the refinement of the circle by a set of breakpoints: either
    a breakpoint itself or the open gap between consecutive breakpoints.
    """

    __slots__ = ("is_point", "left", "right", "sample")

    def __init__(self, is_point: bool, left: typing.Optional[ExtPoint], right: typing.Optional[ExtPoint], sample: ExtPoint):
        self.is_point = is_point
        self.left = left
        self.right = right
        self.sample = sample

    def __str__(self) -> str:
        if self.is_point:
            return f"{{{ self.left }}}"
        if self.left is None:
            return "omega"
        if self.left == self.right:
            return f"omega\\{{{ self.left }}}"
        return f"]{ self.left }, { self.right }["

    def __repr__(self):
        return "<{}.{} object at {} piece={} sample={}>".format(
            __class__.__module__,
            __class__.__name__,
            hex(id(self)),
            self,
            self.sample,
        )


def _refine(breakpoints: typing.List[ExtPoint], d: int) -> typing.List[Piece]:
    if not breakpoints:
        return [Piece(False, None, None, ExtPoint(QuadElem.rational(0, d)))]

    pieces = []
    for index, point in enumerate(breakpoints):
        following = breakpoints[(index + 1) % len(breakpoints)]
        pieces.append(Piece(True, point, point, point))
        pieces.append(Piece(False, point, following, midpoint(point, following)))

    return pieces


def _assemble(pieces: typing.List[Piece], flags: typing.List[bool], d: int) -> typing.List[Arc]:
    if all(flags):
        return [Arc.full(d)]
    if not any(flags):
        return []

    count = len(pieces)
    first = next(i for i in range(count) if flags[i] and not flags[i - 1])

    arcs = []
    run = []
    for offset in range(count + 1):
        index = (first + offset) % count
        if offset < count and flags[index]:
            run.append(pieces[index])
            continue

        if run:
            arcs.append(_run_to_arc(run))
            run = []

    return arcs


def _run_to_arc(run: typing.List[Piece]) -> Arc:
    head, tail = run[0], run[-1]

    if len(run) == 1 and head.is_point:
        return Arc.point(head.left)

    start, start_closed = (head.left, True) if head.is_point else (head.left, False)
    end, end_closed = (tail.right, True) if tail.is_point else (tail.right, False)

    if start == end:
        return Arc.punctured(start)

    return Arc(start, end, start_closed, end_closed)


class ArcSet:
    """
    A finite union of arcs, with exact set algebra.

    Every operation refines the circle by the endpoints involved and
    decides each piece by testing one sample point, which is exact since
    membership is constant on every piece.
    """

    __slots__ = ("_arcs", "_d")

    def __init__(self, arcs: typing.Iterable[Arc] = (), d=None):
        arcs = tuple(arc for arc in arcs if arc.kind is not ArcKind.EMPTY)

        if d is None:
            d = arcs[0].d if arcs else 1

        self._d = PingPongUnits.exactnum.as_d(d)
        self._arcs = arcs

    @classmethod
    def parse(cls, text: str, d=None) -> "ArcSet":
        text = text.strip()
        d = infer_d(text, d)
        if text in ("{}", ""):
            return cls((), d)
        return cls((Arc.parse(part, d) for part in text.split(" U ")), d)

    @property
    def arcs(self) -> typing.Tuple[Arc, ...]:
        return self._arcs

    @property
    def d(self) -> int:
        return self._d

    def breakpoints(self) -> typing.Set[ExtPoint]:
        return {point for arc in self._arcs for point in arc.endpoints()}

    def contains(self, z: ExtPoint) -> bool:
        return any(arc.contains(z) for arc in self._arcs)

    def __contains__(self, z: ExtPoint) -> bool:
        return self.contains(z)

    def pieces(self, *others: "ArcSet") -> typing.List[Piece]:
        points = set(self.breakpoints())
        for other in others:
            points |= other.breakpoints()
        return _refine(sorted(points), self._d)

    def _combine(self, other: "ArcSet", rule) -> "ArcSet":
        pieces = self.pieces(other)
        flags = [rule(self.contains(p.sample), other.contains(p.sample)) for p in pieces]
        return ArcSet(_assemble(pieces, flags, self._d), self._d)

    def union(self, other: "ArcSet") -> "ArcSet":
        return self._combine(other, lambda mine, theirs: mine or theirs)

    def intersection(self, other: "ArcSet") -> "ArcSet":
        return self._combine(other, lambda mine, theirs: mine and theirs)

    def difference(self, other: "ArcSet") -> "ArcSet":
        return self._combine(other, lambda mine, theirs: mine and not theirs)

    def complement(self) -> "ArcSet":
        pieces = self.pieces()
        flags = [not self.contains(p.sample) for p in pieces]
        return ArcSet(_assemble(pieces, flags, self._d), self._d)

    def normalized(self) -> "ArcSet":
        """
        The same set written as disjoint maximal arcs.
        """
        pieces = self.pieces()
        flags = [self.contains(p.sample) for p in pieces]
        return ArcSet(_assemble(pieces, flags, self._d), self._d)

    def violations(self, other: "ArcSet") -> typing.List[Piece]:
        """
        The pieces of self that lie outside other, in circle order.
        """
        return [
            p
            for p in self.pieces(other)
            if self.contains(p.sample) and not other.contains(p.sample)
        ]

    def issubset(self, other: "ArcSet") -> bool:
        return not self.violations(other)

    def isdisjoint(self, other: "ArcSet") -> bool:
        return not any(
            self.contains(p.sample) and other.contains(p.sample)
            for p in self.pieces(other)
        )

    def is_empty(self) -> bool:
        return not any(self.contains(p.sample) for p in self.pieces())

    def is_full(self) -> bool:
        return all(self.contains(p.sample) for p in self.pieces())

    def image(self, m: MobiusMap) -> "ArcSet":
        return ArcSet((arc.image(m) for arc in self._arcs), self._d)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ArcSet):
            return NotImplemented
        return self.issubset(other) and other.issubset(self)

    __hash__ = None

    def __str__(self) -> str:
        arcs = self.normalized().arcs
        if not arcs:
            return "{}"
        return " U ".join(str(arc) for arc in arcs)

    def __repr__(self):
        return "<{}.{} object at {} arcs={}>".format(
            __class__.__module__,
            __class__.__name__,
            hex(id(self)),
            self,
        )
