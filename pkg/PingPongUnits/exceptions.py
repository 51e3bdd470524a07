"""
All internal exceptions within the PingPongUnits package.

Everything deriving from InvalidInput is a caller mistake and maps to exit
code 2 on the command line. A failed certificate is never an exception.
"""


import schema


class PingPongUnitsError(Exception):
    """
    Root of every exception raised by the package.
    """


class InvalidInput(PingPongUnitsError):
    """
    Thrown when an argument, a configuration value or a file does not satisfy
    the precondition of the operation it was handed to.
    """


class QuadDivisionByZero(PingPongUnitsError, ZeroDivisionError):
    """
    Thrown when an exact quadratic-field element is divided by zero.
    """

    def __init__(self, dividend):
        super().__init__(f"Division of { dividend } by zero")


class NotSquareFree(InvalidInput):
    """
    Thrown when an integer expected to be square-free has a square divisor.
    """

    def __init__(self, n: int):
        super().__init__(f"Not a square-free positive integer: { n }")
        self.n = n


class InvalidPellDiscriminant(InvalidInput):
    """
    Thrown when Pell's equation is requested for a d without a unit > 1.
    """

    def __init__(self, d: int):
        super().__init__(f"Pell's equation has no fundamental unit for d={ d }")
        self.d = d


class MismatchedField(InvalidInput):
    """
    Thrown when two values living over different d are combined.
    """

    def __init__(self, left: int, right: int):
        super().__init__(f"Cannot combine values over d={ left } and d={ right }")


class SlotCollision(InvalidInput):
    """
    Thrown when basis slots that must be pairwise distinct are not.
    """

    def __init__(self, slots):
        super().__init__(f"Basis slots must be distinct: { slots }")


class NormMinusOne(InvalidInput):
    """
    Thrown when a construction needs a fundamental unit of norm +1.
    """

    def __init__(self, d: int):
        super().__init__(
            f"The fundamental unit for d={ d } has norm -1; this construction "
            "needs norm +1"
        )
        self.d = d


class NonIntegral(InvalidInput):
    """
    Thrown when a quaternion coefficient falls outside the ring of integers
    of Q(sqrt(-d)).
    """

    def __init__(self, coefficient, d: int):
        super().__init__(
            f"Coefficient { coefficient } is not in the ring of integers of "
            f"Q(sqrt(-{ d }))"
        )


class NonUnit(InvalidInput):
    """
    Thrown when a unit is required but the reduced norm is not +1 or -1.
    """

    def __init__(self, norm):
        super().__init__(f"Not a unit, reduced norm is { norm }")


class NotRealProjective(InvalidInput):
    """
    Thrown when a 2x2 complex matrix mixes real and imaginary entries and
    therefore does not act on the real projective line.
    """

    def __init__(self, matrix):
        super().__init__(f"Matrix does not act on R u {{oo}}: { matrix }")


class PreconditionViolated(InvalidInput):
    """
    Thrown when the documented precondition of an operation does not hold.
    """


class ArityMismatch(InvalidInput):
    """
    Thrown when a ping-pong table and its maps disagree on the rank.
    """

    def __init__(self, maps: int, slots: int):
        super().__init__(f"{ maps } maps were given for a table with { slots } slots")


class DegenerateArc(InvalidInput):
    """
    Thrown when an arc is empty or the whole circle where a proper arc is
    required.
    """

    def __init__(self, arc):
        super().__init__(f"Expected a proper nonempty arc, got { arc }")


class MalformedNumber(InvalidInput):
    """
    Thrown when an exact number or interval string cannot be parsed.
    """

    def __init__(self, text: str):
        super().__init__(f"Cannot parse exact value: { text!r}")


class MalformedWord(InvalidInput):
    """
    Thrown when a word over g1, g2 and their inverses cannot be parsed.
    """

    def __init__(self, text: str, token: str):
        super().__init__(f"Cannot parse word { text!r}: bad letter { token!r}")


class InvalidConfigFile(InvalidInput):
    """
    Thrown when a search configuration file's structure or contents are not
    valid.
    """

    def __init__(self, path: str, schema_error: schema.SchemaError):
        super().__init__(f"Invalid search configuration file: { path }, { schema_error }")


class InvalidTableFile(InvalidInput):
    """
    Thrown when a user-supplied ping-pong table file is not valid.
    """

    def __init__(self, path: str, reason):
        super().__init__(f"Invalid ping-pong table file: { path }, { reason }")


class InvalidCustomRecipe(InvalidInput):
    """
    Thrown when a recipe definition names an unknown type.
    """

    def __init__(self, recipe_type: str):
        super().__init__(f"Invalid recipe type: { recipe_type }")


class InvalidDocument(InvalidInput):
    """
    Thrown when a serialized certificate document does not match its schema.
    """

    def __init__(self, reason):
        super().__init__(f"Invalid certificate document: { reason }")
