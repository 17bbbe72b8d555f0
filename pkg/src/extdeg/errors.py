"""Exception hierarchy.

Input problems (bad files, shape mismatches, violated preconditions) derive
from :class:`InputError`; failed mathematical assertions derive from
:class:`MathAssertionError`.  The CLI maps the first family to exit code 1
and the second to exit code 2.
"""


class ExtDegError(Exception):
    code = "error"


class InputError(ExtDegError, ValueError):
    code = "input"


class StructureError(InputError):
    """Mismatched ring/shape, malformed monomials, violated preconditions."""

    code = "structure"


class ParseError(InputError):
    code = "parse"

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class InhomogeneousError(ParseError):
    code = "inhomogeneous"


class UnknownVariableError(ParseError):
    code = "unknown-variable"


class NotBorelTypeError(StructureError):
    code = "not-borel-type"

    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"U : x_{index}^inf != U : (x_1..x_{index})^inf")


class NotRegularError(StructureError):
    code = "not-regular"


class ContainmentError(StructureError):
    code = "containment"


class MathAssertionError(ExtDegError):
    code = "math"


class InfiniteLengthError(MathAssertionError):
    code = "infinite-length"


class GinDisagreementError(MathAssertionError):
    code = "gin-disagreement"

    def __init__(self, candidates):
        self.candidates = candidates
        super().__init__(
            "random trials produced different initial modules: "
            + " | ".join(str(c) for c in candidates)
        )


class MacaulayError(MathAssertionError):
    code = "macaulay"


class DegreeCapError(MathAssertionError):
    code = "degree-cap"


class TheoremViolation(MathAssertionError):
    code = "theorem-violation"
