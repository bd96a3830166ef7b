"""Exception hierarchy shared by every module of the package."""


class ConvSpaceError(Exception):
    """Base class for all errors raised by convspace."""


class DuplicateLabel(ConvSpaceError):
    pass


class AntisymmetryViolation(ConvSpaceError):
    pass


class NotATopology(ConvSpaceError):
    """Raised when a family of subsets fails the topology axioms.

    ``pair`` holds the two offending opens (as label tuples) when the failure
    is a missing union or intersection.
    """

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class SizeCap(ConvSpaceError):
    pass


class HypothesisViolated(ConvSpaceError):
    pass


class NotDirected(ConvSpaceError):
    pass


class NotDetermined(ConvSpaceError):
    pass


class NotT0(ConvSpaceError):
    pass


class OrderInconsistent(ConvSpaceError):
    pass


class TemplateIllFormed(ConvSpaceError):
    pass


class BaseExtractionIncomplete(ConvSpaceError):
    pass


class LawViolation(ConvSpaceError):
    def __init__(self, report):
        super().__init__(f"{report.law}: {report.counterexample}")
        self.report = report


class ParseError(ConvSpaceError):
    def __init__(self, line, column, expected, text=""):
        super().__init__(f"line {line}, column {column}: expected {expected}"
                         + (f" (got {text!r})" if text else ""))
        self.line = line
        self.column = column
        self.expected = expected


class ResolveError(ConvSpaceError):
    def __init__(self, name, line=None):
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"unknown name {name!r}{where}")
        self.name = name
        self.line = line


class Unsupported(ConvSpaceError):
    pass
