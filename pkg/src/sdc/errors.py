"""Exception types raised across the toolchain."""


class SdcError(Exception):
    """Base class for all toolchain errors."""


class UnknownStateError(SdcError):
    """A state name does not occur in the diagram."""


class UnknownMessageError(SdcError):
    """A message is not the name of any transition in the diagram."""


class DiagramSyntaxError(SdcError):
    """Malformed input text (JSON or DSL)."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)


class SchemaError(SdcError):
    """A JSON document does not match the diagram schema."""


class DiagramValidationError(SdcError):
    """A parsed diagram breaks one or more model invariants."""

    def __init__(self, report):
        self.report = report
        lines = "; ".join(str(v) for v in report.violations)
        super().__init__(f"invalid diagram: {lines}")


class CardinalityError(SdcError):
    """Requested edge count exceeds the n*(n-1) edge universe."""


class ConfigMismatchError(SdcError):
    """An observation has no matching simulated distribution."""


class EmptySampleError(SdcError):
    """A statistic was requested for an empty sample."""


class CodegenError(SdcError):
    """The diagram cannot be turned into source code."""
