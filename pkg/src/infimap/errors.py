"""Exception hierarchy shared across the package.

Everything user-facing derives from ``InfimapError`` so the CLI can
distinguish domain failures (exit code 1) from genuine usage errors
(exit code 2, handled by argparse).
"""


class InfimapError(Exception):
    """Base class for domain-level failures."""


class ParseError(InfimapError):
    """Syntax error in map/path/set text, with source position."""

    def __init__(self, message, line=1, col=1):
        super().__init__(f"syntax error at line {line}, col {col}: {message}")
        self.line = line
        self.col = col
        self.reason = message


class ArityError(InfimapError):
    """Dimension mismatch between operands (nvars, path length, ...)."""


class PoleOnPathError(InfimapError):
    """The denominator composes to the zero Laurent series along a path."""


class PreconditionError(InfimapError):
    """A named precondition of a construction is violated."""

    def __init__(self, name, message):
        super().__init__(f"precondition '{name}' violated: {message}")
        self.name = name
