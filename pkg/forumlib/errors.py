"""Exceptions raised by the library."""


class ForumError(Exception):
    """Base class of all library errors."""
    pass


class FormulaSyntaxError(ForumError):
    """Raised when formula text does not conform to the grammar."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None and line > 0:
            message = '{0} (line {1}, column {2})'.format(message, line, column)
        super(FormulaSyntaxError, self).__init__(message)


class ArityError(FormulaSyntaxError):
    """Raised when a symbol is used with two different arities."""
    pass


class NotForumFragment(ForumError):
    """Raised when a formula uses a connective outside the Forum fragment."""

    def __init__(self, formula):
        self.formula = formula
        super(NotForumFragment, self).__init__(
            'formula is not in the Forum fragment: {0}'.format(formula))


class MultisetError(ForumError):
    """Raised when removing an element that is not in a multiset."""

    def __init__(self, missing):
        self.missing = missing
        super(MultisetError, self).__init__('element not in multiset: {0}'.format(missing))


class SequentFormatError(ForumError):
    """Raised when a sequent file cannot be read."""
    pass


class ConfigError(ForumError, ValueError):
    pass


class ProofFormatError(ForumError):
    """Raised when a proof record cannot be decoded."""
    pass


class InvalidProof(ForumError):
    """Raised when an operation requires a valid proof and gets an invalid one."""

    def __init__(self, result):
        self.result = result
        super(InvalidProof, self).__init__(str(result))


class NonTermination(ForumError):
    """Raised when cut elimination exceeds its step budget."""
    pass


class RankViolation(ForumError):
    """Raised when a cut elimination pass does not decrease the cut rank."""
    pass


class CutEliminationError(ForumError):
    """Raised when a proof has a shape no elimination case covers."""
    pass


class ExpansionMismatch(ForumError):
    """Raised when a macro rule does not expand into its declared premises."""
    pass
