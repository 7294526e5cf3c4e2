"""Exception hierarchy shared by all iterseq modules."""


class IterSeqError(Exception):
    pass


class ParseError(IterSeqError, ValueError):
    """Input text is not a nonnegative base-10 integer."""


class ValueTooLarge(IterSeqError, ValueError):
    """A value does not fit the requested fixed digit length."""


class RankOutOfRange(IterSeqError, IndexError):
    """Asked for the k-th arrangement of a multiset that has fewer than k."""


class DuplicateElements(IterSeqError, ValueError):
    pass


class PreconditionViolated(IterSeqError, ValueError):
    pass


class UnsupportedFormat(IterSeqError, ValueError):
    pass


class CatalogInconsistent(IterSeqError):
    """A catalog cycle is not closed under its map."""


class ResourceCapExceeded(IterSeqError):
    """Base class for configured work limits being hit."""


class StateSpaceTooLarge(ResourceCapExceeded):
    pass


class StepCapExceeded(ResourceCapExceeded):
    pass
