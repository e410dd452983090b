"""Exception hierarchy shared by all modules.

``DataError`` covers malformed inputs and contract violations (CLI exit
code 2); ``NumericalError`` covers failures of the numeric routines (exit
code 3).
"""


class PeetError(Exception):
    pass


class DataError(PeetError):
    pass


class NumericalError(PeetError):
    pass


# corpus_io
class LineCountMismatch(DataError):
    pass


class EmptyInput(DataError):
    pass


class MalformedLine(DataError):
    pass


class SpanOutOfRange(DataError):
    pass


class BadRatio(DataError):
    pass


class AnnotationMismatch(DataError):
    pass


# features / model
class TooFewRows(DataError):
    pass


class NameMismatch(DataError):
    pass


class DimensionMismatch(NumericalError):
    pass


class SingularSystem(NumericalError):
    pass


# gec_metrics
class NoReferences(DataError):
    pass


class TooFewSets(DataError):
    pass


class EmptyReference(DataError):
    pass


class ConstantInput(NumericalError):
    pass


# ranking
class LengthMismatch(DataError):
    pass


class NameSetMismatch(DataError):
    pass


# service
class TooFewEditors(DataError):
    pass


class UnknownSession(DataError):
    pass


class OutOfOrder(DataError):
    pass


class SessionComplete(DataError):
    pass


class NegativeTime(DataError):
    pass


class IncompleteSession(DataError):
    pass
