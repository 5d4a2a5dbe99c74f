class QGroupsError(Exception):
    def __init__(self, value):
        self.value = value

    def __str__(self):
        return repr(self.value)


class EmptyFileError(QGroupsError):
    pass


class ParseError(QGroupsError):
    def __init__(self, value, line=1, col=1):
        super().__init__(value)
        self.line = line
        self.col = col

    def __str__(self):
        return "{} (line {}, col {})".format(repr(self.value), self.line, self.col)


class DimensionError(QGroupsError):
    pass


class RewriteError(QGroupsError):
    pass


class PresentationError(QGroupsError):
    pass


class AntipodeError(QGroupsError):
    pass


class CorepError(QGroupsError):
    pass


class InvariantViolation(QGroupsError):
    pass


class CutoffError(QGroupsError):
    def __init__(self, value, required=None):
        super().__init__(value)
        self.required = required


class RegimeError(QGroupsError):
    pass


class EvaluationError(QGroupsError):
    pass


class StarStructureError(QGroupsError):
    pass
