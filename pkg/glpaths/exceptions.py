import warnings


class ModelError(Exception):
    pass


class GroupError(ModelError):
    pass


class PreconditionError(ModelError):
    pass


class InstanceParseError(ModelError):
    def __init__(self, line, column, message):
        self.line = line
        self.column = column
        self.message = message
        super(InstanceParseError, self).__init__(f"line {line}, column {column}: {message}")


class ModelWarning(Warning):
    pass


def precondition_warning(message):
    warnings.warn(message, ModelWarning, stacklevel=3)
