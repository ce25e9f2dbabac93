############################################################
# modnet: modularity tests for weighted signed networks    #
# MIT Licence                                              #
############################################################


class ModNetError(Exception):
    """
    Base class of all errors raised by the modnet library.
    """
    pass


class InvalidParameterError(ModNetError, ValueError):
    pass


class InvalidDimensionError(InvalidParameterError):
    pass


class LawMismatchError(InvalidParameterError):
    """
    A reference law was built for a different dimension than
    the matrix it is asked to judge.
    """
    pass


class DataError(ModNetError):
    pass


class FormatError(DataError):
    pass


class ParseError(DataError):

    def __init__(self, message, row=None, col=None):
        DataError.__init__(self, message)
        self.row = row
        self.col = col


class EmptyDataError(DataError):
    pass


class UndefinedCorrelationError(DataError):

    def __init__(self, message, column=None):
        DataError.__init__(self, message)
        self.column = column


class NumericalError(ModNetError):
    """
    Raised when a numerical routine fails. ``diagnostics`` holds
    whatever helps reproduce the failure (dimension, norms, ...).
    """

    def __init__(self, message, diagnostics=None):
        ModNetError.__init__(self, message)
        self.diagnostics = diagnostics or {}

    def __str__(self):
        if not self.diagnostics:
            return ModNetError.__str__(self)
        details = ", ".join("%s=%s" % (k, self.diagnostics[k]) for k in sorted(self.diagnostics))
        return "%s (%s)" % (ModNetError.__str__(self), details)


class LoudDict(dict):
    """
    A Dictionary with a callback for item changes.

    Used for the application defaults: every change of a value
    (and only real changes) is reported through the callback
    with the key as parameter.
    """

    def __init__(self, *args, **kwargs):
        dict.__init__(self, *args, **kwargs)
        self.callback = lambda x: None

    def __setitem__(self, key, value):
        if key in self and self.__getitem__(key) == value:
            return

        dict.__setitem__(self, key, value)
        self.callback(key)

    def update(self, *args, **kwargs):
        if len(args) > 1:
            raise TypeError("update expected at most 1 arguments, got %d" % len(args))
        other = dict(*args, **kwargs)
        for key in other:
            self[key] = other[key]

    def set_change_callback(self, callback):
        """
        Assigns a function as callback on item change. The callback
        will receive the key of the object that was changed.

        :param callback: Function to call on item change.
        :type callback: func
        :return: None
        """

        self.callback = callback

    def coerce(self, key, text):
        """
        Converts a text value (as typed on the command line) into
        the type of the current value under ``key``.

        :param key: Name of an existing entry.
        :param text: Text to convert.
        :return: Converted value.
        """

        words = {
            "none": None,
            "null": None,
            "false": False,
            "true": True
        }

        if not isinstance(text, str):
            return text

        lowered = text.strip().lower()
        if lowered in words:
            return words[lowered]

        current = self.get(key)

        if isinstance(current, bool):
            raise ValueError("Expected true or false for '%s', got '%s'." % (key, text))

        if isinstance(current, int):
            return int(text)

        if isinstance(current, float):
            return float(text)

        # Unknown or None: try numbers, keep text otherwise.
        for cast in (int, float):
            try:
                return cast(text)
            except ValueError:
                pass

        return text
