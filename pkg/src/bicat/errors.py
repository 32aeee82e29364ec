"""Exception hierarchy shared by every module."""


class BicatError(ValueError):
    pass


class NonInvolution(BicatError):
    pass


class UnknownLetter(BicatError):
    pass


class PartialMapping(BicatError):
    pass


class AlphabetMismatch(BicatError):
    def __init__(self, letter, message=None):
        self.letter = letter
        super().__init__(message or f"letter {letter!r} is not in the alphabet")


class KindMismatch(BicatError):
    pass


class EmptyWord(BicatError):
    pass


class EmptyBase(EmptyWord):
    pass


class EmptyWordInL(BicatError):
    pass


class NotConjugate(BicatError):
    pass


class EquationFails(BicatError):
    pass


class NoDecomposition(BicatError):
    """An equation holds but no decomposition of the claimed shape exists."""


class FormatError(BicatError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BoundTooLargeForBudget(BicatError):
    pass


class UnknownTheorem(BicatError):
    pass
