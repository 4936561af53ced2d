"""Exception hierarchy shared by every module of the package."""


class PrismSiltError(Exception):
    """Base class for all errors raised by prism_silt."""


# words
class WordError(PrismSiltError, ValueError):
    pass


class WrongAlphabet(WordError):
    pass


class AllSameLetter(WordError):
    pass


class TooShort(WordError):
    pass


class RankMismatch(PrismSiltError, ValueError):
    pass


class IsProjective(WordError):
    """tau of a projective module is zero."""


class IsShiftedProjective(WordError):
    """The word encodes a shifted projective, not a module."""


class NotInImage(PrismSiltError, ValueError):
    pass


# permutations
class NotAPermutation(PrismSiltError, ValueError):
    pass


class NotJoinIrreducible(PrismSiltError, ValueError):
    pass


class NotNested(PrismSiltError, ValueError):
    pass


# triangulations
class WrongCount(PrismSiltError, ValueError):
    pass


class CrossingPair(PrismSiltError, ValueError):
    def __init__(self, x, y):
        super().__init__(f"words {x} and {y} cross")
        self.x = x
        self.y = y


class WordNotInTriangulation(PrismSiltError, KeyError):
    pass


class WordNotInComplex(PrismSiltError, KeyError):
    pass


# geometry
class NotWordSimplex(PrismSiltError, ValueError):
    pass


class DegenerateSimplex(PrismSiltError, ValueError):
    pass


# algebra
class DegreeBoundTooSmall(PrismSiltError, RuntimeError):
    pass


class InhomogeneousRelations(PrismSiltError, ValueError):
    pass


class NotModuleWord(PrismSiltError, ValueError):
    pass


class VerificationFailed(PrismSiltError, AssertionError):
    def __init__(self, check, witness=None):
        super().__init__(f"check {check!r} failed: {witness!r}")
        self.check = check
        self.witness = witness


# cli
class ParseError(PrismSiltError, ValueError):
    pass


class BoundExceeded(PrismSiltError, ValueError):
    pass
