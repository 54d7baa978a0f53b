"""Exception types raised by torusrep.

Every structured failure gets its own class so callers (and the CLI exit-code
mapping) can distinguish bad input from a broken internal invariant.
"""


class TorusRepError(Exception):
    pass


class ParseError(TorusRepError):
    pass


# --- Cartan matrix validation -------------------------------------------

class NotSquare(TorusRepError):
    pass


class DiagonalNotTwo(TorusRepError):
    def __init__(self, i):
        super().__init__(f"diagonal entry at index {i} is not 2")
        self.index = i


class PositiveOffDiagonal(TorusRepError):
    def __init__(self, i, j):
        super().__init__(f"off-diagonal entry ({i},{j}) is positive")
        self.indices = (i, j)


class ZeroPatternAsymmetric(TorusRepError):
    def __init__(self, i, j):
        super().__init__(f"entry ({i},{j}) is zero but ({j},{i}) is not")
        self.indices = (i, j)


class Decomposable(TorusRepError):
    pass


# --- Laurent ring --------------------------------------------------------

class RankMismatch(TorusRepError):
    pass


class NotAUnit(TorusRepError):
    pass


# --- Solution matrices ---------------------------------------------------

class ZeroDiagonal(TorusRepError):
    def __init__(self, i):
        super().__init__(f"diagonal entry {i} of candidate matrix is zero")
        self.index = i


class BadNormalizedEntry(TorusRepError):
    def __init__(self, i, j, value):
        super().__init__(f"normalized entry ({i},{j}) = {value} not in {{0, -1}}")
        self.indices = (i, j)
        self.value = value


class SumMismatch(TorusRepError):
    def __init__(self, i, j, got, expected):
        super().__init__(
            f"normalized entries at ({i},{j}) sum to {got}, Cartan entry is {expected}"
        )
        self.indices = (i, j)


class ExclusionViolated(TorusRepError):
    def __init__(self, i, j, k):
        super().__init__(
            f"-1 entries at ({i},{j}) and involving index {k} share a row or column"
        )
        self.indices = (i, j, k)


class ZeroScale(TorusRepError):
    def __init__(self, j):
        super().__init__(f"scaling vector has zero at index {j}")
        self.index = j


# --- Representations -----------------------------------------------------

class UnsupportedType(TorusRepError):
    pass


class ZeroIndex(TorusRepError):
    def __init__(self, i):
        super().__init__(f"exponent parameter n_{i} must be nonzero")
        self.index = i


# --- Loop algebra checks -------------------------------------------------

class ClosureDiverged(TorusRepError):
    pass


class NormalizationImpossible(TorusRepError):
    pass


class NotProportional(TorusRepError):
    pass


# --- Oracle --------------------------------------------------------------

class TooLarge(TorusRepError):
    pass


class IdentityViolated(TorusRepError):
    def __init__(self, i, j):
        super().__init__(f"lowering-matrix identity fails at ({i},{j})")
        self.indices = (i, j)
