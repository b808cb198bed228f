"""Exception hierarchy shared by every module."""


class DyckError(ValueError):
    """Base class for invalid Dyck-word input."""


class NonBinaryAlphabet(DyckError):
    def __init__(self, symbol: str, offset: int):
        self.symbol = symbol
        self.offset = offset
        super().__init__(f"unknown step symbol {symbol!r} at offset {offset}")


class NotBalanced(DyckError):
    def __init__(self, ups: int, downs: int):
        self.ups = ups
        self.downs = downs
        super().__init__(f"unbalanced word: {ups} up steps vs {downs} down steps")


class BelowDiagonal(DyckError):
    def __init__(self, offset: int):
        self.offset = offset
        super().__init__(f"path goes below the diagonal at offset {offset}")


class SemilengthOutOfRange(ValueError):
    def __init__(self, n, lo: int, hi: int):
        self.n = n
        self.lo = lo
        self.hi = hi
        super().__init__(f"semilength {n} outside supported range {lo}..{hi}")


class InternalInvariantViolation(RuntimeError):
    """A map produced output that breaks a structural invariant."""


class DuplicateAgent(InternalInvariantViolation):
    def __init__(self, position: int, step: int):
        self.position = position
        self.step = step
        super().__init__(f"agent position {position} inserted twice at iteration {step}")


class NonTermination(InternalInvariantViolation):
    def __init__(self, iterations: int):
        self.iterations = iterations
        super().__init__(f"scaffolding did not terminate within {iterations} iterations")


class NotInjective(InternalInvariantViolation):
    def __init__(self, first, second, image):
        self.pair = (first, second)
        self.image = image
        super().__init__(f"{first} and {second} both map to {image}")
