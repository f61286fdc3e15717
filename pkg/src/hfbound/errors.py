"""Exception hierarchy shared by every hfbound module."""


class HfError(ValueError):
    """Base class for all hfbound errors."""


class EmptyWord(HfError):
    def __init__(self):
        super().__init__("a word must contain at least one symbol")


class RepeatAt(HfError):
    """Adjacent symbols ``i`` and ``i + 1`` are equal (0-based)."""

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"adjacent repeat at positions {index} and {index + 1}")


class OutOfRange(HfError):
    def __init__(self, index: int, symbol: int, q: int):
        self.index = index
        self.symbol = symbol
        super().__init__(f"symbol {symbol} at position {index} is outside 0..{q - 1}")


class LengthMismatch(HfError):
    pass


class BadEll(HfError):
    pass


class RadiusOutOfRange(HfError):
    pass


class BudgetExceeded(HfError):
    """An exhaustive enumeration would visit more words than allowed."""

    def __init__(self, needed: int, budget: int):
        self.needed = needed
        self.budget = budget
        super().__init__(
            f"enumeration of {needed} words exceeds budget {budget} "
            "(raise it with --budget or HFBOUND_BUDGET)"
        )


class UnsupportedParameters(HfError):
    pass


class UnsupportedRadius(HfError):
    pass


class BadParameters(HfError):
    pass


class EmptyCode(HfError):
    pass


class EmptyDistance(HfError):
    pass


class NonpositiveAverage(HfError):
    pass
