"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or out-of-contract input (bad matrix, violated precondition)."""


class CommutationError(InputError):
    """Two matrices that were required to commute do not.

    Carries the first offending entry position and both product values.
    """

    def __init__(self, i, j, left, right):
        super().__init__(
            f"matrices do not commute: entry ({i},{j}) is {left} in AB but {right} in BA"
        )
        self.entry = (i, j)
        self.left = left
        self.right = right


class SpecificationError(InputError):
    """A tile-gluing specification is not a valid endpoint-preserving bijection."""


class OracleScaleError(InputError):
    """The determinantal-divisor oracle refused an input too large to enumerate."""


class InternalCheckError(RuntimeError):
    """An internal consistency assertion failed; this always indicates a bug."""
