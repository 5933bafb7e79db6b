from typing import Optional


class MaxLossError(Exception):
    """
    Base class for every error raised by the maxloss package.
    """


class InvalidArgumentError(MaxLossError, ValueError):
    """
    Raised when an operation is called with arguments outside its contract
    (index out of range, K > N, delta outside (0, 1), d < T, ...).
    """


class InternalError(MaxLossError, RuntimeError):
    """
    Raised when a numerical routine ends up in a state its preconditions rule out.
    """


class BallConstraintError(InvalidArgumentError):
    """
    Raised when a Gamma routine is evaluated outside the ball it is defined on.
    """

    def __init__(self, distance: float, radius: float, message: Optional[str] = None):
        self.distance = distance
        self.radius = radius

        if message is None:
            message = f"Point lies {distance:.6g} from the ball center, radius is {radius:.6g}"

        super().__init__(message)

    def __str__(self):
        return f"BallConstraintError(distance={self.distance:.6g}, radius={self.radius:.6g}): {super().__str__()}"


class EmptyIntersectionError(InternalError):
    """
    Raised when the two balls handed to the alternating projection do not intersect.
    """

    def __init__(self, gap: float, message: Optional[str] = None):
        self.gap = gap

        if message is None:
            message = f"Balls do not intersect (gap {gap:.3g})"

        super().__init__(message)


class NonUnitaryError(InvalidArgumentError):
    """
    Raised when an adversary step is built from a matrix that is not unitary.
    """

    def __init__(self, deviation: float, message: Optional[str] = None):
        self.deviation = deviation

        if message is None:
            message = f"Step matrix is not unitary: ||U^H U - I|| = {deviation:.3g}"

        super().__init__(message)


class SimulationSizeError(InvalidArgumentError):
    """
    Raised when a search simulation would need more amplitudes than the configured cap.
    """

    def __init__(self, amplitudes: int, cap: int, message: Optional[str] = None):
        self.amplitudes = amplitudes
        self.cap = cap
        # complex128 amplitudes, two buffers alive during an update
        self.required_bytes = amplitudes * 16 * 2

        if message is None:
            message = (
                f"State vector needs {amplitudes} amplitudes (cap {cap}), "
                f"about {self.required_bytes / 2**20:.1f} MiB"
            )

        super().__init__(message)

    def __str__(self):
        return f"SimulationSizeError(amplitudes={self.amplitudes}, cap={self.cap}): {super().__str__()}"


class ConfigError(MaxLossError, ValueError):
    """
    Raised when an experiment configuration is malformed. Carries the offending key.
    """

    def __init__(self, key: str, message: Optional[str] = None):
        self.key = key

        if message is None:
            message = f"Invalid configuration key '{key}'"

        super().__init__(message)

    def __str__(self):
        return f"ConfigError(key={self.key}): {super().__str__()}"


class DomainWarning(UserWarning):
    """
    Emitted when an oracle is queried outside the family's domain ball.
    """


class ClippedScaleWarning(UserWarning):
    """
    Emitted when a dimension or key length is clipped below the size the lower-bound
    construction asks for.
    """
