class SieveException(Exception):
    pass


class InfeasibleInstance(SieveException):
    def __init__(self, requested: int, bound: int, what: str = "m*n"):
        super().__init__(
            f"{what}={requested} exceeds the feasibility bound {bound}"
        )
        self.requested = requested
        self.bound = bound


class DimensionError(SieveException):
    pass


class CodeRangeError(SieveException):
    pass


class OracleBoundError(SieveException):
    pass


class SinkError(SieveException):
    pass
