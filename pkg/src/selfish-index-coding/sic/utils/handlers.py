class IndexCodingError(Exception):
    pass


class InstanceValidationError(IndexCodingError):
    def __init__(self, msg: str, violations: list[str] = None):
        self.violations = violations if violations is not None else [msg]
        super().__init__(msg)


class ValuationParseError(InstanceValidationError):
    pass


class NotUnicastError(InstanceValidationError):
    pass


class DecodePreconditionError(IndexCodingError):
    pass


class SizeGuardError(IndexCodingError):
    def __init__(self, guard: str, limit: int, size: int, what: str):
        self.guard = guard
        self.limit = limit
        self.size = size
        super().__init__(f"Size guard '{guard}' exceeded: {what} {size} > {limit}")


class NegativeCostError(IndexCodingError):
    pass


class PaymentPreconditionError(IndexCodingError):
    pass


class ApproximateSolverError(IndexCodingError):
    pass


class MonotonicityViolationError(IndexCodingError):
    pass


class ExperimentConfigError(IndexCodingError):
    pass


def guard_error(guard: str, limit: int, size: int, what: str):
    raise SizeGuardError(guard=guard, limit=limit, size=size, what=what).with_traceback(None) from None


def check_guard(guard: str, size: int, what: str, limit: int = None) -> int:
    # pylint: disable=C0415
    from sic.config.main import config
    if limit is None:
        limit = config.get_int(guard)

    if size > limit:
        guard_error(guard=guard, limit=limit, size=size, what=what)

    return limit


def config_error(msg: str):
    raise ExperimentConfigError(msg).with_traceback(None) from None
