"""Exception hierarchy shared by every evaluator."""


class LegendreError(Exception):
    """Base class; the CLI maps any subclass to exit status 1."""


class PoleError(LegendreError):
    pass


class DomainError(LegendreError):
    pass


class BranchError(LegendreError):
    pass


class NearIntegerOrder(LegendreError):
    pass


class RepresentationMismatch(LegendreError):
    pass


class EndpointError(LegendreError):
    pass


class NonexistentFunction(LegendreError):
    pass


class StepCollision(LegendreError):
    pass


class NonConvergence(LegendreError):
    pass
