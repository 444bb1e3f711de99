# Exception hierarchy shared by solvers, CLI and HTTP routers
from typing import Iterable, List, Optional


class DDPError(Exception):
    """Base class for every error raised by the toolkit."""


class InstanceValidationError(DDPError, ValueError):
    """
    Raised by validate_instance. Carries one diagnostic per problem found,
    each naming the offending delivery.
    """

    def __init__(self, diagnostics: Iterable[str]):
        self.diagnostics: List[str] = list(diagnostics)
        super().__init__("; ".join(self.diagnostics))


class UnknownDeliveryError(DDPError, KeyError):
    def __init__(self, delivery_id: int):
        self.delivery_id = delivery_id
        super().__init__(f"unknown delivery id {delivery_id}")

    def __str__(self) -> str:
        return self.args[0]


class CapExceededError(DDPError):
    """Exact solvers refuse instances above the configured desk-scale cap."""

    def __init__(self, what: str, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(f"{what}: {size} items exceeds the exact-search cap of {cap}")


class SolverInvariantError(DDPError, RuntimeError):
    """Internal inconsistency in a solver (a bug, never a user error)."""


class BoundViolationError(DDPError):
    """A suite run found an infeasible solution or a broken bound."""

    def __init__(
        self,
        message: str,
        replay_path: Optional[str] = None,
        problems: Optional[List[str]] = None,
    ):
        self.replay_path = replay_path
        self.problems: List[str] = list(problems or [])
        if replay_path:
            message = f"{message} (instance saved to {replay_path})"
        super().__init__(message)
