# Request dependencies and error translation for the HTTP routers
from fastapi import HTTPException, status

from app.core.errors import (
    BoundViolationError,
    CapExceededError,
    DDPError,
    InstanceValidationError,
)
from app.core.instance import validate_instance
from app.models import Instance
from app.schemas import InstanceFile


def http_error(exc: DDPError) -> HTTPException:
    """Map toolkit errors onto HTTP status codes."""
    if isinstance(exc, InstanceValidationError):
        return HTTPException(status_code=status.HTTP_422_UNPROCESSABLE_ENTITY, detail=exc.diagnostics)
    if isinstance(exc, CapExceededError):
        return HTTPException(status_code=status.HTTP_413_REQUEST_ENTITY_TOO_LARGE, detail=str(exc))
    if isinstance(exc, BoundViolationError):
        return HTTPException(status_code=status.HTTP_500_INTERNAL_SERVER_ERROR, detail=str(exc))
    return HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(exc))


def get_instance(payload: InstanceFile) -> Instance:
    """
    Dependency that validates the request body into a canonical Instance.
    Every diagnostic is returned with a 422, one per offending delivery.

    Usage: inst: Instance = Depends(get_instance)
    """
    try:
        return validate_instance(payload)
    except InstanceValidationError as exc:
        raise http_error(exc) from exc
