# Solver endpoint: greedy, coloring or exact on a posted instance
from fastapi import APIRouter, Depends, Query

from app.core.config import EXACT_CAP
from app.core.dependencies import get_instance, http_error
from app.core.errors import DDPError
from app.models import Instance
from app.schemas import Algorithm, SolutionFile
from app.solvers.registry import solve as run_solver

router = APIRouter(prefix="/solve", tags=["Solvers"])


@router.post("", response_model=SolutionFile)
def solve(
    algorithm: Algorithm = Query("greedy"),
    cap: int = Query(EXACT_CAP, ge=0),
    inst: Instance = Depends(get_instance),
):
    """
    Solve the posted instance.

    - greedy: launch-ordered packing, at most 2*OPT + max_degree + 1 drones
    - coloring: per color class worst-fit, fewer than 2*OPT + omega drones
    - exact: branch and bound, refused with 413 above `cap` deliveries
    """
    try:
        sol = run_solver(inst, algorithm, cap=cap)
    except DDPError as exc:
        raise http_error(exc) from exc
    return SolutionFile.from_solution(sol)
