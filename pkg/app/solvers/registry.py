# Algorithm name -> solver
from typing import Optional

from app.models import Instance, Solution
from app.solvers.coloring import solve_with_coloring
from app.solvers.exact import solve_exact
from app.solvers.greedy import solve_greedy


def solve(inst: Instance, algorithm: str, cap: Optional[int] = None) -> Solution:
    if algorithm == "greedy":
        return solve_greedy(inst)
    if algorithm == "coloring":
        return solve_with_coloring(inst)
    if algorithm == "exact":
        return solve_exact(inst, cap=cap)
    raise ValueError(f"unknown algorithm {algorithm!r}")
