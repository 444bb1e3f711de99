# Verification, LP export, bin-packing reduction and bound benchmarks
import logging
from pathlib import Path
from typing import List, Optional

from fastapi import APIRouter, BackgroundTasks, Depends
from fastapi.responses import PlainTextResponse
from pydantic import BaseModel, Field

from app.core.config import EXACT_CAP
from app.core.dependencies import get_instance, http_error
from app.core.errors import DDPError
from app.core.instance import validate_instance
from app.core.verify import verify_solution
from app.harness.generator import GeneratorConfig
from app.harness.suite import BoundCertificate, SuiteReport, run_suite
from app.models import Instance
from app.schemas import (
    Algorithm,
    BinPackingFile,
    InstanceFile,
    VerifyRequest,
    VerifyResponse,
)
from app.solvers.exact import export_ilp
from app.solvers.reduction import bp_to_ddp

logger = logging.getLogger(__name__)

router = APIRouter(tags=["Tools"])


class BenchRequest(BaseModel):
    configs: List[GeneratorConfig]
    algorithms: List[Algorithm] = Field(default_factory=lambda: ["greedy", "coloring", "exact"])
    cap: int = EXACT_CAP
    out: Optional[str] = None  # directory for summary.csv / certificates.json


@router.post("/verify", response_model=VerifyResponse)
def verify(body: VerifyRequest):
    """Independent check of a solution against its instance."""
    try:
        inst = validate_instance(body.instance)
    except DDPError as exc:
        raise http_error(exc) from exc
    report = verify_solution(inst, body.solution.to_solution())
    return VerifyResponse(passed=report.passed, violations=report.violations, notes=report.notes)


@router.post("/export-lp", response_class=PlainTextResponse)
def export_lp(inst: Instance = Depends(get_instance)):
    """Integer program in LP format (binary x_i_j, y_i)."""
    return PlainTextResponse(export_ilp(inst))


@router.post("/reduce-bp", response_model=InstanceFile)
def reduce_bp(body: BinPackingFile):
    """Bin packing instance -> drone instance with pairwise-disjoint intervals."""
    try:
        return InstanceFile.from_instance(bp_to_ddp(body.to_instance()))
    except DDPError as exc:
        raise http_error(exc) from exc


def write_bench_report(report: SuiteReport, out: str) -> None:
    """Background task: persist CSV + JSON after the response is sent."""
    report.write(Path(out))
    logger.info("bench report written to %s", out)


@router.post("/bench", response_model=List[BoundCertificate])
def bench(body: BenchRequest, background_tasks: BackgroundTasks):
    """
    Certify every bound on one generated instance per config.
    A violation returns 500 naming the replay file.
    """
    try:
        report = run_suite(
            body.configs,
            body.algorithms,
            cap=body.cap,
            replay_dir=Path(body.out) if body.out else None,
            workers=1,
        )
    except DDPError as exc:
        raise http_error(exc) from exc
    if body.out:
        background_tasks.add_task(write_bench_report, report, body.out)
    return report.certificates
