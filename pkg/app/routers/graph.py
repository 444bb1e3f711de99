# Interval graph statistics
from fastapi import APIRouter, Depends

from app.core.dependencies import get_instance
from app.models import Instance
from app.schemas import GraphSummary

router = APIRouter(prefix="/graph", tags=["Interval Graph"])


@router.post("", response_model=GraphSummary)
def graph_summary(inst: Instance = Depends(get_instance)):
    """Max degree, clique number, edge count and color class sizes."""
    return GraphSummary.for_instance(inst)
