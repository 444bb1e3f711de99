import os
from typing import Tuple


def _flag(name: str, default: str = "false") -> bool:
    return os.getenv(name, default).strip().lower() in ("1", "true", "yes", "on")


# Largest instance the exact solvers accept (exponential search)
EXACT_CAP: int = int(os.getenv("DDP_EXACT_CAP", "15"))

LOG_LEVEL: str = os.getenv("DDP_LOG_LEVEL", "INFO")

# Audit search order and height after every tree mutation (slow, test builds)
TREE_AUDIT: bool = _flag("DDP_TREE_AUDIT")

# Sizes used by the scaling run of the bench harness
BENCH_SIZES: Tuple[int, ...] = tuple(
    int(s) for s in os.getenv("DDP_BENCH_SIZES", "1000,10000,100000").split(",") if s.strip()
)

# Process pool width for suite runs; 1 solves in-process
SUITE_WORKERS: int = int(os.getenv("DDP_SUITE_WORKERS", "1"))
