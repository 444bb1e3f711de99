# Seeded random instance families for the bound and scaling experiments
import logging
from typing import List

import numpy as np
from pydantic import BaseModel, Field, model_validator

from app.models import Delivery, Instance

logger = logging.getLogger(__name__)


class GeneratorConfig(BaseModel):
    """
    Instance family parameters. Interval lengths are drawn around
    overlap * horizon / n, so `overlap` is roughly the expected number of
    intervals covering a random instant (it drives max degree and clique number).
    """
    n: int = Field(ge=0)
    budget: int = Field(default=100, gt=0)
    cost_min: int = Field(default=1, gt=0)
    cost_max: int = 100
    horizon: int = Field(default=1000, gt=0)
    overlap: float = Field(default=2.0, ge=0)
    length_jitter: float = Field(default=0.5, ge=0, le=1)
    seed: int = 0

    @model_validator(mode="after")
    def _check_ranges(self) -> "GeneratorConfig":
        if self.cost_min > self.cost_max:
            raise ValueError(f"cost range is empty: [{self.cost_min}, {self.cost_max}]")
        if self.cost_max > self.budget:
            raise ValueError(f"cost_max {self.cost_max} exceeds budget {self.budget}")
        return self

    @property
    def mean_length(self) -> float:
        return self.overlap * self.horizon / max(self.n, 1)


def generate(cfg: GeneratorConfig) -> Instance:
    """Deterministic for a fixed config (seed included)."""
    rng = np.random.default_rng(cfg.seed)
    launches = rng.integers(0, cfg.horizon, size=cfg.n)
    spread = rng.uniform(1 - cfg.length_jitter, 1 + cfg.length_jitter, size=cfg.n)
    lengths = np.rint(cfg.mean_length * spread).astype(np.int64)
    costs = rng.integers(cfg.cost_min, cfg.cost_max + 1, size=cfg.n)
    deliveries = tuple(
        Delivery(id=j, launch=int(s), rendezvous=int(s + ln), cost=int(c))
        for j, (s, ln, c) in enumerate(zip(launches, lengths, costs), start=1)
    )
    logger.debug("generated n=%d seed=%d mean length %.1f", cfg.n, cfg.seed, cfg.mean_length)
    return Instance(budget=cfg.budget, deliveries=deliveries)


def acceptance_configs(count: int, max_n: int = 12, seed: int = 0) -> List[GeneratorConfig]:
    """
    Mixed regimes for the small-instance bound checks: sparse and dense
    overlap crossed with light, mixed and heavy costs.
    """
    regimes = [
        # (overlap, cost_min, cost_max) with budget 100
        (0.5, 1, 30),
        (0.5, 40, 100),
        (2.0, 1, 100),
        (2.0, 30, 70),
        (4.0, 1, 50),
        (4.0, 45, 100),
        (8.0, 1, 100),
    ]
    rng = np.random.default_rng(seed)
    configs = []
    for k in range(count):
        overlap, lo, hi = regimes[k % len(regimes)]
        configs.append(
            GeneratorConfig(
                n=int(rng.integers(0, max_n + 1)),
                budget=100,
                cost_min=lo,
                cost_max=hi,
                horizon=100,
                overlap=overlap,
                seed=seed * 1_000_003 + k,
            )
        )
    return configs


def sparse_config(n: int, seed: int = 0) -> GeneratorConfig:
    """Large sparse family for the scaling run: about one interval per instant."""
    return GeneratorConfig(
        n=n, budget=1000, cost_min=1, cost_max=250, horizon=10 * n, overlap=1.0, seed=seed
    )
