"""Multiplication counts for dense products in both bases.

A dense product costs 2^{4m} scalar multiplications in the gamma basis and
2^{3m} in the EFB; the bilinear lower bound for a simple algebra of dimension
2^{2m} is 2 * 2^{2m} - 1. Only counts are exact, timings are informational.
"""

from app.src.algebra.algebra_errors import SizeLimitError
from app.src.algebra.efb import basis_product, mv_product as efb_product, random_efb
from app.src.algebra.gamma import mv_product as gamma_product, random_gamma
from app.src.algebra.scalar import MultiplicationCounter
from app.utils.constants import (
    DEFAULT_EFB_BENCH_LIMIT,
    DEFAULT_GAMMA_BENCH_LIMIT,
    DEFAULT_SEED,
    DEFAULT_TABLE_LIMIT,
)
from pydantic import BaseModel, Field
from typing import Literal
import logging
import random
import time


logger = logging.getLogger(__name__)


class BenchReport(BaseModel):
    m: int
    dense_gamma_mults: int | None = None
    dense_efb_mults: int
    table_nonzero: int | None = None
    lower_bound: int
    upper_bound_label: int
    scalar_mode: Literal["exact", "float"] = "exact"
    timings: dict[str, float] = Field(default_factory=dict)

    @property
    def within_bounds(self) -> bool:
        return self.lower_bound < self.dense_efb_mults <= self.upper_bound_label


def lower_bound(m: int) -> int:
    """2 dim A - 1 with dim A = 2^{2m}."""
    return (1 << (2 * m + 1)) - 1


def upper_bound(m: int) -> int:
    return 1 << (3 * m)


def _check_m(m: int, limit: int, what: str):
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if m > limit:
        raise SizeLimitError(f"{what} is limited to m <= {limit}, got {m}")


def count_table_nonzeros(m: int, limit: int = DEFAULT_TABLE_LIMIT) -> int:
    """Nonzero entries of the full 2^{2m} x 2^{2m} EFB multiplication table."""
    _check_m(m, limit, "Table count")
    size = 1 << (2 * m)
    # bypass the product cache, every pair is visited once
    product = basis_product.__wrapped__
    return sum(
        1
        for psi in range(size)
        for phi in range(size)
        if product(psi, phi, m) is not None
    )


def _timed(label: str, timings: dict[str, float], operation):
    start = time.perf_counter()
    out = operation()
    timings[label] = time.perf_counter() - start
    return out


def dense_product_counts(
    m: int,
    seed: int = DEFAULT_SEED,
    mode: str = "exact",
    gamma_limit: int = DEFAULT_GAMMA_BENCH_LIMIT,
    efb_limit: int = DEFAULT_EFB_BENCH_LIMIT,
    table_limit: int = DEFAULT_TABLE_LIMIT,
) -> BenchReport:
    """Multiply two fully dense random multivectors in each basis and count.

    Above ``gamma_limit`` the gamma path is skipped and above ``table_limit``
    the table count is, both reported as None; above ``efb_limit`` nothing runs.
    """
    _check_m(m, efb_limit, "Dense EFB bench")
    rng = random.Random(seed)
    timings: dict[str, float] = {}

    a, b = random_efb(m, rng, 1.0, mode), random_efb(m, rng, 1.0, mode)
    efb_counter = MultiplicationCounter()
    _timed("efb", timings, lambda: efb_product(a, b, efb_counter))
    logger.info("dense efb product m=%d: %d mults", m, efb_counter.count)

    gamma_mults = None
    if m <= gamma_limit:
        x, y = random_gamma(m, rng, 1.0, mode), random_gamma(m, rng, 1.0, mode)
        gamma_counter = MultiplicationCounter()
        _timed("gamma", timings, lambda: gamma_product(x, y, gamma_counter))
        gamma_mults = gamma_counter.count
        logger.info("dense gamma product m=%d: %d mults", m, gamma_mults)

    table = None
    if m <= table_limit:
        table = _timed("table", timings, lambda: count_table_nonzeros(m, table_limit))

    return BenchReport(
        m=m,
        dense_gamma_mults=gamma_mults,
        dense_efb_mults=efb_counter.count,
        table_nonzero=table,
        lower_bound=lower_bound(m),
        upper_bound_label=upper_bound(m),
        scalar_mode=mode,
        timings=timings,
    )


def _fields(report: BenchReport) -> list[tuple[str, str]]:
    def show(value):
        return "skipped" if value is None else str(value)

    rows = [
        ("m", str(report.m)),
        ("scalar_mode", report.scalar_mode),
        ("dense_gamma_mults", show(report.dense_gamma_mults)),
        ("dense_efb_mults", str(report.dense_efb_mults)),
        ("table_nonzero", show(report.table_nonzero)),
        ("lower_bound", str(report.lower_bound)),
        ("upper_bound_label", str(report.upper_bound_label)),
    ]
    for label, seconds in sorted(report.timings.items()):
        rows.append((f"time_{label}_s", f"{seconds:.6f}"))
    return rows


def format_report(report: BenchReport) -> str:
    """Aligned two-column text."""
    rows = _fields(report)
    width = max(len(name) for name, _ in rows)
    return "\n".join(f"{name.ljust(width)}  {value}" for name, value in rows)


def format_key_values(report: BenchReport) -> str:
    return "\n".join(f"{name}={value}" for name, value in _fields(report))
