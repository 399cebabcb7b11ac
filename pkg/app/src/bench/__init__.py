from app.src.bench.bench import BenchReport, count_table_nonzeros, dense_product_counts
from app.src.bench.verification import VerificationReport, run_oracle_sweep

__all__ = [
    "BenchReport",
    "count_table_nonzeros",
    "dense_product_counts",
    "VerificationReport",
    "run_oracle_sweep",
]
