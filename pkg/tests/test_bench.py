from app.src.algebra.algebra_errors import SizeLimitError
from app.src.bench.bench import (
    BenchReport,
    count_table_nonzeros,
    dense_product_counts,
    format_key_values,
    format_report,
    lower_bound,
    upper_bound,
)
from app.src.bench.verification import run_oracle_sweep
import pytest


@pytest.mark.parametrize("m, expected", [(1, 8), (2, 64), (3, 512)])
def test_table_nonzeros(m, expected):
    assert count_table_nonzeros(m) == expected


@pytest.mark.slow
def test_table_nonzeros_m4():
    assert count_table_nonzeros(4) == 4096


def test_table_limit():
    with pytest.raises(SizeLimitError):
        count_table_nonzeros(3, limit=2)
    with pytest.raises(ValueError):
        count_table_nonzeros(0)


def test_bounds():
    assert [lower_bound(m) for m in (1, 2, 3)] == [7, 31, 127]
    assert [upper_bound(m) for m in (1, 2, 3)] == [8, 64, 512]


@pytest.mark.parametrize("m", [1, 2, 3])
def test_dense_counts(m):
    report = dense_product_counts(m)
    assert report.dense_efb_mults == 1 << (3 * m)
    assert report.dense_gamma_mults == 1 << (4 * m)
    assert report.table_nonzero == 1 << (3 * m)
    assert report.within_bounds
    assert set(report.timings) == {"efb", "gamma", "table"}


def test_counts_do_not_depend_on_seed_or_mode():
    exact = dense_product_counts(2, seed=1)
    floats = dense_product_counts(2, seed=7, mode="float")
    assert exact.dense_efb_mults == floats.dense_efb_mults == 64
    assert floats.scalar_mode == "float"


def test_paths_skipped_above_their_limits():
    report = dense_product_counts(2, gamma_limit=1, table_limit=1)
    assert report.dense_gamma_mults is None
    assert report.table_nonzero is None
    assert report.dense_efb_mults == 64
    assert set(report.timings) == {"efb"}


def test_efb_limit():
    with pytest.raises(SizeLimitError):
        dense_product_counts(3, efb_limit=2)


def test_report_formats():
    report = BenchReport(
        m=1,
        dense_gamma_mults=None,
        dense_efb_mults=8,
        table_nonzero=8,
        lower_bound=7,
        upper_bound_label=8,
        timings={"efb": 0.5},
    )
    assert format_key_values(report).splitlines() == [
        "m=1",
        "scalar_mode=exact",
        "dense_gamma_mults=skipped",
        "dense_efb_mults=8",
        "table_nonzero=8",
        "lower_bound=7",
        "upper_bound_label=8",
        "time_efb_s=0.500000",
    ]
    lines = format_report(report).splitlines()
    assert lines[0].split() == ["m", "1"]
    assert lines[3].split() == ["dense_efb_mults", "8"]
    # values start in one column
    assert lines[3].index("8") == lines[4].index("8")


@pytest.mark.parametrize("m", [1, 2])
def test_oracle_sweep_passes(m):
    report = run_oracle_sweep(m, samples=50)
    assert report.exhaustive
    assert report.passed, [c.detail for c in report.failed]
    names = [c.name for c in report.checks]
    assert names == [
        "product",
        "round_trip",
        "weyl_sign",
        "tnp_annihilation",
        "table_nonzero",
        "dense_efb_mults",
    ]
    product = report.checks[0]
    assert product.checked == (1 << (2 * m)) ** 2


def test_oracle_sweep_sampled():
    report = run_oracle_sweep(4, samples=5, table_limit=3, efb_limit=3)
    assert not report.exhaustive
    assert report.passed
    assert [c.name for c in report.checks] == ["product", "round_trip", "weyl_sign", "tnp_annihilation"]
    assert report.checks[0].checked == 5


def test_oracle_sweep_rejects_bad_m():
    with pytest.raises(ValueError):
        run_oracle_sweep(0)
