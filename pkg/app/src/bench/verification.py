"""Oracle-equivalence sweep behind ``verify``.

Every EFB result is pushed back to the gamma basis and compared exactly with
the direct gamma product. Small m is checked over all basis pairs, larger m
over seeded random sparse pairs.
"""

from app.src.algebra.efb import EfbMultivector, all_elements, mv_product as efb_product
from app.src.algebra.gamma import mv_product as gamma_product, pseudoscalar, random_gamma
from app.src.algebra.spinor import annihilates, tnp_of, tnp_vectors, weyl_sign
from app.src.algebra.transform import efb_to_gamma, gamma_to_efb
from app.src.bench.bench import count_table_nonzeros, dense_product_counts, upper_bound
from app.utils.constants import (
    DEFAULT_EFB_BENCH_LIMIT,
    DEFAULT_SEED,
    DEFAULT_TABLE_LIMIT,
    DEFAULT_VERIFY_SAMPLES,
    EXHAUSTIVE_VERIFY_LIMIT,
)
from pydantic import BaseModel, Field
from typing import Iterable, Iterator
import logging
import random


logger = logging.getLogger(__name__)

SPARSE_DENSITY = 0.1


class CheckResult(BaseModel):
    name: str
    checked: int = 0
    failures: int = 0
    detail: str | None = None

    @property
    def passed(self) -> bool:
        return self.failures == 0


class VerificationReport(BaseModel):
    m: int
    seed: int
    exhaustive: bool
    checks: list[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failed(self) -> list[CheckResult]:
        return [check for check in self.checks if not check.passed]


def _run_check(name: str, cases: Iterable[tuple[str, bool]]) -> CheckResult:
    result = CheckResult(name=name)
    for label, ok in cases:
        result.checked += 1
        if not ok:
            result.failures += 1
            if result.detail is None:
                result.detail = label
    logger.info("%s: %d checked, %d failed", name, result.checked, result.failures)
    return result


def _product_cases(m, rng, samples, exhaustive) -> Iterator[tuple[str, bool]]:
    if exhaustive:
        elements = [EfbMultivector.from_element(e) for e in all_elements(m)]
        for a in elements:
            for b in elements:
                expected = gamma_product(efb_to_gamma(a), efb_to_gamma(b))
                yield f"{a} times {b}", efb_to_gamma(efb_product(a, b)) == expected
        return
    # sparse in the gamma basis keeps the oracle side cheap
    for _ in range(samples):
        x = random_gamma(m, rng, SPARSE_DENSITY)
        y = random_gamma(m, rng, SPARSE_DENSITY)
        got = efb_to_gamma(efb_product(gamma_to_efb(x), gamma_to_efb(y)))
        yield f"{x} times {y}", got == gamma_product(x, y)


def _round_trip_cases(m, rng, samples) -> Iterator[tuple[str, bool]]:
    for _ in range(samples):
        a = random_gamma(m, rng, SPARSE_DENSITY)
        yield str(a), efb_to_gamma(gamma_to_efb(a)) == a


def _element_sample(m: int, rng: random.Random, samples: int, exhaustive: bool):
    if exhaustive:
        return list(all_elements(m))
    elements = list(all_elements(m))
    return rng.sample(elements, min(samples, len(elements)))


def _weyl_cases(elements) -> Iterator[tuple[str, bool]]:
    for psi in elements:
        gamma_form = efb_to_gamma(EfbMultivector.from_element(psi))
        lhs = gamma_product(pseudoscalar(psi.m), gamma_form)
        yield str(psi), lhs == gamma_form.scale(weyl_sign(psi))


def _tnp_cases(elements) -> Iterator[tuple[str, bool]]:
    for psi in elements:
        tnp = tnp_of(psi)
        yield f"{tnp} on {psi}", all(annihilates(v, psi) for v in tnp_vectors(tnp))


def run_oracle_sweep(
    m: int,
    seed: int = DEFAULT_SEED,
    samples: int = DEFAULT_VERIFY_SAMPLES,
    table_limit: int = DEFAULT_TABLE_LIMIT,
    efb_limit: int = DEFAULT_EFB_BENCH_LIMIT,
) -> VerificationReport:
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    rng = random.Random(seed)
    exhaustive = m <= EXHAUSTIVE_VERIFY_LIMIT
    report = VerificationReport(m=m, seed=seed, exhaustive=exhaustive)
    logger.info("verify m=%d seed=%d exhaustive=%s", m, seed, exhaustive)

    report.checks.append(
        _run_check("product", _product_cases(m, rng, samples, exhaustive))
    )
    report.checks.append(
        _run_check("round_trip", _round_trip_cases(m, rng, min(samples, 100)))
    )

    elements = _element_sample(m, rng, samples, exhaustive)
    report.checks.append(_run_check("weyl_sign", _weyl_cases(elements)))
    report.checks.append(_run_check("tnp_annihilation", _tnp_cases(elements)))

    if m <= table_limit:
        count = count_table_nonzeros(m, table_limit)
        report.checks.append(
            _run_check("table_nonzero", [(f"{count} nonzero entries", count == upper_bound(m))])
        )
    if m <= efb_limit:
        bench = dense_product_counts(m, seed, gamma_limit=0, efb_limit=efb_limit, table_limit=0)
        report.checks.append(
            _run_check(
                "dense_efb_mults",
                [(f"{bench.dense_efb_mults} multiplications", bench.dense_efb_mults == upper_bound(m))],
            )
        )
    return report
