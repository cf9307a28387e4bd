"""
Survey orchestrator for the table commands.

SurveyPipeline turns a validated SurveyConfig into a Table:
- quad: one per-field report
- survey: imaginary quadratic sweep with the Cl = Po list
- growth: per-decade statistics of the same sweep
- families: unit checks, regulators and class data for n^2+1 and 4n^2-1
- cyclotomic: discriminants, lambda bound and h^- of Q(zeta_p)
- sieve: the square-free sieve of one family

Ranges are cut into contiguous chunks processed by module-level functions
and merged in chunk order, so the output does not depend on how chunks are
executed. SurveyPipelineParallel (survey_parallel.py) runs the same chunks
on a process pool.
"""

import logging
import math
from typing import Any, Callable, Dict, List, Optional, Sequence, TypeVar

import numpy as np
import pandas as pd

from polya_groups.api.report import quad_report
from polya_groups.api.tables import Table
from polya_groups.arith.intarith import primes_up_to
from polya_groups.config import AppConfig, get_app_config
from polya_groups.errors import InvariantViolation
from polya_groups.models.reports import CyclotomicRow, FamilyRow, GrowthBucket, SieveRow, SurveyRow
from polya_groups.models.requests import SurveyConfig
from polya_groups.models.units import FamilyOutcome
from polya_groups.services.abelian import (
    LAMBDA_BOUND,
    cm_discriminant_ratio,
    cyclotomic_field,
    degree_over_logdisc,
    discriminant_from_exponents,
    discriminant_oracle,
    hminus_ratio_table,
    polya_bound_ratio,
    regulator_ratio_constant,
)
from polya_groups.services.forms import class_number_forms, imaginary_class_number
from polya_groups.services.polya import hilbert_order, polya_order, relative_class_group
from polya_groups.services.quadfield import fundamental_discriminants, make_field
from polya_groups.services.sieve import density_limit_estimate, family_value, sieve_family
from polya_groups.services.units import brute_force_unit, check_family, log_regulator_ratio
from polya_groups.types import Families

logger = logging.getLogger(__name__)

T = TypeVar("T")

CHUNKS_PER_WORKER = 4
GROWTH_TREND_FROM = 100
UNIT_SEARCH_Y = 10_000


# ---------------------------------------------------------------------------
# Chunk functions (module level so worker processes can pickle them)
# ---------------------------------------------------------------------------

def survey_row(d: int, cross_check_limit: int) -> SurveyRow:
    """
    One imaginary field: h by reduced forms, |Po| by closure.

    Raises:
        InvariantViolation: If h disagrees with the analytic class number
            (|d| <= cross_check_limit) or |Po| with Hilbert's formula
    """
    F = make_field(d)
    h = class_number_forms(d)
    if -d <= cross_check_limit:
        analytic = imaginary_class_number(F)
        if analytic != h:
            logger.error(f"d = {d}: reduced forms give h = {h}, character sum gives {analytic}")
            raise InvariantViolation(f"d = {d}: h = {h} from forms but {analytic} analytically")
    po = polya_order(F)
    if po != hilbert_order(F):
        logger.error(f"d = {d}: |Po| = {po} but 2^(s-1) = {hilbert_order(F)}")
        raise InvariantViolation(f"d = {d}: |Po| = {po} != 2^(s-1) = {hilbert_order(F)}")
    root = math.sqrt(-d)
    return SurveyRow(
        d=d, h=h, s=F.s, po_order=po,
        h_ratio=h / root, po_ratio=po / root,
        trivial_relative=int(h == po),
    )


def survey_chunk(ds: Sequence[int], cross_check_limit: int) -> List[SurveyRow]:
    return [survey_row(d, cross_check_limit) for d in ds]


def family_row(n: int, family: str, precision: int, class_limit: int) -> FamilyRow:
    """
    Unit check, regulator and (n <= class_limit) class data of one family member.

    Raises:
        InvariantViolation: If, for n <= class_limit, a direct search over
            y <= UNIT_SEARCH_Y finds a unit > 1 other than the computed one
    """
    radicand = family_value(family, n)
    check = check_family(family, n, precision)
    if check.outcome is FamilyOutcome.SKIPPED:
        return FamilyRow(family=family, n=n, radicand=radicand, squarefree=0, unit_holds=check.outcome.value)

    unit = check.unit
    class_data: Dict[str, Any] = {}
    if n <= class_limit:
        F = make_field(unit.d)
        found = brute_force_unit(F, UNIT_SEARCH_Y)
        if found is not None and found != (unit.x, unit.y, unit.sigma):
            logger.error(f"d = {unit.d}: continued fraction gives {unit}, direct search gives {found}")
            raise InvariantViolation(f"d = {unit.d}: unit {unit} is not the smallest found by search ({found})")
        rel = relative_class_group(F)
        class_data = {
            'h': rel.class_number,
            'po_order': rel.po_order,
            'rel_order': rel.order,
            'log_rel_order': math.log(rel.order),
        }
    return FamilyRow(
        family=family, n=n, radicand=radicand, disc=unit.d, squarefree=1,
        unit_holds=check.outcome.value,
        unit=str(unit),
        regulator=float(unit.regulator),
        log_regulator_ratio=log_regulator_ratio(unit),
        log_sqrt_disc=0.5 * math.log(unit.d),
        **class_data,
    )


def family_chunk(ns: Sequence[int], family: str, precision: int, class_limit: int) -> List[FamilyRow]:
    return [family_row(n, family, precision, class_limit) for n in ns]


def cyclotomic_row(p: int, precision: int) -> CyclotomicRow:
    """
    Q(zeta_p): both discriminant computations, lambda bound and h^-.

    Raises:
        InvariantViolation: If the two discriminants differ
    """
    K = cyclotomic_field(p)
    breakdown = discriminant_from_exponents(K)
    oracle = discriminant_oracle(K)
    if oracle != breakdown.abs_disc:
        logger.error(f"p = {p}: |d_K| = {breakdown.abs_disc} from exponents, {oracle} from characters")
        raise InvariantViolation(f"Q(zeta_{p}): discriminants {breakdown.abs_disc} and {oracle} differ")
    hminus = hminus_ratio_table([p], precision)[0]
    return CyclotomicRow(
        p=p,
        degree=K.degree,
        abs_disc=breakdown.abs_disc,
        abs_disc_oracle=oracle,
        lambda_max=str(breakdown.lambda_max),
        lambda_ok=int(breakdown.lambda_max <= LAMBDA_BOUND),
        h_minus=hminus.h_minus,
        ratio=hminus.ratio,
        plus_disc_ratio=cm_discriminant_ratio(K),
        regulator_ratio_constant=regulator_ratio_constant(p),
        polya_bound_ratio=polya_bound_ratio(K),
        degree_over_logdisc=degree_over_logdisc(K),
    )


def cyclotomic_chunk(ps: Sequence[int], precision: int) -> List[CyclotomicRow]:
    return [cyclotomic_row(p, precision) for p in ps]


def chunked(items: Sequence[T], n_chunks: int) -> List[List[T]]:
    """
    Contiguous, nearly equal chunks in order (no empty chunks).

    Example:
        >>> chunked([1, 2, 3, 4, 5], 2)
        [[1, 2, 3], [4, 5]]
    """
    n_chunks = max(1, min(n_chunks, len(items)))
    size, extra = divmod(len(items), n_chunks)
    chunks, start = [], 0
    for i in range(n_chunks):
        stop = start + size + (1 if i < extra else 0)
        chunks.append(list(items[start:stop]))
        start = stop
    return [c for c in chunks if c]


def growth_buckets(rows: Sequence[SurveyRow], bound: int) -> List[GrowthBucket]:
    """
    Decades [10^k, min(10^(k+1), bound+1)) of |d| with the median and max of
    log h / log|d| and the max of |Po| / sqrt|d|.
    """
    frame = pd.DataFrame([r.model_dump() for r in rows], columns=list(SurveyRow.model_fields))
    absd = -frame['d'].astype(np.int64)
    frame['decade'] = absd.astype(str).str.len() - 1
    frame['log_h_ratio'] = np.log(frame['h'].astype(float)) / np.log(absd.astype(float))

    buckets = []
    k = 0
    while 10 ** k <= bound:
        lo, hi = 10 ** k, min(10 ** (k + 1), bound + 1)
        part = frame[frame['decade'] == k]
        if part.empty:
            buckets.append(GrowthBucket(bucket_lo=lo, bucket_hi=hi, fields=0))
        else:
            buckets.append(GrowthBucket(
                bucket_lo=lo,
                bucket_hi=hi,
                fields=len(part),
                median_log_h_ratio=float(part['log_h_ratio'].median()),
                max_log_h_ratio=float(part['log_h_ratio'].max()),
                max_po_ratio=float(part['po_ratio'].max()),
            ))
        k += 1
    return buckets


def _strictly_decreasing(values: Sequence[float]) -> bool:
    return all(a > b for a, b in zip(values, values[1:]))


# ---------------------------------------------------------------------------
# Pipeline
# ---------------------------------------------------------------------------

class SurveyPipeline:
    """
    Sequential survey runner.

    Args:
        config: Runtime settings (defaults to get_app_config())
        precision: Decimal digits overriding config.precision
        workers: Worker processes; only SurveyPipelineParallel uses more than one

    Example:
        >>> table = SurveyPipeline().survey(100)
        >>> table.summary['trivial_relative'][:4]
        [-3, -4, -7, -8]
    """

    def __init__(self, config: Optional[AppConfig] = None, precision: Optional[int] = None, workers: int = 1):
        self._config = config or get_app_config()
        self.precision = precision or self._config.precision
        self.workers = workers

    def _map_chunks(self, fn: Callable[..., List[T]], chunks: List[List[Any]], *args: Any) -> List[List[T]]:
        """Run fn(chunk, *args) for every chunk, results in chunk order."""
        return [fn(chunk, *args) for chunk in chunks]

    def _run(self, fn: Callable[..., List[T]], items: Sequence[Any], *args: Any) -> List[T]:
        chunks = chunked(items, self.workers * CHUNKS_PER_WORKER)
        logger.debug(f"{fn.__name__}: {len(items)} items in {len(chunks)} chunks")
        return [row for part in self._map_chunks(fn, chunks, *args) for row in part]

    def run(self, cfg: SurveyConfig) -> Table:
        """Dispatch a validated SurveyConfig to its command."""
        if cfg.command == 'quad':
            return self.quad(cfg.disc)
        if cfg.command == 'survey':
            return self.survey(cfg.bound)
        if cfg.command == 'growth':
            return self.growth(cfg.bound)
        if cfg.command == 'families':
            return self.families(cfg.n_max, cfg.family)
        if cfg.command == 'cyclotomic':
            return self.cyclotomic(cfg.pmax)
        if cfg.command == 'sieve':
            return self.sieve(cfg.family, cfg.n_max)
        raise ValueError(f"Unknown command: {cfg.command}")

    def quad(self, d: int) -> Table:
        return Table(command='quad', rows=[quad_report(d, self.precision)])

    def _survey_rows(self, bound: int) -> List[SurveyRow]:
        ds = sorted(fundamental_discriminants(-bound, -3), key=abs)
        logger.info(f"Sweeping {len(ds)} imaginary fields with |d| <= {bound} ({self.workers} workers)")
        rows = self._run(survey_chunk, ds, self._config.cross_check_limit)
        logger.info(f"Swept {len(rows)} fields")
        return rows

    def survey(self, bound: int) -> Table:
        """Rows (d, h, s, |Po|, ratios, Cl = Po flag) for -bound <= d < 0, sorted by |d|."""
        rows = self._survey_rows(bound)
        trivial = [r.d for r in rows if r.trivial_relative]
        summary = {
            'bound': bound,
            'fields': len(rows),
            'cross_checked_up_to': min(bound, self._config.cross_check_limit),
            'trivial_relative_count': len(trivial),
            'trivial_relative': trivial,
            'largest_trivial_relative': max((-d for d in trivial), default=None),
        }
        logger.info(f"Cl = Po for {len(trivial)} fields, largest |d| = {summary['largest_trivial_relative']}")
        return Table(command='survey', rows=rows, summary=summary)

    def growth(self, bound: int) -> Table:
        """Per-decade growth statistics of the imaginary sweep."""
        buckets = growth_buckets(self._survey_rows(bound), bound)
        trend = [b.max_po_ratio for b in buckets if b.bucket_lo >= GROWTH_TREND_FROM and b.fields]
        summary = {
            'bound': bound,
            'buckets': len(buckets),
            'max_po_ratio_decreasing': _strictly_decreasing(trend),
        }
        return Table(command='growth', rows=buckets, summary=summary)

    def families(self, n_max: int, family: Optional[str] = None) -> Table:
        """Both families (or one) for 1 <= n <= n_max, with sieve densities in the summary."""
        tags = [family] if family else list(Families.list_available())
        rows: List[FamilyRow] = []
        summary: Dict[str, Any] = {'bound': n_max}
        for tag in tags:
            logger.info(f"Checking family {tag} ({Families.get_description(tag)}) for n <= {n_max}")
            part = self._run(
                family_chunk, list(range(1, n_max + 1)), tag, self.precision, self._config.family_class_limit
            )
            rows.extend(part)
            failures = [r.n for r in part if r.unit_holds == FamilyOutcome.FAILS.value]
            report = sieve_family(tag, n_max)
            summary[f'{tag}_failures'] = failures
            summary[f'{tag}_skipped'] = sum(1 for r in part if r.unit_holds == FamilyOutcome.SKIPPED.value)
            summary[f'{tag}_density'] = report.density
            summary[f'{tag}_meets_floor'] = report.meets_floor
            summary[f'{tag}_density_estimate'] = density_limit_estimate(tag, n_max)
            if failures:
                logger.info(f"{tag}: family unit is not fundamental for n in {failures}")
        return Table(command='families', rows=rows, summary=summary)

    def cyclotomic(self, pmax: int) -> Table:
        """Q(zeta_p) for odd primes p <= pmax."""
        primes = [p for p in primes_up_to(pmax) if p > 2]
        rows = self._run(cyclotomic_chunk, primes, self.precision)
        hminus_one = [r.p for r in rows if r.h_minus == 1]
        summary = {
            'primes': len(rows),
            'all_lambda_ok': all(r.lambda_ok for r in rows),
            'oracle_agrees': all(r.abs_disc == r.abs_disc_oracle for r in rows),
            'hminus_one': hminus_one,
            'plus_disc_ratio_increasing': all(
                a.plus_disc_ratio < b.plus_disc_ratio for a, b in zip(rows, rows[1:])
            ),
            'degree_over_logdisc_decreasing': _strictly_decreasing([r.degree_over_logdisc for r in rows]),
        }
        return Table(command='cyclotomic', rows=rows, summary=summary)

    def sieve(self, family: str, n_max: int) -> Table:
        """One row per n <= n_max with the witness prime of each excluded n."""
        report = sieve_family(family, n_max)
        witnesses = report.witness_map()
        rows = [
            SieveRow(
                n=n,
                family_value=family_value(family, n),
                squarefree=int(n not in witnesses),
                witness_p=witnesses.get(n),
            )
            for n in range(1, n_max + 1)
        ]
        summary = {
            'family': family,
            'bound': n_max,
            'count': report.count,
            'density': report.density,
            'meets_floor': report.meets_floor,
            'density_estimate': density_limit_estimate(family, n_max),
            'prime_counts_within_bound': all(
                c <= 2 + 2 * n_max / (p * p) for p, c in report.prime_counts.items()
            ),
        }
        logger.info(f"sieve {family} N={n_max}: |S_N| = {report.count}, density {report.density:.6f}")
        return Table(command='sieve', rows=rows, summary=summary)
