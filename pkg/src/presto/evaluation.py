"""Repeated-run accuracy evaluation and run records."""
from __future__ import annotations

import csv
import io
import json
import statistics
from dataclasses import asdict, dataclass, field
from typing import Optional, Sequence

from .exact import EdgeSlice, count_instances
from .model import TemporalMotif, TemporalNetwork
from .sampler import DEFAULT_SEED, EstimatorConfig, run_estimate

__all__ = ["RunRecord", "MapeReport", "relative_errors", "mape_report", "evaluate", "csv_text"]


@dataclass
class RunRecord:
    """One command invocation, serialisable as a JSON object or a CSV row."""

    command: str
    dataset_path: str
    motif_path: str
    delta: float
    c: Optional[float] = None
    variant: Optional[str] = None
    s: Optional[int] = None
    seed: Optional[int] = None
    estimate: Optional[float] = None
    exact_count: Optional[int] = None
    elapsed: float = 0.0
    workers: int = 1

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_csv(self) -> str:
        return csv_text([self.to_dict()])

    @classmethod
    def from_dict(cls, data: dict) -> "RunRecord":
        return cls(**data)


@dataclass
class MapeReport:
    """Mean absolute percentage error of repeated estimates."""

    exact: int
    estimates: list = field(default_factory=list)
    mape: float = 0.0
    stddev: float = 0.0
    trimming: bool = False

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_csv(self) -> str:
        row = self.to_dict()
        row["estimates"] = json.dumps(row["estimates"])
        return csv_text([row])


def csv_text(rows) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def relative_errors(exact: float, estimates: Sequence[float]) -> list[float]:
    """``|estimate - exact| / exact`` in percent, one per estimate."""
    if exact == 0:
        raise ValueError("relative error is undefined for an exact count of zero")
    return [abs(e - exact) / exact * 100.0 for e in estimates]


def mape_report(exact: int, estimates: Sequence[float], trim: bool = False) -> MapeReport:
    """Summarise estimates against the exact count.

    With ``trim`` the runs with the smallest and the largest relative error
    are discarded first (one each).  ``stddev`` is the population standard
    deviation of the retained relative errors.
    """
    errors = relative_errors(exact, estimates)
    if trim:
        if len(errors) < 3:
            raise ValueError("trimming needs at least 3 runs")
        order = sorted(range(len(errors)), key=errors.__getitem__)
        drop = {order[0], order[-1]}
        errors = [e for i, e in enumerate(errors) if i not in drop]
    if not errors:
        raise ValueError("no estimates given")
    return MapeReport(
        exact=exact,
        estimates=[float(e) for e in estimates],
        mape=statistics.fmean(errors),
        stddev=statistics.pstdev(errors),
        trimming=trim,
    )


def evaluate(network: TemporalNetwork, motif: TemporalMotif, delta: float, c: float,
             variant: str, s: int, runs: int, seed: int = DEFAULT_SEED,
             trim: bool = False, workers: int = 1) -> MapeReport:
    """Run the estimator ``runs`` times with seeds ``seed + i`` and report MAPE."""
    exact = count_instances(EdgeSlice.full(network), motif, delta, workers=workers)
    estimates = [
        run_estimate(network, motif, EstimatorConfig(variant, c, delta, s, seed + i,
                                                     workers)).estimate
        for i in range(runs)
    ]
    return mape_report(exact, estimates, trim=trim)
