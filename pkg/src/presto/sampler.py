"""Uniform window sampling estimators of temporal motif counts.

Each iteration draws a window start ``t_r`` and enumerates the delta-instances
among the edges with timestamp in ``[t_r, t_r + c*delta]``; the iteration value
is the sum of their inverse capture probabilities.  The mean over iterations is an
unbiased estimate of the total count.

Two start laws are provided:

* ``"A"``: ``t_r`` uniform on a continuous interval (see
  :func:`presto.model.sampling_interval`);
* ``"E"``: ``t_r`` uniform over edge positions whose timestamp does not exceed
  ``t_last`` (see :func:`presto.model.edge_start_support`).

Randomness is counter based: the uniform variate of iteration ``i`` is a hash
of ``(seed, i)``, so results do not depend on how iterations are scheduled
across workers.
"""
from __future__ import annotations

import bisect
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np

from . import _kernels
from .errors import InvalidConfig, ZeroCaptureProbability
from .exact import EdgeSlice, enumerate_instances
from .model import (
    DeltaInstance,
    TemporalMotif,
    TemporalNetwork,
    edge_start_support,
    sampling_interval,
)

__all__ = [
    "DEFAULT_SEED",
    "EstimatorConfig",
    "EstimateResult",
    "iteration_uniforms",
    "window_start_a",
    "window_start_e",
    "slice_window",
    "weight_a",
    "weight_e",
    "run_estimate",
    "exhaustive_expectation_a",
    "exhaustive_expectation_e",
]

DEFAULT_SEED = 20210421

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)


def _splitmix(z: np.ndarray) -> np.ndarray:
    with np.errstate(over="ignore"):
        z = (z ^ (z >> np.uint64(30))) * _MIX1
        z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


def iteration_uniforms(seed: int, start: int, count: int) -> np.ndarray:
    """Uniform variates in ``[0, 1)`` for iterations ``start .. start+count-1``.

    Iteration ``i`` always receives the same value for a given seed.
    """
    key = _splitmix(np.array([seed % 2**64], dtype=np.uint64))[0]
    idx = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = _splitmix(key + idx * _GOLDEN)
    return (z >> np.uint64(11)).astype(np.float64) * 2.0**-53


@dataclass(frozen=True)
class EstimatorConfig:
    """Parameters of one sampling run.

    ``budget_seconds`` optionally stops the run early; the estimate is then
    the mean over the iterations completed before the deadline.
    """

    variant: str
    c: float
    delta: float
    s: int
    seed: int = DEFAULT_SEED
    workers: int = 1
    budget_seconds: Optional[float] = None

    def __post_init__(self):
        variant = str(self.variant).upper()
        if variant not in ("A", "E"):
            raise InvalidConfig(f"variant must be 'A' or 'E', got {self.variant!r}")
        object.__setattr__(self, "variant", variant)
        if not (math.isfinite(self.c) and self.c > 1):
            raise InvalidConfig(f"c must be a finite value > 1, got {self.c}")
        if not (math.isfinite(self.delta) and self.delta > 0):
            raise InvalidConfig(f"delta must be a finite value > 0, got {self.delta}")
        if int(self.s) != self.s or self.s < 1:
            raise InvalidConfig(f"s must be a positive integer, got {self.s}")
        object.__setattr__(self, "s", int(self.s))
        if int(self.workers) != self.workers or self.workers < 1:
            raise InvalidConfig(f"workers must be a positive integer, got {self.workers}")
        object.__setattr__(self, "workers", int(self.workers))
        if not 0 <= int(self.seed) < 2**64:
            raise InvalidConfig("seed must fit in 64 unsigned bits")
        object.__setattr__(self, "seed", int(self.seed))
        if self.budget_seconds is not None and not self.budget_seconds > 0:
            raise InvalidConfig("budget_seconds must be positive")

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class EstimateResult:
    """Outcome of :func:`run_estimate`.

    ``empirical_variance`` is the sample variance of the per-iteration
    estimates (zero when only one iteration ran).
    """

    estimate: float
    per_iteration: np.ndarray
    empirical_variance: float
    iterations: int
    elapsed: float
    config: EstimatorConfig

    def to_dict(self) -> dict:
        return {
            "estimate": self.estimate,
            "per_iteration": self.per_iteration.tolist(),
            "empirical_variance": self.empirical_variance,
            "iterations": self.iterations,
            "elapsed": self.elapsed,
            "config": self.config.to_dict(),
        }


# -- window starts and slices -------------------------------------------------

def _uniform(rng, size):
    return rng.random() if size is None else rng.random(size)


def window_start_a(network: TemporalNetwork, ell: int, c: float, delta: float, rng,
                   size=None):
    """Draw start(s) uniformly from the continuous sampling interval.

    ``rng`` is anything with a numpy-style ``random(size)`` method.
    """
    lo, hi = sampling_interval(network, ell, c, delta)
    return lo + _uniform(rng, size) * (hi - lo)


def _start_positions(u, count):
    return np.minimum((np.asarray(u) * count).astype(np.int64), count - 1)


def window_start_e(network: TemporalNetwork, c: float, delta: float, rng, size=None):
    """Draw start(s) uniformly over edge positions with timestamp ``<= t_last``.

    Tied timestamps are drawn with probability proportional to multiplicity.
    """
    _, count = edge_start_support(network, c, delta)
    pos = _start_positions(_uniform(rng, size), count)
    t = network.timestamps
    return t[pos].item() if size is None else t[pos]


def slice_window(network: TemporalNetwork, t_r: float, length: float) -> EdgeSlice:
    """Edges with timestamp in ``[t_r, t_r + length]`` (both ends inclusive)."""
    t = network.timestamps
    lo = int(np.searchsorted(t, t_r, side="left"))
    hi = int(np.searchsorted(t, float(t_r) + float(length), side="right")) - 1
    if hi < lo:
        hi = lo - 1
    return EdgeSlice(network, lo, hi)


# -- weights ------------------------------------------------------------------

def weight_a(instance: DeltaInstance, c: float, delta: float,
             interval: tuple[float, float]) -> float:
    """Inverse probability that a continuous-start window captures ``instance``.

    The capture set ``[t_last_inst - c*delta, t_first]`` is intersected with
    the sampling interval, which only matters for instances near its ends.
    """
    lo, hi = interval
    upper = min(float(instance.t_first), hi)
    lower = max(float(instance.t_last_inst) - c * delta, lo)
    length = upper - lower
    if not length > 0:
        raise ZeroCaptureProbability(
            f"instance {instance.edge_indices} cannot be captured from [{lo}, {hi}]")
    return (hi - lo) / length


def weight_e(instance: DeltaInstance, network: TemporalNetwork, c: float, delta: float,
             t_last: float, delta_T2: int) -> float:
    """Inverse probability that an edge-anchored window captures ``instance``.

    Counts the admissible start positions ``p < delta_T2`` with
    ``t_last_inst - c*delta <= t_p <= t_first`` by two bisections.
    """
    t = network.timestamps
    if delta_T2 < 1 or delta_T2 > len(t) or t[delta_T2 - 1] != t_last:
        raise ValueError("delta_T2 does not match t_last for this network")
    cd = c * delta
    tl = float(instance.t_last_inst)
    upto = bisect.bisect_right(t, instance.t_first, 0, delta_T2)
    before = bisect.bisect_left(range(delta_T2), tl, key=lambda p: float(t[p]) + cd)
    r = upto - before
    if r <= 0:
        raise ZeroCaptureProbability(
            f"instance {instance.edge_indices} has no admissible window start")
    return delta_T2 / r


# -- driver -------------------------------------------------------------------

class _Plan:
    """Per-run constants: start law, slice bounds and kernel weight parameters."""

    def __init__(self, network: TemporalNetwork, motif: TemporalMotif, cfg: EstimatorConfig):
        self.network = network
        self.motif = motif
        self.delta = float(cfg.delta)
        self.cd = cfg.c * cfg.delta
        t = network.timestamps
        if cfg.variant == "A":
            lo, hi = sampling_interval(network, motif.ell, cfg.c, cfg.delta)
            self.lo, self.hi = lo, hi
            self.mode = _kernels.WEIGHT_A
            self.wparams = np.array([lo, hi, self.cd, hi - lo], dtype=np.float64)
            self.t_pref = t[:0]
            self.tend_pref = np.empty(0, np.float64)
        else:
            _, count = edge_start_support(network, cfg.c, cfg.delta)
            self.count = count
            self.mode = _kernels.WEIGHT_E
            self.wparams = np.array([self.cd, float(count)], dtype=np.float64)
            self.t_pref = t[:count]
            self.tend_pref = t[:count].astype(np.float64) + self.cd
        self.variant = cfg.variant

    def windows(self, u: np.ndarray):
        t = self.network.timestamps
        if self.variant == "A":
            starts = self.lo + u * (self.hi - self.lo)
            ends = starts + self.cd
        else:
            pos = _start_positions(u, self.count)
            starts = self.t_pref[pos]
            ends = self.tend_pref[pos]
        los = np.searchsorted(t, starts, side="left").astype(np.int64)
        his = np.searchsorted(t, ends, side="right").astype(np.int64) - 1
        return los, his

    def window_values(self, los, his, workers: int) -> np.ndarray:
        m = self.network.edge_count
        keys = los * (m + 1) + his
        uniq, inverse = np.unique(keys, return_inverse=True)
        ulos = uniq // (m + 1)
        uhis = uniq % (m + 1)
        values = np.zeros(len(uniq), dtype=np.float64)
        net = self.network
        msrc, mdst = self.motif.arrays()
        args = (net.src, net.dst, net.timestamps, max(net.node_count, 1), msrc, mdst,
                self.motif.k, self.delta)

        def run(a, b):
            vals, bad = _kernels.window_sums(*args, ulos[a:b], uhis[a:b], self.mode,
                                             self.wparams, self.t_pref, self.tend_pref)
            values[a:b] = vals
            return bad

        if workers <= 1 or len(uniq) < 2:
            bad = run(0, len(uniq))
        else:
            cuts = np.linspace(0, len(uniq), 4 * workers + 1).astype(np.int64)
            spans = [(int(a), int(b)) for a, b in zip(cuts[:-1], cuts[1:]) if b > a]
            with ThreadPoolExecutor(max_workers=workers) as pool:
                bad = sum(pool.map(lambda ab: run(*ab), spans))
        if bad:
            raise ZeroCaptureProbability(f"{bad} sampled instance(s) had zero capture probability")
        return values[inverse.reshape(-1)]


def run_estimate(network: TemporalNetwork, motif: TemporalMotif,
                 config: EstimatorConfig) -> EstimateResult:
    """Estimate the number of delta-instances of ``motif`` by window sampling.

    Windows that coincide (same first and last edge) are enumerated once and
    their value reused; since the value of a window depends only on its edges
    this does not change any per-iteration estimate.  The per-iteration
    vector is identical for every ``config.workers``.
    """
    started = time.perf_counter()
    plan = _Plan(network, motif, config)
    s = config.s
    if config.budget_seconds is None:
        blocks = [(0, s)]
        deadline = None
    else:
        blocks = None
        deadline = started + config.budget_seconds

    chunks = []
    done = 0
    size = 64
    while done < s:
        if blocks is not None:
            a, b = blocks.pop(0)
        else:
            a, b = done, min(s, done + size)
            size = min(size * 2, 8192)
        u = iteration_uniforms(config.seed, a, b - a)
        los, his = plan.windows(u)
        chunks.append(plan.window_values(los, his, config.workers))
        done = b
        if deadline is not None and time.perf_counter() >= deadline:
            break

    per_iteration = np.concatenate(chunks)
    n = len(per_iteration)
    estimate = math.fsum(per_iteration.tolist()) / n
    variance = float(np.var(per_iteration, ddof=1)) if n > 1 else 0.0
    return EstimateResult(
        estimate=estimate,
        per_iteration=per_iteration,
        empirical_variance=variance,
        iterations=n,
        elapsed=time.perf_counter() - started,
        config=config,
    )


# -- exhaustive expectations (test oracles) ----------------------------------

def _window_sum(network, motif, delta, window, weight):
    total = []
    enumerate_instances(window, motif, delta, lambda u: total.append(weight(u)))
    return math.fsum(total)


def exhaustive_expectation_e(network: TemporalNetwork, motif: TemporalMotif,
                             delta: float, c: float) -> float:
    """Exact expectation of one edge-anchored iteration, by visiting every start.

    Uses the pure-Python enumeration path and :func:`weight_e`; meant for
    small networks.
    """
    t_last, count = edge_start_support(network, c, delta)
    cd = c * delta
    t = network.timestamps
    weight = lambda u: weight_e(u, network, c, delta, t_last, count)  # noqa: E731
    starts, mult = np.unique(t[:count], return_counts=True)
    terms = [
        k * _window_sum(network, motif, delta, slice_window(network, s.item(), cd), weight)
        for s, k in zip(starts, mult.tolist())
    ]
    return math.fsum(terms) / count


def exhaustive_expectation_a(network: TemporalNetwork, motif: TemporalMotif,
                             delta: float, c: float) -> float:
    """Exact expectation of one continuous-start iteration.

    The window content changes only where ``t_r`` crosses an edge timestamp
    or an edge timestamp minus ``c*delta``; the iteration value is integrated
    segment by segment over the sampling interval.
    """
    lo, hi = sampling_interval(network, motif.ell, c, delta)
    cd = c * delta
    t = network.timestamps.astype(np.float64)
    cuts = np.unique(np.concatenate([t, t - cd, [lo, hi]]))
    cuts = cuts[(cuts >= lo) & (cuts <= hi)]
    weight = lambda u: weight_a(u, c, delta, (lo, hi))  # noqa: E731
    terms = []
    for a, b in zip(cuts[:-1].tolist(), cuts[1:].tolist()):
        mid = 0.5 * (a + b)
        value = _window_sum(network, motif, delta, slice_window(network, mid, cd), weight)
        terms.append((b - a) * value)
    return math.fsum(terms) / (hi - lo)
