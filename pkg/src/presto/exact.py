"""Exact enumeration of delta-instances.

:func:`count_instances` and :func:`enumerate_instances` run a chronological
backtracking search: slice edges are scanned in index order and assigned to
motif edges ``1..ell`` while a partial node bijection is maintained, and any
branch whose current edge lies more than ``delta`` after the first matched
edge is cut.  :func:`brute_force_count` is a deliberately naive oracle used by
the test-suite.
"""
from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import _kernels
from .errors import CountOverflow
from .model import DeltaInstance, TemporalMotif, TemporalNetwork

__all__ = [
    "EdgeSlice",
    "count_instances",
    "enumerate_instances",
    "brute_force_count",
    "iter_brute_force",
    "is_delta_instance",
]

UINT64_MAX = 2**64 - 1


@dataclass(frozen=True)
class EdgeSlice:
    """Contiguous block of edge positions ``lo..hi`` (inclusive) of a network."""

    network: TemporalNetwork
    lo: int
    hi: int

    def __post_init__(self):
        m = self.network.edge_count
        lo, hi = int(self.lo), int(self.hi)
        if lo < 0 or hi >= m or lo > hi + 1:
            raise ValueError(f"invalid slice [{lo}, {hi}] for m={m}")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def full(cls, network: TemporalNetwork) -> "EdgeSlice":
        return cls(network, 0, network.edge_count - 1)

    def __len__(self):
        return self.hi - self.lo + 1

    def contains(self, other: "EdgeSlice") -> bool:
        return len(other) == 0 or (self.lo <= other.lo and other.hi <= self.hi)


def _args(network: TemporalNetwork, motif: TemporalMotif):
    msrc, mdst = motif.arrays()
    return (network.src, network.dst, network.timestamps, max(network.node_count, 1),
            msrc, mdst, motif.k)


def _check_total(total: int) -> int:
    if total > UINT64_MAX:
        raise CountOverflow(f"instance count {total} does not fit in 64 bits")
    return total


def count_instances(slice_: EdgeSlice, motif: TemporalMotif, delta: float,
                    workers: int = 1) -> int:
    """Number of delta-instances of ``motif`` whose edges all lie in ``slice_``.

    With ``workers > 1`` the candidates for the first motif edge are split
    into contiguous blocks that are searched concurrently.
    """
    if len(slice_) < motif.ell:
        return 0
    src, dst, t, n, msrc, mdst, k = _args(slice_.network, motif)
    delta = float(delta)
    lo, hi = slice_.lo, slice_.hi
    if workers <= 1:
        return _check_total(int(_kernels.count_range(src, dst, t, n, msrc, mdst, k,
                                                     delta, lo, hi, hi)))
    # more blocks than workers evens out skewed edge densities
    bounds = np.linspace(lo, hi + 1, 4 * workers + 1).astype(np.int64)
    blocks = [(int(a), int(b) - 1) for a, b in zip(bounds[:-1], bounds[1:]) if b > a]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(lambda ab: int(_kernels.count_range(
            src, dst, t, n, msrc, mdst, k, delta, ab[0], ab[1], hi)), blocks)
        return _check_total(sum(parts))


def enumerate_instances(slice_: EdgeSlice, motif: TemporalMotif, delta: float,
                        sink: Callable[[DeltaInstance], object]) -> int:
    """Call ``sink`` once per delta-instance in ``slice_``; return the count.

    Instances are produced in lexicographic order of their edge positions.
    """
    total = count_instances(slice_, motif, delta)
    if total == 0:
        return 0
    src, dst, t, n, msrc, mdst, k = _args(slice_.network, motif)
    rows = _kernels.collect_range(src, dst, t, n, msrc, mdst, k, float(delta),
                                  slice_.lo, slice_.hi, total)
    ts = t.tolist()
    for row in rows.tolist():
        sink(DeltaInstance(tuple(row), ts[row[0]], ts[row[-1]]))
    return len(rows)


def is_delta_instance(network: TemporalNetwork, motif: TemporalMotif,
                      indices, delta: float) -> bool:
    """Check the instance conditions directly for a tuple of edge positions."""
    if len(indices) != motif.ell:
        return False
    if any(b <= a for a, b in zip(indices, indices[1:])):
        return False
    ts = network.timestamps
    if ts[indices[-1]] - ts[indices[0]] > delta:
        return False
    fwd: dict = {}
    back: dict = {}
    for (mx, my), e in zip(motif.edges, indices):
        for net_node, mot_node in ((int(network.src[e]), mx), (int(network.dst[e]), my)):
            if fwd.setdefault(net_node, mot_node) != mot_node:
                return False
            if back.setdefault(mot_node, net_node) != net_node:
                return False
    return True


def iter_brute_force(network: TemporalNetwork, motif: TemporalMotif, delta: float):
    """Yield every increasing ``ell``-tuple of edge positions that is an instance."""
    ell = motif.ell
    ts = network.timestamps.tolist()
    src = network.src.tolist()
    dst = network.dst.tolist()
    medges = motif.edges
    for combo in itertools.combinations(range(len(ts)), ell):
        if ts[combo[-1]] - ts[combo[0]] > delta:
            continue
        fwd: dict = {}
        back: dict = {}
        ok = True
        for (mx, my), e in zip(medges, combo):
            u, v = src[e], dst[e]
            if fwd.setdefault(u, mx) != mx or back.setdefault(mx, u) != u:
                ok = False
                break
            if fwd.setdefault(v, my) != my or back.setdefault(my, v) != v:
                ok = False
                break
        if ok:
            yield combo


def brute_force_count(network: TemporalNetwork, motif: TemporalMotif, delta: float) -> int:
    """Count instances by checking every increasing ``ell``-tuple of edges.

    Exponential in ``ell``; intended for networks of a few dozen edges.
    """
    if math.isnan(delta):
        raise ValueError("delta is NaN")
    return sum(1 for _ in iter_brute_force(network, motif, delta))
