"""Random temporal networks for experiments and benchmarks."""
from __future__ import annotations

import numpy as np

from .model import TemporalNetwork

__all__ = ["uniform_network"]


def uniform_network(n_nodes: int, n_edges: int, timespan: int, seed: int = 0) -> TemporalNetwork:
    """Edges with uniformly random endpoints (no self-loops) and integer times.

    Timestamps are drawn uniformly from ``0 .. timespan``, so ties are common
    whenever ``n_edges`` is comparable to ``timespan``.
    """
    if n_nodes < 2 or n_edges < 1 or timespan < 0:
        raise ValueError("need n_nodes >= 2, n_edges >= 1 and timespan >= 0")
    rng = np.random.default_rng(seed)
    src = rng.integers(0, n_nodes, size=n_edges)
    dst = (src + rng.integers(1, n_nodes, size=n_edges)) % n_nodes
    t = np.sort(rng.integers(0, timespan + 1, size=n_edges))
    return TemporalNetwork(src, dst, t, tuple(range(n_nodes)))
