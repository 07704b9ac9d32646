"""Domain types shared by every other module.

A temporal network is stored as three parallel numpy arrays (source, target,
timestamp) sorted by timestamp, with ties kept in input order.  Everything
downstream (slicing, enumeration, weights) works on edge *positions* in this
sorted order.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable

import numpy as np

from .errors import (
    DegenerateInterval,
    DisconnectedMotif,
    EmptyMotif,
    InvalidConfig,
    NetworkTooSmall,
    SelfLoopEdge,
)

__all__ = [
    "TemporalEdge",
    "TemporalNetwork",
    "TemporalMotif",
    "DeltaInstance",
    "NetworkStats",
    "validate_motif",
    "compute_stats",
    "sampling_interval",
    "edge_start_support",
]


@dataclass(frozen=True)
class TemporalEdge:
    src: int
    dst: int
    timestamp: float
    index: int


def _readonly(arr):
    arr = np.ascontiguousarray(arr)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class TemporalNetwork:
    """Immutable, timestamp-sorted multiset of directed timestamped edges.

    Parameters
    ----------
    src, dst : ndarray of int64
        Dense node ids in ``[0, node_count)``.
    timestamps : ndarray of int64 or float64
        Non-decreasing edge timestamps.
    labels : tuple
        ``labels[i]`` is the original label of dense node ``i``.

    Use :meth:`from_edges` to build a network from unsorted labelled edges.
    """

    src: np.ndarray
    dst: np.ndarray
    timestamps: np.ndarray
    labels: tuple = ()
    _edges: list = field(default=None, init=False, repr=False)

    def __post_init__(self):
        src = _readonly(np.asarray(self.src, dtype=np.int64))
        dst = _readonly(np.asarray(self.dst, dtype=np.int64))
        ts = np.asarray(self.timestamps)
        if ts.dtype.kind not in "iuf":
            raise TypeError("timestamps must be numeric")
        ts = _readonly(ts.astype(np.int64 if ts.dtype.kind in "iu" else np.float64))
        if not (len(src) == len(dst) == len(ts)):
            raise ValueError("src, dst and timestamps must have equal length")
        if len(ts) and np.any(np.diff(ts) < 0):
            raise ValueError("timestamps must be sorted in non-decreasing order")
        if np.any(src == dst):
            raise ValueError("self-loops are not allowed in a temporal network")
        n = len(self.labels)
        if n == 0 and len(src):
            n = int(max(src.max(), dst.max())) + 1
            object.__setattr__(self, "labels", tuple(range(n)))
        if len(src) and (min(src.min(), dst.min()) < 0 or max(src.max(), dst.max()) >= n):
            raise ValueError("node id outside [0, node_count)")
        object.__setattr__(self, "src", src)
        object.__setattr__(self, "dst", dst)
        object.__setattr__(self, "timestamps", ts)
        object.__setattr__(self, "labels", tuple(self.labels))

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[Hashable, Hashable, float]]) -> "TemporalNetwork":
        """Build a network from ``(src_label, dst_label, timestamp)`` triples.

        Node ids are assigned in order of first appearance in the input; the
        sort by timestamp is stable.
        """
        node_map: dict = {}
        src, dst, ts = [], [], []
        for u, v, t in edges:
            for lab in (u, v):
                if lab not in node_map:
                    node_map[lab] = len(node_map)
            src.append(node_map[u])
            dst.append(node_map[v])
            ts.append(t)
        if all(isinstance(t, (int, np.integer)) for t in ts):
            t_arr = np.asarray(ts, dtype=np.int64)
        else:
            t_arr = np.asarray(ts, dtype=np.float64)
        order = np.argsort(t_arr, kind="stable")
        return cls(
            np.asarray(src, dtype=np.int64)[order],
            np.asarray(dst, dtype=np.int64)[order],
            t_arr[order],
            tuple(node_map),
        )

    @property
    def node_count(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return len(self.timestamps)

    @property
    def node_map(self) -> dict:
        return {lab: i for i, lab in enumerate(self.labels)}

    @property
    def edges(self) -> list[TemporalEdge]:
        if self._edges is None:
            object.__setattr__(self, "_edges", [
                TemporalEdge(int(s), int(d), t.item(), i)
                for i, (s, d, t) in enumerate(zip(self.src, self.dst, self.timestamps))
            ])
        return self._edges

    def __len__(self):
        return self.edge_count

    def __repr__(self):
        return f"TemporalNetwork(n={self.node_count}, m={self.edge_count})"


@dataclass(frozen=True)
class TemporalMotif:
    """Directed, weakly connected multigraph with a total order on its edges.

    ``edges`` lists ``(x, y)`` pairs of motif node labels in ``[0, k)``, in
    temporal order.  Construct from arbitrary labels with :func:`validate_motif`.
    """

    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        edges = tuple((int(x), int(y)) for x, y in self.edges)
        object.__setattr__(self, "edges", edges)
        if not edges:
            raise EmptyMotif("a motif needs at least one edge")
        for i, (x, y) in enumerate(edges):
            if x == y:
                raise SelfLoopEdge(f"motif edge {i} is a self-loop ({x}, {y})")
        labels = {v for e in edges for v in e}
        if labels != set(range(len(labels))):
            raise ValueError("motif node labels must form the range [0, k)")
        if not _weakly_connected(len(labels), edges):
            raise DisconnectedMotif("motif multigraph is not weakly connected")
        object.__setattr__(self, "_k", len(labels))
        arr = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        # cached kernel inputs; the dataclass is frozen so they never go stale
        object.__setattr__(self, "_arrays", (_readonly(arr[:, 0].copy()), _readonly(arr[:, 1].copy())))

    @property
    def k(self) -> int:
        return self._k

    @property
    def ell(self) -> int:
        return len(self.edges)

    def arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """Source and target labels as read-only int64 arrays."""
        return self._arrays


def _weakly_connected(k: int, edges) -> bool:
    parent = list(range(k))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for x, y in edges:
        parent[find(x)] = find(y)
    return len({find(v) for v in range(k)}) == 1


def validate_motif(motif) -> TemporalMotif:
    """Validate a motif and compact its node labels to ``[0, k)``.

    Accepts a :class:`TemporalMotif` or any sequence of ``(x, y)`` pairs with
    hashable labels.  Labels are numbered by first appearance.

    Raises
    ------
    EmptyMotif, SelfLoopEdge, DisconnectedMotif
    """
    pairs = motif.edges if isinstance(motif, TemporalMotif) else list(motif)
    if not pairs:
        raise EmptyMotif("a motif needs at least one edge")
    compact: dict = {}
    out = []
    for i, pair in enumerate(pairs):
        x, y = pair
        if x == y:
            raise SelfLoopEdge(f"motif edge {i} is a self-loop ({x!r}, {y!r})")
        for lab in (x, y):
            compact.setdefault(lab, len(compact))
        out.append((compact[x], compact[y]))
    return TemporalMotif(tuple(out))


@dataclass(frozen=True)
class DeltaInstance:
    """A matched subsequence of network edges.

    ``edge_indices[i]`` is the network edge matched to motif edge ``i``.
    """

    edge_indices: tuple[int, ...]
    t_first: float
    t_last_inst: float

    @property
    def span(self):
        return self.t_last_inst - self.t_first


@dataclass(frozen=True)
class NetworkStats:
    timespan: float
    kappa_hat: int
    m_hat: int
    delta_T1: float
    delta_T2: int
    t_last_start: float

    def to_dict(self) -> dict:
        return {
            "timespan": self.timespan,
            "kappa_hat": self.kappa_hat,
            "m_hat": self.m_hat,
            "delta_T1": self.delta_T1,
            "delta_T2": self.delta_T2,
            "t_last_start": self.t_last_start,
        }


def max_window_count(timestamps: np.ndarray, length: float) -> int:
    """Largest number of edges in ``[t, t + length]`` over edge timestamps ``t``."""
    if len(timestamps) == 0:
        return 0
    t = np.asarray(timestamps)
    ends = np.searchsorted(t, t.astype(np.float64) + length, side="right")
    starts = np.searchsorted(t, t, side="left")
    return int((ends - starts).max())


def sampling_interval(network: TemporalNetwork, ell: int, c: float, delta: float) -> tuple[float, float]:
    """Interval from which uniformly-drawn window starts are taken.

    Nominally ``[t_ell - c*delta, t_{m-ell}]`` (1-based positions).  When the
    last ``ell`` edges could form an instance that no start in that interval
    captures, i.e. ``t_m - t_{m-ell} >= c*delta``, the upper end is moved to
    ``t_{m-ell+1}`` so every instance keeps a positive capture length.
    """
    m = network.edge_count
    if ell < 1:
        raise ValueError("ell must be positive")
    if m - ell < 1:
        raise NetworkTooSmall(f"need more than {ell} edges, network has {m}")
    t = network.timestamps
    cd = c * delta
    lo = float(t[ell - 1]) - cd
    hi = float(t[m - ell - 1])
    if float(t[m - 1]) - hi >= cd:
        hi = float(t[m - ell])
    if hi <= lo:
        raise DegenerateInterval(f"window-start interval [{lo}, {hi}] is empty")
    return lo, hi


def edge_start_support(network: TemporalNetwork, c: float, delta: float) -> tuple[float, int]:
    """Return ``(t_last, count)`` for edge-anchored window starts.

    ``t_last`` is the smallest edge timestamp ``>= t_m - c*delta``; ``count``
    is the number of edge positions with timestamp ``<= t_last``.
    """
    m = network.edge_count
    if m < 1:
        raise NetworkTooSmall("network has no edges")
    t = network.timestamps
    idx = int(np.searchsorted(t, float(t[-1]) - c * delta, side="left"))
    idx = min(idx, m - 1)
    t_last = t[idx].item()
    count = int(np.searchsorted(t, t_last, side="right"))
    return t_last, count


def compute_stats(network: TemporalNetwork, motif_ell: int, c: float, delta: float) -> NetworkStats:
    """Summary quantities used to size sampling budgets.

    Raises :class:`NetworkTooSmall` if ``m < 2 * motif_ell``.  ``delta_T1`` is
    reported as 0 when the continuous window-start interval is empty (for
    instance ``delta = 0`` on a network with heavy ties).
    """
    if not c > 1:
        raise InvalidConfig(f"c must be > 1, got {c}")
    if not delta >= 0:
        raise InvalidConfig(f"delta must be >= 0, got {delta}")
    m = network.edge_count
    if m < 1 or m < 2 * motif_ell:
        raise NetworkTooSmall(f"need at least {2 * motif_ell} edges, network has {m}")
    t = network.timestamps
    try:
        lo, hi = sampling_interval(network, motif_ell, c, delta)
    except DegenerateInterval:
        # continuous starts are unusable here; report an empty range
        lo = hi = 0.0
    t_last, d2 = edge_start_support(network, c, delta)
    return NetworkStats(
        timespan=(t[-1] - t[0]).item(),
        kappa_hat=max_window_count(t, delta),
        m_hat=max_window_count(t, c * delta),
        delta_T1=hi - lo,
        delta_T2=d2,
        t_last_start=t_last,
    )
