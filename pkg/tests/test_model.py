import numpy as np
import pytest

from presto import TemporalNetwork, compute_stats, validate_motif
from presto.errors import DisconnectedMotif, EmptyMotif, InvalidConfig, NetworkTooSmall, SelfLoopEdge
from presto.model import edge_start_support, max_window_count, sampling_interval


def test_triangle_motif():
    motif = validate_motif([(0, 1), (1, 2), (2, 0)])
    assert (motif.k, motif.ell) == (3, 3)


@pytest.mark.parametrize("pairs, exc", [
    ([(0, 1), (2, 3)], DisconnectedMotif),
    ([(0, 0)], SelfLoopEdge),
    ([], EmptyMotif),
])
def test_invalid_motifs(pairs, exc):
    with pytest.raises(exc):
        validate_motif(pairs)


def test_labels_compacted_by_first_appearance():
    motif = validate_motif([("x", "q"), ("q", "z")])
    assert motif.edges == ((0, 1), (1, 2))


def test_from_edges_sorts_stably():
    net = TemporalNetwork.from_edges([("a", "b", 3), ("a", "c", 1), ("c", "b", 3)])
    assert net.timestamps.tolist() == [1, 3, 3]
    labels = [(net.labels[e.src], net.labels[e.dst]) for e in net.edges]
    assert labels == [("a", "c"), ("a", "b"), ("c", "b")]
    assert net.node_count == 3 and net.edge_count == 3


def test_arrays_are_read_only(six_edges):
    with pytest.raises(ValueError):
        six_edges.timestamps[0] = 5


def _net(ts):
    return TemporalNetwork.from_edges([(i % 3, (i + 1) % 3, t) for i, t in enumerate(ts)])


def test_stats_example():
    net = _net([1, 2, 3, 10, 11, 20])
    stats = compute_stats(net, 3, 5.0, 2.0)
    assert stats.kappa_hat == 3
    assert stats.timespan == 19
    t_last, count = edge_start_support(net, 5.0, 2.0)
    assert (t_last, count) == (10, 4)
    assert (stats.t_last_start, stats.delta_T2) == (10, 4)


def test_single_timestamp_kappa_is_m():
    net = _net([7] * 8)
    assert max_window_count(net.timestamps, 0.0) == 8


def test_kappa_matches_sweep(rng):
    for _ in range(50):
        ts = np.sort(rng.integers(0, 30, size=int(rng.integers(1, 25))))
        length = float(rng.integers(0, 10))
        sweep = max(int(np.sum((ts >= a) & (ts <= a + length))) for a in ts)
        assert max_window_count(ts, length) == sweep


def test_sampling_interval_example():
    net = _net(range(1, 21))
    lo, hi = sampling_interval(net, 3, 5.0, 2.0)
    assert (lo, hi) == (-7, 17)
    assert hi - lo == 24


def test_sampling_interval_extension_when_tail_is_wide():
    # last three edges span 10 >= c*delta = 4: the upper end moves to t_{m-l+1}
    net = _net([0, 1, 2, 3, 13])
    lo, hi = sampling_interval(net, 2, 2.0, 2.0)
    assert lo == 1 - 4
    assert hi == 3


def test_network_too_small():
    with pytest.raises(NetworkTooSmall):
        compute_stats(_net([1, 2, 3]), 2, 2.0, 1.0)


def test_bad_c_rejected():
    with pytest.raises(InvalidConfig):
        compute_stats(_net(range(10)), 2, 1.0, 1.0)
