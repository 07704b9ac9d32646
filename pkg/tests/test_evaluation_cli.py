import csv
import io
import json

import pytest

from presto import RunRecord, mape_report
from presto.cli import main

NETWORK = "a b 1\nb c 2\nc a 3\na b 10\nb c 11\nc a 20\n"
TRIANGLE = "u v\nv w\nw u\n"


@pytest.fixture
def files(tmp_path):
    net = tmp_path / "net.txt"
    net.write_text(NETWORK)
    motif = tmp_path / "tri.txt"
    motif.write_text(TRIANGLE)
    return str(net), str(motif)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_mape_example():
    report = mape_report(100, [90, 110, 100])
    assert report.mape == pytest.approx(20 / 3)


def test_trimming_drops_best_and_worst():
    estimates = [100, 101, 102, 103, 104, 105, 106, 107, 108, 150]
    report = mape_report(100, estimates, trim=True)
    assert report.mape == pytest.approx(sum(range(1, 9)) / 8)
    assert report.trimming


def test_mape_zero_exact():
    with pytest.raises(ValueError):
        mape_report(0, [1.0])


def test_count(capsys, files):
    net, motif = files
    code, out, _ = run(capsys, "count", "--network", net, "--motif", motif, "--delta", "2")
    assert code == 0
    record = RunRecord.from_dict(json.loads(out))
    assert record.exact_count == 1
    assert record.command.startswith("presto count")


def test_estimate_is_deterministic(capsys, files):
    net, motif = files
    argv = ["estimate", "--network", net, "--motif", motif, "--delta", "2",
            "--samples", "200", "--seed", "9", "--variant", "a"]
    first = json.loads(run(capsys, *argv)[1])
    second = json.loads(run(capsys, *argv)[1])
    first.pop("elapsed"), second.pop("elapsed")
    assert first == second
    assert first["variant"] == "A" and first["s"] == 200


def test_estimate_from_goal(capsys, files):
    net, motif = files
    code, out, _ = run(capsys, "estimate", "--network", net, "--motif", motif, "--delta", "2",
                       "--c", "5", "--epsilon", "0.5", "--eta", "0.1")
    assert code == 0
    # four admissible edge starts -> ceil(3 / h(0.5) * ln 20)
    assert json.loads(out)["s"] == 84


def test_csv_output(capsys, files, tmp_path):
    net, motif = files
    target = tmp_path / "out.csv"
    code, _, _ = run(capsys, "evaluate", "--network", net, "--motif", motif, "--delta", "2",
                     "--samples", "50", "--runs", "5", "--trim", "--format", "csv",
                     "--output", str(target))
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(target.read_text())))
    assert len(rows) == 1 and len(json.loads(rows[0]["estimates"])) == 5


def test_stats(capsys, files):
    net, _ = files
    code, out, _ = run(capsys, "stats", "--network", net, "--ell", "3", "--delta", "8")
    assert code == 0
    assert json.loads(out)["delta_T2"] == 4


def test_workers_env(capsys, files, monkeypatch):
    net, motif = files
    monkeypatch.setenv("PRESTO_WORKERS", "3")
    code, out, _ = run(capsys, "count", "--network", net, "--motif", motif, "--delta", "2")
    assert code == 0 and json.loads(out)["workers"] == 3
    monkeypatch.setenv("PRESTO_WORKERS", "zero")
    assert run(capsys, "count", "--network", net, "--motif", motif, "--delta", "2")[0] == 2


@pytest.mark.parametrize("argv, expected", [
    (["count"], 2),
    (["estimate", "--samples", "10", "--epsilon", "0.5", "--eta", "0.1"], 2),
    (["estimate", "--samples", "10", "--c", "1"], 2),
    (["evaluate", "--samples", "10", "--runs", "2", "--trim"], 2),
])
def test_usage_errors(capsys, files, argv, expected):
    net, motif = files
    full = argv if argv == ["count"] else [argv[0], "--network", net, "--motif", motif,
                                           "--delta", "2", *argv[1:]]
    assert run(capsys, *full)[0] == expected


def test_input_errors(capsys, files, tmp_path):
    net, motif = files
    bad = tmp_path / "bad.txt"
    bad.write_text("a b\n")
    assert run(capsys, "count", "--network", str(bad), "--motif", motif, "--delta", "1")[0] == 3
    assert run(capsys, "count", "--network", str(tmp_path / "missing"), "--motif", motif,
               "--delta", "1")[0] == 3
    disconnected = tmp_path / "m.txt"
    disconnected.write_text("a b\nc d\n")
    assert run(capsys, "count", "--network", net, "--motif", str(disconnected),
               "--delta", "1")[0] == 3


def test_runtime_error(capsys, tmp_path):
    net = tmp_path / "n.txt"
    net.write_text("a b 1\nb c 2\n")
    motif = tmp_path / "m.txt"
    motif.write_text("x y\ny z\n")
    # two edges cannot host a window-start interval for a 2-edge motif
    code, _, err = run(capsys, "estimate", "--network", str(net), "--motif", str(motif),
                       "--delta", "1", "--samples", "5", "--variant", "a")
    assert code == 4 and "error" in err


def test_mape_recomputable(capsys, files):
    net, motif = files
    code, out, _ = run(capsys, "evaluate", "--network", net, "--motif", motif, "--delta", "2",
                       "--samples", "30", "--runs", "6")
    report = json.loads(out)
    errors = [abs(e - report["exact"]) / report["exact"] * 100 for e in report["estimates"]]
    assert report["mape"] == sum(errors) / len(errors)


def test_two_path_with_unbounded_delta(capsys, tmp_path):
    edges = [("a", "b"), ("b", "c"), ("b", "d"), ("c", "a"), ("a", "b"), ("d", "c")]
    net = tmp_path / "n.txt"
    net.write_text("".join(f"{u} {v} {t}\n" for t, (u, v) in enumerate(edges)))
    motif = tmp_path / "m.txt"
    motif.write_text("x y\ny z\n")
    # ordered pairs (i < j) with dst_i == src_j and src_i != dst_j
    expect = sum(1 for i in range(6) for j in range(i + 1, 6)
                 if edges[i][1] == edges[j][0] and edges[i][0] != edges[j][1])
    code, out, _ = run(capsys, "count", "--network", str(net), "--motif", str(motif),
                       "--delta", "100")
    assert json.loads(out)["exact_count"] == expect


def test_goal_sample_size_echoed(capsys, tmp_path):
    # 120 distinct times 0..119; c*delta = 19 admits starts 0..100, i.e. 101 of them
    net = tmp_path / "n.txt"
    net.write_text("".join(f"{i % 3} {(i + 1) % 3} {i}\n" for i in range(120)))
    motif = tmp_path / "m.txt"
    motif.write_text("x y\ny z\n")
    code, out, _ = run(capsys, "estimate", "--network", str(net), "--motif", str(motif),
                       "--delta", "10", "--c", "1.9", "--variant", "e",
                       "--epsilon", "0.5", "--eta", "0.1")
    assert code == 0 and json.loads(out)["s"] == 2769


def test_full_window_single_sample_is_exact(capsys, files):
    net, motif = files
    code, out, _ = run(capsys, "estimate", "--network", net, "--motif", motif, "--delta", "5",
                       "--c", "4", "--samples", "1")
    assert json.loads(out)["estimate"] == 1.0


def test_stats_zero_delta(capsys, tmp_path):
    net = tmp_path / "n.txt"
    net.write_text("a b 1\nb c 1\nc a 1\na b 1\n")
    code, out, _ = run(capsys, "stats", "--network", str(net), "--ell", "2", "--delta", "0")
    stats = json.loads(out)
    assert code == 0 and stats["kappa_hat"] == 4 and stats["delta_T1"] == 0


def test_stats_empty_file(capsys, tmp_path):
    net = tmp_path / "n.txt"
    net.write_text("")
    assert run(capsys, "stats", "--network", str(net), "--ell", "2", "--delta", "1")[0] == 3
