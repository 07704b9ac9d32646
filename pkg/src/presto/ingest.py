"""Reading networks and motifs from plain-text edge lists.

Network files hold one edge per line, ``src dst timestamp``, separated by
whitespace or commas.  Motif files hold one ``x y`` pair per line in temporal
order.  Lines starting with ``#`` or ``%`` are comments.
"""
from __future__ import annotations

import json
import logging
import math
import os
import re
from dataclasses import asdict, dataclass
from typing import IO, Union

from .errors import EmptyNetwork, MalformedLine
from .model import TemporalMotif, TemporalNetwork, validate_motif

__all__ = ["IngestReport", "parse_network", "parse_motif", "write_network", "write_motif"]

log = logging.getLogger(__name__)

Source = Union[str, os.PathLike, IO[str]]

_SPLIT = re.compile(r"[,\s]+")
_INT = re.compile(r"[+-]?\d+\Z")


@dataclass
class IngestReport:
    lines_read: int = 0
    edges_kept: int = 0
    self_loops_dropped: int = 0
    malformed_lines: int = 0
    distinct_nodes: int = 0

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _open(source: Source):
    if isinstance(source, (str, os.PathLike)):
        return open(source, "r", encoding="utf-8"), True
    return source, False


def _records(stream):
    for line_no, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line[0] in "#%":
            continue
        yield line_no, [f for f in _SPLIT.split(line) if f]


def _parse_time(field: str):
    if _INT.match(field):
        return int(field)
    value = float(field)
    if not math.isfinite(value):
        raise ValueError(f"non-finite timestamp {field!r}")
    return value


def parse_network(source: Source, mode: str = "strict") -> tuple[TemporalNetwork, IngestReport]:
    """Parse an edge list into a sorted :class:`TemporalNetwork`.

    Parameters
    ----------
    source : path or text stream
    mode : {"strict", "lenient"}
        In strict mode the first malformed line raises :class:`MalformedLine`;
        in lenient mode such lines are skipped and counted.  Self-loops are
        dropped (with a logged warning) in both modes.

    Returns
    -------
    network, report
    """
    if mode not in ("strict", "lenient"):
        raise ValueError(f"unknown mode {mode!r}")
    strict = mode == "strict"
    report = IngestReport()
    edges = []
    kinds = set()
    stream, owned = _open(source)
    try:
        for line_no, fields in _records(stream):
            report.lines_read += 1
            try:
                if len(fields) != 3:
                    raise ValueError(f"expected 3 fields, got {len(fields)}")
                t = _parse_time(fields[2])
            except ValueError as exc:
                if strict:
                    raise MalformedLine(line_no, str(exc)) from None
                report.malformed_lines += 1
                continue
            kind = type(t)
            if strict and kinds and kind not in kinds:
                raise MalformedLine(line_no, "mixed integer and real timestamps")
            kinds.add(kind)
            u, v = fields[0], fields[1]
            if u == v:
                report.self_loops_dropped += 1
                continue
            edges.append((u, v, t))
    finally:
        if owned:
            stream.close()
    if report.self_loops_dropped:
        log.warning("dropped %d self-loop edge(s)", report.self_loops_dropped)
    if not edges:
        raise EmptyNetwork("no edges found in input")
    if len(kinds) > 1:
        edges = [(u, v, float(t)) for u, v, t in edges]
    network = TemporalNetwork.from_edges(edges)
    report.edges_kept = network.edge_count
    report.distinct_nodes = network.node_count
    return network, report


def parse_motif(source: Source) -> TemporalMotif:
    """Parse a motif file (``x y`` per line, in temporal order)."""
    pairs = []
    stream, owned = _open(source)
    try:
        for line_no, fields in _records(stream):
            if len(fields) != 2:
                raise MalformedLine(line_no, f"expected 2 fields, got {len(fields)}")
            pairs.append((fields[0], fields[1]))
    finally:
        if owned:
            stream.close()
    return validate_motif(pairs)


def write_network(network: TemporalNetwork, target: Source) -> None:
    """Write ``network`` in the format read by :func:`parse_network`."""
    labels = network.labels
    lines = [
        f"{labels[s]} {labels[d]} {t!r}\n"
        for s, d, t in zip(network.src.tolist(), network.dst.tolist(),
                           network.timestamps.tolist())
    ]
    if isinstance(target, (str, os.PathLike)):
        with open(target, "w", encoding="utf-8") as fh:
            fh.writelines(lines)
    else:
        target.writelines(lines)


def write_motif(motif: TemporalMotif, target: Source) -> None:
    text = "".join(f"{x} {y}\n" for x, y in motif.edges)
    if isinstance(target, (str, os.PathLike)):
        with open(target, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        target.write(text)
