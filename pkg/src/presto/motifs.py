"""Named motifs and exhaustive generation of small motifs."""
from __future__ import annotations

from functools import lru_cache

from .errors import MotifError
from .model import TemporalMotif, validate_motif

__all__ = ["NAMED_MOTIFS", "named_motif", "connected_motifs"]

NAMED_MOTIFS = {
    "edge": [(0, 1)],
    "repeat": [(0, 1), (0, 1)],
    "ping-pong": [(0, 1), (1, 0)],
    "path-2": [(0, 1), (1, 2)],
    "out-star-2": [(0, 1), (0, 2)],
    "in-star-2": [(1, 0), (2, 0)],
    "cycle-3": [(0, 1), (1, 2), (2, 0)],
    "feed-forward": [(0, 1), (1, 2), (0, 2)],
    "path-3": [(0, 1), (1, 2), (2, 3)],
    "out-star-3": [(0, 1), (0, 2), (0, 3)],
    "in-star-3": [(1, 0), (2, 0), (3, 0)],
    "bifan": [(0, 2), (1, 2), (0, 3), (1, 3)],
    "cycle-4": [(0, 1), (1, 2), (2, 3), (3, 0)],
    "path-4": [(0, 1), (1, 2), (2, 3), (3, 4)],
    "triangle-tail": [(0, 1), (1, 2), (2, 0), (2, 3)],
    "diamond": [(0, 1), (0, 2), (1, 3), (2, 3)],
}


def named_motif(name: str) -> TemporalMotif:
    try:
        return validate_motif(NAMED_MOTIFS[name])
    except KeyError:
        raise KeyError(f"unknown motif {name!r}; known: {sorted(NAMED_MOTIFS)}") from None


@lru_cache(maxsize=None)
def connected_motifs(ell: int) -> tuple[TemporalMotif, ...]:
    """Every weakly connected ``ell``-edge motif, one per labelling class.

    Labels are numbered by first appearance, so two motifs differing only by
    a renaming of nodes appear once.  There are 1, 6, 68 and 1240 motifs for
    ``ell`` = 1..4.
    """
    found = []

    def extend(seq, used):
        if len(seq) == 2 * ell:
            pairs = list(zip(seq[0::2], seq[1::2]))
            try:
                found.append(validate_motif(pairs))
            except MotifError:
                pass
            return
        for lab in range(used + 1):
            if len(seq) % 2 == 1 and lab == seq[-1]:
                continue
            extend(seq + [lab], max(used, lab + 1))

    extend([], 0)
    return tuple(found)
