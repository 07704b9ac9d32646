"""Compiled inner loops.

One chronological backtracking search serves exact counting, instance
collection and the two weighted window sums; ``mode`` selects what happens at
each completed match.  All kernels release the GIL so a thread pool can run
them concurrently.
"""
import numpy as np
from numba import njit

COUNT = 0
COLLECT = 1
WEIGHT_A = 2
WEIGHT_E = 3


@njit(cache=True, nogil=True)
def search(src, dst, t, msrc, mdst, delta, first_lo, first_hi, hi,
           mode, out, wparams, t_pref, tend_pref, net2mot, mot2net):
    """Match motif edges to slice edges in index order.

    Edges ``first_lo..first_hi`` are tried as the first match; later matches
    are drawn from indices up to ``hi``.  ``net2mot``/``mot2net`` must be all
    ``-1`` on entry and are restored on exit.

    Returns ``(count, weight_sum, zero_capture)``.
    """
    ell = msrc.shape[0]
    pos = np.empty(ell, np.int64)
    nxt = np.empty(ell, np.int64)
    new_a = np.zeros(ell, np.bool_)
    new_b = np.zeros(ell, np.bool_)
    count = 0
    wsum = 0.0
    bad = 0

    for first in range(first_lo, first_hi + 1):
        t0 = t[first]
        a0 = msrc[0]
        b0 = mdst[0]
        x0 = src[first]
        y0 = dst[first]
        pos[0] = first
        d = 0
        if ell > 1:
            mot2net[a0] = x0
            net2mot[x0] = a0
            mot2net[b0] = y0
            net2mot[y0] = b0
            d = 1
            nxt[1] = first + 1
        while True:
            # find a candidate for motif edge d (depth 0 is fixed to `first`)
            if d == 0:
                found = first
            else:
                a = msrc[d]
                b = mdst[d]
                ma = mot2net[a]
                mb = mot2net[b]
                found = -1
                j = nxt[d]
                while j <= hi:
                    if t[j] - t0 > delta:
                        break
                    x = src[j]
                    y = dst[j]
                    ok = True
                    if ma >= 0:
                        if ma != x:
                            ok = False
                    elif net2mot[x] >= 0:
                        ok = False
                    if ok:
                        if mb >= 0:
                            if mb != y:
                                ok = False
                        elif net2mot[y] >= 0:
                            ok = False
                    if ok:
                        found = j
                        break
                    j += 1
                if found < 0:
                    d -= 1
                    if d == 0:
                        break
                    # undo bindings made at depth d, resume scanning after it
                    if new_a[d]:
                        net2mot[mot2net[msrc[d]]] = -1
                        mot2net[msrc[d]] = -1
                    if new_b[d]:
                        net2mot[mot2net[mdst[d]]] = -1
                        mot2net[mdst[d]] = -1
                    continue
                pos[d] = found
                nxt[d] = found + 1

            if d == ell - 1:
                # complete match
                if mode == COUNT:
                    count += 1
                elif mode == COLLECT:
                    for i in range(ell):
                        out[count, i] = pos[i]
                    count += 1
                else:
                    count += 1
                    tf = np.float64(t0)
                    tl = np.float64(t[found])
                    if mode == WEIGHT_A:
                        lo_int = wparams[0]
                        hi_int = wparams[1]
                        cd = wparams[2]
                        total = wparams[3]
                        upper = tf if tf < hi_int else hi_int
                        lower = tl - cd
                        if lower < lo_int:
                            lower = lo_int
                        length = upper - lower
                        if length > 0.0:
                            wsum += total / length
                        else:
                            bad += 1
                    else:
                        n_starts = wparams[1]
                        r = (np.searchsorted(t_pref, t0, side="right")
                             - np.searchsorted(tend_pref, tl, side="left"))
                        if r > 0:
                            wsum += n_starts / r
                        else:
                            bad += 1
                if d == 0:
                    break
                continue

            # bind motif nodes of edge d and descend
            a = msrc[d]
            b = mdst[d]
            if mot2net[a] < 0:
                mot2net[a] = src[found]
                net2mot[src[found]] = a
                new_a[d] = True
            else:
                new_a[d] = False
            if mot2net[b] < 0:
                mot2net[b] = dst[found]
                net2mot[dst[found]] = b
                new_b[d] = True
            else:
                new_b[d] = False
            d += 1
            nxt[d] = found + 1

        if ell > 1:
            net2mot[x0] = -1
            net2mot[y0] = -1
            mot2net[a0] = -1
            mot2net[b0] = -1

    return count, wsum, bad


@njit(cache=True, nogil=True)
def count_range(src, dst, t, n, msrc, mdst, k, delta, first_lo, first_hi, hi):
    net2mot = np.full(n, -1, np.int64)
    mot2net = np.full(k, -1, np.int64)
    dummy_out = np.empty((0, 0), np.int64)
    dummy_w = np.empty(0, np.float64)
    dummy_t = t[:0]
    dummy_f = np.empty(0, np.float64)
    c, _, _ = search(src, dst, t, msrc, mdst, delta, first_lo, first_hi, hi,
                     COUNT, dummy_out, dummy_w, dummy_t, dummy_f, net2mot, mot2net)
    return c


@njit(cache=True, nogil=True)
def collect_range(src, dst, t, n, msrc, mdst, k, delta, lo, hi, total):
    net2mot = np.full(n, -1, np.int64)
    mot2net = np.full(k, -1, np.int64)
    out = np.empty((total, msrc.shape[0]), np.int64)
    dummy_w = np.empty(0, np.float64)
    dummy_t = t[:0]
    dummy_f = np.empty(0, np.float64)
    c, _, _ = search(src, dst, t, msrc, mdst, delta, lo, hi, hi,
                     COLLECT, out, dummy_w, dummy_t, dummy_f, net2mot, mot2net)
    return out[:c]


@njit(cache=True, nogil=True)
def window_sums(src, dst, t, n, msrc, mdst, k, delta, los, his, mode, wparams,
                t_pref, tend_pref):
    """Weighted instance sum for each window ``[los[i], his[i]]``."""
    net2mot = np.full(n, -1, np.int64)
    mot2net = np.full(k, -1, np.int64)
    dummy_out = np.empty((0, 0), np.int64)
    res = np.zeros(los.shape[0], np.float64)
    bad = 0
    for w in range(los.shape[0]):
        lo = los[w]
        hi = his[w]
        if lo > hi:
            continue
        _, s, b = search(src, dst, t, msrc, mdst, delta, lo, hi, hi, mode,
                         dummy_out, wparams, t_pref, tend_pref, net2mot, mot2net)
        res[w] = s
        bad += b
    return res, bad
