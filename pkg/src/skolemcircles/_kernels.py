"""Compiled inner loops for the backtracking searches.

Occupancy is a single ``uint64`` word, so circles are limited to
``2m <= 64``.  The search tables are built in :mod:`.enumeration`; here we
only walk them.  Without numba the same functions run as plain Python
(correct, but orders of magnitude slower).
"""

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


@njit(cache=True, nogil=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - np.uint64(1)
        c += 1
    return c


@njit(cache=True, nogil=True)
def count_circles(cand, inter, lo, hi, start_occ, full, counts):
    """Walk every leaf of the circle search and tally ``ceil(w / 2)`` per leaf.

    ``cand[d, k]`` is the occupancy mask of candidate ``k`` at depth ``d`` and
    ``inter[d, k]`` the cells strictly inside its arc.  Only candidates
    ``lo[d] <= k < hi[d]`` are tried at depth ``d``.
    """
    depth_n = cand.shape[0]
    idx = np.zeros(depth_n, np.int64)
    occ = np.zeros(depth_n + 1, np.uint64)
    im = np.zeros(depth_n + 1, np.uint64)
    occ[0] = start_occ
    d = 0
    idx[0] = lo[0]
    while d >= 0:
        o = occ[d]
        placed = False
        while idx[d] < hi[d]:
            k = idx[d]
            idx[d] += 1
            c = cand[d, k]
            if (o & c) == 0:
                occ[d + 1] = o | c
                im[d + 1] = im[d] | inter[d, k]
                placed = True
                break
        if not placed:
            d -= 1
            continue
        if d + 1 == depth_n:
            w = _popcount(full & ~im[d + 1])
            counts[(w + 1) // 2] += 1
        else:
            d += 1
            idx[d] = lo[d]
    return counts


@njit(cache=True, nogil=True)
def collect_circles(cand, lo, hi, start_occ, out):
    """Same walk as :func:`count_circles`, recording the candidate index chosen at each depth.

    ``out`` must have at least as many rows as there are leaves; returns the row count.
    """
    depth_n = cand.shape[0]
    idx = np.zeros(depth_n, np.int64)
    occ = np.zeros(depth_n + 1, np.uint64)
    occ[0] = start_occ
    d = 0
    idx[0] = lo[0]
    rows = 0
    while d >= 0:
        o = occ[d]
        placed = False
        while idx[d] < hi[d]:
            k = idx[d]
            idx[d] += 1
            c = cand[d, k]
            if (o & c) == 0:
                occ[d + 1] = o | c
                placed = True
                break
        if not placed:
            d -= 1
            continue
        if d + 1 == depth_n:
            for t in range(depth_n):
                out[rows, t] = idx[t] - 1
            rows += 1
        else:
            d += 1
            idx[d] = lo[d]
    return rows


@njit(cache=True, nogil=True)
def count_linear_sequences(m):
    """Count Skolem sequences of order ``m`` by always filling the lowest empty cell."""
    n = 2 * m
    if m == 0:
        return 0
    pos = np.zeros(m + 1, np.int64)
    nxt = np.zeros(m + 1, np.int64)
    occ = np.zeros(m + 1, np.uint64)
    used = np.zeros(m + 1, np.uint64)
    total = 0
    d = 0
    pos[0] = 0
    nxt[0] = 1
    while d >= 0:
        p = pos[d]
        o = occ[d]
        u = used[d]
        placed = False
        while nxt[d] <= m:
            s = nxt[d]
            nxt[d] += 1
            q = p + s
            if q >= n:
                break
            if (u >> np.uint64(s)) & np.uint64(1):
                continue
            if (o >> np.uint64(q)) & np.uint64(1):
                continue
            o2 = o | (np.uint64(1) << np.uint64(p)) | (np.uint64(1) << np.uint64(q))
            if d + 1 == m:
                total += 1
                continue
            occ[d + 1] = o2
            used[d + 1] = u | (np.uint64(1) << np.uint64(s))
            p2 = p + 1
            while (o2 >> np.uint64(p2)) & np.uint64(1):
                p2 += 1
            pos[d + 1] = p2
            nxt[d + 1] = 1
            placed = True
            break
        if placed:
            d += 1
        else:
            d -= 1
    return total
