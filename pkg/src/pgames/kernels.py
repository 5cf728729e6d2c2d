"""Hot numeric kernels for the sampling experiment.

Two implementations of each kernel: a numba @njit version (default) and a
pure-numpy fallback, selected at import time by the environment variable
``PGAMES_PURE_NUMPY=1``.  ``benchmarks/bench_backends.py`` compares the two.

Games are 2x2 zero-sum, packed as float64 arrays of shape (t, 4) holding
the row payoffs (a, c, e, g) of the matrix [[a, c], [e, g]].
"""

from __future__ import annotations

import os

import numpy as np

_FORCE_NUMPY = os.environ.get("PGAMES_PURE_NUMPY", "") not in ("", "0")

try:
    if _FORCE_NUMPY:
        raise ImportError
    from numba import njit, prange

    HAS_NUMBA = True
except ImportError:
    HAS_NUMBA = False


def backend_name() -> str:
    return "numba" if HAS_NUMBA else "numpy"


# ---------------------------------------------------------------------------
# Batch 2x2 zero-sum solve (Appendix-style ordered branch list)
# ---------------------------------------------------------------------------


def solve_zs_batch_numpy(games: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Equilibrium (p, q, v) per game; p = P(top row), q = P(left col).

    Branch order matches the scalar solver: the four pure cells in order
    (top-left, top-right, bottom-left, bottom-right), then the mixed
    indifference formulas.
    """
    a, c, e, g = games[:, 0], games[:, 1], games[:, 2], games[:, 3]
    t = games.shape[0]
    p = np.empty(t)
    q = np.empty(t)
    # pure-branch conditions, zero-sum specialization of the general-sum list
    b1 = (a >= e) & (c >= a)
    b2 = (c >= g) & (a >= c)
    b3 = (e >= a) & (g >= e)
    b4 = (g >= c) & (e >= g)
    mixed = ~(b1 | b2 | b3 | b4)
    with np.errstate(divide="ignore", invalid="ignore"):
        pm = (e - g) / (c + e - a - g)
        qm = (g - c) / (a - c + g - e)
    # first matching branch wins: assign in reverse priority
    p[:] = np.where(mixed, pm, 0.0)
    q[:] = np.where(mixed, qm, 0.0)
    for cond, pv, qv in ((b4, 0.0, 0.0), (b3, 0.0, 1.0), (b2, 1.0, 0.0), (b1, 1.0, 1.0)):
        p = np.where(cond, pv, p)
        q = np.where(cond, qv, q)
    v = q * (p * a + (1 - p) * e) + (1 - q) * (p * c + (1 - p) * g)
    return p, q, v


def nn_exploitability_numpy(
    train: np.ndarray,
    p: np.ndarray,
    q: np.ndarray,
    tests: np.ndarray,
    vtest: np.ndarray,
    ks: np.ndarray,
    chunk: int = 256,
) -> np.ndarray:
    """Pure-numpy fallback of the nearest-neighbor exploitability scan.

    For each test game and each training-set prefix size k, looks up the
    nearest of the first k training games (L2 over (a,c,e,g), lowest
    index on ties) and scores its stored equilibrium in the test game.
    Returns an array of shape (len(ks), n_test).
    """
    m = tests.shape[0]
    out = np.empty((len(ks), m))
    for lo in range(0, m, chunk):
        hi = min(lo + chunk, m)
        block = tests[lo:hi]
        # (b, t) squared distances
        d = ((block[:, None, :] - train[None, :, :]) ** 2).sum(axis=2)
        for ki, k in enumerate(ks):
            idx = np.argmin(d[:, :k], axis=1)
            pr, qc = p[idx], q[idx]
            a, c, e, g = block[:, 0], block[:, 1], block[:, 2], block[:, 3]
            v = vtest[lo:hi]
            row_pay = np.minimum(pr * a + (1 - pr) * e, pr * c + (1 - pr) * g)
            col_br = np.maximum(qc * a + (1 - qc) * c, qc * e + (1 - qc) * g)
            out[ki, lo:hi] = 0.5 * ((v - row_pay) + (col_br - v))
    return out


if HAS_NUMBA:

    @njit(cache=True)
    def _expl_pair(p, q, a, c, e, g, v):
        row_l = p * a + (1 - p) * e
        row_r = p * c + (1 - p) * g
        expl_row = v - min(row_l, row_r)
        br_t = q * a + (1 - q) * c
        br_b = q * e + (1 - q) * g
        expl_col = max(br_t, br_b) - v
        return 0.5 * (expl_row + expl_col)

    @njit(parallel=True, cache=True)
    def _nn_expl_numba(train, p, q, tests, vtest, ks):
        m = tests.shape[0]
        t = train.shape[0]
        nk = ks.shape[0]
        out = np.empty((nk, m))
        for qi in prange(m):
            a = tests[qi, 0]
            c = tests[qi, 1]
            e = tests[qi, 2]
            g = tests[qi, 3]
            v = vtest[qi]
            best = np.inf
            bidx = 0
            kpos = 0
            for ti in range(t):
                d0 = train[ti, 0] - a
                d1 = train[ti, 1] - c
                d2 = train[ti, 2] - e
                d3 = train[ti, 3] - g
                d = d0 * d0 + d1 * d1 + d2 * d2 + d3 * d3
                if d < best:
                    best = d
                    bidx = ti
                while kpos < nk and ks[kpos] == ti + 1:
                    out[kpos, qi] = _expl_pair(p[bidx], q[bidx], a, c, e, g, v)
                    kpos += 1
        return out

    def nn_exploitability(train, p, q, tests, vtest, ks):
        ks = np.asarray(ks, dtype=np.int64)
        return _nn_expl_numba(
            np.ascontiguousarray(train, dtype=np.float64),
            np.ascontiguousarray(p, dtype=np.float64),
            np.ascontiguousarray(q, dtype=np.float64),
            np.ascontiguousarray(tests, dtype=np.float64),
            np.ascontiguousarray(vtest, dtype=np.float64),
            ks,
        )

else:

    def nn_exploitability(train, p, q, tests, vtest, ks):
        ks = np.asarray(ks, dtype=np.int64)
        return nn_exploitability_numpy(train, p, q, tests, vtest, ks)


nn_exploitability.__doc__ = nn_exploitability_numpy.__doc__

solve_zs_batch = solve_zs_batch_numpy
