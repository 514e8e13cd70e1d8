"""Count-only generation loop compiled with numba.

Same buffer, cursor, label stack and dispatch as :mod:`cat_engine`, but
with flat integer arrays so that n up to 18 (~4.8e8 paths) finishes in
seconds.  Used for counting and benchmarking; the class-based engine
remains the reference, and the tests require both to report identical
counters.
"""
from __future__ import annotations

import time

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover
    numba = None

# slots of the returned array
EMITTED, SWAPS, CURSOR_MOVES, PUSHES, POPS, LABEL_UPDATES, TESTS, \
    OP1, OP2, OP3, MAX_OP3_RUN, OP3_RUNS_OF_2 = range(12)
NSLOTS = 12


def _count_run(n):
    out = np.zeros(NSLOTS, dtype=np.int64)
    m = 2 * n
    buf = np.zeros(m, dtype=np.int8)
    for j in range(n):
        buf[j] = 1
    out[EMITTED] = 1
    if n == 1:
        return out
    # ancestor label stack
    stk_k = np.zeros(n + 1, dtype=np.int64)
    stk_i = np.zeros(n + 1, dtype=np.int64)
    depth = 0
    cur = 0

    # root firstborn: apex swap
    t = buf[n - 1]
    buf[n - 1] = buf[n]
    buf[n] = t
    out[SWAPS] += 1
    stk_k[0] = n - 1
    stk_i[0] = n - 1
    depth = 1
    out[PUSHES] += 1
    k = n - 1
    i = n - 2
    out[LABEL_UPDATES] += 1
    out[EMITTED] += 1
    run = 0

    while True:
        out[TESTS] += 1
        if i >= 1:
            a = cur
            b = (cur + m - k) % m
            t = buf[a]
            buf[a] = buf[b]
            buf[b] = t
            out[SWAPS] += 1
            cur = (cur + 1) % m
            out[CURSOR_MOVES] += 1
            stk_k[depth] = k
            stk_i[depth] = i
            depth += 1
            out[PUSHES] += 1
            if i > k:
                i = k
            i -= 1
            out[LABEL_UPDATES] += 1
            out[OP1] += 1
            run = 0
        else:
            out[TESTS] += 1
            if k >= 2:
                a = (cur + m - 1 - k) % m
                b = (cur + m - k) % m
                t = buf[a]
                buf[a] = buf[b]
                buf[b] = t
                out[SWAPS] += 1
                if i == k - 1:
                    i -= 1
                k -= 1
                out[LABEL_UPDATES] += 1
                out[OP2] += 1
                run = 0
            else:
                out[TESTS] += 1
                if depth < 2:
                    break
                depth -= 1
                kp = stk_k[depth]
                ip = stk_i[depth]
                out[POPS] += 1
                a = (cur + m - 2) % m
                b = (cur + m - 1) % m
                t = buf[a]
                buf[a] = buf[b]
                buf[b] = t
                a = (cur + m - 2 - kp) % m
                b = (cur + m - 1 - kp) % m
                t = buf[a]
                buf[a] = buf[b]
                buf[b] = t
                out[SWAPS] += 2
                cur = (cur + m - 1) % m
                out[CURSOR_MOVES] += 1
                k = kp - 1
                i = ip - 1 if ip == kp - 1 else ip
                out[LABEL_UPDATES] += 1
                out[OP3] += 1
                run += 1
                if run > out[MAX_OP3_RUN]:
                    out[MAX_OP3_RUN] = run
                if run == 2:
                    out[OP3_RUNS_OF_2] += 1
        out[EMITTED] += 1
    return out


if numba is not None:
    _count_run_jit = numba.njit(cache=True)(_count_run)
else:  # pragma: no cover
    _count_run_jit = _count_run


def count_run(n: int, jit: bool = True) -> dict:
    """Run the whole generation for size n, returning counters and timing."""
    if n < 1:
        raise ValueError("n must be >= 1")
    fn = _count_run_jit if jit else _count_run
    t0 = time.perf_counter()
    out = fn(n)
    wall = time.perf_counter() - t0
    names = ("emitted", "swaps", "cursor_moves", "pushes", "pops", "label_updates",
             "tests", "op1", "op2", "op3", "max_op3_run", "op3_runs_of_2")
    rec = {name: int(out[j]) for j, name in enumerate(names)}
    rec["wall_time"] = wall
    return rec


def warmup() -> None:
    _count_run_jit(3)
