"""Exhaustive and sampled minimisation over ball-respecting colourings.

A colouring with canonical radius-t balls is determined by its free points,
those strictly between the balls; the sweep enumerates all 2^F assignments
as a binary counter over the free points in ascending code order (bit j of
the counter colours the j-th free point).  Batches of counters are scored
at once by the vectorised instability kernels.

The inst sweep minimises over every enumerated colouring (Problem-style
"respects the balls"), and additionally reports the minimum over the
colourings whose radius is exactly t.  The winst sweep keeps only radius-
exactly-t colourings.  Sweeps checkpoint their progress and the running
minimum to a JSON file so long runs can resume, and can split the counter
space over worker processes; the combined result is independent of the split
because minima are merged by (value, counter).
"""

from __future__ import annotations

import json
import multiprocessing
import os
import time
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .colourings import (
    Colouring,
    ColouringSpec,
    free_point_codes,
    make,
    table_from_free_layers,
)
from .errors import CapacityError, ValidationError
from .hypercube import weights_vector
from .instability import inst_exact, inst_values_batch, winst_exact, winst_values_batch

MAX_FREE_POINTS = 22
DEFAULT_BATCH = 4096
_RETRY_CAP = 10_000


@dataclass(frozen=True)
class SearchResult:
    """Outcome of one exhaustive sweep.

    ``minimum``/``argmin`` follow the sweep's letter: over all enumerated
    colourings for inst, over radius-exactly-t colourings for winst.  The
    inst sweep also reports the exact-radius restriction in the ``*_exact_tf``
    fields (None when it coincides or for winst sweeps).
    """

    n: int
    t: int
    mode: str
    minimum: int
    argmin: ColouringSpec
    colourings_scanned: int
    elapsed: float
    minimum_exact_tf: Optional[int] = None
    argmin_exact_tf: Optional[ColouringSpec] = None


def _check_free_count(n: int, t: int) -> np.ndarray:
    if t < 0 or n < 2 * t + 1:
        raise ValidationError(f"t={t} not valid for n={n}")
    free = free_point_codes(n, t)
    if len(free) > MAX_FREE_POINTS:
        raise CapacityError(
            f"(n={n}, t={t}) has F={len(free)} free points; "
            f"exhaustive sweeps are gated to F <= {MAX_FREE_POINTS}"
        )
    return free


def _base_table(n: int, t: int) -> np.ndarray:
    w = weights_vector(n).astype(np.int16)
    return np.where(w >= n - t, 1, 0).astype(np.uint8)


def _exact_tf_layer_bits(n: int, t: int, free: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Positions (within the free list) of the two layers adjacent to the balls.

    A colouring has radius exactly t unless the weight-(t+1) free points are
    all 0 and the weight-(n-t-1) free points are all 1.
    """
    w = weights_vector(n).astype(np.int16)
    low = np.nonzero(w[free] == t + 1)[0]
    high = np.nonzero(w[free] == n - t - 1)[0]
    return low, high


def _sweep_chunk(
    n: int,
    t: int,
    mode: str,
    lo: int,
    hi: int,
    batch_size: int,
) -> dict:
    """Scan counters [lo, hi); returns the running minima of the chunk."""
    free = free_point_codes(n, t)
    F = len(free)
    base = _base_table(n, t)
    low_idx, high_idx = _exact_tf_layer_bits(n, t, free)
    shifts = np.arange(F, dtype=np.int64)

    best: Optional[tuple[int, int]] = None  # (value, counter), inst: unfiltered
    best_exact: Optional[tuple[int, int]] = None

    for start in range(lo, hi, batch_size):
        counters = np.arange(start, min(start + batch_size, hi), dtype=np.int64)
        bits = ((counters[:, None] >> shifts[None, :]) & 1).astype(np.uint8)
        tables = np.repeat(base[None, :], len(counters), axis=0)
        tables[:, free] = bits
        # radius > t exactly when t+1 is respectable (n >= 2t+3) with the
        # near layer all 0 and the far one all 1
        if n >= 2 * t + 3:
            widened = ~bits[:, low_idx].any(axis=1) & bits[:, high_idx].all(axis=1)
        else:
            widened = np.zeros(len(counters), dtype=bool)
        exact = ~widened

        if mode == "inst":
            values = inst_values_batch(tables, n, cap=n)
            i = int(values.argmin())
            cand = (int(values[i]), int(counters[i]))
            if best is None or cand < best:
                best = cand
            if exact.any():
                masked = np.where(exact, values, np.int16(127))
                j = int(masked.argmin())
                cand = (int(masked[j]), int(counters[j]))
                if best_exact is None or cand < best_exact:
                    best_exact = cand
        else:
            if not exact.any():
                continue
            values = winst_values_batch(tables, n, t, cap=n)
            masked = np.where(exact, values, np.int16(127))
            j = int(masked.argmin())
            cand = (int(masked[j]), int(counters[j]))
            if best_exact is None or cand < best_exact:
                best_exact = cand
    return {"best": best, "best_exact": best_exact, "scanned": hi - lo}


def _sweep_chunk_star(args) -> dict:
    return _sweep_chunk(*args)


def _merge(a: Optional[tuple[int, int]], b: Optional[tuple[int, int]]) -> Optional[tuple[int, int]]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _load_checkpoint(path: str, key: dict) -> Optional[dict]:
    if not path or not os.path.exists(path):
        return None
    with open(path) as fh:
        state = json.load(fh)
    if {k: state.get(k) for k in key} != key:
        raise ValidationError(
            f"checkpoint {path} belongs to a different sweep: {state}"
        )
    return state


def _save_checkpoint(path: str, state: dict) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(state, fh)
    os.replace(tmp, path)


def _colouring_from_counter(n: int, t: int, counter: int) -> Colouring:
    free = free_point_codes(n, t)
    bits = [(counter >> j) & 1 for j in range(len(free))]
    return table_from_free_layers(n, t, bits)


def _run_sweep(
    n: int,
    t: int,
    mode: str,
    threads: int,
    checkpoint_path: Optional[str],
    batch_size: int,
) -> SearchResult:
    started = time.perf_counter()
    free = _check_free_count(n, t)
    total = 1 << len(free)
    key = {"n": n, "t": t, "mode": mode}

    next_counter = 0
    best: Optional[tuple[int, int]] = None
    best_exact: Optional[tuple[int, int]] = None
    scanned = 0
    state = _load_checkpoint(checkpoint_path, key) if checkpoint_path else None
    if state is not None:
        next_counter = state["next_counter"]
        scanned = state["scanned"]
        if state.get("best") is not None:
            best = tuple(state["best"])
        if state.get("best_exact") is not None:
            best_exact = tuple(state["best_exact"])

    chunk = max(batch_size, 1 << 16) if threads > 1 else max(batch_size, 1 << 14)
    ranges = [
        (n, t, mode, lo, min(lo + chunk, total), batch_size)
        for lo in range(next_counter, total, chunk)
    ]
    if threads > 1 and len(ranges) > 1:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(processes=threads) as pool:
            results = pool.imap(_sweep_chunk_star, ranges)
            for args, res in zip(ranges, results):
                best = _merge(best, res["best"])
                best_exact = _merge(best_exact, res["best_exact"])
                scanned += res["scanned"]
                if checkpoint_path:
                    _save_checkpoint(
                        checkpoint_path,
                        dict(key, next_counter=args[4], scanned=scanned,
                             best=best, best_exact=best_exact),
                    )
    else:
        for args in ranges:
            res = _sweep_chunk(*args)
            best = _merge(best, res["best"])
            best_exact = _merge(best_exact, res["best_exact"])
            scanned += res["scanned"]
            if checkpoint_path:
                _save_checkpoint(
                    checkpoint_path,
                    dict(key, next_counter=args[4], scanned=scanned,
                         best=best, best_exact=best_exact),
                )

    elapsed = time.perf_counter() - started
    if mode == "inst":
        assert best is not None
        value, counter = best
        argmin = _colouring_from_counter(n, t, counter)
        recomputed = inst_exact(argmin, cap=n).value
        if recomputed != value:
            raise AssertionError(
                f"argmin recomputation mismatch: sweep {value}, engine {recomputed}"
            )
        extra_val = extra_spec = None
        if best_exact is not None and best_exact != best:
            extra_val = best_exact[0]
            extra_spec = _colouring_from_counter(n, t, best_exact[1]).spec
        return SearchResult(
            n=n, t=t, mode="inst", minimum=value, argmin=argmin.spec,
            colourings_scanned=scanned, elapsed=elapsed,
            minimum_exact_tf=extra_val, argmin_exact_tf=extra_spec,
        )
    assert best_exact is not None, "every (n, t) admits a colouring with radius exactly t"
    value, counter = best_exact
    argmin = _colouring_from_counter(n, t, counter)
    if argmin.t_f != t:
        raise AssertionError(f"winst argmin has t_f={argmin.t_f}, expected {t}")
    recomputed = winst_exact(argmin, cap=n).value
    if recomputed != value:
        raise AssertionError(
            f"argmin recomputation mismatch: sweep {value}, engine {recomputed}"
        )
    return SearchResult(
        n=n, t=t, mode="winst", minimum=value, argmin=argmin.spec,
        colourings_scanned=scanned, elapsed=elapsed,
    )


def min_inst_exhaustive(
    n: int,
    t: int,
    threads: int = 1,
    checkpoint_path: Optional[str] = None,
    batch_size: int = DEFAULT_BATCH,
) -> SearchResult:
    """Exact inst(n, t): minimum of inst(f) over all canonical-ball colourings."""
    return _run_sweep(n, t, "inst", threads, checkpoint_path, batch_size)


def min_winst_exhaustive(
    n: int,
    t: int,
    threads: int = 1,
    checkpoint_path: Optional[str] = None,
    batch_size: int = DEFAULT_BATCH,
) -> SearchResult:
    """Exact winst(n, t): minimum of winst(f) over colourings with t_f = t."""
    return _run_sweep(n, t, "winst", threads, checkpoint_path, batch_size)


def random_colouring(n: int, t: int, seed: int, exact_tf: bool = False) -> Colouring:
    """Canonical balls, uniformly random free layers, deterministic in the seed.

    With ``exact_tf`` the sample is rejected until its radius is exactly t
    (the widened-radius event needs a whole layer monochromatic, so retries
    are rare; a generous retry cap guards the degenerate configurations).
    """
    if t < 0 or n < 2 * t + 1:
        raise ValidationError(f"t={t} not valid for n={n}")
    rng = np.random.default_rng(seed)
    free = free_point_codes(n, t)
    for _ in range(_RETRY_CAP):
        bits = rng.integers(0, 2, size=len(free), dtype=np.uint8)
        f = table_from_free_layers(n, t, bits)
        if not exact_tf or f.t_f == t:
            return f
    raise CapacityError(f"rejection sampling failed to hit t_f={t} in {_RETRY_CAP} tries")
