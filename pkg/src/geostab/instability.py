"""Exact instability engines: maximum colour-jumps over geodesics.

The workhorse is a dynamic program over states (current point x, set S of
coordinates not yet flipped).  Writing g(x, S) for the maximum number of
future jumps, the recurrence maximises over i in S of

    [colour changes when i flips] + g(x with bit i flipped, S without i)

and the answer is the maximum of g(x, full set) over admissible starts.
Subsets are visited in ascending integer code, so every subset is finished
before any of its supersets; for fixed S the update is vectorised over all
2^n points at once (the states of equal subset size are independent, which
is also what makes the table safe to fill in parallel).  The table holds
4^n small integers; end-colour constraints use a second table whose
terminal row marks impossible endpoints with a negative sentinel.

A literal brute-force enumerator over all starts and flip permutations is
kept as an independent oracle for cross-checking at tiny dimensions.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import permutations
from typing import Optional, Sequence

import numpy as np

from .colourings import Colouring
from .errors import CapacityError, UndefinedRadiusError, ValidationError
from .hypercube import Geodesic, Point, weights_vector

DEFAULT_MAX_N = 13
_BRUTEFORCE_MAX_N = 6
_NEG = np.int8(-64)  # sentinel for "no admissible completion"; stays < 0 under +1 per level


@dataclass(frozen=True)
class PathReport:
    """Jump count and the 1-based step indices where the colour changes."""

    jump_count: int
    jump_indices: tuple[int, ...]


@dataclass(frozen=True)
class InstabilityReport:
    """Result of an exact engine run.

    ``mode`` is "inst", "winst", or "m-geodesic".  ``t_used`` carries the
    radius for winst runs and the start weight for m-geodesic runs.
    ``value``/``witness`` are None when no geodesic meets the constraints.
    """

    mode: str
    value: Optional[int]
    witness: Optional[Geodesic]
    t_used: Optional[int] = None


def dimension_cap(explicit: Optional[int] = None) -> int:
    """Engine dimension cap: explicit argument, else GEOSTAB_MAX_N, else 13.

    Passing ``cap`` explicitly (or setting the environment variable) is the
    acknowledgement that two 4^n-entry tables fit in memory.
    """
    if explicit is not None:
        return explicit
    env = os.environ.get("GEOSTAB_MAX_N")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise ValidationError(f"GEOSTAB_MAX_N must be an integer, got {env!r}") from exc
    return DEFAULT_MAX_N


def _check_cap(n: int, cap: Optional[int]) -> None:
    limit = dimension_cap(cap)
    if n > limit:
        raise CapacityError(
            f"dimension {n} exceeds the engine cap {limit}; "
            "pass cap=... or set GEOSTAB_MAX_N to acknowledge the memory cost"
        )


def jumps_of_path(f: Colouring, seq: Sequence[Point]) -> PathReport:
    """Exact jump count of an arbitrary point sequence (not only geodesics)."""
    if any(p.n != f.n for p in seq):
        raise ValidationError("path points must match the colouring dimension")
    table = f.table()
    jumps = [
        i
        for i in range(1, len(seq))
        if table[seq[i].code] != table[seq[i - 1].code]
    ]
    return PathReport(jump_count=len(jumps), jump_indices=tuple(jumps))


def _xor_indices(n: int) -> list[np.ndarray]:
    idx = np.arange(1 << n)
    return [idx ^ (1 << i) for i in range(n)]


def _dp_table(table: np.ndarray, n: int, end_colour: Optional[int]) -> np.ndarray:
    """g(x, S) for all states, as G[S, x]; terminal row fixed by end_colour."""
    N = 1 << n
    xor_idx = _xor_indices(n)
    jump = [
        (table ^ table[xor_idx[i]]).astype(np.int8)
        for i in range(n)
    ]
    G = np.empty((N, N), dtype=np.int8)
    if end_colour is None:
        G[0] = 0
    else:
        G[0] = np.where(table == end_colour, np.int8(0), _NEG)
    buf = np.empty(N, dtype=np.int8)
    for S in range(1, N):
        acc = None
        rest = S
        while rest:
            i = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            np.take(G[S ^ (1 << i)], xor_idx[i], out=buf)
            buf += jump[i]
            if acc is None:
                acc = buf.copy()
            else:
                np.maximum(acc, buf, out=acc)
        G[S] = acc
    return G


def _reconstruct(G: np.ndarray, table: np.ndarray, n: int, start: int) -> tuple[int, ...]:
    """Greedy re-descent through a finished table; smallest coordinate first,
    which yields the lexicographically least optimal flip order."""
    order = []
    S = (1 << n) - 1
    x = start
    for _ in range(n):
        target = int(G[S][x])
        for i in range(n):
            bit = 1 << i
            if S & bit:
                nx = x ^ bit
                step = int(table[x] != table[nx]) + int(G[S ^ bit][nx])
                if step == target:
                    order.append(i + 1)
                    x = nx
                    S ^= bit
                    break
        else:
            raise AssertionError("greedy descent failed to match the table value")
    return tuple(order)


def inst_exact(f: Colouring, cap: Optional[int] = None) -> InstabilityReport:
    """Exact inst(f): maximum jumps over all 2^n * n! geodesics, with witness."""
    _check_cap(f.n, cap)
    table = f.table()
    G = _dp_table(table, f.n, end_colour=None)
    top = G[(1 << f.n) - 1]
    start = int(np.argmax(top))
    value = int(top[start])
    order = _reconstruct(G, table, f.n, start)
    witness = Geodesic(Point(f.n, start), order)
    return InstabilityReport(mode="inst", value=value, witness=witness)


def inst_restricted(
    f: Colouring,
    start_weight: int,
    start_colour: Optional[int] = None,
    end_colour: Optional[int] = None,
    cap: Optional[int] = None,
) -> InstabilityReport:
    """Maximum jumps over geodesics with a fixed start weight and optional
    start/end colour constraints; value None when no geodesic qualifies."""
    if not (0 <= start_weight <= f.n):
        raise ValidationError(f"start weight {start_weight} out of range [0, {f.n}]")
    _check_cap(f.n, cap)
    table = f.table()
    w = weights_vector(f.n)
    starts = np.nonzero(w == start_weight)[0]
    if start_colour is not None:
        starts = starts[table[starts] == start_colour]
    none_report = InstabilityReport(
        mode="m-geodesic", value=None, witness=None, t_used=start_weight
    )
    if starts.size == 0:
        return none_report
    G = _dp_table(table, f.n, end_colour=end_colour)
    vals = G[(1 << f.n) - 1][starts]
    best = int(vals.max())
    if best < 0:
        return none_report
    start = int(starts[int(np.argmax(vals))])
    order = _reconstruct(G, table, f.n, start)
    return InstabilityReport(
        mode="m-geodesic",
        value=best,
        witness=Geodesic(Point(f.n, start), order),
        t_used=start_weight,
    )


def winst_exact(f: Colouring, cap: Optional[int] = None) -> InstabilityReport:
    """Exact winst(f): maximum jumps over well-ending (t_f+1)-geodesics.

    A geodesic ends well if its first point is coloured 1 or its last point
    is coloured 0 (inclusive or).  The two disjuncts are the two restricted
    engines sharing one pair of tables: start-colour 1 against the plain
    table, end-colour 0 against the end-constrained one.
    """
    t = f.t_f
    if t < 0:
        raise UndefinedRadiusError("winst is undefined for colourings with t_f = -1")
    _check_cap(f.n, cap)
    n = f.n
    table = f.table()
    w = weights_vector(n)
    starts = np.nonzero(w == t + 1)[0]
    G_plain = _dp_table(table, n, end_colour=None)
    G_end0 = _dp_table(table, n, end_colour=0)
    top_plain = G_plain[(1 << n) - 1]
    top_end0 = G_end0[(1 << n) - 1]

    best_value: Optional[int] = None
    best_start: Optional[int] = None
    best_from_plain = False
    for s in starts.tolist():
        candidates = []
        if table[s] == 1:
            candidates.append((int(top_plain[s]), True))
        if top_end0[s] >= 0:
            candidates.append((int(top_end0[s]), False))
        for value, from_plain in candidates:
            if best_value is None or value > best_value:
                best_value, best_start, best_from_plain = value, s, from_plain
    if best_value is None:
        raise AssertionError(
            "a colouring with t_f >= 0 always admits a well-ending (t_f+1)-geodesic"
        )
    G = G_plain if best_from_plain else G_end0
    order = _reconstruct(G, table, n, best_start)
    return InstabilityReport(
        mode="winst",
        value=best_value,
        witness=Geodesic(Point(n, best_start), order),
        t_used=t,
    )


def inst_bruteforce(f: Colouring) -> int:
    """Literal maximum over all starts and all n! flip orders; oracle only."""
    if f.n > _BRUTEFORCE_MAX_N:
        raise CapacityError(f"brute force is gated to n <= {_BRUTEFORCE_MAX_N}, got n={f.n}")
    n = f.n
    table = f.table()
    best = 0
    for order in permutations(range(n)):
        for start in range(1 << n):
            x = start
            prev = table[x]
            jumps = 0
            for i in order:
                x ^= 1 << i
                cur = table[x]
                if cur != prev:
                    jumps += 1
                    prev = cur
            if jumps > best:
                best = jumps
    return best


def _batch_top_values(tables: np.ndarray, n: int) -> np.ndarray:
    """g(x, full set) for a batch of colourings; tables has shape (B, 2^n)."""
    B, N = tables.shape
    if N != 1 << n:
        raise ValidationError(f"tables must have 2^{n} columns, got {N}")
    xor_idx = _xor_indices(n)
    jump = [
        (tables ^ tables[:, xor_idx[i]]).astype(np.int8)
        for i in range(n)
    ]
    G = np.empty((N, B, N), dtype=np.int8)
    G[0] = 0
    buf = np.empty((B, N), dtype=np.int8)
    for S in range(1, N):
        acc = None
        rest = S
        while rest:
            i = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            np.take(G[S ^ (1 << i)], xor_idx[i], axis=1, out=buf)
            buf += jump[i]
            if acc is None:
                acc = buf.copy()
            else:
                np.maximum(acc, buf, out=acc)
        G[S] = acc
    return G[N - 1]


def inst_values_batch(tables: np.ndarray, n: int, cap: Optional[int] = None) -> np.ndarray:
    """inst(f) for every row of a (B, 2^n) colour-table batch."""
    _check_cap(n, cap)
    return _batch_top_values(tables, n).max(axis=1).astype(np.int16)


def winst_values_batch(
    tables: np.ndarray, n: int, t: int, cap: Optional[int] = None
) -> np.ndarray:
    """winst(f) for every row; rows are assumed to respect the radius-t balls.

    Because a geodesic ends at the complement of its start, both well-ending
    disjuncts are start properties, so one unconstrained table suffices here.
    """
    _check_cap(n, cap)
    top = _batch_top_values(tables, n)
    w = weights_vector(n)
    starts = np.nonzero(w == t + 1)[0]
    comps = starts ^ ((1 << n) - 1)
    admissible = (tables[:, starts] == 1) | (tables[:, comps] == 0)
    vals = np.where(admissible, top[:, starts], np.int8(-1))
    return vals.max(axis=1).astype(np.int16)
