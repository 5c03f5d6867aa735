"""Colouring families of the n-cube and their structural predicates.

A colouring assigns 0 or 1 to every point of the cube.  The families built
here are the majority colourings (colour of a point = majority of its first
k entries, balls coloured canonically), the partition colourings ``a^Q_j``
(colour j iff some block of a coordinate partition is monochromatically j)
and their prefix-dispatched combination ``b_t^k``, plus explicit-table and
constant colourings used by the search and test machinery.

Every colouring carries a derived radius ``t_f``: the largest t such that
the whole radius-t ball around the all-zeros point is coloured 0 and the
one around the all-ones point is coloured 1 (-1 if even t=0 fails).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import CapacityError, UndefinedRadiusError, ValidationError
from .hypercube import MAX_POINT_DIMENSION, Point, weights_vector

KINDS = ("majority", "partition", "aqj", "table", "constant")
TIE_RULES = ("first-entry", "zero", "one")

_DEFINED_BY_MAX_N = 16


@dataclass(frozen=True)
class ColouringSpec:
    """Declarative description of a colouring; ``make`` validates and builds it.

    Field usage by kind:

    * ``majority``: n, t, k, tie (even k only; default "first-entry").
    * ``partition`` (the b_t^k family): n, t, k (odd), partition of the
      coordinates k+1..n into s+1 blocks of size >= t+1, s = t-(k+1)/2.
    * ``aqj``: n, t, s, j, partition of 1..n into s+1 blocks of size >= t+1.
    * ``table``: n, table of exactly 2^n colour bits (bit p = colour of code p).
    * ``constant``: n, j = the constant colour.
    """

    kind: str
    n: int
    t: Optional[int] = None
    k: Optional[int] = None
    tie: Optional[str] = None
    partition: Optional[tuple[tuple[int, ...], ...]] = None
    j: Optional[int] = None
    s: Optional[int] = None
    table: Optional[bytes] = None

    def __post_init__(self) -> None:
        if self.partition is not None:
            norm = tuple(tuple(sorted(block)) for block in self.partition)
            object.__setattr__(self, "partition", norm)
        if self.table is not None:
            object.__setattr__(self, "table", bytes(self.table))


class Colouring:
    """An immutable total colouring of the n-cube with a cached radius.

    The full colour table is materialised at construction (the instability
    engines consume it wholesale); ``t_f`` is computed lazily on first use.
    Evaluation is pure and reentrant, and the lazy cache is idempotent, so
    instances are safe to share across threads.
    """

    def __init__(self, spec: ColouringSpec, table: np.ndarray):
        self.spec = spec
        self.n = spec.n
        table = np.ascontiguousarray(table, dtype=np.uint8)
        table.setflags(write=False)
        self._table = table
        self._t_f: Optional[int] = None

    def table(self) -> np.ndarray:
        """Read-only array of 2^n colour bits, indexed by point code."""
        return self._table

    def evaluate(self, x: Point) -> int:
        if x.n != self.n:
            raise ValidationError(
                f"point dimension {x.n} does not match colouring dimension {self.n}"
            )
        return int(self._table[x.code])

    @property
    def t_f(self) -> int:
        if self._t_f is None:
            self._t_f = _radius_of_table(self._table, self.n)
        return self._t_f

    def __repr__(self) -> str:
        return f"Colouring({self.spec.kind}, n={self.n})"


def _radius_of_table(table: np.ndarray, n: int) -> int:
    w = weights_vector(n).astype(np.int16)
    ones = table == 1
    zeros = ~ones
    a = int(w[ones].min()) if ones.any() else n + 1
    b = int((n - w[zeros]).min()) if zeros.any() else n + 1
    return min(a, b) - 1


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ValidationError(message)


def _check_partition(blocks: Sequence[Sequence[int]], universe: set[int], what: str) -> None:
    seen: set[int] = set()
    for block in blocks:
        bs = set(block)
        _require(len(bs) == len(block), f"{what}: block {block} has repeated indices")
        _require(not (bs & seen), f"{what}: blocks overlap at {sorted(bs & seen)}")
        seen |= bs
    _require(
        seen == universe,
        f"{what}: blocks must cover exactly {sorted(universe)}, got {sorted(seen)}",
    )


def make(spec: ColouringSpec) -> Colouring:
    """Validate a spec and build the colouring it describes."""
    _require(spec.kind in KINDS, f"unknown kind {spec.kind!r}")
    n = spec.n
    _require(1 <= n <= MAX_POINT_DIMENSION, f"need 1 <= n <= {MAX_POINT_DIMENSION}, got n={n}")
    builder = {
        "majority": _make_majority,
        "partition": _make_partition,
        "aqj": _make_aqj,
        "table": _make_table,
        "constant": _make_constant,
    }[spec.kind]
    return builder(spec)


def _make_majority(spec: ColouringSpec) -> Colouring:
    n, t, k = spec.n, spec.t, spec.k
    _require(t is not None and k is not None, "majority needs t and k")
    _require(t >= 0, f"need t >= 0, got t={t}")
    _require(n >= 2 * t + 1, f"t must be valid for n: need n >= 2t+1 = {2 * t + 1}, got n={n}")
    _require(0 < k <= n, f"need 0 < k <= n, got k={k}, n={n}")
    tie = spec.tie
    if k % 2 == 1:
        _require(tie is None, "tie rule applies to even k only")
    else:
        tie = tie or "first-entry"
        _require(tie in TIE_RULES, f"tie must be one of {TIE_RULES}, got {tie!r}")

    N = 1 << n
    codes = np.arange(N, dtype=np.uint32)
    w = weights_vector(n).astype(np.int16)
    kmask = (1 << k) - 1
    prefix = np.zeros(N, dtype=np.int16)
    for b in range(k):
        prefix += ((codes >> b) & 1).astype(np.int16)
    if k % 2 == 1:
        maj = (2 * prefix > k).astype(np.uint8)
    else:
        if tie == "first-entry":
            on_tie = (codes & 1).astype(np.uint8)
        else:
            on_tie = np.uint8(0) if tie == "zero" else np.uint8(1)
        maj = np.where(2 * prefix > k, 1, np.where(2 * prefix < k, 0, on_tie)).astype(np.uint8)
    table = np.where(w <= t, 0, np.where(w >= n - t, 1, maj)).astype(np.uint8)
    return Colouring(spec, table)


def _aqj_table(n: int, j: int, blocks: Sequence[Sequence[int]]) -> np.ndarray:
    """a^Q_j over the stated coordinate blocks: j iff some block is all-j.

    An empty block list yields the constant 1-j, matching the convention
    that a^Q_j(y) = 1-j when Q or y is empty.
    """
    N = 1 << n
    codes = np.arange(N, dtype=np.uint32)
    hit = np.zeros(N, dtype=bool)
    for block in blocks:
        mask = 0
        for i in block:
            mask |= 1 << (i - 1)
        want = mask if j == 1 else 0
        hit |= (codes & mask) == want
    return np.where(hit, j, 1 - j).astype(np.uint8)


def _make_aqj(spec: ColouringSpec) -> Colouring:
    n, t, s, j = spec.n, spec.t, spec.s, spec.j
    _require(t is not None and s is not None and j in (0, 1), "aqj needs t, s, and j in {0,1}")
    _require(s >= 0, f"need s >= 0, got s={s}")
    _require(
        n >= (s + 1) * (t + 1),
        f"need n >= (s+1)(t+1) = {(s + 1) * (t + 1)}, got n={n}",
    )
    blocks = spec.partition or ()
    _require(len(blocks) == s + 1, f"need s+1 = {s + 1} blocks, got {len(blocks)}")
    for block in blocks:
        _require(
            len(block) >= t + 1,
            f"every block needs size >= t+1 = {t + 1}, got {sorted(block)}",
        )
        _require(all(1 <= i <= n for i in block), f"block {sorted(block)} not within 1..{n}")
    _check_partition(blocks, set(range(1, n + 1)), "aqj partition")
    return Colouring(spec, _aqj_table(n, j, blocks))


def _make_partition(spec: ColouringSpec) -> Colouring:
    n, t, k = spec.n, spec.t, spec.k
    _require(t is not None and k is not None, "partition colouring needs t and k")
    _require(k >= 1 and k % 2 == 1, f"need odd k >= 1, got k={k}")
    _require(k <= n, f"need k <= n, got k={k}, n={n}")
    s = t - (k + 1) // 2
    _require(s >= -1, f"need s = t-(k+1)/2 >= -1, got s={s}")
    blocks = spec.partition or ()
    if s == -1:
        _require(n == k, f"s = -1 forces n = k, got n={n}, k={k}")
        _require(not blocks, "s = -1 forces an empty partition")
    else:
        _require(
            n >= (s + 1) * (t + 1) + k,
            f"need n >= (s+1)(t+1)+k = {(s + 1) * (t + 1) + k}, got n={n}",
        )
        _require(len(blocks) == s + 1, f"need s+1 = {s + 1} blocks, got {len(blocks)}")
        for block in blocks:
            _require(
                len(block) >= t + 1,
                f"every block needs size >= t+1 = {t + 1}, got {sorted(block)}",
            )
            _require(
                all(k + 1 <= i <= n for i in block),
                f"block {sorted(block)} not within {k + 1}..{n}",
            )
        _check_partition(blocks, set(range(k + 1, n + 1)), "b_t^k partition")

    N = 1 << n
    codes = np.arange(N, dtype=np.uint32)
    prefix = np.zeros(N, dtype=np.int16)
    for b in range(k):
        prefix += ((codes >> b) & 1).astype(np.int16)
    a0 = _aqj_table(n, 0, blocks)
    a1 = _aqj_table(n, 1, blocks)
    table = np.where(2 * prefix > k, a0, a1).astype(np.uint8)
    return Colouring(spec, table)


def _make_table(spec: ColouringSpec) -> Colouring:
    n = spec.n
    _require(spec.table is not None, "table colouring needs a table")
    bits = spec.table
    _require(
        len(bits) == (1 << n),
        f"table must hold exactly 2^{n} = {1 << n} bits, got {len(bits)}",
    )
    arr = np.frombuffer(bits, dtype=np.uint8)
    _require(bool(np.all(arr <= 1)), "table entries must be 0 or 1")
    return Colouring(spec, arr.copy())


def _make_constant(spec: ColouringSpec) -> Colouring:
    _require(spec.j in (0, 1), "constant colouring needs j in {0,1}")
    table = np.full(1 << spec.n, spec.j, dtype=np.uint8)
    return Colouring(spec, table)


def evaluate(f: Colouring, x: Point) -> int:
    """Colour of x under f; errors on dimension mismatch."""
    return f.evaluate(x)


def t_of(f: Colouring) -> int:
    """Largest t whose balls f respects; -1 when f(0^n)=1 or f(1^n)=0."""
    return f.t_f


def respects_balls(f: Colouring, t: int) -> bool:
    """Whether f is canonically 0/1 on the radius-t balls. t must be valid for n."""
    _require(t >= 0, f"need t >= 0, got t={t}")
    _require(
        f.n >= 2 * t + 1,
        f"t must be valid for n: need n >= 2t+1 = {2 * t + 1}, got n={f.n}",
    )
    return f.t_f >= t


def is_defined_by(f: Colouring, indices: Iterable[int]) -> bool:
    """Whether the colour outside the t_f-balls depends only on the given entries."""
    idx = sorted(set(indices))
    _require(all(1 <= i <= f.n for i in idx), f"indices {idx} not within 1..{f.n}")
    t = f.t_f
    if t == -1:
        raise UndefinedRadiusError("colouring has t_f = -1; no balls to exclude")
    n = f.n
    N = 1 << n
    mask = 0
    for i in idx:
        mask |= 1 << (i - 1)
    w = weights_vector(n).astype(np.int16)
    outside = (w > t) & (w < n - t)
    if not outside.any():
        return True
    codes = np.arange(N, dtype=np.uint32)
    keys = (codes[outside] & mask).astype(np.int64)
    cols = f.table()[outside]
    lo = np.ones(N, dtype=np.uint8)
    hi = np.zeros(N, dtype=np.uint8)
    np.minimum.at(lo, keys, cols)
    np.maximum.at(hi, keys, cols)
    return bool(np.all(lo >= hi))


def min_defining_k(f: Colouring) -> int:
    """Smallest index-set size that defines f outside its balls.

    Exhausts subsets in ascending size with short-circuiting; gated to
    n <= 16 because the subset lattice is walked explicitly.
    """
    if f.n > _DEFINED_BY_MAX_N:
        raise CapacityError(f"min_defining_k is gated to n <= {_DEFINED_BY_MAX_N}, got n={f.n}")
    if f.t_f == -1:
        raise UndefinedRadiusError("colouring has t_f = -1; no balls to exclude")
    for size in range(f.n + 1):
        for idx in combinations(range(1, f.n + 1), size):
            if is_defined_by(f, idx):
                return size
    raise AssertionError("the full index set always defines a colouring")


def balanced_partition(n: int, t: int, k: int) -> tuple[tuple[int, ...], ...]:
    """Default b_t^k partition: contiguous blocks of k+1..n, sizes as equal as possible."""
    s = t - (k + 1) // 2
    if s == -1:
        return ()
    count = s + 1
    span = n - k
    _require(
        span >= count * (t + 1),
        f"need n-k >= (s+1)(t+1) = {count * (t + 1)}, got {span}",
    )
    base, rem = divmod(span, count)
    blocks = []
    start = k + 1
    for b in range(count):
        size = base + (1 if b < rem else 0)
        blocks.append(tuple(range(start, start + size)))
        start += size
    return tuple(blocks)


def free_point_codes(n: int, t: int) -> np.ndarray:
    """Codes strictly between the two radius-t balls, ascending."""
    w = weights_vector(n).astype(np.int16)
    return np.nonzero((w > t) & (w < n - t))[0].astype(np.int64)


def table_from_free_layers(n: int, t: int, free_bits: Sequence[int] | np.ndarray) -> Colouring:
    """Table colouring with canonical radius-t balls and the given free-layer bits.

    ``free_bits`` follows ascending code order over the free points.
    """
    _require(t >= 0 and n >= 2 * t + 1, f"t={t} not valid for n={n}")
    free = free_point_codes(n, t)
    bits = np.asarray(free_bits, dtype=np.uint8)
    _require(
        bits.shape == free.shape,
        f"expected {len(free)} free bits for (n={n}, t={t}), got {len(bits)}",
    )
    w = weights_vector(n).astype(np.int16)
    table = np.where(w >= n - t, 1, 0).astype(np.uint8)
    table[free] = bits
    return make(ColouringSpec(kind="table", n=n, table=table.tobytes()))


def complement_colouring(f: Colouring) -> Colouring:
    """The colouring x -> 1 - f(complement(x)); preserves t_f."""
    table = (1 - f.table()[::-1]).astype(np.uint8)
    return make(ColouringSpec(kind="table", n=f.n, table=table.tobytes()))


def table_to_hex(table: bytes) -> str:
    """Hex text form: bit p = colour of code p, highest codes leading."""
    value = 0
    for p, bit in enumerate(table):
        if bit:
            value |= 1 << p
    width = max(1, (len(table) + 3) // 4)
    return format(value, f"0{width}x")


def table_from_hex(hex_text: str, n: int) -> bytes:
    N = 1 << n
    width = max(1, (N + 3) // 4)
    text = hex_text.strip().lower()
    if len(text) != width:
        raise ValidationError(
            f"table hex for n={n} must encode 2^{n} bits in {width} digits, got {len(text)}"
        )
    try:
        value = int(text, 16)
    except ValueError as exc:
        raise ValidationError(f"not a hex string: {hex_text!r}") from exc
    if value >> N:
        raise ValidationError(f"table hex has bits beyond 2^{n}")
    return bytes((value >> p) & 1 for p in range(N))


def spec_to_json_dict(spec: ColouringSpec) -> dict:
    """JSON-ready dict; coordinate sets 1-indexed, table as lowercase hex."""
    out: dict = {"kind": spec.kind, "n": spec.n}
    for name in ("t", "k", "tie", "j", "s"):
        value = getattr(spec, name)
        if value is not None:
            out[name] = value
    if spec.partition is not None:
        out["partition"] = [list(block) for block in spec.partition]
    if spec.table is not None:
        out["table"] = table_to_hex(spec.table)
    return out


def spec_from_json_dict(data: dict) -> ColouringSpec:
    if not isinstance(data, dict):
        raise ValidationError("colouring spec must be a JSON object")
    unknown = set(data) - {"kind", "n", "t", "k", "tie", "partition", "j", "s", "table"}
    if unknown:
        raise ValidationError(f"unknown spec fields: {sorted(unknown)}")
    try:
        kind = data["kind"]
        n = int(data["n"])
    except KeyError as exc:
        raise ValidationError(f"spec is missing required field {exc}") from exc
    partition = None
    if data.get("partition") is not None:
        partition = tuple(tuple(int(i) for i in block) for block in data["partition"])
    table = None
    if data.get("table") is not None:
        table = table_from_hex(str(data["table"]), n)
    return ColouringSpec(
        kind=kind,
        n=n,
        t=None if data.get("t") is None else int(data["t"]),
        k=None if data.get("k") is None else int(data["k"]),
        tie=data.get("tie"),
        partition=partition,
        j=None if data.get("j") is None else int(data["j"]),
        s=None if data.get("s") is None else int(data["s"]),
        table=table,
    )
