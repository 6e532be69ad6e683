"""Exact linear algebra and code analytics over the prime fields F2 and F3.

Generator matrices carry entries reduced modulo p.  Minimum distances and
weight distributions come from exhaustive enumeration of the row space:
codewords are packed into Python integers (one bit plane over F2, two bit
planes over F3) and visited in reflected Gray order, so every step costs one
packed row addition and one population count.  The coefficient space can be
split across worker processes; the result is a deterministic reduction and
does not depend on the worker count.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

__all__ = [
    "SUPPORTED_PRIMES",
    "EmptyCodeError",
    "FpMatrix",
    "LinearCode",
    "CodeReport",
    "rref",
    "row_space_code",
    "dual_code",
    "min_distance",
    "weight_distribution",
    "analyze",
    "combination_weight",
    "parse_matrix_text",
    "format_matrix_text",
]

SUPPORTED_PRIMES = (2, 3)


class EmptyCodeError(ValueError):
    """The zero code has no nonzero codeword, so the request is undefined."""


def _as_int_matrix(entries) -> np.ndarray:
    a = np.array(entries, dtype=np.int64)
    if a.ndim != 2:
        raise ValueError("matrix entries must form a two-dimensional array")
    return a


@dataclass(frozen=True, eq=False)
class FpMatrix:
    """An integer matrix with every entry reduced modulo p, p in {2, 3}.

    A matrix with zero rows is legal; it generates the zero code.
    """

    p: int
    entries: np.ndarray

    def __post_init__(self) -> None:
        if self.p not in SUPPORTED_PRIMES:
            raise ValueError(f"modulus must be one of {SUPPORTED_PRIMES}, got {self.p}")
        a = _as_int_matrix(self.entries)
        if a.shape[1] < 1:
            raise ValueError("a matrix needs at least one column")
        if a.size and (int(a.min()) < 0 or int(a.max()) >= self.p):
            raise ValueError(f"entries must lie in 0..{self.p - 1}")
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @classmethod
    def reduce(cls, p: int, entries) -> "FpMatrix":
        """Reduce an arbitrary integer matrix modulo p."""
        return cls(p, np.mod(_as_int_matrix(entries), p))

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FpMatrix)
            and self.p == other.p
            and self.entries.shape == other.entries.shape
            and bool(np.array_equal(self.entries, other.entries))
        )


def format_matrix_text(m: FpMatrix) -> str:
    """Render a matrix in the shared text format: 'p rows cols' then rows."""
    lines = [f"{m.p} {m.rows} {m.cols}"]
    for row in m.entries:
        lines.append(" ".join(str(int(v)) for v in row))
    return "\n".join(lines) + "\n"


def parse_matrix_text(text: str) -> FpMatrix:
    """Parse the shared text format, rejecting out-of-range symbols."""
    tokens = text.split()
    if len(tokens) < 3:
        raise ValueError("matrix text needs a 'p rows cols' header")
    try:
        p, rows, cols = (int(t) for t in tokens[:3])
    except ValueError as exc:
        raise ValueError(f"malformed matrix header {tokens[:3]!r}") from exc
    if p not in SUPPORTED_PRIMES:
        raise ValueError(f"modulus must be one of {SUPPORTED_PRIMES}, got {p}")
    if rows < 0 or cols < 1:
        raise ValueError(f"bad matrix shape {rows}x{cols}")
    body = tokens[3:]
    if len(body) != rows * cols:
        raise ValueError(f"expected {rows * cols} entries, found {len(body)}")
    values = []
    for tok in body:
        try:
            v = int(tok)
        except ValueError as exc:
            raise ValueError(f"non-numeric matrix entry {tok!r}") from exc
        if not 0 <= v < p:
            raise ValueError(f"entry {v} out of range for modulus {p}")
        values.append(v)
    a = np.array(values, dtype=np.int64).reshape(rows, cols) if rows else np.zeros((0, cols), dtype=np.int64)
    return FpMatrix(p, a)


def rref(m: FpMatrix) -> tuple[FpMatrix, int, tuple[int, ...]]:
    """Reduced row echelon form over F_p.

    Returns (reduced, rank, pivot_columns); `reduced` keeps only the nonzero
    rows and is the canonical basis of the row space of `m`.
    """
    p = m.p
    a = m.entries.copy()
    nrows, ncols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        hot = None
        for i in range(r, nrows):
            if a[i, c]:
                hot = i
                break
        if hot is None:
            continue
        if hot != r:
            a[[r, hot]] = a[[hot, r]]
        # 1 and 2 are their own inverses mod 2 and mod 3
        a[r] = a[r] * a[r, c] % p
        col = a[:, c].copy()
        col[r] = 0
        a -= np.outer(col, a[r])
        a %= p
        pivots.append(c)
        r += 1
    reduced = a[:r] if r else np.zeros((0, ncols), dtype=np.int64)
    return FpMatrix(p, reduced), r, tuple(pivots)


@dataclass(frozen=True, eq=False)
class LinearCode:
    """A row space over F_p held by its reduced-row-echelon generator."""

    p: int
    n: int
    k: int
    basis: FpMatrix

    def __eq__(self, other) -> bool:
        # canonical bases make code equality a matrix equality
        return (
            isinstance(other, LinearCode)
            and (self.p, self.n, self.k) == (other.p, other.n, other.k)
            and self.basis == other.basis
        )


def row_space_code(m: FpMatrix) -> LinearCode:
    """The linear code generated by the rows of `m`, in canonical form."""
    reduced, rank, _ = rref(m)
    return LinearCode(m.p, m.cols, rank, reduced)


def dual_code(c: LinearCode) -> LinearCode:
    """The orthogonal complement {a : a.b = 0 for every codeword b}."""
    p, n, g = c.p, c.n, c.basis.entries
    pivots = [int(np.argmax(row != 0)) for row in g]
    pivot_set = set(pivots)
    free = [j for j in range(n) if j not in pivot_set]
    if not free:
        return LinearCode(p, n, 0, FpMatrix(p, np.zeros((0, n), dtype=np.int64)))
    rows = np.zeros((len(free), n), dtype=np.int64)
    for idx, f in enumerate(free):
        rows[idx, f] = 1
        for r, pc in enumerate(pivots):
            rows[idx, pc] = (-int(g[r, f])) % p
    return row_space_code(FpMatrix(p, rows))


def combination_weight(m: FpMatrix, coeffs: Sequence[int]) -> int:
    """Hamming weight of the row combination (coeffs . m) reduced mod p."""
    v = np.asarray(list(coeffs), dtype=np.int64)
    if v.shape != (m.rows,):
        raise ValueError(f"expected {m.rows} coefficients, got {v.shape[0] if v.ndim == 1 else v.shape}")
    return int(np.count_nonzero(v @ m.entries % m.p))


# ---------------------------------------------------------------------------
# packed enumeration kernels

_SENTINEL = 1 << 62


def _pack_rows(p: int, g: np.ndarray) -> list:
    """Pack generator rows into machine words.

    F2 rows become single bit masks.  F3 rows become (ones, twos) plane
    pairs: bit j of `ones` marks symbol 1 at position j, bit j of `twos`
    marks symbol 2.
    """
    if p == 2:
        return [int(sum(1 << int(j) for j in np.flatnonzero(row))) for row in g]
    packed = []
    for row in g:
        ones = 0
        twos = 0
        for j, v in enumerate(row):
            if v == 1:
                ones |= 1 << j
            elif v == 2:
                twos |= 1 << j
        packed.append((ones, twos))
    return packed


def _start_word(p: int, g: np.ndarray, prefix: tuple[int, ...]):
    """Packed codeword for the coefficient vector (0,...,0, prefix)."""
    k = g.shape[0]
    coeffs = np.zeros(k, dtype=np.int64)
    if prefix:
        coeffs[k - len(prefix):] = prefix
    vec = coeffs @ g % p if k else np.zeros(g.shape[1], dtype=np.int64)
    packed = _pack_rows(p, vec.reshape(1, -1))
    return packed[0]


def _prefix_tasks(p: int, k: int, workers: int) -> tuple[int, list[tuple[int, ...]]]:
    """Split the coefficient space by pinning the trailing `f` coefficients."""
    if workers <= 1 or k == 0:
        return 0, [()]
    f, size = 0, 1
    while f < k and size < 2 * workers:
        f += 1
        size *= p
    return f, list(itertools.product(range(p), repeat=f))


def _min_weight_chunk2(rows: Sequence[int], word: int, skip_start: bool) -> int:
    best = _SENTINEL if skip_start else word.bit_count()
    for t in range(1, 1 << len(rows)):
        word ^= rows[(t & -t).bit_length() - 1]
        w = word.bit_count()
        if w < best:
            best = w
    return best


def _min_weight_chunk3(rows: Sequence[tuple[int, int]], word: tuple[int, int], skip_start: bool) -> int:
    w1, w2 = word
    best = _SENTINEL if skip_start else (w1 | w2).bit_count()
    f = len(rows)
    if f == 0:
        return best
    # loopless reflected mixed-radix Gray walk: one digit moves by +-1 per step
    digits = [0] * f
    direction = [1] * f
    focus = list(range(f + 1))
    while True:
        j = focus[0]
        focus[0] = 0
        if j == f:
            break
        if direction[j] > 0:
            digits[j] += 1
            r1, r2 = rows[j]
        else:
            digits[j] -= 1
            r2, r1 = rows[j]  # subtracting a row adds its double (planes swap)
        nw = ~(w1 | w2)
        nr = ~(r1 | r2)
        t1 = (w1 & nr) | (r1 & nw) | (w2 & r2)
        t2 = (w2 & nr) | (r2 & nw) | (w1 & r1)
        w1, w2 = t1, t2
        w = (t1 | t2).bit_count()
        if w < best:
            best = w
        d = digits[j]
        if d == 0 or d == 2:
            direction[j] = -direction[j]
            focus[j] = focus[j + 1]
            focus[j + 1] = j + 1
    return best


def _dist_chunk2(rows: Sequence[int], word: int, counts: list[int]) -> None:
    counts[word.bit_count()] += 1
    for t in range(1, 1 << len(rows)):
        word ^= rows[(t & -t).bit_length() - 1]
        counts[word.bit_count()] += 1


def _dist_chunk3(rows: Sequence[tuple[int, int]], word: tuple[int, int], counts: list[int]) -> None:
    w1, w2 = word
    counts[(w1 | w2).bit_count()] += 1
    f = len(rows)
    if f == 0:
        return
    digits = [0] * f
    direction = [1] * f
    focus = list(range(f + 1))
    while True:
        j = focus[0]
        focus[0] = 0
        if j == f:
            break
        if direction[j] > 0:
            digits[j] += 1
            r1, r2 = rows[j]
        else:
            digits[j] -= 1
            r2, r1 = rows[j]
        nw = ~(w1 | w2)
        nr = ~(r1 | r2)
        t1 = (w1 & nr) | (r1 & nw) | (w2 & r2)
        t2 = (w2 & nr) | (r2 & nw) | (w1 & r1)
        w1, w2 = t1, t2
        counts[(t1 | t2).bit_count()] += 1
        d = digits[j]
        if d == 0 or d == 2:
            direction[j] = -direction[j]
            focus[j] = focus[j + 1]
            focus[j + 1] = j + 1


def _min_task(args) -> int:
    p, free_rows, start, skip_start = args
    if p == 2:
        return _min_weight_chunk2(free_rows, start, skip_start)
    return _min_weight_chunk3(free_rows, start, skip_start)


def _dist_task(args) -> list[int]:
    p, n, free_rows, start = args
    counts = [0] * (n + 1)
    if p == 2:
        _dist_chunk2(free_rows, start, counts)
    else:
        _dist_chunk3(free_rows, start, counts)
    return counts


def min_distance(c: LinearCode, workers: int | None = None) -> int:
    """Smallest Hamming weight among the p^k - 1 nonzero codewords.

    With `workers` > 1 the coefficient space is partitioned by pinning
    trailing coefficients and the chunks run in separate processes; the
    minimum over chunks is independent of the split.
    """
    if c.k == 0:
        raise EmptyCodeError("minimum distance is undefined for the zero code")
    nworkers = int(workers or 1)
    g = c.basis.entries
    rows = _pack_rows(c.p, g)
    f, prefixes = _prefix_tasks(c.p, c.k, nworkers)
    free = rows[: c.k - f]
    tasks = []
    for pref in prefixes:
        start = _start_word(c.p, g, pref)
        tasks.append((c.p, free, start, not any(pref)))
    if nworkers <= 1 or len(tasks) == 1:
        return min(_min_task(t) for t in tasks)
    with ProcessPoolExecutor(max_workers=nworkers) as pool:
        chunk = max(1, len(tasks) // nworkers)
        return min(pool.map(_min_task, tasks, chunksize=chunk))


def weight_distribution(c: LinearCode, workers: int | None = None) -> tuple[int, ...]:
    """Codeword counts A_0..A_n by Hamming weight; the counts sum to p^k."""
    nworkers = int(workers or 1)
    g = c.basis.entries
    rows = _pack_rows(c.p, g)
    f, prefixes = _prefix_tasks(c.p, c.k, nworkers)
    free = rows[: c.k - f]
    tasks = [(c.p, c.n, free, _start_word(c.p, g, pref)) for pref in prefixes]
    if nworkers <= 1 or len(tasks) == 1:
        parts = [_dist_task(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=nworkers) as pool:
            chunk = max(1, len(tasks) // nworkers)
            parts = list(pool.map(_dist_task, tasks, chunksize=chunk))
    total = [0] * (c.n + 1)
    for part in parts:
        for w, v in enumerate(part):
            total[w] += v
    return tuple(total)


@dataclass(frozen=True)
class CodeReport:
    """Everything the verification suite needs to know about one code.

    `d` is None for the zero code.  `even` and `doubly_even` are None for
    ternary codes.
    """

    p: int
    n: int
    k: int
    d: int | None
    weight_distribution: tuple[int, ...]
    self_orthogonal: bool
    self_dual: bool
    even: bool | None
    doubly_even: bool | None

    def params(self) -> tuple[int, int, int | None]:
        return (self.n, self.k, self.d)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "weight_distribution": list(self.weight_distribution),
            "self_orthogonal": self.self_orthogonal,
            "self_dual": self.self_dual,
            "even": self.even,
            "doubly_even": self.doubly_even,
        }


def analyze(c: LinearCode, workers: int | None = None) -> CodeReport:
    """Full report: parameters, weight distribution, orthogonality flags."""
    dist = weight_distribution(c, workers=workers)
    d = None
    for w in range(1, c.n + 1):
        if dist[w]:
            d = w
            break
    g = c.basis.entries
    gram = g @ g.T % c.p
    self_orthogonal = not gram.any()
    self_dual = self_orthogonal and 2 * c.k == c.n
    even = doubly_even = None
    if c.p == 2:
        support = [w for w in range(1, c.n + 1) if dist[w]]
        even = all(w % 2 == 0 for w in support)
        doubly_even = all(w % 4 == 0 for w in support)
    return CodeReport(c.p, c.n, c.k, d, dist, self_orthogonal, self_dual, even, doubly_even)
