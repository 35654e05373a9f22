"""Weight enumerators and exact minimum distances.

Codes are enumerated exhaustively: binary codes as bit-packed uint64 words
built by a doubling table and walked in Gray-code order, q-ary codes as
blocks of encoded vectors.  The MacWilliams transform moves an enumerator to
the dual code, so the cheaper of the two sides can always be used.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb
import os

import numpy as np

from .cyclic import CyclicCode, generator_matrix, parity_check_matrix
from .gf import GF
from .linalg import nullspace

DEFAULT_BUDGET = 1 << 26
_LO_BITS = 16
_LO_ROWS = 1 << 15


class BudgetExceeded(RuntimeError):
    """Enumeration would visit more codewords than allowed."""


def default_budget() -> int:
    return int(os.environ.get("SDF_BUDGET", DEFAULT_BUDGET))


def default_threads() -> int:
    return max(1, int(os.environ.get("SDF_THREADS", os.cpu_count() or 1)))


@dataclass(frozen=True)
class WeightEnumerator:
    n: int
    counts: tuple[int, ...]

    def __post_init__(self):
        counts = tuple(int(c) for c in self.counts)
        if len(counts) != self.n + 1:
            raise ValueError("weight enumerator must have n + 1 entries")
        object.__setattr__(self, "counts", counts)

    @property
    def size(self) -> int:
        return sum(self.counts)

    @property
    def min_distance(self) -> int | None:
        """Smallest positive weight, or None for the zero code."""
        return next((w for w in range(1, self.n + 1) if self.counts[w]), None)

    def to_json(self) -> dict:
        return {"n": self.n, "counts": list(self.counts)}

    @classmethod
    def from_json(cls, d: dict) -> "WeightEnumerator":
        return cls(d["n"], d["counts"])


@dataclass(frozen=True)
class DistanceResult:
    d: int | None
    witness: np.ndarray | None
    route: str


def code_matrices(code) -> tuple[GF, np.ndarray]:
    """(field, generator matrix) for a CyclicCode or anything with ``field`` and ``G``."""
    if isinstance(code, CyclicCode):
        return code.field, generator_matrix(code)
    return code.field, np.asarray(code.G, dtype=np.int64)


def dual_matrix(code) -> np.ndarray:
    if isinstance(code, CyclicCode):
        return parity_check_matrix(code)
    F, G = code_matrices(code)
    return nullspace(F, G, code.n)


# -- binary enumeration --

def _pack(G: np.ndarray) -> np.ndarray:
    """Rows of a 0/1 matrix as (k, limbs) uint64, bit j of limb j//64 = coordinate j."""
    k, n = G.shape
    limbs = max(1, -(-n // 64))
    out = np.zeros((k, limbs), dtype=np.uint64)
    for j in range(n):
        out[:, j // 64] |= G[:, j].astype(np.uint64) << np.uint64(j % 64)
    return out


def _unpack(words: np.ndarray, n: int) -> np.ndarray:
    words = np.atleast_2d(words)
    j = np.arange(n)
    bits = (words[:, j // 64] >> (j % 64).astype(np.uint64)) & np.uint64(1)
    return bits.astype(np.int64)


def _lex_smallest(rows: np.ndarray) -> np.ndarray:
    order = np.lexsort(rows.T[::-1])
    return rows[order[0]]


def _better(a, b):
    """Pick the witness with (weight, lexicographic codeword) minimal."""
    if a is None:
        return b
    if b is None:
        return a
    if a[0] != b[0]:
        return a if a[0] < b[0] else b
    return a if tuple(a[1]) <= tuple(b[1]) else b


def _binary_block(table, hi_rows, start, stop, n, want_witness):
    counts = np.zeros(n + 1, dtype=np.int64)
    best = None
    gray = start ^ (start >> 1)
    offset = np.zeros(table.shape[1], dtype=np.uint64)
    for b in range(len(hi_rows)):
        if gray >> b & 1:
            offset ^= hi_rows[b]
    for i in range(start, stop):
        if i > start:
            # Gray step i-1 -> i flips the lowest set bit of i
            offset ^= hi_rows[(i & -i).bit_length() - 1]
        words = table ^ offset
        w = np.bitwise_count(words).sum(axis=1, dtype=np.int64)
        counts += np.bincount(w, minlength=n + 1)
        if want_witness:
            if i == 0:
                w[0] = n + 1
            m = int(w.min())
            if m <= n and (best is None or m <= best[0]):
                cand = _lex_smallest(_unpack(words[w == m], n))
                best = _better(best, (m, cand))
    return counts, best


def _enumerate_binary(G, n, want_witness, threads):
    k = G.shape[0]
    packed = _pack(G)
    lo = min(k, _LO_BITS)
    table = np.zeros((1, packed.shape[1]), dtype=np.uint64)
    for r in range(lo):
        table = np.concatenate([table, table ^ packed[r]])
    hi_rows = packed[lo:]
    total = 1 << (k - lo)
    return _run_blocks(lambda a, b: _binary_block(table, hi_rows, a, b, n, want_witness), total, n, threads)


# -- q-ary enumeration --

def _qary_table(F, rows):
    table = np.zeros((1, rows.shape[1]), dtype=np.int64)
    for r in rows:
        parts = [table] + [F.vadd(table, F.vmul(r, s)) for s in range(1, F.q)]
        table = np.concatenate(parts)
    return table


def _qary_block(F, table, hi_rows, start, stop, n, want_witness):
    counts = np.zeros(n + 1, dtype=np.int64)
    best = None
    kh = len(hi_rows)
    for i in range(start, stop):
        digits = [(i // F.q ** t) % F.q for t in range(kh)]
        offset = np.zeros(n, dtype=np.int64)
        for t, s in enumerate(digits):
            if s:
                offset = F.vadd(offset, F.vmul(hi_rows[t], s))
        words = F.vadd(table, offset)
        w = np.count_nonzero(words, axis=1)
        counts += np.bincount(w, minlength=n + 1)
        if want_witness:
            if i == 0:
                w[0] = n + 1
            m = int(w.min())
            if m <= n and (best is None or m <= best[0]):
                best = _better(best, (m, _lex_smallest(words[w == m])))
    return counts, best


def _enumerate_qary(F, G, n, want_witness, threads):
    k = G.shape[0]
    lo = 0
    while lo < k and F.q ** (lo + 1) <= _LO_ROWS:
        lo += 1
    table = _qary_table(F, G[:lo])
    hi_rows = G[lo:]
    total = F.q ** (k - lo)
    return _run_blocks(lambda a, b: _qary_block(F, table, hi_rows, a, b, n, want_witness), total, n, threads)


def _run_blocks(work, total, n, threads):
    threads = max(1, min(threads, total))
    bounds = [total * t // threads for t in range(threads + 1)]
    spans = [(bounds[t], bounds[t + 1]) for t in range(threads) if bounds[t] < bounds[t + 1]]
    if len(spans) == 1:
        results = [work(*spans[0])]
    else:
        with ThreadPoolExecutor(len(spans)) as pool:
            results = list(pool.map(lambda s: work(*s), spans))
    counts = np.zeros(n + 1, dtype=np.int64)
    best = None
    for c, b in results:
        counts += c
        best = _better(best, b)
    return counts, best


def _enumerate(F, G, n, budget, want_witness, threads):
    k = G.shape[0]
    if budget is None:
        budget = default_budget()
    if threads is None:
        threads = default_threads()
    if F.q ** k > budget:
        raise BudgetExceeded(f"{F.q}^{k} codewords exceed the budget of {budget}")
    if k == 0:
        counts = np.zeros(n + 1, dtype=np.int64)
        counts[0] = 1
        return counts, None
    if F.q == 2:
        return _enumerate_binary(G, n, want_witness, threads)
    return _enumerate_qary(F, G, n, want_witness, threads)


def weight_enumerator_exhaustive(code, budget: int | None = None, threads: int | None = None) -> WeightEnumerator:
    F, G = code_matrices(code)
    counts, _ = _enumerate(F, G, code.n, budget, False, threads)
    return WeightEnumerator(code.n, counts.tolist())


def krawtchouk(j: int, i: int, n: int, q: int) -> int:
    return sum((-1) ** s * (q - 1) ** (j - s) * comb(i, s) * comb(n - i, j - s) for s in range(j + 1))


def macwilliams_transform(W: WeightEnumerator, q: int, k: int) -> WeightEnumerator:
    """Enumerator of the dual of an [n, k]_q code with enumerator W (exact integers)."""
    n = W.n
    if W.size != q ** k:
        raise ValueError(f"enumerator sums to {W.size}, not {q}^{k}")
    out = []
    for j in range(n + 1):
        s = sum(a * krawtchouk(j, i, n, q) for i, a in enumerate(W.counts) if a)
        b, r = divmod(s, q ** k)
        if r:
            raise ValueError("non-integral dual enumerator; input is not a linear code's enumerator")
        out.append(b)
    return WeightEnumerator(n, out)


def weight_enumerator(code, strategy: str = "auto", budget: int | None = None,
                      threads: int | None = None) -> WeightEnumerator:
    if _pick_route(code, strategy) == "exhaustive":
        return weight_enumerator_exhaustive(code, budget, threads)
    F = code.field
    H = dual_matrix(code)
    counts, _ = _enumerate(F, H, code.n, budget, False, threads)
    return macwilliams_transform(WeightEnumerator(code.n, counts.tolist()), F.q, H.shape[0])


def _pick_route(code, strategy):
    if strategy not in ("auto", "exhaustive", "via_dual"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if strategy == "auto":
        return "exhaustive" if code.k <= code.n - code.k else "via_dual"
    return strategy


def min_distance(code, strategy: str = "auto", budget: int | None = None,
                 threads: int | None = None) -> DistanceResult:
    """Exact minimum distance; ``d`` is None for the zero code.

    The exhaustive route also returns a minimum-weight witness (the
    lexicographically smallest one); the dual route does not.
    """
    route = _pick_route(code, strategy)
    if code.k == 0:
        return DistanceResult(None, None, route)
    if route == "exhaustive":
        F, G = code_matrices(code)
        counts, best = _enumerate(F, G, code.n, budget, True, threads)
        return DistanceResult(best[0], best[1], route)
    W = weight_enumerator(code, "via_dual", budget, threads)
    return DistanceResult(W.min_distance, None, route)


def low_weight_codeword(code, w: int, max_subsets: int = 10_000_000) -> np.ndarray | None:
    """A binary codeword of weight exactly ``w``, or None if there is none.

    Exact meet-in-the-middle on syndromes: a weight-w word is a codeword iff
    the syndromes of a floor(w/2)-subset and a disjoint ceil(w/2)-subset of its
    support agree.
    """
    F = code.field
    if F.q != 2:
        raise NotImplementedError("low-weight search is implemented for binary codes")
    n = code.n
    H = dual_matrix(code)
    if H.shape[0] == 0:
        out = np.zeros(n, dtype=np.int64)
        out[:w] = 1
        return out if 0 < w <= n else None
    a, b = w // 2, w - w // 2
    if comb(n, b) > max_subsets:
        raise BudgetExceeded(f"C({n},{b}) subsets exceed {max_subsets}")
    r = H.shape[0]
    dtype = np.uint64 if r <= 64 else object
    syn = np.array([sum(int(H[i, j]) << i for i in range(r)) for j in range(n)], dtype=object).astype(dtype)
    big = np.array(list(combinations(range(n), b)), dtype=np.int64).reshape(comb(n, b), b)
    syn_big = np.zeros(len(big), dtype=dtype)
    for t in range(b):
        syn_big = syn_big ^ syn[big[:, t]]
    order = np.argsort(syn_big, kind="stable")
    sorted_syn = syn_big[order]
    small = np.array(list(combinations(range(n), a)), dtype=np.int64).reshape(comb(n, a), a)
    syn_small = np.zeros(len(small), dtype=dtype)
    for t in range(a):
        syn_small = syn_small ^ syn[small[:, t]]
    left = np.searchsorted(sorted_syn, syn_small, "left")
    right = np.searchsorted(sorted_syn, syn_small, "right")
    for i in np.nonzero(right > left)[0]:
        for row in order[left[i]:right[i]]:
            support = set(small[i].tolist()) | set(big[row].tolist())
            if len(support) == w:
                out = np.zeros(n, dtype=np.int64)
                out[sorted(support)] = 1
                return out
    return None


def extremal_upper_bound(n: int, q: int) -> int:
    """Closed-form upper bound on d for binary or ternary self-dual codes of length n."""
    if n % 2:
        raise ValueError("self-dual codes have even length")
    if q == 2:
        return 4 * (n // 24) + (6 if n % 24 == 22 else 4)
    if q == 3:
        return 3 * (n // 12) + 3
    raise ValueError(f"no closed-form extremal bound for q={q}")
