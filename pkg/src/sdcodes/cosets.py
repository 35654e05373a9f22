"""Cyclotomic cosets, defining sets and the BCH bound."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple
import math


class CosetError(ValueError):
    pass


def _require_coprime(n: int, q: int):
    if n < 1:
        raise CosetError("length must be positive")
    if math.gcd(n, q) != 1:
        raise CosetError(f"gcd(n={n}, q={q}) != 1")


def cyclotomic_coset(i: int, n: int, q: int) -> frozenset[int]:
    """Orbit of ``i`` under multiplication by ``q`` mod ``n``."""
    _require_coprime(n, q)
    i %= n
    out, x = [i], i * q % n
    while x != i:
        out.append(x)
        x = x * q % n
    return frozenset(out)


def all_cosets(n: int, q: int) -> list[frozenset[int]]:
    """Partition of Z_n into cyclotomic cosets, ordered by minimal element."""
    _require_coprime(n, q)
    seen = set()
    out = []
    for i in range(n):
        if i not in seen:
            c = cyclotomic_coset(i, n, q)
            seen |= c
            out.append(c)
    return out


@dataclass(frozen=True)
class DefiningSet:
    """A union of q-cyclotomic cosets mod n."""

    n: int
    q: int
    members: frozenset[int]

    def __post_init__(self):
        _require_coprime(self.n, self.q)
        members = frozenset(int(i) % self.n for i in self.members)
        if any(i * self.q % self.n not in members for i in members):
            raise CosetError("defining set is not a union of cyclotomic cosets")
        object.__setattr__(self, "members", members)

    @classmethod
    def from_reps(cls, n: int, q: int, reps: Iterable[int]) -> "DefiningSet":
        members = set()
        for r in reps:
            members |= cyclotomic_coset(r, n, q)
        return cls(n, q, frozenset(members))

    @classmethod
    def narrow_sense(cls, n: int, q: int, delta: int) -> "DefiningSet":
        """C_1 u ... u C_{delta-1}."""
        return cls.from_reps(n, q, range(1, delta))

    @property
    def sorted_members(self) -> list[int]:
        return sorted(self.members)

    @property
    def coset_reps(self) -> list[int]:
        return sorted(i for i in self.members if min(cyclotomic_coset(i, self.n, self.q)) == i)

    def __len__(self):
        return len(self.members)

    def __contains__(self, i):
        return i % self.n in self.members

    def complement(self) -> "DefiningSet":
        return DefiningSet(self.n, self.q, frozenset(range(self.n)) - self.members)

    def to_json(self) -> dict:
        return {"n": self.n, "q": self.q, "coset_reps": self.coset_reps}

    @classmethod
    def from_json(cls, d: dict) -> "DefiningSet":
        return cls.from_reps(d["n"], d["q"], d["coset_reps"])


def negate_set(T: DefiningSet) -> DefiningSet:
    return DefiningSet(T.n, T.q, frozenset(-i % T.n for i in T.members))


def dual_defining_set(T: DefiningSet) -> DefiningSet:
    """Defining set (T^c)^{-1} of the dual code."""
    return negate_set(T.complement())


def is_dual_containing_defining_set(T: DefiningSet) -> bool:
    return not (T.members & negate_set(T).members)


def self_paired_residues(n: int, q: int) -> list[int]:
    """Nonzero a with -a in the coset of a."""
    _require_coprime(n, q)
    return [a for a in range(1, n) if -a % n in cyclotomic_coset(a, n, q)]


def has_self_paired_residue(n: int, q: int) -> bool:
    return bool(self_paired_residues(n, q))


def longest_cyclic_run(members: frozenset[int], n: int) -> int:
    if len(members) >= n:
        return n
    if not members:
        return 0
    # start scanning just after a gap so that wrap-around runs are counted once
    start = next(i for i in range(n) if i not in members)
    best = run = 0
    for t in range(1, n + 1):
        if (start + t) % n in members:
            run += 1
            best = max(best, run)
        else:
            run = 0
    return best


def bch_bound(T: DefiningSet) -> int:
    """1 + longest run of consecutive residues in T.

    For T = Z_n the code is zero and ``n + 1`` is returned as a stand-in for
    "no nonzero codeword"; this keeps the bound monotone in T.
    """
    if len(T) == T.n:
        return T.n + 1
    return 1 + longest_cyclic_run(T.members, T.n)


def dual_containing_unions(n: int, q: int, size: int) -> Iterable[DefiningSet]:
    """All dual-containing unions of nonzero cosets with ``size`` elements.

    Yielded in lexicographic order of the sorted tuple of coset representatives.
    """
    cosets = [c for c in all_cosets(n, q) if 0 not in c]
    usable = [c for c in cosets if not (c & {-i % n for i in c})]
    reps = [min(c) for c in usable]
    sizes = {min(c): len(c) for c in usable}
    neg_rep = {min(c): min(-i % n for i in c) for c in usable}

    def rec(start, chosen, total, blocked):
        if total == size:
            yield tuple(chosen)
            return
        for idx in range(start, len(reps)):
            r = reps[idx]
            if r in blocked or total + sizes[r] > size:
                continue
            chosen.append(r)
            yield from rec(idx + 1, chosen, total + sizes[r], blocked | {neg_rep[r]})
            chosen.pop()

    for combo in rec(0, [], 0, frozenset()):
        yield DefiningSet.from_reps(n, q, combo)


class GcdIdentities(NamedTuple):
    minus_minus: int
    plus_minus: int
    predicted_minus_minus: int
    predicted_plus_minus: int


def gcd_identities(q: int, a: int, b: int) -> GcdIdentities:
    """gcd(q^a - 1, q^b - 1) and gcd(q^a + 1, q^b - 1), checked against their closed forms."""
    if q < 2 or a < 1 or b < 1:
        raise ValueError("need q > 1 and a, b >= 1")
    g = math.gcd(a, b)
    mm = math.gcd(q ** a - 1, q ** b - 1)
    pm = math.gcd(q ** a + 1, q ** b - 1)
    pred_mm = q ** g - 1
    if (b // g) % 2 == 0:
        pred_pm = q ** g + 1
    else:
        pred_pm = 1 if q % 2 == 0 else 2
    if (mm, pm) != (pred_mm, pred_pm):
        raise AssertionError(f"gcd identity fails at q={q}, a={a}, b={b}: {(mm, pm)} vs {(pred_mm, pred_pm)}")
    return GcdIdentities(mm, pm, pred_mm, pred_pm)
