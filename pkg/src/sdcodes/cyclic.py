"""Cyclic codes given by a generator polynomial, and the narrow-sense BCH family."""
from __future__ import annotations

from dataclasses import dataclass, field
import math

import numpy as np

from .cosets import (
    DefiningSet,
    bch_bound,
    dual_defining_set,
    is_dual_containing_defining_set,
    self_paired_residues,
)
from .gf import GF, SubfieldEmbedding, field_of_order, splitting_embedding
from .polyring import Poly, minimal_polynomial, reciprocal_normalized


class ConstructionError(ValueError):
    """A construction was asked for outside its preconditions."""


@dataclass(frozen=True)
class CyclicCode:
    field: GF
    n: int
    g: Poly
    defining_set: DefiningSet | None = None
    designed_distance: int | None = None
    embedding: SubfieldEmbedding | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.g.field != self.field:
            raise ValueError("generator polynomial over a different field")
        if not self.g.is_monic():
            raise ValueError("generator polynomial must be monic")
        xn1 = Poly.x_pow_minus_one(self.field, self.n)
        if not self.g.divides(xn1):
            raise ValueError("generator polynomial does not divide x^n - 1")
        if self.defining_set is not None and len(self.defining_set) != self.g.degree:
            raise ValueError("defining set size disagrees with deg g")

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def k(self) -> int:
        return self.n - self.g.degree

    @property
    def check_polynomial(self) -> Poly:
        return Poly.x_pow_minus_one(self.field, self.n) // self.g

    def lower_bound(self) -> int:
        """Best known lower bound on the minimum distance (BCH bound, designed distance)."""
        if self.k == 0:
            return self.n + 1
        lb = 1
        if self.defining_set is not None:
            lb = bch_bound(self.defining_set)
        if self.designed_distance is not None:
            lb = max(lb, self.designed_distance)
        return lb

    def __repr__(self):
        return f"CyclicCode([{self.n}, {self.k}]_{self.q}, g={self.g!r})"

    def to_json(self) -> dict:
        d = {
            "kind": "cyclic",
            "p": self.field.p,
            "k_ext": self.field.k,
            "modulus": list(self.field.modulus),
            "n": self.n,
            "dim": self.k,
            "generator_poly": list(self.g.coeffs),
        }
        if self.defining_set is not None:
            d["defining_set"] = self.defining_set.to_json()
        if self.designed_distance is not None:
            d["designed_distance"] = self.designed_distance
        return d

    @classmethod
    def from_json(cls, d: dict) -> "CyclicCode":
        F = GF(d["p"], d["k_ext"], tuple(d["modulus"]))
        T = DefiningSet.from_json(d["defining_set"]) if "defining_set" in d else None
        code = cls(F, d["n"], Poly(F, d["generator_poly"]), T, d.get("designed_distance"))
        if code.k != d["dim"]:
            raise ValueError("dimension field disagrees with generator polynomial")
        return code


def from_defining_set(T: DefiningSet, embedding: SubfieldEmbedding | None = None,
                      designed_distance: int | None = None) -> CyclicCode:
    """g = product of the minimal polynomials of the coset representatives of T."""
    if embedding is None:
        embedding = splitting_embedding(T.q, T.n)
    if embedding.base.q != T.q:
        raise ValueError("embedding base field does not match the defining set")
    F = embedding.base
    g = Poly(F, [1])
    for r in T.coset_reps:
        g = g * minimal_polynomial(r, T.n, embedding)
    return CyclicCode(F, T.n, g, T, designed_distance, embedding)


def dual_code(C: CyclicCode) -> CyclicCode:
    g_perp = reciprocal_normalized(C.check_polynomial)
    T = dual_defining_set(C.defining_set) if C.defining_set is not None else None
    return CyclicCode(C.field, C.n, g_perp, T, None, C.embedding)


def is_dual_containing(C: CyclicCode) -> bool:
    """C-perp inside C, i.e. g divides the dual generator.

    When the defining set is known the set criterion must agree; a mismatch
    means the polynomial and set descriptions have drifted apart.
    """
    by_poly = C.g.divides(dual_code(C).g)
    if C.defining_set is not None and by_poly != is_dual_containing_defining_set(C.defining_set):
        raise AssertionError("divisibility and defining-set criteria disagree")
    return by_poly


def bch_family_delta(q: int, m: int, mu: int) -> int:
    """(q^((m+1)/2) - q) / mu; raises unless it is an integer >= 2."""
    if m < 1 or m % 2 == 0:
        raise ConstructionError(f"m={m} must be odd")
    num = q ** ((m + 1) // 2) - q
    if mu < 1 or num % mu:
        raise ConstructionError(f"delta = {num}/{mu} is not an integer")
    delta = num // mu
    if delta < 2:
        raise ConstructionError(f"delta = {delta} < 2 gives a degenerate code")
    return delta


def construct_dual_containing_bch(q: int, m: int, mu: int = 1, delta: int | None = None) -> CyclicCode:
    """Narrow-sense BCH code of length (q^m - 1)/mu with defining set C_1 u ... u C_{delta-1}.

    Without ``delta`` the family value (q^((m+1)/2) - q)/mu is used and m must be
    odd; an explicit ``delta`` lifts that restriction.  The result is checked to
    be dual-containing.
    """
    field_of_order(q)
    if mu < 1 or (q ** m - 1) % mu:
        raise ConstructionError(f"mu={mu} does not divide {q}^{m} - 1")
    n = (q ** m - 1) // mu
    if delta is None:
        delta = bch_family_delta(q, m, mu)
    elif delta < 2:
        raise ConstructionError(f"delta = {delta} < 2 gives a degenerate code")
    if math.gcd(n, q) != 1:
        raise ConstructionError(f"length {n} is not coprime to q={q}")
    if delta > n:
        raise ConstructionError(f"delta = {delta} exceeds the length {n}")
    T = DefiningSet.narrow_sense(n, q, delta)
    if not is_dual_containing_defining_set(T):
        paired = self_paired_residues(n, q)
        reason = f"defining set C_1..C_{delta - 1} meets its negation mod {n}"
        if paired:
            reason += f"; self-paired residues exist mod {n} (e.g. {paired[0]} and {-paired[0] % n} share a coset)"
        raise ConstructionError(reason)
    C = from_defining_set(T, splitting_embedding(q, n), designed_distance=delta)
    if not is_dual_containing(C):
        raise AssertionError("constructed BCH code is not dual-containing")
    return C


def generator_matrix(C: CyclicCode) -> np.ndarray:
    """k x n matrix whose rows are x^i g(x), i < k."""
    G = np.zeros((C.k, C.n), dtype=np.int64)
    g = np.asarray(C.g.coeffs, dtype=np.int64)
    for i in range(C.k):
        G[i, i : i + len(g)] = g
    return G


def parity_check_matrix(C: CyclicCode) -> np.ndarray:
    """Generator matrix of the dual code."""
    return generator_matrix(dual_code(C))


def encode(C: CyclicCode, message) -> np.ndarray:
    message = [int(x) for x in message]
    if len(message) != C.k:
        raise ValueError(f"message length {len(message)} != k = {C.k}")
    return (Poly(C.field, message) * C.g).to_vector(C.n)


def is_codeword(C: CyclicCode, word) -> bool:
    return (Poly(C.field, [int(x) for x in word]) % C.g).is_zero()
