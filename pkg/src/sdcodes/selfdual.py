"""Self-dual codes of length 2n from a dual-containing code of length n.

Given C with C-perp inside C and lam with lam^2 = -1, the code

    { (u | lam*u + v) : u in C, v in C-perp }

is self-dual with minimum distance min(d(C-perp), 2 d(C)).  This module builds
it, checks it, relates the binary case to a repeated-root cyclic code, and
assembles the BCH-based families.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
import math

import numpy as np

from .cosets import dual_containing_unions
from .cyclic import (
    ConstructionError,
    CyclicCode,
    construct_dual_containing_bch,
    dual_code,
    from_defining_set,
    generator_matrix,
    is_dual_containing,
)
from .distance import BudgetExceeded, dual_matrix, low_weight_codeword, min_distance
from .gf import GF, field_of_order, splitting_embedding
from .linalg import in_row_space, matmul, nullspace, rank, rref, same_row_space
from .polyring import Poly


class EquivalenceError(AssertionError):
    """The candidate coordinate permutation did not map the code onto the cyclic code."""


class BoundViolation(AssertionError):
    """A computed lower bound fell below the claimed family bound."""


@dataclass(frozen=True)
class DistanceBounds:
    lower: int
    upper: int

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    def to_json(self) -> dict:
        return {"lower": self.lower, "upper": self.upper, "exact": self.exact}

    @classmethod
    def from_json(cls, d: dict) -> "DistanceBounds":
        b = cls(d["lower"], d["upper"])
        if b.exact != d.get("exact", b.exact):
            raise ValueError("distance 'exact' flag disagrees with its bounds")
        return b


def _weight(v) -> int:
    return int(np.count_nonzero(v))


@dataclass(frozen=True, eq=False)
class LinearCode:
    """Linear code kept as a generator matrix in reduced row echelon form."""

    field: GF
    G: np.ndarray
    provenance: dict = field(default_factory=dict)
    distance: DistanceBounds | None = None

    def __post_init__(self):
        G = np.asarray(self.G, dtype=np.int64)
        if G.ndim != 2:
            raise ValueError("generator matrix must be 2-d")
        R, _ = rref(self.field, G) if G.shape[0] else (G, [])
        R = R.reshape(-1, G.shape[1])
        R.setflags(write=False)
        object.__setattr__(self, "G", R)
        if self.distance is None:
            object.__setattr__(self, "distance", _default_bounds(R))

    @property
    def n(self) -> int:
        return self.G.shape[1]

    @property
    def k(self) -> int:
        return self.G.shape[0]

    @property
    def q(self) -> int:
        return self.field.q

    def __eq__(self, other):
        return (
            isinstance(other, LinearCode)
            and self.field == other.field
            and np.array_equal(self.G, other.G)
            and self.provenance == other.provenance
            and self.distance == other.distance
        )

    def __repr__(self):
        d = self.distance
        dist = str(d.lower) if d.exact else f"{d.lower}..{d.upper}"
        return f"LinearCode([{self.n}, {self.k}, {dist}]_{self.q})"

    def with_distance(self, bounds: DistanceBounds) -> "LinearCode":
        return LinearCode(self.field, self.G, self.provenance, bounds)

    def to_json(self) -> dict:
        return {
            "kind": "linear",
            "p": self.field.p,
            "k_ext": self.field.k,
            "modulus": list(self.field.modulus),
            "n": self.n,
            "dim": self.k,
            "generator_matrix": self.G.tolist(),
            "provenance": self.provenance,
            "distance": self.distance.to_json(),
        }

    @classmethod
    def from_json(cls, d: dict) -> "LinearCode":
        F = GF(d["p"], d["k_ext"], tuple(d["modulus"]))
        G = np.array(d["generator_matrix"], dtype=np.int64).reshape(-1, d["n"])
        code = cls(F, G, d.get("provenance", {}), DistanceBounds.from_json(d["distance"]))
        if code.k != d["dim"]:
            raise ValueError("dimension field disagrees with generator matrix")
        return code


def _default_bounds(G: np.ndarray) -> DistanceBounds:
    k, n = G.shape
    if k == 0:
        return DistanceBounds(n + 1, n + 1)
    upper = min(n - k + 1, min(_weight(r) for r in G))
    return DistanceBounds(1, upper)


def is_self_dual(L: LinearCode) -> bool:
    if L.n % 2 or L.k != L.n // 2:
        return False
    if rank(L.field, L.G) != L.k:
        return False
    return not matmul(L.field, L.G, L.G.T).any()


def is_self_orthogonal(F: GF, G) -> bool:
    G = np.asarray(G, dtype=np.int64)
    return G.size == 0 or not matmul(F, G, G.T).any()


def find_lambda(F: GF) -> int:
    """Smallest element with lam^2 = -1 (1 in characteristic 2)."""
    if F.p == 2:
        return 1
    if F.q % 4 != 1:
        raise ConstructionError(f"-1 is not a square in GF({F.q}) (q = 3 mod 4)")
    minus_one = F.neg(1)
    return next(a for a in range(1, F.q) if F.mul(a, a) == minus_one)


# -- component bookkeeping --

def _component_bounds(C) -> tuple[int, int]:
    """Lower bounds (d(C), d(C-perp)) available without enumeration."""
    if isinstance(C, CyclicCode):
        return C.lower_bound(), dual_code(C).lower_bound()
    dual = C.provenance.get("dual_distance")
    if dual:
        return C.distance.lower, dual["lower"]
    return C.distance.lower, (C.n + 1 if C.k == C.n else 1)


def _check_dual_containing(C, F, G, H):
    if isinstance(C, CyclicCode):
        ok = is_dual_containing(C)
    else:
        ok = is_self_orthogonal(F, H)
    if not ok:
        raise ConstructionError("component code is not dual-containing")
    if G.shape[0] + H.shape[0] != C.n:
        raise ConstructionError("dim C + dim C-perp != n")


def u_lambda_u_v(C, lam: int | None = None, *, component_distances: tuple[int, int] | None = None,
                 witnesses: tuple | None = None) -> LinearCode:
    """Build the [2n, n] self-dual code {(u | lam u + v)}.

    ``component_distances`` may supply better lower bounds (e.g. exact values)
    for d(C) and d(C-perp); ``witnesses`` may supply codewords (u, v) of C and
    C-perp that are used as upper-bound evidence.
    """
    F = C.field
    if lam is None:
        lam = find_lambda(F)
    if lam == 0 or F.mul(lam, lam) != F.neg(1):
        raise ConstructionError(f"{lam} does not square to -1 in GF({F.q})")
    G = generator_matrix(C) if isinstance(C, CyclicCode) else np.asarray(C.G, dtype=np.int64)
    H = dual_matrix(C)
    _check_dual_containing(C, F, G, H)
    n = C.n
    top = np.hstack([G, F.vmul(G, lam)])
    bottom = np.hstack([np.zeros_like(H), H])
    rows = np.vstack([top, bottom])

    d_c, d_perp = component_distances or _component_bounds(C)
    lower = min(d_perp, 2 * d_c)
    upper = n + 1
    candidates = [2 * _weight(r) for r in G] + [_weight(r) for r in H]
    if witnesses is not None:
        u, v = witnesses
        if u is not None:
            if not in_row_space(F, G, u):
                raise ValueError("witness u is not a codeword of C")
            candidates.append(2 * _weight(u))
        if v is not None:
            if not in_row_space(F, H, v):
                raise ValueError("witness v is not a codeword of C-perp")
            candidates.append(_weight(v))
    if candidates:
        upper = min(upper, *candidates)
    if lower > upper:
        raise AssertionError(f"lower bound {lower} exceeds witness weight {upper}")

    prov = {"construction": "u_lambda_u_v", "lambda": int(lam), "component": C.to_json()}
    L = LinearCode(F, rows, prov, DistanceBounds(lower, upper))
    if L.k != n:
        raise AssertionError(f"construction has dimension {L.k}, expected {n}")
    if not is_self_dual(L):
        raise AssertionError("construction is not self-dual")
    return L


def component_of(L: LinearCode):
    """Rebuild the component code recorded in a construction's provenance."""
    comp = L.provenance.get("component")
    if comp is None:
        raise ValueError("code has no recorded component")
    if comp["kind"] == "cyclic":
        return CyclicCode.from_json(comp)
    return LinearCode.from_json(comp)


@dataclass(frozen=True)
class CertifiedDistance:
    d: int
    witness: np.ndarray | None
    component_distance: int | None
    dual_distance: int | None


def certify_by_witness(L: LinearCode) -> CertifiedDistance | None:
    """Exact distance without enumeration, when a codeword meets the stored lower bound.

    Candidates are the generator rows and, for binary components, a
    (u | u) or (0 | v) word found by the low-weight search.  Returns None
    when no codeword of weight equal to the lower bound turns up.
    """
    d = L.distance.lower
    F = L.field
    for row in L.G:
        if _weight(row) == d:
            return CertifiedDistance(d, row.astype(np.int64), None, None)
    if F.q != 2 or L.provenance.get("construction") != "u_lambda_u_v":
        return None
    C = component_of(L)
    n = C.n
    tries = []
    if d % 2 == 0:
        tries.append((C, d // 2, lambda u: np.concatenate([u, u])))
    dual = dual_code(C) if isinstance(C, CyclicCode) else LinearCode(F, dual_matrix(C))
    tries.append((dual, d, lambda v: np.concatenate([np.zeros(n, dtype=np.int64), v])))
    for code, w, lift in tries:
        try:
            c = low_weight_codeword(code, w)
        except BudgetExceeded:
            continue
        if c is not None:
            witness = lift(c)
            if not in_row_space(F, L.G, witness):
                raise AssertionError("lifted witness is not a codeword")
            return CertifiedDistance(d, witness, None, None)
    return None


def certify_distance(C, lam: int | None = None, budget: int | None = None) -> CertifiedDistance:
    """Exact distance of the construction from exact component distances.

    min(d(C-perp), 2 d(C)) is a lower bound and is attained by (0 | v) or
    (u | lam u) for minimum-weight v in C-perp, u in C, so it is exact.
    """
    F = C.field
    if lam is None:
        lam = find_lambda(F)
    dual = dual_code(C) if isinstance(C, CyclicCode) else LinearCode(F, dual_matrix(C))
    rc = min_distance(C, "auto", budget)
    rd = min_distance(dual, "auto", budget)
    u, v = rc.witness, rd.witness
    n = C.n
    if rc.d is None:
        d = rd.d
    elif rd.d is None:
        d = 2 * rc.d
    else:
        d = min(rd.d, 2 * rc.d)
    witness = None
    if rc.d is not None and 2 * rc.d == d:
        if u is None and F.q == 2:
            u = low_weight_codeword(C, rc.d)
        if u is not None:
            witness = np.concatenate([u, F.vmul(u, lam)])
    if witness is None and rd.d == d:
        if v is None and F.q == 2:
            v = low_weight_codeword(dual, rd.d)
        if v is not None:
            witness = np.concatenate([np.zeros(n, dtype=np.int64), v])
    return CertifiedDistance(d, witness, rc.d, rd.d)


# -- repeated-root form of the binary construction --

def crt_permutation(n: int) -> list[int]:
    """Position h*n + i goes to the j in Z_2n with j = h mod 2 and j = i mod n (n odd)."""
    if n % 2 == 0:
        raise ValueError("CRT interleaving needs odd n")
    perm = [0] * (2 * n)
    for j in range(2 * n):
        perm[(j % 2) * n + j % n] = j
    return perm


def permute_columns(G, perm) -> np.ndarray:
    G = np.asarray(G)
    out = np.zeros_like(G)
    out[:, perm] = G
    return out


def repeated_root_equivalence(C: CyclicCode, L: LinearCode) -> tuple[list[int], Poly]:
    """Permutation mapping L onto the length-2n cyclic code generated by g1^2 g2.

    Here g1 generates C and g1 g2 generates C-perp.  Raises EquivalenceError
    if the permuted row space differs.
    """
    if C.q != 2:
        raise ValueError("repeated-root equivalence is for binary codes")
    if C.n % 2 == 0:
        raise ValueError("component length must be odd")
    if L.n != 2 * C.n:
        raise ValueError("code lengths do not match")
    g1 = C.g
    g1g2 = dual_code(C).g
    g2, r = divmod(g1g2, g1)
    if not r.is_zero():
        raise ConstructionError("component code is not dual-containing")
    target = g1 * g1 * g2
    cyc = CyclicCode(C.field, 2 * C.n, target)
    perm = crt_permutation(C.n)
    P = permute_columns(L.G, perm)
    if not same_row_space(C.field, P, generator_matrix(cyc)):
        raise EquivalenceError("CRT-permuted code differs from the cyclic code generated by g1^2 g2")
    if not is_shift_closed(C.field, P, 1):
        raise EquivalenceError("permuted code is not closed under the cyclic shift")
    return perm, target


def interleave_permutation(n: int) -> list[int]:
    """Position h*n + i goes to 2i + h, so (u | w) becomes (u0, w0, u1, w1, ...)."""
    return [2 * (c % n) + c // n for c in range(2 * n)]


def is_shift_closed(F: GF, G, s: int) -> bool:
    G = np.asarray(G)
    return same_row_space(F, G, np.roll(G, s, axis=1))


def is_two_shift_closed(L: LinearCode) -> bool:
    """Closure under the shift by two positions, in the interleaved (u0, w0, u1, w1, ...) order."""
    half = L.n // 2
    return is_shift_closed(L.field, permute_columns(L.G, interleave_permutation(half)), 2)


# -- Reed-Solomon route (characteristic 2) --

def _is_mds(F: GF, G) -> bool:
    G = np.asarray(G)
    k, n = G.shape
    return all(rank(F, G[:, list(cols)]) == k for cols in combinations(range(n), k))


def rs_dual_containing(F: GF, n: int, k_so: int) -> LinearCode:
    """Dual of a self-orthogonal GRS code: a dual-containing MDS [n, n - k_so, k_so + 1] code.

    Evaluation points are the first n field elements; the column multipliers
    are square roots of prod_{j != i} (a_i - a_j)^{-1}.
    """
    if F.p != 2:
        raise ConstructionError("square roots of all multipliers need characteristic 2")
    if not 1 <= n <= F.q:
        raise ConstructionError(f"need 1 <= n <= q = {F.q}")
    if not 0 <= 2 * k_so <= n:
        raise ConstructionError(f"need 0 <= k_so <= n/2, got k_so = {k_so}")
    points = list(range(n))
    mult = []
    for i, a in enumerate(points):
        prod = 1
        for j, b in enumerate(points):
            if j != i:
                prod = F.mul(prod, F.sub(a, b))
        mult.append(F.sqrt(F.inv(prod)))
    grs = np.array([[F.mul(v, F.pow(a, t)) for a, v in zip(points, mult)] for t in range(k_so)],
                   dtype=np.int64).reshape(k_so, n)
    if not is_self_orthogonal(F, grs):
        raise AssertionError("GRS code with square-root multipliers is not self-orthogonal")
    if k_so and not _is_mds(F, grs):
        raise AssertionError("GRS code is not MDS")
    G = nullspace(F, grs, n)
    prov = {"construction": "rs_dual", "points": points, "multipliers": mult, "kso": k_so}
    d = k_so + 1
    if k_so:
        prov["dual_distance"] = DistanceBounds(n - k_so + 1, n - k_so + 1).to_json()
    return LinearCode(F, G, prov, DistanceBounds(d, d))


# -- families --

def _bound_binary(N, q, mu):
    return math.sqrt(N) - 2


def _bound_binary_mu(N, q, mu):
    return math.sqrt(N / mu) - 2 / mu


def _bound_qary_mu(N, q, mu):
    return math.sqrt(q / (2 * mu)) * math.sqrt(N) - q / mu


def _bound_qary(N, q, mu):
    return math.sqrt(q / 2) * math.sqrt(N) - q


# tag -> (field condition, mu must be 1, claimed bound as a function of total length)
FAMILIES = {
    "4.1": ("binary", True, _bound_binary),
    "4.1c": ("binary", False, _bound_binary_mu),
    "5.1": ("q1mod4", False, _bound_qary_mu),
    "5.1c": ("q1mod4", True, _bound_qary),
}


@dataclass(frozen=True)
class FamilyMember:
    code: LinearCode
    component: CyclicCode
    claimed_bound: float
    computed_bound: int
    delta: int


def family(q: int, m: int, mu: int, tag: str) -> FamilyMember:
    """Self-dual [2(q^m-1)/mu, (q^m-1)/mu] code from the narrow-sense BCH family.

    The computed bound min(BCH bound of the dual, 2 * BCH bound of C) must reach
    the family's claimed real-valued bound; BoundViolation is raised otherwise.
    """
    if tag not in FAMILIES:
        raise ValueError(f"unknown family {tag!r}; expected one of {sorted(FAMILIES)}")
    kind, mu_one, bound = FAMILIES[tag]
    field_of_order(q)
    if kind == "binary" and q != 2:
        raise ConstructionError(f"family {tag} is binary; got q={q}")
    if kind == "q1mod4" and q % 4 != 1:
        raise ConstructionError(f"family {tag} needs q = 1 mod 4; got q={q}")
    if mu_one and mu != 1:
        raise ConstructionError(f"family {tag} has mu = 1; got mu={mu}")
    C = construct_dual_containing_bch(q, m, mu)
    L = u_lambda_u_v(C)
    claimed = bound(L.n, q, mu)
    computed = L.distance.lower
    if computed < claimed:
        raise BoundViolation(f"computed bound {computed} < claimed {claimed:.4f} for q={q}, m={m}, mu={mu}")
    prov = dict(L.provenance)
    prov["family"] = {"tag": tag, "q": q, "m": m, "mu": mu, "claimed_bound": claimed}
    L = LinearCode(L.field, L.G, prov, L.distance)
    return FamilyMember(L, C, claimed, computed, C.designed_distance)


def search_dual_containing(n: int, q: int, target_dim: int, limit: int | None = None) -> list[CyclicCode]:
    """Dual-containing cyclic codes of dimension ``target_dim``, lexicographic in coset reps."""
    if not 0 <= target_dim <= n:
        return []
    out = []
    embedding = None
    for T in dual_containing_unions(n, q, n - target_dim):
        if limit is not None and len(out) >= limit:
            break
        if embedding is None:
            embedding = splitting_embedding(q, n)
        out.append(from_defining_set(T, embedding))
    return out
