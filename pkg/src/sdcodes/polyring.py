"""Dense polynomials over GF(q) and the quotient ring GF(q)[x]/(x^n - 1)."""
from __future__ import annotations

from dataclasses import dataclass
import math

import numpy as np

from .cosets import cyclotomic_coset
from .gf import GF, FieldError, SubfieldEmbedding

# degree of the zero polynomial
ZERO_DEGREE = -1


@dataclass(frozen=True)
class Poly:
    """Polynomial with coefficients (field encodings) in ascending degree.

    Trailing zeros are stripped on construction, so the zero polynomial has
    ``coeffs == ()`` and degree ``ZERO_DEGREE``.
    """

    field: GF
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = [int(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        for x in c:
            if not 0 <= x < self.field.q:
                raise FieldError(f"coefficient {x} outside {self.field!r}")
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def x_pow_minus_one(cls, field: GF, n: int) -> "Poly":
        c = [0] * (n + 1)
        c[0] = field.neg(1)
        c[n] = 1
        return cls(field, c)

    @classmethod
    def monomial(cls, field: GF, d: int, c: int = 1) -> "Poly":
        return cls(field, [0] * d + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _same(self, other: "Poly"):
        if not isinstance(other, Poly):
            return NotImplemented
        if other.field != self.field:
            raise FieldError("polynomials over different fields")
        return other

    def __add__(self, other):
        other = self._same(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(F, [F.add(self[i], other[i]) for i in range(n)])

    def __neg__(self):
        return Poly(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._same(other))

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly(self.field, [self.field.mul(c, other) for c in self.coeffs])
        other = self._same(other)
        F = self.field
        if self.is_zero() or other.is_zero():
            return Poly(F)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Poly(F, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = Poly(self.field, [1])
        for _ in range(e):
            out = out * self
        return out

    def __divmod__(self, other):
        other = self._same(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        F = self.field
        rem = list(self.coeffs)
        db = other.degree
        inv_lead = F.inv(other.lead)
        quot = [0] * max(len(rem) - db, 0)
        for s in range(len(rem) - 1 - db, -1, -1):
            c = F.mul(rem[s + db], inv_lead)
            if c:
                quot[s] = c
                for i, b in enumerate(other.coeffs):
                    rem[s + i] = F.sub(rem[s + i], F.mul(c, b))
        return Poly(F, quot), Poly(F, rem[:db] if db > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "Poly") -> bool:
        return (other % self).is_zero()

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self * self.field.inv(self.lead)

    def __call__(self, a: int) -> int:
        return self.evaluate(a)

    def evaluate(self, a: int, embedding: SubfieldEmbedding | None = None) -> int:
        """Horner evaluation; with ``embedding``, ``a`` lives in ``embedding.ext``."""
        if embedding is None:
            F, coeffs = self.field, self.coeffs
        else:
            if embedding.base != self.field:
                raise FieldError("embedding base does not match polynomial field")
            F, coeffs = embedding.ext, [embedding.embed(c) for c in self.coeffs]
        acc = 0
        for c in reversed(coeffs):
            acc = F.add(F.mul(acc, a), c)
        return acc

    def to_vector(self, n: int) -> np.ndarray:
        if len(self.coeffs) > n:
            raise ValueError(f"degree {self.degree} does not fit length {n}")
        v = np.zeros(n, dtype=np.int64)
        v[: len(self.coeffs)] = self.coeffs
        return v

    def __repr__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
                coef = str(c) if (c != 1 or i == 0) else ""
                terms.append(coef + mono)
        return " + ".join(reversed(terms))


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero only when both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def reciprocal_normalized(h: Poly) -> Poly:
    """``x^deg(h) h(1/x) / h(0)``: the monic polynomial whose roots are the inverses of h's."""
    if h.is_zero() or h[0] == 0:
        raise ValueError("reciprocal needs a nonzero constant term")
    rev = Poly(h.field, tuple(reversed(h.coeffs)))
    return rev * h.field.inv(h[0])


def root_of_unity(embedding: SubfieldEmbedding, n: int) -> int:
    """beta = alpha^((Q-1)/n), a primitive n-th root of unity in the extension."""
    ext = embedding.ext
    if (ext.q - 1) % n:
        raise FieldError(f"{n} does not divide {ext.q} - 1")
    return ext.pow(ext.primitive_element(), (ext.q - 1) // n)


def minimal_polynomial(i: int, n: int, embedding: SubfieldEmbedding) -> Poly:
    """Product of (x - beta^j) over the cyclotomic coset of i, pulled back to GF(q)."""
    base, ext = embedding.base, embedding.ext
    if math.gcd(n, base.q) != 1:
        raise FieldError(f"length {n} is not coprime to q = {base.q}")
    beta = root_of_unity(embedding, n)
    acc = [1]
    for j in sorted(cyclotomic_coset(i, n, base.q)):
        r = ext.neg(ext.pow(beta, j))
        nxt = [0] * (len(acc) + 1)
        for d, c in enumerate(acc):
            nxt[d + 1] = ext.add(nxt[d + 1], c)
            nxt[d] = ext.add(nxt[d], ext.mul(c, r))
        acc = nxt
    return Poly(base, [embedding.restrict(c) for c in acc])
