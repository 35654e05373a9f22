"""Finite fields GF(p^k) with elements encoded as integers.

An element of GF(p^k) is the polynomial ``sum_j d_j x^j`` over GF(p) reduced
modulo a monic irreducible of degree k; it is encoded as the integer
``sum_j d_j p^j``.  So 0 and 1 are the additive and multiplicative identities,
and for k == 1 the encoding is just the residue mod p.

Scalar methods (``add``, ``mul``, ...) work on Python ints.  The ``v*``
methods accept numpy integer arrays and are used by the enumeration code.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
import math

import numpy as np

TABLE_LIMIT = 1 << 24
_ADD_TABLE_LIMIT = 1 << 12


class FieldError(ValueError):
    """Invalid field parameters or an operation mixing incompatible fields."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q`` as ``(p, k)`` with ``q == p**k``; raise if not a prime power."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    p = next(f for f in range(2, q + 1) if q % f == 0)
    k, r = 0, q
    while r % p == 0:
        r //= p
        k += 1
    if r != 1:
        raise FieldError(f"{q} is not a prime power")
    return p, k


def _factorize(n: int) -> list[int]:
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over GF(p) as coefficient lists, used only to pick a modulus --

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, m, p):
    a = _trim(list(a))
    inv = pow(m[-1], -1, p)
    while len(a) >= len(m):
        c = a[-1] * inv % p
        s = len(a) - len(m)
        for i, mi in enumerate(m):
            a[s + i] = (a[s + i] - c * mi) % p
        _trim(a)
    return a


def _pmulmod(a, b, m, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _pmod(out, m, p)


def _ppowmod(a, e, m, p):
    result, base = [1], _pmod(a, m, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, m, p)
        base = _pmulmod(base, base, m, p)
        e >>= 1
    return result


def _pgcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _psub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def is_irreducible_mod_p(f, p: int) -> bool:
    """Rabin's test for a monic ``f`` (ascending coefficients) over GF(p)."""
    f = _trim(list(f))
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    x = [0, 1]
    if _psub(_ppowmod(x, p ** k, f, p), x, p):
        return False
    for r in _factorize(k):
        h = _psub(_ppowmod(x, p ** (k // r), f, p), x, p)
        g = _pgcd(f, h, p)
        if len(g) > 1:
            return False
    return True


def _x_is_primitive(f, p: int) -> bool:
    k = len(f) - 1
    order = p ** k - 1
    for r in _factorize(order):
        if _ppowmod([0, 1], order // r, f, p) == [1]:
            return False
    return True


def _digits(n: int, p: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        n, d = divmod(n, p)
        out.append(d)
    return out


def choose_modulus(p: int, k: int) -> tuple[int, ...]:
    """Smallest-encoded monic irreducible of degree k over GF(p), preferring x primitive."""
    if k == 1:
        return (0, 1)
    first_irreducible = None
    for code in range(p ** k, 2 * p ** k):
        f = _digits(code, p, k + 1)
        if f[0] == 0 or not is_irreducible_mod_p(f, p):
            continue
        if first_irreducible is None:
            first_irreducible = f
        if _x_is_primitive(f, p):
            return tuple(f)
    return tuple(first_irreducible)


@dataclass(frozen=True, eq=False)
class GF:
    """The field GF(p^k).

    Construct with ``GF(p, k)``; pass ``modulus`` (ascending coefficients) to
    pin a specific defining polynomial, e.g. when reading a serialized code.
    """

    p: int
    k: int = 1
    modulus: tuple[int, ...] | None = None
    table_limit: int = TABLE_LIMIT
    big_field_fallback: bool = True
    q: int = field(init=False)

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise FieldError(f"characteristic {self.p} is not prime")
        if self.k < 1:
            raise FieldError("extension degree must be at least 1")
        object.__setattr__(self, "q", self.p ** self.k)
        if self.q > self.table_limit and not self.big_field_fallback:
            raise FieldError(f"field size {self.q} exceeds the table limit {self.table_limit}")
        if self.modulus is None:
            object.__setattr__(self, "modulus", choose_modulus(self.p, self.k))
        else:
            mod = tuple(int(c) for c in self.modulus)
            if len(mod) != self.k + 1 or mod[-1] != 1 or any(not 0 <= c < self.p for c in mod):
                raise FieldError(f"modulus {mod} is not monic of degree {self.k} over GF({self.p})")
            if self.k > 1 and not is_irreducible_mod_p(mod, self.p):
                raise FieldError(f"modulus {mod} is reducible over GF({self.p})")
            object.__setattr__(self, "modulus", mod)
        object.__setattr__(self, "_tables", None)
        object.__setattr__(self, "_np_cache", None)
        object.__setattr__(self, "_primitive", None)

    # identity: two fields are the same iff they agree on (p, k, modulus)
    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k}, modulus={list(self.modulus)})"

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def has_tables(self) -> bool:
        return self.q <= self.table_limit

    def elements(self) -> range:
        return range(self.q)

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(self, self._check(value))

    def _check(self, a) -> int:
        a = int(a)
        if not 0 <= a < self.q:
            raise FieldError(f"{a} is not an element of {self!r}")
        return a

    # -- polynomial-basis arithmetic (no tables) --

    def _poly_mul(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        if k == 1:
            return a * b % p
        da, db = _digits(a, p, k), _digits(b, p, k)
        prod = _pmulmod(_trim(da), _trim(db), list(self.modulus), p)
        return sum(c * p ** j for j, c in enumerate(prod))

    def _poly_pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._poly_mul(result, a)
            a = self._poly_mul(a, a)
            e >>= 1
        return result

    @property
    def tables(self):
        """``(exp, log)`` lists for the canonical primitive element."""
        t = self._tables
        if t is None:
            if not self.has_tables:
                raise FieldError(f"{self!r} is above the table limit")
            alpha = self.primitive_element()
            exp = [1] * (2 * (self.q - 1))
            log = [0] * self.q
            x = 1
            for i in range(self.q - 1):
                exp[i] = x
                log[x] = i
                x = self._poly_mul(x, alpha)
            exp[self.q - 1:] = exp[: self.q - 1]
            t = (exp, log)
            object.__setattr__(self, "_tables", t)
        return t

    def primitive_element(self) -> int:
        """Smallest encoding of multiplicative order q - 1."""
        if self._primitive is None:
            order = self.q - 1
            primes = _factorize(order)
            for a in range(1, self.q):
                if all(self._poly_pow(a, order // r) != 1 for r in primes):
                    object.__setattr__(self, "_primitive", a)
                    break
        return self._primitive

    # -- scalar arithmetic --

    def add(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        if self.k == 1:
            return (a + b) % p
        out, s = 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * s
            a //= p
            b //= p
            s *= p
        return out

    def neg(self, a: int) -> int:
        p = self.p
        if p == 2:
            return a
        if self.k == 1:
            return -a % p
        out, s = 0, 1
        while a:
            out += (-(a % p) % p) * s
            a //= p
            s *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.k == 1:
            return a * b % self.p
        if self.has_tables:
            exp, log = self.tables
            return exp[log[a] + log[b]]
        return self._poly_mul(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.k == 1:
            return pow(a, -1, self.p)
        if self.has_tables:
            exp, log = self.tables
            return exp[(self.q - 1 - log[a]) % (self.q - 1)]
        return self._poly_pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        if self.k == 1:
            return pow(a, e, self.p)
        e %= self.q - 1
        if self.has_tables:
            exp, log = self.tables
            return exp[log[a] * e % (self.q - 1)]
        return self._poly_pow(a, e)

    def sqrt(self, a: int) -> int:
        """Square root in characteristic 2, ``a ** (q/2)``."""
        if self.p != 2:
            raise FieldError("sqrt is only unique in characteristic 2")
        return self.pow(a, self.q // 2)

    def order(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        n = self.q - 1
        for r in _factorize(n):
            while n % r == 0 and self.pow(a, n // r) == 1:
                n //= r
        return n

    # -- vectorized arithmetic --

    @property
    def _np_tables(self):
        t = self._np_cache
        if t is None:
            exp, log = self.tables
            exp_arr = np.asarray(exp, dtype=np.int64)
            log_arr = np.asarray(log, dtype=np.int64)
            add_tab = neg_tab = None
            if self.p != 2 and self.q <= _ADD_TABLE_LIMIT:
                e = np.arange(self.q)
                add_tab = np.array([[self.add(a, b) for b in e] for a in e], dtype=np.int64)
                neg_tab = np.array([self.neg(a) for a in e], dtype=np.int64)
            t = (exp_arr, log_arr, add_tab, neg_tab)
            object.__setattr__(self, "_np_cache", t)
        return t

    def vadd(self, a, b):
        if self.p == 2:
            return np.bitwise_xor(a, b)
        if self.k == 1:
            return (np.asarray(a) + b) % self.p
        add_tab = self._np_tables[2]
        if add_tab is not None:
            return add_tab[a, b]
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        out = np.zeros(a.shape, dtype=np.int64)
        s = 1
        a, b = a.copy(), b.copy()
        for _ in range(self.k):
            out += ((a % self.p + b % self.p) % self.p) * s
            a //= self.p
            b //= self.p
            s *= self.p
        return out

    def vneg(self, a):
        if self.p == 2:
            return np.asarray(a)
        if self.k == 1:
            return (-np.asarray(a)) % self.p
        neg_tab = self._np_tables[3]
        if neg_tab is not None:
            return neg_tab[a]
        return np.vectorize(self.neg, otypes=[np.int64])(a)

    def vsub(self, a, b):
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b):
        if not self.has_tables:
            return np.vectorize(self.mul, otypes=[np.int64])(a, b)
        exp, log = self._np_tables[:2]
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = exp[log[a] + log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def vdot(self, a, b) -> int:
        """Inner product of two vectors."""
        acc = 0
        for x in np.asarray(self.vmul(a, b)).ravel():
            acc = self.add(acc, int(x))
        return acc

    def vsum(self, a, axis=0):
        """Field sum along ``axis`` of an array of encodings."""
        a = np.moveaxis(np.asarray(a, dtype=np.int64), axis, 0)
        out = np.zeros(a.shape[1:], dtype=np.int64)
        for row in a:
            out = self.vadd(out, row)
        return out


@dataclass(frozen=True)
class FieldElement:
    """An element bound to its field, with the usual operators."""

    field: GF
    value: int

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError("operands live in different fields")
            return other.value
        return self.field._check(other)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._other(other)))

    def __rtruediv__(self, other):
        return FieldElement(self.field, self.field.div(self._other(other), self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def sqrt(self):
        return FieldElement(self.field, self.field.sqrt(self.value))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value}@{self.field!r}"


@lru_cache(maxsize=None)
def field_new(p: int, k: int = 1) -> GF:
    """Cached constructor; equal arguments give the identical field object."""
    return GF(p, k)


def field_of_order(q: int) -> GF:
    return field_new(*prime_power(q))


class SubfieldEmbedding:
    """A verified embedding of ``base`` = GF(q) into ``ext`` = GF(q^m).

    ``ext`` is built over the prime field with degree k*m.  The base modulus is
    mapped to one of its roots inside the order-(q-1) subgroup of ``ext``; the
    resulting map is checked to be a ring homomorphism on all of GF(q).
    """

    def __init__(self, base: GF, m: int):
        if m < 1:
            raise FieldError("embedding degree must be at least 1")
        self.base = base
        self.m = m
        self.ext = field_new(base.p, base.k * m)
        self._image = self._build()
        self._preimage = {b: a for a, b in enumerate(self._image)}
        self._verify()

    def _build(self) -> list[int]:
        base, ext = self.base, self.ext
        if base.k == 1:
            return list(range(base.q))
        step = (ext.q - 1) // (base.q - 1)
        gamma = ext.pow(ext.primitive_element(), step)
        for j in range(1, base.q - 1):
            root = ext.pow(gamma, j)
            acc = 0
            for c in reversed(base.modulus):
                acc = ext.add(ext.mul(acc, root), c)
            if acc == 0:
                break
        else:
            raise FieldError("base modulus has no root in the extension")
        image = []
        for a in range(base.q):
            acc, power = 0, 1
            for d in _digits(a, base.p, base.k):
                acc = ext.add(acc, ext.mul(d, power))
                power = ext.mul(power, root)
            image.append(acc)
        return image

    def _verify(self):
        base, ext, im = self.base, self.ext, self._image
        if len(set(im)) != base.q:
            raise FieldError("embedding is not injective")
        for a in range(base.q):
            for b in range(base.q):
                if im[base.add(a, b)] != ext.add(im[a], im[b]) or im[base.mul(a, b)] != ext.mul(im[a], im[b]):
                    raise FieldError("embedding is not a ring homomorphism")

    def embed(self, a: int) -> int:
        return self._image[a]

    def restrict(self, b: int) -> int:
        """Inverse of ``embed``; raises if ``b`` is outside the subfield."""
        try:
            return self._preimage[b]
        except KeyError:
            raise FieldError(f"{b} does not lie in the embedded {self.base!r}") from None


def multiplicative_order_mod(q: int, n: int) -> int:
    """Smallest m >= 1 with q^m = 1 mod n."""
    if math.gcd(q, n) != 1:
        raise FieldError(f"gcd({q}, {n}) != 1")
    if n == 1:
        return 1
    m, x = 1, q % n
    while x != 1:
        x = x * q % n
        m += 1
    return m


@lru_cache(maxsize=None)
def splitting_embedding(q: int, n: int, m: int | None = None) -> SubfieldEmbedding:
    """Embedding of GF(q) into the smallest GF(q^m) holding the n-th roots of unity."""
    base = field_of_order(q)
    if m is None:
        m = multiplicative_order_mod(q, n)
    if (q ** m - 1) % n:
        raise FieldError(f"{n} does not divide {q}^{m} - 1")
    return SubfieldEmbedding(base, m)
