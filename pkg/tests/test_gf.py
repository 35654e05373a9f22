import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sdcodes.gf import GF, FieldError, SubfieldEmbedding, field_new, prime_power

FIELDS = [(2, 1), (3, 1), (5, 1), (13, 1), (2, 2), (2, 3), (2, 4), (3, 2), (5, 3), (2, 6), (2, 7)]


def brute_poly_mulmod(a, b, mod, p):
    """Schoolbook multiply then reduce by a monic modulus; independent of gf internals."""
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    k = len(mod) - 1
    for d in range(len(prod) - 1, k - 1, -1):
        c = prod[d]
        if c:
            for t in range(k + 1):
                prod[d - k + t] = (prod[d - k + t] - c * mod[t]) % p
    return (prod + [0] * k)[:k]


def digits(a, p, k):
    return [(a // p ** j) % p for j in range(k)]


def test_f2_and_f4_moduli():
    assert field_new(2, 1).modulus == (0, 1)
    assert field_new(2, 2).modulus == (1, 1, 1)


def test_f125_modulus_is_irreducible():
    F = field_new(5, 3)
    f = F.modulus
    # a cubic is irreducible iff it has no root
    assert all(sum(c * x ** i for i, c in enumerate(f)) % 5 for x in range(5))
    assert F.order(F.primitive_element()) == 124


def test_f8_modulus_prefers_primitive_x():
    F = field_new(2, 3)
    assert F.modulus == (1, 1, 0, 1)
    alpha = F.primitive_element()
    assert alpha == 2
    assert F.pow(alpha, 7) == 1
    assert all(F.pow(alpha, j) != 1 for j in range(1, 7))


@pytest.mark.parametrize("p,k", FIELDS)
def test_mul_matches_schoolbook(p, k):
    F = field_new(p, k)
    rng = random.Random(p * 100 + k)
    mod = list(F.modulus)
    for _ in range(300):
        a, b = rng.randrange(F.q), rng.randrange(F.q)
        if k == 1:
            expect = a * b % p
        else:
            r = brute_poly_mulmod(digits(a, p, k), digits(b, p, k), mod, p)
            expect = sum(c * p ** j for j, c in enumerate(r))
        assert F.mul(a, b) == expect


def test_small_arith_examples():
    F5 = field_new(5)
    assert F5.inv(2) == 3
    F4 = field_new(2, 2)
    assert F4.mul(2, 2) == 3
    assert F5(2) * F5(3) == F5(1)


@pytest.mark.parametrize("p,k", FIELDS)
def test_field_axioms_sampled(p, k):
    F = field_new(p, k)
    rng = random.Random(7)
    for _ in range(1000):
        a, b, c = (rng.randrange(F.q) for _ in range(3))
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.add(a, 0) == a and F.mul(a, 1) == a
        assert F.add(a, F.neg(a)) == 0
        assert F.sub(F.add(a, b), b) == a
        if a:
            assert F.mul(a, F.inv(a)) == 1
            assert F.div(F.mul(a, b), a) == b


def test_inverse_f125_random():
    F = field_new(5, 3)
    rng = random.Random(125)
    for _ in range(1000):
        a = rng.randrange(1, F.q)
        assert F.mul(a, F.inv(a)) == 1


@pytest.mark.parametrize("p,k", FIELDS)
def test_frobenius_identities(p, k):
    F = field_new(p, k)
    for a in range(F.q) if F.q <= 256 else random.Random(1).sample(range(F.q), 256):
        assert F.pow(a, F.q) == a
        if a:
            assert F.pow(a, F.q - 1) == 1


def test_primitive_element_small_fields():
    assert field_new(2).primitive_element() == 1
    assert field_new(5).primitive_element() == 2


def test_primitive_element_deterministic():
    for p, k in FIELDS:
        a, b = GF(p, k), GF(p, k)
        assert a.modulus == b.modulus
        assert a.primitive_element() == b.primitive_element()


def test_sqrt_char2():
    F4 = field_new(2, 2)
    omega = 2
    assert F4.sqrt(omega) == F4.mul(omega, omega)
    for k in range(1, 9):
        F = field_new(2, k)
        assert F.sqrt(1) == 1
        roots = [F.sqrt(a) for a in range(F.q)]
        assert sorted(roots) == list(range(F.q))
        assert all(F.mul(r, r) == a for a, r in enumerate(roots))
        assert all(F.sqrt(F.mul(a, a)) == a for a in range(F.q))


def test_sqrt_rejects_odd_characteristic():
    with pytest.raises(FieldError):
        field_new(5).sqrt(4)


def test_construction_errors():
    with pytest.raises(FieldError):
        GF(4, 1)
    with pytest.raises(FieldError):
        GF(2, 0)
    with pytest.raises(FieldError):
        GF(2, 2, modulus=(1, 0, 1))  # x^2 + 1 = (x + 1)^2
    with pytest.raises(FieldError):
        GF(2, 8, table_limit=16, big_field_fallback=False)


def test_mixed_fields_and_zero_division():
    F, E = field_new(5), field_new(2, 2)
    with pytest.raises(FieldError):
        F(1) + E(1)
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


def test_big_field_fallback_matches_tables():
    small = GF(2, 6, table_limit=1 << 24)
    big = GF(2, 6, table_limit=8)
    assert not big.has_tables
    rng = random.Random(3)
    for _ in range(200):
        a, b = rng.randrange(64), rng.randrange(1, 64)
        assert big.mul(a, b) == small.mul(a, b)
        assert big.inv(b) == small.inv(b)


def test_vectorized_ops_agree_with_scalar():
    for p, k in [(2, 3), (5, 1), (3, 2), (5, 3)]:
        F = field_new(p, k)
        a, b = np.meshgrid(np.arange(F.q), np.arange(F.q))
        va, vm = F.vadd(a, b), F.vmul(a, b)
        for x, y in itertools.islice(itertools.product(range(F.q), repeat=2), 5000):
            assert va[y, x] == F.add(x, y)
            assert vm[y, x] == F.mul(x, y)


@pytest.mark.parametrize("q,m", [(2, 3), (4, 3), (5, 3), (9, 2), (8, 2), (13, 1)])
def test_subfield_embedding_is_homomorphism(q, m):
    p, k = prime_power(q)
    emb = SubfieldEmbedding(field_new(p, k), m)
    base, ext = emb.base, emb.ext
    assert ext.q == q ** m
    for a in range(q):
        assert ext.pow(emb.embed(a), q) == emb.embed(a)
        assert emb.restrict(emb.embed(a)) == a
        for b in range(q):
            assert emb.embed(base.mul(a, b)) == ext.mul(emb.embed(a), emb.embed(b))
            assert emb.embed(base.add(a, b)) == ext.add(emb.embed(a), emb.embed(b))


@settings(max_examples=200, deadline=None)
@given(a=st.integers(1, 124), e=st.integers(-300, 300))
def test_pow_is_repeated_multiplication(a, e):
    F = field_new(5, 3)
    expect = 1
    base = a if e >= 0 else F.inv(a)
    for _ in range(abs(e)):
        expect = F.mul(expect, base)
    assert F.pow(a, e) == expect
