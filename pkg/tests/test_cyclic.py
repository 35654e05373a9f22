import itertools

import numpy as np
import pytest

from sdcodes.cosets import DefiningSet, bch_bound, is_dual_containing_defining_set
from sdcodes.cyclic import (
    ConstructionError,
    CyclicCode,
    construct_dual_containing_bch,
    dual_code,
    encode,
    from_defining_set,
    generator_matrix,
    is_codeword,
    is_dual_containing,
)
from sdcodes.gf import field_new
from sdcodes.linalg import matmul, rank
from sdcodes.polyring import Poly

F2 = field_new(2)


def all_codewords(C):
    F = C.field
    return {tuple(encode(C, m)) for m in itertools.product(range(F.q), repeat=C.k)}


def brute_dual(C):
    """Every vector orthogonal to all codewords, by enumeration of F_q^n."""
    F = C.field
    G = generator_matrix(C)
    out = set()
    for v in itertools.product(range(F.q), repeat=C.n):
        if all(F.vdot(row, v) == 0 for row in G):
            out.add(v)
    return out


def test_example_15_11():
    C = from_defining_set(DefiningSet.from_reps(15, 2, [1]))
    assert (C.n, C.k) == (15, 11)
    assert dual_code(C).k == 4


def test_empty_defining_set_is_full_space():
    C = from_defining_set(DefiningSet.from_reps(7, 2, []))
    assert C.k == 7 and C.g == Poly(F2, [1])
    D = dual_code(C)
    assert D.k == 0
    assert is_dual_containing(C)


def test_31_16():
    C = from_defining_set(DefiningSet.from_reps(31, 2, [1, 3, 5]))
    assert (C.k, C.g.degree) == (16, 15)


def test_repetition_dual():
    C = CyclicCode(F2, 3, Poly(F2, [1, 1]))
    D = dual_code(C)
    assert D.k == 1 and D.g == Poly(F2, [1, 1, 1])


@pytest.mark.parametrize("q,n,reps", [(2, 7, [1]), (2, 7, [0, 1]), (2, 9, [1]), (3, 8, [1]), (4, 5, [1]), (5, 4, [1, 2])])
def test_dual_matches_brute_force(q, n, reps):
    C = from_defining_set(DefiningSet.from_reps(n, q, reps))
    D = dual_code(C)
    assert all_codewords(D) == brute_dual(C)


@pytest.mark.parametrize("q,n", [(2, 15), (2, 31), (2, 63), (3, 26), (5, 31), (5, 62)])
def test_double_dual_and_dimensions(q, n):
    from sdcodes.cosets import all_cosets
    reps = [min(c) for c in all_cosets(n, q)]
    for i in range(0, len(reps), 2):
        C = from_defining_set(DefiningSet.from_reps(n, q, reps[i : i + 3]))
        D = dual_code(C)
        assert C.k + D.k == n
        assert dual_code(D).g == C.g
        # the polynomial dual matches the (T^c)^-1 defining set
        assert D.g == from_defining_set(D.defining_set, C.embedding).g


def test_dual_containing_three_way_agreement():
    from sdcodes.cosets import all_cosets
    for q, n in [(2, 15), (2, 21), (2, 31), (3, 26), (5, 31)]:
        reps = [min(c) for c in all_cosets(n, q)]
        for combo in itertools.islice(itertools.combinations(reps, 2), 30):
            C = from_defining_set(DefiningSet.from_reps(n, q, combo))
            D = dual_code(C)
            by_rows = all(is_codeword(C, r) for r in generator_matrix(D))
            assert is_dual_containing(C) == by_rows == is_dual_containing_defining_set(C.defining_set)


def test_not_dual_containing_examples():
    C = from_defining_set(DefiningSet.from_reps(7, 2, [1, 3]))
    assert not is_dual_containing(C)
    C3 = from_defining_set(DefiningSet.from_reps(7, 2, [0, 1]))
    assert C3.k == 3 and not is_dual_containing(C3)


def test_bch_family_small_binary():
    C = construct_dual_containing_bch(2, 3, 1)
    assert (C.n, C.k, C.designed_distance) == (7, 4, 2)
    assert C.defining_set.coset_reps == [1]
    assert bch_bound(C.defining_set) == 3 and C.lower_bound() == 3


def test_bch_family_31():
    C = construct_dual_containing_bch(2, 5, 1)
    assert (C.n, C.k, C.designed_distance) == (31, 16, 6)
    assert C.defining_set.coset_reps == [1, 3, 5]
    assert C.lower_bound() >= 7


def test_bch_family_over_f5():
    C = construct_dual_containing_bch(5, 3, 1)
    assert (C.n, C.designed_distance) == (124, 20)
    assert is_dual_containing(C)
    assert C.lower_bound() >= 21
    assert C.k >= (C.n + 1) // 2


@pytest.mark.parametrize("args", [(2, 3, 1), (2, 5, 1), (2, 7, 1), (5, 3, 1), (5, 3, 2), (5, 3, 4), (13, 3, 1)])
def test_family_invariants(args):
    C = construct_dual_containing_bch(*args)
    assert bch_bound(C.defining_set) >= C.designed_distance
    assert C.k == C.n - len(C.defining_set) >= (C.n + 1) // 2


def test_bch_rejections():
    with pytest.raises(ConstructionError):
        construct_dual_containing_bch(2, 3, 7)  # delta = 2/7
    with pytest.raises(ConstructionError):
        construct_dual_containing_bch(2, 4, 1)  # m even without delta
    with pytest.raises(ConstructionError):
        construct_dual_containing_bch(2, 3, 2)  # 2 does not divide 7
    with pytest.raises(ConstructionError, match="self-paired"):
        construct_dual_containing_bch(2, 4, 3, delta=2)  # n = 5


def test_generator_matrix_shape_and_membership():
    C = CyclicCode(F2, 3, Poly(F2, [1, 1]))
    assert generator_matrix(C).tolist() == [[1, 1, 0], [0, 1, 1]]
    for q, n, reps in [(2, 15, [1]), (2, 63, [1, 3, 5, 9]), (5, 31, [1])]:
        C = from_defining_set(DefiningSet.from_reps(n, q, reps))
        G = generator_matrix(C)
        assert rank(C.field, G) == C.k
        assert all(is_codeword(C, r) for r in G)
        H = generator_matrix(dual_code(C))
        assert not matmul(C.field, G, H.T).any()


def test_encode():
    C = construct_dual_containing_bch(2, 4, 1, delta=3)
    assert not encode(C, [0] * 11).any()
    e0 = [1] + [0] * 10
    assert encode(C, e0).tolist() == list(C.g.coeffs) + [0] * (15 - C.g.degree - 1)
    words = {tuple(encode(C, m)) for m in itertools.product((0, 1), repeat=11)}
    assert len(words) == 2 ** 11
    with pytest.raises(ValueError):
        encode(C, [1, 0])


def test_generator_must_divide():
    with pytest.raises(ValueError):
        CyclicCode(F2, 7, Poly(F2, [1, 0, 1]))  # x^2 + 1 does not divide x^7 - 1
