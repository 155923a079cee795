import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from hdcoord.errors import InvalidInputError
from hdcoord.lattice import (
    build_quotient,
    determinant,
    hermite_normal_form,
    lattice_member,
    matmul,
    reduce,
    smith_normal_form,
)
from oracles import CosetEnumeration, combination_search, determinantal_divisors


def as_lists(m):
    return [list(r) for r in m]


def check_snf(R):
    s = smith_normal_form(R)
    r = len(R)
    c = len(R[0]) if R else 0
    assert as_lists(matmul(matmul(as_lists(s.U), R), as_lists(s.V))) == as_lists(s.D)
    assert abs(determinant(s.U)) == 1 and abs(determinant(s.V)) == 1
    for i in range(r):
        for j in range(c):
            if i != j:
                assert s.D[i][j] == 0
    diag = s.diagonal
    assert all(d >= 0 for d in diag)
    for a, b in zip(diag, diag[1:]):
        assert (b == 0) if a == 0 else (b % a == 0)
    return s


def test_snf_identity():
    assert check_snf([[1, 0], [0, 1]]).D == ((1, 0), (0, 1))


def test_snf_2x2_against_determinantal_divisors():
    R = [[2, 4], [6, 8]]
    # d1 = gcd of entries = 2, d1*d2 = |det| = 8
    assert determinantal_divisors(R) == [2, 4]
    assert check_snf(R).diagonal == (2, 4)


def test_snf_zero():
    assert check_snf([[0, 0, 0], [0, 0, 0]]).D == ((0, 0, 0), (0, 0, 0))


def test_snf_empty_shapes():
    s = smith_normal_form([[], []], ncols=0)
    assert s.U == ((1, 0), (0, 1)) and s.V == () and s.diagonal == ()
    s = smith_normal_form([], ncols=3)
    assert len(s.V) == 3 and s.D == ()


def test_snf_is_deterministic():
    R = [[3, -6, 9], [2, 4, -8], [5, 1, 0]]
    assert smith_normal_form(R) == smith_normal_form([row[:] for row in R])


matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@settings(max_examples=200, deadline=None)
@given(matrices)
def test_snf_matches_determinantal_divisors(R):
    s = check_snf(R)
    assert list(s.diagonal) == determinantal_divisors(R)


def test_snf_no_entry_blowup_on_4x4():
    rng = random.Random(11)
    for _ in range(200):
        R = [[rng.randint(-9, 9) for _ in range(4)] for _ in range(4)]
        s = smith_normal_form(R)
        assert max(abs(x) for row in s.U + s.V for x in row) < 10**12


# -- Hermite form ------------------------------------------------------------


def test_hnf_identity():
    assert hermite_normal_form([[1, 0], [0, 1]]) == [[1, 0], [0, 1]]


def test_hnf_single_column():
    assert hermite_normal_form([[3], [0]]) == [[3], [0]]


def test_hnf_lattice_matches_snf_reconstruction():
    R = [[2, 4], [6, 8]]
    H = hermite_normal_form(R)
    s = smith_normal_form(R)
    cols = [tuple(row[j] for row in H) for j in range(len(H[0]))]
    # every combination in a coefficient box lies in both descriptions of the lattice
    for a, b in product(range(-3, 4), repeat=2):
        w = (a * 2 + b * 4, a * 6 + b * 8)
        assert lattice_member(cols, w)
        y = [sum(u * x for u, x in zip(row, w)) for row in s.U]
        assert all(yi % di == 0 for yi, di in zip(y, s.diagonal))
    for w in product(range(-4, 5), repeat=2):
        in_snf = all(yi % di == 0 for yi, di in zip((sum(u * x for u, x in zip(row, w)) for row in s.U), s.diagonal))
        assert lattice_member(cols, w) == in_snf


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_hnf_shape(R):
    H = hermite_normal_form(R)
    pivots = []
    for j in range(len(H[0]) if H else 0):
        r = next(i for i in range(len(H)) if H[i][j])
        assert H[r][j] > 0
        assert all(0 <= H[r][jj] < H[r][j] for jj in range(j))
        pivots.append(r)
    assert pivots == sorted(set(pivots))


# -- membership and quotients ------------------------------------------------


def test_lattice_member_examples():
    assert lattice_member([(2, 0), (0, 2)], (0, 0))
    assert lattice_member([], (0, 0, 0))
    assert not lattice_member([(2, 0), (0, 2)], (1, 1))
    assert combination_search([(1, 0), (1, 3)], (2, 3), 3) == (1, 1)
    assert lattice_member([(1, 0), (1, 3)], (2, 3))


def test_lattice_member_dimension_mismatch():
    with pytest.raises(InvalidInputError):
        lattice_member([(1, 0, 0)], (1, 0))


def test_build_quotient_examples():
    q = build_quotient([(1, 0), (0, 1)], 1)
    assert (q.free_rank, q.invariant_factors) == (0, ()) and q.is_trivial() and str(q) == "0"
    q = build_quotient([(1, 0), (1, 3)], 1)
    assert CosetEnumeration([(1, 0), (1, 3)], 2, 3).count == 3
    assert (q.free_rank, q.invariant_factors) == (0, (3,)) and str(q) == "Z/3"
    q = build_quotient([(1, 0)], 1)
    assert (q.free_rank, q.invariant_factors) == (1, ()) and str(q) == "Z"
    q = build_quotient([], 2)
    assert (q.free_rank, q.invariant_factors) == (4, ()) and str(q) == "Z^4"


def test_build_quotient_dimension_mismatch():
    with pytest.raises(InvalidInputError):
        build_quotient([(1, 0, 0)], 1)


def test_reduce_examples():
    q = build_quotient([(1, 0), (1, 3)], 1)
    oracle = CosetEnumeration([(1, 0), (1, 3)], 2, 3)
    assert reduce(q, (0, 2)).torsion == (2,)
    for v in [(1, 0), (1, 3), (-4, 6)]:
        assert reduce(q, v).is_zero()
    for u, v in product(product(range(-2, 3), repeat=2), repeat=2):
        assert (reduce(q, u) == reduce(q, v)) == oracle.same(u, v)


def test_reduce_on_free_quotient_is_injective():
    q = build_quotient([], 1)
    assert reduce(q, (5, -7)).free == (5, -7)
    pts = list(product(range(-2, 3), repeat=2))
    assert len({reduce(q, v) for v in pts}) == len(pts)


def test_reduce_dimension_mismatch():
    with pytest.raises(InvalidInputError):
        reduce(build_quotient([], 1), (1, 2, 3))


def test_coordinate_printing():
    q = build_quotient([(2, 0, 0, 0), (0, 6, 0, 0)], 2)
    assert str(q) == "Z^2 + Z/2 + Z/6"
    assert str(reduce(q, (0, 0, 0, 0))) == "0"
    c = reduce(q, (1, 0, 3, 0))
    assert len(c.free) == 2 and len(c.torsion) == 2
    assert str(c).count("mod") == 2


@st.composite
def quotient_instances(draw):
    g = draw(st.integers(1, 3))
    vecs = draw(st.lists(st.tuples(*[st.integers(-5, 5)] * (2 * g)), max_size=6))
    v = draw(st.tuples(*[st.integers(-9, 9)] * (2 * g)))
    w = draw(st.tuples(*[st.integers(-9, 9)] * (2 * g)))
    return g, vecs, v, w


@settings(max_examples=200, deadline=None)
@given(quotient_instances(), st.lists(st.integers(-3, 3), max_size=6))
def test_reduce_is_lattice_invariant(inst, coeffs):
    g, vecs, v, _ = inst
    q = build_quotient(vecs, g)
    shifted = list(v)
    for c, w in zip(coeffs, vecs):
        shifted = [a + c * b for a, b in zip(shifted, w)]
    assert reduce(q, v) == reduce(q, shifted)
    for w in vecs:
        assert reduce(q, w).is_zero()


@settings(max_examples=200, deadline=None)
@given(quotient_instances())
def test_reduce_agrees_with_hnf_membership(inst):
    g, vecs, v, w = inst
    q = build_quotient(vecs, g)
    assert (reduce(q, v) == reduce(q, w)) == lattice_member(vecs, [a - b for a, b in zip(v, w)])


@settings(max_examples=100, deadline=None)
@given(quotient_instances(), st.randoms(use_true_random=False))
def test_invariants_ignore_order_and_sign(inst, rnd):
    g, vecs, _, _ = inst
    q = build_quotient(vecs, g)
    shuffled = [tuple(-x for x in w) if rnd.random() < 0.5 else w for w in vecs]
    rnd.shuffle(shuffled)
    q2 = build_quotient(shuffled, g)
    assert (q.invariant_factors, q.free_rank) == (q2.invariant_factors, q2.free_rank)
