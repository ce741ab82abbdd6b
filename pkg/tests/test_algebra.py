import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from nakayama.algebra import Algebra, AlgebraMap
from nakayama.errors import BadParams, IdentityInvalid, NotAGroup, NotAssociative, NotAutomorphism
from nakayama.fields import GF, QQ
from nakayama.generators import (
    FIXTURE_NAMES,
    cyclic_group_table,
    exterior_q,
    fixture,
    generate,
    group_algebra,
    matrix_algebra,
    truncated_polynomial,
)
from nakayama.linalg import Matrix

ALL = [fixture(n) for n in FIXTURE_NAMES]


@pytest.mark.parametrize("A", ALL, ids=FIXTURE_NAMES)
def test_fixtures_validate(A):
    A.validate()


def test_two_dimensional_unital_products_stay_associative():
    # a unital algebra on 1, x is generated by x, so any value of x*x is fine
    base = [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)]
    Algebra(QQ, 2, base + [(1, 1, 0, 1)], one=(1, 0)).validate()  # x^2 = 1
    Algebra(QQ, 2, base + [(1, 1, 1, 1)], one=(1, 0)).validate()  # x^2 = x


def test_corrupted_truncated_polynomial_is_not_associative():
    # Q[x]/(x^3) with x * x^2 = x while x^2 * x stays 0
    T = truncated_polynomial(3, QQ)
    sc = [q for q in T.structure_constants] + [(1, 2, 1, 1)]
    A = Algebra(QQ, 3, sc, one=T.one)
    with pytest.raises(NotAssociative) as info:
        A.validate()
    i, j, k = info.value.triple
    lhs = A.mul(A.mul(A.basis(i), A.basis(j)), A.basis(k))
    rhs = A.mul(A.basis(i), A.mul(A.basis(j), A.basis(k)))
    assert lhs != rhs


def test_bad_identity_rejected():
    A = Algebra(QQ, 2, truncated_polynomial(2, QQ).structure_constants, one=(0, 1))
    with pytest.raises(IdentityInvalid):
        A.validate()


def test_identity_solved_when_omitted():
    B = truncated_polynomial(3, GF(5))
    A = Algebra(B.field, B.dim, B.structure_constants)
    assert A.one == B.one


def test_exterior_relations_by_rewriting():
    for F, q in [(GF(7), 3), (QQ, 2)]:
        A = exterior_q(F, q)
        idx = {"": 0, "x": 1, "y": 2, "xy": 3}
        for w1 in ("x", "y", "xy"):
            for w2 in ("x", "y", "xy"):
                c, mono = oracles.rewrite_exterior(F, q, w1 + w2)
                expect = [F.zero] * 4
                if c != F.zero:
                    expect[idx[mono]] = c
                assert A.mul(A.basis(idx[w1]), A.basis(idx[w2])) == tuple(expect)
    with pytest.raises(BadParams):
        exterior_q(QQ, 0)


def test_group_table_checks():
    with pytest.raises(NotAGroup):
        group_algebra([[0, 1], [0, 1]], QQ)
    with pytest.raises(NotAGroup):
        group_algebra([[0, 1, 2], [1, 0, 2], [2, 2, 0]], QQ)
    A = group_algebra(cyclic_group_table(4), GF(3))
    A.validate()
    assert A.is_commutative()


@pytest.mark.parametrize("A", ALL, ids=FIXTURE_NAMES)
@settings(max_examples=20, deadline=None)
@given(seed=st.integers(0, 2**32))
def test_left_and_right_multiplications_commute(A, seed):
    rng = random.Random(seed)
    a, b = A.random_element(rng), A.random_element(rng)
    La, Rb = A.left_mul(a), A.right_mul(b)
    assert La @ Rb == Rb @ La
    assert A.left_mul(A.mul(a, b)) == La @ A.left_mul(b)
    assert A.right_mul(A.mul(a, b)) == Rb @ A.right_mul(a)


def test_commutator_and_center():
    A = matrix_algebra(2, QQ)
    assert A.commutator_space().dim == 3
    assert A.center().dim == 1
    T = truncated_polynomial(3, GF(2))
    assert T.commutator_space().is_zero() and T.center().is_full()


def test_ideals():
    A = matrix_algebra(2, GF(3))
    I = A.left_ideal_generated(A.basis(0))  # E11 generates the first column
    assert I.dim == 2 and A.is_left_ideal(I) and not A.is_right_ideal(I)
    assert A.largest_left_ideal_in(A.commutator_space()).is_zero()


def test_inner_conjugation_recovered():
    A = fixture("D")
    u = (1, 0, 0, 2)  # E11 + 2 E22
    sigma = A.inner_by(u)
    assert not sigma.is_identity()
    res = A.is_inner(sigma)
    assert res.verdict == "inner"
    w = res.unit
    winv = A.inverse(w)
    for i in range(A.dim):
        assert A.mul(A.mul(winv, A.basis(i)), w) == sigma.image(i)


def test_outer_automorphism_detected():
    # swapping the idempotents of k x k is outer: the algebra is commutative
    A = generate("product", {"of": "field:field=QQ;field:field=QQ"})
    swap = AlgebraMap(A, Matrix(QQ, [[0, 1], [1, 0]], 2))
    assert swap.is_automorphism()
    assert A.is_inner(swap).verdict == "outer"


def test_non_automorphism_rejected():
    A = truncated_polynomial(2, QQ)
    bad = AlgebraMap(A, Matrix(QQ, [[1, 1], [0, 1]], 2))
    assert not bad.is_automorphism()
    with pytest.raises(NotAutomorphism):
        bad.require_automorphism()


def test_opposite_and_product():
    B = fixture("B")
    Bop = B.opposite()
    Bop.validate()
    assert Bop.mul(Bop.basis(1), Bop.basis(2)) == B.mul(B.basis(2), B.basis(1))
    P = B.direct_product(truncated_polynomial(2, GF(7)))
    P.validate()
    assert P.dim == 6


def test_inverse_of_units():
    A = fixture("B")
    rng = random.Random(1)
    for _ in range(10):
        u = A.random_unit(rng)
        assert A.mul(u, A.inverse(u)) == A.one
    assert A.inverse(A.basis(1)) is None
