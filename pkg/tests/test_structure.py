import itertools

import pytest

from nakayama.errors import CharTooSmall
from nakayama.fields import GF, QQ
from nakayama.generators import (
    cyclic_group_table,
    fixture,
    group_algebra,
    matrix_algebra,
    truncated_polynomial,
    upper_triangular,
)
from nakayama.structure import (
    analyze_structure,
    is_local,
    left_socle,
    radical,
    radical_index,
    right_socle,
    semisimple_quotient,
)


def is_nilpotent(A, x):
    return A.power(x, A.dim) == A.zero


def brute_radical(A):
    """``{x : a x nilpotent for all a}`` by enumeration over a finite field."""
    elems = list(itertools.product(list(A.field.elements()), repeat=A.dim))
    return {x for x in elems if all(is_nilpotent(A, A.mul(a, x)) for a in elems)}


SMALL_FINITE = [
    fixture("D"),
    truncated_polynomial(3, GF(2)),
    group_algebra(cyclic_group_table(3), GF(3)),
    group_algebra(cyclic_group_table(4), GF(2)),
    group_algebra(cyclic_group_table(3), GF(2)),
    upper_triangular(2, GF(3)),
]


@pytest.mark.parametrize("A", SMALL_FINITE, ids=lambda A: A.name)
def test_radical_matches_enumeration(A):
    J = radical(A)
    brute = brute_radical(A)
    assert len(brute) == A.field.order ** J.dim
    assert all(x in J for x in brute)


@pytest.mark.parametrize(
    "name,dim",
    [("A", 1), ("B", 3), ("C", 1), ("D", 0), ("E", 0), ("F", 0), ("G", 3), ("B'", 3)],
)
def test_fixture_radical_dimensions(name, dim):
    assert radical(fixture(name)).dim == dim


def test_small_characteristic_paths():
    A = group_algebra(cyclic_group_table(3), GF(3))
    with pytest.raises(CharTooSmall):
        radical(A, method="dickson")
    J = radical(A)
    assert J.dim == 2 and radical_index(A, J) == 3
    T = truncated_polynomial(5, GF(2))
    assert radical(T).dim == 4
    # GF(4)[C2] restricts to characteristic 2 internally
    B = group_algebra(cyclic_group_table(2), GF(2, 2))
    assert radical(B).dim == 1


def test_socles_of_triangular_algebra():
    A = upper_triangular(2, QQ)  # e11, e12, e22
    J = radical(A)
    S, Sr = left_socle(A, J), right_socle(A, J)
    # J = span(e12): e12 x = x22 e12 and x e12 = x11 e12
    assert S == A.span([A.basis(0), A.basis(1)])
    assert Sr == A.span([A.basis(1), A.basis(2)])
    assert A.is_left_ideal(S) and A.is_right_ideal(S)


def test_semisimple_quotient_dimension_and_homomorphism():
    A = fixture("B")
    Q, pi = semisimple_quotient(A)
    assert Q.dim == 1
    A2 = upper_triangular(3, GF(5))
    Q2, pi2 = semisimple_quotient(A2)
    assert Q2.dim == 3 and Q2.is_commutative()
    for i in range(A2.dim):
        for j in range(A2.dim):
            assert pi2(A2.mul(A2.basis(i), A2.basis(j))) == Q2.mul(pi2(A2.basis(i)), pi2(A2.basis(j)))


def test_is_local_verdicts():
    assert is_local(fixture("A")).verdict == "yes"
    assert is_local(fixture("B")).verdict == "yes"
    assert is_local(fixture("D")).verdict == "no"
    assert is_local(fixture("C")).verdict == "no"
    assert is_local(fixture("E")).verdict == "yes"
    # Q(sqrt 2) as a 2-dim algebra over Q: a field, found by factoring
    from nakayama.algebra import Algebra

    K = Algebra(QQ, 2, [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 2)], one=(1, 0))
    assert is_local(K).verdict == "yes"
    # Q x Q has a zero divisor witness
    P = Algebra(QQ, 2, [(0, 0, 0, 1), (1, 1, 1, 1)], one=(1, 1))
    res = is_local(P)
    assert res.verdict == "no" and P.inverse(res.witness) is None


def test_structure_report_summary():
    rep = analyze_structure(matrix_algebra(2, GF(3)))
    s = rep.summary()
    assert s["radical_dim"] == 0 and s["socle_dim"] == 4 and s["local"] == "no"
