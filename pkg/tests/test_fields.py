from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from nakayama.errors import BadParams, FieldDivisionByZero, NotPrime, ReducibleModulus, UnsupportedTower
from nakayama.fields import GF, QQ, ExtensionField, PrimeField, make_field, parse_field

FIELDS = [QQ, GF(2), GF(7), GF(2, 2), GF(7, 2), GF(3, 3), parse_field("QQ[t]/(-2,0,1)")]


def element(F):
    if F.kind == "rational":
        return st.fractions(min_value=-50, max_value=50, max_denominator=20)
    if F.kind == "prime":
        return st.integers(0, F.p - 1)
    return st.tuples(*[element(F.base)] * F.d)


@pytest.mark.parametrize("F", FIELDS, ids=repr)
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_field_axioms(F, data):
    a, b, c = (data.draw(element(F)) for _ in range(3))
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, b) == F.mul(b, a)
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == F.zero
    assert F.mul(a, F.one) == a
    if a != F.zero:
        assert F.mul(a, F.inv(a)) == F.one
    assert F.parse(F.format(a)) == a


@pytest.mark.parametrize("p,e", [(2, 2), (2, 3), (3, 2), (5, 2), (7, 2)])
def test_extension_multiplication_matches_sympy(p, e):
    F = GF(p, e)
    t = sympy.symbols("t")
    mod = sympy.Poly(list(reversed(F.modulus)), t, modulus=p)
    elems = list(F.elements())
    for a in elems[:: max(1, len(elems) // 9)]:
        for b in elems[:: max(1, len(elems) // 7)]:
            pa = sympy.Poly(list(reversed(a)), t, modulus=p)
            pb = sympy.Poly(list(reversed(b)), t, modulus=p)
            prod = (pa * pb).rem(mod)
            coeffs = [int(c) % p for c in reversed(prod.all_coeffs())]
            coeffs += [0] * (e - len(coeffs))
            assert F.mul(a, b) == tuple(coeffs)


def test_finite_field_orders_and_multiplicative_group():
    for p, e in [(2, 2), (3, 2), (2, 3)]:
        F = GF(p, e)
        elems = list(F.elements())
        assert len(elems) == p**e == F.order
        for a in elems:
            if a != F.zero:
                assert F.power(a, F.order - 1) == F.one


def test_rational_field_is_exact():
    assert QQ.add(Fraction(1, 3), Fraction(1, 6)) == Fraction(1, 2)
    assert QQ.parse("-3/4") == Fraction(-3, 4)
    assert QQ.format(Fraction(5, 1)) == "5"
    with pytest.raises(FieldDivisionByZero):
        QQ.inv(QQ.zero)


def test_prime_field_rejects_composites():
    with pytest.raises(NotPrime):
        PrimeField(9)
    with pytest.raises(NotPrime):
        parse_field("GF(6)")


def test_reducible_modulus_rejected():
    with pytest.raises(ReducibleModulus):
        ExtensionField(GF(2), [1, 0, 1])  # t^2 + 1 = (t+1)^2
    with pytest.raises(ReducibleModulus):
        parse_field("QQ[t]/(-4,0,1)")
    with pytest.raises(BadParams):
        ExtensionField(GF(3), [1, 1, 2])  # not monic


def test_towers_unsupported():
    with pytest.raises(UnsupportedTower):
        ExtensionField(GF(2, 2), [(1, 0), (1, 0), (1, 0)])


def test_parse_field_literals():
    assert parse_field("GF(49)") == GF(7, 2)
    assert parse_field("QQ") is QQ
    K = parse_field("GF(7)[t]/(3,1,1)")
    assert K.d == 2 and K.order == 49
    assert make_field(K.desc()) == K


def test_trace_map_nonzero():
    K = GF(7, 2)
    assert any(v != 0 for v in K.default_trace_map())
    Kq = parse_field("QQ[t]/(-2,0,1)")
    assert Kq.default_trace_map() == (1, 0)
    # trace of t in Q(sqrt 2) is zero, of 1 is 2
    assert Kq.trace(Kq.theta) == 0 and Kq.trace(Kq.one) == 2


def test_scalar_action_matrix_is_multiplicative():
    K = GF(3, 2)
    elems = list(K.elements())
    for a in elems:
        for b in elems:
            Ma, Mb, Mab = K.scalar_action_matrix(a), K.scalar_action_matrix(b), K.scalar_action_matrix(K.mul(a, b))
            prod = [[sum(Ma[i][k] * Mb[k][j] for k in range(2)) % 3 for j in range(2)] for i in range(2)]
            assert prod == Mab
