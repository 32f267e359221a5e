from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from repkit.errors import FieldError, NotARootError, ParseError
from repkit.exactfield import (
    GF,
    QQ,
    FieldElement,
    Polynomial,
    PrimeField,
    candidate_roots,
    conductor,
    conjugate,
    cyclotomic,
    cyclotomic_polynomial,
    divide_by_root,
    embedding,
    euler_phi,
    factor,
    field_arith,
    field_from_descriptor,
    parse_rational,
    rational_roots,
    root_of_unity,
)

AXIOM_FIELDS = [QQ, GF(2), GF(7), cyclotomic(3), cyclotomic(5), cyclotomic(12)]

_q = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def raw_elements(F):
    if F is QQ:
        return _q
    if isinstance(F, PrimeField):
        return st.integers(0, F.p - 1)
    return st.tuples(*[_q] * F.degree)


@pytest.mark.parametrize("F", AXIOM_FIELDS, ids=str)
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_field_axioms(F, data):
    a, b, c = (FieldElement(F, data.draw(raw_elements(F))) for _ in range(3))
    zero, one = F(0), F(1)
    assert a + b == b + a and a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + zero == a and a * one == a
    assert a - a == zero
    if not a.is_zero():
        assert a * a.inverse() == one
        assert (b / a) * a == b


@pytest.mark.parametrize("F", [cyclotomic(3), cyclotomic(4), cyclotomic(5), cyclotomic(8), cyclotomic(12)], ids=str)
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_conjugation_is_field_involution(F, data):
    a, b = (FieldElement(F, data.draw(raw_elements(F))) for _ in range(2))
    assert conjugate(conjugate(a)) == a
    assert conjugate(a * b) == conjugate(a) * conjugate(b)
    assert conjugate(a + b) == conjugate(a) + conjugate(b)


def test_field_arith_examples():
    assert field_arith(QQ("1/3"), QQ("1/6"), "add") == QQ("1/2")
    F = GF(7)
    assert field_arith(F(3), F(5), "mul") == F(1)
    assert field_arith(F(1), F(3), "div") == F(5)
    K = cyclotomic(4)
    z = root_of_unity(K, 1)
    assert field_arith(z, z, "mul") == K(-1)


def test_gf7_multiplication_table_oracle():
    F = GF(7)
    for a in range(7):
        for b in range(7):
            assert F(a) * F(b) == F((a * b) % 7)
            if b:
                assert (F(a) / F(b)) * F(b) == F(a)


def test_mixed_fields_refused():
    with pytest.raises(FieldError):
        QQ(1) + GF(5)(1)
    with pytest.raises(FieldError):
        cyclotomic(3)(1) * cyclotomic(4)(1)


def test_division_by_zero():
    for F in (QQ, GF(5), cyclotomic(3)):
        with pytest.raises(ZeroDivisionError):
            F(1) / F(0)


def test_conjugate_examples():
    assert conjugate(QQ("3/4")) == QQ("3/4")
    K = cyclotomic(4)
    z = root_of_unity(K, 1)
    assert conjugate(z) == -z


def test_roots_of_unity():
    K3 = cyclotomic(3)
    assert root_of_unity(K3, 0) == K3(1)
    assert root_of_unity(K3, 2).value == (Fraction(-1), Fraction(-1))
    K4 = cyclotomic(4)
    assert root_of_unity(K4, 2) == K4(-1)
    for n in (1, 2, 5, 6, 8, 9, 12):
        K = cyclotomic(n)
        z = root_of_unity(K, 1)
        assert z**n == K(1)
        assert all(z**k != K(1) for k in range(1, n))


@pytest.mark.parametrize(
    "n, coeffs",
    [
        (1, (-1, 1)),
        (2, (1, 1)),
        (3, (1, 1, 1)),
        (4, (1, 0, 1)),
        (6, (1, -1, 1)),
        (8, (1, 0, 0, 0, 1)),
        (12, (1, 0, -1, 0, 1)),
    ],
)
def test_cyclotomic_polynomials(n, coeffs):
    assert cyclotomic_polynomial(n) == coeffs
    assert euler_phi(n) == len(coeffs) - 1


def test_parse_and_format():
    assert parse_rational("-3/6") == Fraction(-1, 2)
    assert parse_rational("7") == 7
    for bad in ("1/0", "1.5", "x", "", "1//2"):
        with pytest.raises(ParseError):
            parse_rational(bad)
    K = cyclotomic(3)
    a = K(["1/2", "-3"])
    assert a.to_json() == ["1/2", "-3"]
    assert K.parse(a.to_json()) == a.value
    with pytest.raises(ParseError):
        K.parse(["1"])
    assert GF(5).parse("12") == 2
    assert QQ(Fraction(2, 4)).to_json() == "1/2"


def test_field_descriptors():
    for F in (QQ, GF(3), cyclotomic(7)):
        assert field_from_descriptor(F.descriptor()) == F
    with pytest.raises(ParseError):
        field_from_descriptor({"kind": "real"})
    with pytest.raises(FieldError):
        GF(4)
    with pytest.raises(FieldError):
        cyclotomic(65)


def test_polynomial_examples():
    t = Polynomial.variable(QQ)
    assert (t - 1) * (t + 1) == t**2 - 1
    F3 = GF(3)
    s = Polynomial.variable(F3)
    p = s**3 - s
    assert not p.is_zero()
    assert all(p(F3(a)) == F3(0) for a in range(3))
    zero = Polynomial(QQ, [])
    assert zero(QQ(5)) == QQ(0) and zero.degree == -1


def test_polynomial_division_identity(rng):
    F = QQ
    for _ in range(30):
        a = Polynomial(F, [F.random(rng) for _ in range(rng.randint(1, 6))])
        b = Polynomial(F, [F.random(rng) for _ in range(rng.randint(1, 4))])
        if b.is_zero():
            continue
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree


def test_divide_by_root():
    t = Polynomial.variable(QQ)
    assert divide_by_root(t**2 - 1, QQ(1)) == t + 1
    with pytest.raises(NotARootError):
        divide_by_root(t**2 + 1, QQ(1))
    K = cyclotomic(4)
    s = Polynomial.variable(K)
    z = root_of_unity(K, 1)
    assert divide_by_root(s**2 + 1, z) == s + Polynomial.constant(K, z)


def test_candidate_roots_examples():
    t = Polynomial.variable(QQ)
    r = candidate_roots(t**2 - 1)
    assert set(r.roots) == {QQ(1), QQ(-1)} and r.complete
    r = candidate_roots(t**2 + 1)
    assert r.roots == [] and r.complete
    s = Polynomial.variable(GF(5))
    r = candidate_roots(s**2 + 1)
    assert set(r.roots) == {GF(5)(2), GF(5)(3)} and r.complete


def test_candidate_roots_cyclotomic_finds_roots_of_unity():
    for n in (3, 4, 5, 8, 12):
        K = cyclotomic(n)
        t = Polynomial.variable(K)
        r = candidate_roots(t**n - 1)
        assert len(r.roots) == n
        assert all(x**n == K(1) for x in r.roots)


def test_rational_roots_oracle(rng):
    for _ in range(40):
        roots = [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(rng.randint(1, 4))]
        p = Polynomial.from_roots(QQ, roots) * Polynomial(QQ, [1, 0, 1])
        assert set(rational_roots(p.coeffs)) == set(roots)


def test_factor_multiplies_back(rng):
    for F in (QQ, GF(5), cyclotomic(5)):
        t = Polynomial.variable(F)
        p = (t**2 - 2) * (t - 1) ** 2 * (t**2 + 1)
        parts = factor(p)
        prod = Polynomial.constant(F, 1)
        for f, e in parts:
            assert f.leading == F(1)
            prod = prod * f**e
        assert prod == p.monic()


def test_embeddings():
    K3, K6, K12 = cyclotomic(3), cyclotomic(6), cyclotomic(12)
    emb = embedding(K3, K12)
    z3 = root_of_unity(K3, 1)
    assert FieldElement(K12, emb(z3.value)) == root_of_unity(K12, 4)
    assert FieldElement(K6, embedding(QQ, K6)(Fraction(1, 2))) == K6("1/2")
    assert conductor(QQ) == 1 and conductor(K12) == 12
    with pytest.raises(FieldError):
        embedding(K12, K3)
