from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from rankmetric.errors import BOutOfRange, HypothesisViolated
from rankmetric.field import is_prime
from rankmetric.qcombinat import (
    IntPolynomial,
    chen_exponent,
    cyclotomic,
    cyclotomic_gcd_check,
    divisor_product_identity,
    gaussian_binomial,
    gaussian_binomial_poly,
    j_set,
    lemma_jab_check,
    q_pascal,
    verify_factorization,
)

from oracles import cyclotomic_value_mobius, euler_phi, gaussian_fraction

QS = [2, 3, 4, 5, 7, 8, 9]


def test_gaussian_examples():
    assert gaussian_binomial(2, 1, 2) == 3
    assert gaussian_binomial(4, 2, 2) == 35
    assert gaussian_binomial(7, 0, 5) == 1
    assert gaussian_binomial(3, 5, 2) == 0
    assert gaussian_binomial(8, 3, 2) == 97155


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_gaussian_against_fraction_product(q):
    for a in range(13):
        for b in range(a + 2):
            assert gaussian_binomial(a, b, q) == gaussian_fraction(a, b, q)
            if b <= a:
                assert gaussian_binomial(a, b, q) == gaussian_binomial(a, a - b, q)


@pytest.mark.parametrize("q", [2, 3, 7])
def test_q_pascal(q):
    for a in range(1, 21):
        for b in range(1, a + 1):
            assert gaussian_binomial(a, b, q) == q_pascal(a, b, q)


def test_gaussian_polynomial():
    P = gaussian_binomial_poly(4, 2)
    assert P.coeffs == (1, 1, 2, 1, 1)
    for q in QS:
        assert P(q) == gaussian_binomial(4, 2, q)
    assert gaussian_binomial_poly(2, 3).coeffs == ()


def test_cyclotomic_examples():
    assert cyclotomic(1).coeffs == (-1, 1)
    assert cyclotomic(6).coeffs == (1, -1, 1)
    assert str(cyclotomic(6)) == "x^2 - x + 1"
    for p in [2, 3, 5, 7, 11, 13]:
        assert cyclotomic(p).coeffs == (1,) * p


@pytest.mark.parametrize("n", range(1, 51))
def test_cyclotomic_properties(n):
    phi = cyclotomic(n)
    assert phi.degree == euler_phi(n)
    assert divisor_product_identity(n)
    for x in (2, 3, 5):
        assert phi(x) == cyclotomic_value_mobius(n, x)


def test_int_polynomial_arithmetic():
    a = IntPolynomial((1, 1))
    b = IntPolynomial((-1, 1))
    assert (a * b).coeffs == (-1, 0, 1)
    assert (a + b).coeffs == (0, 2)
    assert a.shift(2).coeffs == (0, 0, 1, 1)
    assert IntPolynomial.x_power_minus_one(2).exact_div(b) == a
    with pytest.raises(ArithmeticError):
        IntPolynomial((1, 0, 1)).exact_div(b)
    assert IntPolynomial((0, 0)).coeffs == ()


def test_j_set_examples():
    assert j_set(4, 2).members == (3, 4)
    assert j_set(2, 1).members == (2,)
    for a in range(2, 30):
        for b in range(1, a):
            assert 1 not in j_set(a, b)
    with pytest.raises(BOutOfRange):
        j_set(4, 0)
    with pytest.raises(BOutOfRange):
        j_set(4, 4)


def test_j_set_matches_floor_exponent():
    # the modular membership condition and the floor-exponent form agree
    for a in range(2, 40):
        for b in range(1, a):
            js = set(j_set(a, b).members)
            assert js == {j for j in range(1, a + 1) if chen_exponent(a, b, j) == 1}
            assert all(chen_exponent(a, b, j) in (0, 1) for j in range(1, a + 1))


def test_verify_factorization_examples():
    c = verify_factorization(4, 2, 2)
    assert c.holds and c.j_set == (3, 4) and c.phi_values == (7, 5) and c.product == 35
    c = verify_factorization(2, 1, 3)
    assert c.holds and c.phi_values == (4,) and c.gaussian == 4
    assert c.render() == "[2 1]_3 = Φ_2(3) = 4 = 4"


def test_verify_factorization_exhaustive():
    for q in QS:
        for a in range(2, 13):
            for b in range(1, a):
                assert verify_factorization(a, b, q).holds, (a, b, q)


def test_lemma_jab_examples():
    cert = lemma_jab_check(5, 3, 3)
    assert cert.holds and cert.residues == (0, 2)
    assert lemma_jab_check(5, 2, 2).holds
    with pytest.raises(HypothesisViolated):
        lemma_jab_check(5, 3, 4)
    with pytest.raises(HypothesisViolated):
        lemma_jab_check(5, 4, 4)


def test_lemma_jab_range():
    count = 0
    for d in range(1, 61):
        for p in (2, 3, 5, 7, 11, 13):
            if (d + 1) % p:
                continue
            for c in range(p, 61, p):
                assert lemma_jab_check(d, p, c).holds, (d, p, c)
                count += 1
    assert count > 100


def test_cyclotomic_gcd_examples():
    c = cyclotomic_gcd_check(2, 6, 2)
    assert c.gcd == 3 and c.holds
    c = cyclotomic_gcd_check(3, 4, 2)
    assert c.gcd == 1 and c.holds
    for q in (2, 3, 5):
        c = cyclotomic_gcd_check(2, 2, q)
        assert c.gcd == q + 1 > 1 and c.holds


def test_cyclotomic_gcd_range():
    # The implication fails only at c = 1 when p | q - 1: Phi_p(q) and
    # Phi_1(q) = q - 1 then share the factor p.  c = 1 never lies in a J-set.
    failures = []
    for p in (x for x in range(2, 14) if is_prime(x)):
        for c in range(1, 61):
            for q in (2, 3, 5):
                cert = cyclotomic_gcd_check(p, c, q)
                if not cert.holds:
                    failures.append((p, c, q, cert.gcd))
    assert failures == [(2, 1, 3, 2), (2, 1, 5, 2)]


def test_cyclotomic_gcd_counterexample_is_outside_every_j_set():
    assert not cyclotomic_gcd_check(2, 1, 3).holds
    for a in range(2, 40):
        for b in range(1, a):
            assert 1 not in j_set(a, b)


@settings(max_examples=200)
@given(st.integers(2, 40), st.data(), st.sampled_from(QS))
def test_factorization_property(a, data, q):
    b = data.draw(st.integers(1, a - 1))
    cert = verify_factorization(a, b, q)
    assert cert.holds and cert.gaussian == gaussian_fraction(a, b, q)
    assert cert.gaussian == gaussian_binomial(a, a - b, q)
