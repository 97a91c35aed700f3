from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from torusloc import contactrr
from torusloc.contactrr import ChernRing
from torusloc.laurent import Coefficient


def binom(a, k):
    out = Fraction(1)
    for i in range(k):
        out = out * (a - i) / (i + 1)
    return out


def relations(n):
    return {k: str(v) for k, v in contactrr.odd_chern_relations(n).items()}


def test_odd_relations_dim_7():
    assert relations(3) == {"c1": "3*l", "c3": "-5*l^3 + 2*l*c2", "c5": "3*l^5 - l^3*c2 + l*c4"}


def test_odd_relations_dim_9():
    assert relations(4) == {
        "c1": "4*l",
        "c3": "-14*l^3 + 3*l*c2",
        "c5": "28*l^5 - 5*l^3*c2 + 2*l*c4",
        "c7": "-17*l^7 + 3*l^5*c2 - l^3*c4 + l*c6",
    }


def test_odd_relations_dim_3():
    # rank 2: c1(F* (x) L) = -c1(F) + 2 c1(L) = c1(F) forces c1(F) = c1(L)
    assert relations(1) == {"c1": "l"}


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_even_degrees_are_consistent(n):
    assert all(not d.terms for d in contactrr.symmetry_defects(n))


def test_ring_truncation():
    ring = ChernRing(2)
    l = ring.gen("l")
    assert (l ** 5).terms and not (l ** 6).terms
    assert not (ring.gen("c4") * ring.gen("c2")).terms
    assert [ring.monomial_name(m) for m in ring.top_monomials()] == ["l*c4", "l*c2^2", "l^3*c2", "l^5"]
    with pytest.raises(ValueError):
        ChernRing(0)


def test_todd_series():
    assert contactrr.todd_series(6) == (1, Fraction(1, 2), Fraction(1, 12), 0, Fraction(-1, 720), 0, Fraction(1, 30240))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_serre_symmetry(n):
    hp = contactrr.hilbert_polynomial(n)
    d = 2 * n + 1
    for m in range(-6, 6):
        assert hp(m) == Coefficient.lift(hp(-(n + 1) - m)) * (-1) ** d


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_leading_coefficient_and_normalization(n):
    hp = contactrr.hilbert_polynomial(n)
    d = 2 * n + 1
    assert Coefficient.lift(hp.power[d]) == Coefficient(0, {"deg": Fraction(1, factorial(d))})
    assert hp(0) == 1 and hp(-1) == 0
    if n >= 2:
        assert hp(-2) == 0
    for k in (1, 2):
        if f"p{k}" in hp.symbols:
            assert hp(k) == Coefficient.symbol(f"p{k}")


def test_projective_three_space():
    # P^3 is contact with L = O(2): deg = 8 and p(m) = C(2m + 3, 3)
    hp = contactrr.hilbert_polynomial(1)
    assert hp.symbols == ["deg"]
    assert all(hp(m, {"deg": 8}) == binom(2 * m + 3, 3) for m in range(-4, 6))


def test_projective_five_space():
    hp = contactrr.hilbert_polynomial(2)
    assert all(hp(m, {"deg": 32}) == binom(2 * m + 5, 5) for m in range(-5, 6))
    ids = contactrr.intersection_identities(2)
    # c2(P^5) = 15 H^2 and l = 2H: c2 l^3 = 120
    assert ids[1].rhs.substitute({"deg": 32}) == 120


def test_hilbert_polynomials():
    text = {n: str(contactrr.hilbert_polynomial(n)) for n in (3, 4, 5)}
    assert text[3] == "p(m) = deg*C(m+7,7) - 2deg*C(m+6,6) + (deg + p(1) - 4)*C(m+5,5) + (-p(1) + 4)*C(m+4,4) + C(m+3,3)"
    assert "(-(1/2)deg - 3p(1) + 21)*C(m+6,6)" in text[4] and "(p(1) - 5)*C(m+5,5)" in text[4]
    assert "(3deg - 8p(1) + p(2) + 27)*C(m+9,9)" in text[5]


def test_fractional_m():
    hp = contactrr.hilbert_polynomial(3)
    vals = {"deg": 56, "p1": 21}
    half = hp(Fraction(1, 2), vals)
    # evaluate the binomial form directly
    m = Fraction(1, 2)
    direct = sum(c.substitute(vals) * binom(m + j, j) for j, c in hp.binomial_terms())
    assert half == direct


def test_intersection_identities():
    s3 = [str(i) for i in contactrr.intersection_identities(3)]
    s4 = [str(i) for i in contactrr.intersection_identities(4)]
    assert s3 == ["c1(TX)^2 c1(L)^5 = 16deg", "c2(TX) c1(L)^5 = 4deg + 12p(1) - 48"]
    assert s4 == ["c1(TX)^2 c1(L)^7 = 25deg", "c2(TX) c1(L)^7 = 9deg + 24p(1) - 168"]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_first_chern_class_is_index_times_l(n):
    c1, _ = contactrr.tx_classes(n)
    ring = c1.ring
    assert c1 == ring.gen("l") * (n + 1)
    ident = contactrr.intersection_identities(n)[0]
    assert ident.rhs == Coefficient(0, {"deg": (n + 1) ** 2})


def test_bounds():
    assert contactrr.bg_bound(3).p1_threshold() == Coefficient(4, {"deg": Fraction(5, 21)})
    assert contactrr.bg_bound(4).p1_threshold() == Coefficient(7, {"deg": Fraction(19, 216)})
    assert str(contactrr.bg_bound(5)) == "11p(2) + 297 >= 88p(1) + 4deg"
    with pytest.raises(ValueError):
        contactrr.bg_bound(5).p1_threshold()


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_dim7_threshold_at_multiples_of_21(k):
    assert contactrr.bg_bound(3).min_p1(21 * k) == 4 + 5 * k


@given(st.integers(1, 500))
def test_integer_consequences(deg):
    assert contactrr.bg_bound(3).min_p1(deg) >= 5
    assert contactrr.bg_bound(4).min_p1(deg) >= 8


def test_parity():
    assert contactrr.parity_check(4, 6).passed is True
    assert contactrr.parity_check(4, 7).passed is False
    cong = contactrr.parity_check(4).congruence
    assert (cong.modulus, cong.residue) == (2, 0)
    assert str(cong) == "deg = 0 mod 2"
    assert contactrr.parity_check(3).congruence.modulus == 1


def test_solve_degree():
    sol = contactrr.solve_degree(3, {1: 21, 2: 168})
    assert sol == {"deg": 56, "p1": 21}
    assert contactrr.hilbert_polynomial(3)(3, sol) == 825
    with pytest.raises(ValueError):
        contactrr.solve_degree(3, {1: 21})
    with pytest.raises(ValueError):
        contactrr.solve_degree(3, {1: 21, 2: 168, 3: 826})


def test_known_contact_fano_values():
    # G2 adjoint (dim 5): p(1) = 14; the dim-5 polynomial depends on deg alone, deg = 18
    hp = contactrr.hilbert_polynomial(2)
    assert hp(1, {"deg": 18}) == 14
    # B3 adjoint (dim 7): deg 56, p(1) = 21
    assert contactrr.hilbert_polynomial(3)(1, {"deg": 56, "p1": 21}) == 21


def test_json():
    data = contactrr.hilbert_polynomial(3).to_json()
    assert data["dim"] == 7 and set(data["binomial"]) == {"3", "4", "5", "6", "7"}
