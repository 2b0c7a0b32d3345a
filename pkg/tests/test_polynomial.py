import random
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from hyperchi import Polynomial

coeffs = st.lists(
    st.fractions(min_value=-10, max_value=10, max_denominator=12), max_size=6
)
polys = coeffs.map(Polynomial)
points = st.integers(min_value=-20, max_value=20)


def test_canonical_form():
    assert Polynomial([1, 2, 0, 0]).coeffs == (Fraction(1), Fraction(2))
    assert Polynomial([0, 0]).coeffs == ()
    assert Polynomial() == Polynomial([0]) == 0
    assert Polynomial([Fraction(1, 2)]).coeffs == (Fraction(1, 2),)
    # constants hash consistently with the scalars they equal
    assert hash(Polynomial([5])) == hash(5)
    assert hash(Polynomial()) == hash(0)


def test_degree_and_leading():
    assert Polynomial().degree == -1
    assert Polynomial([5]).degree == 0
    p = Polynomial([0, 0, Fraction(3, 7)])
    assert p.degree == 2 and p.leading_coefficient == Fraction(3, 7)


def test_monomial_shift_pow():
    n = Polynomial.N
    assert Polynomial.monomial(3, 2) == 2 * n**3
    assert (n + 1).shift(2) == n**3 + n**2
    assert (n - 1) * (n + 1) == n**2 - 1
    assert (n + 1) ** 3 == n**3 + 3 * n**2 + 3 * n + 1


def test_str_and_coefficient_strings():
    p = Polynomial([0, Fraction(-5, 6), Fraction(5, 2), Fraction(-8, 3), 1])
    assert str(p) == "n^4 - 8/3*n^3 + 5/2*n^2 - 5/6*n"
    assert p.coefficient_strings() == ["0", "-5/6", "5/2", "-8/3", "1"]
    assert str(Polynomial()) == "0"


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + Polynomial.ZERO == p
    assert p * Polynomial.ONE == p
    assert p - p == Polynomial.ZERO


@given(polys, polys, points)
def test_evaluation_is_ring_homomorphism(p, q, x):
    assert (p + q)(x) == p(x) + q(x)
    assert (p * q)(x) == p(x) * q(x)


def test_evaluation_homomorphism_at_random_points():
    rng = random.Random(7)
    for _ in range(20):
        p = Polynomial([Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(4)])
        q = Polynomial([Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(3)])
        x = Fraction(rng.randint(-30, 30), rng.randint(1, 5))
        assert (p + q)(x) == p(x) + q(x)
        assert (p * q)(x) == p(x) * q(x)


def test_exact_rational_evaluation():
    p = Polynomial([Fraction(1, 3), Fraction(-1, 2), 1])
    assert p(Fraction(1, 2)) == Fraction(1, 3) - Fraction(1, 4) + Fraction(1, 4)
    assert p(-2) == Fraction(1, 3) + 1 + 4
