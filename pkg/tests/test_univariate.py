from fractions import Fraction

from lorentzpoly import univariate as uni


def F(*values):
    return [Fraction(v) for v in values]


def test_no_real_roots_for_positive_quadratic():
    # x^2 + 6x + 13 has negative discriminant
    assert uni.count_real_roots(F(13, 6, 1)) == 0


def test_two_real_roots():
    # (t - 1)(t + 2)
    assert uni.count_real_roots(F(-2, 1, 1)) == 2


def test_interval_counting_is_half_open():
    # roots of t^2 - 1 at -1 and 1
    p = F(-1, 0, 1)
    assert uni.count_real_roots_in(p, 0, 1) == 1
    assert uni.count_real_roots_in(p, 1, 2) == 0
    assert uni.count_real_roots_in(p, -1, 1) == 1


def test_strip_zero_root():
    reduced, z = uni.strip_zero_root(F(0, 0, 3, 1))
    assert z == 2 and reduced == F(3, 1)


def test_descartes_matches_roots_for_real_rooted():
    # (t-1)(t-2)(t+3) = t^3 - 7t + 6
    assert uni.descartes_positive_roots(F(6, -7, 0, 1)) == 2


def test_squarefree_decomposition():
    # (t-1)^2 (t+2)
    p = F(2, -3, 0, 1)
    factors = uni.squarefree_decomposition(p)
    assert sorted((uni.degree(f), mult) for f, mult in factors) == [(1, 1), (1, 2)]


def test_exact_divide_round_trip():
    a = F(1, 2, 1)  # (t+1)^2
    b = F(1, 1)
    q = uni.exact_divide(a, b)
    assert q == F(1, 1)
