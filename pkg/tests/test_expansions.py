from fractions import Fraction
from itertools import permutations

import pytest
import sympy

from symdiv import expansions as ex
from symdiv.divmaps import col_adjoint, rowdiv
from symdiv.partitions import partitions_of, skew_shape
from symdiv.qsym import qsym_to_sym, theta
from symdiv.symfunc import SymFunc, convert, e, is_positive, s


def test_skew_schur():
    assert ex.skew_schur(skew_shape((3, 2), (1,))) == s(3, 1) + s(2, 2)
    assert ex.skew_schur(ex.disjoint_columns((2, 1))) == convert(e(2, 1), "s")


@pytest.mark.parametrize("k", [2, 3])
def test_rowdiv_schur_routes_agree(k):
    for size in range(k, 10, k):
        for lam in partitions_of(size):
            direct = rowdiv(s(lam), k, "s")
            yam, lr = ex.rowdiv_schur_two_ways(lam, k)
            assert yam == direct == lr
            assert qsym_to_sym(ex.rowdiv_schur_f_expansion(lam, k)) == direct


def test_rowdiv_schur_on_skew_shape():
    shape = skew_shape((4, 3, 1), (2,))
    yam, lr = ex.rowdiv_schur_two_ways(shape, 2)
    assert yam == lr == rowdiv(ex.skew_schur(shape), 2, "s")


@pytest.mark.parametrize("k", [2, 3])
def test_rowdiv_e_schur(k):
    for size in range(k, 9, k):
        for mu in partitions_of(size):
            assert ex.rowdiv_e_schur(mu, k) == rowdiv(e(mu), k, "s")
    assert ex.rowdiv_e_schur((2, 1, 1), 2) == s(1, 1).scale(2)


@pytest.mark.parametrize("k", [2, 3])
def test_minimal_coefficient_agrees(k):
    for size in range(k, 9, k):
        for mu in partitions_of(size):
            assert ex.minimal_coefficient(mu, k).agrees, mu


def test_minimal_coefficient_degenerate():
    # rowdiv(e_k, k) = 0
    assert ex.minimal_coefficient((2,), 2) == (None, 0, True)


def test_euler_small():
    assert [ex.down_up_count(n) for n in range(1, 8)] == [1, 1, 2, 5, 16, 61, 272]
    for n in range(1, 5):
        assert ex.euler_number((1,) * (2 * n), 2) == ex.down_up_count(2 * n)
    assert ex.euler_number((1,) * 6, 2) == 61
    with pytest.raises(ValueError):
        ex.euler_number((1,) * 4, 2, "z")


@pytest.mark.parametrize("k", [2, 3])
def test_euler_yamanouchi_route(k):
    for size in range(k, 9, k):
        for mu in partitions_of(size):
            assert ex.euler_via_yamanouchi(mu, k) == ex.euler_number(mu, k, "b")


def _block_words(content, k):
    """Independent brute force: multiset permutations, strict descents inside
    k-blocks and weak ascents at block boundaries."""
    letters = [i + 1 for i, c in enumerate(content) for _ in range(c)]
    count = 0
    for w in set(permutations(letters)):
        ok = all(w[i] > w[i + 1] if (i + 1) % k else w[i] <= w[i + 1] for i in range(len(w) - 1))
        count += ok
    return count


def test_euler_word_model_brute_force():
    for k in (2, 3):
        for size in range(k, 7, k):
            for mu in partitions_of(size):
                assert ex.euler_number(mu, k, "c") == _block_words(mu, k) == ex.euler_number(mu, k, "a")


@pytest.mark.parametrize("k", [2, 3])
def test_sum_by_length_four_ways(k):
    for n in range(1, 5 if k == 2 else 4):
        for mu in partitions_of(k * n):
            for r in range(1, n + 1):
                assert ex.sum_e_by_length(mu, k, r).agree, (mu, r)


def test_theta_sh_formula():
    for k in (2, 3):
        for n in range(1, 4):
            for mu in partitions_of(k * n):
                assert theta(rowdiv(e(mu), k)) == ex.theta_sh_formula(mu, k)


def test_f_kr_hand_values():
    assert ex.f_kr(2, 2) == SymFunc("e", {(2, 2): 1, (4,): -2})
    assert ex.f_kr(2, 3) == SymFunc("e", {(2, 2, 2): 1, (4, 2): -3, (6,): 3})
    assert ex.f_kr(1, 1) == e(1)


@pytest.mark.parametrize("k,r", [(k, r) for k in range(1, 5) for r in range(1, 5) if k * r <= 9])
def test_f_kr_three_ways(k, r):
    a, b, c = ex.f_kr_three_ways(k, r)
    assert a == b == c
    assert is_positive(c, "m")


def test_f_kr_cyclic_more_variables():
    # more variables than the degree changes nothing
    assert ex.f_kr_cyclic(2, 2, nvars=6) == ex.f_kr(2, 2)


def test_series_log_inverts_exp_of_simple_series():
    # log(1 + e_1 t) = e_1 t - e_1^2 t^2 / 2 + ...
    x = ex.SeriesInT([e(), e(1)], 4)
    lg = x.log()
    assert lg[1] == e(1) and lg[2] == e(1, 1).scale(Fraction(-1, 2)) and lg[3] == e(1, 1, 1).scale(Fraction(1, 3))
    with pytest.raises(ValueError):
        ex.SeriesInT([e(1)], 3).log()


@pytest.mark.parametrize("k", [2, 3])
def test_p_expansion(k):
    for size in range(k, 9, k):
        for mu in partitions_of(size):
            assert ex.p_expansion_omega_rowdiv_e(mu, k) == ex.omega_rowdiv_e(mu, k)
    assert ex.p_expansion_omega_rowdiv_e((1,) * 4, 2) == SymFunc("p", {(2,): 2, (1, 1): 3})


def test_bernoulli_against_sympy():
    table = ex.bernoulli_table(12)
    for i, b in enumerate(table):
        expected = sympy.bernoulli(i) if i != 1 else sympy.Rational(-1, 2)
        assert b == Fraction(int(expected.p), int(expected.q))


def test_ass_and_series():
    for n in range(1, 5):
        assert ex.ass_check(n)
        assert ex.a_nk_series(n, 2) == convert(ex.omega_rowdiv_e((1,) * (2 * n), 2), "m")
    assert ex.a_nk_series(2, 3) == convert(ex.omega_rowdiv_e((1,) * 6, 3), "m")
    with pytest.warns(UserWarning):
        ex.ass_check(1, 3)


def test_gamma_values():
    assert ex.gamma_coeffs(4, 2) == [1, 24, 16]
    assert ex.gamma_coeffs(2, 3) == [1, 18]
    assert ex.gamma_coeffs(3, 3) == [1, 81]
    for n in range(1, 11):
        assert ex.gamma_coeffs(n, 2) == ex.gamma_closed_form_k2(n)
    for k in (2, 3):
        for n in range(1, 5):
            assert ex.gamma_via_rowdiv(n, k) == ex.gamma_coeffs(n, k)
    with pytest.raises(ValueError):
        ex.gamma_coeffs(-1, 2)


def test_two_row_support():
    assert ex.two_row_coefficients(2, 2) == [1, 4, 68]
    for c in (1, 2):
        assert ex.two_row_support_check(c, 2)


def test_star_product():
    assert ex.star_product_check([(2, 1), (1, 1)])
    assert ex.star_product_check([(3, 1), (2,), (1, 1)])
    for lam in partitions_of(3):
        assert convert(ex.star_product_det([lam]), "s") == s(lam)


def test_hadamard_power_remark():
    f = ex.hadamard_adjoint((2, 2, 2, 2), 2)
    assert f == col_adjoint(s(2, 2, 2, 2), 2)
    assert convert(f, "m").coeff((10, 3, 3)) == -4
    assert ex.schur_coefficient(f, (10, 3, 3)) == -4


def test_e_positivity_scan():
    for k in (1, 2, 3):
        got = ex.e_positivity_scan(3, k)
        assert got["violations"] == [] and got["checked"] > 0
    assert ex.e_positivity_scan(3, 2, workers=2) == ex.e_positivity_scan(3, 2)
