import random
from fractions import Fraction

import pytest

from cypair import symcalc
from cypair.symcalc import (
    ChernSeries,
    RootSeries,
    SymmetryError,
    ch_exterior,
    ch_exterior_roots,
    degree_part,
    elementary_symmetric,
    embed_roots,
    expand_to_roots,
    shift_derivative,
    symmetrize_to_chern,
    todd,
    todd_prime,
    todd_prime_roots,
    todd_roots,
    verify_shifted_class_identities,
    verify_total_class_identities,
)


def cs(m, order, terms):
    return ChernSeries(m, order, {e: Fraction(q) for e, q in terms.items()})


# ---------------------------------------------------------------------------
# elementary symmetric polynomials and basis conversion
# ---------------------------------------------------------------------------


def test_elementary_symmetric_basics():
    e1 = elementary_symmetric(2, 1)
    assert e1.terms == {(1, 0): 1, (0, 1): 1}
    e2 = elementary_symmetric(2, 2)
    assert e2.terms == {(1, 1): 1}
    e0 = elementary_symmetric(3, 0)
    assert e0.terms == {(0, 0, 0): 1}


def test_elementary_symmetric_out_of_range():
    with pytest.raises(ValueError):
        elementary_symmetric(2, 3)
    with pytest.raises(ValueError):
        elementary_symmetric(2, -1)


def test_symmetrize_linear():
    assert symmetrize_to_chern(elementary_symmetric(2, 1)) == cs(2, 1, {(1, 0): 1})


def test_symmetrize_power_sum():
    # p_2 = x1^2 + x2^2; Newton identity p_2 = e_1^2 - 2 e_2, checked by
    # expanding the claimed right side back into roots.
    p2 = RootSeries(2, 2, {(2, 0): Fraction(1), (0, 2): Fraction(1)})
    claimed = cs(2, 2, {(2, 0): 1, (0, 1): -2})
    assert expand_to_roots(claimed) == p2
    assert symmetrize_to_chern(p2) == claimed


def test_symmetrize_rejects_asymmetric():
    lone = RootSeries.variable(2, 2, 0)
    with pytest.raises(SymmetryError) as err:
        symmetrize_to_chern(lone)
    assert "x1" in str(err.value) and "x2" in str(err.value)


def test_roundtrip_random_series():
    rng = random.Random(1205)
    for _ in range(40):
        m = rng.randint(1, 4)
        order = rng.randint(0, 6)
        terms = {}
        for _ in range(rng.randint(0, 6)):
            expo = tuple(rng.randint(0, 3) for _ in range(m))
            terms[expo] = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        series = ChernSeries(m, order, terms)
        assert symmetrize_to_chern(expand_to_roots(series)) == series


# ---------------------------------------------------------------------------
# Todd series
# ---------------------------------------------------------------------------


def test_todd_two_roots_order_two():
    expected = cs(2, 2, {(0, 0): 1, (1, 0): Fraction(1, 2),
                         (2, 0): Fraction(1, 12), (0, 1): Fraction(1, 12)})
    assert todd(2, 2) == expected


def test_todd_one_root():
    assert todd(1, 2) == cs(1, 2, {(0,): 1, (1,): Fraction(1, 2), (2,): Fraction(1, 12)})
    assert todd(1, 0) == cs(1, 0, {(0,): 1})


def test_todd_low_degrees_stable_in_m():
    # 1 + c1/2 + (c1^2 + c2)/12 in weighted degree <= 2, for any root count.
    for m in range(2, 7):
        low = todd(m, 2)
        pad = (0,) * (m - 2)
        assert low == cs(m, 2, {
            (0, 0) + pad: 1,
            (1, 0) + pad: Fraction(1, 2),
            (2, 0) + pad: Fraction(1, 12),
            (0, 1) + pad: Fraction(1, 12),
        })


def test_degree_part():
    t = todd(2, 2)
    assert degree_part(t, 0) == cs(2, 2, {(0, 0): 1})
    assert degree_part(t, 1) == cs(2, 2, {(1, 0): Fraction(1, 2)})
    one_plus_c1 = cs(2, 2, {(0, 0): 1, (1, 0): 1})
    assert degree_part(one_plus_c1, 2).is_zero()


# ---------------------------------------------------------------------------
# shifted Todd series
# ---------------------------------------------------------------------------


def test_shift_derivative_of_elementary():
    # Shifting all roots by t and differentiating sends c_k to (m-k+1) c_{k-1}.
    for m in range(1, 6):
        for k in range(1, m + 1):
            shifted = shift_derivative(elementary_symmetric(m, k, order=k))
            expected = elementary_symmetric(m, k - 1, order=k) * (m - k + 1)
            assert shifted == expected


def test_todd_prime_matches_derivative_sum():
    # The nilpotent-shift product agrees with applying sum_j d/dx_j to Todd.
    for m in range(1, 5):
        order = m + 1
        direct = todd_prime_roots(m, order)
        via_derivative = shift_derivative(todd_roots(m, order + 1)).truncate(order)
        assert direct == via_derivative


def test_todd_prime_over_todd_low_degree():
    # {Td'/Td}^[<=1] = m/2 - c1/12, computed with an independent series
    # inversion in root coordinates.
    for m in range(1, 7):
        ratio = todd_prime_roots(m, 2) * todd_roots(m, 2).inverse()
        low = symmetrize_to_chern(ratio.degree_part(range(0, 2)))
        e1 = tuple(1 if i == 0 else 0 for i in range(m))
        assert low == cs(m, 2, {(0,) * m: Fraction(m, 2), e1: Fraction(-1, 12)})


# ---------------------------------------------------------------------------
# exterior-power Chern characters
# ---------------------------------------------------------------------------


def test_ch_exterior_single_root():
    assert ch_exterior(1, 1, 2) == cs(1, 2, {(0,): 1, (1,): -1, (2,): Fraction(1, 2)})


def test_ch_exterior_zeroth_power():
    assert ch_exterior(2, 0, 3) == cs(2, 3, {(0, 0): 1})


def test_ch_exterior_out_of_range():
    with pytest.raises(ValueError):
        ch_exterior(2, 3, 2)


def test_alternating_sum_equals_product():
    # sum_r (-1)^r ch of the r-th exterior dual power equals
    # prod_j (1 - exp(-x_j)); in particular every component of degree < m
    # vanishes and the degree-m component is c_m.
    for m in range(1, 5):
        order = m + 2
        total = RootSeries.zero(m, order)
        for r in range(m + 1):
            total = total + ch_exterior_roots(m, r, order) * ((-1) ** r)
        product = RootSeries.constant(m, order, 1)
        one = RootSeries.constant(m, order, 1)
        for j in range(m):
            expj = RootSeries.from_univariate(
                m, order, j, symcalc._exp_neg_coeffs(order))
            product = product * (one - expj)
        assert total == product
        for d in range(m):
            assert total.degree_part(d).is_zero()
        assert symmetrize_to_chern(total.degree_part(m)) == symmetrize_to_chern(
            elementary_symmetric(m, m, order).degree_part(m))


def test_generating_function_in_t():
    # sum_r (-1)^r t^r ch(exterior r) = prod_j (1 - t exp(-x_j)), compared
    # coefficient-by-coefficient in t.
    rng = random.Random(77)
    for _ in range(6):
        m = rng.randint(1, 5)
        order = rng.randint(1, 5)
        lhs = [ch_exterior_roots(m, r, order) * ((-1) ** r) for r in range(m + 1)]
        rhs = [RootSeries.constant(m, order, 1)] + [
            RootSeries.zero(m, order) for _ in range(m)]
        for j in range(m):
            expj = RootSeries.from_univariate(
                m, order, j, symcalc._exp_neg_coeffs(order))
            for k in range(min(m, j + 1), 0, -1):
                rhs[k] = rhs[k] + rhs[k - 1] * (-expj)
        assert lhs == rhs


# ---------------------------------------------------------------------------
# truncation coherence and multiplicativity
# ---------------------------------------------------------------------------


def test_truncation_coherence():
    for m in (1, 2, 3):
        wide = m + 3
        for narrow in range(wide):
            assert todd(m, wide).truncate(narrow) == todd(m, narrow)
            assert todd_prime(m, wide).truncate(narrow) == todd_prime(m, narrow)
            for r in range(m + 1):
                assert ch_exterior(m, r, wide).truncate(narrow) == ch_exterior(m, r, narrow)


def test_todd_multiplicative_under_root_partition():
    for m1, m2 in [(1, 1), (1, 2), (2, 2), (2, 3)]:
        order = 4
        m = m1 + m2
        left = embed_roots(todd_roots(m1, order), m, 0)
        right = embed_roots(todd_roots(m2, order), m, m1)
        assert symmetrize_to_chern(left * right) == todd(m, order)


# ---------------------------------------------------------------------------
# identity residuals
# ---------------------------------------------------------------------------


def test_identity_one_root_by_hand():
    res1, res2, res3 = verify_total_class_identities(1)
    assert res1.is_zero() and res2.is_zero() and res3.is_zero()
    # The [<=1] window of -x exp(-x)/(1 - exp(-x)) is -1 + x/2.
    td = todd_roots(1, 3)
    s1 = ch_exterior_roots(1, 1, 3) * (-1)
    window = symmetrize_to_chern((td * s1).degree_part(range(0, 2)))
    assert window == cs(1, 3, {(0,): -1, (1,): Fraction(1, 2)})


def test_total_class_identities_hold():
    for m in range(1, 7):
        for residual in verify_total_class_identities(m):
            assert residual.is_zero(), f"m={m}: {residual}"


def test_shifted_class_identities_hold():
    for m in range(1, 7):
        for residual in verify_shifted_class_identities(m):
            assert residual.is_zero(), f"m={m}: {residual}"


def test_verify_guards():
    with pytest.raises(ValueError):
        verify_total_class_identities(0)
    with pytest.raises(ValueError):
        verify_total_class_identities(9)
    with pytest.raises(ValueError):
        verify_shifted_class_identities(0)


def test_verify_order_override():
    for wide in (3, 5, 7):
        for residual in verify_total_class_identities(3, order=wide):
            assert residual.is_zero()
