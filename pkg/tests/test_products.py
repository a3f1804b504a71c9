import pytest

from rrgordon.partitions import GordonParams, count_modular, gordon_series
from rrgordon.products import (
    ProductIndex,
    base_product,
    product_series,
    tail_valuation_profile,
)
from rrgordon.qseries import INFINITE, TruncatedSeries


def test_index_decomposition():
    # base range: level 0, slot = index
    for r in (2, 3, 5):
        for index in range(1, r + 1):
            idx = ProductIndex(r, index)
            assert (idx.level, idx.slot) == (0, index)
    # beyond the base range the slot stays in 2..r
    assert (ProductIndex(2, 3).level, ProductIndex(2, 3).slot) == (1, 2)
    assert (ProductIndex(2, 7).level, ProductIndex(2, 7).slot) == (5, 2)
    assert (ProductIndex(3, 4).level, ProductIndex(3, 4).slot) == (1, 2)
    assert (ProductIndex(3, 5).level, ProductIndex(3, 5).slot) == (1, 3)
    assert (ProductIndex(5, 17).level, ProductIndex(5, 17).slot) == (3, 5)
    for r in (2, 3, 4):
        for index in range(r + 1, 40):
            idx = ProductIndex(r, index)
            assert 2 <= idx.slot <= r
            assert (r - 1) * idx.level + idx.slot == index


def test_index_validation():
    with pytest.raises(ValueError):
        ProductIndex(1, 1)
    with pytest.raises(ValueError):
        ProductIndex(3, 0)


def test_base_product_frozen_values():
    assert base_product(2, 1, 5).coeffs == (1, 1, 1, 1, 2, 2)
    assert base_product(2, 2, 5).coeffs == (1, 0, 1, 1, 1, 1)
    assert base_product(4, 3, 0).coeffs == (1,)
    with pytest.raises(ValueError):
        base_product(3, 4, 5)


def test_base_product_matches_naive_factor_product():
    # same series, assembled by generic truncated multiplication
    from rrgordon.partitions import allowed_residues

    for r, ell, N in [(2, 1, 12), (3, 2, 12), (4, 4, 10)]:
        allowed = allowed_residues(r, r - ell + 1)
        naive = TruncatedSeries.one(N)
        for m in range(1, N + 1):
            if m % (2 * r + 1) in allowed:
                naive = naive * TruncatedSeries.geometric_series(m, N)
        assert naive.coeffs == base_product(r, ell, N).coeffs


def test_base_product_matches_modular_counts():
    for r in (2, 3, 4, 5):
        for ell in range(1, r + 1):
            coeffs = base_product(r, ell, 20).coeffs
            for n in range(21):
                assert coeffs[n] == count_modular(r, r - ell + 1, n), (r, ell, n)


def test_first_extended_entry():
    # (entry 1 - entry 2) / q for r = 2
    assert product_series(ProductIndex(2, 3), 5).coeffs == (1, 0, 0, 1, 1, 1)


def test_base_delegation():
    assert product_series(ProductIndex(3, 3), 4).coeffs == base_product(3, 3, 4).coeffs


def test_extended_entry_matches_partition_counts():
    # index 3 = (r-1)*J + ell for r=2, i=1, J=1
    params = GordonParams(2, 1, 1)
    assert params.product_index == 3
    got = product_series(ProductIndex(2, 3), 30)
    assert got.eq(gordon_series(params, 30))


@pytest.mark.parametrize(
    "r,i,J,N",
    [(2, 2, 0, 40), (2, 1, 2, 40), (3, 3, 1, 30), (4, 2, 2, 30), (5, 5, 3, 25)],
)
def test_identity_spot_instances(r, i, J, N):
    params = GordonParams(r, i, J)
    lhs = product_series(ProductIndex(r, params.product_index), N)
    assert lhs.eq(gordon_series(params, N))


def test_tail_valuation_profile_values():
    profile = tail_valuation_profile(2, 5, 20)
    assert profile[0] == 3  # entry for d=1
    assert profile == [3, 4, 5, 6, 7]


def test_tail_valuation_profile_reports_infinite_past_order():
    profile = tail_valuation_profile(2, 8, 5)
    assert profile[:3] == [3, 4, 5]
    assert all(v == INFINITE for v in profile[4:])


@pytest.mark.parametrize("r,N", [(2, 30), (3, 24), (4, 18), (5, 14)])
def test_tail_converges_to_one(r, N):
    """Deep entries are 1 to order N somewhere within d <= N + 2."""
    profile = tail_valuation_profile(r, N + 2, N)
    assert any(v == INFINITE for v in profile)
    finite = [v for v in profile if v != INFINITE]
    assert finite == sorted(finite)
    # once the tail reaches 1 it stays there
    first_inf = profile.index(INFINITE)
    assert all(v == INFINITE for v in profile[first_inf:])


def test_deep_towers_divide_exactly():
    # every level climb performs exact q-power divisions; none may fail
    for r in (2, 3, 4):
        for index in range(1, 4 * r):
            product_series(ProductIndex(r, index), 15)
