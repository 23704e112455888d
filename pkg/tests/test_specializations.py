import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import partitions
from lrpoly.lr_rule import classical_lr, expand_product, lr_polynomial, rule_data
from lrpoly.polyring import ONE, ZERO, generator
from lrpoly.specializations import (
    GrassmannianContext,
    immanant_coeff,
    immanant_coeff_specialized,
    immanant_factors,
    schubert_coeff,
    schubert_factor,
    schubert_to_a,
    specialize_shifted,
    specialize_to_schubert,
)

a = lambda i: generator("a", i)  # noqa: E731


def t_for(m):
    return lambda k: generator("t", m + k)


@pytest.mark.parametrize("n, m", [(3, 4), (4, 5), (3, 6)])
def test_schubert_product_example(n, m):
    ctx = GrassmannianContext(n, m)
    t = t_for(m)
    expected = {
        (4, 1): ONE,
        (3, 2): ONE,
        (3, 1, 1): ONE,
        (2, 2, 1): ONE,
        (3, 1): t(2) - t(-1) + t(0) - t(-2),
        (2, 2): t(2) - t(-1),
        (2, 1, 1): t(0) - t(-1),
        (2, 1): (t(2) - t(-1)) * (t(0) - t(-1)),
    }
    for nu, want in expected.items():
        assert schubert_coeff((2,), (2, 1), nu, ctx) == want
        assert schubert_coeff((2,), (2, 1), nu, ctx, direct=True) == want


def test_specialize_examples():
    ctx = GrassmannianContext(2, 2)
    assert specialize_to_schubert(a(-1) - a(2), ctx) == generator("t", 4) - generator("t", 1)
    assert specialize_to_schubert(ZERO, ctx) == ZERO
    assert specialize_to_schubert(a(3), ctx) == ZERO
    assert specialize_to_schubert(a(-2), ctx) == ZERO


def test_context_rejects_outside_rectangle():
    ctx = GrassmannianContext(2, 3)
    with pytest.raises(ValueError):
        schubert_coeff((4,), (1,), (5,), ctx)
    with pytest.raises(ValueError):
        schubert_coeff((1, 1, 1), (1,), (2, 1, 1), ctx, direct=True)
    with pytest.raises(ValueError):
        GrassmannianContext(0, 2)
    assert ctx.N == 5 and ctx.fits((3, 3)) and not ctx.fits((1, 1, 1))


@pytest.mark.parametrize(
    "nu, value",
    [((4, 1), 1), ((3, 2), 1), ((3, 1, 1), 1), ((2, 2, 1), 1), ((3, 1), 5), ((2, 2), 3), ((2, 1, 1), 1), ((2, 1), 3)],
)
def test_immanant_example(nu, value):
    assert immanant_coeff((2,), (2, 1), nu) == value
    assert immanant_coeff_specialized((2,), (2, 1), nu) == value


def test_shifted_specialization():
    assert specialize_shifted(a(-1) - a(2)) == 3


def _rect(lam, mu):
    n = max(1, len(lam) + len(mu))
    m = max(1, lam.part(1) + mu.part(1))
    return n, m


@given(partitions(4), partitions(4))
def test_schubert_routes_agree(lam, mu):
    ctx = GrassmannianContext(*_rect(lam, mu))
    for nu in expand_product(lam, mu):
        if ctx.fits(nu):
            assert schubert_coeff(lam, mu, nu, ctx) == schubert_coeff(lam, mu, nu, ctx, direct=True)


@given(partitions(3), partitions(3), st.integers(1, 3), st.integers(1, 3))
def test_schubert_routes_agree_in_small_rectangles(lam, mu, n, m):
    ctx = GrassmannianContext(n, m)
    if not (ctx.fits(lam) and ctx.fits(mu)):
        return
    for nu in expand_product(lam, mu):
        if ctx.fits(nu):
            assert schubert_coeff(lam, mu, nu, ctx) == schubert_coeff(lam, mu, nu, ctx, direct=True)


@given(partitions(4), partitions(4), st.integers(0, 2), st.integers(0, 2))
def test_stability(lam, mu, dn, dm):
    n, m = _rect(lam, mu)
    big = GrassmannianContext(n + dn, m + dm)
    small = GrassmannianContext(n, m)
    for nu, c in expand_product(lam, mu).items():
        here = schubert_to_a(schubert_coeff(lam, mu, nu, small), small)
        there = schubert_to_a(schubert_coeff(lam, mu, nu, big), big)
        assert here == there == c


@given(partitions(4), partitions(4))
def test_schubert_factors_positive(lam, mu):
    ctx = GrassmannianContext(*_rect(lam, mu))
    for nu in expand_product(lam, mu):
        for boxes in rule_data(lam, mu, nu):
            for entry, region, content in boxes:
                i, j = schubert_factor(entry, region, content, ctx)
                assert i > j


@given(partitions(4), partitions(4))
def test_immanant_factors_positive(lam, mu):
    for nu in expand_product(lam, mu):
        for factors in immanant_factors(lam, mu, nu):
            assert all(f > 0 for f in factors)
        assert immanant_coeff(lam, mu, nu) == immanant_coeff_specialized(lam, mu, nu) > 0


@given(partitions(4), partitions(4))
def test_immanant_top_degree_is_classical(lam, mu):
    for nu in expand_product(lam, mu):
        if nu.weight == lam.weight + mu.weight:
            assert immanant_coeff(lam, mu, nu) == classical_lr(lam, mu, nu)


def test_immanant_zero_off_support():
    assert immanant_coeff((2,), (2, 1), (1, 1, 1)) == 0
    assert lr_polynomial((2,), (2, 1), (1, 1, 1)).polynomial == ZERO
