import pytest
from pydantic import ValidationError

from domain.models.products import Factor, ProductSpec
from domain.models.series import Series
from domain.services.qproducts.service import (
    G_PRODUCT,
    RR_PRODUCT,
    euler_f,
    eta_quotient,
    expand_product,
    pochhammer_inf,
    pochhammer_inverse,
)
from domain.services.series_core import service as sc
from tests.oracle import finite_pochhammer, naive_product, rr


def test_euler_pentagonal_prefix():
    assert list(euler_f(1, 8)) == [1, -1, -1, 0, 0, 1, 0, 1]
    # q^12 и q^15 со знаком минус
    f = euler_f(1, 16)
    assert (f[12], f[15]) == (-1, -1)


@pytest.mark.parametrize("k", [1, 5, 25])
def test_euler_matches_factor_by_factor_product(k):
    assert euler_f(k, 500) == pochhammer_inf(k, k, 500)


@pytest.mark.slow
@pytest.mark.parametrize("k", [1, 5, 25])
def test_euler_matches_factor_by_factor_product_to_2000(k):
    assert euler_f(k, 2000) == pochhammer_inf(k, k, 2000)


def test_pochhammer_inf_only_uses_factors_below_prec():
    assert pochhammer_inf(7, 5, 7) == Series.one(7)
    assert pochhammer_inf(1, 5, 3) == Series.from_coeffs([1, -1, 0])
    assert pochhammer_inf(1, 5, 0) == Series.zero(0)


def test_pochhammer_inf_rejects_bad_arguments():
    with pytest.raises(ValueError):
        pochhammer_inf(0, 5, 10)
    with pytest.raises(ValueError):
        pochhammer_inf(1, 0, 10)


def test_finite_pochhammer_inverse():
    p = Series.from_coeffs(finite_pochhammer(3, 12))
    assert sc.mul(p, pochhammer_inverse(3, 12)) == Series.one(12)
    # (q;q)_2 = 1 - q - q^2 + q^3
    assert finite_pochhammer(2, 5) == [1, -1, -1, 1, 0]
    # 1/(q;q)_1: геометрическая прогрессия
    assert list(pochhammer_inverse(1, 5)) == [1, 1, 1, 1, 1]


def test_rr_product_prefix():
    assert list(expand_product(RR_PRODUCT, 4)) == [1, -1, 1, 0]


@pytest.mark.parametrize("spec", [
    RR_PRODUCT,
    G_PRODUCT,
    ProductSpec.of((2, 3, 2), (1, 1, -1)),
    ProductSpec.of((1, 1, 6), (5, 5, -6)),
])
def test_expand_product_matches_naive_oracle(spec):
    triples = [(f.a, f.m, f.e) for f in spec.factors]
    assert list(expand_product(spec, 30)) == naive_product(triples, 30)


def test_exponents_add():
    once = expand_product(ProductSpec.of((1, 5, 1)), 60)
    twice = expand_product(ProductSpec.of((1, 5, 2)), 60)
    assert twice == sc.mul(once, once)
    back = expand_product(ProductSpec.of((1, 5, 2), (1, 5, -2)), 60)
    assert back == Series.one(60)


def test_empty_spec_is_one():
    assert expand_product(ProductSpec(), 9) == Series.one(9)


def test_eta_quotient_first_coefficients():
    ratio = expand_product(eta_quotient((5, 6), (1, -6)), 3)
    assert ratio[1] == 6
    # f_1^6 / f_5^6 = 1 - 6q + ...
    assert expand_product(eta_quotient((1, 6), (5, -6)), 2)[1] == -6


def test_eta_quotients_are_reciprocal():
    p = 400
    a = expand_product(eta_quotient((5, 6), (1, -6)), p)
    b = expand_product(eta_quotient((1, 6), (5, -6)), p)
    assert sc.mul(a, b) == Series.one(p)


def test_rr_product_against_oracle_module():
    assert list(expand_product(RR_PRODUCT, 25)) == rr(25)


def test_factor_validation():
    with pytest.raises(ValidationError):
        Factor(a=0, m=5, e=1)
    with pytest.raises(ValidationError):
        Factor(a=1, m=5, e=0)
    with pytest.raises(ValidationError):
        Factor(a=1, m=5, e=1, extra=3)
