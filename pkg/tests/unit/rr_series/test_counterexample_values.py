import pytest

from domain.services.verify.identities import convolution_terms


@pytest.mark.parametrize("name,n,value", [
    ("A", 10, -175),
    ("B", 5, -26),
    ("D", 1, 5),
    ("C", 0, 1),
    ("A", 0, 1),
    ("B", 0, 1),
])
def test_known_values(fresh_registry, name, n, value):
    assert fresh_registry.coefficient(name, n) == value


def test_a15_is_negative(fresh_registry):
    assert fresh_registry.coefficient("A", 15) < 0


@pytest.mark.parametrize("name,indices", [
    ("c", [2, 4, 9]),
    ("d", [3, 8, 13, 23]),
])
def test_known_zeros(fresh_registry, name, indices):
    assert all(fresh_registry.coefficient(name, n) == 0 for n in indices)


def test_convolution_terms_sum_to_a10(fresh_registry):
    terms = convolution_terms("A0", 2, reg=fresh_registry)
    assert len(terms) == 3
    assert terms[0] == (1, fresh_registry.coefficient("C", 10))
    assert terms[2] == (0, 1)  # c(2) = 0, C(0) = 1
    assert sum(x * y for x, y in terms) == -175


def test_convolution_terms_for_b5(fresh_registry):
    terms = convolution_terms("B0", 1, reg=fresh_registry)
    # d(0) C(5) + d(1) C(0) = -25 - 1
    assert terms == [(1, -25), (-1, 1)]
