import random

import pytest

from skewrs import (CyclotomicField, FiniteField, RationalFunctions,
                    SkewPolynomial, build_code)

GF4096_MODULUS = "a^12 + a^7 + a^6 + a^5 + a^3 + a + 1"


@pytest.fixture(scope="session")
def gf4096():
    return FiniteField(2, 12, GF4096_MODULUS, frobenius_power=10)


@pytest.fixture(scope="session")
def rational():
    base = FiniteField(2, 2, "a^2 + a + 1", frobenius_power=0)
    return RationalFunctions(base, ("1", "a", "1", "a^2"))


@pytest.fixture(scope="session")
def cyclotomic():
    return CyclotomicField(7, 3)


@pytest.fixture(scope="session")
def all_contexts(gf4096, rational, cyclotomic):
    return {"gf4096": gf4096, "rational": rational, "cyclotomic": cyclotomic}


@pytest.fixture(scope="session")
def code_gf(gf4096):
    return build_code(gf4096, gf4096.generator, 0, 5)


@pytest.fixture(scope="session")
def code_rf(rational):
    return build_code(rational, rational.generator, 0, 5)


@pytest.fixture(scope="session")
def code_cy(cyclotomic):
    return build_code(cyclotomic, cyclotomic.generator, 0, 5)


@pytest.fixture(scope="session")
def all_codes(code_gf, code_rf, code_cy):
    return {"gf4096": code_gf, "rational": code_rf, "cyclotomic": code_cy}


@pytest.fixture(scope="session")
def gf16():
    return FiniteField(2, 4, "a^4 + a + 1", frobenius_power=1)


@pytest.fixture(scope="session")
def gf8():
    return FiniteField(2, 3, "a^3 + a + 1", frobenius_power=1)


def rng_for(name):
    return random.Random(f"skewrs-tests:{name}")


def random_poly(ctx, rng, degree):
    """Random skew polynomial of degree at most `degree` (possibly zero)."""
    return SkewPolynomial(ctx, [ctx.random_element(rng) for _ in range(degree + 1)])


def random_nonzero_poly(ctx, rng, degree):
    while True:
        f = random_poly(ctx, rng, degree)
        if not f.is_zero:
            return f
