import pytest

from skewrs import (FieldError, FiniteField, apply_sigma, fixed_field_check,
                    parse_element)

from conftest import rng_for

N_PAIRS = 1000


def test_sigma_of_generator_matches_frobenius_power(gf4096):
    a = gf4096.generator
    assert apply_sigma(gf4096, 1, a) == a ** 1024


def test_sigma_order_is_six(gf4096):
    a = gf4096.generator
    assert apply_sigma(gf4096, gf4096.order, a) == a
    for k in range(1, gf4096.order):
        assert apply_sigma(gf4096, k, a) != a


@pytest.mark.parametrize("name", ["gf4096", "rational", "cyclotomic"])
def test_sigma_has_exact_order_on_generator(all_contexts, name):
    ctx = all_contexts[name]
    gen = ctx.generator
    assert ctx.sigma(gen, ctx.order) == gen
    for k in range(1, ctx.order):
        assert ctx.sigma(gen, k) != gen


def test_sigma_negative_power_is_inverse(gf4096):
    a = gf4096.generator
    x = a ** 321
    assert apply_sigma(gf4096, -1, apply_sigma(gf4096, 1, x)) == x
    assert apply_sigma(gf4096, -2, x) == apply_sigma(gf4096, gf4096.order - 2, x)


def test_rational_sigma_of_z(rational):
    z = rational.generator
    expected = parse_element(rational, "(z+a)/(z+a^2)")
    assert apply_sigma(rational, 1, z) == expected


@pytest.mark.parametrize("name", ["gf4096", "rational", "cyclotomic"])
def test_field_axioms_on_random_pairs(all_contexts, name):
    ctx = all_contexts[name]
    rng = rng_for(f"axioms-{name}")
    one = ctx.one
    for _ in range(N_PAIRS):
        x = ctx.random_element(rng)
        y = ctx.random_element(rng)
        z = ctx.random_element(rng)
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x + y == y + x and x * y == y * x
        if y:
            assert (x * y) / y == x
            assert y * y.inverse() == one


@pytest.mark.parametrize("name", ["gf4096", "rational", "cyclotomic"])
def test_sigma_is_a_field_homomorphism(all_contexts, name):
    ctx = all_contexts[name]
    rng = rng_for(f"hom-{name}")
    for _ in range(N_PAIRS):
        x = ctx.random_element(rng)
        y = ctx.random_element(rng)
        k = rng.randrange(ctx.order)
        assert ctx.sigma(x + y, k) == ctx.sigma(x, k) + ctx.sigma(y, k)
        assert ctx.sigma(x * y, k) == ctx.sigma(x, k) * ctx.sigma(y, k)


@pytest.mark.parametrize("name", ["gf4096", "rational", "cyclotomic"])
def test_print_parse_round_trip(all_contexts, name):
    ctx = all_contexts[name]
    rng = rng_for(f"roundtrip-{name}")
    for _ in range(N_PAIRS):
        x = ctx.random_element(rng)
        assert parse_element(ctx, ctx.format(x)) == x


def test_fixed_field_membership(gf4096):
    assert fixed_field_check(gf4096, gf4096.one)
    assert not fixed_field_check(gf4096, gf4096.generator)


def test_fixed_field_sum_of_all_roots(cyclotomic):
    # oracle: sigma permutes chi^j -> chi^(3j mod 7); the sum over all
    # primitive roots is invariant under any such permutation
    chi = cyclotomic.generator
    x = sum((chi ** k for k in range(2, 7)), chi)
    exponents = [(3 * j) % 7 for j in range(1, 7)]
    oracle_image = sum((chi ** e for e in exponents[1:]), chi ** exponents[0])
    assert oracle_image == x
    assert fixed_field_check(cyclotomic, x)
    assert not fixed_field_check(cyclotomic, chi)


def test_power_notation_reduces_large_exponents(gf4096):
    x = parse_element(gf4096, "a^2103")
    assert x == gf4096.generator ** 2103
    # printing stays within [0, p^d - 2]
    assert gf4096.format(x) == "a^2103"
    wrapped = parse_element(gf4096, "a^6198")  # 6198 = 2103 + 4095
    assert wrapped == x


def test_zero_parses_everywhere(all_contexts):
    for ctx in all_contexts.values():
        assert parse_element(ctx, "0") == ctx.zero


def test_rational_canonical_form_is_reduced_and_monic(rational):
    x = parse_element(rational, "(z+a)/(z^2+a^2*z)")
    z = rational.generator
    a = rational.from_base(rational.base.generator)
    assert x == (z + a) / (z * z + a * a * z)
    # denominator monic and coprime to the numerator
    assert x.den[-1] == 1
    num_times_back = x * (z * z + a * a * z)
    assert num_times_back == z + a


def test_nonmonic_denominator_text_canonicalizes(rational):
    lhs = parse_element(rational, "(a z^5 + a^2 z^4)/(a^2 z^5 + a^2 z^4 + a z + a)")
    rhs = parse_element(rational, "(a^2 z^5 + z^4)/(z^5 + z^4 + a^2 z + a^2)")
    assert lhs == rhs


def test_odd_characteristic_field_arithmetic():
    # GF(9) with a non-primitive modulus root exercises the digit-based
    # addition path and polynomial-form printing
    F9 = FiniteField(3, 2, "a^2 + 1", frobenius_power=1)
    assert not F9.generator_primitive
    rng = rng_for("gf9")
    for _ in range(300):
        x = F9.random_element(rng)
        y = F9.random_element(rng)
        assert (x + y) - y == x
        if y:
            assert (x * y) / y == x
        assert parse_element(F9, F9.format(x)) == x
    assert F9.sigma(F9.generator) == F9.generator ** 3
    assert F9.sigma(F9.generator, 2) == F9.generator


def test_bad_moduli_are_rejected():
    with pytest.raises(FieldError):
        FiniteField(2, 4, "a^4 + a^2 + 1")  # (a^2+a+1)^2, reducible
    with pytest.raises(FieldError):
        FiniteField(4, 2, "a^2 + a + 1")  # composite characteristic
    with pytest.raises(FieldError):
        FiniteField(2, 3, "a^2 + a + 1")  # degree mismatch


def test_singular_mobius_rejected(rational):
    from skewrs import RationalFunctions
    with pytest.raises(FieldError):
        RationalFunctions(rational.base, ("1", "a", "a^2", "a^3"))


def test_division_by_zero_raises(all_contexts):
    for ctx in all_contexts.values():
        with pytest.raises(ZeroDivisionError):
            ctx.one / ctx.zero
