"""A convolutional-style code: F_4(z) with a Moebius automorphism of
order 5.  The injected error values share a rank-degenerate pattern, so
the syndrome matrix underestimates the error count and the decoder must
take its echelon completion branch.

Run:  python demos/02_convolutional_rational_functions.py
"""

from skewrs import (FiniteField, RationalFunctions, SkewPolynomial, build_code,
                    decode, parse_poly)

base = FiniteField(2, 2, "a^2 + a + 1", frobenius_power=0)
field = RationalFunctions(base, ("1", "a", "1", "a^2"))  # sigma(z) = (z+a)/(z+a^2)
print("field:", field)
print("sigma has order", field.order)

code = build_code(field, field.generator, r=0, delta=5)
print("\ncode:", code)
print("generator g =", code.g)

# transmit the generator itself (message = 1) and corrupt positions 1 and 3
error = parse_poly(field, "(a/(z^5+a^2z))x^3 + (1/(z^5+a^2z))x")
received = (code.g + error).vector(code.n)
print("\ninjected error =", error)

report = decode(code, received)
print("\ndecode report:")
print(report.to_text(field))

assert report.ok
assert report.branch == "echelon", "rank-degenerate values must force the branch"
assert SkewPolynomial(field, report.error) == error
print("echelon branch recovered both rational-function error values exactly.")
