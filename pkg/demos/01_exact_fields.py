"""Exact arithmetic walkthrough: prime fields, extensions, and F_p(t).

Run with: python3 demos/01_exact_fields.py
"""

from autkum import (
    PrimeField,
    RatFunc,
    ext_field_build,
    laurent_coeffs,
    parse_ratfunc,
    ratfunc_text,
)

# Prime-field residues behave like ordinary numbers mod p.
F5 = PrimeField(5)
a, b = F5.elem(2), F5.elem(4)
print("over", F5)
print("  2 + 4 =", a + b)
print("  inverse of 3 mod 7 =", PrimeField(7).elem(3).inv())

# Extension fields are built deterministically: the modulus is the least
# monic irreducible, so every run and every machine agrees on it.
K9 = ext_field_build(3, 2)
print("\n", K9, sep="")
g = K9.gen()
print("  generator g satisfies g^2 =", g * g)
print("  multiplicative order check: g^8 =", g**8)

# Rational functions normalize themselves into canonical form.
t = RatFunc.t(5)
r = (t * t - 1) / (t - 1)
print("\nover GF(5)(t)")
print("  (t^2 - 1)/(t - 1) =", r)

# Laurent polynomials expose their exact coefficient window.
v = laurent_coeffs(parse_ratfunc("2*t^-3 + 1 + t^5", 5))
print("  2*t^-3 + 1 + t^5 has window", v.window, "coefficients", v.coeffs)
print("  round trip:", ratfunc_text(v.reconstruct()))
