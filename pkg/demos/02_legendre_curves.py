"""Legendre curves: the group law, 2-torsion, and the ordinary versus
supersingular dichotomy that rules out an isogeny.

Run with: python3 demos/02_legendre_curves.py
"""

from autkum import (
    CurvePoint,
    FunctionField,
    LegendreCurve,
    PrimeField,
    RatFunc,
    find_supersingular_lambda,
    hasse_poly,
    non_isogeny_certificate,
    point_add,
    point_count,
    point_mul,
    two_torsion,
)

# The curve with transcendental parameter t, where the whole construction
# lives; its 2-torsion sits over the four marked values 0, 1, t, infinity.
E = LegendreCurve(FunctionField(3), RatFunc.t(3))
print("2-torsion of y^2 = x(x-1)(x-t) over GF(3)(t):")
for pt in sorted(two_torsion(E), key=repr):
    print("  ", pt)

# A finite model for the group law.
F7 = PrimeField(7)
curve = LegendreCurve(F7, 2)
pt = CurvePoint(F7.elem(5), F7.elem(2))
print("\nover GF(7), lambda = 2:")
print("  (5,2) + (5,2) =", point_mul(curve, 2, pt))
print("  (0,0) + (1,0) =", point_add(curve, CurvePoint(F7.zero(), F7.zero()), CurvePoint(F7.one(), F7.zero())))
print("  points on the curve:", point_count(curve))

# The coefficient polynomial whose roots are the supersingular parameters.
for p in (3, 5, 7):
    print(f"\np = {p}: supersingular parameter polynomial = {hasse_poly(p)!r}")
    lam = find_supersingular_lambda(p)
    print(f"  deterministic root: {lam!r}")

# The packaged certificate: the t-curve is ordinary, the root curve is
# supersingular, so the two cannot be isogenous.
cert = non_isogeny_certificate(3)
print("\ncertificate for p = 3:")
print("  ordinary witness:", cert.ordinary_witness)
print("  supersingular count over GF(3):", cert.supersingular_count)
print("  valid:", cert.valid)
