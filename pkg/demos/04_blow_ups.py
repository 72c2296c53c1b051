"""Blow-up calculus: exceptional curves, canonical transforms, adjunction.

Run with: python3 demos/04_blow_ups.py
"""

from autkum import (
    Divisor,
    GenericOnCurve,
    NamedPoint,
    blow_up,
    canonical_class,
    gram_rank,
    intersect,
    kummer_config,
    unique_fixed_component_through,
)

cfg = kummer_config()
print("the marked point P lies on:", sorted(cfg.points[cfg.resolve_point("P")].through))
print("unique fixed-locus component through P:", unique_fixed_component_through(cfg, "P"))

once = blow_up(cfg, NamedPoint("P"), name="EP")
print("\nafter blowing up P:")
print("  E1^2 =", once.self_intersection("E1"), " C11^2 =", once.self_intersection("C11"))
print("  E1.C11 =", once.pairing("E1", "C11"), " E1.EP =", once.pairing("E1", "EP"))
print("  canonical class:", canonical_class(once))
print("  rank grew to:", gram_rank(once))

# the second centre is a generic point of the exceptional curve, away from
# the two marked tangent directions
twice = blow_up(once, GenericOnCurve("EP"), name="EQ")
print("\nafter blowing up a generic point of EP:")
print("  EP^2 =", twice.self_intersection("EP"), " EQ^2 =", twice.self_intersection("EQ"))
print("  canonical class:", canonical_class(twice))

print("\nadjunction c^2 + K.c = -2 for every curve:")
k = canonical_class(twice)
for label in ("E1", "C11", "EP", "EQ"):
    c = Divisor({label: 1})
    print(f"  {label}: {intersect(twice, c, c)} + {intersect(twice, k, c)} = "
          f"{intersect(twice, c, c) + intersect(twice, k, c)}")
