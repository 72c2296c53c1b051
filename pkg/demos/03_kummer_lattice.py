"""The 24-curve configuration: Gram matrix, rank, Euler characteristics,
fiber recognition, and section checks.

Run with: python3 demos/03_kummer_lattice.py
"""

from autkum import (
    Divisor,
    classify_fiber,
    check_section,
    gram_rank,
    i8_fiber_divisor,
    intersect,
    iv_star_fiber_divisor,
    kummer_config,
    rr_chi,
)

cfg = kummer_config()
print("labels:", " ".join(cfg.labels))
print("C11 meets F1:", cfg.pairing("C11", "F1"), " C11 meets E1:", cfg.pairing("C11", "E1"))
print("rank of the Gram matrix:", gram_rank(cfg))

d1 = i8_fiber_divisor()
d2 = iv_star_fiber_divisor()
print("\noctagon divisor:", d1)
print("  type:", classify_fiber(cfg, d1), " self-intersection:", intersect(cfg, d1, d1))
print("star divisor:", d2)
print("  type:", classify_fiber(cfg, d2), " self-intersection:", intersect(cfg, d2, d2))

print("\nsection checks:")
for fiber, name, section in (
    (d1, "octagon", "C31"),
    (d1, "octagon", "C41"),
    (d2, "star", "C21"),
    (d2, "star", "C31"),
):
    print(f"  {section} against the {name}:", check_section(cfg, fiber, section))

print("\nEuler characteristics on the unblown surface:")
print("  chi(0) =", rr_chi(cfg, Divisor()))
print("  chi(one -2 curve) =", rr_chi(cfg, Divisor({"E1": 1})))
print("  chi(octagon) =", rr_chi(cfg, d1))

# the transverse ruling through E1 is a five-component star fiber
ruling = Divisor({"E1": 2, "C11": 1, "C21": 1, "C31": 1, "C41": 1})
print("\nthe ruling 2*E1 + C11 + C21 + C31 + C41 classifies as:", classify_fiber(cfg, ruling))
