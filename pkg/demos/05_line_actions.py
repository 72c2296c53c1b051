"""Translation actions on the distinguished curve: the gated action table,
conjugation identities, and fixed-point multipliers.

Run with: python3 demos/05_line_actions.py
"""

from autkum import (
    GroupWord,
    certify_fibration,
    conjugate_generator,
    evaluate_word,
    fixed_points,
    i8_fiber_divisor,
    iv_star_fiber_divisor,
    kummer_config,
    mw_action,
)

p = 3
cfg = kummer_config()

# The action table only answers once the lattice checks have passed.
octagon = certify_fibration(cfg, i8_fiber_divisor(), "C31", "C41", p)
star = certify_fibration(cfg, iv_star_fiber_divisor(), "C21", "C31", p)
print("octagon certificate verified:", octagon.verified)
print("star certificate verified:", star.verified)

f1 = mw_action(octagon, "C41")
f2 = mw_action(star, "C31")
print("\naction of the octagon section:", f1)
print("action of the star section:   ", f2)
print("zero sections act trivially:  ", mw_action(octagon, "C31"), "/", mw_action(star, "C21"))

# Conjugating the unit translation by powers of the scaling map sweeps out
# translations by every power of t.
gens = {"f1": f1, "f2": f2}
print("\nconjugates f1^n f2 f1^-n:")
for n in (-2, -1, 0, 1, 2, 3):
    word = GroupWord((("f1", n), ("f2", 1), ("f1", -n)))
    value = evaluate_word(word, gens)
    assert value == conjugate_generator(n, p)
    print(f"  n = {n:>2}: {value}")

print("\nfixed points and multipliers:")
for name, f in (("scaling", f1), ("translation", f2)):
    for fp in sorted(fixed_points(f), key=lambda fp: repr(fp.point)):
        tag = " (parabolic)" if fp.parabolic else ""
        print(f"  {name}: fixes {fp.point!r} with multiplier {fp.multiplier}{tag}")
