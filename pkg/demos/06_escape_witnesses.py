"""Why the translation group cannot be finitely generated: span staircases
and escape witnesses.

Run with: python3 demos/06_escape_witnesses.py
"""

from autkum import (
    GroupWord,
    escape_witness,
    evaluate_word,
    laurent_coeffs,
    non_fg_certificate,
    parse_laurent,
    scale_by_t,
    shift_by_one,
    span_dimension,
    span_membership,
)

p = 3

# The spans of {1, t, ..., t^d} grow strictly forever; a finitely generated
# subgroup of the additive group would be a finite-dimensional span.
cert = non_fg_certificate(10, p)
print("span dimensions of {t^0..t^d} for d = 0..10:", cert.dims)
cert = non_fg_certificate(200, p)
print("still a strict staircase at depth 200:", cert.valid)

# Any finite set of translations misses some power of t.
sets = (
    "1, t, t^3",
    "t^-1, 1, t",
    "1 + t, t + t^2",
)
for text in sets:
    vectors = [parse_laurent(part, p) for part in text.split(",")]
    n = escape_witness(vectors, p)
    print(f"\ngenerators {{{text}}}: dimension {span_dimension(vectors, p)},"
          f" first escaped power t^{n}")
    assert not span_membership(parse_laurent(f"t^{n}", p), vectors, p)

# The same game with translation parts harvested from actual words.
gens = {"f1": scale_by_t(p), "f2": shift_by_one(p)}
words = ["f1^-1 f2 f1", "f2", "f1^2 f2 f1^-2"]
parts = [laurent_coeffs(evaluate_word(GroupWord.from_text(w), gens).b) for w in words]
n = escape_witness(parts, p)
print("\nword translations", words, "escape at t^%d" % n)
