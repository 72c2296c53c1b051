"""Finite-index subgroup generators, and the full verification pipeline.

Run with: python3 demos/07_schreier_and_pipeline.py
"""

from autkum import (
    PipelineParams,
    build_coset_table,
    emit_report,
    nielsen_schreier_expected,
    parse_permutations,
    run_pipeline,
    schreier_generators,
    word_permutation,
)

# A finite-index subgroup of a finitely generated group is finitely
# generated: the transversal-based procedure produces its generators.
gens = parse_permutations("a=(0 1); b=(0 1)")
table = build_coset_table(gens, 0)
print("cosets:", table.n_cosets)
words = schreier_generators(gens, 0)
print("stabilizer generators:", ", ".join(w.to_text() for w in words))
print("expected count 1 + n(r-1):", nielsen_schreier_expected(2, table.n_cosets))
for w in words:
    assert word_permutation(w, gens)[0] == 0

gens = parse_permutations("a=(0 1 2 3 4); b=(1 2 4 3)")
words = schreier_generators(gens, 0)
print("\ndegree-5 action: index", build_coset_table(gens, 0).n_cosets,
      "generators", len(words))

# The whole verification pipeline in one call.
report = run_pipeline(PipelineParams(p=3, depth=50, n_max=20, seed=0))
print("\n" + emit_report(report, "text").decode())
