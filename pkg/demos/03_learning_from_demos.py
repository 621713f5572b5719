"""
Learning rules from demonstrations
==================================

Synthesizes a set of packing scenes from the bundled example domain,
then runs the two-stage learner on them and inspects what survives.
"""

import time

import numpy as np

from parcc import InferenceParams, RelationKind, box_packing, infer, load_template
from parcc import sample_rand_demo, spec_implies_clause

# eight scenes, each with two to four movable objects per class packed
# inside the walled box
demos = box_packing.demo_set(k=8, seed=0)
print(f"{len(demos)} demonstration scenes, object counts:",
      [len(d.objects) for d in demos])

# Stage one enumerates template clauses and keeps the shortest ones that
# hold in every scene; stage two keeps a clause only when random scenes
# make it look statistically surprising.  The longest bundled rule has
# six atoms, so the clause length cap is raised accordingly.
template = load_template("original", max_len=6)
start = time.perf_counter()
result = infer(demos, template, InferenceParams(seed=0))
print(f"\nsearched {result.enumerated} clauses, checked {result.checked}, "
      f"accepted {len(result.spec)} in {time.perf_counter() - start:.2f} s")

# a few of the accepted clauses with their audit numbers
print("\nsample of accepted clauses (p is the chance a random scene family")
print("would satisfy the clause as often as the demonstrations did):")
for report in sorted(result.reports, key=lambda r: r.p_phi)[:8]:
    print(f"    p={report.p_phi:.2e}  {report.clause}")

# the learner recovers every rule the scenes were generated from
recovered = sum(
    all(spec_implies_clause(result.spec, clause) for clause in group)
    for group in box_packing.formulas()
)
print(f"\nrecovered {recovered} of {len(box_packing.formulas())} generating rule groups")

# as a control, rerun the pipeline on uniformly random scenes drawn over
# the same inventory
rng = np.random.default_rng(42)
noise = [sample_rand_demo(demos, rng) for _ in range(8)]
null_result = infer(noise, template, InferenceParams(seed=0))
lengths = sorted(len(c) for c in null_result.spec)
print(f"\nthe same search on random scenes accepts {len(null_result.spec)} clauses,")
print(f"all wide disjunctions ({lengths[0]} to {lengths[-1]} atoms) that overfit")
print("the eight draws; exact contact never repeats at random, so none of them")
assert all(a.kind is RelationKind.DR for c in null_result.spec for a in c)
print("mentions EC at all")
recovered_from_noise = sum(
    all(spec_implies_clause(null_result.spec, clause) for clause in group)
    for group in box_packing.formulas()
)
print(f"generating rule groups implied by the noise run: {recovered_from_noise}")
