"""
Clause template families
========================

The learner only considers clauses a template can generate.  This
script sizes the three built-in families and shows what their clauses
look like.
"""

import itertools

from parcc import builtin_templates, count_clauses, enumerate_clauses

classes = ["B", "R", "G", "WA"]

# per-length candidate counts for each family
templates = builtin_templates()
print(f"{'length':>6}  " + "  ".join(f"{name:>12}" for name in templates))
counts = {name: count_clauses(t, classes) for name, t in templates.items()}
for n in range(1, 5):
    print(f"{n:>6}  " + "  ".join(f"{counts[name].get(n, 0):>12,}" for name in templates))
print(f"{'total':>6}  " + "  ".join(f"{sum(counts[name].values()):>12,}" for name in templates))

# the original family keeps every atom of a clause on one head class and
# one relation kind; the relaxed family lifts the shared-head restriction
print("\nfirst few 2-atom clauses of each family:")
for name, t in templates.items():
    print(f"  {name}:")
    for clause in itertools.islice(enumerate_clauses(t, classes, 2), 3):
        print(f"    {clause}")

# negation is only ever generated for single-atom clauses
original = templates["original"]
units = list(enumerate_clauses(original, classes, 1))
negated = [c for c in units if next(iter(c)).negated]
print(f"\n{len(units)} single-atom clauses, {len(negated)} of them negated")
multi = list(enumerate_clauses(original, classes, 2))
assert not any(atom.negated for clause in multi for atom in clause)

# the restrictive family drops vertical orderings entirely, which is the
# kind of prior worth encoding when gravity already decides the y axis
restrictive = templates["restrictive"]
kinds = {(str(a.kind), a.dir.name) for c in enumerate_clauses(restrictive, classes, 1) for a in c}
print("atom shapes available to the restrictive family:", sorted(kinds))
