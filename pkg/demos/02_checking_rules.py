"""
Evaluating rule files against scenes
====================================

Parses a small rule text, checks scenes against it and prints the
violation report for a scene that breaks the rules.
"""

from parcc import Demonstration, ObjectClass, SceneObject, Space, parse_spec
from parcc.evaluate import demo_satisfies_clause, demo_satisfies_spec, explain

rules = parse_spec(
    """
    # every shelf item sits north of the base plate
    DR_N(ITEM, BASE)
    # and touches some other item on its east or west side
    EC_E(ITEM, ITEM) | EC_W(ITEM, ITEM)
    """
)
print("rules:")
for clause in rules:
    print("   ", clause)

space = Space(0, 20, 0, 20)
classes = (ObjectClass("ITEM"), ObjectClass("BASE", fixed=True))
base = SceneObject("base", "BASE", l=10, w=1, x=10, y=1)

good = Demonstration(
    space,
    classes,
    (
        base,
        SceneObject("cup", "ITEM", l=2, w=2, x=7, y=4),
        SceneObject("jar", "ITEM", l=2, w=2, x=9, y=4),   # east edge on cup's
        SceneObject("tin", "ITEM", l=2, w=2, x=11, y=4),
    ),
)
print("\nwell-packed shelf satisfies the rules:", demo_satisfies_spec(rules, good))

# now drop one item below the base and float another away from its peers
bad = Demonstration(
    space,
    classes,
    (
        base,
        SceneObject("cup", "ITEM", l=2, w=2, x=7, y=4),
        SceneObject("jar", "ITEM", l=2, w=2, x=9, y=4),
        SceneObject("tin", "ITEM", l=2, w=2, x=16, y=12),
    ),
)
print("messy shelf satisfies the rules:", demo_satisfies_spec(rules, bad))
for report in explain(rules, bad):
    print(f"  violated: {report.clause}")
    for violation in report.violations:
        print(f"    object {violation.object_id} fails {list(map(str, violation.failed_atoms))}")

# Clause satisfaction defaults to the per-object reading: every object the
# clause constrains must satisfy one of its atoms.  The stricter class-level
# reading instead demands a single atom that holds for the whole class, and
# the two can disagree:
straddle = Demonstration(
    space,
    (ObjectClass("A"), ObjectClass("B")),
    (
        SceneObject("b0", "B", l=2, w=2, x=10, y=10),
        SceneObject("hi", "A", l=2, w=2, x=10, y=16),
        SceneObject("lo", "A", l=2, w=2, x=10, y=4),
    ),
)
clause = next(iter(parse_spec("DR_N(A, B) | DR_S(A, B)")))
print("\nstraddling scene, per-object reading: ", demo_satisfies_clause(clause, straddle))
print("straddling scene, class-level reading:", demo_satisfies_clause(clause, straddle, class_level=True))
