"""Satisfaction of atoms, clauses and rule sets by demonstrations.

Clause satisfaction is judged object by object: a clause holds in a scene
iff every object whose class heads at least one of its atoms satisfies
some atom headed by its class.  For a single-atom clause this coincides
with the class-level reading of the relation.  For multi-atom clauses the
two readings differ; the stricter class-level disjunction (some atom holds
for the whole class at once) is available via ``class_level=True`` for
auditing.  Example of the divergence: with two A objects, one north and
one south of the only B, the clause ``DR_N(A, B) | DR_S(A, B)`` holds
object by object but fails class-level, because neither atom holds for
all A simultaneously.

Empty-class conventions: a positive DR atom is vacuously true for a head
object when no partner exists, and a positive EC atom is false (there is
nothing to touch).  A negated atom is, per head object, the complement of
the positive condition.  An object never partners with itself.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EvaluationError, MetadataError
from .formula import Atom, Clause, RelationKind, Spec
from .geometry import DEFAULT_TAU, Demonstration, SceneObject, dr_directed, ec_directed


def object_satisfies_atom(
    o: SceneObject, a: Atom, demo: Demonstration, tau: float = DEFAULT_TAU
) -> bool:
    """Does head-class object ``o`` meet atom ``a`` in ``demo``?

    ``o`` must belong to the atom's head class.  Negated atoms are the
    per-object complement of the positive condition.
    """
    if o.cls != a.head:
        raise EvaluationError(
            f"object {o.id!r} has class {o.cls!r} but atom {a} heads {a.head!r}"
        )
    result = _positive_condition(o, a, demo, tau)
    return not result if a.negated else result


def _positive_condition(o: SceneObject, a: Atom, demo: Demonstration, tau: float) -> bool:
    partners = [b for b in demo.objects_of(a.related) if b.id != o.id]
    if a.kind is RelationKind.DR:
        return all(dr_directed(o, b, a.dir, tau) for b in partners)
    return any(ec_directed(o, b, a.dir, tau) for b in partners)


def class_relation_holds(a: Atom, demo: Demonstration, tau: float = DEFAULT_TAU) -> bool:
    """Class-level truth of a single atom.

    Positive atoms must hold for every head-class object.  A negated atom
    demands that no head-class object meets the positive condition, which
    is again a conjunction over head objects.  An empty head class makes
    either form vacuously true.
    """
    _require_classes(demo, (a.head, a.related))
    return all(object_satisfies_atom(o, a, demo, tau) for o in demo.objects_of(a.head))


def object_satisfies_clause(
    o: SceneObject, c: Clause, demo: Demonstration, tau: float = DEFAULT_TAU
) -> bool:
    """Does ``o`` satisfy at least one atom of ``c`` headed by its class?

    Objects whose class heads no atom of the clause are unconstrained and
    return True.
    """
    headed = c.atoms_headed(o.cls)
    if not headed:
        return True
    return any(object_satisfies_atom(o, a, demo, tau) for a in headed)


def demo_satisfies_clause(
    c: Clause,
    demo: Demonstration,
    tau: float = DEFAULT_TAU,
    class_level: bool = False,
) -> bool:
    """Is the clause satisfied by the scene?

    Default is the per-object reading described in the module docstring.
    With ``class_level=True`` the clause instead holds iff some single
    atom holds class-level, which is never weaker.
    """
    _require_classes(demo, [name for a in c.atoms for name in (a.head, a.related)])
    if class_level:
        return any(class_relation_holds(a, demo, tau) for a in c)
    return all(
        object_satisfies_clause(o, c, demo, tau)
        for head in c.heads
        for o in demo.objects_of(head)
    )


def demo_satisfies_spec(
    s: Spec, demo: Demonstration, tau: float = DEFAULT_TAU, class_level: bool = False
) -> bool:
    """True iff every clause of ``s`` is satisfied by the scene."""
    return all(demo_satisfies_clause(c, demo, tau, class_level=class_level) for c in s)


@dataclass(frozen=True)
class ObjectViolation:
    """One object failing a clause, with the atoms it was offered."""

    object_id: str
    failed_atoms: tuple[Atom, ...]

    def to_json(self) -> dict:
        return {
            "object_id": self.object_id,
            "failed_atoms": [str(a) for a in self.failed_atoms],
        }


@dataclass(frozen=True)
class ViolationReport:
    """A violated clause together with every object that fails it."""

    clause: Clause
    violations: tuple[ObjectViolation, ...]

    def to_json(self) -> dict:
        return {
            "clause": str(self.clause),
            "objects": [v.to_json() for v in self.violations],
        }


def explain(s: Spec, demo: Demonstration, tau: float = DEFAULT_TAU) -> list[ViolationReport]:
    """Per-clause, per-object account of every violation in the scene.

    Returns an empty list iff ``demo_satisfies_spec(s, demo, tau)``.
    """
    reports: list[ViolationReport] = []
    for c in s:
        _require_classes(demo, [name for a in c.atoms for name in (a.head, a.related)])
        violations = []
        for head in sorted(c.heads):
            headed = c.atoms_headed(head)
            for o in demo.objects_of(head):
                if not any(object_satisfies_atom(o, a, demo, tau) for a in headed):
                    violations.append(ObjectViolation(o.id, headed))
        if violations:
            violations.sort(key=lambda v: v.object_id)
            reports.append(ViolationReport(c, tuple(violations)))
    return reports


def _require_classes(demo: Demonstration, names) -> None:
    declared = set(demo.class_names)
    for name in names:
        if name not in declared:
            raise MetadataError(f"rule references class {name!r} not present in demonstration")
