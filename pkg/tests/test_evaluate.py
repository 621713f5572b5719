import numpy as np
import pytest

from parcc import (
    Demonstration,
    EvaluationError,
    MetadataError,
    ObjectClass,
    SceneObject,
    Space,
    class_relation_holds,
    demo_satisfies_clause,
    demo_satisfies_spec,
    explain,
    object_satisfies_atom,
    object_satisfies_clause,
    parse_spec,
)

from .conftest import random_demo
from . import oracles

SPACE = Space(0, 12, 0, 12)


def scene(objs, classes=("A", "B", "WA")):
    return Demonstration(SPACE, tuple(ObjectClass(c) for c in classes), tuple(objs))


def obj(ident, cls, x, y, l=1.0, w=1.0):
    return SceneObject(ident, cls, l, w, x, y)


def clause_of(text):
    (c,) = parse_spec(text)
    return c


def atom_of(text):
    (a,) = clause_of(text)
    return a


def test_positive_dr_quantifies_over_all_partners():
    d = scene([obj("a0", "A", 6, 9), obj("b0", "B", 6, 3), obj("b1", "B", 7, 9)])
    # a0 is north of b0 but beside b1
    assert not object_satisfies_atom(d.objects[0], atom_of("DR_N(A, B)"), d)
    d2 = scene([obj("a0", "A", 6, 9), obj("b0", "B", 6, 3), obj("b1", "B", 6, 5)])
    assert object_satisfies_atom(d2.objects[0], atom_of("DR_N(A, B)"), d2)


def test_positive_ec_needs_one_partner():
    d = scene([obj("a0", "A", 2, 2), obj("b0", "B", 3, 2), obj("b1", "B", 9, 9)])
    assert object_satisfies_atom(d.objects[0], atom_of("EC_E(A, B)"), d)
    assert not object_satisfies_atom(d.objects[0], atom_of("EC_W(A, B)"), d)


def test_negated_atom_is_complement():
    d = scene([obj("a0", "A", 6, 9), obj("b0", "B", 6, 3)])
    a = d.objects[0]
    assert object_satisfies_atom(a, atom_of("DR_N(A, B)"), d)
    assert not object_satisfies_atom(a, atom_of("!DR_N(A, B)"), d)


def test_self_partner_excluded():
    d = scene([obj("a0", "A", 2, 2), obj("a1", "A", 3, 2)])
    # a0's only EC_E partner is a1, never itself
    assert object_satisfies_atom(d.objects[0], atom_of("EC_E(A, A)"), d)
    lone = scene([obj("a0", "A", 2, 2)])
    assert not object_satisfies_atom(lone.objects[0], atom_of("EC_E(A, A)"), lone)
    # a lone object is vacuously discrete from every other member of its class
    assert object_satisfies_atom(lone.objects[0], atom_of("DR_N(A, A)"), lone)


def test_class_mismatch_rejected():
    d = scene([obj("a0", "A", 2, 2), obj("b0", "B", 6, 6)])
    with pytest.raises(EvaluationError):
        object_satisfies_atom(d.objects[1], atom_of("DR_N(A, B)"), d)


def test_empty_class_conventions():
    d = scene([obj("a0", "A", 6, 6)])
    # no partners: universal quantifier is vacuous, existential fails
    assert class_relation_holds(atom_of("DR_N(A, B)"), d)
    assert not class_relation_holds(atom_of("EC_N(A, B)"), d)
    assert class_relation_holds(atom_of("!EC_N(A, B)"), d)
    # no head objects: both polarities hold vacuously
    assert class_relation_holds(atom_of("DR_N(B, A)"), d)
    assert class_relation_holds(atom_of("!DR_N(B, A)"), d)
    assert class_relation_holds(atom_of("EC_N(B, A)"), d)


def test_negated_class_relation_means_no_witness():
    d = scene([obj("a0", "A", 6, 9), obj("a1", "A", 6, 3), obj("b0", "B", 6, 6)])
    # a0 is north of b0, so a witness exists
    assert not class_relation_holds(atom_of("!DR_N(A, B)"), d)
    # no single A is both north and south, and neither A is east of b0
    assert class_relation_holds(atom_of("!DR_E(A, B)"), d)


def test_clause_vacuous_for_unheaded_objects():
    d = scene([obj("a0", "A", 2, 2), obj("b0", "B", 9, 9)])
    c = clause_of("DR_N(A, B) | DR_S(A, B)")
    assert object_satisfies_clause(d.objects[1], c, d)


def test_per_object_vs_class_level_divergence():
    """Two straddling heads satisfy per-object but not class-level."""
    d = scene([obj("a0", "A", 6, 9), obj("a1", "A", 6, 3), obj("b0", "B", 6, 6)])
    c = clause_of("DR_N(A, B) | DR_S(A, B)")
    assert demo_satisfies_clause(c, d)
    assert not demo_satisfies_clause(c, d, class_level=True)
    # on a non-straddling scene the two modes agree
    d2 = scene([obj("a0", "A", 6, 9), obj("a1", "A", 6, 10), obj("b0", "B", 6, 6)])
    assert demo_satisfies_clause(c, d2)
    assert demo_satisfies_clause(c, d2, class_level=True)


def test_demo_satisfies_spec_is_conjunction():
    d = scene([obj("a0", "A", 6, 9), obj("b0", "B", 6, 3)])
    assert demo_satisfies_spec(parse_spec("DR_N(A, B)\n!EC_N(A, B)"), d)
    assert not demo_satisfies_spec(parse_spec("DR_N(A, B)\nDR_S(A, B)"), d)
    assert demo_satisfies_spec(parse_spec(""), d)


def test_unknown_class_in_rule_rejected():
    d = scene([obj("a0", "A", 6, 6)], classes=("A",))
    with pytest.raises(MetadataError):
        demo_satisfies_clause(clause_of("DR_N(A, Z)"), d)


def test_explain_empty_iff_satisfied():
    d = scene([obj("a0", "A", 6, 9), obj("a1", "A", 6, 3), obj("b0", "B", 6, 6)])
    s = parse_spec("DR_N(A, B) | DR_S(A, B)")
    assert explain(s, d) == []
    failing = parse_spec("DR_N(A, B)")
    reports = explain(failing, d)
    assert len(reports) == 1
    assert [v.object_id for v in reports[0].violations] == ["a1"]
    assert [str(a) for v in reports[0].violations for a in v.failed_atoms] == ["DR_N(A, B)"]


def test_explain_reports_every_failing_object():
    d = scene([obj("a0", "A", 2, 2), obj("a1", "A", 2, 9), obj("b0", "B", 9, 9)])
    reports = explain(parse_spec("EC_E(A, B)"), d)
    assert [v.object_id for v in reports[0].violations] == ["a0", "a1"]
    payload = reports[0].to_json()
    assert payload["clause"] == "EC_E(A, B)"
    assert len(payload["objects"]) == 2


def test_matches_quantifier_expansion_oracle_on_random_scenes():
    rng = np.random.default_rng(2024)
    checked = 0
    for _ in range(120):
        d = random_demo(rng)
        names = [c.name for c in d.classes]
        for kind in ("DR", "EC"):
            for dd in "NSEW":
                for head in names:
                    for related in names:
                        for neg in ("", "!"):
                            a = atom_of(f"{neg}{kind}_{dd}({head}, {related})")
                            assert class_relation_holds(a, d) == oracles.oclass_relation(
                                a, d, 1e-6
                            )
                            for o in d.objects_of(head):
                                assert object_satisfies_atom(o, a, d) == oracles.oobject_atom(
                                    o, a, d, 1e-6
                                )
                            checked += 1
    assert checked > 1000
