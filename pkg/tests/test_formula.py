import pytest
from hypothesis import given
from hypothesis import strategies as st

from parcc import (
    Atom,
    Clause,
    Direction,
    RelationKind,
    Spec,
    SpecSyntaxError,
    parse_spec,
    print_spec,
    spec_implies_clause,
    subsumes,
)

CLASSES = ["A", "B", "WA"]

atoms = st.builds(
    Atom,
    kind=st.sampled_from(list(RelationKind)),
    dir=st.sampled_from(list(Direction)),
    negated=st.booleans(),
    head=st.sampled_from(CLASSES),
    related=st.sampled_from(CLASSES),
)
clauses = st.lists(atoms, min_size=1, max_size=4, unique_by=lambda a: a.key()).map(Clause.of)
specs = st.lists(clauses, max_size=5).map(Spec.of)


def atom(text):
    (clause,) = parse_spec(text)
    (a,) = clause
    return a


def test_parse_single_atom():
    a = atom("DR_N(B, R)")
    assert a.kind is RelationKind.DR
    assert a.dir is Direction.N
    assert not a.negated
    assert (a.head, a.related) == ("B", "R")


def test_parse_negation_and_spacing():
    a = atom("  !EC_W( B ,WA )  ")
    assert a.negated and a.kind is RelationKind.EC
    assert (a.head, a.related) == ("B", "WA")


def test_parse_disjunction():
    spec = parse_spec("EC_N(B,B) | EC_S(B,B) | EC_E(B,B) | EC_W(B,B)")
    (clause,) = spec
    assert len(clause) == 4
    assert {a.dir for a in clause} == set(Direction)


def test_parse_comments_blank_lines_and_ampersand():
    text = """
    # header comment
    DR_N(B, R)   # same line comment

    EC_W(R, R) | EC_W(R, WA) & !DR_N(B, WA)
    """
    spec = parse_spec(text)
    assert len(spec) == 3


def test_parse_errors_carry_position():
    with pytest.raises(SpecSyntaxError) as err:
        parse_spec("DR_Q(A, B)")
    assert err.value.line == 1 and err.value.column == 4
    with pytest.raises(SpecSyntaxError) as err:
        parse_spec("XX_N(A, B)")
    assert "unknown relation" in str(err.value)
    with pytest.raises(SpecSyntaxError) as err:
        parse_spec("DR_N(A, B) &")
    assert err.value.line == 1
    with pytest.raises(SpecSyntaxError):
        parse_spec("DR_N(A B)")
    with pytest.raises(SpecSyntaxError):
        parse_spec("DR_N(A, B) DR_S(A, B)")
    with pytest.raises(SpecSyntaxError) as err:
        parse_spec("DR_N(A, B)\n!!EC_N(A, A)")
    assert err.value.line == 2


def test_empty_sources_parse_to_empty_spec():
    assert len(parse_spec("")) == 0
    assert len(parse_spec("# only a comment\n\n")) == 0
    assert print_spec(Spec.of([])) == ""


def test_canonical_ordering_is_stable():
    s1 = parse_spec("EC_N(B,B) | EC_S(B,B)\nDR_N(B, R)")
    s2 = parse_spec("DR_N(B,R)\nEC_S(B, B)|EC_N(B, B)")
    assert print_spec(s1) == print_spec(s2)
    assert s1 == s2


def test_duplicate_atoms_collapse():
    (clause,) = parse_spec("DR_N(A, B) | DR_N(A, B)")
    assert len(clause) == 1


def test_str_forms():
    assert str(atom("!DR_N(B, WA)")) == "!DR_N(B, WA)"
    (clause,) = parse_spec("EC_W(R,WA)|EC_W(R,R)")
    assert str(clause) == "EC_W(R, R) | EC_W(R, WA)"


@given(specs)
def test_print_parse_round_trip(s):
    assert parse_spec(print_spec(s)) == s


@given(clauses, clauses)
def test_subsumption_is_subset(c1, c2):
    assert subsumes(c1, c2) == set(a.key() for a in c1).issubset(a.key() for a in c2)


def clause_of(text):
    (c,) = parse_spec(text)
    return c


def test_spec_implies_clause():
    s = parse_spec("DR_N(B, R)\nEC_W(R, R) | EC_W(R, WA)")
    assert spec_implies_clause(s, clause_of("DR_N(B, R) | DR_S(B, R)"))
    assert spec_implies_clause(s, clause_of("EC_W(R, R) | EC_W(R, WA)"))
    assert not spec_implies_clause(s, clause_of("DR_S(B, R)"))
    assert not spec_implies_clause(s, clause_of("EC_W(R, R)"))


@given(specs, clauses)
def test_implication_via_any_subsuming_member(s, c):
    assert spec_implies_clause(s, c) == any(subsumes(m, c) for m in s)
