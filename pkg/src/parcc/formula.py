"""Rule language: atoms, disjunctive clauses, and conjunctive rule sets.

An atom names a directed relation between two object classes, for example
``DR_N(B, R)`` ("every B is north of every R") or ``EC_W(B, WA)`` ("every
B is touched by some WA on its west side").  Atoms may be negated with a
leading ``!``.  A clause is a disjunction of atoms written with ``|``; a
rule set is a conjunction of clauses, one per line (or joined by ``&``).
``#`` starts a comment.  Example::

    # every B touches scenery or another B on its west side
    EC_W(B, B) | EC_W(B, WA)
    !DR_N(B, WA)

Quantifier shapes: positive ``DR`` atoms are universal over both classes,
positive ``EC`` atoms are universal over the head class and existential
over the related class.  A negated atom asserts that no head-class object
meets the positive condition.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import SpecSyntaxError
from .geometry import Direction


class RelationKind(enum.Enum):
    DR = "DR"
    EC = "EC"

    @property
    def order(self) -> int:
        return 0 if self is RelationKind.DR else 1

    def __str__(self) -> str:
        return self.value


AtomKey = tuple[int, int, int, str, str]


@dataclass(frozen=True)
class Atom:
    """A possibly negated directed class relation.

    ``head`` is the first argument: the class whose objects the relation
    quantifies over.  ``related`` is the partner class.  An object is never
    its own partner, even when ``head == related``.
    """

    kind: RelationKind
    dir: Direction
    negated: bool
    head: str
    related: str

    def key(self) -> AtomKey:
        return (self.kind.order, self.dir.order, int(self.negated), self.head, self.related)

    @property
    def positive(self) -> "Atom":
        if not self.negated:
            return self
        return Atom(self.kind, self.dir, False, self.head, self.related)

    def __str__(self) -> str:
        bang = "!" if self.negated else ""
        return f"{bang}{self.kind}_{self.dir}({self.head}, {self.related})"


@dataclass(frozen=True)
class Clause:
    """A nonempty disjunction of atoms, stored sorted and deduplicated."""

    atoms: tuple[Atom, ...]

    def __post_init__(self):
        if not self.atoms:
            raise ValueError("clause must contain at least one atom")

    @classmethod
    def of(cls, atoms: Iterable[Atom]) -> "Clause":
        unique = sorted(set(atoms), key=Atom.key)
        return cls(tuple(unique))

    def key(self) -> tuple[AtomKey, ...]:
        return tuple(a.key() for a in self.atoms)

    @property
    def heads(self) -> frozenset[str]:
        return frozenset(a.head for a in self.atoms)

    def atoms_headed(self, class_name: str) -> tuple[Atom, ...]:
        return tuple(a for a in self.atoms if a.head == class_name)

    def __len__(self) -> int:
        return len(self.atoms)

    def __iter__(self) -> Iterator[Atom]:
        return iter(self.atoms)

    def __contains__(self, atom: Atom) -> bool:
        return atom in self.atoms

    def __str__(self) -> str:
        return " | ".join(str(a) for a in self.atoms)


@dataclass(frozen=True)
class Spec:
    """A conjunction of clauses.  The empty conjunction is vacuously true."""

    clauses: tuple[Clause, ...] = ()

    @classmethod
    def of(cls, clauses: Iterable[Clause]) -> "Spec":
        unique = sorted(set(clauses), key=Clause.key)
        return cls(tuple(unique))

    @property
    def class_names(self) -> frozenset[str]:
        return frozenset(c for clause in self.clauses for a in clause for c in (a.head, a.related))

    def __len__(self) -> int:
        return len(self.clauses)

    def __iter__(self) -> Iterator[Clause]:
        return iter(self.clauses)

    def __contains__(self, clause: Clause) -> bool:
        return clause in self.clauses


def subsumes(c1: Clause, c2: Clause) -> bool:
    """True iff every atom of ``c1`` also appears in ``c2``.

    A disjunction implies any weaker disjunction extending it, so a
    subsuming clause makes the subsumed one redundant.
    """
    return set(c1.atoms) <= set(c2.atoms)


def spec_implies_clause(s: Spec, c: Clause) -> bool:
    """True iff some clause of ``s`` subsumes (or equals) ``c``."""
    return any(subsumes(own, c) for own in s)


# --- concrete syntax -------------------------------------------------------

_KINDS = {k.value: k for k in RelationKind}
_DIRS = {d.value: d for d in Direction}


class _Scanner:
    """Cursor over one line of rule text, tracking 1-based columns."""

    def __init__(self, text: str, line_no: int):
        self.text = text
        self.line_no = line_no
        self.pos = 0

    def error(self, message: str) -> SpecSyntaxError:
        return SpecSyntaxError(message, self.line_no, self.pos + 1)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def name(self, what: str) -> str:
        start = self.pos
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] in "_-"
        ):
            self.pos += 1
        if self.pos == start:
            raise self.error(f"expected {what}")
        return self.text[start:self.pos]


def _parse_atom(sc: _Scanner) -> Atom:
    negated = False
    if sc.peek() == "!":
        sc.take("!")
        sc.skip_ws()
        negated = True
    rel_col = sc.pos + 1
    rel = sc.name("relation such as DR_N or EC_W")
    if "_" not in rel:
        raise SpecSyntaxError(
            f"malformed relation {rel!r}: expected KIND_DIR such as DR_N", sc.line_no, rel_col
        )
    kind_name, _, dir_name = rel.partition("_")
    kind = _KINDS.get(kind_name)
    if kind is None:
        raise SpecSyntaxError(
            f"unknown relation kind {kind_name!r}: expected DR or EC", sc.line_no, rel_col
        )
    direction = _DIRS.get(dir_name)
    if direction is None:
        raise SpecSyntaxError(
            f"unknown direction {dir_name!r}: expected N, S, E or W",
            sc.line_no,
            rel_col + len(kind_name) + 1,
        )
    sc.skip_ws()
    sc.take("(")
    sc.skip_ws()
    head = sc.name("class name")
    sc.skip_ws()
    sc.take(",")
    sc.skip_ws()
    related = sc.name("class name")
    sc.skip_ws()
    sc.take(")")
    return Atom(kind, direction, negated, head, related)


def _parse_clause(sc: _Scanner) -> Clause:
    atoms = [_parse_atom(sc)]
    sc.skip_ws()
    while sc.peek() == "|":
        sc.take("|")
        sc.skip_ws()
        atoms.append(_parse_atom(sc))
        sc.skip_ws()
    return Clause.of(atoms)


def parse_spec(text: str) -> Spec:
    """Parse rule text into a :class:`Spec`.

    Raises :class:`SpecSyntaxError` with a line and column on bad input.
    """
    clauses: list[Clause] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        sc = _Scanner(line, line_no)
        sc.skip_ws()
        while sc.peek():
            clauses.append(_parse_clause(sc))
            sc.skip_ws()
            if sc.peek() == "&":
                sc.take("&")
                sc.skip_ws()
                if not sc.peek():
                    raise sc.error("expected a clause after '&'")
            elif sc.peek():
                raise sc.error(f"unexpected {sc.peek()!r} after clause")
    return Spec.of(clauses)


def print_spec(s: Spec) -> str:
    """Canonical text for a rule set: sorted clauses, one per line.

    ``parse_spec(print_spec(s))`` reproduces ``s`` exactly, and equal specs
    print to identical text.
    """
    return "\n".join(str(c) for c in Spec.of(s.clauses))
