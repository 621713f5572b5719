"""Clause templates: which candidate disjunctions a search may consider.

A template restricts the shape of candidate clauses.  The three built-ins:

* ``original``: atoms in a clause share the head class and the relation
  kind; negated atoms only as single-atom clauses.
* ``relaxed``: drops the shared-head requirement, keeps kind homogeneity.
* ``restrictive``: ``original`` minus the north and south disjointness
  relations, for settings where vertical ordering is known to be noise.

Templates are declarative and serializable, so custom ones can be loaded
from JSON files with the same fields the descriptors expose.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, replace
from typing import Callable, Iterator, Sequence

from .errors import DocumentError
from .formula import Atom, Clause, RelationKind
from .geometry import Direction

ExcludedAtom = tuple[RelationKind, Direction]
ClassFilter = Callable[[str, str], bool]


@dataclass(frozen=True)
class Template:
    """Admissibility rules for candidate clauses.

    ``excluded_atoms`` removes whole (kind, direction) families.
    ``class_filter``, when set, keeps only (head, related) pairs it
    accepts; it is a plain predicate and is not serialized.
    """

    name: str
    max_len: int = 4
    same_head: bool = False
    homogeneous_kind: bool = False
    allow_negation: bool = True
    negation_only_in_unit_clauses: bool = True
    excluded_atoms: frozenset[ExcludedAtom] = frozenset()
    class_filter: ClassFilter | None = None

    def __post_init__(self):
        if self.max_len < 1:
            raise ValueError("max_len must be at least 1")
        allowed = {
            (k, d)
            for k in RelationKind
            for d in Direction
            if (k, d) not in self.excluded_atoms
        }
        if not allowed:
            raise ValueError(f"template {self.name!r} excludes every relation")

    def admits_pair(self, kind: RelationKind, d: Direction) -> bool:
        return (kind, d) not in self.excluded_atoms

    def admits_classes(self, head: str, related: str) -> bool:
        return self.class_filter is None or self.class_filter(head, related)

    def to_descriptor(self) -> dict:
        return {
            "name": self.name,
            "max_len": self.max_len,
            "same_head": self.same_head,
            "homogeneous_kind": self.homogeneous_kind,
            "allow_negation": self.allow_negation,
            "negation_only_in_unit_clauses": self.negation_only_in_unit_clauses,
            "excluded_atoms": sorted(
                [k.value, d.value] for k, d in self.excluded_atoms
            ),
        }

    @classmethod
    def from_descriptor(cls, data: dict) -> "Template":
        if not isinstance(data, dict):
            raise DocumentError("template descriptor must be an object")
        if "name" not in data or not isinstance(data["name"], str) or not data["name"]:
            raise DocumentError("missing or empty template name", "name")
        excluded = set()
        for i, pair in enumerate(data.get("excluded_atoms", [])):
            path = f"excluded_atoms[{i}]"
            if not (isinstance(pair, (list, tuple)) and len(pair) == 2):
                raise DocumentError("expected a [kind, direction] pair", path)
            try:
                excluded.add((RelationKind(pair[0]), Direction(pair[1])))
            except ValueError as exc:
                raise DocumentError(str(exc), path) from None
        kwargs = {}
        for key, typ in (
            ("max_len", int),
            ("same_head", bool),
            ("homogeneous_kind", bool),
            ("allow_negation", bool),
            ("negation_only_in_unit_clauses", bool),
        ):
            if key in data:
                if not isinstance(data[key], typ) or isinstance(data[key], bool) != (typ is bool):
                    raise DocumentError(f"expected {typ.__name__}", key)
                kwargs[key] = data[key]
        try:
            return cls(name=data["name"], excluded_atoms=frozenset(excluded), **kwargs)
        except ValueError as exc:
            raise DocumentError(str(exc)) from None


ORIGINAL = Template("original", same_head=True, homogeneous_kind=True)
RELAXED = Template("relaxed", same_head=False, homogeneous_kind=True)
RESTRICTIVE = replace(
    ORIGINAL,
    name="restrictive",
    excluded_atoms=frozenset(
        {(RelationKind.DR, Direction.N), (RelationKind.DR, Direction.S)}
    ),
)


def builtin_templates() -> dict[str, Template]:
    return {t.name: t for t in (ORIGINAL, RELAXED, RESTRICTIVE)}


def load_template(source: str | dict, max_len: int | None = None) -> Template:
    """Resolve a template by built-in name, JSON file path, or descriptor dict."""
    if isinstance(source, dict):
        t = Template.from_descriptor(source)
    elif source in builtin_templates():
        t = builtin_templates()[source]
    else:
        try:
            with open(source, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        except OSError as exc:
            raise DocumentError(
                f"unknown template {source!r}: not a built-in "
                f"({', '.join(sorted(builtin_templates()))}) and not a readable file: {exc}"
            ) from None
        except json.JSONDecodeError as exc:
            raise DocumentError(f"invalid JSON in template file {source!r}: {exc}") from None
        t = Template.from_descriptor(data)
    if max_len is not None:
        t = replace(t, max_len=max_len)
    return t


def _admissible_atoms(t: Template, classes: Sequence[str], negated: bool) -> list[Atom]:
    atoms = [
        Atom(kind, d, negated, head, related)
        for kind in RelationKind
        for d in Direction
        for head in sorted(classes)
        for related in sorted(classes)
        if t.admits_pair(kind, d) and t.admits_classes(head, related)
    ]
    atoms.sort(key=Atom.key)
    return atoms


def _multi_atom_pools(t: Template, classes: Sequence[str]) -> list[list[Atom]]:
    """Atom pools for clauses of two or more atoms, in deterministic order.

    Every admissible multi-atom clause is a combination drawn from exactly
    one pool, so pools double as subsumption buckets during search.
    """
    positives = _admissible_atoms(t, classes, negated=False)
    pool_atoms = list(positives)
    if t.allow_negation and not t.negation_only_in_unit_clauses:
        pool_atoms += _admissible_atoms(t, classes, negated=True)
        pool_atoms.sort(key=Atom.key)

    def group_key(a: Atom):
        key = []
        if t.homogeneous_kind:
            key.append(a.kind.order)
        if t.same_head:
            key.append(a.head)
        return tuple(key)

    groups: dict[tuple, list[Atom]] = {}
    for a in pool_atoms:
        groups.setdefault(group_key(a), []).append(a)
    return [groups[k] for k in sorted(groups)]


def unit_atoms(t: Template, classes: Sequence[str]) -> list[Atom]:
    """Atoms admissible as single-atom clauses, in canonical order."""
    atoms = _admissible_atoms(t, classes, negated=False)
    if t.allow_negation:
        atoms += _admissible_atoms(t, classes, negated=True)
        atoms.sort(key=Atom.key)
    return atoms


def enumerate_clauses(t: Template, classes: Sequence[str], n: int) -> Iterator[Clause]:
    """Every admissible clause of exactly ``n`` atoms, each exactly once.

    The stream is deterministic: unit clauses in canonical atom order,
    longer clauses grouped by pool and emitted in lexicographic
    combination order within each pool.
    """
    if not 1 <= n <= t.max_len:
        raise ValueError(f"clause length {n} outside 1..{t.max_len}")
    if not classes:
        raise ValueError("need at least one class")
    if n == 1:
        for a in unit_atoms(t, classes):
            yield Clause((a,))
        return
    for pool in _multi_atom_pools(t, classes):
        for combo in itertools.combinations(pool, n):
            yield Clause(combo)


def count_clauses(t: Template, classes: Sequence[str], max_len: int | None = None) -> dict[int, int]:
    """Size of the candidate space per clause length, computed closed-form."""
    limit = t.max_len if max_len is None else max_len
    counts = {1: len(unit_atoms(t, classes))}
    pools = _multi_atom_pools(t, classes)
    for n in range(2, limit + 1):
        counts[n] = sum(math.comb(len(pool), n) for pool in pools)
    return counts
