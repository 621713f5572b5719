"""Rule-satisfying scene synthesis.

Given an inventory of objects and a rule set, ``place`` searches for a
scene satisfying every clause using randomized depth-first backtracking.
Objects are placed one at a time, most-constrained class first.  Candidate
positions mix uniform draws with contact snaps against already placed
objects, because flush contact has zero probability under uniform
sampling and most interesting rules demand it.

During the search every placed object keeps, per clause, the set of its
atoms that can still end up satisfied.  The conditions are exact: a
universal disjointness atom dies as soon as one placed partner violates
it, an existential contact atom dies when the partner class is exhausted
without contact, and negated atoms mirror those.  A candidate that kills
the last viable atom of any placed object's clause is rejected outright,
which prunes hopeless branches early.  Completed scenes are re-verified
with the plain evaluator before being returned.

Infeasibility is proven only for contradictions visible among single-atom
clauses (for example opposed orderings of the same two classes, or a
contact demand with nobody to touch); everything else that fails returns
a budget-exhausted result that names the best partially satisfied scene.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import MetadataError, SynthesisError
from .evaluate import demo_satisfies_clause, demo_satisfies_spec
from .formula import Atom, Clause, RelationKind, Spec
from .geometry import (
    DEFAULT_TAU,
    Demonstration,
    Direction,
    ObjectClass,
    SceneObject,
    Space,
    dr_directed,
    ec_directed,
    interiors_disjoint,
)

DEFAULT_BUDGET = 50_000
_BRANCH = 6
_UNIFORM_CANDIDATES = 8
_SNAP_PARTNERS = 10


@dataclass(frozen=True)
class InventoryItem:
    cls: str
    l: float
    w: float
    count: int

    def __post_init__(self):
        if self.count < 1:
            raise ValueError(f"item count for class {self.cls!r} must be positive")
        if self.l <= 0 or self.w <= 0:
            raise ValueError(f"item extents for class {self.cls!r} must be positive")


@dataclass(frozen=True)
class Inventory:
    """What a synthesized scene is built from.

    ``items`` describe the movable objects to create; ``fixed_objects``
    are scenery placed as given (walls and the like).  Classes are derived:
    item classes are movable, fixed-object classes are fixed.
    """

    space: Space
    items: tuple[InventoryItem, ...]
    fixed_objects: tuple[SceneObject, ...] = ()

    def __post_init__(self):
        movable = {i.cls for i in self.items}
        fixed = {o.cls for o in self.fixed_objects}
        overlap = movable & fixed
        if overlap:
            raise MetadataError(
                f"classes {sorted(overlap)} appear both as items and as fixed objects"
            )
        seen = set()
        for o in self.fixed_objects:
            if o.id in seen:
                raise MetadataError(f"duplicate fixed object id {o.id!r}")
            seen.add(o.id)

    def classes(self) -> tuple[ObjectClass, ...]:
        movable = sorted({i.cls for i in self.items})
        fixed = sorted({o.cls for o in self.fixed_objects})
        return tuple(
            [ObjectClass(name) for name in movable]
            + [ObjectClass(name, fixed=True) for name in fixed]
        )

    def counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for item in self.items:
            out[item.cls] = out.get(item.cls, 0) + item.count
        for o in self.fixed_objects:
            out[o.cls] = out.get(o.cls, 0) + 1
        return out


@dataclass(frozen=True)
class Infeasible:
    """Failure to synthesize: either a proof or an exhausted budget."""

    proven: bool
    reason: str
    best_satisfied: int
    clauses_total: int


def prove_unit_infeasible(s: Spec, inventory: Inventory, tau: float = DEFAULT_TAU) -> str | None:
    """A human-readable contradiction among single-atom clauses, or None.

    Sound but deliberately incomplete: only contradictions that hold for
    every possible placement of the given object counts are reported.
    """
    counts = inventory.counts()

    def head_objects(a: Atom) -> int:
        return counts.get(a.head, 0)

    def partners_exist(a: Atom) -> bool:
        n = counts.get(a.related, 0)
        return n >= 2 if a.head == a.related else n >= 1

    units = [c.atoms[0] for c in s if len(c) == 1]
    for a in units:
        if head_objects(a) == 0:
            continue
        if not partners_exist(a):
            if a.kind is RelationKind.EC and not a.negated:
                return f"clause {a} demands contact but no partner object exists"
            if a.kind is RelationKind.DR and a.negated:
                return (
                    f"clause {a} is false: with no partner objects the positive "
                    f"relation holds vacuously for every {a.head}"
                )

    positive_units = {a for a in units if not a.negated and head_objects(a) > 0}
    for a in units:
        if a.negated and a.positive in positive_units and head_objects(a) > 0:
            if a.kind is RelationKind.EC and not partners_exist(a):
                continue  # the positive clause is already reported above
            return f"clauses {a.positive} and {a} contradict each other"

    # Directional disjointness orderings exclude each other only when the
    # tolerance is below every extent, which keeps edge-sharing unambiguous.
    extents = [v for i in inventory.items for v in (i.l, i.w)] + [
        v for o in inventory.fixed_objects for v in (o.l, o.w)
    ]
    if extents and tau >= min(extents):
        return None
    dr_units = [
        a
        for a in positive_units
        if a.kind is RelationKind.DR and partners_exist(a)
    ]
    for a, b in itertools.combinations(dr_units, 2):
        pair_forward = (a.head, a.related) == (b.head, b.related)
        pair_swapped = (a.head, a.related) == (b.related, b.head)
        if pair_forward and a.dir.opposite is b.dir:
            return f"clauses {a} and {b} order the same classes both ways"
        if pair_swapped and a.dir is b.dir:
            return f"clauses {a} and {b} put each class beyond the other"
    for a in dr_units:
        if a.head == a.related and counts.get(a.head, 0) >= 2:
            return f"clause {a} demands objects of class {a.head!r} mutually beyond each other"
    return None


# --- the backtracking search -------------------------------------------------


class _Budget:
    def __init__(self, n: int):
        self.left = n

    def spend(self) -> bool:
        self.left -= 1
        return self.left >= 0


class _Exhausted(Exception):
    pass


def _atom_can_hold(
    o: SceneObject,
    a: Atom,
    placed_by_class: dict[str, list[SceneObject]],
    future: int,
    tau: float,
) -> bool:
    """Can atom ``a`` for head object ``o`` still end up satisfied?

    ``future`` counts partner-class objects not yet placed (never ``o``
    itself).  Placed partners are inspected directly.
    """
    partners = [b for b in placed_by_class.get(a.related, ()) if b.id != o.id]
    if a.kind is RelationKind.DR:
        if not a.negated:
            return all(dr_directed(o, b, a.dir, tau) for b in partners)
        if any(not dr_directed(o, b, a.dir, tau) for b in partners):
            return True
        return future > 0
    if not a.negated:
        if any(ec_directed(o, b, a.dir, tau) for b in partners):
            return True
        return future > 0
    return not any(ec_directed(o, b, a.dir, tau) for b in partners)


def _atom_survives_newcomer(
    p: SceneObject,
    a: Atom,
    newcomer: SceneObject,
    placed_by_class: dict[str, list[SceneObject]],
    future_after: int,
    tau: float,
) -> bool:
    """Re-check a previously viable atom of placed ``p`` when a partner arrives.

    Only called when ``a.related`` is the newcomer's class; ``future_after``
    counts partners still to come after the newcomer.
    """
    if a.kind is RelationKind.DR:
        if not a.negated:
            return dr_directed(p, newcomer, a.dir, tau)
        if not dr_directed(p, newcomer, a.dir, tau):
            return True
        if future_after > 0:
            return True
        return any(
            not dr_directed(p, b, a.dir, tau)
            for b in placed_by_class.get(a.related, ())
            if b.id != p.id
        )
    if not a.negated:
        if ec_directed(p, newcomer, a.dir, tau):
            return True
        if future_after > 0:
            return True
        return any(
            ec_directed(p, b, a.dir, tau)
            for b in placed_by_class.get(a.related, ())
            if b.id != p.id
        )
    return not ec_directed(p, newcomer, a.dir, tau)


class _Searcher:
    def __init__(
        self,
        spec: Spec,
        inventory: Inventory,
        rng: np.random.Generator,
        budget: _Budget,
        tau: float,
    ):
        self.spec = spec
        self.inv = inventory
        self.rng = rng
        self.budget = budget
        self.tau = tau
        self.space = inventory.space
        self.classes = inventory.classes()
        self.clauses = list(spec.clauses)
        self.movables = self._expand_items()
        self.fixed = list(inventory.fixed_objects)
        # atoms of each clause headed by a given class, precomputed
        self.headed: dict[str, list[tuple[int, tuple[Atom, ...]]]] = {}
        for c in self.classes:
            rows = []
            for ci, clause in enumerate(self.clauses):
                atoms = clause.atoms_headed(c.name)
                if atoms:
                    rows.append((ci, atoms))
            self.headed[c.name] = rows
        self.ec_atoms: dict[str, list[Atom]] = {
            c.name: [
                a
                for clause in self.clauses
                for a in clause.atoms_headed(c.name)
                if a.kind is RelationKind.EC and not a.negated
            ]
            for c in self.classes
        }
        # suffix[i] = count per class of movables with index >= i
        self.suffix: list[dict[str, int]] = [dict() for _ in range(len(self.movables) + 1)]
        acc: dict[str, int] = {c.name: 0 for c in self.classes}
        self.suffix[len(self.movables)] = dict(acc)
        for i in range(len(self.movables) - 1, -1, -1):
            acc = dict(acc)
            acc[self.movables[i].cls] += 1
            self.suffix[i] = acc
        self.best_partial: tuple[int, list[SceneObject]] = (-1, [])

    def _expand_items(self) -> list[SceneObject]:
        degree: dict[str, int] = {}
        for clause in self.clauses:
            for a in clause:
                degree[a.head] = degree.get(a.head, 0) + 1
                degree[a.related] = degree.get(a.related, 0) + 1
        objs = []
        used = {o.id for o in self.inv.fixed_objects}
        counters: dict[str, int] = {}
        for item in sorted(
            self.inv.items,
            key=lambda it: (-degree.get(it.cls, 0), -(it.l * it.w), it.cls),
        ):
            for _ in range(item.count):
                i = counters.get(item.cls, 0)
                counters[item.cls] = i + 1
                oid = f"{item.cls.lower()}{i}"
                if oid in used:
                    oid = f"{item.cls}_{i}"
                if oid in used:
                    raise MetadataError(f"cannot derive a unique id for class {item.cls!r}")
                used.add(oid)
                objs.append(SceneObject(oid, item.cls, item.l, item.w, 0.0, 0.0))
        return objs

    def initial_state(self):
        placed_by_class: dict[str, list[SceneObject]] = {c.name: [] for c in self.classes}
        for o in self.fixed:
            placed_by_class[o.cls].append(o)
        viability: dict[tuple[str, int], tuple[Atom, ...]] = {}
        for o in self.fixed:
            for ci, atoms in self.headed[o.cls]:
                viable = tuple(
                    a
                    for a in atoms
                    if _atom_can_hold(o, a, placed_by_class, self.suffix[0][a.related], self.tau)
                )
                if not viable:
                    return None
                viability[(o.id, ci)] = viable
        return placed_by_class, viability

    def _candidates(self, o: SceneObject, placed: list[SceneObject]) -> list[tuple[float, float]]:
        rng = self.rng
        cands: list[tuple[float, float]] = []
        partners = list(placed)
        if len(partners) > _SNAP_PARTNERS:
            idx = rng.permutation(len(partners))[:_SNAP_PARTNERS]
            partners = [partners[i] for i in idx]
        for b in partners:
            margin_x = min(o.l, b.l) / 4
            margin_y = min(o.w, b.w) / 4
            slide_x = float(rng.uniform(b.left - o.l / 2 + margin_x, b.right + o.l / 2 - margin_x))
            slide_y = float(rng.uniform(b.bottom - o.w / 2 + margin_y, b.top + o.w / 2 - margin_y))
            xs = (b.x, b.left + o.l / 2, b.right - o.l / 2, slide_x)
            ys = (b.y, b.bottom + o.w / 2, b.top - o.w / 2, slide_y)
            for x in xs:
                cands.append((x, b.top + o.w / 2))
                cands.append((x, b.bottom - o.w / 2))
            for y in ys:
                cands.append((b.right + o.l / 2, y))
                cands.append((b.left - o.l / 2, y))
        for _ in range(_UNIFORM_CANDIDATES):
            cands.append(
                (
                    float(rng.uniform(self.space.x_min, self.space.x_max)),
                    float(rng.uniform(self.space.y_min, self.space.y_max)),
                )
            )
        seen = set()
        unique = []
        for x, y in cands:
            key = (round(x, 9), round(y, 9))
            if key not in seen:
                seen.add(key)
                unique.append((x, y))
        order = self.rng.permutation(len(unique))
        return [unique[i] for i in order]

    def _score(self, obj: SceneObject, placed_by_class: dict[str, list[SceneObject]]) -> float:
        score = 0.0
        for a in self.ec_atoms[obj.cls]:
            if any(
                ec_directed(obj, b, a.dir, self.tau)
                for b in placed_by_class.get(a.related, ())
                if b.id != obj.id
            ):
                score += 1.0
        return score + float(self.rng.uniform(0.0, 0.75))

    def _try_place(
        self,
        obj: SceneObject,
        placed: list[SceneObject],
        placed_by_class: dict[str, list[SceneObject]],
        viability: dict[tuple[str, int], tuple[Atom, ...]],
        depth: int,
    ):
        """Viability update for one candidate, or None if it kills something."""
        if not self.budget.spend():
            raise _Exhausted
        if not self.space.contains_point(obj.x, obj.y):
            return None
        for p in placed:
            if not interiors_disjoint(obj, p, self.tau):
                return None
        remaining = self.suffix[depth + 1]
        updates: dict[tuple[str, int], tuple[Atom, ...]] = {}
        for ci, atoms in self.headed[obj.cls]:
            viable = tuple(
                a
                for a in atoms
                if _atom_can_hold(obj, a, placed_by_class, remaining[a.related], self.tau)
            )
            if not viable:
                return None
            updates[(obj.id, ci)] = viable
        for key, atoms in viability.items():
            pid = key[0]
            p = self._placed_lookup[pid]
            changed = False
            kept = []
            for a in atoms:
                if a.related == obj.cls:
                    if not _atom_survives_newcomer(
                        p, a, obj, placed_by_class, remaining[a.related], self.tau
                    ):
                        changed = True
                        continue
                kept.append(a)
            if not kept:
                return None
            if changed:
                updates[key] = tuple(kept)
        return updates

    def search(self) -> list[SceneObject] | None:
        init = self.initial_state()
        if init is None:
            return None
        placed_by_class, viability = init
        placed = list(self.fixed)
        self._placed_lookup = {o.id: o for o in placed}
        return self._dfs(placed, placed_by_class, viability, 0)

    def _dfs(self, placed, placed_by_class, viability, depth):
        if depth == len(self.movables):
            return list(placed[len(self.fixed):])
        proto = self.movables[depth]
        scored = []
        for x, y in self._candidates(proto, placed):
            obj = proto.moved_to(x, y)
            updates = self._try_place(obj, placed, placed_by_class, viability, depth)
            if updates is None:
                continue
            scored.append((self._score(obj, placed_by_class), obj, updates))
        scored.sort(key=lambda t: -t[0])
        if depth > self.best_partial[0]:
            self.best_partial = (depth, list(placed[len(self.fixed):]))
        for _, obj, updates in scored[:_BRANCH]:
            placed.append(obj)
            placed_by_class[obj.cls].append(obj)
            self._placed_lookup[obj.id] = obj
            new_viability = dict(viability)
            new_viability.update(updates)
            result = self._dfs(placed, placed_by_class, new_viability, depth + 1)
            if result is not None:
                return result
            placed.pop()
            placed_by_class[obj.cls].pop()
            del self._placed_lookup[obj.id]
        return None


def place(
    s: Spec,
    inventory: Inventory,
    rng: np.random.Generator,
    budget: int = DEFAULT_BUDGET,
    tau: float = DEFAULT_TAU,
) -> Demonstration | Infeasible:
    """One scene satisfying ``s`` built from ``inventory``, or Infeasible.

    Restarts the randomized search until the shared candidate budget runs
    out.  Every returned scene is re-verified with the evaluator.
    """
    class_names = {c.name for c in inventory.classes()}
    missing = sorted(set(s.class_names) - class_names)
    if missing:
        raise MetadataError(f"rules reference classes absent from the inventory: {missing}")
    reason = prove_unit_infeasible(s, inventory, tau)
    if reason is not None:
        return Infeasible(True, reason, 0, len(s))

    classes = inventory.classes()

    def satisfied_count(objs: Sequence[SceneObject]) -> int:
        demo = Demonstration(inventory.space, classes, tuple(objs))
        return sum(1 for c in s if demo_satisfies_clause(c, demo, tau))

    probe = _Searcher(s, inventory, rng, _Budget(0), tau)
    if not probe.movables:
        demo = Demonstration(inventory.space, classes, tuple(probe.fixed))
        if demo_satisfies_spec(s, demo, tau):
            return demo
        return Infeasible(
            False,
            "the fixed scenery alone does not satisfy the rules",
            satisfied_count(probe.fixed),
            len(s),
        )
    if probe.initial_state() is None:
        return Infeasible(
            False,
            "the fixed scenery leaves some clause unsatisfiable",
            satisfied_count(probe.fixed),
            len(s),
        )

    shared = _Budget(budget)
    best_count = 0
    while shared.left > 0:
        searcher = _Searcher(s, inventory, rng, shared, tau)
        try:
            movables = searcher.search()
        except _Exhausted:
            movables = None
        if movables is not None:
            demo = Demonstration(
                inventory.space, classes, tuple(searcher.fixed) + tuple(movables)
            )
            if demo_satisfies_spec(s, demo, tau):
                return demo
            best_count = max(best_count, satisfied_count(demo.objects))
            continue  # verification mismatch: treat as a failed attempt
        best_count = max(
            best_count,
            satisfied_count(tuple(searcher.fixed) + tuple(searcher.best_partial[1])),
        )
    return Infeasible(
        False,
        "search budget exhausted before a satisfying scene was found",
        best_count,
        len(s),
    )


def sample_satisfying_set(
    s: Spec,
    inventory: Inventory,
    k: int,
    rng: np.random.Generator,
    budget: int = DEFAULT_BUDGET,
    tau: float = DEFAULT_TAU,
) -> list[Demonstration]:
    """``k`` independently synthesized satisfying scenes, one RNG stream each."""
    if k < 1:
        raise ValueError("k must be positive")
    demos = []
    for i, child in enumerate(rng.spawn(k)):
        result = place(s, inventory, child, budget, tau)
        if isinstance(result, Infeasible):
            raise SynthesisError(
                f"scene {i}: {'infeasible' if result.proven else 'gave up'}: {result.reason}"
            )
        demos.append(result)
    return demos
