"""Rule inference from demonstrations.

Two stages.  The candidate search enumerates template-admissible clauses
by increasing length and keeps those satisfied by every demonstration,
skipping any clause already implied by a shorter kept one (a disjunction
implies every extension of itself).  The filter stage then scores each
kept clause against scenes with uniformly re-placed objects: a clause
that random placement satisfies about as often as the demonstrations do
carries no information about intent and is rejected.

The score treats objects as independent.  With ``f`` the fraction of
relevant random-scene objects satisfying the clause (floored at
``epsilon`` so a never-satisfied clause still gets a nonzero score), the
chance that all demonstrations satisfy it by accident is ``f`` raised to
the number of relevant objects across all demonstrations.  Clauses are
accepted when that probability falls below ``p_c``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import MetadataError, NoRelevantObjectsError, SamplingError
from .evaluate import object_satisfies_atom, object_satisfies_clause
from .formula import Atom, Clause, Spec
from .geometry import DEFAULT_TAU, Demonstration, SceneObject, interiors_disjoint
from .templates import Template, _multi_atom_pools, unit_atoms


@dataclass(frozen=True)
class InferenceParams:
    """Filter-stage knobs.

    ``p_c`` is the acceptance threshold, ``epsilon`` the satisfaction
    fraction floor, ``k_r`` the number of random scenes to draw.
    ``collision_free_sampling`` rejection-samples random scenes until
    interiors are pairwise disjoint; by default overlaps are allowed.
    ``resample_fixed_classes`` also re-places scenery objects, which are
    otherwise kept in pose.
    """

    p_c: float = 0.05
    epsilon: float = 0.01
    k_r: int = 100
    seed: int | None = None
    collision_free_sampling: bool = False
    resample_fixed_classes: bool = False

    def __post_init__(self):
        if not 0 < self.p_c <= 1:
            raise ValueError("p_c must lie in (0, 1]")
        if not 0 < self.epsilon <= 1:
            raise ValueError("epsilon must lie in (0, 1]")
        if self.k_r < 1:
            raise ValueError("k_r must be positive")

    def to_json(self) -> dict:
        return {
            "p_c": self.p_c,
            "epsilon": self.epsilon,
            "k_r": self.k_r,
            "seed": self.seed,
            "collision_free_sampling": self.collision_free_sampling,
            "resample_fixed_classes": self.resample_fixed_classes,
        }


@dataclass(frozen=True)
class CandidateReport:
    """Filter-stage audit record for one kept clause."""

    clause: Clause
    sat_count: int
    relevant_count: int
    sat_fraction: float
    per_demo_probabilities: tuple[float, ...]
    p_phi: float
    accepted: bool

    def to_json(self) -> dict:
        return {
            "clause": str(self.clause),
            "sat_count": self.sat_count,
            "relevant_count": self.relevant_count,
            "sat_fraction": self.sat_fraction,
            "per_demo_probabilities": list(self.per_demo_probabilities),
            "p_phi": self.p_phi,
            "accepted": self.accepted,
        }


@dataclass(frozen=True)
class CandidateSearch:
    """Search-stage result: kept clauses in discovery order, plus tallies."""

    clauses: tuple[Clause, ...]
    enumerated: int
    checked: int


@dataclass(frozen=True)
class InferenceResult:
    spec: Spec
    reports: tuple[CandidateReport, ...]
    enumerated: int
    checked: int


def check_consistent_metadata(demos: Sequence[Demonstration]) -> None:
    """All demonstrations must share one space and one class set."""
    if not demos:
        raise MetadataError("need at least one demonstration")
    first = demos[0]
    classes = set(first.classes)
    for i, d in enumerate(demos[1:], start=1):
        if d.space != first.space:
            raise MetadataError(f"demonstration {i} has a different space")
        if set(d.classes) != classes:
            raise MetadataError(f"demonstration {i} has a different class set")


def sample_rand_demo(
    demos: Sequence[Demonstration],
    rng: np.random.Generator,
    *,
    resample_fixed_classes: bool = False,
    collision_free: bool = False,
    tau: float = DEFAULT_TAU,
    max_retries: int = 1000,
) -> Demonstration:
    """Copy a random demonstration and re-place its objects uniformly.

    Each movable object's center is drawn uniformly over the space.
    Fixed-class objects keep their pose unless ``resample_fixed_classes``.
    With ``collision_free`` every draw is rejected until the object's
    interior avoids everything already placed, up to ``max_retries`` per
    object.
    """
    if not demos:
        raise ValueError("need at least one demonstration to sample from")
    base = demos[int(rng.integers(len(demos)))]
    space = base.space
    fixed = {c.name for c in base.classes if c.fixed}
    placed: list[SceneObject] = []
    out: list[SceneObject] = []
    for o in base.objects:
        if o.cls in fixed and not resample_fixed_classes:
            out.append(o)
            placed.append(o)
            continue
        for _ in range(max_retries):
            cand = o.moved_to(
                float(rng.uniform(space.x_min, space.x_max)),
                float(rng.uniform(space.y_min, space.y_max)),
            )
            if not collision_free or all(
                interiors_disjoint(cand, p, tau) for p in placed
            ):
                break
        else:
            raise SamplingError(
                f"no collision-free position for object {o.id!r} "
                f"after {max_retries} draws"
            )
        out.append(cand)
        placed.append(cand)
    return base.with_objects(tuple(out))


def object_sat_fraction(
    c: Clause,
    rand_demos: Sequence[Demonstration],
    epsilon: float = 0.01,
    tau: float = DEFAULT_TAU,
) -> float:
    """Fraction of relevant random-scene objects satisfying the clause.

    Relevant means the object's class heads at least one atom.  The value
    is floored at ``epsilon``.  Raises :class:`NoRelevantObjectsError`
    when no random scene contains a relevant object.
    """
    relevant = 0
    sat = 0
    for demo in rand_demos:
        for head in sorted(c.heads):
            for o in demo.objects_of(head):
                relevant += 1
                if object_satisfies_clause(o, c, demo, tau):
                    sat += 1
    if relevant == 0:
        raise NoRelevantObjectsError(
            f"no objects of classes {sorted(c.heads)} in any random scene"
        )
    return max(epsilon, sat / relevant)


def clause_accept_probability(
    c: Clause,
    demos: Sequence[Demonstration],
    rand_demos: Sequence[Demonstration],
    epsilon: float = 0.01,
    tau: float = DEFAULT_TAU,
) -> tuple[float, tuple[float, ...]]:
    """Chance the demonstrations satisfy ``c`` by accident, with per-demo factors.

    The per-object factor is one shared fraction, so the product over
    demonstrations and their relevant objects collapses to that fraction
    raised to the total relevant object count.
    """
    f = object_sat_fraction(c, rand_demos, epsilon, tau)
    counts = [_relevant_count(c, d) for d in demos]
    per_demo = tuple(f ** n for n in counts)
    return f ** sum(counts), per_demo


def _relevant_count(c: Clause, demo: Demonstration) -> int:
    return sum(len(demo.objects_of(head)) for head in c.heads)


# --- fast evaluation tables -------------------------------------------------


class _SearchSpace:
    """Bitmask tables for clause satisfaction over a fixed atom universe.

    Each admissible atom gets one bit.  Each scene object gets the mask of
    atoms (headed by its class) it satisfies, so a clause is satisfied by
    an object iff the masks intersect, and a clause is satisfied by a
    scene iff every relevant object's mask intersects it.  Semantics come
    from :func:`object_satisfies_atom`; this class only tabulates it.
    """

    def __init__(self, template: Template, demos: Sequence[Demonstration], tau: float):
        check_consistent_metadata(demos)
        self.template = template
        self.tau = tau
        self.classes = demos[0].class_names
        self.units = unit_atoms(template, self.classes)
        self.pools = _multi_atom_pools(template, self.classes)
        universe = sorted(
            set(self.units).union(a for pool in self.pools for a in pool), key=Atom.key
        )
        self.bit = {a: 1 << i for i, a in enumerate(universe)}
        self.head_masks = {cls: 0 for cls in self.classes}
        for a, b in self.bit.items():
            self.head_masks[a.head] |= b
        self.atoms_by_head = {
            cls: [a for a in universe if a.head == cls] for cls in self.classes
        }
        self.demo_tables = [self._table(d) for d in demos]

    def _table(self, demo: Demonstration) -> list[tuple[int, int]]:
        """Per object: (head-relevance mask of its class, satisfied-atom mask)."""
        rows = []
        for o in demo.objects:
            mask = 0
            for a in self.atoms_by_head[o.cls]:
                if object_satisfies_atom(o, a, demo, self.tau):
                    mask |= self.bit[a]
            rows.append((self.head_masks[o.cls], mask))
        return rows

    def tables_for(self, demos: Sequence[Demonstration]) -> list[list[tuple[int, int]]]:
        return [self._table(d) for d in demos]

    def clause_mask(self, c: Clause) -> int:
        mask = 0
        for a in c:
            mask |= self.bit[a]
        return mask

    def search(self) -> CandidateSearch:
        # Distinct (relevance, satisfied) rows suffice for the all-objects check.
        distinct_rows = sorted({row for table in self.demo_tables for row in table})
        pool_masks = [self.clause_mask(Clause.of(pool)) if pool else 0 for pool in self.pools]
        buckets: list[list[int]] = [[] for _ in self.pools]
        found: list[Clause] = []

        def satisfied(mask: int) -> bool:
            for relevance, sat_mask in distinct_rows:
                if mask & relevance and not mask & sat_mask:
                    return False
            return True

        def register(mask: int) -> None:
            for i, pm in enumerate(pool_masks):
                if mask & ~pm == 0:
                    buckets[i].append(mask)

        enumerated = 0
        checked = 0
        for n in range(1, self.template.max_len + 1):
            if n == 1:
                for a in self.units:
                    enumerated += 1
                    checked += 1
                    mask = self.bit[a]
                    if satisfied(mask):
                        found.append(Clause((a,)))
                        register(mask)
                continue
            for pool_idx, pool in enumerate(self.pools):
                if len(pool) < n:
                    continue
                bucket = buckets[pool_idx]
                bits = [self.bit[a] for a in pool]
                for combo in itertools.combinations(range(len(pool)), n):
                    enumerated += 1
                    mask = 0
                    for i in combo:
                        mask |= bits[i]
                    if any(fm & ~mask == 0 for fm in bucket):
                        continue
                    checked += 1
                    if satisfied(mask):
                        found.append(Clause(tuple(pool[i] for i in combo)))
                        bucket.append(mask)
        return CandidateSearch(tuple(found), enumerated, checked)


def find_disjunctions(
    demos: Sequence[Demonstration], t: Template, tau: float = DEFAULT_TAU
) -> CandidateSearch:
    """Stage one: every minimal template clause satisfied by all demonstrations.

    Clauses are examined by increasing length in a deterministic order;
    a clause subsumed by an already kept one is skipped, so the result is
    an antichain whose supersets cover exactly the satisfied candidates.
    """
    return _SearchSpace(t, demos, tau).search()


def infer(
    demos: Sequence[Demonstration],
    t: Template,
    params: InferenceParams = InferenceParams(),
    tau: float = DEFAULT_TAU,
) -> InferenceResult:
    """Full pipeline: search, score against random scenes, filter.

    Random scenes are drawn before the search from a generator seeded
    with ``params.seed``, so equal inputs and seed give identical output
    regardless of template.  Clauses whose head classes have no objects
    in any demonstration score 1.0 and are never accepted.
    """
    check_consistent_metadata(demos)
    rng = np.random.default_rng(params.seed)
    rand_demos = [
        sample_rand_demo(
            demos,
            rng,
            resample_fixed_classes=params.resample_fixed_classes,
            collision_free=params.collision_free_sampling,
            tau=tau,
        )
        for _ in range(params.k_r)
    ]
    space = _SearchSpace(t, demos, tau)
    search = space.search()
    rand_tables = space.tables_for(rand_demos)

    reports = []
    accepted_clauses = []
    for clause in search.clauses:
        mask = space.clause_mask(clause)
        demo_counts = [
            sum(1 for relevance, _ in table if mask & relevance)
            for table in space.demo_tables
        ]
        total = sum(demo_counts)
        if total == 0:
            reports.append(
                CandidateReport(clause, 0, 0, 1.0, (1.0,) * len(demos), 1.0, False)
            )
            continue
        relevant = 0
        sat = 0
        for table in rand_tables:
            for relevance, sat_mask in table:
                if mask & relevance:
                    relevant += 1
                    if mask & sat_mask:
                        sat += 1
        if relevant == 0:
            raise NoRelevantObjectsError(
                f"no objects of classes {sorted(clause.heads)} in any random scene"
            )
        f = max(params.epsilon, sat / relevant)
        per_demo = tuple(f ** n for n in demo_counts)
        p_phi = f ** total
        accepted = p_phi < params.p_c
        reports.append(
            CandidateReport(clause, sat, relevant, f, per_demo, p_phi, accepted)
        )
        if accepted:
            accepted_clauses.append(clause)
    return InferenceResult(
        Spec.of(accepted_clauses), tuple(reports), search.enumerated, search.checked
    )
