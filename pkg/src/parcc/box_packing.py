"""Bundled example domain: three movable classes packed inside an open box.

A square table carries a walled box.  Movable classes B and R pack against
the west wall with B above R, class G packs against the east wall, and
negated disjointness rules keep everything from drifting wholly beyond
the walls.  The rule text ships as package data (``data/box_packing.parcc``)
and the helpers here build matching spaces, wall scenery, inventories and
synthesized demonstration sets.

The table is deliberately much larger than the box: when scenes are
randomized during inference, objects then have a realistic chance of
landing wholly beyond each wall, which is what makes the containment
rules statistically surprising in demonstrations.
"""

from __future__ import annotations

from importlib import resources

import numpy as np

from .formula import Spec, parse_spec
from .geometry import ObjectClass, SceneObject, Space
from .synthesis import DEFAULT_BUDGET, Inventory, InventoryItem, place
from .errors import SynthesisError
from .synthesis import Infeasible

MOVABLE_CLASSES = ("B", "R", "G")
WALL_CLASS = "WA"
UNIT = 1.0
_WALL_THICKNESS = 0.5
# box outer footprint [5, 11] x [5, 11] on a [0, 16] x [0, 16] table


def spec_text() -> str:
    return resources.files("parcc").joinpath("data/box_packing.parcc").read_text("utf-8")


def spec() -> Spec:
    return parse_spec(spec_text())


_FORMULA_TEXTS = (
    "DR_N(B, R)",
    "DR_E(G, R)",
    "DR_E(G, B)",
    "EC_N(B, B) | EC_S(B, B) | EC_E(B, B) | EC_W(B, B)",
    "EC_N(R, R) | EC_S(R, R) | EC_E(R, R) | EC_W(R, R)",
    "EC_N(G, G) | EC_S(G, G) | EC_E(G, G) | EC_W(G, G)",
    "EC_W(B, B) | EC_W(B, WA)\n"
    "EC_N(B, B) | EC_N(B, WA) | EC_N(B, R) | EC_S(B, B) | EC_S(B, WA) | EC_S(B, R)",
    "EC_W(R, R) | EC_W(R, WA)\n"
    "EC_N(R, R) | EC_N(R, B) | EC_N(R, WA) | EC_S(R, R) | EC_S(R, B) | EC_S(R, WA)",
    "EC_E(G, G) | EC_E(G, WA)\n"
    "EC_N(G, G) | EC_N(G, WA) | EC_S(G, G) | EC_S(G, WA)",
    "!DR_N(B, WA)\n!DR_S(B, WA)\n!DR_E(B, WA)\n!DR_W(B, WA)",
    "!DR_N(R, WA)\n!DR_S(R, WA)\n!DR_E(R, WA)\n!DR_W(R, WA)",
    "!DR_N(G, WA)\n!DR_S(G, WA)\n!DR_E(G, WA)\n!DR_W(G, WA)",
)


def formulas() -> tuple[Spec, ...]:
    """The rule file regrouped into its twelve narrative constraints.

    Each entry is a small Spec (one or more CNF clauses); together they
    partition the clauses of :func:`spec`.  The grouping is useful when
    reporting rule recovery formula by formula.
    """
    return tuple(parse_spec(text) for text in _FORMULA_TEXTS)


def space() -> Space:
    return Space(0.0, 16.0, 0.0, 16.0)


def classes() -> tuple[ObjectClass, ...]:
    return tuple(
        [ObjectClass(name) for name in MOVABLE_CLASSES] + [ObjectClass(WALL_CLASS, fixed=True)]
    )


def walls() -> tuple[SceneObject, ...]:
    t = _WALL_THICKNESS
    return (
        SceneObject("wall_s", WALL_CLASS, l=6.0, w=t, x=8.0, y=5.0 + t / 2),
        SceneObject("wall_n", WALL_CLASS, l=6.0, w=t, x=8.0, y=11.0 - t / 2),
        SceneObject("wall_w", WALL_CLASS, l=t, w=5.0, x=5.0 + t / 2, y=8.0),
        SceneObject("wall_e", WALL_CLASS, l=t, w=5.0, x=11.0 - t / 2, y=8.0),
    )


def inventory(counts: dict[str, int] | None = None) -> Inventory:
    """An inventory with the given per-class counts (default 3 of each)."""
    counts = counts or {name: 3 for name in MOVABLE_CLASSES}
    items = tuple(
        InventoryItem(name, UNIT, UNIT, counts[name]) for name in MOVABLE_CLASSES
    )
    return Inventory(space(), items, walls())


def demo_set(
    k: int = 8,
    seed: int | None = 0,
    vary_counts: bool = True,
    budget: int = DEFAULT_BUDGET,
) -> list:
    """``k`` synthesized scenes satisfying the packing rules.

    With ``vary_counts`` each scene draws two to four objects per movable
    class, so the demonstration set exercises different object multisets.
    """
    rng = np.random.default_rng(seed)
    rules = spec()
    demos = []
    for i in range(k):
        child = rng.spawn(1)[0]
        if vary_counts:
            counts = {name: int(child.integers(2, 5)) for name in MOVABLE_CLASSES}
        else:
            counts = None
        result = place(rules, inventory(counts), child, budget)
        if isinstance(result, Infeasible):
            raise SynthesisError(f"scene {i}: {result.reason}")
        demos.append(result)
    return demos
