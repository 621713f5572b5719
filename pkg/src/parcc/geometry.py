"""Axis-aligned rectangle geometry and directed connection predicates.

Objects are axis-aligned rectangles described by their center ``(x, y)``
and extents ``l`` (along x) and ``w`` (along y).  North is +y, east is +x.

Two argument conventions coexist and are easy to confuse, so they are
stated here once and repeated on the predicates:

* ``dr_directed(a, b, d)`` holds when ``a`` lies wholly in direction ``d``
  of ``b``.  For ``d = N`` every point of ``a`` is at least as far north
  as every point of ``b``.
* ``ec_directed(a, b, d)`` holds when ``b`` touches ``a`` on ``a``'s side
  ``d``.  For ``d = N`` the bottom edge of ``b`` meets the top edge of
  ``a`` with the two open x-intervals overlapping, so the contact has
  positive length.  Pure corner contact does not count as directed
  contact, although it does count for ``externally_connected``.

All predicates take an absolute tolerance ``tau`` used for both edge
coincidence and interior disjointness.  Edge equality satisfies the
directed-disjointness predicates, so a stack of boxes is simultaneously
in directed contact and directionally discrete.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

from .errors import MetadataError

DEFAULT_TAU = 1e-6


class Direction(enum.Enum):
    N = "N"
    S = "S"
    E = "E"
    W = "W"

    @property
    def opposite(self) -> "Direction":
        return _OPPOSITE[self]

    @property
    def order(self) -> int:
        return _DIRECTION_ORDER[self]

    def __str__(self) -> str:
        return self.value


_OPPOSITE = {
    Direction.N: Direction.S,
    Direction.S: Direction.N,
    Direction.E: Direction.W,
    Direction.W: Direction.E,
}

_DIRECTION_ORDER = {d: i for i, d in enumerate(Direction)}


@dataclass(frozen=True)
class Space:
    """Rectangular workspace objects are demonstrated in."""

    x_min: float
    x_max: float
    y_min: float
    y_max: float

    def __post_init__(self):
        if not (self.x_min < self.x_max and self.y_min < self.y_max):
            raise ValueError(
                f"degenerate space [{self.x_min}, {self.x_max}] x "
                f"[{self.y_min}, {self.y_max}]"
            )

    def contains_point(self, x: float, y: float) -> bool:
        return self.x_min <= x <= self.x_max and self.y_min <= y <= self.y_max


@dataclass(frozen=True)
class ObjectClass:
    """A named class of interchangeable objects.

    ``fixed`` marks scenery such as walls: fixed-class objects keep their
    pose when scenes are randomized and may sit outside the space.
    """

    name: str
    fixed: bool = False

    def __post_init__(self):
        if not self.name:
            raise ValueError("class name must be nonempty")


class Edges(NamedTuple):
    left: float
    right: float
    bottom: float
    top: float


@dataclass(frozen=True)
class SceneObject:
    """One rectangle instance: identity, class, extents and center."""

    id: str
    cls: str
    l: float
    w: float
    x: float
    y: float

    def __post_init__(self):
        if not self.id:
            raise ValueError("object id must be nonempty")
        if self.l <= 0 or self.w <= 0:
            raise ValueError(f"object {self.id!r}: extents must be positive")

    @property
    def left(self) -> float:
        return self.x - self.l / 2

    @property
    def right(self) -> float:
        return self.x + self.l / 2

    @property
    def bottom(self) -> float:
        return self.y - self.w / 2

    @property
    def top(self) -> float:
        return self.y + self.w / 2

    def moved_to(self, x: float, y: float) -> "SceneObject":
        return SceneObject(self.id, self.cls, self.l, self.w, x, y)


def edges(o: SceneObject) -> Edges:
    """Edge coordinates (left, right, bottom, top) of a rectangle."""
    return Edges(o.left, o.right, o.bottom, o.top)


def interiors_disjoint(a: SceneObject, b: SceneObject, tau: float = DEFAULT_TAU) -> bool:
    """True iff the open interiors of ``a`` and ``b`` share no point.

    Touching along edges or corners still counts as disjoint.
    """
    _check_distinct(a, b)
    return (
        a.right <= b.left + tau
        or b.right <= a.left + tau
        or a.top <= b.bottom + tau
        or b.top <= a.bottom + tau
    )


def externally_connected(a: SceneObject, b: SceneObject, tau: float = DEFAULT_TAU) -> bool:
    """True iff ``a`` and ``b`` touch without overlapping.

    The closed rectangles, inflated by ``tau``, must intersect while the
    interiors stay disjoint.  Corner contact qualifies.
    """
    if not interiors_disjoint(a, b, tau):
        return False
    return (
        a.right >= b.left - tau
        and b.right >= a.left - tau
        and a.top >= b.bottom - tau
        and b.top >= a.bottom - tau
    )


def dr_directed(a: SceneObject, b: SceneObject, d: Direction, tau: float = DEFAULT_TAU) -> bool:
    """True iff ``a`` is discrete from ``b`` and wholly in direction ``d`` of it.

    ``dr_directed(a, b, N)`` reads "a is north of b": the bottom edge of
    ``a`` is at or above the top edge of ``b`` (within ``tau``).
    """
    if not interiors_disjoint(a, b, tau):
        return False
    if d is Direction.N:
        return a.bottom >= b.top - tau
    if d is Direction.S:
        return a.top <= b.bottom + tau
    if d is Direction.E:
        return a.left >= b.right - tau
    return a.right <= b.left + tau


def ec_directed(a: SceneObject, b: SceneObject, d: Direction, tau: float = DEFAULT_TAU) -> bool:
    """True iff ``b`` touches ``a`` on ``a``'s side ``d``.

    ``ec_directed(a, b, N)`` reads "b sits flush on top of a": the bottom
    edge of ``b`` coincides with the top edge of ``a`` within ``tau``, and
    the open x-intervals of the two rectangles overlap.  The overlap
    requirement makes the contact segment have positive length, so a pure
    corner touch is not directed contact.
    """
    _check_distinct(a, b)
    if d is Direction.N:
        return abs(b.bottom - a.top) <= tau and _open_overlap(a.left, a.right, b.left, b.right)
    if d is Direction.S:
        return abs(b.top - a.bottom) <= tau and _open_overlap(a.left, a.right, b.left, b.right)
    if d is Direction.E:
        return abs(b.left - a.right) <= tau and _open_overlap(a.bottom, a.top, b.bottom, b.top)
    return abs(b.right - a.left) <= tau and _open_overlap(a.bottom, a.top, b.bottom, b.top)


def _open_overlap(lo1: float, hi1: float, lo2: float, hi2: float) -> bool:
    # Open intervals (lo1, hi1) and (lo2, hi2) share a point.
    return lo1 < hi2 and lo2 < hi1


def _check_distinct(a: SceneObject, b: SceneObject) -> None:
    if a.id == b.id:
        raise ValueError(f"predicate applied to object {a.id!r} and itself")


@dataclass(frozen=True)
class Demonstration:
    """A scene: a space, the classes in play, and the placed objects.

    Invariants enforced at construction: object ids are unique, every
    object's class is declared, and every object of a non-fixed class has
    its center inside the space.  Fixed-class objects are exempt because
    scenery may define the boundary of the space itself.
    """

    space: Space
    classes: tuple[ObjectClass, ...]
    objects: tuple[SceneObject, ...]

    def __post_init__(self):
        by_name: dict[str, ObjectClass] = {}
        for c in self.classes:
            if c.name in by_name:
                raise MetadataError(f"duplicate class {c.name!r}")
            by_name[c.name] = c
        seen: set[str] = set()
        for o in self.objects:
            if o.id in seen:
                raise MetadataError(f"duplicate object id {o.id!r}")
            seen.add(o.id)
            cls = by_name.get(o.cls)
            if cls is None:
                raise MetadataError(f"object {o.id!r} has undeclared class {o.cls!r}")
            if not cls.fixed and not self.space.contains_point(o.x, o.y):
                raise MetadataError(
                    f"object {o.id!r} center ({o.x}, {o.y}) lies outside the space"
                )

    @cached_property
    def class_names(self) -> tuple[str, ...]:
        return tuple(sorted(c.name for c in self.classes))

    @cached_property
    def _by_class(self) -> dict[str, tuple[SceneObject, ...]]:
        out: dict[str, list[SceneObject]] = {c.name: [] for c in self.classes}
        for o in self.objects:
            out[o.cls].append(o)
        return {name: tuple(objs) for name, objs in out.items()}

    def objects_of(self, class_name: str) -> tuple[SceneObject, ...]:
        """All objects of the named class, in scene order."""
        try:
            return self._by_class[class_name]
        except KeyError:
            raise MetadataError(f"class {class_name!r} not declared in demonstration") from None

    def class_def(self, class_name: str) -> ObjectClass:
        for c in self.classes:
            if c.name == class_name:
                return c
        raise MetadataError(f"class {class_name!r} not declared in demonstration")

    def with_objects(self, objects: tuple[SceneObject, ...]) -> "Demonstration":
        return Demonstration(self.space, self.classes, objects)
