"""JSON document formats: demonstrations, inventories, reports, rule files.

One schema and validator pair per document kind, shared by the CLI and
the HTTP service so a file on disk and a request body are held to exactly
the same rules.  Validation failures raise :class:`DocumentError` with a
JSON path such as ``objects[0].class``.

Serialization is canonical: classes sorted by name, objects by id, keys
in a fixed order, two-space indent, trailing newline.  Loading a saved
document and saving it again reproduces the bytes.
"""

from __future__ import annotations

import json
from typing import Any

import jsonschema

from .errors import DocumentError
from .formula import Spec, parse_spec, print_spec
from .geometry import Demonstration, ObjectClass, SceneObject, Space
from .synthesis import Inventory, InventoryItem

SCHEMA_VERSION = 1

_SPACE_SCHEMA = {
    "type": "object",
    "required": ["x_min", "x_max", "y_min", "y_max"],
    "additionalProperties": False,
    "properties": {
        "x_min": {"type": "number"},
        "x_max": {"type": "number"},
        "y_min": {"type": "number"},
        "y_max": {"type": "number"},
    },
}

_OBJECT_SCHEMA = {
    "type": "object",
    "required": ["id", "class", "l", "w", "x", "y"],
    "additionalProperties": False,
    "properties": {
        "id": {"type": "string", "minLength": 1},
        "class": {"type": "string", "minLength": 1},
        "l": {"type": "number", "exclusiveMinimum": 0},
        "w": {"type": "number", "exclusiveMinimum": 0},
        "x": {"type": "number"},
        "y": {"type": "number"},
    },
}

DEMO_SCHEMA = {
    "type": "object",
    "required": ["schema_version", "space", "classes", "objects"],
    "additionalProperties": False,
    "properties": {
        "schema_version": {"type": "integer"},
        "space": _SPACE_SCHEMA,
        "classes": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["name"],
                "additionalProperties": False,
                "properties": {
                    "name": {"type": "string", "minLength": 1},
                    "fixed": {"type": "boolean"},
                },
            },
        },
        "objects": {"type": "array", "items": _OBJECT_SCHEMA},
    },
}

INVENTORY_SCHEMA = {
    "type": "object",
    "required": ["schema_version", "space", "items"],
    "additionalProperties": False,
    "properties": {
        "schema_version": {"type": "integer"},
        "space": _SPACE_SCHEMA,
        "items": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["class", "l", "w", "count"],
                "additionalProperties": False,
                "properties": {
                    "class": {"type": "string", "minLength": 1},
                    "l": {"type": "number", "exclusiveMinimum": 0},
                    "w": {"type": "number", "exclusiveMinimum": 0},
                    "count": {"type": "integer", "minimum": 1},
                },
            },
        },
        "fixed_objects": {"type": "array", "items": _OBJECT_SCHEMA},
    },
}


def _json_path(absolute_path) -> str:
    parts = []
    for p in absolute_path:
        if isinstance(p, int):
            parts.append(f"[{p}]")
        else:
            parts.append(f".{p}" if parts else p)
    return "".join(parts) or "$"


def validate_document(data: Any, schema: dict) -> None:
    """Structural validation; raises DocumentError with a JSON path."""
    if not isinstance(data, dict):
        raise DocumentError("document must be a JSON object")
    version = data.get("schema_version")
    if version != SCHEMA_VERSION:
        raise DocumentError(
            f"unsupported schema_version {version!r}, expected {SCHEMA_VERSION}",
            "schema_version",
        )
    validator = jsonschema.Draft202012Validator(schema)
    errors = sorted(validator.iter_errors(data), key=lambda e: (len(list(e.absolute_path)),))
    if errors:
        err = jsonschema.exceptions.best_match(errors)
        raise DocumentError(err.message, _json_path(err.absolute_path))


def _space_from_json(data: dict, path: str) -> Space:
    if data["x_min"] >= data["x_max"]:
        raise DocumentError("x_min must be below x_max", f"{path}.x_min")
    if data["y_min"] >= data["y_max"]:
        raise DocumentError("y_min must be below y_max", f"{path}.y_min")
    return Space(data["x_min"], data["x_max"], data["y_min"], data["y_max"])


def demo_from_json(data: Any) -> Demonstration:
    """Validate and build a demonstration from parsed JSON."""
    validate_document(data, DEMO_SCHEMA)
    space = _space_from_json(data["space"], "space")
    classes = []
    seen_classes = set()
    for i, c in enumerate(data["classes"]):
        if c["name"] in seen_classes:
            raise DocumentError(f"duplicate class {c['name']!r}", f"classes[{i}].name")
        seen_classes.add(c["name"])
        classes.append(ObjectClass(c["name"], bool(c.get("fixed", False))))
    by_name = {c.name: c for c in classes}
    objects = []
    seen_ids = set()
    for i, o in enumerate(data["objects"]):
        if o["id"] in seen_ids:
            raise DocumentError(f"duplicate object id {o['id']!r}", f"objects[{i}].id")
        seen_ids.add(o["id"])
        cls = by_name.get(o["class"])
        if cls is None:
            raise DocumentError(
                f"undeclared class {o['class']!r}", f"objects[{i}].class"
            )
        if not cls.fixed and not space.contains_point(o["x"], o["y"]):
            raise DocumentError(
                f"center ({o['x']}, {o['y']}) lies outside the space", f"objects[{i}]"
            )
        objects.append(SceneObject(o["id"], o["class"], o["l"], o["w"], o["x"], o["y"]))
    return Demonstration(space, tuple(classes), tuple(objects))


def demo_to_json(demo: Demonstration) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "space": {
            "x_min": demo.space.x_min,
            "x_max": demo.space.x_max,
            "y_min": demo.space.y_min,
            "y_max": demo.space.y_max,
        },
        "classes": [
            {"name": c.name, "fixed": c.fixed}
            for c in sorted(demo.classes, key=lambda c: c.name)
        ],
        "objects": [
            {"id": o.id, "class": o.cls, "l": o.l, "w": o.w, "x": o.x, "y": o.y}
            for o in sorted(demo.objects, key=lambda o: o.id)
        ],
    }


def inventory_from_json(data: Any) -> Inventory:
    validate_document(data, INVENTORY_SCHEMA)
    space = _space_from_json(data["space"], "space")
    items = tuple(
        InventoryItem(it["class"], it["l"], it["w"], it["count"]) for it in data["items"]
    )
    fixed = []
    seen_ids = set()
    for i, o in enumerate(data.get("fixed_objects", [])):
        if o["id"] in seen_ids:
            raise DocumentError(f"duplicate object id {o['id']!r}", f"fixed_objects[{i}].id")
        seen_ids.add(o["id"])
        fixed.append(SceneObject(o["id"], o["class"], o["l"], o["w"], o["x"], o["y"]))
    try:
        return Inventory(space, items, tuple(fixed))
    except Exception as exc:
        raise DocumentError(str(exc)) from None


def inventory_to_json(inv: Inventory) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "space": {
            "x_min": inv.space.x_min,
            "x_max": inv.space.x_max,
            "y_min": inv.space.y_min,
            "y_max": inv.space.y_max,
        },
        "items": [
            {"class": it.cls, "l": it.l, "w": it.w, "count": it.count} for it in inv.items
        ],
        "fixed_objects": [
            {"id": o.id, "class": o.cls, "l": o.l, "w": o.w, "x": o.x, "y": o.y}
            for o in inv.fixed_objects
        ],
    }


def dumps_canonical(data: Any) -> str:
    return json.dumps(data, indent=2, allow_nan=False) + "\n"


def _parse_json(text: str, source: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON in {source}: {exc}") from None


def load_demo(path: str) -> Demonstration:
    with open(path, "r", encoding="utf-8") as fh:
        return demo_from_json(_parse_json(fh.read(), path))


def save_demo(demo: Demonstration, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_canonical(demo_to_json(demo)))


def load_inventory(path: str) -> Inventory:
    with open(path, "r", encoding="utf-8") as fh:
        return inventory_from_json(_parse_json(fh.read(), path))


def load_spec_file(path: str) -> Spec:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_spec(fh.read())


def save_spec_file(s: Spec, path: str) -> None:
    text = print_spec(s)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text + "\n" if text else "")
