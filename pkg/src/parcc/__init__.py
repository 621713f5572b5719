"""Directed region-connection rules over axis-aligned rectangles.

The package covers the full loop: express placement rules as small
logical formulas, check scenes against them, learn them back from a
handful of demonstrations, and synthesize new scenes that satisfy them.
"""

from .errors import (
    DocumentError,
    EvaluationError,
    MetadataError,
    NoRelevantObjectsError,
    ParccError,
    SamplingError,
    SpecSyntaxError,
    SynthesisError,
)
from .evaluate import (
    class_relation_holds,
    demo_satisfies_clause,
    demo_satisfies_spec,
    explain,
    object_satisfies_atom,
    object_satisfies_clause,
)
from .formula import Atom, Clause, RelationKind, Spec, parse_spec, print_spec, spec_implies_clause, subsumes
from .geometry import (
    DEFAULT_TAU,
    Demonstration,
    Direction,
    ObjectClass,
    SceneObject,
    Space,
    dr_directed,
    ec_directed,
    externally_connected,
    interiors_disjoint,
)
from .inference import (
    InferenceParams,
    InferenceResult,
    clause_accept_probability,
    find_disjunctions,
    infer,
    object_sat_fraction,
    sample_rand_demo,
)
from .synthesis import Infeasible, Inventory, InventoryItem, place, sample_satisfying_set
from .templates import ORIGINAL, RELAXED, RESTRICTIVE, Template, builtin_templates, count_clauses, enumerate_clauses, load_template

__version__ = "0.1.0"

__all__ = [
    "Atom",
    "Clause",
    "DEFAULT_TAU",
    "Demonstration",
    "Direction",
    "DocumentError",
    "EvaluationError",
    "Infeasible",
    "InferenceParams",
    "InferenceResult",
    "Inventory",
    "InventoryItem",
    "MetadataError",
    "NoRelevantObjectsError",
    "ORIGINAL",
    "ObjectClass",
    "ParccError",
    "RELAXED",
    "RESTRICTIVE",
    "RelationKind",
    "SamplingError",
    "SceneObject",
    "Space",
    "Spec",
    "SpecSyntaxError",
    "SynthesisError",
    "Template",
    "builtin_templates",
    "class_relation_holds",
    "clause_accept_probability",
    "count_clauses",
    "demo_satisfies_clause",
    "demo_satisfies_spec",
    "dr_directed",
    "ec_directed",
    "enumerate_clauses",
    "explain",
    "externally_connected",
    "find_disjunctions",
    "infer",
    "interiors_disjoint",
    "load_template",
    "object_sat_fraction",
    "object_satisfies_atom",
    "object_satisfies_clause",
    "parse_spec",
    "place",
    "print_spec",
    "sample_rand_demo",
    "sample_satisfying_set",
    "spec_implies_clause",
    "subsumes",
    "__version__",
]
