"""Command line interface.

Subcommands:

* ``check``          evaluate a rule file against one scene
* ``infer``          learn a rule file from a directory of scenes
* ``sample-random``  draw randomized comparison scenes from demonstrations
* ``place``          synthesize a scene satisfying a rule file
* ``enumerate``      list or count the clauses a template generates
* ``serve``          run the HTTP service

Exit codes: 0 success, 1 rule not satisfied or placement infeasible,
2 invalid input (syntax, schema, metadata), 3 runtime failure.
"""

from __future__ import annotations

import argparse
import glob
import json
import os
import sys

import numpy as np

from . import __version__
from .documents import (
    demo_to_json,
    dumps_canonical,
    load_demo,
    load_inventory,
    load_spec_file,
    save_demo,
    save_spec_file,
)
from .errors import (
    DocumentError,
    EvaluationError,
    MetadataError,
    NoRelevantObjectsError,
    SamplingError,
    SpecSyntaxError,
    SynthesisError,
)
from .evaluate import explain
from .geometry import DEFAULT_TAU, Demonstration
from .inference import InferenceParams, check_consistent_metadata, infer, sample_rand_demo
from .synthesis import DEFAULT_BUDGET, Infeasible, place
from .templates import count_clauses, enumerate_clauses, load_template

_VALIDATION_ERRORS = (DocumentError, SpecSyntaxError, MetadataError)
_RUNTIME_ERRORS = (EvaluationError, NoRelevantObjectsError, SamplingError, SynthesisError)


def _error(args: argparse.Namespace, exc: Exception, code: int) -> int:
    if getattr(args, "json", False):
        payload: dict = {"error": {"type": type(exc).__name__, "message": str(exc)}}
        if isinstance(exc, DocumentError):
            payload["error"]["path"] = exc.path
        if isinstance(exc, SpecSyntaxError):
            payload["error"]["line"] = exc.line
            payload["error"]["column"] = exc.column
        print(json.dumps(payload), file=sys.stderr)
    else:
        print(f"error: {exc}", file=sys.stderr)
    return code


def _run(args: argparse.Namespace, fn) -> int:
    try:
        return fn(args)
    except _VALIDATION_ERRORS as exc:
        return _error(args, exc, 2)
    except _RUNTIME_ERRORS as exc:
        return _error(args, exc, 3)
    except OSError as exc:
        return _error(args, exc, 3)


def _load_demo_dir(path: str) -> list[Demonstration]:
    files = sorted(glob.glob(os.path.join(path, "*.json")))
    if not files:
        raise DocumentError(f"no .json scene files found in {path!r}")
    return [load_demo(f) for f in files]


def _cmd_check(args: argparse.Namespace) -> int:
    spec = load_spec_file(args.spec)
    demo = load_demo(args.demo)
    reports = explain(spec, demo, tau=args.tau)
    satisfied = not reports
    if args.json:
        print(
            dumps_canonical(
                {"satisfied": satisfied, "violations": [r.to_json() for r in reports]}
            ),
            end="",
        )
    elif satisfied:
        print(f"satisfied: all {len(spec)} clauses hold")
    else:
        print(f"unsatisfied: {len(reports)} of {len(spec)} clauses fail")
        for r in reports:
            print(f"  {r.clause}")
            for v in r.violations:
                atoms = ", ".join(str(a) for a in v.failed_atoms)
                print(f"    {v.object_id}: fails {atoms}")
    return 0 if satisfied else 1


def _cmd_infer(args: argparse.Namespace) -> int:
    demos = _load_demo_dir(args.demos)
    check_consistent_metadata(demos)
    template = load_template(args.template, max_len=args.max_len)
    params = InferenceParams(
        p_c=args.pc, epsilon=args.eps, k_r=args.kr, seed=args.seed
    )
    result = infer(demos, template, params, tau=args.tau)
    text = "\n".join(str(c) for c in result.spec)
    if args.out:
        save_spec_file(result.spec, args.out)
    else:
        print(text)
    if args.report:
        report = {
            "schema_version": 1,
            "params": params.to_json(),
            "template": template.to_descriptor(),
            "demos": len(demos),
            "enumerated": result.enumerated,
            "checked": result.checked,
            "clauses": [r.to_json() for r in result.reports],
            "spec": [str(c) for c in result.spec],
        }
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(dumps_canonical(report))
    if args.out and not args.json:
        accepted = len(result.spec)
        print(
            f"kept {accepted} of {len(result.reports)} candidate clauses "
            f"({result.enumerated} enumerated)",
            file=sys.stderr,
        )
    return 0


def _cmd_sample_random(args: argparse.Namespace) -> int:
    demos = _load_demo_dir(args.demos)
    check_consistent_metadata(demos)
    rng = np.random.default_rng(args.seed)
    os.makedirs(args.out_dir, exist_ok=True)
    width = max(3, len(str(args.n - 1)))
    for i in range(args.n):
        scene = sample_rand_demo(demos, rng)
        path = os.path.join(args.out_dir, f"rand_{i:0{width}d}.json")
        save_demo(scene, path)
        print(path)
    return 0


def _cmd_place(args: argparse.Namespace) -> int:
    spec = load_spec_file(args.spec)
    inventory = load_inventory(args.inventory)
    rng = np.random.default_rng(args.seed)
    result = place(spec, inventory, rng, tau=args.tau, budget=args.budget)
    if isinstance(result, Infeasible):
        if args.json:
            print(
                dumps_canonical(
                    {
                        "placed": False,
                        "proven": result.proven,
                        "reason": result.reason,
                        "best_satisfied": result.best_satisfied,
                        "clauses_total": result.clauses_total,
                    }
                ),
                end="",
            )
        else:
            kind = "proven infeasible" if result.proven else "no placement found"
            print(f"{kind}: {result.reason}", file=sys.stderr)
            print(
                f"best attempt satisfied {result.best_satisfied} of "
                f"{result.clauses_total} clauses",
                file=sys.stderr,
            )
        return 1
    if args.out:
        save_demo(result, args.out)
        if not args.json:
            print(args.out)
    else:
        print(dumps_canonical(demo_to_json(result)), end="")
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    template = load_template(args.template, max_len=args.max_len)
    classes = tuple(c.strip() for c in args.classes.split(",") if c.strip())
    if not classes:
        raise DocumentError("no class names given")
    if args.count_only:
        counts = count_clauses(template, classes)
        for n in sorted(counts):
            print(f"{n}: {counts[n]}")
        print(f"total: {sum(counts.values())}")
        return 0
    for n in range(1, template.max_len + 1):
        for clause in enumerate_clauses(template, classes, n):
            print(clause)
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(frontend_dir=args.frontend)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parcc",
        description="Directed region-connection rules over rectangles: "
        "check, learn, sample, and synthesize scenes.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="machine readable output")

    def add_tau(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--tau", type=float, default=DEFAULT_TAU, help="contact tolerance (default %(default)s)"
        )

    p = sub.add_parser("check", help="evaluate a rule file against one scene")
    p.add_argument("--spec", required=True, help="rule file")
    p.add_argument("--demo", required=True, help="scene JSON file")
    add_tau(p)
    add_json(p)
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("infer", help="learn a rule file from a directory of scenes")
    p.add_argument("--demos", required=True, help="directory of scene JSON files")
    p.add_argument("--template", default="original", help="template name or descriptor file")
    p.add_argument("--max-len", type=int, default=None, help="override template clause length")
    p.add_argument("--pc", type=float, default=0.05, help="acceptance threshold (default %(default)s)")
    p.add_argument("--kr", type=int, default=100, help="randomized comparison scenes (default %(default)s)")
    p.add_argument("--eps", type=float, default=0.01, help="probability floor (default %(default)s)")
    p.add_argument("--seed", type=int, default=None, help="random seed")
    p.add_argument("--out", default=None, help="write the learned rules to this file")
    p.add_argument("--report", default=None, help="write a JSON acceptance report to this file")
    add_tau(p)
    add_json(p)
    p.set_defaults(fn=_cmd_infer)

    p = sub.add_parser("sample-random", help="draw randomized comparison scenes")
    p.add_argument("--demos", required=True, help="directory of scene JSON files")
    p.add_argument("-n", type=int, default=10, help="number of scenes (default %(default)s)")
    p.add_argument("--seed", type=int, default=None, help="random seed")
    p.add_argument("--out-dir", required=True, help="directory for the sampled scenes")
    add_json(p)
    p.set_defaults(fn=_cmd_sample_random)

    p = sub.add_parser("place", help="synthesize a scene satisfying a rule file")
    p.add_argument("--spec", required=True, help="rule file")
    p.add_argument("--inventory", required=True, help="inventory JSON file")
    p.add_argument("--seed", type=int, default=None, help="random seed")
    p.add_argument(
        "--budget", type=int, default=DEFAULT_BUDGET,
        help="candidate evaluation budget (default %(default)s)",
    )
    p.add_argument("--out", default=None, help="write the scene to this file")
    add_tau(p)
    add_json(p)
    p.set_defaults(fn=_cmd_place)

    p = sub.add_parser("enumerate", help="list or count the clauses a template generates")
    p.add_argument("--template", default="original", help="template name or descriptor file")
    p.add_argument("--classes", required=True, help="comma separated class names")
    p.add_argument("--max-len", type=int, default=None, help="override template clause length")
    p.add_argument("--count-only", action="store_true", help="print only the total count")
    add_json(p)
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--frontend", default=None, help="directory of static files to serve at /")
    p.set_defaults(fn=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return _run(args, args.fn)


if __name__ == "__main__":
    sys.exit(main())
