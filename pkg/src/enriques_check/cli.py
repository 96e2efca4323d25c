"""Command-line front end.

Exit codes: 0 all checks pass, 1 some check failed, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Sequence

from . import catalog
from .diagram import CurveDiagram, Edge
from .tasks import CRITERIA, DIAGRAM_TASKS, TASKS, Subject, TaskResult, matches, run_task

SCHEMA_VERSION = 1


class InputError(ValueError):
    """Unreadable scenario, bad schema or unknown catalog name (exit 2)."""


@dataclass
class Scenario:
    tasks: list[str]
    subject: Subject | None = None
    options: dict[str, dict] = field(default_factory=dict)
    schema_version: int = SCHEMA_VERSION


def diagram_from_json(obj: dict) -> CurveDiagram:
    try:
        labels = tuple(str(v) for v in obj["vertices"])
        edges = tuple(sorted((Edge(*e) for e in obj.get("edges", [])), key=lambda e: (e.i, e.j)))
        return CurveDiagram(labels, edges, tuple(obj.get("self_intersections", ())))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad diagram: {exc}") from None


def diagram_to_json(d: CurveDiagram) -> dict:
    return {
        "vertices": list(d.labels),
        "edges": [[e.i, e.j, e.intersection, e.points] for e in d.edges],
    }


def subject_from_name(name: str) -> Subject:
    try:
        return Subject(name, catalog.get(name))
    except KeyError:
        raise InputError(f"unknown catalog entry {name!r}") from None


def parse_scenario(obj: Any) -> Scenario:
    if not isinstance(obj, dict):
        raise InputError("scenario must be a JSON object")
    unknown_keys = set(obj) - {"schema_version", "diagram", "catalog", "tasks", "options"}
    if unknown_keys:
        raise InputError(f"unknown scenario keys {sorted(unknown_keys)}")
    if obj.get("schema_version") != SCHEMA_VERSION:
        raise InputError(f"schema_version must be {SCHEMA_VERSION}")
    if ("diagram" in obj) == ("catalog" in obj):
        raise InputError("give exactly one of 'diagram' and 'catalog'")
    tasks = obj.get("tasks")
    if not isinstance(tasks, list) or not tasks:
        raise InputError("'tasks' must be a nonempty list")
    bad = [t for t in tasks if t not in TASKS]
    if bad:
        raise InputError(f"unknown tasks {bad}")
    options = obj.get("options", {})
    if not isinstance(options, dict) or any(k not in tasks for k in options):
        raise InputError("'options' must map listed task names to objects")
    if "diagram" in obj:
        subject = Subject("inline", diagram_from_json(obj["diagram"]))
    else:
        subject = subject_from_name(obj["catalog"])
    return Scenario(list(tasks), subject, options)


def load_scenario(path: str) -> Scenario:
    try:
        obj = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read scenario {path!r}: {exc}") from None
    return parse_scenario(obj)


def run_scenario(sc: Scenario) -> dict:
    results = [run_task(t, sc.subject, sc.options.get(t)) for t in sc.tasks]
    return make_report(results, sc.subject)


def make_report(results: Sequence[TaskResult], subject: Subject | None = None) -> dict:
    report = {
        "schema_version": SCHEMA_VERSION,
        "status": "pass" if all(r.passed for r in results) else "fail",
        "tasks": [r.as_dict() for r in results],
    }
    if subject is not None:
        report["subject"] = subject.name
    return report


def _fmt(v: Any) -> str:
    if isinstance(v, list) and v and all(isinstance(x, str) for x in v):
        return "\n      " + "\n      ".join(v)
    return json.dumps(v, sort_keys=True)


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2)
    lines = []
    if "subject" in report:
        lines.append(f"subject: {report['subject']}")
    for t in report["tasks"]:
        lines.append(f"[{t['status'].upper()}] {t['task']}")
        for k in sorted(t["computed"]):
            mark = ""
            if k in t["expected"] and not matches(t["computed"][k], t["expected"][k]):
                mark = f"   (expected {_fmt(t['expected'][k])})"
            lines.append(f"    {k}: {_fmt(t['computed'][k])}{mark}")
        if t.get("note"):
            lines.append(f"    note: {t['note']}")
    lines.append(f"overall: {report['status']}")
    return "\n".join(lines)


def _subject_arg(value: str) -> Subject:
    p = Path(value)
    if value.endswith(".json") or p.is_file():
        try:
            obj = json.loads(p.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot read {value!r}: {exc}") from None
        return Subject(p.stem, diagram_from_json(obj.get("diagram", obj)))
    return subject_from_name(value)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="enriques-check", description=__doc__.splitlines()[0])
    ap.add_argument("--format", choices=("text", "json"), default="text")
    ap.add_argument("--catalog-list", action="store_true", help="list catalog names and exit")
    sub = ap.add_subparsers(dest="command")

    for name in ("classify", "affine", "fibrations", "vinberg", "fixed-locus"):
        p = sub.add_parser(name, help=f"run the {name} task on a catalog name or diagram JSON file")
        p.add_argument("subject")

    p = sub.add_parser("lemma43", help="check every legal fixed locus against the fiber Euler number")
    p.add_argument("types", nargs="*")
    p = sub.add_parser("lefschetz-wild", help="local Lefschetz number of a monomial fixed-point ideal")
    p.add_argument("--ideal", help='exponent pairs as JSON, e.g. "[[2,0],[0,2]]"')
    sub.add_parser("theorem44", help="search invariant half-fiber pairs with fixed Euler total 12")
    p = sub.add_parser("lattice", help="lattice checks")
    p.add_argument("verb", choices=("e10", "isotropic", "glue"))
    for name in ("example1", "example2", "example3"):
        sub.add_parser(name, help=f"numerical checks of blow-up {name}")
    p = sub.add_parser("run", help="run a scenario JSON file, or tasks on a catalog name")
    p.add_argument("scenario")
    p.add_argument("--tasks", nargs="+", help="task names (required with a catalog name)")
    p = sub.add_parser("acceptance", help="run every acceptance criterion")
    p.add_argument("criteria", nargs="*", type=int)
    return ap


def _dispatch(args: argparse.Namespace) -> dict:
    cmd = args.command
    if cmd in DIAGRAM_TASKS or cmd == "affine":
        s = _subject_arg(args.subject)
        return make_report([run_task(cmd, s)], s)
    if cmd == "lemma43":
        for t in args.types:
            if not catalog.is_fiber_name(t):
                raise InputError(f"unknown fiber type {t!r}")
        return make_report([run_task("lemma43", opts={"types": args.types} if args.types else {})])
    if cmd == "lefschetz-wild":
        opts = {}
        if args.ideal:
            try:
                opts["ideal"] = json.loads(args.ideal)
            except json.JSONDecodeError as exc:
                raise InputError(f"bad --ideal: {exc}") from None
        return make_report([run_task("lefschetz-wild", opts=opts)])
    if cmd == "lattice":
        return make_report([run_task(f"lattice-{args.verb}")])
    if cmd in ("theorem44", "example1", "example2", "example3"):
        return make_report([run_task(cmd)])
    if cmd == "run":
        if Path(args.scenario).is_file() or args.scenario.endswith(".json"):
            sc = load_scenario(args.scenario)
            if args.tasks:
                raise InputError("--tasks is only for catalog names")
        else:
            if not args.tasks:
                raise InputError("--tasks is required with a catalog name")
            sc = parse_scenario({"schema_version": SCHEMA_VERSION, "catalog": args.scenario, "tasks": args.tasks})
        return run_scenario(sc)
    if cmd == "acceptance":
        nums = args.criteria or sorted(CRITERIA)
        if any(n not in CRITERIA for n in nums):
            raise InputError(f"criteria are numbered {min(CRITERIA)}..{max(CRITERIA)}")
        return make_report([run_task(CRITERIA[n]) for n in nums])
    raise InputError("no command given")


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.catalog_list:
        print("\n".join(catalog.names()))
        return 0
    if args.command is None:
        ap.print_usage(sys.stderr)
        return 2
    try:
        report = _dispatch(args)
    except ValueError as exc:  # InputError, or a task rejecting its input
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(render(report, args.format))
    return 0 if report["status"] == "pass" else 1


if __name__ == "__main__":
    sys.exit(main())
