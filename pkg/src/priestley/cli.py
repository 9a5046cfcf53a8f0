"""Command line: parse an input document, run check suites, emit reports and DOT diagrams.

Exit codes: 0 when every check passes, 1 when a check fails, 2 for input
or usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

import jsonschema
import numpy as np

from . import suites
from ._bits import members
from .duality import dual_space
from .errors import (
    BoundExceeded,
    CycleDetected,
    NotALattice,
    NotATopology,
    ParseError,
    PriestleyError,
    UnsupportedTarget,
)
from .lattice import LATTICE_BOUND, SCOTT_BOUND, build_lattice, downset_lattice, require_distributive
from .poset import FinPoset, build_poset
from .topspace import (
    FiniteTopSpace,
    alexandrov,
    compact_saturated,
    frame_points_finite,
    open_frame,
    specialization,
)

SCHEMA_VERSION = 1

_NAMES = {"type": "array", "items": {"type": "string"}, "minItems": 1, "uniqueItems": True}
_PAIRS = {"type": "array", "items": {"type": "array", "items": {"type": "string"},
                                     "minItems": 2, "maxItems": 2}}
_REF = {"anyOf": [{"type": "integer", "minimum": 0}, {"type": "string"}]}

INPUT_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "properties": {
        "schemaVersion": {"const": SCHEMA_VERSION},
        "poset": {"type": "object", "additionalProperties": False, "required": ["elements", "covers"],
                  "properties": {"elements": _NAMES, "covers": _PAIRS}},
        "lattice": {"type": "object", "additionalProperties": False, "required": ["elements", "order"],
                    "properties": {"elements": _NAMES, "order": _PAIRS}},
        "space": {"type": "object", "additionalProperties": False, "required": ["points", "opens"],
                  "properties": {
                      "points": {"anyOf": [{"type": "integer", "minimum": 0}, _NAMES]},
                      "opens": {"type": "array", "items": {"type": "array", "items": _REF}},
                  }},
        "options": {"type": "object", "additionalProperties": False, "properties": {
            "bounds": {"type": "object", "additionalProperties": False, "properties": {
                "maxSize": {"type": "integer", "minimum": 1},
                "scott": {"type": "integer", "minimum": 0},
            }},
            "seed": {"type": "integer"},
        }},
    },
    "oneOf": [{"required": ["poset"]}, {"required": ["lattice"]}, {"required": ["space"]}],
}


@dataclass
class InputDocument:
    """A parsed input: ``kind`` is ``poset``, ``lattice`` or ``space``; ``value`` the built object."""

    kind: str
    value: object
    options: dict = field(default_factory=dict)

    @property
    def max_size(self):
        return self.options.get("bounds", {}).get("maxSize")

    @property
    def scott_bound(self):
        return self.options.get("bounds", {}).get("scott", SCOTT_BOUND)

    @property
    def seed(self):
        return self.options.get("seed", 0)


def _line_of(text, path):
    """Best-effort line number for a JSON path: the line where its last key appears."""
    keys = [p for p in path if isinstance(p, str)]
    if not keys:
        return 1
    needle = json.dumps(keys[-1])
    for i, line in enumerate(text.splitlines(), 1):
        if needle in line:
            return i
    return None


def parse_input(text, max_size=None):
    """Strictly parse and build an input document; raises :class:`ParseError`.

    ``max_size`` (or ``options.bounds.maxSize``) bounds the number of
    elements or points.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.lineno, exc.msg) from None
    try:
        jsonschema.validate(raw, INPUT_SCHEMA)
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise ParseError(_line_of(text, list(exc.absolute_path)), f"{where}: {exc.message}") from None
    options = raw.get("options", {})
    limit = max_size or options.get("bounds", {}).get("maxSize") or LATTICE_BOUND
    kind = next(k for k in ("poset", "lattice", "space") if k in raw)
    body = raw[kind]
    try:
        if kind == "space":
            value = _build_space(body, limit)
        else:
            names = body["elements"]
            if len(names) > limit:
                raise BoundExceeded(kind, len(names), limit)
            pairs = _resolve(names, body["covers" if kind == "poset" else "order"], kind)
            P = build_poset(len(names), pairs, names)
            value = P if kind == "poset" else build_lattice(P)
    except CycleDetected as exc:
        raise ParseError(_line_of(text, [kind]), f"{kind} order has a cycle through {list(exc.cycle)}") from None
    except (NotALattice, NotATopology) as exc:
        raise ParseError(_line_of(text, [kind]), str(exc)) from None
    return InputDocument(kind, value, options)


def _resolve(names, pairs, kind):
    where = {n: i for i, n in enumerate(names)}
    out = []
    for a, b in pairs:
        for x in (a, b):
            if x not in where:
                raise ParseError(None, f"{kind}: unknown element {x!r}")
        out.append((where[a], where[b]))
    return out


def _build_space(body, limit):
    pts = body["points"]
    labels = [str(i) for i in range(pts)] if isinstance(pts, int) else list(pts)
    if len(labels) > limit:
        raise BoundExceeded("space", len(labels), limit)
    where = {x: i for i, x in enumerate(labels)}
    opens = []
    for u in body["opens"]:
        m = 0
        for x in u:
            i = x if isinstance(x, int) and not isinstance(pts, list) else where.get(x)
            if i is None or i >= len(labels):
                raise ParseError(None, f"space: unknown point {x!r}")
            m |= 1 << i
        opens.append(m)
    return FiniteTopSpace(len(labels), opens, labels)


def run_check_suite(doc, suite="all"):
    """Run the ``dual``, ``hm`` or ``all`` suite on a parsed document and return the report."""
    if suite not in suites.SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    sb = doc.scott_bound
    if doc.kind == "lattice":
        checks, summary = suites.lattice_checks(doc.value, suite, sb)
    elif doc.kind == "poset":
        checks, summary = suites.poset_checks(doc.value, alexandrov(doc.value), suite, sb)
    else:
        checks, summary = suites.space_checks(doc.value, suite, sb)
    report = {"command": "check", "suite": suite, "input": doc.kind, "summary": summary, "checks": checks}
    return suites.finish_report(report, checks)


def run_fixtures(seed=0):
    return suites.run_fixtures(seed)


# -- emission ----------------------------------------------------------------------

TARGETS = ("dual", "space", "lattice", "ksat", "report")


def _base_lattice(doc):
    if doc.kind == "lattice":
        return require_distributive(doc.value)
    if doc.kind == "poset":
        return downset_lattice(doc.value)
    return open_frame(doc.value)


def _base_space(doc):
    if doc.kind == "space":
        return doc.value
    if doc.kind == "poset":
        return alexandrov(doc.value)
    return frame_points_finite(doc.value)


def dual_document(doc):
    X = dual_space(_base_lattice(doc))
    P = X.order
    return {
        "schemaVersion": SCHEMA_VERSION,
        "command": "dual",
        "points": list(P.labels),
        "covers": [[P.labels[i], P.labels[j]] for i, j in P.covers()],
        "Y": [P.labels[i] for i in members(X.Y)],
        "sigma": {X.base.labels[a]: [P.labels[i] for i in members(X.sigma[a])] for a in range(X.base.n)},
    }


def space_document(doc):
    S = _base_space(doc)
    bad = suites.sobriety_violation(S)
    out = {
        "schemaVersion": SCHEMA_VERSION,
        "command": "space",
        "points": list(S.labels),
        "opens": [[S.labels[x] for x in members(u)] for u in S.opens],
        "sober": bad is None,
    }
    try:
        P = specialization(S)
        out["specialization_covers"] = [[P.labels[i], P.labels[j]] for i, j in P.covers()]
        out["compact_saturated"] = suites.ksat_sets(S)
    except PriestleyError as exc:
        out["t0"] = False
        out["error"] = str(exc)
    return out


def hasse_dot(name, P):
    """DOT text for the Hasse diagram of a poset, edges pointing upwards."""
    lines = [f"digraph {json.dumps(name)} {{", "  rankdir=BT;"]
    for i, lab in enumerate(P.labels):
        lines.append(f"  n{i} [label={json.dumps(lab, ensure_ascii=False)}];")
    for i, j in P.covers():
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _ksat_poset(S):
    ks = compact_saturated(S)
    leq = [[a & ~b == 0 for b in ks] for a in ks]
    labels = ["{" + ",".join(S.labels[x] for x in members(k)) + "}" for k in ks]
    return FinPoset(np.array(leq, dtype=bool).reshape(len(ks), len(ks)), labels)


def emit(doc, fmt="json", target="report", suite="all"):
    """Render ``target`` for a parsed document as JSON or DOT text."""
    if target not in TARGETS:
        raise UnsupportedTarget(f"unknown target {target!r}")
    if fmt not in ("json", "dot"):
        raise UnsupportedTarget(f"unknown format {fmt!r}")
    if fmt == "json":
        if target == "report":
            body = run_check_suite(doc, suite)
        elif target == "dual":
            body = dual_document(doc)
        elif target in ("space", "ksat"):
            body = space_document(doc)
        else:
            L = _base_lattice(doc)
            body = {"schemaVersion": SCHEMA_VERSION, "command": "lattice", "elements": list(L.labels),
                    "covers": [[L.labels[i], L.labels[j]] for i, j in L.poset.covers()]}
        return dumps(body)
    if target == "report":
        raise UnsupportedTarget("reports have no DOT rendering")
    if target == "dual":
        return hasse_dot("dual", dual_space(_base_lattice(doc)).order)
    if target == "lattice":
        return hasse_dot("lattice", _base_lattice(doc).poset)
    if target == "space":
        return hasse_dot("specialization", specialization(_base_space(doc)))
    return hasse_dot("ksat", _ksat_poset(_base_space(doc)))


def dumps(obj):
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


# -- entry point -------------------------------------------------------------------

def _parser():
    ap = argparse.ArgumentParser(prog="priestley", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, formats=("json",), with_input=True):
        if with_input:
            p.add_argument("input", nargs="?", default="-", help="input JSON file, or - for stdin")
        p.add_argument("--format", choices=formats, default="json")
        p.add_argument("--max-size", type=int, default=None, help="largest accepted element/point count")
        p.add_argument("--seed", type=int, default=None, help="seed for sampled checks")
        p.add_argument("--timings", action="store_true", help="add wall-clock timings (breaks byte-stability)")
        return p

    c = common(sub.add_parser("check", help="run a check suite on an input document"))
    c.add_argument("--suite", choices=suites.SUITES, default="all")
    common(sub.add_parser("dual", help="Priestley dual of the input's lattice"), ("json", "dot"))
    common(sub.add_parser("space", help="the input's space: specialization order and compact saturated sets"),
           ("json", "dot"))
    common(sub.add_parser("fixtures", help="invariant suite of the symbolic frames"), with_input=False)
    e = common(sub.add_parser("emit", help="render a target as JSON or DOT"), ("json", "dot"))
    e.add_argument("--target", choices=TARGETS, default="report")
    e.add_argument("--suite", choices=suites.SUITES, default="all")
    return ap


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def main(argv=None, out=None):
    out = out or sys.stdout
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    started = time.perf_counter()
    try:
        if args.command == "fixtures":
            report = run_fixtures(args.seed or 0)
            text, status = None, report["status"]
        else:
            doc = parse_input(_read(args.input), args.max_size)
            if args.seed is not None:
                doc.options["seed"] = args.seed
            if args.command == "check":
                report = run_check_suite(doc, args.suite)
                text, status = None, report["status"]
            else:
                target = {"dual": "dual", "space": "space"}.get(args.command, getattr(args, "target", None))
                text = emit(doc, args.format, target, getattr(args, "suite", "all"))
                status = json.loads(text).get("status", "pass") if args.format == "json" else "pass"
                report = None
    except (ParseError, BoundExceeded, UnsupportedTarget, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PriestleyError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if report is not None:
        if args.timings:
            report["timings"] = {"seconds": round(time.perf_counter() - started, 3)}
        text = dumps(report)
    out.write(text)
    return 0 if status == "pass" else 1


def main_exit():  # pragma: no cover - console script wrapper
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    main_exit()
