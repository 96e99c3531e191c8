"""Canonical JSON documents for every domain type.

A document is ``{"kind": ..., "version": "1", "payload": {...}}``. Rationals
travel as strings (``"2/3"``, ``"1"``, or a finite decimal such as
``"0.25"`` on input) so no binary float ever touches them. Serialized text
has sorted keys, no insignificant whitespace and a trailing newline, which
makes it byte-stable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from pathlib import Path
from typing import Any

from .core import FiniteIndexedSystem, in_unit_interval, to_rational
from .errors import DocumentError, DocumentSyntaxError, RangeError, SchemaError
from .ifuzzy import IFuzzySet
from .indexing import PredicateExtension
from .metric import DistanceMatrix
from .profile import PredicateTable, build_system
from .verify import AxiomReport, CandidateMatrix, Witness

VERSION = "1"
KINDS = ("predicate-table", "index-system", "distance-matrix", "ifuzzy-set",
         "extension", "report")


@dataclass(frozen=True)
class Document:
    kind: str
    payload: Any
    version: str = VERSION

    @classmethod
    def of(cls, payload) -> "Document":
        """Wrap a domain object, inferring the document kind from its type."""
        for kind, types in _KIND_TYPES.items():
            if isinstance(payload, types):
                return cls(kind, payload)
        raise TypeError(f"no document kind for {type(payload).__name__}")


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))


# -- serialization -----------------------------------------------------------

def _matrix_out(rows):
    return [[format_rational(v) for v in row] for row in rows]


def _system_out(s):
    return {"elements": list(s.elements), "matrix": _matrix_out(_rows(s))}


def _rows(obj):
    if isinstance(obj, FiniteIndexedSystem):
        return obj.matrix
    if isinstance(obj, DistanceMatrix):
        return obj.d
    return obj.entries


def _payload_out(kind, p):
    if kind == "predicate-table":
        return {"objects": list(p.objects), "predicates": list(p.predicates),
                "truth": [list(row) for row in p.truth]}
    if kind in ("index-system", "distance-matrix"):
        return _system_out(p)
    if kind == "ifuzzy-set":
        return {"system": _system_out(p.base),
                "grades": {k: format_rational(v) for k, v in p.grades.items()}}
    if kind == "extension":
        return {"system": _system_out(p.base), "members": list(p.members)}
    if kind == "report":
        return {
            "family": p.kind,
            "verdicts": {a: "pass" if ok else "fail" for a, ok in p.verdicts.items()},
            "witnesses": {a: {"labels": list(w.labels),
                              "values": [format_rational(v) for v in w.values],
                              "detail": w.detail}
                          for a, w in p.witnesses.items()},
            "notes": dict(p.notes),
        }
    raise SchemaError(f"unknown kind {kind!r}")


def to_json(doc: Document) -> dict:
    return {"kind": doc.kind, "version": doc.version,
            "payload": _payload_out(doc.kind, doc.payload)}


def serialize(doc: Document, pretty: bool = False) -> str:
    if pretty:
        text = json.dumps(to_json(doc), sort_keys=True, indent=2, ensure_ascii=False)
    else:
        text = json.dumps(to_json(doc), sort_keys=True, separators=(",", ":"),
                          ensure_ascii=False)
    return text + "\n"


# -- parsing -----------------------------------------------------------------

class _Reader:
    """Schema checks that remember the JSON path for error messages."""

    def __init__(self, source, base_dir, strict):
        self.source = source
        self.base_dir = Path(base_dir) if base_dir is not None else Path.cwd()
        self.strict = strict

    def fail(self, cls, msg):
        raise cls(msg, self.source)

    def obj(self, value, path, required, optional=()):
        if not isinstance(value, dict):
            self.fail(SchemaError, f"{path}: expected an object")
        for key in required:
            if key not in value:
                self.fail(SchemaError, f"{path}: missing field {key!r}")
        for key in value:
            if key not in required and key not in optional:
                self.fail(SchemaError, f"{path}: unexpected field {key!r}")
        return value

    def mapping(self, value, path):
        if not isinstance(value, dict):
            self.fail(SchemaError, f"{path}: expected an object")
        return value

    def array(self, value, path):
        if not isinstance(value, list):
            self.fail(SchemaError, f"{path}: expected an array")
        return value

    def string(self, value, path):
        if not isinstance(value, str):
            self.fail(SchemaError, f"{path}: expected a string")
        return value

    def strings(self, value, path):
        return [self.string(v, f"{path}[{i}]") for i, v in enumerate(self.array(value, path))]

    def boolean(self, value, path):
        if not isinstance(value, bool):
            self.fail(SchemaError, f"{path}: expected true or false, got {value!r}")
        return value

    def rational(self, value, path, unit=False):
        if isinstance(value, bool) or not isinstance(value, (str, int, Decimal)):
            self.fail(SchemaError, f"{path}: expected a rational string")
        try:
            q = to_rational(value)
        except (ValueError, TypeError) as exc:
            self.fail(SchemaError, f"{path}: {exc}")
        if unit and not in_unit_interval(q):
            self.fail(RangeError, f"{path}: {q} is outside [0, 1]")
        return q

    def matrix(self, value, path, unit=False):
        rows = self.array(value, path)
        return [[self.rational(v, f"{path}[{i}][{j}]", unit)
                 for j, v in enumerate(self.array(row, f"{path}[{i}]"))]
                for i, row in enumerate(rows)]

    # kind-specific payloads

    def table(self, p, path):
        p = self.obj(p, path, ("objects", "predicates", "truth"))
        truth = [[self.boolean(v, f"{path}.truth[{i}][{j}]")
                  for j, v in enumerate(self.array(row, f"{path}.truth[{i}]"))]
                 for i, row in enumerate(self.array(p["truth"], f"{path}.truth"))]
        return PredicateTable(self.strings(p["objects"], f"{path}.objects"),
                              self.strings(p["predicates"], f"{path}.predicates"), truth)

    def system(self, p, path, strict=None):
        strict = self.strict if strict is None else strict
        p = self.obj(p, path, ("elements", "matrix"))
        elements = self.strings(p["elements"], f"{path}.elements")
        rows = self.matrix(p["matrix"], f"{path}.matrix", unit=strict)
        if strict:
            return FiniteIndexedSystem(elements, rows)
        return CandidateMatrix(elements, rows)

    def distances(self, p, path):
        p = self.obj(p, path, ("elements", "matrix"))
        elements = self.strings(p["elements"], f"{path}.elements")
        rows = self.matrix(p["matrix"], f"{path}.matrix")
        if self.strict:
            return DistanceMatrix(elements, rows)
        return CandidateMatrix(elements, rows)

    def referenced(self, value, path, kind):
        """Inline payload, inline document, or a path to a document file."""
        if isinstance(value, str):
            target = self.base_dir / value
            try:
                text = target.read_text(encoding="utf-8")
            except OSError as exc:
                self.fail(DocumentError, f"{path}: cannot read {value!r}: {exc.strerror}")
            doc = parse(text, base_dir=target.parent, source=str(target))
            if doc.kind != kind:
                self.fail(SchemaError, f"{path}: {value!r} is a {doc.kind}, expected {kind}")
            return doc.payload
        if isinstance(value, dict) and "kind" in value:
            doc = _Reader(self.source, self.base_dir, True).document(value, path)
            if doc.kind != kind:
                self.fail(SchemaError, f"{path}: inline document is a {doc.kind}, "
                                       f"expected {kind}")
            return doc.payload
        if kind == "index-system":
            return self.system(value, path, strict=True)
        return self.table(value, path)

    def ifuzzy(self, p, path):
        p = self.obj(p, path, ("system", "grades"))
        base = self.referenced(p["system"], f"{path}.system", "index-system")
        grades = self.mapping(p["grades"], f"{path}.grades")
        values = {k: self.rational(v, f"{path}.grades.{k}", unit=True)
                  for k, v in grades.items()}
        return IFuzzySet(base, values)

    def extension(self, p, path):
        if isinstance(p, dict) and "table" in p:
            p = self.obj(p, path, ("table", "predicate"))
            table = self.referenced(p["table"], f"{path}.table", "predicate-table")
            predicate = self.string(p["predicate"], f"{path}.predicate")
            return PredicateExtension.from_table(build_system(table), table, predicate)
        p = self.obj(p, path, ("system", "members"))
        base = self.referenced(p["system"], f"{path}.system", "index-system")
        return PredicateExtension(base, tuple(self.strings(p["members"], f"{path}.members")))

    def report(self, p, path):
        p = self.obj(p, path, ("family", "verdicts", "witnesses", "notes"))
        family = self.string(p["family"], f"{path}.family")
        if family not in ("index", "metric"):
            self.fail(SchemaError, f"{path}.family: expected 'index' or 'metric'")
        verdicts = {}
        for axiom, v in self.mapping(p["verdicts"], f"{path}.verdicts").items():
            if v not in ("pass", "fail"):
                self.fail(SchemaError, f"{path}.verdicts.{axiom}: expected 'pass' or 'fail'")
            verdicts[axiom] = v == "pass"
        witnesses = {}
        for axiom, w in self.mapping(p["witnesses"], f"{path}.witnesses").items():
            wp = f"{path}.witnesses.{axiom}"
            w = self.obj(w, wp, ("labels", "values", "detail"))
            values = tuple(self.rational(v, f"{wp}.values[{i}]")
                           for i, v in enumerate(self.array(w["values"], f"{wp}.values")))
            witnesses[axiom] = Witness(tuple(self.strings(w["labels"], f"{wp}.labels")),
                                       values, self.string(w["detail"], f"{wp}.detail"))
        for axiom, ok in verdicts.items():
            if ok == (axiom in witnesses):
                self.fail(SchemaError, f"{path}: axiom {axiom} must have a witness "
                                       "exactly when it fails")
        extra = set(witnesses) - set(verdicts)
        if extra:
            self.fail(SchemaError, f"{path}.witnesses: no verdict for {sorted(extra)[0]!r}")
        notes = {k: self.string(v, f"{path}.notes.{k}")
                 for k, v in self.mapping(p["notes"], f"{path}.notes").items()}
        return AxiomReport(family, verdicts, witnesses, notes)

    def document(self, raw, path="$"):
        raw = self.obj(raw, path, ("kind", "version", "payload"))
        kind = raw["kind"]
        if kind not in KINDS:
            self.fail(SchemaError, f"{path}.kind: unknown kind {kind!r}")
        if raw["version"] != VERSION:
            self.fail(SchemaError, f"{path}.version: unsupported version {raw['version']!r}")
        ppath = f"{path}.payload"
        payload = raw["payload"]
        if kind == "predicate-table":
            value = self.table(payload, ppath)
        elif kind == "index-system":
            value = self.system(payload, ppath)
        elif kind == "distance-matrix":
            value = self.distances(payload, ppath)
        elif kind == "ifuzzy-set":
            value = self.ifuzzy(payload, ppath)
        elif kind == "extension":
            value = self.extension(payload, ppath)
        else:
            value = self.report(payload, ppath)
        return Document(kind, value, VERSION)


def _reject_constant(name):
    raise ValueError(f"non-finite number {name}")


def parse(text: str, *, base_dir=None, strict: bool = True, source: str | None = None
          ) -> Document:
    """Parse document text.

    With ``strict=False`` index systems and distance matrices come back as
    unvalidated :class:`CandidateMatrix` payloads, ready for auditing.
    ``base_dir`` resolves file references (defaults to the working directory).
    """
    try:
        raw = json.loads(text, parse_float=Decimal, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise DocumentSyntaxError(exc.msg, exc.lineno, exc.colno, source) from None
    except ValueError as exc:
        raise SchemaError(str(exc), source) from None
    return _Reader(source, base_dir, strict).document(raw)


def load(path, *, strict: bool = True) -> Document:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(f"cannot read: {exc.strerror}", str(path)) from None
    return parse(text, base_dir=path.parent, strict=strict, source=str(path))


_KIND_TYPES = {
    "predicate-table": (PredicateTable,),
    "index-system": (FiniteIndexedSystem,),
    "distance-matrix": (DistanceMatrix,),
    "ifuzzy-set": (IFuzzySet,),
    "extension": (PredicateExtension,),
    "report": (AxiomReport,),
}
