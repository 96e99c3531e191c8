"""Exhaustive axiom audits for untrusted matrices.

Unlike the :class:`~indexed_identity.core.FiniteIndexedSystem` constructor,
which raises on the first problem, an audit evaluates every axiom and
reports the lexicographically first counterexample for each failure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .core import ONE, ZERO, FiniteIndexedSystem, common_scale, in_unit_interval, to_rational
from .errors import ShapeError

INDEX_AXIOMS = ("F1", "F2", "F3", "F4", "F5", "F6", "F7")
METRIC_AXIOMS = ("identity", "positivity", "symmetry", "triangle")

STRUCTURAL_NOTES = {
    "F5": "holds structurally: a matrix assigns exactly one index to each pair",
    "F6": "holds structurally: a square matrix assigns an index to every pair",
}

# Past this magnitude the vectorised triangle scan switches to Python ints.
_INT64_SAFE = 2**61


@dataclass(frozen=True)
class CandidateMatrix:
    """Labels and a square rational matrix with no axioms enforced."""

    elements: tuple[str, ...]
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        elements = tuple(self.elements)
        entries = tuple(tuple(to_rational(v) for v in row) for row in self.entries)
        n = len(elements)
        if len(entries) != n or any(len(row) != n for row in entries):
            raise ShapeError(f"candidate matrix must be {n}x{n} to match its labels")
        if len(set(elements)) != n:
            raise ShapeError("candidate labels must be unique")
        for label in elements:
            if not isinstance(label, str):
                raise ShapeError(f"labels must be strings, got {label!r}")
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_system(cls, s: FiniteIndexedSystem) -> "CandidateMatrix":
        return cls(s.elements, s.matrix)

    def complement(self) -> "CandidateMatrix":
        """Entrywise ``1 - x``: indices to distinctions and back."""
        return CandidateMatrix(self.elements, [[ONE - v for v in row] for row in self.entries])

    def to_system(self) -> FiniteIndexedSystem:
        return FiniteIndexedSystem(self.elements, self.entries)


@dataclass(frozen=True)
class Witness:
    labels: tuple[str, ...]
    values: tuple[Fraction, ...]
    detail: str = ""


@dataclass(frozen=True)
class AxiomReport:
    """Per-axiom verdicts; each failed axiom maps to its first witness."""

    kind: str  # "index" or "metric"
    verdicts: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.verdicts.values())

    @property
    def failed(self) -> tuple[str, ...]:
        return tuple(a for a, ok in self.verdicts.items() if not ok)


def _build(kind, axioms, found, notes=None):
    verdicts = {a: a not in found for a in axioms}
    return AxiomReport(kind, verdicts, dict(found), dict(notes or {}))


def _first_triangle_violation(d):
    """First (i, j, k) in lexicographic order with d[i][j] + d[j][k] < d[i][k]."""
    n = len(d)
    if n == 0:
        return None
    ints, _ = common_scale(d)
    big = max(abs(v) for row in ints for v in row)
    arr = np.array(ints, dtype=np.int64 if big < _INT64_SAFE else object)
    bad = arr[:, :, None] + arr[None, :, :] < arr[:, None, :]
    hits = np.argwhere(bad)
    if len(hits) == 0:
        return None
    i, j, k = (int(v) for v in hits[0])
    return i, j, k


def audit(c: CandidateMatrix) -> AxiomReport:
    """Check F1-F7 on a candidate index matrix."""
    labels, m = c.elements, c.entries
    n = len(labels)
    found = {}
    if n == 0:
        found["F1"] = Witness((), (), "the element set is empty")
        return _build("index", INDEX_AXIOMS, found, STRUCTURAL_NOTES)

    for i in range(n):
        for j in range(n):
            if not in_unit_interval(m[i][j]):
                found["F2"] = Witness((labels[i], labels[j]), (m[i][j],),
                                      "index outside [0, 1]")
                break
        if "F2" in found:
            break
    else:
        if all(m[i][i] != ONE for i in range(n)):
            found["F2"] = Witness((), tuple(m[i][i] for i in range(n)),
                                  "1 is not among the indices")

    for i in range(n):
        for j in range(i + 1, n):
            if m[i][j] != m[j][i] and "F3" not in found:
                found["F3"] = Witness((labels[i], labels[j]), (m[i][j], m[j][i]),
                                      "index(a,b) != index(b,a)")

    for i in range(n):
        for j in range(n):
            if "F4" in found:
                break
            if i == j and m[i][i] != ONE:
                found["F4"] = Witness((labels[i], labels[i]), (m[i][i],),
                                      "self-index is not 1")
            elif i != j and m[i][j] == ONE:
                found["F4"] = Witness((labels[i], labels[j]), (m[i][j],),
                                      "distinct elements have index 1")

    dist = c.complement().entries
    hit = _first_triangle_violation(dist)
    if hit is not None:
        i, j, k = hit
        found["F7"] = Witness((labels[i], labels[j], labels[k]),
                              (dist[i][j], dist[j][k], dist[i][k]),
                              "D(a,b) + D(b,c) < D(a,c)")
    return _build("index", INDEX_AXIOMS, found, STRUCTURAL_NOTES)


def audit_metric(m: CandidateMatrix) -> AxiomReport:
    """Check the four metric axioms on a candidate distance matrix."""
    labels, d = m.elements, m.entries
    n = len(labels)
    found = {}
    for i in range(n):
        if d[i][i] != ZERO:
            found["identity"] = Witness((labels[i], labels[i]), (d[i][i],),
                                        "d(a,a) != 0")
            break
    for i in range(n):
        for j in range(n):
            if i != j and d[i][j] <= ZERO and "positivity" not in found:
                found["positivity"] = Witness((labels[i], labels[j]), (d[i][j],),
                                              "d(a,b) <= 0 for a != b")
    for i in range(n):
        for j in range(i + 1, n):
            if d[i][j] != d[j][i] and "symmetry" not in found:
                found["symmetry"] = Witness((labels[i], labels[j]), (d[i][j], d[j][i]),
                                            "d(a,b) != d(b,a)")
    hit = _first_triangle_violation(d)
    if hit is not None:
        i, j, k = hit
        found["triangle"] = Witness((labels[i], labels[j], labels[k]),
                                    (d[i][j], d[j][k], d[i][k]),
                                    "d(a,b) + d(b,c) < d(a,c)")
    return _build("metric", METRIC_AXIOMS, found)

