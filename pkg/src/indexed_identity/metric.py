"""Correspondence between indexed systems and finite metric spaces.

A system's distinctions ``1 - r`` form a metric bounded by 1. Conversely any
metric ``d`` becomes a system once squashed into ``[0, 1)`` by
``x / (1 + x)``, which is monotone and subadditive and so keeps the
triangle inequality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import ONE, ZERO, FiniteIndexedSystem, common_scale, to_rational
from .errors import IndexedSystemError, MetricViolation, ShapeError, UnknownLabelError


@dataclass(frozen=True)
class DistanceMatrix:
    """A validated finite metric: labels plus exact pairwise distances."""

    elements: tuple[str, ...]
    d: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        elements = tuple(self.elements)
        if not elements:
            raise IndexedSystemError("a metric space needs at least one point")
        if len(set(elements)) != len(elements):
            raise IndexedSystemError("duplicate point labels")
        rows = tuple(tuple(to_rational(v) for v in row) for row in self.d)
        n = len(elements)
        if len(rows) != n or any(len(row) != n for row in rows):
            raise ShapeError(f"distance matrix must be {n}x{n}")
        witness = first_metric_violation(elements, rows)
        if witness is not None:
            axiom, labels, message = witness
            raise MetricViolation(axiom, message, labels)
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "d", rows)

    def distance(self, a: str, b: str) -> Fraction:
        pos = {label: i for i, label in enumerate(self.elements)}
        for label in (a, b):
            if label not in pos:
                raise UnknownLabelError(label, "point")
        return self.d[pos[a]][pos[b]]


def first_metric_violation(elements, rows):
    """Return ``(axiom, labels, message)`` for the first broken metric axiom, else None.

    Pairs are scanned in row-major order, then triples lexicographically.
    """
    n = len(elements)
    for i in range(n):
        if rows[i][i] != ZERO:
            return ("identity", (elements[i],),
                    f"d({elements[i]!r},{elements[i]!r}) = {rows[i][i]}, expected 0")
    for i in range(n):
        for j in range(n):
            if i != j and rows[i][j] <= ZERO:
                return ("positivity", (elements[i], elements[j]),
                        f"d({elements[i]!r},{elements[j]!r}) = {rows[i][j]} is not positive")
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                return ("symmetry", (elements[i], elements[j]),
                        f"d({elements[i]!r},{elements[j]!r}) = {rows[i][j]} but "
                        f"d({elements[j]!r},{elements[i]!r}) = {rows[j][i]}")
    ints, _ = common_scale(rows)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if ints[i][j] + ints[j][k] < ints[i][k]:
                    a, b, c = elements[i], elements[j], elements[k]
                    return ("triangle", (a, b, c),
                            f"d({a!r},{b!r}) + d({b!r},{c!r}) = "
                            f"{rows[i][j] + rows[j][k]} < d({a!r},{c!r}) = {rows[i][k]}")
    return None


def squash(x) -> Fraction:
    """Map a non-negative distance into ``[0, 1)`` via ``x / (1 + x)``."""
    q = to_rational(x)
    if q < 0:
        raise ValueError(f"squash needs a non-negative input, got {q}")
    return q / (1 + q)


def system_from_metric(m: DistanceMatrix) -> FiniteIndexedSystem:
    matrix = [[ONE - squash(v) for v in row] for row in m.d]
    return FiniteIndexedSystem(m.elements, matrix)


def metric_from_system(s: FiniteIndexedSystem) -> DistanceMatrix:
    return DistanceMatrix(s.elements, s.distinction_matrix())
