"""Finite indexed variables systems with exact rational indices."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from .errors import AxiomViolation, IndexedSystemError, ShapeError, UnknownLabelError

# Indices and distinctions are plain Fractions; the aliases document intent.
Index = Fraction
Distinction = Fraction

ONE = Fraction(1)
ZERO = Fraction(0)


def to_rational(value) -> Fraction:
    """Convert ``value`` to an exact :class:`~fractions.Fraction`.

    Accepted inputs are rationals, ``Decimal``, strings of the form ``"p/q"``
    or finite decimal literals (``"0.25"``, ``"1e-3"``), and floats. A float
    is read through its shortest round-tripping decimal representation, so
    ``0.1`` becomes ``1/10`` rather than the binary expansion of the double.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, Decimal):
        if not value.is_finite():
            raise ValueError(f"non-finite value: {value}")
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"non-finite value: {value}")
        return Fraction(repr(value))
    if isinstance(value, str):
        text = value.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"not an exact rational: {value!r}") from None
    raise TypeError(f"cannot read {type(value).__name__} as a rational")


def in_unit_interval(q: Fraction) -> bool:
    return ZERO <= q <= ONE


def common_scale(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[int]], int]:
    """Rescale a rational matrix to integers over the LCM of its denominators."""
    denom = 1
    for row in rows:
        for q in row:
            denom = math.lcm(denom, q.denominator)
    ints = [[q.numerator * (denom // q.denominator) for q in row] for row in rows]
    return ints, denom


@dataclass(frozen=True)
class FiniteIndexedSystem:
    """Element labels plus a symmetric matrix of identity indices.

    The constructor enforces every axiom, so an instance is always a valid
    indexed variables system. ``matrix[i][j]`` is the index between
    ``elements[i]`` and ``elements[j]``. Use
    :func:`indexed_identity.verify.audit` to inspect untrusted matrices
    without raising.
    """

    elements: tuple[str, ...]
    matrix: tuple[tuple[Fraction, ...], ...]
    _position: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        elements = tuple(self.elements)
        if not elements:
            raise AxiomViolation("F1", "the element set is empty")
        for label in elements:
            if not isinstance(label, str):
                raise TypeError(f"element labels must be strings, got {label!r}")
        n = len(elements)
        rows = tuple(tuple(to_rational(v) for v in row) for row in self.matrix)
        if len(rows) != n or any(len(row) != n for row in rows):
            raise ShapeError(f"matrix must be {n}x{n} to match the elements")

        position = {}
        for i, label in enumerate(elements):
            if label in position:
                raise IndexedSystemError(f"duplicate element label {label!r}")
            position[label] = i

        for i in range(n):
            for j in range(n):
                r = rows[i][j]
                if not in_unit_interval(r):
                    raise AxiomViolation(
                        "F2", f"index {r} between {elements[i]!r} and {elements[j]!r} "
                        "is outside [0, 1]", (elements[i], elements[j]))
                if r != rows[j][i]:
                    raise AxiomViolation(
                        "F3", f"index({elements[i]!r}, {elements[j]!r}) = {r} but "
                        f"index({elements[j]!r}, {elements[i]!r}) = {rows[j][i]}",
                        (elements[i], elements[j]))
                if i == j and r != ONE:
                    raise AxiomViolation(
                        "F4", f"{elements[i]!r} has self-index {r}, expected 1",
                        (elements[i],))
                if i != j and r == ONE:
                    raise AxiomViolation(
                        "F4", f"distinct labels {elements[i]!r} and {elements[j]!r} have "
                        "index 1; merge them into one element", (elements[i], elements[j]))

        ints, denom = common_scale(rows)
        dist = [[denom - v for v in row] for row in ints]
        for i in range(n):
            di = dist[i]
            for j in range(n):
                dij = di[j]
                dj = dist[j]
                for k in range(n):
                    if dij + dj[k] < di[k]:
                        raise AxiomViolation(
                            "F7", f"D({elements[i]!r},{elements[j]!r}) + "
                            f"D({elements[j]!r},{elements[k]!r}) < "
                            f"D({elements[i]!r},{elements[k]!r})",
                            (elements[i], elements[j], elements[k]))

        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "matrix", rows)
        object.__setattr__(self, "_position", position)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, label):
        return label in self._position

    def position(self, label: str) -> int:
        try:
            return self._position[label]
        except KeyError:
            raise UnknownLabelError(label) from None

    def column(self, label: str) -> tuple[Fraction, ...]:
        """Indices of every element against ``label``, in element order."""
        j = self.position(label)
        return tuple(row[j] for row in self.matrix)

    def distinction_matrix(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(tuple(ONE - r for r in row) for row in self.matrix)

    @classmethod
    def from_pairs(cls, elements: Iterable[str], pairs: dict) -> "FiniteIndexedSystem":
        """Build a system from ``{(a, b): r}`` for the unordered off-diagonal pairs."""
        elements = tuple(elements)
        pos = {label: i for i, label in enumerate(elements)}
        n = len(elements)
        rows = [[ONE if i == j else None for j in range(n)] for i in range(n)]
        for (a, b), r in pairs.items():
            for label in (a, b):
                if label not in pos:
                    raise UnknownLabelError(label)
            r = to_rational(r)
            rows[pos[a]][pos[b]] = r
            rows[pos[b]][pos[a]] = r
        for i in range(n):
            for j in range(n):
                if rows[i][j] is None:
                    raise ShapeError(
                        f"no index given for pair ({elements[i]!r}, {elements[j]!r})")
        return cls(elements, rows)


def index_of(system: FiniteIndexedSystem, a: str, b: str) -> Index:
    return system.matrix[system.position(a)][system.position(b)]


def distinction_of(system: FiniteIndexedSystem, a: str, b: str) -> Distinction:
    return ONE - index_of(system, a, b)


def index_set(system: FiniteIndexedSystem) -> frozenset[Index]:
    """Distinct indices realised by the system; always contains 1."""
    return frozenset(r for row in system.matrix for r in row)
