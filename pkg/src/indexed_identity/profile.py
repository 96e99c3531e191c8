"""Identity indices from shared unary predicates.

Two objects share a predicate when they agree on it (both satisfy it or
both fail it). Their index is the fraction of predicates they share.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .core import FiniteIndexedSystem, Index
from .errors import DuplicateProfileError, IndexedSystemError, UnknownLabelError


@dataclass(frozen=True)
class PredicateTable:
    """Objects by predicates truth table; ``truth[i][j]`` is predicate j of object i."""

    objects: tuple[str, ...]
    predicates: tuple[str, ...]
    truth: tuple[tuple[bool, ...], ...]
    _objects: dict = field(init=False, repr=False, compare=False, hash=False)
    _predicates: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        objects = tuple(self.objects)
        predicates = tuple(self.predicates)
        if not objects:
            raise IndexedSystemError("a predicate table needs at least one object")
        if not predicates:
            raise IndexedSystemError("a predicate table needs at least one predicate")
        truth = tuple(tuple(row) for row in self.truth)
        if len(truth) != len(objects) or any(len(row) != len(predicates) for row in truth):
            raise IndexedSystemError(
                f"truth table must be {len(objects)}x{len(predicates)}")
        for row in truth:
            for cell in row:
                if not isinstance(cell, bool):
                    raise IndexedSystemError(f"truth values must be booleans, got {cell!r}")
        object.__setattr__(self, "objects", objects)
        object.__setattr__(self, "predicates", predicates)
        object.__setattr__(self, "truth", truth)
        object.__setattr__(self, "_objects", _positions(objects, "object"))
        object.__setattr__(self, "_predicates", _positions(predicates, "predicate"))

    def row(self, obj: str) -> tuple[bool, ...]:
        try:
            return self.truth[self._objects[obj]]
        except KeyError:
            raise UnknownLabelError(obj, "object") from None

    def holds(self, obj: str, predicate: str) -> bool:
        try:
            j = self._predicates[predicate]
        except KeyError:
            raise UnknownLabelError(predicate, "predicate") from None
        return self.row(obj)[j]

    def extension(self, predicate: str) -> tuple[str, ...]:
        """Objects satisfying ``predicate``, in table order."""
        return tuple(obj for obj in self.objects if self.holds(obj, predicate))


def _positions(labels: Sequence[str], what: str) -> dict:
    out = {}
    for i, label in enumerate(labels):
        if not isinstance(label, str):
            raise TypeError(f"{what} names must be strings, got {label!r}")
        if label in out:
            raise IndexedSystemError(f"duplicate {what} {label!r}")
        out[label] = i
    return out


def shares(table: PredicateTable, a: str, b: str, predicate: str) -> bool:
    return table.holds(a, predicate) == table.holds(b, predicate)


def compute_index(table: PredicateTable, a: str, b: str) -> Index:
    row_a, row_b = table.row(a), table.row(b)
    agree = sum(1 for pa, pb in zip(row_a, row_b) if pa == pb)
    return Fraction(agree, len(table.predicates))


def build_system(table: PredicateTable) -> FiniteIndexedSystem:
    """Index every pair of objects and return the validated system.

    Raises DuplicateProfileError if two objects agree on all predicates,
    since they would then be one object under two names.
    """
    seen = {}
    for obj, row in zip(table.objects, table.truth):
        if row in seen:
            raise DuplicateProfileError(seen[row], obj)
        seen[row] = obj
    objs = table.objects
    matrix = [[compute_index(table, a, b) for b in objs] for a in objs]
    return FiniteIndexedSystem(objs, matrix)
