"""Fuzzy sets whose grades are identity indices of the underlying system.

A grade ``r`` at ``x`` is legal only if some element ``y`` (``x`` itself
included) has index ``r`` against ``x``. Union and intersection are the
pointwise max and min; the distance between two sets is the sup (here: max)
of their pointwise grade differences.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .core import ONE, FiniteIndexedSystem, Distinction, Index, in_unit_interval, to_rational
from .errors import (
    DomainMismatchError,
    DuplicateSetError,
    IndexedSystemError,
    MembershipError,
    UnknownLabelError,
)


class IFuzzySet:
    """A total grade map over the elements of ``base``."""

    __slots__ = ("base", "_grades")

    def __init__(self, base: FiniteIndexedSystem, grades: Mapping[str, object]):
        extra = [label for label in grades if label not in base]
        if extra:
            raise UnknownLabelError(extra[0])
        missing = [label for label in base.elements if label not in grades]
        if missing:
            raise IndexedSystemError(f"no grade given for element {missing[0]!r}")
        values = []
        for label in base.elements:
            r = to_rational(grades[label])
            if not in_unit_interval(r):
                raise MembershipError(f"grade {r} at {label!r} is outside [0, 1]")
            if r not in base.column(label):
                raise MembershipError(
                    f"grade {r} at {label!r} is not the index of any element against {label!r}")
            values.append(r)
        self.base = base
        self._grades = tuple(values)

    @property
    def grades(self) -> dict[str, Fraction]:
        return dict(zip(self.base.elements, self._grades))

    def __getitem__(self, label: str) -> Fraction:
        return self._grades[self.base.position(label)]

    def __eq__(self, other):
        if not isinstance(other, IFuzzySet):
            return NotImplemented
        return self._grades == other._grades and self.base == other.base

    def __hash__(self):
        return hash((self.base, self._grades))

    def __repr__(self):
        body = ", ".join(f"{k}: {v}" for k, v in self.grades.items())
        return f"IFuzzySet({{{body}}})"


def _same_base(f: IFuzzySet, g: IFuzzySet) -> FiniteIndexedSystem:
    if f.base is not g.base and f.base != g.base:
        raise DomainMismatchError("i-fuzzy sets are defined over different systems")
    return f.base


def grade(f: IFuzzySet, x: str) -> Index:
    return f[x]


def union(f: IFuzzySet, g: IFuzzySet) -> IFuzzySet:
    base = _same_base(f, g)
    return IFuzzySet(base, {x: max(a, b) for x, a, b in zip(base.elements, f._grades, g._grades)})


def intersection(f: IFuzzySet, g: IFuzzySet) -> IFuzzySet:
    base = _same_base(f, g)
    return IFuzzySet(base, {x: min(a, b) for x, a, b in zip(base.elements, f._grades, g._grades)})


def set_distinction(f: IFuzzySet, g: IFuzzySet) -> Distinction:
    _same_base(f, g)
    return max(abs(a - b) for a, b in zip(f._grades, g._grades))


def set_index(f: IFuzzySet, g: IFuzzySet) -> Index:
    return ONE - set_distinction(f, g)


def system_of_sets(sets: Sequence[IFuzzySet], names: Sequence[str] | None = None
                   ) -> FiniteIndexedSystem:
    """The indexed system formed by a finite family of i-fuzzy sets.

    Labels default to ``S0, S1, ...``. Two entries with identical grades are
    rejected; deduplicate before calling.
    """
    sets = list(sets)
    if not sets:
        raise IndexedSystemError("need at least one i-fuzzy set")
    if names is None:
        names = [f"S{i}" for i in range(len(sets))]
    names = list(names)
    if len(names) != len(sets):
        raise IndexedSystemError(f"{len(names)} names given for {len(sets)} sets")
    if len(set(names)) != len(names):
        raise IndexedSystemError("set names must be unique")
    for f in sets[1:]:
        _same_base(sets[0], f)
    n = len(sets)
    matrix = [[ONE] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            r = set_index(sets[i], sets[j])
            if r == ONE:
                raise DuplicateSetError(names[i], names[j])
            matrix[i][j] = matrix[j][i] = r
    return FiniteIndexedSystem(names, matrix)
