"""Degrees to which elements satisfy a predicate given by its extension.

An element's distinction from a set ``S`` is its smallest distinction from
any member of ``S``; its index against ``S`` is one minus that.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import ONE, FiniteIndexedSystem, Distinction, Index
from .errors import EmptyExtensionError, IndexedSystemError, UnknownLabelError
from .ifuzzy import IFuzzySet
from .profile import PredicateTable


@dataclass(frozen=True)
class PredicateExtension:
    """The members of ``base`` satisfying some predicate."""

    base: FiniteIndexedSystem
    members: tuple[str, ...]

    def __post_init__(self):
        members = tuple(self.members)
        if not members:
            raise EmptyExtensionError("the extension is empty; distance to it is undefined")
        for label in members:
            if label not in self.base:
                raise UnknownLabelError(label)
        if len(set(members)) != len(members):
            raise IndexedSystemError("duplicate member labels")
        object.__setattr__(self, "members", members)

    @classmethod
    def from_table(cls, base: FiniteIndexedSystem, table: PredicateTable,
                   predicate: str) -> "PredicateExtension":
        return cls(base, table.extension(predicate))

    @classmethod
    def of(cls, base: FiniteIndexedSystem, members: Iterable[str]) -> "PredicateExtension":
        return cls(base, tuple(members))


def distinction_to_set(ext: PredicateExtension, x: str) -> Distinction:
    base = ext.base
    row = base.matrix[base.position(x)]
    return ONE - max(row[base.position(y)] for y in ext.members)


def index_to_set(ext: PredicateExtension, x: str) -> Index:
    return ONE - distinction_to_set(ext, x)


def indexed_extension(ext: PredicateExtension) -> IFuzzySet:
    """Grade every element by its index against the extension.

    The minimum over a finite member set is attained at some member, so each
    grade is that member's index against the element and the result always
    meets the i-fuzzy membership rule (the constructor re-checks it).
    """
    return IFuzzySet(ext.base, {x: index_to_set(ext, x) for x in ext.base.elements})
