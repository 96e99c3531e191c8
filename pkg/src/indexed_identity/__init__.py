"""Indexed identity: graded equality between objects.

Pairs of objects carry an identity index in ``[0, 1]`` (1 means the same
object); one minus the index is a bounded metric. The package builds such
systems from predicate tables or metrics, audits arbitrary matrices against
the axioms, and provides fuzzy sets graded by identity indices.
"""

from .core import (
    Distinction,
    FiniteIndexedSystem,
    Index,
    distinction_of,
    index_of,
    index_set,
    to_rational,
)
from .documents import Document, load, parse, serialize
from .errors import (
    AxiomViolation,
    DocumentError,
    DomainMismatchError,
    DuplicateProfileError,
    DuplicateSetError,
    EmptyExtensionError,
    IndexedSystemError,
    MembershipError,
    MetricViolation,
    RangeError,
    SchemaError,
    ShapeError,
    UnknownLabelError,
)
from .ifuzzy import (
    IFuzzySet,
    grade,
    intersection,
    set_distinction,
    set_index,
    system_of_sets,
    union,
)
from .indexing import (
    PredicateExtension,
    distinction_to_set,
    index_to_set,
    indexed_extension,
)
from .metric import DistanceMatrix, metric_from_system, squash, system_from_metric
from .profile import PredicateTable, build_system, compute_index, shares
from .verify import AxiomReport, CandidateMatrix, Witness, audit, audit_metric

__version__ = "0.1.0"
