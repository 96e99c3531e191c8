"""Random generators and naive reference implementations for the tests.

The reference functions deliberately avoid the library's internals: they
loop over labels with plain Fractions and never rescale to integers.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from hypothesis import strategies as st

from indexed_identity import (
    CandidateMatrix,
    DistanceMatrix,
    FiniteIndexedSystem,
    IFuzzySet,
    PredicateTable,
)

ONE = Fraction(1)


# -- generators --------------------------------------------------------------

def labels(n):
    return [f"e{i}" for i in range(n)]


def shortest_paths(weights):
    """Floyd-Warshall closure; turns any positive symmetric weights into a metric."""
    n = len(weights)
    d = [row[:] for row in weights]
    for i in range(n):
        d[i][i] = Fraction(0)
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def random_weights(rng, n, top):
    w = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            q = rng.randint(1, 12)
            w[i][j] = w[j][i] = Fraction(rng.randint(1, top * q), q)
    return w


def random_system(rng, n=None):
    n = n if n is not None else rng.randint(1, 12)
    d = shortest_paths(random_weights(rng, n, 1))
    return FiniteIndexedSystem(labels(n), [[ONE - v for v in row] for row in d])


def random_metric(rng, n=None):
    n = n if n is not None else rng.randint(1, 12)
    d = shortest_paths(random_weights(rng, n, 10))
    return DistanceMatrix(labels(n), d)


def random_table(rng, n_objects=None, n_predicates=None):
    p = n_predicates if n_predicates is not None else rng.randint(4, 16)
    n = n_objects if n_objects is not None else rng.randint(1, 12)
    n = min(n, 2 ** p)
    codes = rng.sample(range(2 ** p), n)
    truth = [[bool(code >> j & 1) for j in range(p)] for code in codes]
    return PredicateTable([f"o{i}" for i in range(n)], [f"P{j}" for j in range(p)], truth)


def random_ifuzzy(rng, system):
    grades = {x: rng.choice(system.column(x)) for x in system.elements}
    return IFuzzySet(system, grades)


# -- hypothesis strategies ---------------------------------------------------

@st.composite
def systems(draw, max_size=8):
    seed = draw(st.integers(0, 2**32 - 1))
    n = draw(st.integers(1, max_size))
    return random_system(random.Random(seed), n)


@st.composite
def metrics(draw, max_size=8):
    seed = draw(st.integers(0, 2**32 - 1))
    n = draw(st.integers(1, max_size))
    return random_metric(random.Random(seed), n)


@st.composite
def tables(draw, max_objects=8, max_predicates=10):
    p = draw(st.integers(3, max_predicates))
    n = draw(st.integers(1, min(max_objects, 2 ** p)))
    codes = draw(st.lists(st.integers(0, 2 ** p - 1), min_size=n, max_size=n, unique=True))
    truth = [[bool(c >> j & 1) for j in range(p)] for c in codes]
    return PredicateTable([f"o{i}" for i in range(n)], [f"P{j}" for j in range(p)], truth)


@st.composite
def ifuzzy_families(draw, size=3, max_system=6):
    system = draw(systems(max_system))
    out = []
    for _ in range(size):
        grades = {x: draw(st.sampled_from(system.column(x))) for x in system.elements}
        out.append(IFuzzySet(system, grades))
    return out


unit_rationals = st.fractions(min_value=0, max_value=1, max_denominator=60)
nonneg_rationals = st.fractions(min_value=0, max_value=1000, max_denominator=60)


# -- naive references --------------------------------------------------------

def naive_index(table, a, b):
    agree = 0
    for p in table.predicates:
        pa, pb = table.holds(a, p), table.holds(b, p)
        if (pa and pb) or (not pa and not pb):
            agree += 1
    return Fraction(agree, len(table.predicates))


def naive_set_distinction(f, g):
    best = Fraction(0)
    for x in f.base.elements:
        diff = f.grades[x] - g.grades[x]
        if diff < 0:
            diff = -diff
        if diff > best:
            best = diff
    return best


def naive_distinction_to_set(system, members, x):
    i = system.elements.index(x)
    best = None
    for y in members:
        d = ONE - system.matrix[i][system.elements.index(y)]
        if best is None or d < best:
            best = d
    return best


def naive_is_ifuzzy(grades, system):
    for x, r in grades.items():
        j = system.elements.index(x)
        if not any(system.matrix[i][j] == r for i in range(len(system.elements))):
            return False
    return True


def naive_metric_ok(elements, d):
    n = len(elements)
    for i, j in itertools.product(range(n), repeat=2):
        if i == j and d[i][j] != 0:
            return False
        if i != j and d[i][j] <= 0:
            return False
        if d[i][j] != d[j][i]:
            return False
    for i, j, k in itertools.product(range(n), repeat=3):
        if d[i][j] + d[j][k] < d[i][k]:
            return False
    return True


def replay(axiom, witness, candidate: CandidateMatrix) -> bool:
    """Recompute a reported violation directly from the matrix."""
    pos = {label: i for i, label in enumerate(candidate.elements)}
    e = candidate.entries

    def at(a, b):
        return e[pos[a]][pos[b]]

    ls = witness.labels
    if axiom == "F1":
        return len(candidate.elements) == 0
    if axiom == "F2":
        if ls:
            r = at(*ls)
            return r == witness.values[0] and not (0 <= r <= 1)
        return all(e[i][i] != 1 for i in range(len(e)))
    if axiom in ("F3", "symmetry"):
        a, b = ls
        return (at(a, b), at(b, a)) == witness.values and at(a, b) != at(b, a)
    if axiom == "F4":
        a, b = ls
        r = at(a, b)
        return r == witness.values[0] and ((a == b) != (r == 1))
    if axiom == "F7":
        a, b, c = ls
        dab, dbc, dac = 1 - at(a, b), 1 - at(b, c), 1 - at(a, c)
        return (dab, dbc, dac) == witness.values and dab + dbc < dac
    if axiom == "identity":
        a, b = ls
        return a == b and at(a, a) != 0 and witness.values == (at(a, a),)
    if axiom == "positivity":
        a, b = ls
        return a != b and at(a, b) <= 0
    if axiom == "triangle":
        a, b, c = ls
        vals = (at(a, b), at(b, c), at(a, c))
        return vals == witness.values and vals[0] + vals[1] < vals[2]
    raise ValueError(axiom)


# -- constructed violators ---------------------------------------------------
# Each builder returns a CandidateMatrix that breaks exactly the named axiom.
# Off-diagonal distinctions drawn from [1/2, 1] satisfy every triangle, since
# any two of them sum to at least 1.

def _high_distinctions(rng, n):
    d = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            q = rng.randint(2, 12)
            d[i][j] = d[j][i] = Fraction(rng.randint(q // 2 + q % 2, q), q)
    return d


def _as_candidate(d):
    n = len(d)
    return CandidateMatrix(labels(n), [[ONE - v for v in row] for row in d])


def violate_f1(rng):
    return CandidateMatrix([], [])


def violate_f2(rng):
    n = rng.randint(2, 7)
    d = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            q = rng.randint(5, 12)
            d[i][j] = d[j][i] = Fraction(rng.randint(int(0.6 * q) + 1, q), q)
    i, j = rng.sample(range(n), 2)
    d[i][j] = d[j][i] = Fraction(11, 10)  # index -1/10; any two others still sum >= 6/5
    return _as_candidate(d)


def violate_f3(rng):
    n = rng.randint(2, 7)
    d = _high_distinctions(rng, n)
    i, j = rng.sample(range(n), 2)
    new = d[i][j]
    while new == d[i][j]:
        q = rng.randint(2, 12)
        new = Fraction(rng.randint(q // 2 + q % 2, q), q)
    d[i][j] = new
    return _as_candidate(d)


def violate_f4(rng):
    n = rng.randint(2, 7)
    d = _high_distinctions(rng, n)
    if rng.random() < 0.5:
        i = rng.randrange(n)
        d[i][i] = Fraction(rng.randint(1, 4), 8)  # self-distinction in (0, 1/2]
    else:
        # Two clones: distinction 0 between them, identical rows elsewhere.
        i, j = rng.sample(range(n), 2)
        d[i][j] = d[j][i] = Fraction(0)
        for k in range(n):
            if k not in (i, j):
                d[j][k] = d[k][j] = d[i][k]
    return _as_candidate(d)


def violate_f7(rng):
    q = rng.randint(4, 40)
    x = Fraction(rng.randint(1, q // 2 - 1), q)
    y = Fraction(rng.randint(1, q // 2 - 1), q)
    z = Fraction(rng.randint(int((x + y) * q) + 1, q), q)
    d = [[0, x, z], [x, 0, y], [z, y, 0]]
    return _as_candidate([[Fraction(v) for v in row] for row in d])


def violate_metric(rng, axiom):
    m = random_metric(rng, rng.randint(3, 7))
    d = [list(row) for row in m.d]
    n = len(d)
    if axiom == "identity":
        i = rng.randrange(n)
        d[i][i] = Fraction(rng.randint(1, 5), 100)
        # keep triangles through the diagonal valid: d(i,i) <= 2 * min d(i,k)
        smallest = min(d[i][k] for k in range(n) if k != i)
        d[i][i] = min(d[i][i], smallest)
    elif axiom == "positivity":
        # A pair at distance 0 whose rows coincide elsewhere keeps the triangle.
        i, j = rng.sample(range(n), 2)
        d[i][j] = d[j][i] = Fraction(0)
        for k in range(n):
            if k not in (i, j):
                d[j][k] = d[k][j] = d[i][k]
    elif axiom == "symmetry":
        d = [[Fraction(0) if i == j else Fraction(rng.randint(6, 10), 10)
              for j in range(n)] for i in range(n)]
        i, j = rng.sample(range(n), 2)
        d[i][j] = Fraction(11, 10) if d[j][i] != Fraction(11, 10) else Fraction(1)
    else:
        d = [[Fraction(0)] * 3 for _ in range(3)]
        d[0][1] = d[1][0] = Fraction(1)
        d[1][2] = d[2][1] = Fraction(rng.randint(1, 5))
        d[0][2] = d[2][0] = 1 + d[1][2] + Fraction(rng.randint(1, 9), 10)
        n = 3
    return CandidateMatrix(labels(n), d)
