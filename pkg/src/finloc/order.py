"""Finite posets, monotone maps and Hasse diagrams.

Elements are the indices ``0..n-1``. Labels are display metadata only and never
take part in equality.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterator, Sequence

from . import caps
from .errors import NotAntisymmetric, NotMonotone, NotReflexive, NotTransitive

Relation = tuple[tuple[bool, ...], ...]


def _freeze(relation) -> Relation:
    return tuple(tuple(bool(x) for x in row) for row in relation)


@dataclass(frozen=True)
class FinPoset:
    leq: Relation
    labels: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(len(self.leq))))

    @property
    def n(self) -> int:
        return len(self.leq)

    @property
    def elements(self) -> range:
        return range(len(self.leq))

    def le(self, i: int, j: int) -> bool:
        return self.leq[i][j]

    def lt(self, i: int, j: int) -> bool:
        return i != j and self.leq[i][j]

    def label(self, i: int) -> str:
        return self.labels[i]

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no element labelled {label!r}") from None

    @cached_property
    def up(self) -> tuple[frozenset, ...]:
        return tuple(frozenset(j for j in self.elements if self.leq[i][j]) for i in self.elements)

    @cached_property
    def down(self) -> tuple[frozenset, ...]:
        return tuple(frozenset(j for j in self.elements if self.leq[j][i]) for i in self.elements)

    @cached_property
    def linear_extension(self) -> tuple[int, ...]:
        """Elements sorted so that every element follows everything below it."""
        return tuple(sorted(self.elements, key=lambda i: (len(self.down[i]), i)))

    def is_upset(self, s) -> bool:
        return all(self.up[i] <= s for i in s)

    def is_downset(self, s) -> bool:
        return all(self.down[i] <= s for i in s)

    def upper_bounds(self, s) -> frozenset:
        out = frozenset(self.elements)
        for i in s:
            out &= self.up[i]
        return out

    def lower_bounds(self, s) -> frozenset:
        out = frozenset(self.elements)
        for i in s:
            out &= self.down[i]
        return out

    def least(self, s):
        """The least element of ``s``, or None."""
        for i in s:
            if all(self.leq[i][j] for j in s):
                return i
        return None

    def greatest(self, s):
        for i in s:
            if all(self.leq[j][i] for j in s):
                return i
        return None

    def lub(self, s):
        return self.least(self.upper_bounds(s))

    def glb(self, s):
        return self.greatest(self.lower_bounds(s))

    def maximal(self, s) -> list[int]:
        return sorted(i for i in s if not any(self.lt(i, j) for j in s))

    def __repr__(self):
        return f"FinPoset(n={self.n}, labels={list(self.labels)})"


def validate_poset(relation, labels: Sequence[str] | None = None) -> FinPoset:
    """Check the partial-order axioms and return the poset, or raise with a witness."""
    rel = _freeze(relation)
    n = len(rel)
    if n < 1:
        raise ValueError("a poset needs at least one element")
    if any(len(row) != n for row in rel):
        raise ValueError("relation must be square")
    for i in range(n):
        if not rel[i][i]:
            raise NotReflexive(i)
    for i in range(n):
        for j in range(i + 1, n):
            if rel[i][j] and rel[j][i]:
                raise NotAntisymmetric(i, j)
    for i, j, k in product(range(n), repeat=3):
        if rel[i][j] and rel[j][k] and not rel[i][k]:
            raise NotTransitive(i, j, k)
    return FinPoset(rel, tuple(labels) if labels else ())


def reflexive_transitive_closure(relation) -> Relation:
    n = len(relation)
    r = [[bool(relation[i][j]) or i == j for j in range(n)] for i in range(n)]
    # Warshall
    for k in range(n):
        rk = r[k]
        for i in range(n):
            if r[i][k]:
                ri = r[i]
                for j in range(n):
                    if rk[j]:
                        ri[j] = True
    return _freeze(r)


def poset_from_pairs(elements: Sequence[str], pairs) -> FinPoset:
    """Close the generating pairs ``(x, y)`` meaning x <= y, then validate."""
    index = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    rel = [[False] * n for _ in range(n)]
    for x, y in pairs:
        rel[index[x]][index[y]] = True
    return validate_poset(reflexive_transitive_closure(rel), elements)


def hasse_cover(P: FinPoset) -> Relation:
    """cover[i][j] iff i < j with nothing strictly between."""
    n = P.n
    return tuple(
        tuple(
            P.lt(i, j) and not any(P.lt(i, k) and P.lt(k, j) for k in range(n))
            for j in range(n)
        )
        for i in range(n)
    )


def cover_pairs(P: FinPoset) -> list[tuple[int, int]]:
    c = hasse_cover(P)
    return [(i, j) for i in P.elements for j in P.elements if c[i][j]]


def chain(n: int, labels: Sequence[str] | None = None) -> FinPoset:
    return FinPoset(_freeze([[i <= j for j in range(n)] for i in range(n)]), tuple(labels or ()))


def antichain(n: int, labels: Sequence[str] | None = None) -> FinPoset:
    return FinPoset(_freeze([[i == j for j in range(n)] for i in range(n)]), tuple(labels or ()))


def subposet(P: FinPoset, indices: Sequence[int]) -> FinPoset:
    idx = list(indices)
    return FinPoset(
        _freeze([[P.le(a, b) for b in idx] for a in idx]),
        tuple(P.labels[a] for a in idx),
    )


def opposite(P: FinPoset) -> FinPoset:
    return FinPoset(_freeze([[P.le(j, i) for j in P.elements] for i in P.elements]), P.labels)


@dataclass(frozen=True)
class MonotoneMap:
    """A map between posets (or anything exposing ``le``), stored as an index table."""

    dom: object = field(repr=False)
    cod: object = field(repr=False)
    table: tuple[int, ...]

    def __call__(self, i: int) -> int:
        return self.table[i]

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(self.table))

    def check(self) -> None:
        n = len(self.table)
        for i in range(n):
            for j in range(n):
                if self.dom.le(i, j) and not self.cod.le(self.table[i], self.table[j]):
                    raise NotMonotone(i, j)


def is_monotone(dom, cod, table) -> bool:
    n = len(table)
    return all(
        cod.le(table[i], table[j]) for i in range(n) for j in range(n) if dom.le(i, j)
    )


def enumerate_monotone_maps(P, Q, cap: int | None = None) -> Iterator[MonotoneMap]:
    """All monotone maps P -> Q, in lexicographic order of their tables.

    The naive candidate count ``|Q|**|P|`` must fit the cap; the search itself
    backtracks and never visits a non-monotone prefix twice.
    """
    caps.check(Q.n**P.n, cap)
    n, m = P.n, Q.n
    table = [0] * n

    def extend(i):
        if i == n:
            yield MonotoneMap(P, Q, tuple(table))
            return
        for y in range(m):
            ok = True
            for k in range(i):
                if P.le(k, i) and not Q.le(table[k], y):
                    ok = False
                    break
                if P.le(i, k) and not Q.le(y, table[k]):
                    ok = False
                    break
            if ok:
                table[i] = y
                yield from extend(i + 1)

    yield from extend(0)
