"""Nuclei on finite frames and the sublocales they cut out."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

from . import caps
from .errors import NotInflationary, NotMeetPreserving, NotIdempotent
from .frame import FinFrame, compact_opens, directed_subsets
from .lattice import lattice_from_tables
from .order import FinPoset


@dataclass(frozen=True)
class Nucleus:
    frame: FinFrame = field(repr=False, compare=False)
    table: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(self.table))

    def __call__(self, u: int) -> int:
        return self.table[u]

    def fixed_points(self) -> list[int]:
        return [u for u, v in enumerate(self.table) if u == v]

    def render(self) -> str:
        F = self.frame
        return "j: " + " ".join(f"{F.label(u)}->{F.label(v)}" for u, v in enumerate(self.table))


# prenuclei share the representation; only the validation differs
Prenucleus = Nucleus


def _check_inflationary_meets(F, t):
    for u in F.elements:
        if not F.le(u, t[u]):
            raise NotInflationary(u)
    for u, v in combinations(F.elements, 2):
        if t[F.meet(u, v)] != F.meet(t[u], t[v]):
            raise NotMeetPreserving(u, v)


def validate_prenucleus(F: FinFrame, table: Sequence[int]) -> Prenucleus:
    t = tuple(table)
    _check_inflationary_meets(F, t)
    return Nucleus(F, t)


def validate_nucleus(F: FinFrame, table: Sequence[int]) -> Nucleus:
    t = tuple(table)
    _check_inflationary_meets(F, t)
    for u in F.elements:
        if t[t[u]] != t[u]:
            raise NotIdempotent(u)
    return Nucleus(F, t)


def is_nucleus(F: FinFrame, table) -> bool:
    try:
        validate_nucleus(F, table)
    except (NotInflationary, NotMeetPreserving, NotIdempotent):
        return False
    return True


def identity_nucleus(F: FinFrame) -> Nucleus:
    return Nucleus(F, tuple(F.elements))


def top_nucleus(F: FinFrame) -> Nucleus:
    return Nucleus(F, (F.top,) * F.n)


def closed_nucleus(F: FinFrame, u: int) -> Nucleus:
    """V |-> U \\/ V."""
    return Nucleus(F, tuple(F.join(u, v) for v in F.elements))


def open_nucleus(F: FinFrame, u: int) -> Nucleus:
    """V |-> U => V."""
    row = F.implication_table[u]
    return Nucleus(F, tuple(row[v] for v in F.elements))


def nucleus_le(j: Nucleus, k: Nucleus) -> bool:
    F = j.frame
    return all(F.le(a, b) for a, b in zip(j.table, k.table))


def nucleus_meet(j: Nucleus, k: Nucleus) -> Nucleus:
    F = j.frame
    return Nucleus(F, tuple(F.meet(a, b) for a, b in zip(j.table, k.table)))


def meet_all(F: FinFrame, family: Sequence[Nucleus]) -> Nucleus:
    out = top_nucleus(F)
    for k in family:
        out = nucleus_meet(out, k)
    return out


def nucleus_join(family: Sequence[Nucleus], frame: FinFrame | None = None) -> Nucleus:
    """Least nucleus above every member of ``family``.

    Each argument is pushed up by ``V |-> V \\/ (\\/_i k_i(V))`` until it stops
    moving; every iterate is a finite composite of the k_i, and the fixed point
    dominates all of them. The empty family yields the identity nucleus.
    """
    family = list(family)
    if frame is None:
        if not family:
            raise ValueError("the frame is needed to join an empty family")
        frame = family[0].frame
    F = frame
    tables = [k.table for k in family]
    out = []
    for u in F.elements:
        v = u
        while True:
            w = v
            for t in tables:
                w = F.join(w, t[v])
            if w == v:
                break
            v = w
        out.append(v)
    return Nucleus(F, tuple(out))


def pointwise_join(family: Sequence[Nucleus], frame: FinFrame) -> tuple[int, ...]:
    F = frame
    return tuple(F.join_all(k.table[u] for k in family) for u in F.elements)


def finite_composition(family: Sequence[Nucleus], word: Sequence[int], frame: FinFrame) -> Prenucleus:
    """k_{s0} o k_{s1} o ... applied right to left; the empty word is the identity."""
    table = list(frame.elements)
    for i in reversed(word):
        t = family[i].table
        table = [t[x] for x in table]
    return Nucleus(frame, tuple(table))


def all_finite_compositions(family: Sequence[Nucleus], frame: FinFrame) -> list[Prenucleus]:
    """Every distinct finite composite, by breadth-first search over words."""
    start = tuple(frame.elements)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for table in frontier:
            for k in family:
                comp = tuple(k.table[x] for x in table)
                if comp not in seen:
                    seen.add(comp)
                    nxt.append(comp)
        frontier = nxt
    return [Nucleus(frame, t) for t in sorted(seen)]


def sublocale_frame(j: Nucleus):
    """Frame of fixed points of ``j`` and its inclusion into the ambient frame.

    Meets are inherited and the join of S is j(\\/S).
    """
    F = j.frame
    fix = j.fixed_points()
    pos = {u: i for i, u in enumerate(fix)}
    leq = tuple(tuple(F.le(a, b) for b in fix) for a in fix)
    P = FinPoset(leq, tuple(F.label(u) for u in fix))
    meet = [[pos[F.meet(a, b)] for b in fix] for a in fix]
    join = [[pos[j.table[F.join(a, b)]] for b in fix] for a in fix]
    S = lattice_from_tables(P, pos[F.top], pos[j.table[F.bot]], meet, join)
    return S, tuple(fix)


def enumerate_prenuclei(F: FinFrame, cap: int | None = None) -> Iterator[Prenucleus]:
    yield from _search(F, idempotent=False, cap=cap)


def enumerate_nuclei(F: FinFrame, cap: int | None = None) -> Iterator[Nucleus]:
    """Every nucleus on F in lexicographic table order.

    Pruned backtracking: a value is only tried if it is above its argument,
    keeps the partial table monotone and meet-preserving, and does not break
    idempotency on the assigned part. The cap bounds visited search nodes.
    """
    yield from _search(F, idempotent=True, cap=cap)


def _search(F: FinFrame, idempotent: bool, cap):
    budget = caps.Budget(cap)
    n = F.n
    t = [-1] * n

    def ok(x, y):
        for z in range(x):
            tz = t[z]
            if F.le(z, x) and not F.le(tz, y):
                return False
            if F.le(x, z) and not F.le(y, tz):
                return False
        for z in range(x + 1):
            tz = y if z == x else t[z]
            m = F.meet(x, z)
            if m < x and t[m] != F.meet(y, tz):
                return False
            if m == x and y != F.meet(y, tz):
                return False
        for a in range(x):
            for b in range(a + 1, x):
                if F.meet(a, b) == x and y != F.meet(t[a], t[b]):
                    return False
        if idempotent:
            if y < x and t[y] != y:
                return False
            for z in range(x):
                if t[z] == x and y != x:
                    return False
        return True

    def extend(x):
        if x == n:
            yield Nucleus(F, tuple(t))
            return
        for y in sorted(F.poset.up[x]):
            budget.tick()
            if ok(x, y):
                t[x] = y
                yield from extend(x + 1)
        t[x] = -1

    yield from extend(0)


def preserves_directed_joins(j: Nucleus) -> bool:
    """Scott continuity, checked over every directed subset of the frame."""
    F = j.frame
    return all(
        j.table[d] == F.join_all(j.table[s] for s in S) for d, S in directed_subsets(F)
    )


def johnstone_decompose(j: Nucleus) -> list[tuple[int, Nucleus]]:
    """The family closed(j(K)) & open(K), indexed by the compact opens K."""
    F = j.frame
    return [
        (K, nucleus_meet(closed_nucleus(F, j.table[K]), open_nucleus(F, K)))
        for K in compact_opens(F)
    ]
