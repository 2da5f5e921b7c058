"""Finite distributive lattices, their homomorphisms, and the Birkhoff oracle."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterator, Sequence

from . import caps
from .errors import NoBot, NoJoin, NoMeet, NotDistributive, NoTop
from .order import FinPoset, antichain, chain, cover_pairs, enumerate_monotone_maps, hasse_cover, subposet

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class FinDistLattice:
    """Order plus explicit meet/join tables.

    Construct through :func:`build_lattice` for a checked value; the raw
    constructor is unchecked so that :func:`validate_lattice` can report on
    inconsistent data.
    """

    poset: FinPoset
    top: int
    bot: int
    meet_table: Table = field(repr=False)
    join_table: Table = field(repr=False)

    @property
    def n(self) -> int:
        return self.poset.n

    @property
    def elements(self) -> range:
        return self.poset.elements

    @property
    def labels(self) -> tuple[str, ...]:
        return self.poset.labels

    def label(self, i: int) -> str:
        return self.poset.labels[i]

    def index(self, label: str) -> int:
        return self.poset.index(label)

    def le(self, i: int, j: int) -> bool:
        return self.poset.leq[i][j]

    def meet(self, i: int, j: int) -> int:
        return self.meet_table[i][j]

    def join(self, i: int, j: int) -> int:
        return self.join_table[i][j]

    def join_all(self, items) -> int:
        out = self.bot
        jt = self.join_table
        for i in items:
            out = jt[out][i]
        return out

    def meet_all(self, items) -> int:
        out = self.top
        mt = self.meet_table
        for i in items:
            out = mt[out][i]
        return out

    @cached_property
    def implication_table(self) -> Table:
        """Heyting implication ``u => v`` as the join of every w with w & u <= v."""
        n = self.n
        return tuple(
            tuple(
                self.join_all(w for w in range(n) if self.le(self.meet_table[w][u], v))
                for v in range(n)
            )
            for u in range(n)
        )

    @cached_property
    def complements(self) -> tuple:
        out = []
        for u in self.elements:
            found = None
            for w in self.elements:
                if self.meet_table[u][w] == self.bot and self.join_table[u][w] == self.top:
                    found = w
                    break
            out.append(found)
        return tuple(out)

    def __repr__(self):
        return f"FinDistLattice(n={self.n}, labels={list(self.labels)})"


def build_lattice(P: FinPoset) -> FinDistLattice:
    """Derive meet/join tables from the order; raise if not a distributive lattice.

    Pairwise bounds are checked before top and bot, so an incomplete diamond
    reports the missing join rather than the missing top it implies.
    """
    n = P.n
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            m = P.glb((i, j))
            if m is None:
                raise NoMeet(i, j)
            k = P.lub((i, j))
            if k is None:
                raise NoJoin(i, j)
            meet[i][j] = meet[j][i] = m
            join[i][j] = join[j][i] = k
    elems = list(P.elements)
    top = P.greatest(elems)
    if top is None:
        raise NoTop()
    bot = P.least(elems)
    if bot is None:
        raise NoBot()
    for x, y, z in product(range(n), repeat=3):
        if meet[x][join[y][z]] != join[meet[x][y]][meet[x][z]]:
            raise NotDistributive(x, y, z)
    return FinDistLattice(P, top, bot, tuple(map(tuple, meet)), tuple(map(tuple, join)))


def lattice_from_tables(P: FinPoset, top: int, bot: int, meet, join) -> FinDistLattice:
    return FinDistLattice(P, top, bot, tuple(map(tuple, meet)), tuple(map(tuple, join)))


@dataclass
class Violation:
    axiom: str
    witness: tuple

    def as_dict(self):
        return {"axiom": self.axiom, "witness": list(self.witness)}


@dataclass
class LatticeReport:
    violations: list[Violation]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def failed(self) -> set[str]:
        return {v.axiom for v in self.violations}


def validate_lattice(L: FinDistLattice) -> LatticeReport:
    """Check every lattice law on the tables; one violation record per failed law."""
    n = L.n
    m, j = L.meet_table, L.join_table
    r = range(n)
    laws = {
        "meet_associative": ((x, y, z) for x, y, z in product(r, r, r) if m[m[x][y]][z] != m[x][m[y][z]]),
        "join_associative": ((x, y, z) for x, y, z in product(r, r, r) if j[j[x][y]][z] != j[x][j[y][z]]),
        "meet_commutative": ((x, y) for x, y in product(r, r) if m[x][y] != m[y][x]),
        "join_commutative": ((x, y) for x, y in product(r, r) if j[x][y] != j[y][x]),
        "meet_idempotent": ((x,) for x in r if m[x][x] != x),
        "join_idempotent": ((x,) for x in r if j[x][x] != x),
        "meet_unit": ((x,) for x in r if m[x][L.top] != x),
        "join_unit": ((x,) for x in r if j[x][L.bot] != x),
        "absorption_meet": ((x, y) for x, y in product(r, r) if m[x][j[x][y]] != x),
        "absorption_join": ((x, y) for x, y in product(r, r) if j[x][m[x][y]] != x),
        "distributive": (
            (x, y, z) for x, y, z in product(r, r, r) if m[x][j[y][z]] != j[m[x][y]][m[x][z]]
        ),
        "dual_distributive": (
            (x, y, z) for x, y, z in product(r, r, r) if j[x][m[y][z]] != m[j[x][y]][j[x][z]]
        ),
        "order_meet": ((x, y) for x, y in product(r, r) if L.le(x, y) != (m[x][y] == x)),
        "order_join": ((x, y) for x, y in product(r, r) if L.le(x, y) != (j[x][y] == y)),
    }
    violations = []
    for name, gen in laws.items():
        w = next(gen, None)
        if w is not None:
            violations.append(Violation(name, w))
    return LatticeReport(violations)


@dataclass(frozen=True)
class LatticeHom:
    dom: FinDistLattice = field(repr=False)
    cod: FinDistLattice = field(repr=False)
    table: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(self.table))

    def __call__(self, i: int) -> int:
        return self.table[i]


def hom_violations(h) -> list[Violation]:
    """Which of top, bot, binary meet, binary join the table fails to preserve."""
    A, B, t = h.dom, h.cod, h.table
    out = []
    if t[A.top] != B.top:
        out.append(Violation("top", (A.top,)))
    if t[A.bot] != B.bot:
        out.append(Violation("bot", (A.bot,)))
    pairs = list(product(A.elements, repeat=2))
    w = next(((x, y) for x, y in pairs if t[A.meet(x, y)] != B.meet(t[x], t[y])), None)
    if w:
        out.append(Violation("meet", w))
    w = next(((x, y) for x, y in pairs if t[A.join(x, y)] != B.join(t[x], t[y])), None)
    if w:
        out.append(Violation("join", w))
    return out


def is_lattice_hom(h) -> bool:
    return not hom_violations(h)


def is_iso(h) -> bool:
    """Bijective with monotone inverse. Structure preservation is then asserted."""
    A, B, t = h.dom, h.cod, h.table
    if A.n != B.n or sorted(t) != list(B.elements):
        return False
    for x, y in product(A.elements, repeat=2):
        if A.le(x, y) != B.le(t[x], t[y]):
            return False
    assert not hom_violations(h), "order isomorphism failed to preserve lattice structure"
    return True


def _iso_signature(L, i):
    return (len(L.poset.down[i]), len(L.poset.up[i]))


def find_isos(K, L, cap: int | None = None) -> Iterator[LatticeHom]:
    """All order isomorphisms K -> L, found by pruned backtracking."""
    if K.n != L.n:
        return
    budget = caps.Budget(cap)
    n = K.n
    order = list(K.poset.linear_extension)
    sigK = [_iso_signature(K, i) for i in K.elements]
    sigL = [_iso_signature(L, i) for i in L.elements]
    if sorted(sigK) != sorted(sigL):
        return
    table = [-1] * n
    used = [False] * n

    def extend(pos):
        if pos == n:
            yield LatticeHom(K, L, tuple(table))
            return
        x = order[pos]
        for y in range(n):
            if used[y] or sigL[y] != sigK[x]:
                continue
            budget.tick()
            if all(
                K.le(order[q], x) == L.le(table[order[q]], y)
                and K.le(x, order[q]) == L.le(y, table[order[q]])
                for q in range(pos)
            ):
                table[x] = y
                used[y] = True
                yield from extend(pos + 1)
                used[y] = False
                table[x] = -1

    yield from extend(0)


def isomorphic(K, L, cap: int | None = None) -> bool:
    return next(find_isos(K, L, cap), None) is not None


def first_iso(K, L, cap: int | None = None):
    return next(find_isos(K, L, cap), None)


def _subset_label(P: FinPoset, s) -> str:
    return "{" + ",".join(P.labels[i] for i in sorted(s)) + "}"


def downsets(P: FinPoset, cap: int | None = None) -> list[frozenset]:
    """Every down-closed subset, sorted by (size, members)."""
    caps.check_subsets(P.n, cap)
    out = []
    for mask in range(2**P.n):
        s = frozenset(i for i in P.elements if mask >> i & 1)
        if P.is_downset(s):
            out.append(s)
    out.sort(key=lambda s: (len(s), sorted(s)))
    return out


def set_lattice(sets: Sequence[frozenset], labels: Sequence[str]) -> FinDistLattice:
    """Lattice of a family of sets closed under union and intersection."""
    index = {s: i for i, s in enumerate(sets)}
    n = len(sets)
    leq = tuple(tuple(a <= b for b in sets) for a in sets)
    P = FinPoset(leq, tuple(labels))
    meet = [[index[a & b] for b in sets] for a in sets]
    join = [[index[a | b] for b in sets] for a in sets]
    top = max(range(n), key=lambda i: len(sets[i]))
    bot = min(range(n), key=lambda i: len(sets[i]))
    return lattice_from_tables(P, top, bot, meet, join)


def downset_lattice(P: FinPoset, cap: int | None = None) -> FinDistLattice:
    ds = downsets(P, cap)
    return set_lattice(ds, [_subset_label(P, s) for s in ds])


def join_irreducible_elements(L: FinDistLattice) -> list[int]:
    """Elements other than bot with exactly one lower cover."""
    cover = hasse_cover(L.poset)
    return [
        x for x in L.elements
        if x != L.bot and sum(1 for y in L.elements if cover[y][x]) == 1
    ]


def join_irreducibles(L: FinDistLattice) -> FinPoset:
    return subposet(L.poset, join_irreducible_elements(L))


def chain_lattice(n: int, labels: Sequence[str] | None = None) -> FinDistLattice:
    return build_lattice(chain(n, labels))


def two() -> FinDistLattice:
    """The two-element frame of (classical) truth values."""
    return chain_lattice(2, ("0", "1"))


def powerset_lattice(k: int, names: Sequence[str] | None = None) -> FinDistLattice:
    names = list(names or (chr(ord("x") + i) if k <= 3 else str(i) for i in range(k)))
    return downset_lattice(antichain(k, names))


def hasse_edges(L) -> list[tuple[int, int]]:
    P = L.poset if isinstance(L, FinDistLattice) else L
    return cover_pairs(P)


def lattice_homs(K: FinDistLattice, L: FinDistLattice, cap: int | None = None) -> Iterator[LatticeHom]:
    """Bounded lattice homomorphisms K -> L, filtered from the monotone maps."""
    for m in enumerate_monotone_maps(K, L, cap):
        h = LatticeHom(K, L, m.table)
        if not hom_violations(h):
            yield h
