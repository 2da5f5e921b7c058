"""Finite frames.

Every finite distributive lattice is a frame, so a frame here is just a
:class:`FinDistLattice` whose joins are taken over arbitrary subsets.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterator

from . import caps
from .errors import NotFrameHom, NotJoinPreserving
from .lattice import FinDistLattice, Violation, hom_violations
from .order import MonotoneMap
from .report import Certificate

FinFrame = FinDistLattice


def join_subset(F: FinFrame, S) -> int:
    """Least upper bound of a subset; the empty join is bot."""
    return F.join_all(S)


def meet_subset(F: FinFrame, S) -> int:
    return F.meet_all(S)


def subsets(items):
    items = list(items)
    for r in range(len(items) + 1):
        yield from combinations(items, r)


def frame_distributivity_witness(F: FinFrame, cap: int | None = None):
    """First (x, S) with x & \\/S != \\/{x & s}, scanning all subsets S."""
    caps.check_subsets(F.n, cap)
    for S in subsets(F.elements):
        lhs_join = F.join_all(S)
        for x in F.elements:
            if F.meet(x, lhs_join) != F.join_all(F.meet(x, s) for s in S):
                return x, S
    return None


# adjoints and implication

def join_preservation_witness(h: MonotoneMap):
    """A subset whose join ``h`` fails to preserve, or None.

    On a finite lattice preserving the empty join and all binary joins is the
    same as preserving every subset join, so only those subsets are scanned.
    """
    A, B, t = h.dom, h.cod, h.table
    if t[A.bot] != B.bot:
        return ()
    for x, y in combinations(A.elements, 2):
        if t[A.join(x, y)] != B.join(t[x], t[y]):
            return (x, y)
    return None


def right_adjoint(h: MonotoneMap) -> MonotoneMap:
    """The right adjoint g(b) = \\/{x : h(x) <= b} of a join-preserving map."""
    w = join_preservation_witness(h)
    if w is not None:
        raise NotJoinPreserving(*w)
    A, B = h.dom, h.cod
    table = tuple(A.join_all(x for x in A.elements if B.le(h.table[x], b)) for b in B.elements)
    return MonotoneMap(B, A, table)


def heyting(F: FinFrame, u: int, v: int) -> int:
    return F.implication_table[u][v]


def negation(F: FinFrame, u: int) -> int:
    return F.implication_table[u][F.bot]


# compactness

def is_directed(F: FinFrame, S) -> bool:
    """Inhabited, and every pair has an upper bound inside S."""
    S = list(S)
    if not S:
        return False
    Sset = set(S)
    return all(
        any(F.le(a, c) and F.le(b, c) for c in Sset) for a, b in combinations(S, 2)
    )


def _up_masks(F: FinFrame) -> list[int]:
    return [sum(1 << j for j in F.poset.up[i]) for i in F.elements]


def _directed_mask(S: int, members: list[int], up: list[int]) -> bool:
    common = S
    for a in members:
        common &= up[a]
    if common:
        # a greatest element bounds every pair
        return True
    for x, a in enumerate(members):
        for b in members[x + 1:]:
            if not up[a] & up[b] & S:
                return False
    return True


def directed_subsets(F: FinFrame, cap: int | None = None) -> list[tuple[int, list[int]]]:
    """Every directed subset with its join, memoised on the frame instance."""
    caps.check_subsets(F.n, cap)
    memo = F.__dict__.get("_directed")
    if memo is None:
        up = _up_masks(F)
        memo = []
        jt = F.join_table
        for S in range(1, 2**F.n):
            members = [i for i in F.elements if S >> i & 1]
            if _directed_mask(S, members, up):
                j = F.bot
                for i in members:
                    j = jt[j][i]
                memo.append((j, members))
        F.__dict__["_directed"] = memo
    return memo


def way_below(F: FinFrame, u: int, v: int, cap: int | None = None) -> bool:
    """u << v: every directed subset whose join is above v has a member above u."""
    for j, S in directed_subsets(F, cap):
        if F.le(v, j) and not any(F.le(u, s) for s in S):
            return False
    return True


def is_compact(F: FinFrame, u: int, cap: int | None = None) -> bool:
    return way_below(F, u, u, cap)


def compact_opens(F: FinFrame, cap: int | None = None) -> list[int]:
    return [u for u in F.elements if is_compact(F, u, cap)]


# complements

def complement(F: FinFrame, u: int):
    """The Boolean complement of u, or None."""
    return F.complements[u]


def is_clopen(F: FinFrame, u: int) -> bool:
    return F.complements[u] is not None


def well_inside(F: FinFrame, u: int, v: int) -> bool:
    """Some w is disjoint from u and joins v to top."""
    return any(
        F.meet(u, w) == F.bot and F.join(v, w) == F.top for w in F.elements
    )


def clopens(F: FinFrame) -> list[int]:
    return [u for u in F.elements if is_clopen(F, u)]


# bases

@dataclass(frozen=True)
class BaseFamily:
    frame: FinFrame = field(repr=False)
    members: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))

    @property
    def index_set(self) -> range:
        return range(len(self.members))

    def covering(self, u: int) -> list[int]:
        """Indices of the members below u."""
        return [i for i, b in enumerate(self.members) if self.frame.le(b, u)]

    def elements(self) -> list[int]:
        return sorted(set(self.members))


def is_base(B: BaseFamily) -> Certificate:
    F = B.frame
    for u in F.elements:
        if F.join_all(B.members[i] for i in B.covering(u)) != u:
            return Certificate("is_base", False, {"element": u})
    return Certificate("is_base", True, {"members": list(B.members)})


def directify_base(B: BaseFamily, cap: int | None = None) -> BaseFamily:
    """Close a family under finite joins (empty join included), deduplicated."""
    F = B.frame
    distinct = sorted(set(B.members))
    caps.check_subsets(len(distinct), cap)
    closed = {F.bot}
    frontier = [F.bot]
    while frontier:
        nxt = []
        for x in frontier:
            for b in distinct:
                y = F.join(x, b)
                if y not in closed:
                    closed.add(y)
                    nxt.append(y)
        frontier = nxt
    return BaseFamily(F, tuple(sorted(closed)))


def covers_directed(B: BaseFamily) -> Certificate:
    F = B.frame
    for u in F.elements:
        cov = [B.members[i] for i in B.covering(u)]
        if not is_directed(F, cov):
            return Certificate("directed_covers", False, {"element": u})
    return Certificate("directed_covers", True, None)


# class predicates

def is_spectral(F: FinFrame, cap: int | None = None) -> Certificate:
    """Compact, compact opens closed under binary meets and forming a base.

    Smallness of the base holds trivially for a finite carrier and is recorded
    in the certificate rather than tested.
    """
    K = compact_opens(F, cap)
    Kset = set(K)
    checks = {}
    checks["SP1_compact"] = F.top in Kset
    bad = next(((a, b) for a, b in product(K, K) if F.meet(a, b) not in Kset), None)
    checks["SP2_meet_closed"] = bad is None
    base = is_base(BaseFamily(F, tuple(K)))
    checks["SP3_base"] = bool(base)
    checks["SP4_small"] = True
    value = all(checks.values())
    witness = {"base": K, "checks": checks}
    if bad is not None:
        witness["meet_failure"] = list(bad)
    if not base:
        witness["base_failure"] = base.witness
    return Certificate("spectral", value, witness)


def is_zero_dimensional(F: FinFrame) -> Certificate:
    C = clopens(F)
    base = is_base(BaseFamily(F, tuple(C)))
    return Certificate("zero_dimensional", bool(base), {"base": C} if base else base.witness)


def is_regular(F: FinFrame) -> Certificate:
    """Every open is the join of the opens well inside it.

    Testing against the family of all opens is exact: any regular base gives a
    subfamily of this join.
    """
    for u in F.elements:
        if F.join_all(w for w in F.elements if well_inside(F, w, u)) != u:
            return Certificate("regular", False, {"element": u})
    return Certificate("regular", True, {"base": list(F.elements)})


def is_compact_frame(F: FinFrame, cap: int | None = None) -> bool:
    return is_compact(F, F.top, cap)


def is_stone(F: FinFrame, cap: int | None = None) -> Certificate:
    compact = is_compact_frame(F, cap)
    zd = is_zero_dimensional(F)
    return Certificate(
        "stone",
        compact and bool(zd),
        {"compact": compact, "zero_dimensional": bool(zd), "base": clopens(F)},
    )


def classify(F: FinFrame, cap: int | None = None) -> list[Certificate]:
    return [is_spectral(F, cap), is_zero_dimensional(F), is_regular(F), is_stone(F, cap)]


# homomorphisms and points

@dataclass(frozen=True)
class FrameHom:
    dom: FinFrame = field(repr=False)
    cod: FinFrame = field(repr=False)
    table: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(self.table))

    def __call__(self, i: int) -> int:
        return self.table[i]

    def compose(self, other: "FrameHom") -> "FrameHom":
        """self after other."""
        return FrameHom(other.dom, self.cod, tuple(self.table[x] for x in other.table))


def frame_hom_violations(h) -> list[Violation]:
    """Top, binary meets and all subset joins, each with a witness."""
    out = [v for v in hom_violations(h) if v.axiom in ("top", "meet")]
    w = join_preservation_witness(h)
    if w is not None:
        out.append(Violation("joins", w))
    return out


def subset_join_witness(h, cap: int | None = None):
    """Exhaustive scan over every subset of the domain."""
    A, B, t = h.dom, h.cod, h.table
    caps.check_subsets(A.n, cap)
    for S in subsets(A.elements):
        if t[A.join_all(S)] != B.join_all(t[s] for s in S):
            return S
    return None


def check_frame_hom(h) -> FrameHom:
    v = frame_hom_violations(h)
    if v:
        raise NotFrameHom(v[0].axiom, *v[0].witness)
    return h if isinstance(h, FrameHom) else FrameHom(h.dom, h.cod, h.table)


def identity_hom(F: FinFrame) -> FrameHom:
    return FrameHom(F, F, tuple(F.elements))


def frame_homs(F: FinFrame, G: FinFrame, cap: int | None = None) -> Iterator[FrameHom]:
    """All maps preserving top, bot, binary meets and joins, in table order."""
    caps.check(G.n**F.n, cap)
    n = F.n
    table = [-1] * n

    def consistent(i, y):
        if i == F.top and y != G.top:
            return False
        if i == F.bot and y != G.bot:
            return False
        for k in range(i + 1):
            yk = y if k == i else table[k]
            m, j = F.meet(i, k), F.join(i, k)
            if m <= i:
                ym = y if m == i else table[m]
                if ym != G.meet(y, yk):
                    return False
            if j <= i:
                yj = y if j == i else table[j]
                if yj != G.join(y, yk):
                    return False
        # meets/joins of earlier pairs landing on i
        for a in range(i):
            for b in range(a, i):
                if F.meet(a, b) == i and G.meet(table[a], table[b]) != y:
                    return False
                if F.join(a, b) == i and G.join(table[a], table[b]) != y:
                    return False
        return True

    def extend(i):
        if i == n:
            yield FrameHom(F, G, tuple(table))
            return
        for y in G.elements:
            if consistent(i, y):
                table[i] = y
                yield from extend(i + 1)
        table[i] = -1

    yield from extend(0)


@dataclass(frozen=True)
class Point:
    """A completely prime filter, i.e. the preimage of top under a hom into 2."""

    frame: FinFrame = field(repr=False)
    filter: frozenset

    def sorted(self) -> list[int]:
        return sorted(self.filter)

    def labels(self) -> list[str]:
        return [self.frame.label(i) for i in self.sorted()]


def point_violations(p: Point) -> list[str]:
    F, S = p.frame, p.filter
    out = []
    if F.top not in S:
        out.append("contains_top")
    if F.bot in S:
        out.append("excludes_bot")
    if any(F.le(x, y) and y not in S for x in S for y in F.elements):
        out.append("upward_closed")
    if any(F.meet(x, y) not in S for x in S for y in S):
        out.append("meet_closed")
    if any(F.join_all(T) in S and not any(t in S for t in T) for T in subsets(F.elements)):
        out.append("completely_prime")
    return out


def points(F: FinFrame, cap: int | None = None) -> list[Point]:
    from .lattice import two

    T = two()
    return [point_of_hom(h) for h in frame_homs(F, T, cap)]


def point_of_hom(h: FrameHom) -> Point:
    return Point(h.dom, frozenset(x for x in h.dom.elements if h.table[x] == h.cod.top))


def hom_of_point(p: Point) -> FrameHom:
    from .lattice import two

    T = two()
    return FrameHom(p.frame, T, tuple(T.top if x in p.filter else T.bot for x in p.frame.elements))


def is_spectral_map(h: FrameHom, cap: int | None = None) -> bool:
    """The hom sends compact opens to compact opens."""
    return all(is_compact(h.cod, h.table[k], cap) for k in compact_opens(h.dom, cap))
