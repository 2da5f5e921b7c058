"""The patch of a finite frame: its frame of nuclei, base, counit and universal maps."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .errors import CapExceeded, NotFrameHom, NotStone, UPFailure
from .frame import (
    BaseFamily,
    FinFrame,
    FrameHom,
    compact_opens,
    complement,
    frame_hom_violations,
    frame_homs,
    is_stone,
)
from .lattice import lattice_from_tables
from .nuclei import (
    Nucleus,
    closed_nucleus,
    enumerate_nuclei,
    nucleus_join,
    nucleus_meet,
    open_nucleus,
)
from .order import FinPoset, MonotoneMap
from .report import Certificate


@dataclass
class PatchFrame:
    base_frame: FinFrame = field(repr=False)
    frame: FinFrame
    nuclei: list[Nucleus]

    def index_of(self, j: Nucleus) -> int:
        return self._index[j.table]

    def __post_init__(self):
        self._index = {j.table: i for i, j in enumerate(self.nuclei)}


def nucleus_name(X: FinFrame, j: Nucleus) -> str:
    """Display name: c_U for closed, o_U for open, c_U&o_V for a basic meet.

    The identity prefers c_bot and the top nucleus o_bot, matching how the
    basic opens are usually drawn.
    """
    labels = X.labels
    for u in X.elements:
        if u != X.top and closed_nucleus(X, u).table == j.table:
            return f"c_{labels[u]}"
    for u in X.elements:
        if u != X.top and open_nucleus(X, u).table == j.table:
            return f"o_{labels[u]}"
    for u, v in product(X.elements, repeat=2):
        if nucleus_meet(closed_nucleus(X, u), open_nucleus(X, v)).table == j.table:
            return f"c_{labels[u]}&o_{labels[v]}"
    return "j[" + ",".join(labels[x] for x in j.table) + "]"


def patch(X: FinFrame, cap: int | None = None) -> PatchFrame:
    """All nuclei on X under the pointwise order.

    Every nucleus on a finite frame preserves directed joins, so the full set
    of nuclei is the frame of Scott-continuous nuclei.
    """
    nuc = list(enumerate_nuclei(X, cap))
    # order so that the identity comes first and the top nucleus last
    nuc.sort(key=lambda j: (sum(len(X.poset.down[v]) for v in j.table), j.table))
    index = {j.table: i for i, j in enumerate(nuc)}
    leq = tuple(tuple(all(X.le(a, b) for a, b in zip(j.table, k.table)) for k in nuc) for j in nuc)
    P = FinPoset(leq, tuple(nucleus_name(X, j) for j in nuc))
    meet = [[index[nucleus_meet(j, k).table] for k in nuc] for j in nuc]
    join = [[index[nucleus_join([j, k], X).table] for k in nuc] for j in nuc]
    top = index[(X.top,) * X.n]
    bot = index[tuple(X.elements)]
    return PatchFrame(X, lattice_from_tables(P, top, bot, meet, join), nuc)


@dataclass
class PatchBase:
    family: BaseFamily
    pairs: list[tuple[int, int]]

    def member(self, k1: int, k2: int) -> int:
        return self.family.members[self.pairs.index((k1, k2))]


def patch_base(X: FinFrame, P: PatchFrame | None = None) -> PatchBase:
    """gamma(K1, K2) = closed(K1) & open(K2) over pairs of compact opens."""
    P = P or patch(X)
    K = compact_opens(X)
    pairs = list(product(K, K))
    members = tuple(
        P.index_of(nucleus_meet(closed_nucleus(X, a), open_nucleus(X, b))) for a, b in pairs
    )
    return PatchBase(BaseFamily(P.frame, members), pairs)


@dataclass
class Epsilon:
    """The counit: eps*(U) = closed(U) and its right adjoint j |-> j(bot)."""

    upper: FrameHom
    lower: MonotoneMap


def epsilon(X: FinFrame, P: PatchFrame | None = None) -> Epsilon:
    P = P or patch(X)
    up = FrameHom(X, P.frame, tuple(P.index_of(closed_nucleus(X, u)) for u in X.elements))
    low = MonotoneMap(P.frame, X, tuple(j.table[X.bot] for j in P.nuclei))
    return Epsilon(up, low)


def universal_map(f: FrameHom, P: PatchFrame | None = None) -> FrameHom:
    """The lift patch(A) -> X of a frame hom f*: A -> X into a Stone frame.

    j |-> \\/ over compact K of f*(j(K)) & complement(f*(K)).
    """
    A, X = f.dom, f.cod
    if not is_stone(X):
        raise NotStone()
    bad = frame_hom_violations(f)
    if bad:
        raise NotFrameHom(bad[0].axiom, *bad[0].witness)
    P = P or patch(A)
    K = compact_opens(A)
    neg = {}
    for k in K:
        c = complement(X, f.table[k])
        if c is None:
            raise NotStone(k)
        neg[k] = c
    table = tuple(
        X.join_all(X.meet(f.table[j.table[k]], neg[k]) for k in K) for j in P.nuclei
    )
    return FrameHom(P.frame, X, table)


@dataclass
class PatchUPCertificate:
    f: FrameHom
    lift: FrameHom
    commutes: bool
    commuting_homs: int
    unique: bool
    uniqueness_checked: bool = True

    def __bool__(self):
        return self.commutes and (self.unique or not self.uniqueness_checked)

    def as_dict(self):
        return {
            "f": list(self.f.table),
            "lift": list(self.lift.table),
            "commutes": self.commutes,
            "commuting_homs": self.commuting_homs,
            "unique": self.unique,
            "uniqueness_checked": self.uniqueness_checked,
        }


def verify_patch_up(A: FinFrame, X: FinFrame, cap: int | None = None) -> list[PatchUPCertificate]:
    """Check existence and uniqueness of the lift for every frame hom A -> X."""
    if not is_stone(X):
        raise NotStone()
    P = patch(A, cap)
    eps = epsilon(A, P).upper
    try:
        candidates = list(frame_homs(P.frame, X, cap))
        checked = True
    except CapExceeded:
        candidates, checked = [], False
    out = []
    for f in frame_homs(A, X, cap):
        lift = universal_map(f, P)
        commutes = lift.compose(eps).table == f.table and not frame_hom_violations(lift)
        matching = [h for h in candidates if h.compose(eps).table == f.table]
        unique = checked and len(matching) == 1 and matching[0].table == lift.table
        cert = PatchUPCertificate(f, lift, commutes, len(matching), unique, checked)
        if not cert:
            raise UPFailure(list(f.table), list(lift.table), len(matching))
        out.append(cert)
    return out


def patch_is_stone(X: FinFrame, cap: int | None = None) -> Certificate:
    return is_stone(patch(X, cap).frame, cap)
