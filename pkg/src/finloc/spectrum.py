"""Ideals, the spectrum of a distributive lattice, and Stone duality on finite data."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from . import caps
from .errors import IsoFailure, NotSpectral
from .frame import FinFrame, FrameHom, check_frame_hom, compact_opens, is_compact
from .lattice import FinDistLattice, LatticeHom, hom_violations, is_iso, lattice_from_tables
from .order import FinPoset
from .report import Certificate


@dataclass(frozen=True)
class Ideal:
    lattice: FinDistLattice = field(repr=False, compare=False)
    members: frozenset

    def __contains__(self, x):
        return x in self.members

    def sorted(self) -> list[int]:
        return sorted(self.members)

    def label(self) -> str:
        L = self.lattice
        return "{" + ",".join(L.label(i) for i in self.sorted()) + "}"


def is_ideal(L: FinDistLattice, S) -> Certificate:
    S = frozenset(S)
    if not S:
        return Certificate("ideal", False, {"axiom": "I1_inhabited"})
    for y in S:
        for x in L.poset.down[y]:
            if x not in S:
                return Certificate("ideal", False, {"axiom": "I2_downward_closed", "witness": [x, y]})
    for x, y in product(sorted(S), repeat=2):
        if L.join(x, y) not in S:
            return Certificate("ideal", False, {"axiom": "I3_join_closed", "witness": [x, y, L.join(x, y)]})
    return Certificate("ideal", True, {"members": sorted(S)})


def principal_ideal(L: FinDistLattice, x: int) -> Ideal:
    return Ideal(L, L.poset.down[x])


def _sort_key(s):
    return (len(s), sorted(s))


def all_ideals(L: FinDistLattice, cap: int | None = None) -> list[Ideal]:
    """Every subset passing the ideal axioms, ordered by (size, members)."""
    caps.check_subsets(L.n, cap)
    out = []
    for mask in range(1, 2**L.n):
        S = frozenset(i for i in L.elements if mask >> i & 1)
        if is_ideal(L, S):
            out.append(S)
    out.sort(key=_sort_key)
    return [Ideal(L, S) for S in out]


def is_principal(I: Ideal) -> bool:
    L = I.lattice
    top = L.poset.greatest(I.members)
    return top is not None and L.poset.down[top] == I.members


@dataclass
class CoverWitness:
    elements: list[int]
    ideal_index: list[int]

    def as_dict(self):
        return {"elements": self.elements, "ideals": self.ideal_index}


def covers(s: Sequence[int], fam: Sequence[Ideal]):
    """A witness that each list element lies in some ideal of ``fam``, or None.

    Follows the inductive shape: the empty list is covered, and a cons cell
    needs a membership for its head plus a cover of its tail.
    """
    if not s:
        return CoverWitness([], [])
    head, tail = s[0], s[1:]
    idx = next((i for i, I in enumerate(fam) if head in I.members), None)
    if idx is None:
        return None
    rest = covers(tail, fam)
    if rest is None:
        return None
    return CoverWitness([head] + rest.elements, [idx] + rest.ideal_index)


def ideal_join(fam: Sequence[Ideal], lattice: FinDistLattice | None = None) -> Ideal:
    """Least ideal containing every member: close the union under joins and down-closure."""
    if lattice is None:
        if not fam:
            raise ValueError("the lattice is needed to join an empty family")
        lattice = fam[0].lattice
    L = lattice
    S = {L.bot}
    for I in fam:
        S |= I.members
    changed = True
    while changed:
        changed = False
        for x in list(S):
            for y in list(S):
                z = L.join(x, y)
                if z not in S:
                    S.add(z)
                    changed = True
        for x in list(S):
            for y in L.poset.down[x]:
                if y not in S:
                    S.add(y)
                    changed = True
    return Ideal(L, frozenset(S))


def ideal_join_by_lists(fam: Sequence[Ideal], lattice: FinDistLattice) -> frozenset:
    """Members x equal to the join of some covered list.

    Repetitions never change a join, so lists without repeats over the union
    of the family suffice; this is the literal definition used as an oracle.
    """
    L = lattice
    union = sorted(set().union(*(I.members for I in fam)) if fam else set())
    caps.check_subsets(len(union))
    out = set()
    for mask in range(2 ** len(union)):
        s = [union[i] for i in range(len(union)) if mask >> i & 1]
        if covers(s, fam) is not None:
            out.add(L.join_all(s))
    return frozenset(out)


@dataclass
class Spectrum:
    lattice: FinDistLattice = field(repr=False)
    frame: FinFrame
    ideals: list[Ideal]

    def index_of(self, members) -> int:
        target = frozenset(members)
        for i, I in enumerate(self.ideals):
            if I.members == target:
                return i
        raise KeyError(sorted(target))


def spectrum(L: FinDistLattice, cap: int | None = None) -> Spectrum:
    """Frame of ideals under inclusion, with meet = intersection and join = ideal_join."""
    ideals = all_ideals(L, cap)
    sets = [I.members for I in ideals]
    pos = {s: i for i, s in enumerate(sets)}
    P = FinPoset(tuple(tuple(a <= b for b in sets) for a in sets), tuple(I.label() for I in ideals))
    meet = [[pos[a & b] for b in sets] for a in sets]
    join = [[pos[ideal_join([I, J], L).members] for J in ideals] for I in ideals]
    top = pos[frozenset(L.elements)]
    bot = pos[frozenset([L.bot])]
    return Spectrum(L, lattice_from_tables(P, top, bot, meet, join), ideals)


@dataclass
class CompactOpens:
    """K(X) as a lattice together with its inclusion into the frame."""

    frame: FinFrame = field(repr=False)
    lattice: FinDistLattice
    inclusion: tuple[int, ...]

    def index_of(self, u: int) -> int:
        return self.inclusion.index(u)


def compact_opens_lattice(X: FinFrame, cap: int | None = None) -> CompactOpens:
    K = compact_opens(X, cap)
    pos = {u: i for i, u in enumerate(K)}
    P = FinPoset(tuple(tuple(X.le(a, b) for b in K) for a in K), tuple(X.label(u) for u in K))
    meet = [[pos[X.meet(a, b)] for b in K] for a in K]
    join = [[pos[X.join(a, b)] for b in K] for a in K]
    lat = lattice_from_tables(P, pos[X.top], pos[X.bot], meet, join)
    return CompactOpens(X, lat, tuple(K))


def duality_roundtrip_object(L: FinDistLattice, cap: int | None = None) -> Certificate:
    """x |-> principal ideal of x is a lattice isomorphism L -> K(Spec L)."""
    sp = spectrum(L, cap)
    K = compact_opens_lattice(sp.frame, cap)
    table = []
    for x in L.elements:
        u = sp.index_of(L.poset.down[x])
        if u not in K.inclusion:
            raise IsoFailure("principal ideal not compact", x)
        table.append(K.index_of(u))
    h = LatticeHom(L, K.lattice, tuple(table))
    if not is_iso(h):
        raise IsoFailure("not bijective or not order-reflecting", *table)
    bad = hom_violations(h)
    if bad:
        raise IsoFailure(bad[0].axiom, *bad[0].witness)
    return Certificate("K(Spec L) = L", True, {"map": table, "ideals": [I.sorted() for I in sp.ideals]})


def duality_roundtrip_frame(X: FinFrame, cap: int | None = None) -> Certificate:
    """phi: U |-> {compact K <= U} and theta: I |-> \\/I are mutually inverse frame isos."""
    K = compact_opens_lattice(X, cap)
    sp = spectrum(K.lattice, cap)
    phi = []
    for u in X.elements:
        members = frozenset(i for i, k in enumerate(K.inclusion) if X.le(k, u))
        phi.append(sp.index_of(members))
    theta = [X.join_all(K.inclusion[i] for i in I.members) for I in sp.ideals]
    for u in X.elements:
        if theta[phi[u]] != u:
            raise IsoFailure("theta o phi", u)
    for i in sp.frame.elements:
        if phi[theta[i]] != i:
            raise IsoFailure("phi o theta", i)
    for h in (FrameHom(X, sp.frame, phi), FrameHom(sp.frame, X, theta)):
        check_frame_hom(h)
    return Certificate("Idl(K X) = X", True, {"phi": phi, "theta": theta})


def K_on_hom(f: FrameHom, cap: int | None = None) -> LatticeHom:
    """Restrict a frame hom O(Y) -> O(X) to compact opens: K(Y) -> K(X)."""
    KY = compact_opens_lattice(f.dom, cap)
    KX = compact_opens_lattice(f.cod, cap)
    table = []
    for k in KY.inclusion:
        image = f.table[k]
        if not is_compact(f.cod, image, cap):
            raise NotSpectral(k, image)
        table.append(KX.index_of(image))
    return LatticeHom(KY.lattice, KX.lattice, tuple(table))


def Spec_on_hom(h: LatticeHom, Y: FinFrame, X: FinFrame, cap: int | None = None) -> FrameHom:
    """V |-> \\/{ r_X(h(K)) : r_Y(K) <= V } for a lattice hom h: K(Y) -> K(X)."""
    KY = compact_opens_lattice(Y, cap)
    KX = compact_opens_lattice(X, cap)
    table = tuple(
        X.join_all(KX.inclusion[h.table[k]] for k in KY.lattice.elements if Y.le(KY.inclusion[k], v))
        for v in Y.elements
    )
    return check_frame_hom(FrameHom(Y, X, table))

