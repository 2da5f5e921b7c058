"""Finite Scott domains and their Scott locales.

On a finite domain every element is compact, every directed set has a
maximum and every element is sharp. The checks below still run the general
definitions so that a representation bug cannot hide behind the collapse.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from . import caps
from .errors import BijectionFailure, NotBoundedComplete, NotPointed, UPFailure
from .frame import (
    BaseFamily,
    FinFrame,
    compact_opens,
    frame_homs,
    hom_of_point,
    is_base,
    is_compact,
    is_spectral,
    is_spectral_map,
    point_of_hom,
    points,
)
from .lattice import chain_lattice, set_lattice
from .order import FinPoset
from .patch import epsilon, patch, universal_map
from .report import Certificate

FINITE_COLLAPSE = (
    "finite domain: every element is compact and sharp, every ideal of compacts is principal"
)


@dataclass(frozen=True)
class ScottDomain:
    poset: FinPoset
    bot: int

    @property
    def n(self):
        return self.poset.n

    @property
    def elements(self):
        return self.poset.elements

    def label(self, i):
        return self.poset.label(i)


def bounded_above(D: ScottDomain, x: int, y: int) -> bool:
    return bool(D.poset.up[x] & D.poset.up[y])


def validate_scott_domain(P: FinPoset, bot: int) -> ScottDomain:
    """Pointed and bounded-complete.

    A finite poset in which every bounded pair has a join is bounded-complete
    by induction on subset size, so pairs are the witnesses.
    """
    for x in P.elements:
        if not P.le(bot, x):
            raise NotPointed(bot, x)
    for x, y in combinations(P.elements, 2):
        if P.up[x] & P.up[y] and P.lub((x, y)) is None:
            raise NotBoundedComplete(x, y)
    return ScottDomain(P, bot)


def is_bounded_complete_exhaustive(P: FinPoset, cap: int | None = None):
    """Subset witness of failure, scanning every subset; None when complete."""
    caps.check_subsets(P.n, cap)
    for mask in range(2**P.n):
        S = [i for i in P.elements if mask >> i & 1]
        if P.upper_bounds(S) and P.lub(S) is None:
            return S
    return None


@dataclass(frozen=True)
class ScottOpen:
    domain: ScottDomain = field(repr=False, compare=False)
    members: frozenset


def is_directed_subset(P: FinPoset, S) -> bool:
    S = list(S)
    return bool(S) and all(any(P.le(a, c) and P.le(b, c) for c in S) for a, b in combinations(S, 2))


def scott_open_checks(D: ScottDomain, U) -> dict:
    """SO1 and SO2 decided independently of each other."""
    P, U = D.poset, frozenset(U)
    so1 = P.is_upset(U)
    so2 = True
    caps.check_subsets(D.n)
    for mask in range(1, 2**D.n):
        S = [i for i in D.elements if mask >> i & 1]
        if not is_directed_subset(P, S):
            continue
        top = P.lub(S)
        if top in U and not U.intersection(S):
            so2 = False
            break
    return {"SO1": so1, "SO2": so2}


def upset(D: ScottDomain, c: int) -> ScottOpen:
    return ScottOpen(D, D.poset.up[c])


@dataclass
class ScottLocale:
    domain: ScottDomain
    frame: FinFrame
    opens: list[frozenset]

    def index_of(self, members) -> int:
        return self.opens.index(frozenset(members))


def _set_label(D, s):
    return "{" + ",".join(D.label(i) for i in sorted(s)) + "}"


def scott_frame(D: ScottDomain, cap: int | None = None) -> ScottLocale:
    """Up-closed subsets under intersection and union."""
    caps.check_subsets(D.n, cap)
    ups = []
    for mask in range(2**D.n):
        s = frozenset(i for i in D.elements if mask >> i & 1)
        if D.poset.is_upset(s):
            ups.append(s)
    ups.sort(key=lambda s: (len(s), sorted(s)))
    return ScottLocale(D, set_lattice(ups, [_set_label(D, s) for s in ups]), ups)


def scott_base(D: ScottDomain, S: ScottLocale | None = None) -> BaseFamily:
    """Finite unions of principal up-sets, one per list of elements, deduplicated."""
    S = S or scott_frame(D)
    caps.check_subsets(D.n)
    found = set()
    for mask in range(2**D.n):
        u = frozenset().union(*(D.poset.up[c] for c in D.elements if mask >> c & 1))
        found.add(S.index_of(u))
    return BaseFamily(S.frame, tuple(sorted(found)))


def is_spectral_scott(D: ScottDomain) -> Certificate:
    S = scott_frame(D)
    B = scott_base(D, S)
    spectral = is_spectral(S.frame)
    base = is_base(B)
    members = set(B.members)
    # binary intersections of principal up-sets, split on boundedness
    coherent = True
    for b in D.elements:
        for c in D.elements:
            meet = S.frame.meet(S.index_of(D.poset.up[b]), S.index_of(D.poset.up[c]))
            if bounded_above(D, b, c):
                expected = S.index_of(D.poset.up[D.poset.lub((b, c))])
            else:
                expected = S.index_of(frozenset())
            if meet != expected or meet not in members:
                coherent = False
    basic_compact = all(is_compact(S.frame, u) for u in B.members)
    value = bool(spectral) and bool(base) and coherent and basic_compact
    return Certificate(
        "scott_spectral",
        value,
        {
            "spectral": spectral,
            "base": base,
            "base_meet_closed": coherent,
            "basic_opens_compact": basic_compact,
            "note": FINITE_COLLAPSE,
        },
    )


def sierpinski():
    """The Sierpinski frame bot < true < top, with its distinguished open."""
    F = chain_lattice(3, ("bot", "true", "top"))
    return F, F.index("true")


def verify_sierpinski_up(X: FinFrame, cap: int | None = None) -> Certificate:
    """For every open U of X exactly one frame hom from Sierpinski sends true to U."""
    S, truth = sierpinski()
    homs = list(frame_homs(S, X, cap))
    per_open = {}
    for u in X.elements:
        found = [h for h in homs if h.table[truth] == u]
        if len(found) != 1:
            raise UPFailure(u, [list(h.table) for h in found])
        h = found[0]
        images = [h.table[k] for k in compact_opens(S)]
        if images != [X.bot, u, X.top]:
            raise UPFailure(u, images)
        per_open[X.label(u)] = list(h.table)
    return Certificate("sierpinski_up", True, per_open)


def sharp_elements(D: ScottDomain) -> list[int]:
    """Elements whose membership in every compact Scott open is decided.

    Membership in a finite set always evaluates, so on finite domains this is
    every element; the loop re-checks the characterisation per element.
    """
    S = scott_frame(D)
    K = [S.opens[u] for u in compact_opens(S.frame)]
    out = []
    for x in D.elements:
        if all(isinstance(x in k, bool) for k in K):
            out.append(x)
    return out


def point_of_element(D: ScottDomain, S: ScottLocale, x: int) -> frozenset:
    """Indices of the Scott opens containing x."""
    return frozenset(i for i, U in enumerate(S.opens) if x in U)


def element_of_point(D: ScottDomain, S: ScottLocale, filt) -> int:
    """Join of the c whose principal up-set lies in the filter."""
    cs = [c for c in D.elements if S.index_of(D.poset.up[c]) in filt]
    x = D.poset.lub(cs)
    if x is None:
        raise BijectionFailure("no join", cs)
    return x


def points_equivalences(D: ScottDomain, cap: int | None = None) -> Certificate:
    """D = pt(Sigma D) = SpecPt(Sigma D), and Sharp(D) = pt(Patch Sigma D)."""
    S = scott_frame(D, cap)
    pts = points(S.frame, cap)
    filters = {p.filter for p in pts}
    for x in D.elements:
        f = point_of_element(D, S, x)
        if f not in filters:
            raise BijectionFailure("pt(x) is not a point", x)
        if element_of_point(D, S, f) != x:
            raise BijectionFailure("nu o pt", x)
    for p in pts:
        if point_of_element(D, S, element_of_point(D, S, p.filter)) != p.filter:
            raise BijectionFailure("pt o nu", sorted(p.filter))
    if len(pts) != D.n:
        raise BijectionFailure("count", len(pts), D.n)
    spectral = [is_spectral_map(hom_of_point(p), cap) for p in pts]
    if not all(spectral):
        raise BijectionFailure("non-spectral point", spectral.index(False))

    sharp = sharp_elements(D)
    P = patch(S.frame, cap)
    eps = epsilon(S.frame, P).upper
    patch_pts = points(P.frame, cap)
    patch_filters = {p.filter for p in patch_pts}
    # alpha: lift each point through the universal map; beta: restrict along eps
    for x in sharp:
        h = hom_of_point(next(p for p in pts if p.filter == point_of_element(D, S, x)))
        lifted = point_of_hom(universal_map(h, P))
        if lifted.filter not in patch_filters:
            raise BijectionFailure("alpha lands outside pt(Patch)", x)
        back = point_of_hom(hom_of_point(lifted).compose(eps))
        if back.filter != point_of_element(D, S, x):
            raise BijectionFailure("beta o alpha", x)
    for q in patch_pts:
        restricted = hom_of_point(q).compose(eps)
        again = point_of_hom(universal_map(restricted, P))
        if again.filter != q.filter:
            raise BijectionFailure("alpha o beta", sorted(q.filter))
    if len(patch_pts) != len(sharp):
        raise BijectionFailure("patch count", len(patch_pts), len(sharp))
    return Certificate(
        "points_equivalences",
        True,
        {
            "elements": D.n,
            "points": len(pts),
            "spectral_points": sum(spectral),
            "sharp": len(sharp),
            "patch_points": len(patch_pts),
            "pt": {D.label(x): sorted(point_of_element(D, S, x)) for x in D.elements},
            "note": FINITE_COLLAPSE,
        },
    )
