"""Acceptance suites over the shipped corpus.

Each criterion is a function that raises AssertionError (or a validation
error) on the first counterexample and returns a short detail string.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations, product

from . import corpus
from .frame import (
    frame_distributivity_witness,
    frame_homs,
    heyting,
    hom_of_point,
    is_base,
    is_compact,
    is_spectral_map,
    is_stone,
    join_preservation_witness,
    points,
    right_adjoint,
    way_below,
)
from .lattice import (
    downset_lattice,
    find_isos,
    isomorphic,
    lattice_homs,
    powerset_lattice,
    validate_lattice,
)
from .nuclei import enumerate_nuclei, nucleus_join, nucleus_le, nucleus_meet
from .order import antichain, enumerate_monotone_maps, hasse_cover, validate_poset
from .patch import patch, patch_base, verify_patch_up
from .scott import (
    bounded_above,
    is_spectral_scott,
    points_equivalences,
    scott_base,
    scott_frame,
    sierpinski,
    verify_sierpinski_up,
)
from .spectrum import (
    K_on_hom,
    Spec_on_hom,
    all_ideals,
    compact_opens_lattice,
    duality_roundtrip_frame,
    duality_roundtrip_object,
    is_principal,
    spectrum,
)


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    seconds: float
    budget: float | None
    detail: str

    @property
    def within_budget(self) -> bool:
        return self.budget is None or self.seconds < self.budget

    @property
    def ok(self) -> bool:
        return self.passed and self.within_budget

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        budget = f" (budget {self.budget:g}s)" if self.budget is not None else ""
        return f"[{status}] {self.number:2d}. {self.name}: {self.detail} [{self.seconds:.2f}s{budget}]"

    def as_dict(self):
        return {
            "criterion": self.number,
            "name": self.name,
            "passed": self.ok,
            "detail": self.detail,
            "budget_seconds": self.budget,
        }


def _size(max_size, default):
    return default if max_size is None else min(default, max_size)


def c01_spectrum_examples(max_size=None):
    pairs = [("c2", "c2"), ("c3", "c3"), ("m2", "m2")]
    for src, target in pairs:
        sp = spectrum(corpus.lattice(src))
        want = corpus.lattice(target) if src != "m2" else powerset_lattice(2)
        iso = next(find_isos(sp.frame, want), None)
        assert iso is not None, f"spectrum({src}) not isomorphic to {target}"
    return "Spec(2) = 2, Spec(C3) = C3, Spec(M2) = Boolean-4"


def c02_duality_roundtrips(max_size=None):
    names = []
    for name, L in corpus.lattices(_size(max_size, 5)).items():
        duality_roundtrip_object(L)
        duality_roundtrip_frame(L)
        names.append(name)
    return f"L = K(Spec L) and O(X) = Idl(K X) on {len(names)} lattices"


def c03_functor_roundtrips(max_size=None):
    frames = corpus.frames(_size(max_size, 4))
    count = 0
    for (ny, Y), (nx, X) in product(frames.items(), repeat=2):
        for f in frame_homs(Y, X):
            back = Spec_on_hom(K_on_hom(f), Y, X)
            assert back.table == f.table, f"Spec(K f) != f for {ny}->{nx}"
            count += 1
        KY, KX = compact_opens_lattice(Y).lattice, compact_opens_lattice(X).lattice
        for h in lattice_homs(KY, KX):
            again = K_on_hom(Spec_on_hom(h, Y, X))
            assert again.table == h.table, f"K(Spec h) != h for {ny}->{nx}"
            count += 1
    return f"{count} homs round-trip over {len(frames) ** 2} frame pairs"


def c04_nucleus_join(max_size=None):
    subsets_checked = 0
    for name, F in corpus.frames(_size(max_size, 4)).items():
        nuc = list(enumerate_nuclei(F))
        for r in range(len(nuc) + 1):
            for fam in combinations(nuc, r):
                joined = nucleus_join(fam, F)
                uppers = [k for k in nuc if all(nucleus_le(j, k) for j in fam)]
                least = [k for k in uppers if all(nucleus_le(k, u) for u in uppers)]
                assert len(least) == 1 and least[0].table == joined.table, f"join mismatch on {name}"
                for j in nuc:
                    lhs = nucleus_meet(j, joined)
                    rhs = nucleus_join([nucleus_meet(j, k) for k in fam], F)
                    assert lhs.table == rhs.table, f"distributivity fails on {name}"
                subsets_checked += 1
    return f"{subsets_checked} nucleus families: join = brute-force lub, distributive"


def c05_patch_sierpinski(max_size=None):
    S, truth = sierpinski()
    P = patch(S)
    assert isomorphic(P.frame, powerset_lattice(2)), "patch(C3) is not Boolean-4"
    base = patch_base(S, P)
    assert set(base.family.members) == set(P.frame.elements)
    L = P.frame
    labels = {L.label(i): i for i in L.elements}
    assert set(labels) == {"c_bot", "c_true", "o_true", "o_bot"}, sorted(labels)
    assert L.bot == labels["c_bot"] and L.top == labels["o_bot"]
    c, o = labels["c_true"], labels["o_true"]
    assert not L.le(c, o) and not L.le(o, c)
    cover = hasse_cover(L.poset)
    edges = {(L.label(i), L.label(j)) for i in L.elements for j in L.elements if cover[i][j]}
    assert edges == {("c_bot", "c_true"), ("c_bot", "o_true"), ("c_true", "o_bot"), ("o_true", "o_bot")}
    return "patch(C3) = Boolean-4 with diamond c_bot < c_true, o_true < o_bot"


def all_posets(k):
    """Every labelled partial order on k points."""
    offdiag = [(i, j) for i in range(k) for j in range(k) if i != j]
    for bits in product((False, True), repeat=len(offdiag)):
        rel = [[i == j for j in range(k)] for i in range(k)]
        for (i, j), b in zip(offdiag, bits):
            rel[i][j] = b
        try:
            yield validate_poset(rel)
        except Exception:
            continue


def c06_patch_stone(max_size=None):
    frames = corpus.frames(_size(max_size, 5))
    for name, X in frames.items():
        assert is_stone(patch(X).frame), f"patch({name}) is not Stone"
    posets = 0
    for k in range(1, 4):
        for P in all_posets(k):
            Q = patch(downset_lattice(P)).frame
            assert Q.n == 2**k, f"|patch| = {Q.n} for a {k}-element poset"
            assert isomorphic(Q, downset_lattice(antichain(k)))
            posets += 1
    return f"patch Stone on {len(frames)} frames; |patch(Down P)| = 2^|P| on {posets} posets"


def c07_patch_up(max_size=None):
    count = 0
    for a, x in product(("c2", "c3", "m2"), ("c2", "m2")):
        certs = verify_patch_up(corpus.lattice(a), corpus.lattice(x))
        assert certs and all(c.unique and c.commutes for c in certs)
        count += len(certs)
    return f"{count} frame homs lift uniquely through patch"


def c08_aft_heyting(max_size=None):
    frames = corpus.frames(_size(max_size, 4))
    maps = 0
    for F, G in product(frames.values(), repeat=2):
        for m in enumerate_monotone_maps(F, G):
            if join_preservation_witness(m) is not None:
                continue
            g = right_adjoint(m)
            for a, b in product(F.elements, G.elements):
                assert G.le(m(a), b) == F.le(a, g(b))
            maps += 1
    for name, F in corpus.frames().items():
        for u, v, w in product(F.elements, repeat=3):
            assert F.le(F.meet(w, u), v) == F.le(w, heyting(F, u, v)), f"residuation on {name}"
    return f"{maps} join-preserving maps adjoint; residuation on all frames"


def c09_scott_locales(max_size=None):
    for name, D in corpus.domains().items():
        S = scott_frame(D)
        assert validate_lattice(S.frame).ok and frame_distributivity_witness(S.frame) is None
        assert is_base(scott_base(D, S)), f"base fails on {name}"
        assert is_spectral_scott(D), f"not spectral: {name}"
        up = D.poset.up
        for x, y in product(D.elements, repeat=2):
            if bounded_above(D, x, y):
                assert up[D.poset.lub((x, y))] == up[x] & up[y]
            else:
                assert not up[x] & up[y]
    return "Scott frames valid, based and spectral on 5 domains"


def c10_point_equivalences(max_size=None):
    parts = []
    for name, D in corpus.domains().items():
        cert = points_equivalences(D)
        w = cert.witness
        assert w["points"] == w["sharp"] == w["patch_points"] == D.n
        parts.append(f"{name}:{D.n}")
    return "|D| = |pt| = |pt(patch)| for " + " ".join(parts)


def c11_sierpinski_up(max_size=None):
    frames = corpus.frames(_size(max_size, 4))
    for X in frames.values():
        verify_sierpinski_up(X)
    return f"unique hom per open on {len(frames)} frames"


def c12_finite_collapse(max_size=None):
    frames = corpus.frames(max_size)
    for name, F in frames.items():
        for u, v in product(F.elements, repeat=2):
            assert way_below(F, u, v) == F.le(u, v), f"way-below differs from order on {name}"
        assert all(is_compact(F, u) for u in F.elements)
        assert all(is_principal(I) for I in all_ideals(F)), f"non-principal ideal in {name}"
        assert all(is_spectral_map(hom_of_point(p)) for p in points(F))
    return f"way-below = order, all compact, ideals principal, points spectral on {len(frames)} frames"


CRITERIA = [
    (1, "spectrum examples", c01_spectrum_examples, 1.0),
    (2, "duality round-trips", c02_duality_roundtrips, 5.0),
    (3, "functor round-trips", c03_functor_roundtrips, 10.0),
    (4, "nucleus join correctness", c04_nucleus_join, 30.0),
    (5, "patch of Sierpinski", c05_patch_sierpinski, 1.0),
    (6, "patch is Stone + assembly oracle", c06_patch_stone, 30.0),
    (7, "patch universal property", c07_patch_up, 30.0),
    (8, "adjoint functor theorem and Heyting", c08_aft_heyting, 10.0),
    (9, "Scott locale properties", c09_scott_locales, 5.0),
    (10, "point equivalences", c10_point_equivalences, 30.0),
    (11, "Sierpinski universal property", c11_sierpinski_up, 10.0),
    (12, "finite-collapse properties", c12_finite_collapse, None),
]

GROUPS = {
    "spectrum": [1],
    "duality": [1, 2, 3],
    "nuclei": [4],
    "patch": [5, 6, 7],
    "frames": [8, 12],
    "scott": [9, 10, 11],
    "all": list(range(1, 13)),
}


def run_criterion(number: int, max_size=None) -> CriterionResult:
    num, name, fn, budget = CRITERIA[number - 1]
    start = time.perf_counter()
    try:
        detail = fn(max_size)
        passed = True
    except Exception as e:  # any failure becomes a red line with its message
        detail = f"{type(e).__name__}: {e}"
        passed = False
    return CriterionResult(num, name, passed, time.perf_counter() - start, budget, detail)


def run_suite(name: str, max_size=None) -> list[CriterionResult]:
    if name not in GROUPS:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(GROUPS)}")
    return [run_criterion(n, max_size) for n in GROUPS[name]]
