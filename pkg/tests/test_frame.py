from itertools import product

import pytest
from hypothesis import given, settings

from finloc import corpus
from finloc.errors import CapExceeded, NotJoinPreserving
from finloc.frame import (
    BaseFamily,
    classify,
    clopens,
    complement,
    compact_opens,
    covers_directed,
    directed_subsets,
    directify_base,
    frame_distributivity_witness,
    frame_hom_violations,
    frame_homs,
    heyting,
    identity_hom,
    is_base,
    is_directed,
    is_regular,
    is_spectral,
    is_stone,
    is_zero_dimensional,
    join_preservation_witness,
    join_subset,
    point_violations,
    points,
    right_adjoint,
    subset_join_witness,
    subsets,
    way_below,
    well_inside,
)
from finloc.lattice import downset_lattice, join_irreducible_elements, two
from finloc.order import MonotoneMap, enumerate_monotone_maps

from conftest import frames, posets

FRAMES = corpus.frames()


def ix(F, *names):
    return [F.index(n) for n in names]


def test_subset_joins(c3, m2):
    assert join_subset(c3, []) == c3.index("0")
    assert join_subset(m2, ix(m2, "l", "r")) == m2.top
    assert join_subset(c3, ix(c3, "0", "a")) == c3.index("a")


def test_right_adjoint_identity(c3):
    h = MonotoneMap(c3, c3, tuple(c3.elements))
    assert right_adjoint(h).table == tuple(c3.elements)


def test_right_adjoint_collapse(c3, c2):
    h = MonotoneMap(c3, c2, (0, 1, 1))
    g = right_adjoint(h)
    assert g.table == (c3.index("0"), c3.index("1"))
    for a, b in product(c3.elements, c2.elements):
        assert c2.le(h(a), b) == c3.le(a, g(b))


def test_right_adjoint_needs_join_preservation(c3, c2):
    with pytest.raises(NotJoinPreserving):
        right_adjoint(MonotoneMap(c3, c2, (1, 1, 1)))


def test_heyting_examples(c3, m2):
    for F in (c3, m2):
        for u in F.elements:
            assert heyting(F, u, F.top) == F.top
            assert heyting(F, F.top, u) == u
    assert heyting(c3, c3.index("a"), c3.index("0")) == c3.index("0")
    assert heyting(m2, m2.index("l"), m2.bot) == m2.index("r")


def test_bottom_is_way_below_everything():
    for F in FRAMES.values():
        assert all(way_below(F, F.bot, u) for u in F.elements)


def test_complements(c3, m2):
    for F in (c3, m2):
        assert complement(F, F.top) == F.bot
    assert complement(c3, c3.index("a")) is None
    assert complement(m2, m2.index("l")) == m2.index("r")


def test_directify_examples(c3, m2):
    B = directify_base(BaseFamily(m2, ix(m2, "l", "r")))
    assert B.elements() == sorted(m2.elements)
    full = BaseFamily(m2, tuple(m2.elements))
    assert directify_base(full).elements() == full.elements()
    assert directify_base(BaseFamily(c3, ix(c3, "a"))).elements() == ix(c3, "0", "a")


def test_directify_cap(m2):
    with pytest.raises(CapExceeded):
        directify_base(BaseFamily(m2, tuple(m2.elements)), cap=8)


def test_base_examples(c3):
    assert is_base(BaseFamily(c3, tuple(c3.elements)))
    cert = is_base(BaseFamily(c3, ix(c3, "a")))
    assert not cert and cert.witness["element"] == c3.index("1")


@given(posets(4))
@settings(max_examples=30, deadline=None)
def test_join_irreducibles_form_a_base(P):
    L = downset_lattice(P)
    assert is_base(BaseFamily(L, tuple(join_irreducible_elements(L))))


def test_class_examples(c3, m2):
    assert not is_stone(c3) and is_stone(m2)
    for F in FRAMES.values():
        assert is_spectral(F)
        zd = bool(is_zero_dimensional(F))
        assert zd == all(complement(F, u) is not None for u in F.elements)
        assert bool(is_regular(F)) == zd
    assert [c.predicate for c in classify(m2)] == ["spectral", "zero_dimensional", "regular", "stone"]


def test_points_examples(c2, c3, m2):
    assert [p.labels() for p in points(c2)] == [["1"]]
    assert sorted(p.labels() for p in points(c3)) == [["1"], ["a", "1"]]
    assert sorted(p.labels() for p in points(m2)) == [["l", "top"], ["r", "top"]]


@pytest.mark.parametrize("name", list(FRAMES))
def test_points_are_completely_prime(name):
    F = FRAMES[name]
    pts = points(F)
    assert all(point_violations(p) == [] for p in pts)
    # distributive lattice: points correspond to join-irreducibles
    assert len(pts) == len(join_irreducible_elements(F))


def brute_frame_homs(F, G):
    out = []
    for t in product(G.elements, repeat=F.n):
        if t[F.top] != G.top:
            continue
        if any(t[F.meet(x, y)] != G.meet(t[x], t[y]) for x, y in product(F.elements, repeat=2)):
            continue
        if any(t[F.join_all(S)] != G.join_all(t[s] for s in S) for S in subsets(F.elements)):
            continue
        out.append(t)
    return out


@pytest.mark.parametrize("a, b", [("c2", "c3"), ("c3", "m2"), ("m2", "c3"), ("c4", "m2"), ("m2_top", "c3")])
def test_frame_homs_match_brute_force(a, b):
    F, G = corpus.lattice(a), corpus.lattice(b)
    homs = list(frame_homs(F, G))
    assert [h.table for h in homs] == brute_frame_homs(F, G)
    for h in homs:
        assert subset_join_witness(h) is None
        assert frame_hom_violations(h) == []


def test_frame_homs_cap(c3):
    with pytest.raises(CapExceeded):
        list(frame_homs(corpus.lattice("cube"), c3, cap=1000))


def test_identity_hom_is_frame_hom(m2):
    assert frame_hom_violations(identity_hom(m2)) == []


# invariants over the whole corpus

@pytest.mark.parametrize("name", list(FRAMES))
def test_frame_distributivity(name):
    assert frame_distributivity_witness(FRAMES[name]) is None


@pytest.mark.parametrize("name", list(FRAMES))
def test_way_below_is_order(name):
    F = FRAMES[name]
    for u, v in product(F.elements, repeat=2):
        assert way_below(F, u, v) == F.le(u, v)
        if well_inside(F, u, v):
            assert way_below(F, u, v)
    assert compact_opens(F) == list(F.elements)


def test_way_below_cap():
    with pytest.raises(CapExceeded):
        way_below(corpus.lattice("cube"), 0, 7, cap=100)


@pytest.mark.parametrize("name", list(FRAMES))
def test_clopens_are_sublattice(name):
    F = FRAMES[name]
    C = set(clopens(F))
    assert F.top in C and F.bot in C
    for u, v in product(C, repeat=2):
        assert F.meet(u, v) in C and F.join(u, v) in C


def test_directed_subsets_agree_with_literal_definition(m2):
    found = {tuple(sorted(S)) for _, S in directed_subsets(m2)}
    literal = {tuple(sorted(S)) for S in subsets(m2.elements) if is_directed(m2, S)}
    assert found == literal


@given(frames(3))
@settings(max_examples=30, deadline=None)
def test_directify_preserves_base_and_directs_covers(F):
    B = BaseFamily(F, tuple(join_irreducible_elements(F)))
    D = directify_base(B)
    assert is_base(D)
    assert covers_directed(D)


@given(frames(3))
@settings(max_examples=30, deadline=None)
def test_residuation(F):
    for u, v, w in product(F.elements, repeat=3):
        assert F.le(F.meet(w, u), v) == F.le(w, heyting(F, u, v))


@given(frames(2), frames(2))
@settings(max_examples=20, deadline=None)
def test_adjunction_for_join_preserving_maps(F, G):
    for m in enumerate_monotone_maps(F, G):
        if join_preservation_witness(m) is not None:
            continue
        g = right_adjoint(m)
        for a, b in product(F.elements, G.elements):
            assert G.le(m(a), b) == F.le(a, g(b))


def test_two_is_the_truth_frame():
    T = two()
    assert T.n == 2 and T.label(T.top) == "1"


@pytest.mark.parametrize("name", list(corpus.frames(5)))
def test_enumerated_homs_preserve_every_subset_join(name):
    F = FRAMES[name]
    for G in corpus.frames(5).values():
        for h in frame_homs(F, G):
            assert subset_join_witness(h) is None
