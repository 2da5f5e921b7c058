from itertools import product

import pytest
from hypothesis import given, settings

from finloc import corpus
from finloc.errors import NotFrameHom, NotStone
from finloc.frame import FrameHom, complement, frame_hom_violations, identity_hom, is_base, is_stone
from finloc.lattice import (
    LatticeHom,
    chain_lattice,
    downset_lattice,
    first_iso,
    is_iso,
    isomorphic,
    powerset_lattice,
)
from finloc.order import antichain
from finloc.nuclei import closed_nucleus, identity_nucleus, open_nucleus, top_nucleus
from finloc.patch import epsilon, nucleus_name, patch, patch_base, patch_is_stone, universal_map, verify_patch_up
from finloc.scott import sierpinski

from conftest import posets


def test_patch_examples(c2, c3, m2):
    assert isomorphic(patch(c2).frame, chain_lattice(2))
    assert isomorphic(patch(c3).frame, powerset_lattice(2))
    assert isomorphic(patch(m2).frame, m2)


def test_patch_orders_identity_first(c3):
    P = patch(c3)
    assert P.nuclei[P.frame.bot] == identity_nucleus(c3)
    assert P.nuclei[P.frame.top] == top_nucleus(c3)


def test_patch_of_sierpinski_diamond():
    S, truth = sierpinski()
    P = patch(S)
    L = P.frame
    assert list(L.labels) == ["c_bot", "o_true", "c_true", "o_bot"]
    assert L.label(L.bot) == "c_bot" and L.label(L.top) == "o_bot"
    c, o = L.index("c_true"), L.index("o_true")
    assert not L.le(c, o) and not L.le(o, c)
    assert L.join(c, o) == L.top and L.meet(c, o) == L.bot


def test_gamma_examples(c3):
    B = patch_base(c3)
    P = patch(c3)
    a, bot, top = c3.index("a"), c3.bot, c3.top

    def nucleus(k1, k2):
        return P.nuclei[B.member(k1, k2)]

    assert nucleus(bot, top) == identity_nucleus(c3)
    assert nucleus(a, bot) == closed_nucleus(c3, a)
    assert nucleus(top, a) == open_nucleus(c3, a)
    # open(top) and closed(bot) are both the identity, so these pairs collapse
    assert nucleus(a, top) == identity_nucleus(c3)
    assert nucleus(bot, a) == identity_nucleus(c3)


@pytest.mark.parametrize("name", list(corpus.frames(5)))
def test_patch_base_is_clopen_base(name):
    X = corpus.lattice(name)
    P = patch(X)
    B = patch_base(X, P)
    assert is_base(B.family)
    assert all(complement(P.frame, m) is not None for m in B.family.members)


def test_nucleus_names(c3):
    a = c3.index("a")
    assert nucleus_name(c3, identity_nucleus(c3)) == "c_0"
    assert nucleus_name(c3, top_nucleus(c3)) == "o_0"
    assert nucleus_name(c3, closed_nucleus(c3, a)) == "c_a"
    assert nucleus_name(c3, open_nucleus(c3, a)) == "o_a"
    names = set(patch(corpus.lattice("c4")).frame.labels)
    assert any("&" in n for n in names)


def test_epsilon_examples(c3):
    P = patch(c3)
    eps = epsilon(c3, P)
    assert P.nuclei[eps.upper(c3.bot)] == identity_nucleus(c3)
    assert eps.lower(P.index_of(top_nucleus(c3))) == c3.top
    assert eps.lower(P.index_of(open_nucleus(c3, c3.index("a")))) == c3.bot


@pytest.mark.parametrize("name", list(corpus.frames(5)))
def test_epsilon_is_frame_hom_with_right_adjoint(name):
    X = corpus.lattice(name)
    P = patch(X)
    eps = epsilon(X, P)
    assert frame_hom_violations(eps.upper) == []
    for u, j in product(X.elements, P.frame.elements):
        assert P.frame.le(eps.upper(u), j) == X.le(u, eps.lower(j))
    # the adjoint preserves joins of directed families, here all finite chains
    for j, k in product(P.frame.elements, repeat=2):
        if P.frame.le(j, k):
            assert eps.lower(P.frame.join(j, k)) == X.join(eps.lower(j), eps.lower(k))


def test_universal_map_identity(m2):
    P = patch(m2)
    f = identity_hom(m2)
    lift = universal_map(f, P)
    assert lift.compose(epsilon(m2, P).upper).table == f.table


def test_universal_map_onto_boolean(c3):
    X = powerset_lattice(2, ["l", "r"])
    f = FrameHom(c3, X, (X.index("{}"), X.index("{l}"), X.index("{l,r}")))
    assert frame_hom_violations(f) == []
    lift = universal_map(f)
    assert is_iso(LatticeHom(lift.dom, X, lift.table))


def test_universal_map_closed_open(c3, c2):
    f = FrameHom(c3, c2, (0, 1, 1))
    P = patch(c3)
    lift = universal_map(f, P)
    assert lift(P.index_of(closed_nucleus(c3, c3.index("a")))) == c2.top


def test_universal_map_rejects_bad_input(c3, c2):
    with pytest.raises(NotStone):
        universal_map(identity_hom(c3))
    with pytest.raises(NotFrameHom):
        universal_map(FrameHom(c3, c2, (1, 1, 1)))


@pytest.mark.parametrize(
    "a, x, count",
    [("c3", "c2", 2), ("c3", "m2", 4), ("c2", "c2", 1), ("m2", "m2", 4), ("c2", "m2", 1), ("m2", "c2", 2)],
)
def test_patch_universal_property(a, x, count):
    certs = verify_patch_up(corpus.lattice(a), corpus.lattice(x))
    assert len(certs) == count
    assert all(c.unique and c.commutes and c.commuting_homs == 1 for c in certs)


def test_unique_lift_on_two_is_identity(c2):
    (cert,) = verify_patch_up(c2, c2)
    assert cert.lift.table == (0, 1)


def test_lifts_need_stone_target(c3):
    with pytest.raises(NotStone):
        verify_patch_up(c3, c3)


@pytest.mark.parametrize("name", list(corpus.frames(5)) + ["cube"])
def test_patch_is_stone(name):
    assert patch_is_stone(corpus.lattice(name))


def test_patch_sizes():
    sizes = {name: patch(X).frame.n for name, X in corpus.frames().items()}
    assert sizes == {
        "one": 1, "c2": 2, "c3": 4, "c4": 8, "m2": 4, "c5": 16, "m2_top": 8, "m2_bot": 8, "cube": 8,
    }


@given(posets(3))
@settings(max_examples=25, deadline=None)
def test_patch_of_downsets_is_powerset(P):
    Q = patch(downset_lattice(P)).frame
    assert Q.n == 2**P.n
    assert is_stone(Q)
    assert first_iso(Q, downset_lattice(antichain(P.n))) is not None


def test_patch_is_idempotent_on_stone(m2):
    assert isomorphic(patch(patch(corpus.lattice("c3")).frame).frame, m2)


def test_unchecked_uniqueness_is_reported():
    # the patch of C5 has 16 elements; 4^16 candidate homs exceed a small cap
    certs = verify_patch_up(corpus.lattice("c5"), corpus.lattice("m2"), cap=10**6)
    assert certs and all(c.commutes and not c.uniqueness_checked for c in certs)
    assert all(bool(c) for c in certs)
