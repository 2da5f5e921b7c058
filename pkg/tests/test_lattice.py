from itertools import permutations, product

import pytest
from hypothesis import given, settings

from finloc import corpus
from finloc.errors import NoJoin, NoMeet, NotDistributive
from finloc.lattice import (
    FinDistLattice,
    LatticeHom,
    build_lattice,
    chain_lattice,
    downset_lattice,
    find_isos,
    hom_violations,
    is_iso,
    isomorphic,
    join_irreducible_elements,
    join_irreducibles,
    lattice_homs,
    powerset_lattice,
    validate_lattice,
)
from finloc.order import antichain, chain, poset_from_pairs
from finloc.suites import all_posets

from conftest import frames, posets


def test_chain_lattice_tables(c3):
    a = c3.index("a")
    assert c3.meet(a, c3.index("1")) == a
    assert c3.join(c3.index("0"), a) == a
    assert validate_lattice(c3).ok


def test_diamond_is_boolean(m2):
    l, r = m2.index("l"), m2.index("r")
    assert m2.meet(l, r) == m2.bot and m2.join(l, r) == m2.top
    assert m2.complements[l] == r
    assert isomorphic(m2, powerset_lattice(2))


def test_pentagon_not_distributive():
    P = poset_from_pairs(
        ["bot", "a", "b", "c", "top"],
        [("bot", "a"), ("a", "b"), ("b", "top"), ("bot", "c"), ("c", "top")],
    )
    with pytest.raises(NotDistributive) as e:
        build_lattice(P)
    x, y, z = e.value.witness
    # the witness really breaks the law when computed from the order
    assert P.glb((x, P.lub((y, z)))) != P.lub((P.glb((x, y)), P.glb((x, z))))


def test_incomplete_diamond_reports_missing_join():
    P = poset_from_pairs(["bot", "l", "r", "top"], [("bot", "l"), ("bot", "r"), ("l", "top")])
    with pytest.raises(NoJoin):
        build_lattice(P)


def test_vee_has_no_meet():
    P = poset_from_pairs(["l", "r", "top"], [("l", "top"), ("r", "top")])
    with pytest.raises(NoMeet):
        build_lattice(P)


@pytest.mark.parametrize("name", corpus.LATTICES)
def test_corpus_passes_every_law(name):
    report = validate_lattice(corpus.lattice(name))
    assert report.ok, report.violations


def test_patched_meet_reports_absorption(m2):
    l, r = m2.index("l"), m2.index("r")
    meet = [list(row) for row in m2.meet_table]
    meet[l][r] = meet[r][l] = l
    bad = FinDistLattice(m2.poset, m2.top, m2.bot, tuple(map(tuple, meet)), m2.join_table)
    failed = validate_lattice(bad).failed()
    assert "absorption_join" in failed
    assert "dual_distributive" not in validate_lattice(m2).failed()


def test_identity_is_iso(c3):
    assert is_iso(LatticeHom(c3, c3, tuple(c3.elements)))


def test_no_isos_between_sizes(c3, m2):
    assert list(find_isos(c3, m2)) == []


def test_diamond_automorphisms(m2):
    isos = {h.table for h in find_isos(m2, m2)}
    brute = set()
    for t in permutations(m2.elements):
        if all(m2.le(x, y) == m2.le(t[x], t[y]) for x, y in product(m2.elements, repeat=2)):
            brute.add(t)
    assert isos == brute
    assert len(isos) == 2


def test_downsets_of_point_and_antichain():
    assert isomorphic(downset_lattice(chain(1)), chain_lattice(2))
    assert isomorphic(downset_lattice(antichain(2)), corpus.lattice("m2"))


def test_join_irreducibles_of_chain(c3):
    J = join_irreducibles(c3)
    assert list(J.labels) == ["a", "1"]
    assert J.le(0, 1)


def test_corpus_is_complete_up_to_five():
    # every distributive lattice with <= 5 elements is Down(P) for a poset P on <= 4 points
    found = [chain_lattice(1)]  # no join-irreducibles at all
    for k in range(1, 5):
        for P in all_posets(k):
            D = downset_lattice(P)
            if D.n <= 5 and not any(isomorphic(D, E) for E in found):
                found.append(D)
    shipped = list(corpus.lattices(5).values())
    assert len(found) == len(shipped) == 8
    for D in found:
        assert sum(isomorphic(D, E) for E in shipped) == 1


@given(posets(4))
@settings(max_examples=40, deadline=None)
def test_birkhoff_round_trip(P):
    L = downset_lattice(P)
    assert validate_lattice(L).ok
    J = join_irreducibles(L)
    assert isomorphic(downset_lattice(J), L)
    assert len(join_irreducible_elements(L)) == P.n


@given(frames(3))
@settings(max_examples=40, deadline=None)
def test_build_lattice_recovers_tables(L):
    again = build_lattice(L.poset)
    assert again.meet_table == L.meet_table and again.join_table == L.join_table
    assert (again.top, again.bot) == (L.top, L.bot)


@given(frames(2), frames(2))
@settings(max_examples=25, deadline=None)
def test_lattice_homs_preserve_structure(K, L):
    for h in lattice_homs(K, L):
        assert not hom_violations(h)
        for x, y in product(K.elements, repeat=2):
            if K.le(x, y):
                assert L.le(h(x), h(y))
