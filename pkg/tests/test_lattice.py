import pytest

from oracles import subspace_sets
from pgeigen import qcomb
from pgeigen.errors import InvalidPair
from pgeigen.field import field_for_q
from pgeigen.lattice import (GroupElem, act, boundary, canonicalize, covers, enumerate_all,
                             enumerate_subspaces, full_space, group_elements, hat, lattice,
                             meet_hyperplane, orbit, stabilizer, zero_subspace, Subspace)

F2, F3, F4 = field_for_q(2), field_for_q(3), field_for_q(4)


def line(F, *v):
    return canonicalize(F, len(v), [v])


def test_canonicalize_examples():
    assert canonicalize(F2, 2, [(1, 1), (0, 1)]) == full_space(F2, 2)
    assert full_space(F2, 2).cols == ((1, 0), (0, 1))
    assert canonicalize(F2, 3, []) == zero_subspace(F2, 3)
    assert canonicalize(F2, 3, [(1, 1, 0)]).cols == ((1, 1, 0),)
    assert canonicalize(F3, 2, [(2, 2)]).cols == ((1, 1),)


def test_schubert_conditions():
    for F in (F2, F3, F4):
        for X in enumerate_all(F, 3):
            piv = X.pivots
            assert list(piv) == sorted(set(piv))
            for j, c in enumerate(X.cols):
                assert c[piv[j]] == 1 and all(x == 0 for x in c[piv[j] + 1:])
                assert all(X.cols[i][piv[j]] == 0 for i in range(X.dim) if i != j)


def test_enumeration_counts_and_order():
    assert len(enumerate_subspaces(F2, 2, 1)) == 3
    assert len(enumerate_all(F2, 2)) == 5
    assert len(enumerate_all(F3, 2)) == 6
    for F in (F2, F3):
        subs = enumerate_all(F, 3)
        assert subs == sorted(subs, key=Subspace.sort_key)
        assert len(set(subs)) == len(subs)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_counts_match_brute_force(q):
    F = field_for_q(q)
    for n in range(5):
        layers = subspace_sets(F, n)
        for k in range(n + 1):
            subs = enumerate_subspaces(F, n, k)
            assert len(layers[k]) == qcomb.qbinom(n, k, q) == len(subs)
            if n <= 3:
                assert {frozenset(X.vectors()) for X in subs} == layers[k]


def test_round_trip():
    for F in (F2, F3, F4):
        for n in range(5):
            if F.q ** n > 256:
                continue
            for X in enumerate_all(F, n):
                assert canonicalize(F, n, X.cols) == X
                assert Subspace.from_json(F, X.to_json()) == X
                shuffled = [tuple(F.add(a, b) for a, b in zip(X.cols[0], c)) for c in X.cols[1:]] + list(X.cols[:1])
                assert canonicalize(F, n, shuffled) == X


def test_covers():
    plane = full_space(F2, 2)
    lines = enumerate_subspaces(F2, 2, 1)
    assert all(covers(plane, L) for L in lines)
    assert all(covers(L, zero_subspace(F2, 2)) for L in lines)
    assert not covers(plane, zero_subspace(F2, 2))
    X = enumerate_subspaces(F2, 3, 2)[0]
    assert sum(covers(X, L) for L in enumerate_subspaces(F2, 3, 1)) == 3
    with pytest.raises(InvalidPair):
        covers(plane, zero_subspace(F2, 3))


def test_lattice_neighbours():
    lat = lattice(F3, 3)
    for i, X in enumerate(lat.elements):
        assert len(lat.up[i]) == qcomb.qbinom(3 - X.dim, 1, 3)
        assert len(lat.down[i]) == qcomb.qbinom(X.dim, 1, 3)
        for j in lat.up[i]:
            assert covers(lat.elements[j], X)


def test_hat_and_meet():
    assert hat(zero_subspace(F2, 1)) == line(F2, 0, 1)
    assert meet_hyperplane(line(F2, 0, 1)) == zero_subspace(F2, 1)
    assert meet_hyperplane(full_space(F2, 2)) == full_space(F2, 1)
    for F in (F2, F3):
        for X in boundary(F, 3):
            M = meet_hyperplane(X)
            assert M.dim == X.dim - 1
            assert frozenset(M.embed(3).vectors()) == {v for v in X.vectors() if v[-1] == 0}
            assert hat(M) in orbit(X)
        for X in enumerate_all(F, 2):
            assert hat(X).dim == X.dim + 1 and hat(X).is_boundary()


def test_boundary_partition():
    for F in (F2, F3):
        for n in range(4):
            bd = boundary(F, n + 1)
            inside = {X.embed(n + 1) for X in enumerate_all(F, n)}
            assert inside.isdisjoint(bd)
            assert len(inside) + len(bd) == qcomb.galois(n + 1, F.q)
            for k in range(n + 2):
                assert sum(X.dim == k for X in bd) == qcomb.qbinom(n + 1, k, F.q) - qcomb.qbinom(n, k, F.q)


def test_action_and_orbits():
    e2 = line(F2, 0, 1)
    assert act(GroupElem(F2, (0,)), e2) == e2
    assert orbit(e2) == sorted([e2, line(F2, 1, 1)], key=Subspace.sort_key)
    assert orbit(full_space(F2, 2)) == [full_space(F2, 2)]
    for F in (F2, F3):
        n = 2
        H = group_elements(F, n)
        for X in boundary(F, n + 1):
            assert len(orbit(X)) == F.q ** (n + 1 - X.dim)
            assert len(stabilizer(X)) * len(orbit(X)) == len(H)
            for g in H:
                # the action is by linear maps, so it respects the vector sets
                assert frozenset(act(g, X).vectors()) == {g.apply(v) for v in X.vectors()}
                for h in H:
                    assert act(g, act(h, X)) == act(g + h, X)
