from itertools import product

import pytest

from pgeigen import qcomb
from pgeigen.characters import (Character, char_value, characters, nontrivial_characters,
                                project, project_fast, project_subspace, x_of_chi)
from pgeigen.errors import InvalidPair, InvariantViolation
from pgeigen.field import field_for_q
from pgeigen.lattice import (GroupElem, boundary, canonicalize, enumerate_all, enumerate_subspaces,
                             full_space, zero_subspace)
from pgeigen.scalars import PhiPoly, root_of_unity
from pgeigen.vectors import PosetVector

F2, F3 = field_for_q(2), field_for_q(3)


def vec(F, n, terms):
    return PosetVector(F, n, {canonicalize(F, n, [v]): c for v, c in terms})


def test_character_counts():
    for q in (2, 3, 4):
        F = field_for_q(q)
        for n in range(3):
            assert len(nontrivial_characters(F, n)) == q ** n - 1
            assert len(characters(F, n)) == q ** n


def test_char_values():
    assert char_value(Character(F2, 1, (0,)), GroupElem(F2, (1,))) == root_of_unity(2, 0)
    assert char_value(Character(F2, 1, (1,)), GroupElem(F2, (1,))) == root_of_unity(2, 1)
    with pytest.raises(InvalidPair):
        char_value(Character(F2, 1, (1,)), GroupElem(F2, (1, 0)))


def test_multiplicativity_exhaustive():
    for F in (F3, field_for_q(4)):
        H = [GroupElem(F, a) for a in product(F.elements(), repeat=2)]
        for chi in characters(F, 2):
            for g, h in product(H, repeat=2):
                assert char_value(chi, g + h) == char_value(chi, g) * char_value(chi, h)


def test_projection_examples():
    z = zero_subspace(F2, 1)
    triv = Character(F2, 1, (0,))
    chi = Character(F2, 1, (1,))
    assert project(triv, z) == vec(F2, 2, [((0, 1), 1), ((1, 1), 1)])
    assert project(chi, z) == vec(F2, 2, [((0, 1), 1), ((1, 1), -1)])
    assert project(chi, full_space(F2, 1)).is_zero()


def test_projection_structure_and_fast_path():
    for q in (2, 3, 4, 5):
        F = field_for_q(q)
        n = 2
        for chi in characters(F, n):
            for Y in enumerate_all(F, n):
                v = project(chi, Y)
                assert project_fast(chi, Y) == v
                if not v.is_zero():
                    assert len(v) == q ** (n - Y.dim)
                    mult = q ** Y.dim
                    for c in v.entries.values():
                        assert any(c == PhiPoly.const(F.p, root_of_unity(F.p, t)).scale(mult)
                                   for t in range(F.p))


def test_x_of_chi_examples():
    assert x_of_chi(Character(F2, 2, (1, 0))) == canonicalize(F2, 2, [(0, 1)])
    assert x_of_chi(Character(F2, 1, (1,))) == zero_subspace(F2, 1)
    assert x_of_chi(Character(F3, 2, (0, 1))) == canonicalize(F3, 2, [(1, 0)])
    with pytest.raises(InvariantViolation):
        x_of_chi(Character(F2, 2, (0, 0)))


def test_x_of_chi_is_orthogonal_complement():
    for q in (2, 3, 4):
        F = field_for_q(q)
        for n in (1, 2, 3):
            hits = {}
            for chi in nontrivial_characters(F, n):
                X = x_of_chi(chi)
                perp = {v for v in product(F.elements(), repeat=n) if F.dot(chi.a, v) == 0}
                assert set(X.vectors()) == perp
                hits[X] = hits.get(X, 0) + 1
            assert sorted(hits) == sorted(enumerate_subspaces(F, n, n - 1))
            assert set(hits.values()) == {q - 1}


def test_nonzero_projection_counts():
    # nonzero projections per rank for nontrivial chi at (F_2, 3), k = 2
    for chi in nontrivial_characters(F2, 3):
        assert sum(not project(chi, Y).is_zero() for Y in enumerate_subspaces(F2, 3, 1)) == 3
    for q in (2, 3):
        F = field_for_q(q)
        n = 3 if q == 2 else 2
        for chi in nontrivial_characters(F, n):
            for k in range(1, n + 2):
                got = sum(not project(chi, Y).is_zero() for Y in enumerate_subspaces(F, n, k - 1))
                assert got == qcomb.qbinom(n - 1, k - 1, q)


def test_level_mismatch():
    with pytest.raises(InvalidPair):
        project_subspace(Character(F2, 1, (1,)), boundary(F2, 3)[0])
