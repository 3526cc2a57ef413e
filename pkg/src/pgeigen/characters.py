"""Characters of H(n+1, F_q) = F_q^n and the projection sums p(chi).

The character attached to a in F_q^n is b -> zeta_p^Tr(a . b), with the
standard dot product and the absolute trace of the field.  This choice is
normative: it fixes which hyperplane X(chi) each index entry refers to and
therefore the order and content of the exported eigenbasis.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidPair, InvariantViolation
from .field import FieldSpec
from .lattice import (GroupElem, Subspace, act, all_vectors, enumerate_subspaces,
                      group_elements, hat)
from .scalars import CycloNum, PhiPoly, cyclo_from_exponent_counts, root_of_unity
from .vectors import PosetVector


@dataclass(frozen=True)
class Character:
    field: FieldSpec
    level: int
    a: tuple

    @property
    def is_trivial(self) -> bool:
        return not any(self.a)

    def exponent(self, b) -> int:
        """t with chi(b) = zeta_p^t."""
        return self.field.trace(self.field.dot(self.a, b))

    def to_json(self) -> dict:
        return {"level": self.level, "a": list(self.a)}

    @classmethod
    def from_json(cls, field: FieldSpec, d: dict) -> Character:
        return cls(field, d["level"], tuple(d["a"]))

    def __repr__(self):
        return f"chi{list(self.a)}"


def characters(field: FieldSpec, n: int) -> list[Character]:
    return [Character(field, n, a) for a in all_vectors(field, n)]


def nontrivial_characters(field: FieldSpec, n: int) -> list[Character]:
    return [c for c in characters(field, n) if not c.is_trivial]


def char_value(chi: Character, g) -> CycloNum:
    b = g.a if isinstance(g, GroupElem) else tuple(g)
    if len(b) != chi.level:
        raise InvalidPair(f"character of level {chi.level} on element of level {len(b)}")
    return root_of_unity(chi.field.p, chi.exponent(b))


@lru_cache(maxsize=None)
def project_subspace(chi: Character, X: Subspace) -> PosetVector:
    """p(chi)(X) = sum_g conj(chi(g)) g.X for X in the boundary of B_q(level+1)."""
    if X.n != chi.level + 1:
        raise InvalidPair(f"character of level {chi.level} cannot act on F^{X.n}")
    p = chi.field.p
    counts = {}
    for g in group_elements(chi.field, chi.level):
        Y = act(g, X)
        t = (-chi.exponent(g.a)) % p
        counts.setdefault(Y, [0] * p)[t] += 1
    entries = {}
    for Y, cnt in counts.items():
        c = cyclo_from_exponent_counts(p, cnt)
        if not c.is_zero():
            entries[Y] = PhiPoly._raw(p, (c.coords,))
    return PosetVector._raw(chi.field, X.n, entries)


def project(chi: Character, Y: Subspace) -> PosetVector:
    """p(chi) applied to the hat of Y in B_q(level)."""
    if Y.n != chi.level:
        raise InvalidPair(f"subspace of F^{Y.n} with character of level {chi.level}")
    return project_subspace(chi, hat(Y))


def project_fast(chi: Character, Y: Subspace) -> PosetVector:
    """Orbit-stabilizer evaluation of project(chi, Y).

    The stabilizer of hat(Y) is Y itself; when chi is trivial on Y each coset
    g + Y contributes q^dim(Y) copies of one root of unity, otherwise the sum
    vanishes.
    """
    F = chi.field
    p = F.p
    # over F_{p^m} the trace pairing is only F_p-linear, so test all of Y
    if any(chi.exponent(v) for v in Y.vectors()):
        return PosetVector.zero(F, Y.n + 1)
    X = hat(Y)
    mult = F.q ** Y.dim
    entries = {}
    seen = set()
    for g in group_elements(F, chi.level):
        Z = act(g, X)
        if Z in seen:
            continue
        seen.add(Z)
        c = root_of_unity(p, -chi.exponent(g.a))
        entries[Z] = PhiPoly._raw(p, ((tuple(mult * x for x in c.coords)),))
    return PosetVector._raw(F, Y.n + 1, entries)


def apply_projection(chi: Character, v: PosetVector) -> PosetVector:
    """p(chi) applied to an arbitrary vector over the boundary of B_q(level+1)."""
    if v.n != chi.level + 1:
        raise InvalidPair("vector and character levels disagree")
    out = PosetVector.zero(v.field, v.n)
    for X, c in v.entries.items():
        out = out + project_subspace(chi, X).scale(c)
    return out


@lru_cache(maxsize=None)
def x_of_chi(chi: Character) -> Subspace:
    """The unique hyperplane Y of F_q^n with project(chi, Y) != 0 (by exhaustive search)."""
    if chi.is_trivial:
        raise InvariantViolation("X(chi) is only defined for nontrivial characters")
    n = chi.level
    hits = [Y for Y in enumerate_subspaces(chi.field, n, n - 1) if not project(chi, Y).is_zero()]
    if len(hits) != 1:
        raise InvariantViolation(f"{chi!r} has {len(hits)} hyperplanes with nonzero projection")
    return hits[0]
