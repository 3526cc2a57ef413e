"""The index set E_q(n) and the recursive eigenbasis {v_alpha}.

For alpha = beta + (last entry):

* 0:   v_alpha = q^k v_beta + theta_n(v_beta)
* 1:   v_alpha = phi q^(n-k) v_beta - theta_n(v_beta)
* chi: v_alpha = lambda(chi) mu(X(chi)) (v_beta), beta one level lower

where k = N(beta) and v_() is the zero subspace of F_q^0.  Vectors are never
rescaled beyond what the recursion produces.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .characters import Character, nontrivial_characters
from .errors import InvalidIndex
from .field import FieldSpec
from .lattice import zero_subspace
from .operators import lambda_mu, theta
from .scalars import PhiPoly
from .vectors import PosetVector


@dataclass(frozen=True)
class IndexEntry:
    kind: str                      # "0", "1" or "chi"
    chi: Character | None = None

    @property
    def is_nonzero(self) -> bool:
        return self.kind != "0"

    @property
    def step(self) -> int:
        return 2 if self.kind == "chi" else 1

    def to_json(self):
        if self.kind == "chi":
            return {"chi": self.chi.to_json()}
        return self.kind

    @classmethod
    def from_json(cls, field: FieldSpec, d) -> IndexEntry:
        if d == "0":
            return ZERO
        if d == "1":
            return ONE
        if isinstance(d, dict) and "chi" in d:
            return cls("chi", Character.from_json(field, d["chi"]))
        raise InvalidIndex(f"unrecognized index entry {d!r}")

    def __repr__(self):
        return self.kind if self.kind != "chi" else repr(self.chi)


ZERO = IndexEntry("0")
ONE = IndexEntry("1")


def chi_entry(chi: Character) -> IndexEntry:
    return IndexEntry("chi", chi)


@dataclass(frozen=True)
class IndexSeq:
    n: int
    entries: tuple

    def __post_init__(self):
        level = 0
        for e in self.entries:
            if not isinstance(e, IndexEntry):
                raise InvalidIndex(f"{e!r} is not an index entry")
            if e.kind == "chi":
                if e.chi is None or e.chi.is_trivial:
                    raise InvalidIndex("character entries must be nontrivial")
                if e.chi.level != level + 1:
                    raise InvalidIndex(
                        f"character of level {e.chi.level} appended at level {level}")
            elif e.kind not in ("0", "1"):
                raise InvalidIndex(f"unknown entry kind {e.kind!r}")
            level += e.step
        if level != self.n:
            raise InvalidIndex(f"index sequence has level {level}, declared {self.n}")

    @property
    def weight(self) -> int:
        """N(alpha): the number of nonzero entries."""
        return sum(e.is_nonzero for e in self.entries)

    def prefix(self) -> IndexSeq:
        last = self.entries[-1]
        return IndexSeq(self.n - last.step, self.entries[:-1])

    def to_json(self) -> list:
        return [e.to_json() for e in self.entries]

    @classmethod
    def from_json(cls, field: FieldSpec, d: list) -> IndexSeq:
        entries = tuple(IndexEntry.from_json(field, e) for e in d)
        return cls(sum(e.step for e in entries), entries)

    def __repr__(self):
        return "(" + ",".join(repr(e) for e in self.entries) + ")"


@lru_cache(maxsize=None)
def _indices(field: FieldSpec, n: int) -> tuple[IndexSeq, ...]:
    if n == 0:
        return (IndexSeq(0, ()),)
    out = []
    for beta in _indices(field, n - 1):
        out.append(IndexSeq(n, beta.entries + (ZERO,)))
        out.append(IndexSeq(n, beta.entries + (ONE,)))
    if n >= 2:
        for chi in nontrivial_characters(field, n - 1):
            e = chi_entry(chi)
            for beta in _indices(field, n - 2):
                out.append(IndexSeq(n, beta.entries + (e,)))
    return tuple(out)


def enumerate_indices(field: FieldSpec, n: int) -> list[IndexSeq]:
    """E_q(n) in recursive order: for each beta its 0 then 1 extension, then
    the character extensions, characters in lexicographic order of a."""
    if n < 0:
        raise InvalidIndex(f"n must be >= 0, got {n}")
    return list(_indices(field, n))


@lru_cache(maxsize=None)
def _vector(field: FieldSpec, alpha: IndexSeq) -> PosetVector:
    if not alpha.entries:
        return PosetVector.indicator(zero_subspace(field, 0))
    last = alpha.entries[-1]
    beta = alpha.prefix()
    vb = _vector(field, beta)
    if last.kind == "chi":
        return lambda_mu(last.chi, vb)
    m, k, q = beta.n, beta.weight, field.q
    tb = theta(vb)
    if last.kind == "0":
        return vb.embed(m + 1).scale(q ** k) + tb
    coeff = PhiPoly.monomial(field.p, q ** (m - k), 1)
    return vb.embed(m + 1).scale(coeff) - tb


def build_vector(alpha: IndexSeq, field: FieldSpec | None = None) -> PosetVector:
    if not isinstance(alpha, IndexSeq):
        raise InvalidIndex(f"{alpha!r} is not an IndexSeq")
    if field is None:
        chis = [e.chi for e in alpha.entries if e.kind == "chi"]
        if not chis:
            raise InvalidIndex("field must be given for index sequences without characters")
        field = chis[0].field
    for e in alpha.entries:
        if e.kind == "chi" and e.chi.field != field:
            raise InvalidIndex("character over a different field")
    return _vector(field, alpha)


def build_basis(field: FieldSpec, n: int) -> dict[int, list[tuple[IndexSeq, PosetVector]]]:
    """All v_alpha for alpha in E_q(n), grouped by weight N(alpha)."""
    groups = {k: [] for k in range(n + 1)}
    for alpha in enumerate_indices(field, n):
        groups[alpha.weight].append((alpha, _vector(field, alpha)))
    return groups


def basis_list(field: FieldSpec, n: int) -> list[tuple[IndexSeq, PosetVector]]:
    """All (alpha, v_alpha) in enumeration order."""
    return [(alpha, _vector(field, alpha)) for alpha in enumerate_indices(field, n)]
