"""Sparse vectors in C[B_q(n)] with exact PhiPoly entries."""

from __future__ import annotations

from fractions import Fraction

from .errors import InvalidPair
from .field import FieldSpec
from .lattice import Subspace
from .scalars import CycloNum, PhiPoly, _p_add, as_rational


class PosetVector:
    """A finitely supported map Subspace -> PhiPoly over a fixed ambient F_q^n.

    Treated as immutable: every operation returns a new vector.  No zero
    entry is ever stored.
    """

    __slots__ = ("field", "n", "entries")

    def __init__(self, field: FieldSpec, n: int, entries=None):
        self.field = field
        self.n = n
        clean = {}
        p = field.p
        for X, c in (entries or {}).items():
            if X.n != n:
                raise InvalidPair(f"subspace {X!r} is not in ambient {n}")
            if not isinstance(c, PhiPoly):
                c = PhiPoly.const(p, c)
            if not c.is_zero():
                clean[X] = c
        self.entries = clean

    @classmethod
    def _raw(cls, field, n, entries):
        obj = object.__new__(cls)
        obj.field = field
        obj.n = n
        obj.entries = entries
        return obj

    @classmethod
    def indicator(cls, X: Subspace) -> PosetVector:
        return cls._raw(X.field, X.n, {X: PhiPoly.one(X.field.p)})

    @classmethod
    def zero(cls, field: FieldSpec, n: int) -> PosetVector:
        return cls._raw(field, n, {})

    @property
    def p(self) -> int:
        return self.field.p

    def support(self) -> list[Subspace]:
        return sorted(self.entries, key=Subspace.sort_key)

    def items(self):
        for X in self.support():
            yield X, self.entries[X]

    def __getitem__(self, X):
        return self.entries.get(X, PhiPoly.zero(self.p))

    def __len__(self):
        return len(self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def _check(self, other):
        if not isinstance(other, PosetVector):
            raise TypeError(f"expected PosetVector, got {type(other).__name__}")
        if other.n != self.n or other.field != self.field:
            raise InvalidPair("vectors live over different lattices")

    def __add__(self, other):
        self._check(other)
        out = dict(self.entries)
        p = self.p
        for X, c in other.entries.items():
            if X in out:
                s = PhiPoly._raw(p, _p_add(out[X]._c, c._c))
                if s.is_zero():
                    del out[X]
                else:
                    out[X] = s
            else:
                out[X] = c
        return PosetVector._raw(self.field, self.n, out)

    def __neg__(self):
        return PosetVector._raw(self.field, self.n, {X: -c for X, c in self.entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s) -> PosetVector:
        """Multiply every entry by a rational, CycloNum or PhiPoly."""
        if isinstance(s, (int, Fraction, str)):
            r = as_rational(s)
            if not r:
                return PosetVector.zero(self.field, self.n)
            return PosetVector._raw(self.field, self.n,
                                    {X: c.scale(r) for X, c in self.entries.items()})
        if isinstance(s, CycloNum):
            s = PhiPoly.const(self.p, s)
        if s.is_zero():
            return PosetVector.zero(self.field, self.n)
        return PosetVector._raw(self.field, self.n, {X: c * s for X, c in self.entries.items()})

    def __mul__(self, s):
        return self.scale(s)

    __rmul__ = __mul__

    def embed(self, n: int) -> PosetVector:
        """View a vector over B_q(self.n) as one over B_q(n)."""
        return PosetVector._raw(self.field, n, {X.embed(n): c for X, c in self.entries.items()})

    def map_keys(self, f) -> PosetVector:
        """Relabel support through an injective map of subspaces."""
        out = {}
        n = None
        for X, c in self.entries.items():
            Y = f(X)
            n = Y.n
            out[Y] = c
        if n is None:
            return self
        return PosetVector._raw(self.field, n, out)

    def __eq__(self, other):
        if not isinstance(other, PosetVector):
            return NotImplemented
        return self.n == other.n and self.field == other.field and self.entries == other.entries

    def __hash__(self):
        return hash((self.n, frozenset(self.entries.items())))

    def evaluate(self, phi) -> dict:
        return {X: c.evaluate(phi) for X, c in self.entries.items()}

    def to_json(self) -> dict:
        return {"n": self.n,
                "entries": [{"subspace": X.to_json(), "scalar": c.to_json()} for X, c in self.items()]}

    @classmethod
    def from_json(cls, field: FieldSpec, d: dict) -> PosetVector:
        entries = {}
        for e in d["entries"]:
            entries[Subspace.from_json(field, e["subspace"])] = PhiPoly.from_json(e["scalar"])
        return cls(field, d["n"], entries)

    def __repr__(self):
        body = ", ".join(f"{c!r}*{X!r}" for X, c in self.items())
        return f"PosetVector(n={self.n}, [{body}])"
