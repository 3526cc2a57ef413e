"""The subspace lattice B_q(n) of F_q^n.

Every subspace is stored as its unique n x k matrix in Schubert normal form
(column reduced echelon form): each column is nonzero, its last nonzero
entry is 1 at row r_j, r_1 < ... < r_k, and the rows r_1..r_k of the
matrix form the identity.  Columns are tuples of field-element codes,
row 0 first, so F_q^k sits inside F_q^n by zero padding.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .errors import InvalidPair, InvalidParameter
from .field import FieldSpec


class Subspace:
    """A subspace of F_q^n, identified by its Schubert matrix."""

    __slots__ = ("field", "n", "cols", "_hash")

    def __init__(self, field: FieldSpec, n: int, cols):
        self.field = field
        self.n = n
        self.cols = tuple(tuple(c) for c in cols)
        self._hash = hash((field.q, n, self.cols))

    @property
    def dim(self) -> int:
        return len(self.cols)

    @property
    def basis(self) -> tuple[tuple[int, ...], ...]:
        return self.cols

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(_last_nonzero(c) for c in self.cols)

    def sort_key(self):
        piv = self.pivots
        free = tuple(c[i] for c, r in zip(self.cols, piv) for i in range(r) if i not in piv)
        return (self.dim, piv, free)

    def is_boundary(self) -> bool:
        """True when the subspace is not inside the hyperplane x_n = 0."""
        return bool(self.cols) and self.cols[-1][-1] != 0

    def embed(self, n: int) -> Subspace:
        """The same subspace viewed inside F_q^n, n >= self.n."""
        if n < self.n:
            raise InvalidParameter(f"cannot embed F^{self.n} into F^{n}")
        if n == self.n:
            return self
        pad = (0,) * (n - self.n)
        return Subspace(self.field, n, [c + pad for c in self.cols])

    def vectors(self):
        """All q^k vectors of the subspace."""
        F = self.field
        for coeffs in product(range(F.q), repeat=self.dim):
            v = [0] * self.n
            for a, col in zip(coeffs, self.cols):
                if a:
                    for i, x in enumerate(col):
                        if x:
                            v[i] = F.add(v[i], F.mul(a, x))
            yield tuple(v)

    def contains(self, v) -> bool:
        # reduce v against the Schubert columns, last rows first
        F = self.field
        v = list(v)
        for col, r in zip(reversed(self.cols), reversed(self.pivots)):
            a = v[r]
            if a:
                for i, x in enumerate(col):
                    if x:
                        v[i] = F.sub(v[i], F.mul(a, x))
        return not any(v)

    def contains_subspace(self, other: Subspace) -> bool:
        return all(self.contains(c) for c in other.cols)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self._hash == other._hash and self.n == other.n
                and self.cols == other.cols and self.field == other.field)

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.dim, "cols": [list(c) for c in self.cols]}

    @classmethod
    def from_json(cls, field: FieldSpec, d: dict) -> Subspace:
        X = canonicalize(field, d["n"], d["cols"])
        if X.dim != d["k"] or [list(c) for c in X.cols] != d["cols"]:
            raise InvalidParameter(f"not a Schubert normal form record: {d}")
        return X

    def __repr__(self):
        body = ",".join("".join(str(x) for x in c) for c in self.cols)
        return f"<{self.n}:{self.dim}|{body}>"


def _last_nonzero(col):
    for i in range(len(col) - 1, -1, -1):
        if col[i]:
            return i
    raise InvalidParameter("zero column in a Schubert matrix")


def canonicalize(field: FieldSpec, n: int, vectors) -> Subspace:
    """Schubert normal form of the span of the given vectors of F_q^n."""
    F = field
    cols = [list(v) for v in vectors]
    for v in cols:
        if len(v) != n:
            raise InvalidParameter(f"vector {v} has length {len(v)}, expected {n}")
    add, mul, neg, inv = F.add_table, F.mul_table, F.neg_table, F.inv_table
    pivot_cols = []
    free = [c for c in cols if any(c)]
    for r in range(n - 1, -1, -1):
        j = next((j for j, c in enumerate(free) if c[r]), None)
        if j is None:
            continue
        c = free.pop(j)
        s = inv[c[r]]
        if s != 1:
            c = [mul[s][x] for x in c]
        for other in pivot_cols + free:
            a = other[r]
            if a:
                na = neg[a]
                for i in range(r + 1):
                    if c[i]:
                        other[i] = add[other[i]][mul[na][c[i]]]
        pivot_cols.append(c)
        free = [f for f in free if any(f)]
    pivot_cols.reverse()
    return Subspace(F, n, pivot_cols)


def zero_subspace(field: FieldSpec, n: int) -> Subspace:
    return Subspace(field, n, ())


def full_space(field: FieldSpec, n: int) -> Subspace:
    return Subspace(field, n, [tuple(int(i == j) for i in range(n)) for j in range(n)])


def all_vectors(field: FieldSpec, n: int):
    return product(range(field.q), repeat=n)


def enumerate_subspaces(field: FieldSpec, n: int, k: int) -> list[Subspace]:
    """All k-dimensional subspaces, by pivot pattern then free entries (lexicographic)."""
    if not 0 <= k <= n:
        raise InvalidParameter(f"need 0 <= k <= n, got n={n}, k={k}")
    out = []
    for piv in combinations(range(n), k):
        pset = set(piv)
        slots = [(j, i) for j, r in enumerate(piv) for i in range(r) if i not in pset]
        for values in product(range(field.q), repeat=len(slots)):
            cols = [[0] * n for _ in piv]
            for j, r in enumerate(piv):
                cols[j][r] = 1
            for (j, i), a in zip(slots, values):
                cols[j][i] = a
            out.append(Subspace(field, n, cols))
    return out


def enumerate_all(field: FieldSpec, n: int) -> list[Subspace]:
    out = []
    for k in range(n + 1):
        out.extend(enumerate_subspaces(field, n, k))
    return out


def span_with(X: Subspace, v) -> Subspace:
    return canonicalize(X.field, X.n, list(X.cols) + [tuple(v)])


def covers(X: Subspace, Y: Subspace) -> bool:
    """True iff Y is a subspace of X of codimension one."""
    if X.n != Y.n or X.field != Y.field:
        raise InvalidPair("subspaces live in different ambient spaces")
    return X.dim == Y.dim + 1 and X.contains_subspace(Y)


def hat(X: Subspace) -> Subspace:
    """span(X, e_{n+1}) inside F_q^{n+1}."""
    e = (0,) * X.n + (1,)
    return canonicalize(X.field, X.n + 1, [c + (0,) for c in X.cols] + [e])


def meet_hyperplane(X: Subspace) -> Subspace:
    """X intersected with F_q^{n-1} = {x : x_n = 0}, as a subspace of F_q^{n-1}.

    In Schubert form the columns with pivot above the last row span the
    intersection.
    """
    m = X.n - 1
    return Subspace(X.field, m, [c[:m] for c in X.cols if c[m] == 0])


@dataclass(frozen=True)
class GroupElem:
    """The unipotent (n+1)x(n+1) matrix [[I, a], [0, 1]]."""

    field: FieldSpec
    a: tuple

    def apply(self, v):
        F = self.field
        t = v[-1]
        if not t:
            return tuple(v)
        mul, add = F.mul_table, F.add_table
        return tuple(add[x][mul[t][ai]] for x, ai in zip(v[:-1], self.a)) + (t,)

    def inverse(self) -> GroupElem:
        return GroupElem(self.field, tuple(self.field.neg(x) for x in self.a))

    def __add__(self, other):
        return GroupElem(self.field, tuple(self.field.add(x, y) for x, y in zip(self.a, other.a)))


def group_elements(field: FieldSpec, n: int) -> list[GroupElem]:
    """H(n+1, F_q), indexed by F_q^n in lexicographic order."""
    return [GroupElem(field, a) for a in all_vectors(field, n)]


def act(g: GroupElem, X: Subspace) -> Subspace:
    if len(g.a) != X.n - 1:
        raise InvalidPair(f"group element of level {len(g.a)} cannot act on F^{X.n}")
    if not any(g.a):
        return X
    return canonicalize(X.field, X.n, [g.apply(c) for c in X.cols])


def orbit(X: Subspace) -> list[Subspace]:
    return sorted({act(g, X) for g in group_elements(X.field, X.n - 1)}, key=Subspace.sort_key)


def stabilizer(X: Subspace) -> list[GroupElem]:
    return [g for g in group_elements(X.field, X.n - 1) if act(g, X) == X]


def boundary(field: FieldSpec, n: int) -> list[Subspace]:
    """Subspaces of F_q^n not contained in F_q^{n-1}."""
    return [X for X in enumerate_all(field, n) if X.is_boundary()]


class Lattice:
    """Index of B_q(n) with precomputed covering relations."""

    def __init__(self, field: FieldSpec, n: int):
        self.field = field
        self.n = n
        self.elements = enumerate_all(field, n)
        self.index = {X: i for i, X in enumerate(self.elements)}
        self.dims = [X.dim for X in self.elements]
        self.up = [[] for _ in self.elements]
        self.down = [[] for _ in self.elements]
        vecs = list(all_vectors(field, n))
        for i, X in enumerate(self.elements):
            if X.dim == n:
                continue
            ups = {span_with(X, v) for v in vecs if not X.contains(v)}
            for Y in sorted(ups, key=Subspace.sort_key):
                j = self.index[Y]
                self.up[i].append(j)
                self.down[j].append(i)

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"Lattice(q={self.field.q}, n={self.n}, size={len(self)})"


@lru_cache(maxsize=None)
def lattice(field: FieldSpec, n: int) -> Lattice:
    return Lattice(field, n)
