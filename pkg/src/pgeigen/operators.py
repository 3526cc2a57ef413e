"""The linear maps on C[B_q(n)]: adjacency, dual adjacency, up/down
components, theta_n, lambda(chi), mu(X) and the pi-weighted inner product.

Nothing here materializes a matrix; the adjacency operator walks the
covering relations of :func:`pgeigen.lattice.lattice`.
"""

from __future__ import annotations

from fractions import Fraction

from .characters import Character, apply_projection, project, x_of_chi
from .errors import InvalidPair, InvalidParameter, InvalidSupport
from .lattice import (Subspace, act, canonicalize, group_elements, hat, lattice)
from .scalars import PhiPoly, _p_add, _p_mul
from .vectors import PosetVector


def _sum_into(acc, key, c):
    old = acc.get(key)
    acc[key] = c if old is None else _p_add(old, c)


def apply_adjacency(v: PosetVector) -> PosetVector:
    """A_n v with A(X,Y) = 1 (Y covered by X), phi q^dim X (X covered by Y),
    and (phi-1)/(q-1) q^dim X on the diagonal."""
    F, n, p = v.field, v.n, v.field.p
    q = F.q
    if v.is_zero():
        return v
    lat = lattice(F, n)
    index, elems = lat.index, lat.elements
    below = {}   # sum of v over the subspaces covered by X
    above = {}   # sum of v over the subspaces covering X
    own = {}
    for X, c in v.entries.items():
        i = index[X]
        own[i] = c._c
        for j in lat.up[i]:
            _sum_into(below, j, c._c)
        for j in lat.down[i]:
            _sum_into(above, j, c._c)
    out = {}
    zero = (0,) * (p - 1)
    for i in set(below) | set(above) | set(own):
        k = lat.dims[i]
        acc = below.get(i, ())
        if i in above:
            up = above[i]
            acc = _p_add(acc, (zero,) + tuple(tuple(x * q ** k for x in c) for c in up))
        if i in own:
            diag = PhiPoly(p, [-1, 1]).scale(Fraction(q ** k, q - 1))
            acc = _p_add(acc, _p_mul(p, own[i], diag._c))
        acc = tuple(tuple(_n(x) for x in c) for c in acc)
        if acc:
            out[elems[i]] = PhiPoly._raw(p, acc)
    return PosetVector._raw(F, n, out)


def _n(x):
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


def apply_dual(v: PosetVector) -> PosetVector:
    """A*_n v: scale the X entry by q^-dim X."""
    q = v.field.q
    return PosetVector._raw(v.field, v.n,
                            {X: c.scale(Fraction(1, q ** X.dim)) for X, c in v.entries.items()})


def updown(kind: str, k: int, v: PosetVector) -> PosetVector:
    """U_{n,k}, D_{n,k} or I_{n,k} applied to v."""
    n = v.n
    if not 0 <= k <= n:
        raise InvalidParameter(f"need 0 <= k <= n, got k={k}, n={n}")
    if kind not in ("U", "D", "I"):
        raise InvalidParameter(f"unknown component {kind!r}")
    lat = lattice(v.field, n)
    out = PosetVector.zero(v.field, n)
    acc = {}
    for X, c in v.entries.items():
        if X.dim != k:
            continue
        i = lat.index[X]
        if kind == "I":
            targets = [i]
        elif kind == "U":
            targets = lat.up[i]
        else:
            targets = lat.down[i]
        for j in targets:
            _sum_into(acc, j, c._c)
    p = v.field.p
    entries = {lat.elements[j]: PhiPoly._raw(p, c) for j, c in acc.items() if c}
    return out + PosetVector._raw(v.field, n, entries)


def adjacency_by_components(v: PosetVector) -> PosetVector:
    """U_n + sum_k phi q^(k-1) D_{n,k} + sum_k (phi-1)/(q-1) q^k I_{n,k}."""
    F, n, p, q = v.field, v.n, v.field.p, v.field.q
    phi = PhiPoly.phi(p)
    out = PosetVector.zero(F, n)
    for k in range(n + 1):
        out = out + updown("U", k, v)
        out = out + updown("D", k, v).scale(phi.scale(Fraction(q ** k, q)))
        out = out + updown("I", k, v).scale((phi - 1).scale(Fraction(q ** k, q - 1)))
    return out


def boundary_covers(X: Subspace) -> list[Subspace]:
    """The subspaces of F_q^{n+1} outside F_q^n that cover X, i.e. the class of hat(X)."""
    F, n = X.field, X.n
    lat = lattice(F, n + 1)
    i = lat.index[X.embed(n + 1)]
    return [lat.elements[j] for j in lat.up[i] if lat.elements[j].is_boundary()]


def theta(v: PosetVector) -> PosetVector:
    """theta_n: X -> sum of the boundary subspaces covering X."""
    F, n = v.field, v.n
    acc = {}
    for X, c in v.entries.items():
        for Y in boundary_covers(X):
            _sum_into(acc, Y, c._c)
    p = F.p
    return PosetVector._raw(F, n + 1, {Y: PhiPoly._raw(p, c) for Y, c in acc.items() if c})


def embed(v: PosetVector) -> PosetVector:
    """The inclusion C[B_q(n)] -> C[B_q(n+1)]."""
    return v.embed(v.n + 1)


def act_vector(g, v: PosetVector) -> PosetVector:
    return v.map_keys(lambda X: act(g, X))


def lambda_chi(chi: Character, v: PosetVector) -> PosetVector:
    """Y -> q^-dim Y p(chi)(hat Y) for Y inside X(chi), extended linearly."""
    if v.n != chi.level:
        raise InvalidPair(f"vector over F^{v.n} with character of level {chi.level}")
    X = x_of_chi(chi)
    q = v.field.q
    out = PosetVector.zero(v.field, v.n + 1)
    for Y, c in v.entries.items():
        if not X.contains_subspace(Y):
            raise InvalidSupport(f"{Y!r} is not inside X(chi) = {X!r}")
        out = out + project(chi, Y).scale(c.scale(Fraction(1, q ** Y.dim)))
    return out


def tau(X: Subspace, Y: Subspace) -> Subspace:
    """Image of Y in F_q^{n-1} under e_j -> column j of the Schubert matrix of X."""
    F = X.field
    if Y.n != X.dim:
        raise InvalidParameter(f"{Y!r} does not live in F^{X.dim}")
    images = []
    for col in Y.cols:
        w = [0] * X.n
        for a, m in zip(col, X.cols):
            if a:
                for i, x in enumerate(m):
                    if x:
                        w[i] = F.add(w[i], F.mul(a, x))
        images.append(w)
    return canonicalize(F, X.n, images)


def mu_x(X: Subspace, v: PosetVector) -> PosetVector:
    """Relabel a vector over B_q(n-1) as one over B_q(X), X a hyperplane of F_q^n."""
    if X.dim != X.n - 1:
        raise InvalidParameter(f"{X!r} is not a hyperplane")
    if v.n != X.n - 1:
        raise InvalidParameter(f"vector over F^{v.n} cannot be relabelled into {X!r}")
    if v.is_zero():
        return PosetVector.zero(v.field, X.n)
    return v.map_keys(lambda Y: tau(X, Y))


def lambda_mu(chi: Character, v: PosetVector) -> PosetVector:
    """lambda(chi) mu(X(chi)): C[B_q(n-1)] -> W(chi) in C[B_q(n+1)]."""
    return lambda_chi(chi, mu_x(x_of_chi(chi), v))


def weight_poly(field, k: int) -> PhiPoly:
    return PhiPoly.monomial(field.p, field.q ** (k * (k - 1) // 2), k)


def inner(u: PosetVector, v: PosetVector) -> PhiPoly:
    """sum_X conj(u(X)) v(X) phi^dim X q^binom(dim X, 2) (unnormalized pi)."""
    if u.n != v.n or u.field != v.field:
        raise InvalidPair("inner product of vectors over different lattices")
    p, q = u.field.p, u.field.q
    a, b = u.entries, v.entries
    swap = len(a) > len(b)
    if swap:
        a, b = b, a
    by_dim = {}
    conj = p != 2
    for X, c in a.items():
        d = b.get(X)
        if d is None:
            continue
        if swap:
            left, right = d, c
        else:
            left, right = c, d
        lc = left.conjugate()._c if conj else left._c
        _sum_into(by_dim, X.dim, _p_mul(p, lc, right._c))
    total = ()
    zero = (0,) * (p - 1)
    for k in sorted(by_dim):
        s = by_dim[k]
        if not s:
            continue
        w = q ** (k * (k - 1) // 2)
        total = _p_add(total, (zero,) * k + tuple(tuple(x * w for x in c) for c in s))
    return PhiPoly._raw(p, total)


def in_w0(v: PosetVector) -> bool:
    """v lies in W(0): supported on the boundary and fixed by every g in H."""
    if not all(X.is_boundary() for X in v.entries):
        return False
    return all(act_vector(g, v) == v for g in group_elements(v.field, v.n - 1))


def in_w_chi(chi: Character, v: PosetVector) -> bool:
    """v lies in W(chi): p(chi) v = |H| v."""
    if not all(X.is_boundary() for X in v.entries):
        return False
    return apply_projection(chi, v) == v.scale(v.field.q ** chi.level)


def adjacency_entry(X: Subspace, Y: Subspace) -> PhiPoly:
    """The (X, Y) entry of A_n as a polynomial in phi."""
    if X.n != Y.n:
        raise InvalidPair("subspaces live in different ambient spaces")
    p, q = X.field.p, X.field.q
    k = X.dim
    if X == Y:
        return PhiPoly(p, [-1, 1]).scale(Fraction(q ** k, q - 1))
    if Y.dim + 1 == k and X.contains_subspace(Y):
        return PhiPoly.one(p)
    if k + 1 == Y.dim and Y.contains_subspace(X):
        return PhiPoly.monomial(p, q ** k, 1)
    return PhiPoly.zero(p)


def dual_entry(X: Subspace) -> Fraction:
    return Fraction(1, X.field.q ** X.dim)
