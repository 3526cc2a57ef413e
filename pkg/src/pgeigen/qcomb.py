"""q-binomial coefficients, Galois numbers, the eigenvalue formula and Kemp weights."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import InvalidParameter
from .scalars import PhiPoly


def _check_q(q):
    if not isinstance(q, int) or q < 2:
        raise InvalidParameter(f"q must be an integer >= 2, got {q!r}")


def _conductor(q):
    return next(d for d in range(2, q + 1) if q % d == 0)


@lru_cache(maxsize=None)
def _qbinom(n, k, q):
    if n < 0 or k < 0:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0:
        return 1
    # [n, k] from the level below:  [m+1,k] = [m,k] + [m,k-1] + (q^m - 1)[m-1,k-1]
    m = n - 1
    return _qbinom(m, k, q) + _qbinom(m, k - 1, q) + (q ** m - 1) * _qbinom(m - 1, k - 1, q)


def qbinom(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n; zero if n or k is negative."""
    _check_q(q)
    return _qbinom(n, k, q)


def qbinom_row(n: int, q: int) -> list[int]:
    return [qbinom(n, k, q) for k in range(n + 1)]


def galois(n: int, q: int) -> int:
    """Total number of subspaces of F_q^n."""
    _check_q(q)
    if n < 0:
        raise InvalidParameter(f"n must be >= 0, got {n}")
    return sum(_qbinom(n, k, q) for k in range(n + 1))


def eigenvalue_poly(n: int, k: int, q: int, p: int | None = None) -> PhiPoly:
    """(phi q^(n-k) - q^k) / (q - 1) as a polynomial in phi."""
    _check_q(q)
    if not 0 <= k <= n:
        raise InvalidParameter(f"need 0 <= k <= n, got n={n}, k={k}")
    p = p or _conductor(q)
    return PhiPoly(p, [Fraction(-q ** k, q - 1), Fraction(q ** (n - k), q - 1)])


def kemp_weight(k: int, q: int, p: int | None = None) -> PhiPoly:
    """Unnormalized Kemp weight phi^k q^(k(k-1)/2)."""
    _check_q(q)
    if k < 0:
        raise InvalidParameter(f"k must be >= 0, got {k}")
    return PhiPoly.monomial(p or _conductor(q), q ** (k * (k - 1) // 2), k)


def pq_product(n: int, q: int, p: int | None = None) -> PhiPoly:
    """prod_{j<n} (1 + phi q^j)."""
    _check_q(q)
    if n < 0:
        raise InvalidParameter(f"n must be >= 0, got {n}")
    p = p or _conductor(q)
    out = PhiPoly.one(p)
    for j in range(n):
        out = out * PhiPoly(p, [1, q ** j])
    return out
