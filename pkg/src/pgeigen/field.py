"""Arithmetic in F_q for small prime powers q.

An element of F_q = F_p[x]/(f) is encoded as a single integer code
``c_0 + c_1 p + ... + c_{m-1} p^{m-1}`` whose base-p digits are its
coordinates in the power basis {1, x, ..., x^{m-1}}.  For a prime field
the code is the residue itself.

The irreducible modulus for each supported (p, m) is fixed:

    ====  ===  =================  ======================
    q     p,m  modulus            coefficients c_0..c_m
    ====  ===  =================  ======================
    p     p,1  x                  [0, 1]
    4     2,2  x^2 + x + 1        [1, 1, 1]
    8     2,3  x^3 + x + 1        [1, 1, 0, 1]
    9     3,2  x^2 + 1            [1, 0, 1]
    16    2,4  x^4 + x + 1        [1, 1, 0, 0, 1]
    ====  ===  =================  ======================

Supported prime fields: 2, 3, 5, 7, 11, 13.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import product

from .errors import FieldDivisionByZero, InvalidParameter, UnsupportedField

MAX_ORDER = 16

MODULI = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (3, 2): (1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, m) with q = p^m, or raise InvalidParameter."""
    if q < 2:
        raise InvalidParameter(f"q must be >= 2, got {q}")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1:
        raise InvalidParameter(f"{q} is not a prime power")
    return p, m


# -- polynomials over F_p as coefficient lists, low degree first --

def _poly_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, f, p):
    a = _poly_trim(a)
    f = _poly_trim(f)
    inv_lead = pow(f[-1], p - 2, p)
    while len(a) >= len(f):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(f)
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        a = _poly_trim(a)
    return a


def is_irreducible(modulus, p: int) -> bool:
    """Trial division by every monic polynomial of degree <= m/2."""
    f = _poly_trim(modulus)
    m = len(f) - 1
    if m < 1:
        return False
    for d in range(1, m // 2 + 1):
        for low in product(range(p), repeat=d):
            if not _poly_mod(f, list(low) + [1], p):
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    p: int
    m: int
    modulus: tuple[int, ...]
    add_table: list = dc_field(compare=False, repr=False, default=None)
    mul_table: list = dc_field(compare=False, repr=False, default=None)
    neg_table: list = dc_field(compare=False, repr=False, default=None)
    inv_table: list = dc_field(compare=False, repr=False, default=None)
    trace_table: list = dc_field(compare=False, repr=False, default=None)

    @property
    def q(self) -> int:
        return self.p ** self.m

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def digits(self, a: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def from_digits(self, digits) -> int:
        digits = list(digits)
        if len(digits) != self.m or any(not 0 <= d < self.p for d in digits):
            raise InvalidParameter(f"bad digit sequence {digits} for F_{self.q}")
        return sum(d * self.p ** i for i, d in enumerate(digits))

    def elements(self) -> range:
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg_table[b]]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldDivisionByZero(f"0 has no inverse in F_{self.q}")
        return self.inv_table[a]

    def trace(self, a: int) -> int:
        """Absolute trace a + a^p + ... + a^(p^(m-1)), as an integer in [0, p)."""
        return self.trace_table[a]

    def dot(self, u, v) -> int:
        add, mul = self.add_table, self.mul_table
        s = 0
        for x, y in zip(u, v):
            if x and y:
                s = add[s][mul[x][y]]
        return s

    def to_json(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    def __repr__(self):
        return f"FieldSpec(q={self.q}, modulus={list(self.modulus)})"


def _build_tables(p, m, modulus):
    q = p ** m

    def digits(a):
        return [(a // p ** i) % p for i in range(m)]

    def code(ds):
        return sum(d * p ** i for i, d in enumerate(ds))

    add = [[code([(x + y) % p for x, y in zip(digits(a), digits(b))])
            for b in range(q)] for a in range(q)]
    mul = [[0] * q for _ in range(q)]
    for a in range(q):
        da = digits(a)
        for b in range(q):
            db = digits(b)
            prod = [0] * (2 * m - 1)
            for i, x in enumerate(da):
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
            r = _poly_mod(prod, modulus, p) if m > 1 else [prod[0] % p]
            r = list(r) + [0] * (m - len(r))
            mul[a][b] = code(r)
    neg = [code([(-x) % p for x in digits(a)]) for a in range(q)]
    inv = [None] * q
    for a in range(1, q):
        inv[a] = next(b for b in range(1, q) if mul[a][b] == 1)
    trace = []
    for a in range(q):
        s, power = 0, a
        for _ in range(m):
            s = add[s][power]
            # Frobenius: power <- power^p
            f = 1
            for _ in range(p):
                f = mul[f][power]
            power = f
        # the trace lands in the prime subfield, whose codes are 0..p-1
        if s >= p:
            raise AssertionError("trace left the prime field")
        trace.append(s)
    return add, mul, neg, inv, trace


@lru_cache(maxsize=None)
def field_create(p: int, m: int = 1) -> FieldSpec:
    """Return F_{p^m} with its fixed modulus (cached, so equal specs are identical objects)."""
    if not is_prime(p):
        raise InvalidParameter(f"{p} is not prime")
    if m < 1:
        raise InvalidParameter(f"extension degree must be >= 1, got {m}")
    if p ** m > MAX_ORDER:
        raise UnsupportedField(f"F_{p}^{m} exceeds the supported order {MAX_ORDER}")
    if m == 1:
        modulus = (0, 1)
    elif (p, m) in MODULI:
        modulus = MODULI[(p, m)]
    else:
        raise UnsupportedField(f"no modulus tabulated for p={p}, m={m}")
    if not is_irreducible(modulus, p):
        raise AssertionError(f"tabulated modulus {modulus} is reducible mod {p}")
    tables = _build_tables(p, m, modulus)
    return FieldSpec(p, m, modulus, *tables)


def field_for_q(q: int) -> FieldSpec:
    p, m = prime_power(q)
    return field_create(p, m)


def arith(spec: FieldSpec, op: str, a: int, b: int | None = None) -> int:
    if op == "add":
        return spec.add(a, b)
    if op == "mul":
        return spec.mul(a, b)
    if op == "neg":
        return spec.neg(a)
    if op == "inv":
        return spec.inv(a)
    raise InvalidParameter(f"unknown field operation {op!r}")


def trace(spec: FieldSpec, a: int) -> int:
    return spec.trace(a)
