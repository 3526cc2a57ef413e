"""Exact scalars: the cyclotomic field Q(zeta_p) and polynomials over it in a
formal weight phi.

A :class:`CycloNum` stores p-1 rational coordinates in the basis
1, zeta, ..., zeta^(p-2), using zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)).
Coordinates are ``int`` whenever integral and ``Fraction`` otherwise, so
equality is coordinate-wise.  For p = 2 this is just Q.

A :class:`PhiPoly` is a polynomial in phi whose coefficients are CycloNums,
stored internally as a tuple of coordinate tuples with trailing zeros
stripped.  There is no division by polynomials; rational scalars may be
multiplied in freely.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

from .errors import IncompatibleScalars, InvalidParameter


def _norm(x):
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


def as_rational(x):
    """Coerce an int, Fraction or "a/b" string to a normalized exact rational."""
    if isinstance(x, bool):
        raise InvalidParameter("booleans are not rationals")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return _norm(x)
    if isinstance(x, str):
        return _norm(Fraction(x))
    raise InvalidParameter(f"not an exact rational: {x!r}")


def _fmt_rational(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


# -- raw coordinate-tuple kernels --

def _reduce_full(p, full):
    top = full[p - 1]
    if top:
        return tuple(_norm(full[i] - top) for i in range(p - 1))
    return tuple(_norm(full[i]) for i in range(p - 1))


def _c_add(a, b):
    return tuple(_norm(x + y) for x, y in zip(a, b))


def _c_sub(a, b):
    return tuple(_norm(x - y) for x, y in zip(a, b))


def _c_scale(a, r):
    return tuple(_norm(x * r) for x in a)


def _c_mul(p, a, b):
    if p == 2:
        return (_norm(a[0] * b[0]),)
    full = [0] * p
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    full[(i + j) % p] += x * y
    return _reduce_full(p, full)


def _c_conj(p, a):
    if p == 2:
        return a
    full = [0] * p
    full[0] = a[0]
    for j in range(1, p - 1):
        full[p - j] = a[j]
    return _reduce_full(p, full)


def _c_is_zero(a):
    return not any(a)


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and not any(coeffs[-1]):
        coeffs.pop()
    return tuple(coeffs)


def _p_add(A, B):
    if len(A) < len(B):
        A, B = B, A
    out = list(A)
    for i, b in enumerate(B):
        out[i] = tuple(_norm(x + y) for x, y in zip(out[i], b))
    return _strip(out)


def _p_mul(p, A, B):
    if not A or not B:
        return ()
    if p == 2:
        out = [0] * (len(A) + len(B) - 1)
        for i, (x,) in enumerate(A):
            if x:
                for j, (y,) in enumerate(B):
                    if y:
                        out[i + j] += x * y
        return _strip((_norm(c),) for c in out)
    acc = [[0] * p for _ in range(len(A) + len(B) - 1)]
    for i, a in enumerate(A):
        for j, b in enumerate(B):
            row = acc[i + j]
            for s, x in enumerate(a):
                if x:
                    for t, y in enumerate(b):
                        if y:
                            row[(s + t) % p] += x * y
    return _strip(_reduce_full(p, row) for row in acc)


class CycloNum:
    """An element of Q(zeta_p)."""

    __slots__ = ("p", "coords")

    def __init__(self, p: int, coords=None):
        if coords is None:
            coords = (0,) * (p - 1)
        coords = tuple(as_rational(c) for c in coords)
        if len(coords) != p - 1:
            raise InvalidParameter(f"need {p - 1} coordinates, got {len(coords)}")
        self.p = p
        self.coords = coords

    @classmethod
    def _raw(cls, p, coords):
        obj = object.__new__(cls)
        obj.p = p
        obj.coords = coords
        return obj

    @classmethod
    def rational(cls, p: int, r) -> CycloNum:
        return cls._raw(p, (as_rational(r),) + (0,) * (p - 2))

    def _check(self, other):
        if not isinstance(other, CycloNum):
            other = CycloNum.rational(self.p, other)
        if other.p != self.p:
            raise IncompatibleScalars(f"conductors {self.p} and {other.p} differ")
        return other

    def __add__(self, other):
        if isinstance(other, PhiPoly):
            return NotImplemented
        other = self._check(other)
        return CycloNum._raw(self.p, _c_add(self.coords, other.coords))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, PhiPoly):
            return NotImplemented
        other = self._check(other)
        return CycloNum._raw(self.p, _c_sub(self.coords, other.coords))

    def __rsub__(self, other):
        return self._check(other) - self

    def __neg__(self):
        return CycloNum._raw(self.p, tuple(-x for x in self.coords))

    def __mul__(self, other):
        if isinstance(other, PhiPoly):
            return NotImplemented
        other = self._check(other)
        return CycloNum._raw(self.p, _c_mul(self.p, self.coords, other.coords))

    __rmul__ = __mul__

    def conjugate(self) -> CycloNum:
        return CycloNum._raw(self.p, _c_conj(self.p, self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycloNum.rational(self.p, other)
        if not isinstance(other, CycloNum):
            return NotImplemented
        return self.p == other.p and self.coords == other.coords

    def __hash__(self):
        return hash((self.p, self.coords))

    def to_complex(self) -> complex:
        z = cmath.exp(2j * math.pi / self.p)
        return sum(complex(float(c)) * z ** j for j, c in enumerate(self.coords))

    def to_json(self) -> list:
        return [_fmt_rational(c) for c in self.coords]

    def __repr__(self):
        terms = []
        for j, c in enumerate(self.coords):
            if c:
                terms.append(f"{c}" if j == 0 else f"{c}*z{self.p}^{j}")
        return "(" + " + ".join(terms) + ")" if terms else "0"


def root_of_unity(p: int, t: int) -> CycloNum:
    """zeta_p^(t mod p)."""
    t %= p
    if t == p - 1:
        return CycloNum._raw(p, (-1,) * (p - 1))
    coords = [0] * (p - 1)
    coords[t] = 1
    return CycloNum._raw(p, tuple(coords))


def cyclo_from_exponent_counts(p: int, counts) -> CycloNum:
    """Sum of counts[t] * zeta^t over t in [0, p)."""
    return CycloNum._raw(p, _reduce_full(p, list(counts)))


class PhiPoly:
    """A polynomial in phi with Q(zeta_p) coefficients."""

    __slots__ = ("p", "_c", "_hash")

    def __init__(self, p: int, coeffs=()):
        raw = []
        for c in coeffs:
            if isinstance(c, CycloNum):
                if c.p != p:
                    raise IncompatibleScalars(f"conductors {p} and {c.p} differ")
                raw.append(c.coords)
            else:
                raw.append((as_rational(c),) + (0,) * (p - 2))
        self.p = p
        self._c = _strip(raw)
        self._hash = None

    @classmethod
    def _raw(cls, p, c):
        obj = object.__new__(cls)
        obj.p = p
        obj._c = c
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, p: int) -> PhiPoly:
        return cls._raw(p, ())

    @classmethod
    def const(cls, p: int, c) -> PhiPoly:
        if isinstance(c, CycloNum):
            return cls(p, [c])
        r = as_rational(c)
        return cls._raw(p, ((r,) + (0,) * (p - 2),) if r else ())

    @classmethod
    def one(cls, p: int) -> PhiPoly:
        return cls.const(p, 1)

    @classmethod
    def phi(cls, p: int) -> PhiPoly:
        return cls._raw(p, ((0,) * (p - 1), (1,) + (0,) * (p - 2)))

    @classmethod
    def monomial(cls, p: int, c, k: int) -> PhiPoly:
        """c * phi^k for a rational c."""
        r = as_rational(c)
        if not r:
            return cls._raw(p, ())
        z = (0,) * (p - 1)
        return cls._raw(p, (z,) * k + ((r,) + (0,) * (p - 2),))

    @property
    def coeffs(self) -> tuple[CycloNum, ...]:
        return tuple(CycloNum._raw(self.p, c) for c in self._c)

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def _coerce(self, other):
        if isinstance(other, PhiPoly):
            if other.p != self.p:
                raise IncompatibleScalars(f"conductors {self.p} and {other.p} differ")
            return other
        if isinstance(other, CycloNum):
            if other.p != self.p:
                raise IncompatibleScalars(f"conductors {self.p} and {other.p} differ")
            return PhiPoly._raw(self.p, _strip([other.coords]))
        return PhiPoly.const(self.p, other)

    def __add__(self, other):
        other = self._coerce(other)
        return PhiPoly._raw(self.p, _p_add(self._c, other._c))

    __radd__ = __add__

    def __neg__(self):
        return PhiPoly._raw(self.p, tuple(tuple(-x for x in c) for c in self._c))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        return PhiPoly._raw(self.p, _p_mul(self.p, self._c, other._c))

    __rmul__ = __mul__

    def scale(self, r) -> PhiPoly:
        """Multiply by a rational."""
        r = as_rational(r)
        if not r:
            return PhiPoly._raw(self.p, ())
        if r == 1:
            return self
        return PhiPoly._raw(self.p, tuple(_c_scale(c, r) for c in self._c))

    def shift(self, k: int) -> PhiPoly:
        """Multiply by phi^k."""
        if not self._c or k == 0:
            return self
        return PhiPoly._raw(self.p, ((0,) * (self.p - 1),) * k + self._c)

    def conjugate(self) -> PhiPoly:
        """Complex conjugation; phi is real, so only coefficients move."""
        if self.p == 2:
            return self
        return PhiPoly._raw(self.p, tuple(_c_conj(self.p, c) for c in self._c))

    def evaluate(self, phi) -> CycloNum:
        """Exact substitution of a rational phi."""
        phi = as_rational(phi)
        acc = (0,) * (self.p - 1)
        for c in reversed(self._c):
            acc = _c_add(_c_scale(acc, phi), c)
        return CycloNum._raw(self.p, acc)

    def eval_complex(self, phi) -> complex:
        return eval_complex(self, phi)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, CycloNum)):
            other = self._coerce(other)
        if not isinstance(other, PhiPoly):
            return NotImplemented
        return self.p == other.p and self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.p, self._c))
        return self._hash

    def to_json(self) -> dict:
        return {"p": self.p, "coeffs": [[_fmt_rational(x) for x in c] for c in self._c]}

    @classmethod
    def from_json(cls, d: dict) -> PhiPoly:
        p = d["p"]
        return cls(p, [CycloNum(p, [Fraction(x) for x in c]) for c in d["coeffs"]])

    def __repr__(self):
        if not self._c:
            return "0"
        terms = []
        for k, c in enumerate(self._c):
            if any(c):
                cn = repr(CycloNum._raw(self.p, c))
                terms.append(cn if k == 0 else f"{cn}*phi^{k}")
        return " + ".join(terms)


def _to_float_phi(phi) -> float:
    if isinstance(phi, str):
        phi = Fraction(phi)
    return float(phi)


def eval_complex(x, phi, precision=complex) -> complex:
    """Numerically substitute zeta_p -> exp(2 pi i/p) and phi -> phi."""
    if _to_float_phi(phi) <= 0:
        raise InvalidParameter(f"phi must be positive, got {phi}")
    if isinstance(x, CycloNum):
        return precision(x.to_complex())
    if not isinstance(x, PhiPoly):
        return precision(complex(float(x)))
    f = _to_float_phi(phi)
    acc = 0j
    for c in reversed(x.coeffs):
        acc = acc * f + c.to_complex()
    return precision(acc)


def scalar_arith(op: str, a, b=None):
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    if op == "conjugate":
        return a.conjugate()
    if op == "is_zero":
        return a.is_zero()
    raise InvalidParameter(f"unknown scalar operation {op!r}")
