"""Arithmetic in the Eisenstein integers Z[zeta], zeta**2 = -1 - zeta."""
from __future__ import annotations

from dataclasses import dataclass

from .arith import is_probable_prime, sqrt_mod_prime


def _round_half_down(p: int, q: int) -> int:
    """Nearest integer to p/q (q > 0), ties toward -infinity."""
    return -((q - 2 * p) // (2 * q))


@dataclass(frozen=True)
class EisensteinInt:
    """The element a + b*zeta."""

    a: int
    b: int

    def __add__(self, other):
        other = _coerce(other)
        return EisensteinInt(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return EisensteinInt(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __neg__(self):
        return EisensteinInt(-self.a, -self.b)

    def __mul__(self, other):
        other = _coerce(other)
        a, b, c, d = self.a, self.b, other.a, other.b
        return EisensteinInt(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return e_pow(self, k)

    def __bool__(self):
        return bool(self.a or self.b)

    def __iter__(self):
        yield self.a
        yield self.b

    def __repr__(self):
        return f"EisensteinInt({self.a}, {self.b})"

    def conj(self) -> "EisensteinInt":
        return EisensteinInt(self.a - self.b, -self.b)

    def norm(self) -> int:
        return self.a * self.a - self.a * self.b + self.b * self.b


def _coerce(x) -> EisensteinInt:
    if isinstance(x, EisensteinInt):
        return x
    if isinstance(x, int):
        return EisensteinInt(x, 0)
    if isinstance(x, tuple) and len(x) == 2:
        return EisensteinInt(*x)
    raise TypeError(f"cannot interpret {x!r} as an Eisenstein integer")


ONE = EisensteinInt(1, 0)
ZETA = EisensteinInt(0, 1)
ONE_MINUS_ZETA = EisensteinInt(1, -1)
UNITS = (ONE, ZETA, EisensteinInt(-1, -1), -ONE, -ZETA, EisensteinInt(1, 1))


def e_add(x, y):
    return _coerce(x) + _coerce(y)


def e_sub(x, y):
    return _coerce(x) - _coerce(y)


def e_mul(x, y):
    return _coerce(x) * _coerce(y)


def e_conj(x):
    return _coerce(x).conj()


def e_norm(x) -> int:
    return _coerce(x).norm()


def e_pow(x, k: int) -> EisensteinInt:
    if k < 0:
        raise ValueError("negative exponent")
    x = _coerce(x)
    out = ONE
    while k:
        if k & 1:
            out = out * x
        x = x * x
        k >>= 1
    return out


def e_divmod(x, y):
    """Euclidean division: x = q*y + r with norm(r) < norm(y)."""
    x, y = _coerce(x), _coerce(y)
    n = y.norm()
    if n == 0:
        raise ZeroDivisionError("division by zero in Z[zeta]")
    t = x * y.conj()
    q = EisensteinInt(_round_half_down(t.a, n), _round_half_down(t.b, n))
    return q, x - q * y


def e_divides(d, x) -> bool:
    """True iff d divides x exactly in Z[zeta]."""
    d, x = _coerce(d), _coerce(x)
    if not d:
        return not x
    return not e_divmod(x, d)[1]


def e_exact_div(x, d) -> EisensteinInt:
    q, r = e_divmod(x, d)
    if r:
        raise ArithmeticError(f"{d} does not divide {x}")
    return q


def associates(x):
    x = _coerce(x)
    return [u * x for u in UNITS]


def canonical(x) -> EisensteinInt:
    """The unique associate with a > b >= 0."""
    x = _coerce(x)
    if not x:
        raise ValueError("zero has no canonical associate")
    for y in associates(x):
        if y.a > y.b >= 0:
            return y
    raise AssertionError(f"no canonical associate for {x}")  # unreachable


def e_gcd(x, y) -> EisensteinInt:
    x, y = _coerce(x), _coerce(y)
    if not x and not y:
        raise ValueError("gcd(0, 0) is undefined")
    while y:
        x, y = y, e_divmod(x, y)[1]
    return canonical(x)


def split_prime(p: int) -> EisensteinInt:
    """A canonical prime of norm p, for a rational prime p = 1 (mod 3)."""
    if p % 3 != 1 or not is_probable_prime(p):
        raise ValueError(f"{p} is not a prime congruent to 1 mod 3")
    s = sqrt_mod_prime(-3, p)
    # (1 + 2*zeta)**2 = -3
    pi = e_gcd(p, EisensteinInt(s - 1, -2))
    if pi.norm() != p:
        raise AssertionError(f"splitting {p} produced {pi}")
    return pi
