"""Integer and rational primitives.

Rationals are :class:`fractions.Fraction` throughout; they are always stored
reduced with a positive denominator, so equality is structural.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict

Rational = Fraction
Factorization = Dict[int, int]

TRIAL_LIMIT = 1 << 20
# Deterministic for n < 3.3e24 (first 13 primes as Miller-Rabin bases).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent(n: int, rng: random.Random) -> int:
    """Return a non-trivial factor of the composite odd n (Pollard rho, Brent)."""
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _split(n: int, out: Factorization, rng: random.Random) -> None:
    if n == 1:
        return
    if is_probable_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _brent(n, rng)
    _split(d, out, rng)
    _split(n // d, out, rng)


def factor(N: int) -> Factorization:
    """Prime factorization of |N| as ``{p: e}`` with p ascending.

    Trial division up to 2**20, then Pollard-Brent on the cofactor.
    """
    if N == 0:
        raise ValueError("cannot factor 0")
    n = abs(N)
    out: Factorization = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    p, step = 5, 2
    while p <= TRIAL_LIMIT and p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out[p] = e
        p += step
        step = 6 - step
    if n > 1:
        if p * p > n:
            out[n] = out.get(n, 0) + 1
        else:
            # seeded so factor() stays deterministic
            _split(n, out, random.Random(n))
    return dict(sorted(out.items()))


def valuation(x, p: int) -> int:
    """p-adic valuation of a nonzero rational."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("valuation of 0 is undefined")

    def v(k: int) -> int:
        e = 0
        while k % p == 0:
            k //= p
            e += 1
        return e

    return v(abs(x.numerator)) - v(x.denominator)


def legendre3(a: int) -> int:
    """Legendre symbol (a/3)."""
    return (0, 1, -1)[a % 3]


def euler_psi(x: int) -> int:
    """Euler's totient of x, minus one."""
    if x < 1:
        raise ValueError("euler_psi needs x >= 1")
    phi = x
    for p in factor(x):
        phi = phi // p * (p - 1)
    return phi - 1


def mod_pow(base: int, exp: int, modulus: int) -> int:
    if modulus < 1 or exp < 0:
        raise ValueError("mod_pow needs modulus >= 1 and exp >= 0")
    return pow(base, exp, modulus)


def sqrt_mod_prime(a: int, p: int) -> int:
    """A square root of a modulo the odd prime p (Tonelli-Shanks)."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        raise ValueError(f"{a} is not a square mod {p}")
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 1, t * t % p
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def divisors(n: int) -> list[int]:
    """Positive divisors of |n|, ascending."""
    divs = [1]
    for p, e in factor(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def is_squarefree(n: int) -> bool:
    return all(e == 1 for e in factor(n).values())


@dataclass(frozen=True)
class DecDEC:
    """Delta = d * e**2 * c**3 with d, e square-free and coprime."""

    d: int
    e: int
    c: int

    def value(self) -> int:
        return self.d * self.e**2 * self.c**3


def dec_factor(delta: int) -> DecDEC:
    if delta < 1:
        raise ValueError("dec_factor needs a positive integer")
    d = e = c = 1
    for p, k in factor(delta).items():
        q, s = divmod(k, 3)
        c *= p**q
        if s == 1:
            d *= p
        elif s == 2:
            e *= p
    return DecDEC(d, e, c)


def format_factored(n: int) -> str:
    """Render a positive integer as ``3^4*7^2`` (primes ascending)."""
    if n == 1:
        return "1"
    return "*".join(str(p) if e == 1 else f"{p}^{e}" for p, e in factor(n).items())


def parse_factored(s: str) -> int:
    out = 1
    for part in s.replace(" ", "").split("*"):
        base, _, exp = part.partition("^")
        out *= int(base) ** (int(exp) if exp else 1)
    return out


def format_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
