"""An explicit integral basis {1, phi, psi} of L_n.

The depressed cubic h_n(X) = X^3 + aX + b has the root
theta = (3 n2 / m)(rho - n/3); Albert's integral basis of Q(theta) is
rewritten in terms of rho.  :func:`albert_oracle` evaluates Albert's general
formulas directly from (a, b) and serves as an independent cross-check.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import euler_psi, factor, valuation
from .classify import CaseTag, FieldInvariants
from .errors import InternalInconsistency, PreconditionViolated, VerificationError
from .cubic_field import FieldElement, disc_triple, is_integral, minpoly


@dataclass(frozen=True)
class TransformData:
    a: int
    b: int
    m: int
    n1: int
    n2: int

    def theta(self, field) -> FieldElement:
        """theta = (3 n2 rho - n1) / m."""
        return (field.rho * (3 * self.n2) - self.n1) / self.m


def _no_cube_part(a: int, b: int) -> bool:
    """True iff no prime p has p^2 | a and p^3 | b."""
    g = gcd(a, b)
    if g == 0:
        return False
    return not any(a % (p * p) == 0 and b % (p**3) == 0 for p in factor(g))


def transform(inv: FieldInvariants) -> TransformData:
    n1, n2, m, delta = inv.n1, inv.n2, inv.m, inv.delta
    a, ra = divmod(-3 * delta, m * m)
    b, rb = divmod(-(2 * n1 + 3 * n2) * delta, m**3)
    if ra or rb:
        raise InternalInconsistency(f"a or b not integral for ({n1},{n2})")
    if not _no_cube_part(a, b):
        raise InternalInconsistency(f"(a,b)=({a},{b}) has a prime p with p^2|a, p^3|b")
    td = TransformData(a, b, m, n1, n2)
    if minpoly(td.theta(inv.field)) != [1, 0, a, b]:
        raise InternalInconsistency(f"minpoly(theta) != X^3 + {a}X + {b}")
    return td


@dataclass(frozen=True)
class AlbertParams:
    lam: int
    mu: int
    P: int
    Q: int
    delta_prime: int
    eps1: int
    eps2: int
    first_regime: bool

    @property
    def denominator(self) -> int:
        """Denominator of the third Albert basis element."""
        if self.first_regime:
            return 2**self.eps2 * 3 ** (self.mu - 1) * self.P * self.Q
        return 3**self.eps1 * 2**self.eps2 * self.P * self.Q


def albert_invariants(a: int, b: int) -> tuple[int, int, int, int, int]:
    """(lambda, mu, P, Q, Delta') read off the factorization of 4a^3 + 27b^2."""
    disc = 4 * a**3 + 27 * b**2
    if disc == 0:
        raise PreconditionViolated("X^3 + aX + b has a repeated root")
    fa = factor(a) if a else {}
    P = 1
    for p in fa:
        if p > 3 and b % (p * p) == 0:
            P *= p
    Q = 1
    for p, k in factor(disc).items():
        if p > 3 and p not in fa:
            Q *= p ** (k // 2)
    rest = disc // (P * Q) ** 2
    lam = valuation(rest, 2) // 2
    mu = valuation(rest, 3) // 2
    return lam, mu, P, Q, rest // (4**lam * 9**mu)


def albert_params(inv: FieldInvariants, td: TransformData) -> AlbertParams:
    n2, tag, d, e = inv.n2, inv.tag, inv.d, inv.e
    lam = valuation(n2, 2)
    v3 = valuation(n2, 3)
    mu = {CaseTag.T1: v3 + 3, CaseTag.T2: 0, CaseTag.W3I: 3, CaseTag.W3II: 2}[tag]
    P = e // 3 if tag is CaseTag.W3II else e
    Q = n2 // (2**lam * 3**v3)
    dp = -(d * d) * P * P
    closed = (lam, mu, P, Q, dp)
    derived = albert_invariants(td.a, td.b)
    if closed != derived:
        raise InternalInconsistency(
            f"closed-form (lam,mu,P,Q,D')={closed} != factorization {derived} "
            f"for ({inv.n1},{n2})")
    # Albert's 2-adic sub-cases all give eps2 = v2(n2) here
    eps1 = 1 if tag is CaseTag.W3I else 0
    return AlbertParams(lam, mu, P, Q, dp, eps1, lam, tag is CaseTag.T1)


def basis_denominator(inv: FieldInvariants) -> int:
    """u = 9 e c^2 n2 (tame) or 3 e c^2 n2 (wild)."""
    k = 9 if inv.tag.tame else 3
    return k * inv.e * inv.c**2 * inv.n2


def compute_r(inv: FieldInvariants, td: TransformData, ap: AlbertParams) -> int:
    """The shift r of the integral basis, as a residue modulo 3u.

    Adding a multiple of 3u to r changes {1, phi, psi} by a unimodular
    integer transformation, so any representative is valid.
    """
    M = 3 * basis_denominator(inv)
    a, b, lam, mu, Q = td.a, td.b, ap.lam, ap.mu, ap.Q
    psiQ = euler_psi(Q)

    def pw(base, exp):
        return pow(base, exp, M)

    def half_term():
        # (2^(lam-1) - 3b/2); b is even whenever 4 | n2
        t = Fraction(2 ** (lam - 1)) - Fraction(3 * b, 2)
        if t.denominator != 1:
            raise InternalInconsistency("2^(lam-1) - 3b/2 is not an integer")
        return int(t)

    if inv.n1 % 3:
        a3 = a // 3
        psi3 = euler_psi(3 ** (mu - 1))
        if lam == 0:
            r = -b * (pw(2 * 3 ** (mu - 1) * a, psiQ) * 3**mu + Q * pw(2 * a3 * Q, psi3))
        elif lam == 1:
            r = (-b * (pw(2 * 3 ** (mu - 1) * a, psiQ) * 3**mu + Q * pw(2 * a3 * Q, psi3))
                 + 3 ** (mu - 1) * a * Q)
        else:
            r = (-b * (pw(2 ** (lam + 1) * 3 ** (mu - 1) * a, psiQ) * 3**mu
                       + Q * pw(2 ** (lam + 1) * a3 * Q, psi3)) * 2**lam
                 + half_term() * pw(3 ** (mu - 1) * a * Q, euler_psi(2**lam)) * Q * 3 ** (mu - 1))
    else:
        if lam == 0:
            r = -b * (3 * pw(2 * a, psiQ) + Q * Q)
        elif lam == 1:
            r = -b * (3 * pw(2 * a, psiQ) + Q * Q) + 3 * Q * Q * a
        else:
            r = (-3 * 2**lam * b * pw(2 ** (lam + 1) * a, psiQ)
                 + 3 * Q * half_term() * pw(3 * a * Q, euler_psi(2**lam))
                 - 2 ** (2 * lam) * b * Q * Q)
    return r % M


@dataclass(frozen=True)
class IntegralBasis:
    one: FieldElement
    phi: FieldElement
    psi: FieldElement
    u: int
    r: int

    @property
    def elements(self):
        return (self.one, self.phi, self.psi)

    def __iter__(self):
        return iter(self.elements)


def build_basis(inv: FieldInvariants, td: TransformData, r: int) -> IntegralBasis:
    F = inv.field
    n1, n2, m, a = inv.n1, inv.n2, td.m, td.a
    rho = F.rho
    u = basis_denominator(inv)
    if n1 % 3:
        phi = (rho * (3 * n2) - n1 - m * r) / (3 * m)
    else:
        phi = (rho * (3 * n2) - n1) / m
    psi = (rho * rho * (9 * n2 * n2) + rho * (3 * n2 * (m * r - 2 * n1))
           + (m * m * r * r + m * m * a - m * n1 * r + n1 * n1)) / u
    return IntegralBasis(F.one, phi, psi, u, r)


def check_basis(inv: FieldInvariants, ib: IntegralBasis) -> None:
    for name, x in (("phi", ib.phi), ("psi", ib.psi)):
        if not is_integral(x):
            raise VerificationError("integrality", f"{name} is not an algebraic integer")
    disc = disc_triple(*ib.elements)
    if disc != inv.discriminant:
        raise VerificationError("discriminant", f"disc(1,phi,psi)={disc} != {inv.discriminant}")


def basis(inv: FieldInvariants, td: TransformData | None = None,
          ap: AlbertParams | None = None, r: int | None = None) -> IntegralBasis:
    """The verified integral basis {1, phi, psi}."""
    td = td or transform(inv)
    ap = ap or albert_params(inv, td)
    if r is None:
        r = compute_r(inv, td, ap)
    ib = build_basis(inv, td, r)
    if ib.u != td.m**2 * ap.denominator:
        raise InternalInconsistency(f"u={ib.u} != m^2 * {ap.denominator}")
    check_basis(inv, ib)
    return ib


def integral_basis(inv: FieldInvariants) -> IntegralBasis:
    return basis(inv)


# --- Albert's general formulas -------------------------------------------

def _apow(base: int, exp: int, a: int) -> int:
    # a^psi(...) is read as 0 when a = 0
    return 0 if a == 0 else base**exp


def _albert_r(a: int, b: int, lam: int, mu: int, Q: int, dp: int, first: bool):
    """(eps2, r) from Albert's case ladder."""
    psiQ = euler_psi(Q)
    b1 = Fraction(b, 2)
    odd_half = b % 2 == 0 and (b // 2) % 2 == 1 and a % 4 == 1
    if first:
        a3 = a // 3
        psi3 = euler_psi(3 ** (mu - 1))
        if odd_half and dp % 4 == 3:
            eps2 = lam
            r = (-2 * b1 * (_apow(2 ** (lam + 1) * 3**mu * a3, psiQ, a) * 3**mu
                            + _apow(2 ** (lam + 1) * Q * a3, psi3, a) * Q) * 2**lam
                 + (Fraction(2 ** lam, 2) - 3 * b1)
                 * _apow(a3 * Q * 3**mu, euler_psi(2**lam), a) * Q * 3 ** (mu - 1))
        elif odd_half:
            eps2 = lam - 1
            r = (-(2**lam) * b1 * (3**mu * _apow(2**lam * 3**mu * a3, psiQ, a)
                                   + Q * _apow(2**lam * Q * a3, psi3, a))
                 - 3**mu * b1 * Q * _apow(3**mu * Q * a3, euler_psi(2 ** (lam - 1)), a))
        elif b % 4 == 0 and a % 4 != 1:
            eps2 = 1
            r = (-b * (_apow(2 * a3 * 3**mu, psiQ, a) * 3**mu + Q * _apow(2 * a3 * Q, psi3, a))
                 + 3**mu * a3 * Q)
        else:
            eps2 = 0
            r = -b * (_apow(2 * a3 * 3**mu, psiQ, a) * 3**mu + Q * _apow(2 * a3 * Q, psi3, a))
    else:
        if odd_half and dp % 4 == 3:
            eps2 = lam
            r = (-3 * 2**lam * b * _apow(2 ** (lam + 1) * a, psiQ, a)
                 + 3 * Q * (Fraction(2 ** lam, 2) - 3 * b1) * _apow(3 * a * Q, euler_psi(2**lam), a)
                 - 2 ** (2 * lam) * b * Q * Q)
        elif odd_half:
            eps2 = lam - 1
            r = (-3 * b1 * (2**lam * _apow(a * 2**lam, psiQ, a)
                            + Q * _apow(a * Q, euler_psi(2 ** (lam - 1)), a))
                 - b * 2 ** (2 * lam) * Q * Q)
        elif b % 4 == 0 and a % 4 != 1:
            eps2 = 1
            r = -b * (3 * _apow(2 * a, psiQ, a) + Q * Q) + 3 * Q * Q * a
        else:
            eps2 = 0
            r = -b * (3 * _apow(2 * a, psiQ, a) + Q * Q)
    r = Fraction(r)
    if r.denominator != 1:
        raise PreconditionViolated(f"Albert's r is not an integer for (a,b)=({a},{b})")
    return eps2, int(r)


def albert_oracle(a: int, b: int):
    """Albert's integral basis of Q(theta), theta^3 + a theta + b = 0.

    Returns three coordinate triples over {1, theta, theta^2}.  The shift r
    is evaluated as an exact integer, so this is meant for desk-scale input.
    """
    if not _no_cube_part(a, b):
        raise PreconditionViolated(f"a prime p has p^2 | {a} and p^3 | {b}")
    lam, mu, P, Q, dp = albert_invariants(a, b)
    first = a % 9 == 6 and b % 3 != 0 and mu > 2
    eps2, r = _albert_r(a, b, lam, mu, Q, dp, first)
    third = (Fraction(r * r + a), Fraction(r), Fraction(1))
    if first:
        den = 2**eps2 * 3 ** (mu - 1) * P * Q
        second = (Fraction(-r, 3), Fraction(1, 3), Fraction(0))
    else:
        eps1 = int((b % 9 == 0 and a % 3 == 0) or (b % 3 != 0 and (b * b + a - 1) % 9 == 0))
        den = 3**eps1 * 2**eps2 * P * Q
        second = (Fraction(0), Fraction(1), Fraction(0))
    return [(Fraction(1), Fraction(0), Fraction(0)), second, tuple(c / den for c in third)]


def albert_basis_in_field(inv: FieldInvariants, td: TransformData | None = None):
    """Albert's basis mapped into L_n through theta = (3 n2 rho - n1)/m."""
    td = td or transform(inv)
    theta = td.theta(inv.field)
    theta2 = theta * theta
    return [inv.field(c0) + theta * c1 + theta2 * c2
            for c0, c1, c2 in albert_oracle(td.a, td.b)]
