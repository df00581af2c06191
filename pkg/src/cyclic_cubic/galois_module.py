"""The generator alpha of O_L over Z[G] (tame) or of O_L = Z[G]alpha + Z (wild)."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .arith import factor, is_squarefree, legendre3
from .classify import CaseTag, FieldInvariants
from .cubic_field import (FieldElement, disc_triple, in_lattice, is_integral, lattice_index,
                          sigma, trace)
from .eisenstein import (ONE, ONE_MINUS_ZETA, EisensteinInt, associates, canonical,
                         e_divides, e_pow, split_prime)
from .errors import CaseError, InternalInconsistency, VerificationError
from .integral_basis import IntegralBasis, integral_basis


class Structure(enum.Enum):
    TAME_FREE_RANK1 = "TAME_FREE_RANK1"  # O = Z[G] alpha
    WILD_SUM = "WILD_SUM"                # O = Z[G] alpha + Z = A (alpha + 1)

    def __str__(self):
        return self.value


@dataclass
class Certificate:
    checks: dict = field(default_factory=dict)
    index: Optional[Fraction] = None

    @property
    def ok(self) -> bool:
        return bool(self.checks) and all(self.checks.values())

    def record(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks[name] = bool(passed)
        if not passed:
            raise VerificationError(name, detail)


@dataclass(frozen=True)
class GeneratorResult:
    a0: int
    a1: int
    epsilon: Optional[int]
    alpha: FieldElement
    structure: Structure
    certificate: Certificate


def _prime_product_target(inv: FieldInvariants) -> int:
    """ec for case (1), ec/3 otherwise; the norm of the product of primes pi_i."""
    ec = inv.e * inv.c
    return ec if inv.tag is CaseTag.T1 else ec // 3


def find_a0a1(inv: FieldInvariants) -> tuple[int, int]:
    """(a0, a1) with a0 + a1*zeta dividing A_n and of the required norm.

    Each prime p | S splits as pi * pi'; exactly one of the two divides A_n.
    The product is put in canonical form before the (1 - zeta) factor of
    cases (2) and (3)(i) is applied.
    """
    A = inv.A_n
    prod = ONE
    for p, k in factor(_prime_product_target(inv)).items():
        pi = split_prime(p)
        for cand in (pi, canonical(pi.conj())):
            if e_divides(cand, A):
                break
        else:
            raise InternalInconsistency(f"no prime above {p} divides A_n = {A}")
        prod = prod * e_pow(cand, k)
    g = canonical(prod)
    if inv.tag in (CaseTag.T2, CaseTag.W3I):
        g = ONE_MINUS_ZETA * g
    if not e_divides(g, A):
        raise InternalInconsistency(f"{g} does not divide A_n = {A}")
    return g.a, g.b


def norm_target(inv: FieldInvariants) -> int:
    """The value of a0^2 - a0 a1 + a1^2 required by the case."""
    ec = inv.e * inv.c
    return ec // 3 if inv.tag is CaseTag.W3II else ec


def is_admissible(inv: FieldInvariants, a0: int, a1: int) -> bool:
    g = EisensteinInt(a0, a1)
    return g.norm() == norm_target(inv) and e_divides(g, inv.A_n)


def epsilon(inv: FieldInvariants, a0: int, a1: int) -> int:
    if not inv.tag.tame:
        raise CaseError("the sign epsilon is only defined for tame cases")
    if inv.tag is CaseTag.T1:
        eps = legendre3(inv.n1 * (a0 + a1))
    else:
        eps = legendre3(inv.n2 * a0)
    ec2 = inv.e * inv.c**2
    if eps == 0 or (eps * ec2 - inv.n1 * (a0 + a1)) % 3:
        raise InternalInconsistency(
            f"epsilon={eps}: 3 does not divide eps*ec^2 - n1(a0+a1) for ({inv.n1},{inv.n2})")
    return eps


def alpha_for(inv: FieldInvariants, a0: int, a1: int) -> tuple[FieldElement, Optional[int]]:
    """The generator built from a given admissible pair, with its sign if tame."""
    F = inv.field
    n1, n2 = inv.n1, inv.n2
    ec2 = inv.e * inv.c**2
    lin = F.rho * a0 + F.rho_prime * a1
    if inv.tag.tame:
        eps = epsilon(inv, a0, a1)
        const = Fraction(eps * ec2 - n1 * (a0 + a1), 3)
        return (lin * n2 + const) / ec2, eps
    return (lin * (3 * n2) - n1 * (a0 + a1)) / ec2, None


def verify_structure(inv: FieldInvariants, alpha: FieldElement,
                     ib: IntegralBasis) -> Certificate:
    """Check the module structure claimed for alpha; raises on the first failure."""
    cert = Certificate()
    D = inv.discriminant
    if inv.tag.tame:
        orbit = (alpha, sigma(alpha), sigma(sigma(alpha)))
        cert.record("integrality", all(is_integral(x) for x in orbit),
                    "alpha or a conjugate is not integral")
        disc = disc_triple(*orbit)
        cert.record("discriminant", disc == D, f"disc(alpha orbit)={disc} != {D}")
        vectors = orbit
    else:
        sa = sigma(alpha)
        cert.record("integrality", is_integral(alpha), "alpha is not integral")
        tr = trace(alpha)
        cert.record("trace", tr == 0, f"Tr(alpha)={tr}")
        disc = disc_triple(inv.field.one, alpha, sa)
        cert.record("discriminant", disc == D, f"disc(1,alpha,sigma alpha)={disc} != {D}")
        vectors = (inv.field.one, alpha, sa)
    idx = lattice_index(ib.elements, vectors)
    cert.index = idx
    cert.record("index", idx == 1 and all(in_lattice(ib.elements, v) for v in vectors),
                f"lattice index {idx}")
    if not inv.tag.tame:
        beta = alpha + 1
        sb, ssb = sigma(beta), sigma(sigma(beta))
        e_tilde = (beta * 2 - sb - ssb) / 3
        e_one = (beta + sb + ssb) / 3
        cert.record("idempotent", e_tilde == alpha and e_one == 1,
                    "idempotents do not split alpha + 1 into alpha and 1")
    return cert


def generator(inv: FieldInvariants, ib: IntegralBasis | None = None) -> GeneratorResult:
    a0, a1 = find_a0a1(inv)
    if not is_admissible(inv, a0, a1):
        raise InternalInconsistency(f"({a0},{a1}) fails the norm equation")
    alpha, eps = alpha_for(inv, a0, a1)
    ib = ib or integral_basis(inv)
    cert = verify_structure(inv, alpha, ib)
    structure = Structure.TAME_FREE_RANK1 if inv.tag.tame else Structure.WILD_SUM
    return GeneratorResult(a0, a1, eps, alpha, structure, cert)


def admissible_pairs(inv: FieldInvariants, a0: int, a1: int) -> list[tuple[int, int]]:
    """Unit multiples of a0 + a1*zeta that still meet the norm and divisibility conditions."""
    return [(g.a, g.b) for g in associates(EisensteinInt(a0, a1))
            if is_admissible(inv, g.a, g.b)]


def corollary_form(inv: FieldInvariants) -> Optional[FieldElement]:
    """Closed-form alpha when Delta_n has one of the special shapes, else None."""
    F = inv.field
    n1, n2, delta = inv.n1, inv.n2, inv.delta
    rho, rho_p = F.rho, F.rho_prime
    if is_squarefree(delta):
        return rho * n2 + Fraction(legendre3(n1) - n1, 3)
    if delta % 27 == 0 and is_squarefree(delta // 27) and (delta // 27) % 3:
        if inv.tag is CaseTag.T2:
            # the sign is (n2/3), as for the general tame generator with (a0, a1) = (1, -1)
            return ((rho - rho_p) * n2 + 3 * legendre3(n2)) / 9
        if inv.tag is CaseTag.W3I:
            return (rho - rho_p) * Fraction(n2, 3)
    if delta % 9 == 0 and (delta // 9) % 3 and is_squarefree(delta // 9):
        return (rho * (3 * n2) - n1) / 3
    return None
