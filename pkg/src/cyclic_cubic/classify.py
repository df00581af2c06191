"""Field invariants and the tame/wild case analysis."""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .arith import DecDEC, dec_factor, factor, valuation
from .eisenstein import EisensteinInt
from .errors import InternalInconsistency
from .cubic_field import CubicField


class CaseTag(enum.Enum):
    T1 = "1"      # 3 does not divide n1
    T2 = "2"      # n1 = 3t, n2 = -2t (mod 9)
    W3I = "3i"    # n1 = 3t, n2 != -2t (mod 9), t = n2 (mod 3)
    W3II = "3ii"  # n1 = 3t, t != n2 (mod 3)

    @property
    def tame(self) -> bool:
        return self in (CaseTag.T1, CaseTag.T2)

    def __str__(self):
        return self.value


def case_tag(n1: int, n2: int) -> CaseTag:
    if n1 % 3:
        return CaseTag.T1
    t = n1 // 3
    if (n2 + 2 * t) % 9 == 0:
        return CaseTag.T2
    if (t - n2) % 3 == 0:
        return CaseTag.W3I
    return CaseTag.W3II


@dataclass(frozen=True)
class FieldInvariants:
    field: CubicField
    delta: int
    dec: DecDEC
    m: int
    tag: CaseTag
    conductor: int
    discriminant: int
    A_n: EisensteinInt

    @property
    def n1(self):
        return self.field.n1

    @property
    def n2(self):
        return self.field.n2

    @property
    def d(self):
        return self.dec.d

    @property
    def e(self):
        return self.dec.e

    @property
    def c(self):
        return self.dec.c


def _m_from_definition(n1: int, n2: int, delta: int) -> int:
    """Largest m with m^2 | 3*delta and m^3 | (2n1 + 3n2)*delta."""
    f2 = factor(3 * delta)
    f3 = factor((2 * n1 + 3 * n2) * delta)
    m = 1
    for p, k in f2.items():
        m *= p ** min(k // 2, f3.get(p, 0) // 3)
    return m


def classify(field: CubicField) -> FieldInvariants:
    n1, n2 = field.n1, field.n2
    delta = field.delta
    dec = dec_factor(delta)
    d, e, c = dec.d, dec.e, dec.c
    tag = case_tag(n1, n2)
    A_n = EisensteinInt(n1 + 3 * n2, 3 * n2)

    v3 = {q: valuation(q, 3) for q in (d, e, c)}
    expected = {
        CaseTag.T1: (0, 0, 0),
        CaseTag.T2: (0, 0, 1),
        CaseTag.W3I: (0, 0, 1),
        CaseTag.W3II: (0, 1, 0),
    }[tag]
    if (v3[d], v3[e], v3[c]) != expected:
        raise InternalInconsistency(
            f"3-adic shape of (d,e,c)=({d},{e},{c}) contradicts case {tag} for ({n1},{n2})")

    m = c if tag in (CaseTag.T1, CaseTag.W3I) else 3 * c
    if m != _m_from_definition(n1, n2, delta):
        raise InternalInconsistency(f"m={m} disagrees with its definition for ({n1},{n2})")

    conductor = {
        CaseTag.T1: d * e,
        CaseTag.T2: d * e,
        CaseTag.W3I: 9 * d * e,
        CaseTag.W3II: 3 * d * e,
    }[tag]
    if A_n.norm() != delta:
        raise InternalInconsistency("Delta_n != N(A_n)")
    return FieldInvariants(field, delta, dec, m, tag, conductor, conductor**2, A_n)


@dataclass(frozen=True)
class AssociatedOrder:
    order: str
    idempotents: tuple[str, ...]
    d_set: tuple[int, ...]


def associated_order_description(inv: FieldInvariants) -> AssociatedOrder:
    de = inv.d * inv.e
    if inv.tag.tame:
        return AssociatedOrder("Z[G]", (), (de,))
    idem = ("(2-s-s^2)/3", "(1+s+s^2)/3")
    if inv.tag is CaseTag.W3I:
        return AssociatedOrder("Z[G][(2-s-s^2)/3]", idem, (9 * de, 3 * de))
    return AssociatedOrder("Z[G][(2-s-s^2)/3]", idem, (3 * de, de))
