"""Cross-module property checks over a range of parameters."""
from __future__ import annotations

from math import gcd
from typing import Iterator

from .classify import CaseTag, classify
from .cubic_field import disc_triple, new_field, same_lattice
from .eisenstein import EisensteinInt, e_divides
from .errors import InternalInconsistency, InvalidParameter
from .galois_module import admissible_pairs, alpha_for, corollary_form, generator, verify_structure
from .integral_basis import albert_basis_in_field, integral_basis

_D_FACTOR = {CaseTag.T1: 1, CaseTag.T2: 1, CaseTag.W3I: 3**4, CaseTag.W3II: 3**2}


def parameters(max_n1: int, max_n2: int) -> Iterator[tuple[int, int]]:
    """Coprime pairs with |n1| <= max_n1 and 1 <= n2 <= max_n2, ordered by (n2, n1)."""
    for n2 in range(1, max_n2 + 1):
        for n1 in range(-max_n1, max_n1 + 1):
            if gcd(n1, n2) == 1:
                yield n1, n2


def expected_discriminant(inv) -> int:
    """d^2 e^2 times 1, 3^4 or 3^2 according to the case."""
    return _D_FACTOR[inv.tag] * (inv.d * inv.e) ** 2


def _require(cond: bool, what: str) -> None:
    if not cond:
        raise InternalInconsistency(what)


def check_parameter(n1: int, n2: int) -> str | None:
    """Run every property for one parameter.

    Returns the case tag, or None when f_n is reducible.  Any failure raises.
    """
    try:
        field = new_field(n1, n2)
    except InvalidParameter:
        return None
    inv = classify(field)
    ib = integral_basis(inv)
    D = expected_discriminant(inv)
    _require(inv.discriminant == D, f"conductor^2 {inv.discriminant} != {D}")
    _require(disc_triple(*ib.elements) == D, "disc(1, phi, psi) differs from the case formula")
    _require(same_lattice(ib.elements, albert_basis_in_field(inv)),
             "Albert's basis spans a different lattice")
    gen = generator(inv, ib)
    _require(gen.certificate.ok, "generator certificate incomplete")
    g = EisensteinInt(gen.a0, gen.a1)
    _require(e_divides(g, inv.A_n), "a0 + a1 zeta does not divide A_n")
    cf = corollary_form(inv)
    _require(cf is None or cf == gen.alpha, "corollary closed form differs from the generator")
    for a0, a1 in admissible_pairs(inv, gen.a0, gen.a1):
        verify_structure(inv, alpha_for(inv, a0, a1)[0], ib)
    return str(inv.tag)
