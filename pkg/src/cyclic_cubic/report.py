"""The full pipeline for one parameter, rendered as plain JSON-ready data."""
from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from .arith import format_factored, format_rational
from .classify import FieldInvariants, associated_order_description, classify
from .cubic_field import FieldElement, new_field
from .galois_module import GeneratorResult, generator
from .integral_basis import IntegralBasis, integral_basis

TABLE_COLUMNS = ["n1", "n2", "DL", "case", "delta", "a0", "a1",
                 "alpha_c", "alpha_rho", "alpha_rhoprime"]
CHECK_NAMES = ["integrality", "trace", "discriminant", "index", "idempotent"]


@dataclass
class Pipeline:
    inv: FieldInvariants
    ib: IntegralBasis
    gen: GeneratorResult


def run(n1: int, n2: int) -> Pipeline:
    inv = classify(new_field(n1, n2))
    ib = integral_basis(inv)
    return Pipeline(inv, ib, generator(inv, ib))


def _coords(xs) -> list[str]:
    return [format_rational(x) for x in xs]


def element_data(x: FieldElement) -> dict:
    return {"rho_basis": _coords(x.rho_basis()), "power_basis": _coords(x.coords)}


def table_row(p: Pipeline) -> dict:
    """The columns of the published tables, all as strings."""
    inv, gen = p.inv, p.gen
    c, c_rho, c_rhop = _coords(gen.alpha.rho_basis())
    return {
        "n1": str(inv.n1), "n2": str(inv.n2),
        "DL": format_factored(inv.discriminant),
        "case": str(inv.tag),
        "delta": format_factored(inv.delta),
        "a0": str(gen.a0), "a1": str(gen.a1),
        "alpha_c": c, "alpha_rho": c_rho, "alpha_rhoprime": c_rhop,
    }


def build_report(n1: int, n2: int, timing: bool = False) -> dict:
    t0 = time.perf_counter()
    p = run(n1, n2)
    inv, ib, gen = p.inv, p.ib, p.gen
    order = associated_order_description(inv)
    report = {
        "input": {"n1": inv.n1, "n2": inv.n2, "n": format_rational(Fraction(inv.n1, inv.n2))},
        "invariants": {
            "delta": str(inv.delta),
            "delta_factored": format_factored(inv.delta),
            "d": str(inv.d), "e": str(inv.e), "c": str(inv.c), "m": str(inv.m),
            "case": str(inv.tag),
            "tame": inv.tag.tame,
            "conductor": str(inv.conductor),
            "discriminant": str(inv.discriminant),
            "discriminant_factored": format_factored(inv.discriminant),
            "A_n": [str(inv.A_n.a), str(inv.A_n.b)],
            "associated_order": order.order,
        },
        "integral_basis": {
            "r": str(ib.r), "u": str(ib.u),
            "phi": element_data(ib.phi),
            "psi": element_data(ib.psi),
        },
        "generator": {
            "a0": gen.a0, "a1": gen.a1,
            "epsilon": gen.epsilon,
            "alpha": element_data(gen.alpha),
            "structure": str(gen.structure),
        },
        "certificate": {
            "checks": dict(gen.certificate.checks),
            "index": format_rational(gen.certificate.index),
            "ok": gen.certificate.ok,
        },
    }
    if timing:
        report["timing"] = {"seconds": round(time.perf_counter() - t0, 6)}
    return report


def flatten(report: dict) -> dict:
    """One CSV row: nested keys joined with dots, lists with indices."""
    out = {}

    def walk(prefix, v):
        if isinstance(v, dict):
            for k, x in v.items():
                walk(f"{prefix}.{k}" if prefix else k, x)
        elif isinstance(v, list):
            for i, x in enumerate(v):
                walk(f"{prefix}.{i}", x)
        else:
            out[prefix] = "" if v is None else str(v)

    walk("", report)
    return out


def render_text(report: dict) -> str:
    inp, inv, ib, gen, cert = (report[k] for k in
                               ("input", "invariants", "integral_basis", "generator", "certificate"))
    c, cr, crp = gen["alpha"]["rho_basis"]
    lines = [
        f"n = {inp['n']}  (n1={inp['n1']}, n2={inp['n2']})",
        f"Delta_n = {inv['delta_factored']}  d={inv['d']} e={inv['e']} c={inv['c']} m={inv['m']}",
        f"case {inv['case']} ({'tame' if inv['tame'] else 'wild'}), conductor {inv['conductor']},"
        f" D_L = {inv['discriminant_factored']}",
        f"A_n = {inv['A_n'][0]} + {inv['A_n'][1]}*zeta",
        f"integral basis: 1, phi = {_poly(ib['phi'])}, psi = {_poly(ib['psi'])}  (r={ib['r']}, u={ib['u']})",
        f"(a0, a1) = ({gen['a0']}, {gen['a1']})"
        + (f", epsilon = {gen['epsilon']}" if gen["epsilon"] is not None else ""),
        f"alpha = {c} + ({cr})*rho + ({crp})*rho'",
        f"structure {gen['structure']}; associated order {inv['associated_order']}",
        "certificate: " + ", ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in cert["checks"].items())
        + f"; lattice index {cert['index']}",
    ]
    if "timing" in report:
        lines.append(f"time: {report['timing']['seconds']:.4f} s")
    return "\n".join(lines)


def _poly(el: dict) -> str:
    c0, c1, c2 = el["power_basis"]
    return f"{c0} + ({c1})*rho + ({c2})*rho^2"
