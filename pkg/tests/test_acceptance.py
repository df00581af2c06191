"""Acceptance criteria, one test per criterion.

Run under pytest; the terminal summary (see conftest.py) prints one PASS/FAIL
line per criterion.  ``python tests/test_acceptance.py`` does the same.
"""
import csv
import io
import random
import sys
import time
from dataclasses import dataclass

import pytest

from cyclic_cubic import CaseTag, InvalidParameter, classify, new_field
from cyclic_cubic import cli
from cyclic_cubic.classify import FieldInvariants
from cyclic_cubic.cubic_field import disc_triple, same_lattice, sigma, trace
from cyclic_cubic.fixtures import embedded_text, load_fixtures, verify_rows
from cyclic_cubic.galois_module import (GeneratorResult, admissible_pairs, alpha_for,
                                        corollary_form, generator, verify_structure)
from cyclic_cubic.integral_basis import IntegralBasis, albert_basis_in_field, integral_basis
from cyclic_cubic.sweep import parameters

BOX = 50


@dataclass
class Entry:
    inv: FieldInvariants
    ib: IntegralBasis
    gen: GeneratorResult


@pytest.fixture(scope="module")
def sweep():
    """Every irreducible coprime (n1, n2) with |n1| <= 50, 1 <= n2 <= 50."""
    entries = []
    t0 = time.perf_counter()
    for n1, n2 in parameters(BOX, BOX):
        try:
            inv = classify(new_field(n1, n2))
        except InvalidParameter:
            continue
        entries.append(Entry(inv, integral_basis(inv), None))
    basis_seconds = time.perf_counter() - t0
    for e in entries:
        e.gen = generator(e.inv, e.ib)
    return entries, basis_seconds


# 1 ---------------------------------------------------------------------------

def test_criterion_1_table_reproduction():
    t0 = time.perf_counter()
    results = verify_rows(load_fixtures())
    elapsed = time.perf_counter() - t0
    assert len(results) == 46
    by_param = {(r.row.n1, r.row.n2): r for r in results}
    # anchors
    for key in [(6, 11), (7, 11), (3, 7)]:
        assert by_param[key].ok, by_param[key].diffs
    failures = {r.label: r.diffs for r in results if not r.ok}
    assert not failures, f"{len(failures)} of 46 rows differ: {failures}"
    assert elapsed < 1.0, f"verify took {elapsed:.3f} s"


# 2 ---------------------------------------------------------------------------

def test_criterion_2_discriminant_law(sweep):
    entries, seconds = sweep
    factor = {CaseTag.T1: 1, CaseTag.T2: 1, CaseTag.W3I: 3**4, CaseTag.W3II: 3**2}
    tags = set()
    for e in entries:
        inv = e.inv
        tags.add(inv.tag)
        expected = factor[inv.tag] * inv.d**2 * inv.e**2
        assert disc_triple(*e.ib.elements) == expected, (inv.n1, inv.n2)
    assert tags == set(CaseTag)
    assert len(entries) > 3000
    assert seconds < 300, f"basis sweep took {seconds:.1f} s"


# 3 ---------------------------------------------------------------------------

def _check_structure(inv, alpha, ib):
    D = inv.discriminant
    s1 = sigma(alpha)
    if inv.tag.tame:
        orbit = [alpha, s1, sigma(s1)]
        assert disc_triple(*orbit) == D
        assert same_lattice(ib.elements, orbit)
    else:
        assert trace(alpha) == 0
        assert disc_triple(inv.field.one, alpha, s1) == D
        assert same_lattice(ib.elements, [inv.field.one, alpha, s1])
        beta = alpha + 1
        sb, ssb = sigma(beta), sigma(sigma(beta))
        assert (beta * 2 - sb - ssb) / 3 == alpha
        assert (beta + sb + ssb) / 3 == 1


def test_criterion_3_structure_certificates(sweep):
    entries, _ = sweep
    for e in entries:
        assert e.gen.certificate.ok and e.gen.certificate.index == 1
        _check_structure(e.inv, e.gen.alpha, e.ib)


# 4 ---------------------------------------------------------------------------

def test_criterion_4_oracle_equivalence(sweep):
    entries, _ = sweep
    for e in entries:
        assert same_lattice(e.ib.elements, albert_basis_in_field(e.inv)), (e.inv.n1, e.inv.n2)


# 5 ---------------------------------------------------------------------------

def test_criterion_5_corollary_consistency(sweep):
    entries, _ = sweep
    hits = 0
    for e in entries:
        cf = corollary_form(e.inv)
        if cf is not None:
            hits += 1
            assert cf == e.gen.alpha, (e.inv.n1, e.inv.n2)
    assert hits > 1000


# 6 ---------------------------------------------------------------------------

def test_criterion_6_associate_freedom():
    rng = random.Random(20240601)
    sampled, pairs_checked, nontrivial = 0, 0, 0
    while sampled < 250:
        n1, n2 = rng.randint(-400, 400), rng.randint(1, 400)
        try:
            inv = classify(new_field(n1, n2))
        except InvalidParameter:
            continue
        if (inv.n1, inv.n2) != (n1, n2):
            continue
        sampled += 1
        ib = integral_basis(inv)
        gen = generator(inv, ib)
        pairs = admissible_pairs(inv, gen.a0, gen.a1)
        assert (gen.a0, gen.a1) in pairs
        for a0, a1 in pairs:
            alpha = alpha_for(inv, a0, a1)[0]
            verify_structure(inv, alpha, ib)
            _check_structure(inv, alpha, ib)
            pairs_checked += 1
        nontrivial += len(pairs) > 1
    assert sampled >= 200 and nontrivial > 0 and pairs_checked > sampled


# 7 ---------------------------------------------------------------------------

def _tampered(value: str, col: str) -> str:
    if col == "case":
        tags = ["1", "2", "3i", "3ii"]
        return tags[(tags.index(value) + 1) % 4]
    if col in ("DL", "delta"):
        return value + "*2"
    if "/" in value:
        num, den = value.split("/")
        return f"{int(num) + 1}/{den}"
    return str(int(value) + 1)


def test_criterion_7_fault_injection(tmp_path, capsys):
    text = embedded_text()
    header, *lines = text.splitlines()
    cols = header.split(",")
    missed = []
    for i, line in enumerate(lines, start=1):
        row = dict(zip(cols, line.split(",")))
        for col in cols:
            bad = dict(row)
            bad[col] = _tampered(row[col], col)
            buf = io.StringIO()
            w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
            w.writeheader()
            w.writerow(bad)
            path = tmp_path / "tampered.csv"
            path.write_text(buf.getvalue(), encoding="utf-8")
            code = cli.main(["verify", "--fixtures", str(path)])
            out = capsys.readouterr().out
            if code != 1 or f"FAIL row 1 ({bad['n1']},{bad['n2']})" not in out:
                missed.append((i, col))
    assert not missed, missed
    # the row number is reported when the tampered row sits inside the full table
    lines2 = list(lines)
    i = 40
    row = dict(zip(cols, lines2[i].split(",")))
    row["a1"] = _tampered(row["a1"], "a1")
    lines2[i] = ",".join(row[c] for c in cols)
    path = tmp_path / "full.csv"
    path.write_text("\n".join([header] + lines2) + "\n", encoding="utf-8")
    assert cli.main(["verify", "--fixtures", str(path)]) == 1
    assert f"FAIL row {i + 1} ({row['n1']},{row['n2']})" in capsys.readouterr().out


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
