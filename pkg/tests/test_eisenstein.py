import itertools

import pytest
import sympy
from hypothesis import given, strategies as st

from cyclic_cubic.eisenstein import (ONE, ONE_MINUS_ZETA, UNITS, ZETA, EisensteinInt as E,
                                     associates, canonical, e_conj, e_divides, e_divmod,
                                     e_exact_div, e_gcd, e_mul, e_norm, e_pow, split_prime)

coord = st.integers(-30, 30)
elements = st.builds(E, coord, coord)
nonzero = elements.filter(bool)


def as_complex(x):
    w = complex(-0.5, 3 ** 0.5 / 2)
    return x.a + x.b * w


def test_mul_examples():
    assert e_mul((1, -1), (3, 2)) == E(5, 1)
    assert ONE * E(4, -9) == E(4, -9)
    assert ZETA**3 == ONE
    assert ZETA * ZETA == E(-1, -1)


@given(elements, elements)
def test_mul_matches_complex_embedding(x, y):
    assert abs(as_complex(x * y) - as_complex(x) * as_complex(y)) < 1e-6


def test_conj_examples():
    assert e_conj((3, 1)) == E(2, -1)
    assert e_conj((5, 0)) == E(5, 0)
    assert e_conj((40, 33)) == E(7, -33)


@given(elements, elements)
def test_conj_is_ring_involution(x, y):
    assert x.conj().conj() == x
    assert (x * y).conj() == x.conj() * y.conj()
    assert (x + y).conj() == x.conj() + y.conj()
    assert abs(as_complex(x.conj()) - as_complex(x).conjugate()) < 1e-6


def test_norm_examples():
    assert e_norm((3, 2)) == 7
    assert e_norm((7, 3)) == 37
    assert e_norm((39, 33)) == 1323


@given(elements, elements)
def test_norm_multiplicative(x, y):
    assert (x * y).norm() == x.norm() * y.norm()
    assert x.norm() >= 0 and (x.norm() == 0) == (not x)


def test_divmod_examples():
    assert e_divmod((40, 33), (7, 3)) == (E(7, 3), E(0, 0))
    assert e_divmod((5, 1), (1, 0)) == (E(5, 1), E(0, 0))
    q, r = e_divmod((4, 1), (3, 2))
    assert q * E(3, 2) + r == E(4, 1) and r.norm() < 7


def test_divmod_by_zero():
    with pytest.raises(ZeroDivisionError):
        e_divmod((1, 1), (0, 0))


@given(elements, nonzero)
def test_euclidean_contract(x, y):
    q, r = e_divmod(x, y)
    assert q * y + r == x
    assert r.norm() < y.norm()


def test_euclidean_contract_exhaustive_small():
    rng = range(-6, 7)
    for a, b, c, d in itertools.product(rng, rng, rng, rng):
        y = E(c, d)
        if y:
            q, r = e_divmod(E(a, b), y)
            assert q * y + r == E(a, b) and r.norm() < y.norm()


def test_exact_div():
    assert e_exact_div((5, 1), ONE_MINUS_ZETA) == E(3, 2)
    with pytest.raises(ArithmeticError):
        e_exact_div((1, 0), (1, -1))


def test_gcd_examples():
    assert e_gcd(37, (40, 33)) == E(7, 3)
    assert e_gcd((4, -9), 0) == canonical((4, -9))
    assert e_gcd(7, (43, 33)) == E(3, 1)
    with pytest.raises(ValueError):
        e_gcd(0, 0)


@given(elements, elements)
def test_gcd_properties(x, y):
    if not x and not y:
        return
    g = e_gcd(x, y)
    assert e_divides(g, x) and e_divides(g, y)
    # any common divisor (here: a common factor we plant) divides the gcd
    for c in (E(2, 1), E(3, 1), ONE_MINUS_ZETA):
        assert e_divides(c, e_gcd(x * c, y * c))
    assert g == canonical(g)


def test_canonical_examples():
    assert canonical((1, -1)) == E(2, 1)
    assert canonical((1, 0)) == E(1, 0)
    assert canonical((-1, 4)) == E(5, 1)
    with pytest.raises(ValueError):
        canonical((0, 0))


@given(nonzero)
def test_canonical_unique_and_idempotent(x):
    hits = [y for y in associates(x) if y.a > y.b >= 0]
    assert len(hits) == 1
    assert canonical(x) == hits[0] == canonical(canonical(x))


def test_units():
    assert len(set(UNITS)) == 6
    assert all(u.norm() == 1 for u in UNITS)


def _brute_primes(p):
    return {E(a, b) for a in range(p + 1) for b in range(p + 1)
            if a > b >= 0 and a * a - a * b + b * b == p}


@pytest.mark.parametrize("p, options", [(7, {E(3, 1), E(3, 2)}), (13, {E(4, 1), E(4, 3)}),
                                        (37, {E(7, 3), E(7, 4)})])
def test_split_prime_examples(p, options):
    pi = split_prime(p)
    assert pi in options
    assert {pi, canonical(pi.conj())} == options


@pytest.mark.parametrize("p", list(sympy.primerange(7, 1200)))
def test_split_prime_against_brute_force(p):
    if p % 3 != 1:
        with pytest.raises(ValueError):
            split_prime(p)
        return
    pi = split_prime(p)
    assert pi.norm() == p
    assert pi in _brute_primes(p)
    partner = canonical(pi.conj())
    assert canonical(pi * partner) == E(p, 0)


def test_split_prime_large():
    p = 10**12 + 39
    assert p % 3 == 1 and sympy.isprime(p)
    assert split_prime(p).norm() == p


@pytest.mark.parametrize("bad", [3, 5, 9, 21, 1])
def test_split_prime_rejects(bad):
    with pytest.raises(ValueError):
        split_prime(bad)


def test_pow_examples():
    assert e_pow((0, 1), 3) == ONE
    assert e_pow((1, -1), 2) == E(0, -3)
    assert e_pow((3, 1), 0) == ONE
    with pytest.raises(ValueError):
        e_pow((1, 1), -1)


@given(st.integers(-200, 200), st.integers(1, 200))
def test_primes_of_delta_are_0_or_1_mod_3(n1, n2):
    if sympy.gcd(n1, n2) != 1:
        return
    delta = n1 * n1 + 3 * n1 * n2 + 9 * n2 * n2
    assert E(n1 + 3 * n2, 3 * n2).norm() == delta
    for p in sympy.factorint(delta):
        assert p % 3 in (0, 1)
