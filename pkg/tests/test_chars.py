"""Local characters: reduction of wild data, tables, conductors."""

import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from epsilon_lab.coeff import coeff_setup
from epsilon_lab.gf import CapExceeded, fq_build
from epsilon_lab.chars import LocalCharacter, OracleCharacter, as_reduce
from epsilon_lab.localfield import Form, LaurentSeries, PrecisionError, dlog, residue

F3 = fq_build(3, 1)
F9 = fq_build(3, 2)
F5 = fq_build(5, 1)
F4 = fq_build(2, 2)

C3 = coeff_setup(3, [2])
C9 = coeff_setup(3, [8])
C5 = coeff_setup(5, [4])
C4 = coeff_setup(2, [3])

COEFF_FOR = {3: C3, 9: C9, 5: C5, 4: C4}


def series(field, v, coeffs, prec=None):
    return LaurentSeries.make(field, v, [field.elem(c) if isinstance(c, int) else c for c in coeffs], prec)


def random_char(rng, field, coeff, max_swan=3):
    c_pi = coeff.elem(rng.randrange(1, coeff.ell))
    tame = rng.randrange(field.q - 1) if field.q > 2 else 0
    n = rng.randrange(0, max_swan + 1)
    coeffs = [field.from_index(rng.randrange(field.q)) for _ in range(n)]
    if n:
        coeffs[0] = field.from_index(rng.randrange(1, field.q))
    h = LaurentSeries.make(field, -n, coeffs, 1) if n else LaurentSeries.zero(field, 1)
    return LocalCharacter(field, coeff, c_pi, tame, h)


def random_nonzero_series(rng, field, width=8):
    v = rng.randrange(-3, 4)
    coeffs = [rng.randrange(field.q) for _ in range(width)]
    coeffs[0] = rng.randrange(1, field.q)
    return series(field, v, [field.from_index(c) for c in coeffs], v + width)


# ---------------------------------------------------------------------------
# additive reduction


def raw_wild_value(coeff, h, u):
    """Independent route: pair an arbitrary (unreduced) datum with a unit."""
    return coeff.psi_trace(residue(Form(h * dlog(u).w)))


def test_reduce_canonical_support():
    rng = random.Random(2)
    for field in (F3, F9, F5, F4):
        for _ in range(20):
            n = rng.randrange(1, 7)
            coeffs = [field.from_index(rng.randrange(field.q)) for _ in range(n)]
            h = LaurentSeries.make(field, -n, coeffs, 1)
            red = as_reduce(h)
            for i, c in enumerate(red.coeffs):
                k = red.v + i
                if not c.is_zero():
                    assert k < 0 and (-k) % field.p != 0
            assert as_reduce(red) == red


def test_reduce_kills_coboundaries():
    rng = random.Random(5)
    for field in (F3, F9, F5, F4):
        p = field.p
        for _ in range(15):
            n = rng.randrange(1, 4)
            coeffs = [field.from_index(rng.randrange(field.q)) for _ in range(n)]
            g = LaurentSeries.make(field, -n, coeffs, p * n + 2)
            delta = g ** p - g
            assert not as_reduce(delta).coeffs


def test_reduce_exhaustive_against_raw_pairing():
    """Every wild datum with poles to order 4 over F_3 evaluates identically
    before and after reduction, on every unit mod pi**5."""
    field = F3
    coeff = C3
    units = []
    for key in OracleCharacter.unit_keys(field, 5):
        units.append(series(field, 0, [field.from_index(i) for i in key], 5))
    for a in itertools.product(range(3), repeat=4):
        h = LaurentSeries.make(field, -4, [field.elem(c) for c in reversed(a)], 1)
        red = as_reduce(h)
        for u in units:
            assert raw_wild_value(coeff, h, u) == raw_wild_value(coeff, red, u)


def test_reduce_hand_example():
    # pi**-3 pairs like pi**-1 over F_3 since 1**(1/3) = 1
    h = series(F3, -3, [1, 0, 0], 1)
    assert as_reduce(h) == series(F3, -1, [1], 1)


def test_reduce_needs_window():
    h = LaurentSeries.make(F3, -3, [1], -1)
    with pytest.raises(PrecisionError):
        as_reduce(h)


# ---------------------------------------------------------------------------
# evaluation


def test_tame_hand_values():
    chi = LocalCharacter(F3, C3, C3.elem(5), 1)
    # 2 generates the units of F_3, the quadratic character sends it to -1
    assert chi.eval_unit_const(2) == -C3.one()
    assert chi(series(F3, 1, [1, 0], 3)) == C3.elem(5)
    assert chi(series(F3, 1, [2, 0], 3)) == -C3.elem(5)


def test_wild_hand_value():
    chi = LocalCharacter(F3, C3, C3.one(), 0, series(F3, -1, [1], 1))
    got = chi(series(F3, 0, [1, 1, 0], 3))
    assert got == C3.psi(1)
    assert chi(series(F3, 0, [1, 2, 0], 3)) == C3.psi(2)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 3), st.integers(0, 2 ** 30))
def test_eval_multiplicative(fi, seed):
    field = (F3, F9, F5, F4)[fi]
    coeff = COEFF_FOR[field.q]
    rng = random.Random(seed)
    chi = random_char(rng, field, coeff)
    x = random_nonzero_series(rng, field)
    y = random_nonzero_series(rng, field)
    assert chi(x * y) == chi(x) * chi(y)


def test_eval_precision_guard():
    chi = LocalCharacter(F5, C5, C5.one(), 0, series(F5, -3, [1, 0, 0], 1))
    assert chi.swan() == 3
    with pytest.raises(PrecisionError):
        chi(series(F5, 0, [1, 1], 2))


def test_character_algebra():
    rng = random.Random(9)
    for field in (F3, F5, F9):
        coeff = COEFF_FOR[field.q]
        a = random_char(rng, field, coeff)
        b = random_char(rng, field, coeff)
        x = random_nonzero_series(rng, field)
        assert (a * b)(x) == a(x) * b(x)
        assert (a * a.inverse())(x) == coeff.one()
        c = coeff.elem(rng.randrange(1, coeff.ell))
        assert a.twist_unramified(c)(x) == a(x) * c ** x.valuation()


def test_conductor_exponents():
    unram = LocalCharacter(F3, C3, C3.elem(5), 0)
    assert unram.artin_a("shriek") == 1 and unram.artin_a("star") == 0
    tame = LocalCharacter(F3, C3, C3.one(), 1)
    assert tame.artin_a("shriek") == 1 and tame.artin_a("star") == 1
    wild = LocalCharacter(F3, C3, C3.one(), 1, series(F3, -2, [1, 0], 1))
    assert wild.swan() == 2
    assert wild.artin_a("shriek") == 3 and wild.artin_a("star") == 3
    w = Form(series(F3, -2, [1, 1, 1], 2))
    assert wild.a_with_form("shriek", w) == 1
    with pytest.raises(ValueError):
        unram.artin_a("middle")


# ---------------------------------------------------------------------------
# oracle tables


def test_oracle_matches_character():
    rng = random.Random(17)
    for field, nu in ((F3, 4), (F5, 3), (F4, 3), (F9, 2)):
        coeff = COEFF_FOR[field.q]
        chi = random_char(rng, field, coeff, max_swan=nu - 1)
        oracle = OracleCharacter.from_character(chi, nu)
        for _ in range(12):
            x = random_nonzero_series(rng, field, width=nu + 1)
            assert oracle(x) == chi(x)


def test_oracle_swan_by_definition():
    rng = random.Random(29)
    for _ in range(10):
        chi = random_char(rng, F3, C3, max_swan=3)
        oracle = OracleCharacter.from_character(chi, max(chi.swan() + 1, 2))
        assert oracle.swan_by_definition() == chi.swan()


def test_oracle_guards():
    chi = LocalCharacter(F3, C3, C3.one(), 1, series(F3, -2, [1, 0], 1))
    with pytest.raises(ValueError):
        OracleCharacter.from_character(chi, 2)
    big = LocalCharacter(F9, C9, C9.one(), 1)
    with pytest.raises(CapExceeded):
        OracleCharacter.from_character(big, 12)


def test_oracle_catches_broken_table():
    chi = LocalCharacter(F3, C3, C3.one(), 1)
    oracle = OracleCharacter.from_character(chi, 2)
    bad = dict(oracle.table)
    key = next(iter(bad))
    bad[key] = bad[key] * C3.elem(C3.ell - 1) * C3.elem(0) + C3.elem(2)
    with pytest.raises(ValueError):
        OracleCharacter(F3, C3, 2, chi.c_pi, bad)


# ---------------------------------------------------------------------------
# uniformizer independence


def test_transport_preserves_values():
    rng = random.Random(41)
    for field in (F3, F5):
        coeff = COEFF_FOR[field.q]
        for _ in range(8):
            chi = random_char(rng, field, coeff, max_swan=3)
            width = 10
            ucoeffs = [rng.randrange(1, field.q)] + [
                rng.randrange(field.q) for _ in range(width - 1)
            ]
            s = series(field, 1, [field.from_index(c) for c in ucoeffs], 1 + width)
            moved = chi.transport(s)
            assert moved.swan() == chi.swan()
            assert moved.tame_e == chi.tame_e
            from epsilon_lab.localfield import reversion

            t = reversion(s)
            for _ in range(4):
                x = random_nonzero_series(rng, field, width=7)
                assert chi(x) == moved(x.compose(t))


def test_json_roundtrip():
    rng = random.Random(53)
    for field in (F3, F9):
        coeff = COEFF_FOR[field.q]
        chi = random_char(rng, field, coeff)
        back = LocalCharacter.from_json(coeff, chi.to_json())
        assert back == chi
