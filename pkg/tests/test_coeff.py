"""Coefficient field selection, character values, symbolic display."""

import cmath

import pytest
from hypothesis import given, settings, strategies as st

from epsilon_lab.coeff import CoeffField, SymbolicSum, coeff_setup, complex_embed, second_ell
from epsilon_lab.gf import fq_build, trace


def test_setup_examples():
    f = coeff_setup(3, [8], 10)
    assert f.ell == 73
    assert f.zeta_p == 8
    f2 = coeff_setup(2, [1], 4)
    assert f2.ell == 5


def test_roots_have_exact_order():
    f = coeff_setup(3, [8], 10)
    assert pow(f.zeta_p, 3, f.ell) == 1 and f.zeta_p != 1
    assert pow(f.zeta_M, 8, f.ell) == 1
    for d in (2, 4):
        assert pow(f.zeta_M, d, f.ell) != 1
    z6 = f.zeta(6)
    assert (z6 ** 6).value == 1 and (z6 ** 2).value != 1 and (z6 ** 3).value != 1


def test_second_ell_advances():
    f = coeff_setup(3, [8], 10)
    g = second_ell(f, 10)
    assert g.ell > f.ell and g.ell % 24 == 1
    assert g.p == 3 and g.M == 8


def test_psi_is_additive_character():
    f = coeff_setup(3, [2], 4)
    vals = [f.psi(t) for t in range(3)]
    assert vals[0].value == 1
    for a in range(3):
        for b in range(3):
            assert f.psi(a) * f.psi(b) == f.psi(a + b)


def test_psi_trace_on_extension():
    c = coeff_setup(3, [8], 4)
    f9 = fq_build(3, 2, 0)
    for k in range(9):
        x = f9.from_index(k)
        assert c.psi_trace(x) == c.psi(trace(x).as_int())


def test_kummer_chi_is_multiplicative():
    c = coeff_setup(3, [8], 4)
    f9 = fq_build(3, 2, 0)
    for e in (1, 3, 5):
        for i in range(1, 9):
            for j in range(1, 9):
                a = f9.gen() ** i
                b = f9.gen() ** j
                assert c.kummer_chi(e, a * b) == c.kummer_chi(e, a) * c.kummer_chi(e, b)


def test_kummer_chi_quadratic():
    c = coeff_setup(3, [8], 4)
    f9 = fq_build(3, 2, 0)
    squares = {(x * x).coeffs for x in f9.elements() if not x.is_zero()}
    for x in f9.elements():
        if x.is_zero():
            continue
        want = 1 if x.coeffs in squares else c.ell - 1
        assert c.kummer_chi(4, x).value == want


def test_kummer_chi_order_not_tracked():
    c = coeff_setup(3, [2], 4)
    f9 = fq_build(3, 2, 0)
    with pytest.raises(ValueError):
        c.kummer_chi(1, f9.gen())


def test_norm_compatibility_of_kummer_chi():
    # kummer_chi(e, norm(x)) == kummer_chi(e * (q_x-1)/(q-1), x) thanks to
    # the norm compatible generator of the residue field
    from epsilon_lab.gf import norm, residue_field

    c = coeff_setup(3, [2, 8], 4)
    base = fq_build(3, 1, 0)
    big, emb = residue_field(base, 2)
    for e in (1, 2):
        for k in range(1, 9):
            x = big.gen() ** k
            lhs = c.kummer_chi(e, norm(x, emb))
            rhs = c.kummer_chi(e * (big.q - 1) // (base.q - 1), x)
            assert lhs == rhs


def test_symbolic_roundtrip():
    c = coeff_setup(3, [8], 4)
    s = SymbolicSum({1: 2, 5: -1}, 24)
    v = s.to_value(c)
    z = cmath.exp(2j * cmath.pi / 24)
    want = 2 * z - z ** 5
    got = s.to_complex()
    assert abs(got - want) < 1e-12
    # registry renders pinned roots of unity
    assert abs(complex_embed(c, c.zeta(24)) - z) < 1e-12
    assert abs(complex_embed(c, c.one()) - 1) < 1e-12


def test_complex_embed_refuses_untracked():
    c = coeff_setup(3, [8], 4)
    # a random residue with no recorded symbolic form
    probe = None
    for v in range(2, c.ell):
        if c.symbolic_for(v) is None:
            probe = c.elem(v)
            break
    assert probe is not None
    with pytest.raises(ValueError, match="no embedding available"):
        complex_embed(c, probe)


@given(st.integers(0, 72), st.integers(0, 72))
@settings(max_examples=50, deadline=None)
def test_elem_ring_ops(a, b):
    c = coeff_setup(3, [8], 10)
    x, y = c.elem(a), c.elem(b)
    assert (x + y).value == (a + b) % 73
    assert (x * y).value == (a * b) % 73
    if b % 73:
        assert ((x / y) * y) == x
