"""Projective representation layer: groups, multipliers, twisted algebra,
induction, coset signatures, and the two transfer routes."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from epsilon_lab.coeff import coeff_setup
from epsilon_lab.twisted import (
    FiniteGroup,
    Matrix,
    Multiplier,
    TwistedRep,
    char_rep,
    check_ver_identities,
    d1,
    d2,
    delta_char,
    induce,
    is_cocycle,
    run_twisted_suite,
    twisted_algebra_mul,
    twisted_regular,
    verlagerung,
)

C73 = coeff_setup(3, [8])
ELL = C73.ell


def klein():
    c2 = FiniteGroup.cyclic(2)
    return FiniteGroup.product(c2, c2)


def klein_multiplier(coeff):
    """Sign multiplier on the four-group: (-1)**(second coordinate of the
    left factor times first coordinate of the right)."""
    group = klein()
    return group, Multiplier.from_function(
        group, coeff, lambda g, h: -1 if (g % 2) * (h // 2) % 2 else 1
    )


def pauli_rep(coeff):
    group, mu = klein_multiplier(coeff)
    mats = {
        0: Matrix.identity(coeff, 2),
        1: Matrix(coeff, [[1, 0], [0, -1]]),
        2: Matrix(coeff, [[0, 1], [1, 0]]),
        3: Matrix(coeff, [[0, -1], [1, 0]]),
    }
    return group, mu, TwistedRep(group, (0, 1, 2, 3), mu, mats)


def unit_cochain(group, rng):
    return [1] + [rng.randrange(1, ELL) for _ in range(group.n - 1)]


def lam_char(group, sub, lam):
    """Rank-1 representation of the subgroup carried by a global scalar
    function, twisted by its coboundary."""
    return char_rep(group, sub, d1(group, C73, lam), {h: lam[h] for h in sub})


def test_group_constructors():
    c6 = FiniteGroup.cyclic(6)
    assert c6.n == 6 and c6.mul(4, 5) == 3 and c6.inverse(2) == 4
    assert c6.element_order(1) == 6 and c6.element_order(3) == 2

    d4 = FiniteGroup.dihedral(4)
    assert d4.n == 8
    r, s = 1, 4
    assert d4.element_order(r) == 4 and d4.element_order(s) == 2
    assert d4.mul(s, r) == d4.mul(d4.inverse(r), s)

    s3 = FiniteGroup.symmetric(3)
    assert s3.n == 6
    orders = sorted(s3.element_order(g) for g in s3.elements())
    assert orders == [1, 2, 2, 2, 3, 3]

    q8 = FiniteGroup.quaternion()
    assert q8.n == 8
    assert sorted(q8.element_order(g) for g in q8.elements()) == [1, 2, 4, 4, 4, 4, 4, 4]
    i, j, k, m1 = 1, 2, 3, 4
    assert q8.mul(i, j) == k and q8.mul(j, i) == k + 4
    assert q8.mul(i, i) == m1

    v4 = klein()
    assert v4.n == 4 and all(v4.element_order(g) <= 2 for g in v4.elements())


def test_group_axiom_validation():
    with pytest.raises(ValueError):
        FiniteGroup([[0, 1], [1, 1]])
    with pytest.raises(ValueError):
        FiniteGroup([[1, 0], [0, 1]])
    # a latin square that is not associative
    with pytest.raises(ValueError):
        FiniteGroup(
            [
                [0, 1, 2, 3, 4],
                [1, 0, 3, 4, 2],
                [2, 4, 0, 1, 3],
                [3, 2, 4, 0, 1],
                [4, 3, 1, 2, 0],
            ]
        )


def test_subgroup_enumeration():
    s3 = FiniteGroup.symmetric(3)
    subs = s3.subgroups()
    assert len(subs) == 6
    assert (0,) in subs and tuple(range(6)) in subs
    assert sorted(len(s) for s in subs) == [1, 2, 2, 2, 3, 6]

    q8 = FiniteGroup.quaternion()
    sizes = sorted(len(s) for s in q8.subgroups())
    assert sizes == [1, 2, 4, 4, 4, 8]

    c12 = FiniteGroup.cyclic(12)
    assert sorted(len(s) for s in c12.subgroups()) == [1, 2, 3, 4, 6, 12]


def test_multiplier_validation():
    v4 = klein()
    with pytest.raises(ValueError):
        Multiplier.from_function(v4, C73, lambda g, h: 0 if (g, h) == (2, 3) else 1)
    with pytest.raises(ValueError):
        Multiplier.from_function(v4, C73, lambda g, h: 2 if (g, h) == (0, 0) else 1)
    triv = Multiplier.trivial(v4, C73)
    assert is_cocycle(triv)
    assert triv == triv ** 3 and triv * triv == triv


@settings(max_examples=20, deadline=None)
@given(st.lists(st.integers(1, ELL - 1), min_size=5, max_size=5))
def test_coboundary_is_cocycle_property(tail):
    group = FiniteGroup.symmetric(3)
    lam = [1] + tail
    mu = d1(group, C73, lam)
    assert is_cocycle(mu)
    assert all(v.value == 1 for v in d2(mu).values())
    assert all(mu.table[0][z] == 1 and mu.table[z][0] == 1 for z in range(group.n))


def test_d1_rejects_unnormalized():
    group = FiniteGroup.cyclic(3)
    with pytest.raises(ValueError):
        d1(group, C73, [2, 1, 1])
    with pytest.raises(ValueError):
        d1(group, C73, [1, 0, 1])


def test_klein_multiplier_is_cocycle_but_no_coboundary():
    group, mu = klein_multiplier(C73)
    assert is_cocycle(mu)
    # coboundaries on a commutative group are symmetric; this one is not
    assert mu.table[1][2] != mu.table[2][1]
    assert mu.table[1][2] == ELL - 1


def test_pauli_rep_satisfies_twisted_rule():
    group, mu, rep = pauli_rep(C73)
    assert rep.rank == 2 and rep.is_valid()
    det = rep.det_char()
    assert det.mult == mu ** 2 == Multiplier.trivial(group, C73)
    assert [det.value(g).value for g in group.elements()] == [1, ELL - 1, ELL - 1, 1]
    # d1 of a rank-1 twisted representation recovers its multiplier
    lam = [1, 5, 17, 42]
    rank1 = char_rep(group, tuple(group.elements()), d1(group, C73, lam), lam)
    assert d1(group, C73, [rank1.value(g) for g in group.elements()]) == rank1.mult


def test_twisted_algebra_associativity_iff_cocycle():
    group, mu = klein_multiplier(C73)
    one = C73.one()
    for x in group.elements():
        for y in group.elements():
            for z in group.elements():
                a, b, c = {x: one}, {y: one}, {z: one}
                lhs = twisted_algebra_mul(mu, twisted_algebra_mul(mu, a, b), c)
                rhs = twisted_algebra_mul(mu, a, twisted_algebra_mul(mu, b, c))
                assert lhs == rhs
    # identity basis vector is neutral
    for g in group.elements():
        assert twisted_algebra_mul(mu, {0: one}, {g: C73.elem(7)}) == {g: C73.elem(7)}

    broken = [list(row) for row in mu.table]
    broken[3][3] = 2
    bad = Multiplier(group, C73, broken)
    assert not is_cocycle(bad)
    witness = False
    for x in group.elements():
        for y in group.elements():
            for z in group.elements():
                a, b, c = {x: one}, {y: one}, {z: one}
                lhs = twisted_algebra_mul(bad, twisted_algebra_mul(bad, a, b), c)
                rhs = twisted_algebra_mul(bad, a, twisted_algebra_mul(bad, b, c))
                if lhs != rhs:
                    witness = True
    assert witness


def test_twisted_regular_valid_iff_cocycle():
    group, mu = klein_multiplier(C73)
    assert twisted_regular(group, mu).is_valid()
    broken = [list(row) for row in mu.table]
    broken[3][3] = 2
    bad = Multiplier(group, C73, broken)
    assert not twisted_regular(group, bad).is_valid()
    # left multiplication in the algebra is exactly the regular matrix action
    reg = twisted_regular(group, mu)
    for k in group.elements():
        for g in group.elements():
            prod = twisted_algebra_mul(mu, {k: C73.one()}, {g: C73.one()})
            col = [reg.matrix(k).rows[i][g] for i in range(group.n)]
            assert prod == {group.mul(k, g): mu.value(k, g)}
            assert col[group.mul(k, g)] == mu.table[k][g]


def test_induce_whole_group_and_trivial_subgroup():
    group, mu, rep = pauli_rep(C73)
    same = induce(rep)
    assert all(same.matrix(g) == rep.matrix(g) for g in group.elements())

    rng = random.Random(5)
    s3 = FiniteGroup.symmetric(3)
    lam = unit_cochain(s3, rng)
    mu3 = d1(s3, C73, lam)
    unit = char_rep(s3, (0,), mu3, {0: 1})
    ind = induce(unit, check=True)
    reg = twisted_regular(s3, mu3)
    assert all(ind.matrix(g) == reg.matrix(g) for g in s3.elements())


def test_induce_transitivity_traces_and_dets():
    rng = random.Random(11)
    s4 = FiniteGroup.symmetric(4)
    subs = s4.subgroups()
    mid = max((s for s in subs if len(s) == 6), key=sorted)
    inner = next(s for s in subs if len(s) == 2 and set(s) <= set(mid))
    lam = unit_cochain(s4, rng)
    chi = lam_char(s4, inner, lam)

    one_step = induce(chi)
    two_step = induce(induce(chi, ambient=mid))
    assert one_step.rank == two_step.rank == 12
    for g in s4.elements():
        assert one_step.matrix(g).trace() == two_step.matrix(g).trace()
        assert one_step.matrix(g).det() == two_step.matrix(g).det()


def test_delta_char_small_examples():
    c2 = FiniteGroup.cyclic(2)
    assert delta_char(c2, (0,)) == {0: 1, 1: -1}

    s3 = FiniteGroup.symmetric(3)
    a3 = next(s for s in s3.subgroups() if len(s) == 3)
    delta = delta_char(s3, a3)
    for g in s3.elements():
        perm = eval(s3.labels[g])
        parity = 1
        for i in range(len(perm)):
            for j in range(i + 1, len(perm)):
                if perm[i] > perm[j]:
                    parity = -parity
        assert delta[g] == parity


def test_delta_composition_on_s4_chain():
    s4 = FiniteGroup.symmetric(4)
    subs = s4.subgroups()
    mid = max((s for s in subs if len(s) == 6), key=sorted)
    inner = next(s for s in subs if len(s) == 2 and set(s) <= set(mid))
    d_gk = delta_char(s4, inner)
    d_gh = delta_char(s4, mid)
    d_hk = delta_char(s4, inner, ambient=mid)
    moved = verlagerung(
        char_rep(s4, mid, Multiplier.trivial(s4, C73), {h: d_hk[h] % ELL for h in mid})
    )
    index = len(mid) // len(inner)
    for g in s4.elements():
        assert C73.elem(d_gk[g]) == C73.elem(d_gh[g]) ** index * moved[g]


def test_verlagerung_routes_agree():
    rng = random.Random(23)
    for group, size in [
        (FiniteGroup.dihedral(4), 4),
        (FiniteGroup.quaternion(), 2),
        (FiniteGroup.symmetric(3), 2),
    ]:
        sub = next(s for s in group.subgroups() if len(s) == size)
        lam = unit_cochain(group, rng)
        chi = lam_char(group, sub, lam)
        assert verlagerung(chi, route="formula") == verlagerung(chi, route="det")


def test_verlagerung_cyclic_is_power_map():
    rng = random.Random(31)
    group = FiniteGroup.cyclic(12)
    for d in (2, 3, 4, 6):
        sub = group.closure([d])
        index = group.n // len(sub)
        z = C73.elem(rng.randrange(2, ELL)) ** ((ELL - 1) // len(sub))
        values = {h: z ** (h // d) for h in sub}
        chi = char_rep(group, sub, Multiplier.trivial(group, C73), values)
        ver = verlagerung(chi)
        for g in group.elements():
            power = g * index % group.n
            assert ver[g] == values[power]


def test_ver_equals_ver_of_det_rank_two():
    rng = random.Random(47)
    s3 = FiniteGroup.symmetric(3)
    sub = next(s for s in s3.subgroups() if len(s) == 2)
    lam = unit_cochain(s3, rng)
    mu = d1(s3, C73, lam)
    sign = delta_char(s3, (0,), ambient=sub)
    mats = {
        h: Matrix(C73, [[lam[h], 0], [0, lam[h] * sign[h]]]) for h in sub
    }
    rep = TwistedRep(s3, sub, mu, mats)
    assert rep.rank == 2
    ver_direct = verlagerung(rep, route="formula")
    assert ver_direct == verlagerung(rep, route="det")
    assert ver_direct == verlagerung(rep.det_char(), route="formula")


def test_ver_identities_on_named_chains():
    s4 = FiniteGroup.symmetric(4)
    subs = s4.subgroups()
    mid = max((s for s in subs if len(s) == 6), key=sorted)
    inner = next(s for s in subs if len(s) == 2 and set(s) <= set(mid))
    report = check_ver_identities(s4, mid, inner, C73, seed=3)
    assert report["ok"], report
    assert report["indices"] == (4, 3)

    c12 = FiniteGroup.cyclic(12)
    report = check_ver_identities(c12, c12.closure([3]), c12.closure([6]), C73, seed=4)
    assert report["ok"], report

    q8 = FiniteGroup.quaternion()
    center = next(s for s in q8.subgroups() if len(s) == 2)
    four = next(s for s in q8.subgroups() if len(s) == 4 and set(s) >= set(center))
    report = check_ver_identities(q8, four, center, C73, seed=5)
    assert report["ok"], report


def test_representative_independence():
    rng = random.Random(59)
    d6 = FiniteGroup.dihedral(6)
    sub = next(s for s in d6.subgroups() if len(s) == 4)
    lam = unit_cochain(d6, rng)
    chi = lam_char(d6, sub, lam)
    shuffled = list(d6.elements())
    rng.shuffle(shuffled)
    assert verlagerung(chi) == verlagerung(chi, order=shuffled)
    assert delta_char(d6, sub) == delta_char(d6, sub, order=shuffled)
    base = induce(chi)
    other = induce(chi, order=shuffled)
    for g in d6.elements():
        assert base.matrix(g).trace() == other.matrix(g).trace()
        assert base.matrix(g).det() == other.matrix(g).det()


def test_char_rep_rejects_wrong_multiplier_power():
    s3 = FiniteGroup.symmetric(3)
    lam = [1, 3, 9, 27, 31, 62]
    mu = d1(s3, C73, lam)
    chi = lam_char(s3, (0, 1), lam)
    inner = verlagerung(chi, ambient=(0, 1))
    with pytest.raises(ValueError):
        char_rep(s3, (0, 1), mu ** 5, {h: lam[h] for h in (0, 1)})
    # the transferred character really is a character for the squared twist
    stage = char_rep(s3, (0, 1), mu ** 1, inner)
    assert stage.is_valid()


def test_run_twisted_suite_smoke():
    report = run_twisted_suite(C73, seed=7, min_randomized=12)
    assert report["ok"], report["failures"][:4]
    counts = report["counts"]
    assert counts["exhaustive_pairs"] >= 80
    assert counts["exhaustive_chains"] >= 40
    assert counts["det_collapse"] >= 19
    assert counts["randomized"] == 12
