import pytest

from helical.families import generate, point
from helical.helix import CollectionState, directed_subcategory
from helical.spherical import (
    cotwist_comparison,
    dual_cotwist,
    dual_twist,
    extend_spherical_helix,
    is_acyclic_spherical_helix,
    is_spherical,
    reinterpret_over,
    spherical_twist,
    theorem_check,
    twist_composite,
)
from helical.twisted import EQUIVALENT, generator, hom_cohomology_dims, quasi_equivalence

B2 = generate("beilinson", [2])[0]
A2 = directed_subcategory(B2)
DU2 = generate("dualnumbers", [2])[0]


def test_is_spherical_trivial_extension_members():
    for i in (1, 2, 3):
        cert = is_spherical(generator(B2, i), 1)
        assert cert.passed
        assert cert.self_hom_dims == {0: 1, 1: 1}
    b3 = generate("beilinson", [3])[0]
    for i in (1, 2, 3, 4):
        assert is_spherical(generator(b3, i), 2).passed


def test_exceptional_object_is_not_spherical():
    cert = is_spherical(generator(A2, 1), 1)
    assert not cert.passed
    assert cert.self_hom_dims == {0: 1}


def test_dual_numbers_generator_spherical():
    assert is_spherical(generator(DU2, 1), 2).passed


def test_twist_of_self_is_shift():
    # T_S S = S[1-d]
    for du, d in ((generate("dualnumbers", [1])[0], 1), (DU2, 2)):
        s = generator(du, 1)
        t = spherical_twist(s, s)
        assert t.gens == ((0, 1 - d),)
    s1 = generator(B2, 1)
    t = spherical_twist(s1, s1)
    assert hom_cohomology_dims(t, t) == {0: 1, 1: 1}
    assert t.gens == ((0, 0),)  # d = 1: S[1-d] = S


def test_twist_trivial_on_orthogonal_object():
    # no homs from S_3 to S_1's A-part in degree matching? use A2 exceptional:
    # hom(S_3, S_1) is nonzero over B2, so use a shifted copy over dualnumbers
    s = generator(DU2, 1)
    x = s.shift(5)
    t = spherical_twist(s, x)
    assert hom_cohomology_dims(t, t) == hom_cohomology_dims(x.shift(1 - 2), x.shift(1 - 2))


def test_twist_dual_twist_round_trip():
    s1, s2 = generator(B2, 1), generator(B2, 2)
    x = spherical_twist(s1, s2)
    back = dual_twist(s1, x)
    assert quasi_equivalence(back, s2) == EQUIVALENT
    y = dual_twist(s1, s2)
    forth = spherical_twist(s1, y)
    assert quasi_equivalence(forth, s2) == EQUIVALENT


def test_dual_cotwist_length_one_is_twist():
    c = CollectionState.spherical_foundation(DU2, 2)
    s = generator(DU2, 1)
    dc = dual_cotwist(c, s)
    tw = spherical_twist(s, s)
    assert quasi_equivalence(dc, tw) == EQUIVALENT


def test_dual_cotwist_acyclic_homs_gives_probe_back():
    # over dualnumbers, a far shift has hom(S, P) nonzero; instead take the
    # l=1 exceptional base where hom(S_1, P) can vanish: use B2 with a probe
    # orthogonal to nothing -- so check instead the table identity on probes
    c = CollectionState.spherical_foundation(B2, 1)
    for i in (1, 2, 3):
        p = generator(B2, i)
        dc = dual_cotwist(c, p)
        tw = twist_composite(c.members, p)
        for g in (1, 2, 3):
            gg = generator(B2, g)
            assert hom_cohomology_dims(gg, dc) == hom_cohomology_dims(gg, tw)
            assert hom_cohomology_dims(dc, gg) == hom_cohomology_dims(tw, gg)


def test_cotwist_comparison_b2():
    c = CollectionState.spherical_foundation(B2, 1)
    probes = [generator(B2, i) for i in (1, 2, 3)]
    rep = cotwist_comparison(c, probes)
    assert rep.passed


def test_spherical_helix_length_one_oracle():
    # S_0 = S_1[-d-1] for the length-one helix (empty twist chain)
    w = extend_spherical_helix(DU2, 2, 0, 2)
    assert w.objects[0].gens == ((0, -3),)
    assert w.objects[2].gens == ((0, 3),)


def test_spherical_helix_window_dims_stable():
    w = extend_spherical_helix(B2, 1, -2, 6)
    assert w.hom_dims(1, 2) == {0: 3}
    assert w.hom_dims(2, 3) == {0: 3}
    assert w.hom_dims(1, 3) == {0: 6}


def test_spherical_helix_round_trip_gates():
    w = extend_spherical_helix(B2, 1, 1, 5)
    assert all(g["verdict"] == EQUIVALENT for g in w.gate_results)


def test_spherical_helix_acyclicity_fails_dualnumbers_d1():
    du1 = generate("dualnumbers", [1])[0]
    w = extend_spherical_helix(du1, 1, 0, 2)
    rep = is_acyclic_spherical_helix(w)
    assert not rep.passed


def test_spherical_helix_foundation_pairs_degree_zero():
    w = extend_spherical_helix(B2, 1, 1, 3)
    for i in range(1, 4):
        for j in range(i + 1, 4):
            dims = w.hom_dims(i, j)
            assert set(dims) == {0}


def test_reinterpret_over_host():
    g = generator(A2, 2)
    h = reinterpret_over(B2, g)
    assert h.pres is B2
    assert hom_cohomology_dims(h, h) == {0: 1, 1: 1}


def test_theorem_check_values_and_equality():
    rep = theorem_check(B2, 1, -1, 4)
    assert rep.passed
    w = extend_spherical_helix(B2, 1, 1, 3)
    assert w.hom_dims(1, 2) == {0: 3}
    assert w.hom_dims(1, 1) == {0: 1, 1: 1}
    assert w.hom_dims(2, 1) == {1: 3}


def test_theorem_check_window_requires_foundation():
    with pytest.raises(ValueError):
        extend_spherical_helix(B2, 1, 2, 5)
