import math

import pytest

from helical.families import beilinson_directed, generate, kronecker_directed, point
from helical.field import RationalField
from helical.presentation import (
    BasisElement,
    DgCategoryPresentation,
    PresentationError,
    dualize,
    quotient_check,
    trivial_extension,
)

QQ = RationalField()


def beilinson_dim(n, i, j):
    # independent oracle: dim hom(E_i, E_j) = C(j-i+n, n) for i <= j
    return math.comb(j - i + n, n) if j >= i else 0


def b2():
    return generate("beilinson", [2])[0]


def dims_of(p, i, j):
    out = {}
    for b in p.hom_basis(i, j):
        out[b.degree] = out.get(b.degree, 0) + 1
    return out


def graded_dual_numbers(d=2):
    return trivial_extension(point(), d)


def directed_with_differential():
    # three objects; hom(1,2) = <a0 deg0, a1 deg1> with d(a0) = a1;
    # hom(2,3) = <b deg0>; hom(1,3) = <c0 deg0, c1 deg1> with d(c0) = c1;
    # composition b∘a0 = c0, b∘a1 = c1 (Leibniz-compatible by construction).
    f = QQ
    homs = {
        (0, 0): [BasisElement("e1", 0)],
        (1, 1): [BasisElement("e2", 0)],
        (2, 2): [BasisElement("e3", 0)],
        (0, 1): [BasisElement("a0", 0), BasisElement("a1", 1)],
        (1, 2): [BasisElement("b", 0)],
        (0, 2): [BasisElement("c0", 0), BasisElement("c1", 1)],
    }
    diff = {(0, 1): {(1, 0): f.one}, (0, 2): {(1, 0): f.one}}
    comp = {
        (0, 0, 0): {(0, 0): {0: f.one}},
        (1, 1, 1): {(0, 0): {0: f.one}},
        (2, 2, 2): {(0, 0): {0: f.one}},
        (0, 0, 1): {(g, 0): {g: f.one} for g in range(2)},
        (0, 1, 1): {(0, g): {g: f.one} for g in range(2)},
        (1, 1, 2): {(0, 0): {0: f.one}},
        (1, 2, 2): {(0, 0): {0: f.one}},
        (0, 0, 2): {(g, 0): {g: f.one} for g in range(2)},
        (0, 2, 2): {(0, g): {g: f.one} for g in range(2)},
        (0, 1, 2): {(0, 0): {0: f.one}, (0, 1): {1: f.one}},
    }
    return DgCategoryPresentation(f, ["X", "Y", "Z"], homs, diff, comp,
                                  {0: 0, 1: 0, 2: 0})


def test_beilinson_directed_dims():
    a = beilinson_directed(2)
    for i in range(3):
        for j in range(i, 3):
            assert len(a.hom_basis(i, j)) == beilinson_dim(2, i, j)
    assert a.validate().passed


def test_trivial_extension_b2_validates():
    assert b2().validate().passed


def test_trivial_extension_b3_validates():
    assert generate("beilinson", [3])[0].validate().passed


def test_dualnumbers_validates():
    p = graded_dual_numbers(2)
    assert dims_of(p, 0, 0) == {0: 1, 2: 1}
    assert p.validate().passed
    # eps * eps = 0
    eps = {1: QQ.one}
    assert p.compose_elements(0, 0, 0, eps, eps) == {}


def test_validate_locates_corrupted_composition():
    p = b2()
    key = (0, 1, 2)
    (gf, out) = sorted(p.comp[key].items())[0]
    h = sorted(out)[0]
    p.comp[key][gf][h] = QQ.add(out[h], QQ.one)
    rep = p.validate()
    assert not rep.passed
    failing = {c["name"] for c in rep.checks if c["status"] == "fail"}
    assert failing  # associativity (or unitality) fails with a located witness
    for c in rep.checks:
        if c["status"] == "fail":
            assert c["witness"]


def test_validate_with_differentials_and_odd_degrees():
    a = directed_with_differential()
    assert a.validate().passed
    for d in (1, 2, 3):
        assert trivial_extension(a, d).validate().passed, f"d={d}"


def test_trivial_extension_dims_b2():
    p = b2()
    assert dims_of(p, 0, 0) == {0: 1, 1: 1}
    assert dims_of(p, 2, 0) == {1: 6}
    assert dims_of(p, 0, 1) == {0: 3}


def test_trivial_extension_rejects_bad_input():
    with pytest.raises(PresentationError):
        trivial_extension(point(), 0)
    with pytest.raises(PresentationError):
        trivial_extension(b2(), 1)  # not directed


def test_dualize_dims():
    a = beilinson_directed(2)
    dual = dualize(a)
    # A*(E_3, E_1) is the dual of hom(E_1, E_3): dimension 6 in degree 0
    degrees, _, _ = dual.pieces[(2, 0)]
    assert degrees == [0] * 6
    # diagonal contains the dual of the unit
    assert (0, 0) in dual.pieces
    # double dual: dimension tables come back
    dims = dual.dims()
    for (i, j), table in dims.items():
        orig = dims_of(a, j, i)
        assert table == {-k: v for k, v in orig.items()}


def test_cohomology_table_zero_differential_matches_basis():
    p = b2()
    assert p.cohomology_table()[(0, 0)] == {0: 1, 1: 1}
    table = p.cohomology_table()
    for key, dims in table.items():
        assert dims == dims_of(p, *key)


def test_cohomology_table_with_acyclic_piece():
    a = directed_with_differential()
    table = a.cohomology_table()
    # hom(X,Y) = <a0 -> a1> is acyclic
    assert (0, 1) not in table
    assert (0, 2) not in table
    assert table[(0, 0)] == {0: 1}


def test_quotient_check_passes_on_trivial_extension():
    for args in (("beilinson", [2]), ("dualnumbers", [2])):
        b, meta = generate(*args)
        from helical.helix import directed_subcategory
        a = directed_subcategory(b)
        rep = quotient_check(b, a, meta["d"])
        assert rep.passed


def test_quotient_check_fails_with_wrong_d():
    b, meta = generate("beilinson", [2])
    from helical.helix import directed_subcategory
    a = directed_subcategory(b)
    rep = quotient_check(b, a, meta["d"] + 1)
    assert not rep.passed


def test_quotient_check_witness_mode():
    b, meta = generate("dualnumbers", [2])
    from helical.helix import directed_subcategory
    a = directed_subcategory(b)
    rep = quotient_check(b, a, 2, witness=True)
    assert rep.passed


def test_quotient_check_witness_mode_with_differential():
    a = directed_with_differential()
    b = trivial_extension(a, 1)
    from helical.helix import directed_subcategory
    a2 = directed_subcategory(b)
    rep = quotient_check(b, a2, 1, witness=True)
    assert rep.passed


def test_json_round_trip(tmp_path):
    b, meta = generate("beilinson", [2])
    path = tmp_path / "b2.json"
    b.save(path, meta=meta)
    b2_loaded = DgCategoryPresentation.load(path)
    assert b2_loaded.validate().passed
    assert b2_loaded.to_json_dict() == b.to_json_dict()
    assert b2_loaded._meta == meta


def test_load_rejects_malformed(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    with pytest.raises(PresentationError):
        DgCategoryPresentation.load(path)
    path.write_text('{"field": {"type": "rational"}, "objects": ["A"]}')
    with pytest.raises(PresentationError):
        DgCategoryPresentation.load(path)


def test_mkronecker_validates():
    b, meta = generate("mkronecker", [2, 1])
    assert b.validate().passed
    assert meta["ell"] == 2
