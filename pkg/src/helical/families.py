"""Built-in presentation families.

beilinson(n): the directed category with objects E_1..E_{n+1} and
hom(E_i, E_j) the degree-(j-i) monomials in n+1 variables, composed by
monomial multiplication; its trivial extension with d = n-1 is the shipped
fixture.  dualnumbers(d) is the one-object trivial extension of the ground
field.  mkronecker(m, d) is the m-arrow two-object directed category with a
caller-declared d, the designated negative example for acyclicity at
(m, d) = (2, 1).
"""

from __future__ import annotations

from itertools import combinations_with_replacement

from .field import RationalField
from .presentation import BasisElement, DgCategoryPresentation, PresentationError, trivial_extension


def _monomials(nvars: int, degree: int):
    """Exponent tuples of total degree `degree`, in a fixed deterministic order."""
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        exp = [0] * nvars
        for v in combo:
            exp[v] += 1
        out.append(tuple(exp))
    return out


def _monomial_name(exp) -> str:
    if all(e == 0 for e in exp):
        return "1"
    parts = []
    for v, e in enumerate(exp):
        if e == 1:
            parts.append(f"x{v}")
        elif e > 1:
            parts.append(f"x{v}^{e}")
    return "*".join(parts)


def point(field=None) -> DgCategoryPresentation:
    field = field or RationalField()
    homs = {(0, 0): [BasisElement("e", 0)]}
    comp = {(0, 0, 0): {(0, 0): {0: field.one}}}
    return DgCategoryPresentation(field, ["pt"], homs, {}, comp, {0: 0})


def beilinson_directed(n: int, field=None) -> DgCategoryPresentation:
    if n < 1:
        raise PresentationError("beilinson requires n >= 1")
    field = field or RationalField()
    ell = n + 1
    objects = [f"E{i + 1}" for i in range(ell)]
    homs = {}
    index = {}
    for i in range(ell):
        for j in range(i, ell):
            mons = _monomials(n + 1, j - i)
            basis = [BasisElement(_monomial_name(e) if j > i else f"e{i + 1}", 0)
                     for e in mons]
            homs[(i, j)] = basis
            index[(i, j)] = {e: pos for pos, e in enumerate(mons)}
    comp = {}
    for i in range(ell):
        for j in range(i, ell):
            for k in range(j, ell):
                mij = _monomials(n + 1, j - i)
                mjk = _monomials(n + 1, k - j)
                table = {}
                for g, eg in enumerate(mjk):
                    for fi, ef in enumerate(mij):
                        prod = tuple(a + b for a, b in zip(eg, ef))
                        table[(g, fi)] = {index[(i, k)][prod]: field.one}
                comp[(i, j, k)] = table
    units = {i: 0 for i in range(ell)}
    return DgCategoryPresentation(field, objects, homs, {}, comp, units)


def kronecker_directed(m: int, field=None) -> DgCategoryPresentation:
    if m < 1:
        raise PresentationError("mkronecker requires at least one arrow")
    field = field or RationalField()
    homs = {
        (0, 0): [BasisElement("e1", 0)],
        (1, 1): [BasisElement("e2", 0)],
        (0, 1): [BasisElement(f"a{t}", 0) for t in range(m)],
    }
    comp = {
        (0, 0, 0): {(0, 0): {0: field.one}},
        (1, 1, 1): {(0, 0): {0: field.one}},
        (0, 0, 1): {(g, 0): {g: field.one} for g in range(m)},
        (0, 1, 1): {(0, g): {g: field.one} for g in range(m)},
    }
    return DgCategoryPresentation(field, ["v1", "v2"], homs, {}, comp, {0: 0, 1: 0})


def generate(family: str, params: list[int], field=None):
    """Build a fixture: returns (presentation, meta)."""
    if family == "beilinson":
        (n,) = params
        if n < 2:
            raise PresentationError(
                "beilinson requires n >= 2: at n = 1 the extension dimension would be 0")
        a = beilinson_directed(n, field)
        d = n - 1
        b = trivial_extension(a, d)
        meta = {"family": "beilinson", "params": [n], "ell": n + 1, "d": d}
        return b, meta
    if family == "dualnumbers":
        (d,) = params
        b = trivial_extension(point(field), d)
        meta = {"family": "dualnumbers", "params": [d], "ell": 1, "d": d}
        return b, meta
    if family == "mkronecker":
        m, d = params
        b = trivial_extension(kronecker_directed(m, field), d)
        meta = {"family": "mkronecker", "params": [m, d], "ell": 2, "d": d}
        return b, meta
    raise PresentationError(f"unknown family {family!r}")
