"""Shared fixtures for the test suite."""

from helical.field import RationalField
from helical.presentation import BasisElement, DgCategoryPresentation

QQ = RationalField()


def directed_with_differential():
    """Directed category with odd degrees and nonzero differentials.

    hom(X,Y) = <a0 deg0, a1 deg1> with d(a0) = a1; hom(Y,Z) = <b deg0>;
    hom(X,Z) = <c0 deg0, c1 deg1> with d(c0) = c1; b∘a0 = c0, b∘a1 = c1.
    """
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
