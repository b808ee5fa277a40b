"""Directed subcategories, collection mutations, dual collections, helix windows."""

from __future__ import annotations

from .presentation import BasisElement, DgCategoryPresentation, PresentationError
from .report import VerificationReport, dims_witness
from .twisted import (
    EQUIVALENT,
    TwistedComplex,
    cone,
    coevaluation,
    evaluation,
    generator,
    hom_cohomology_dims,
    minimize,
    quasi_equivalence,
)

EXCEPTIONAL = "exceptional"
SPHERICAL = "spherical"


def directed_subcategory(b: DgCategoryPresentation) -> DgCategoryPresentation:
    """Keep forward homs, scalar diagonals, nothing backward.

    hom_A(i,j) = hom_B(i,j) for i < j, k·id for i = j, 0 for i > j;
    differentials and compositions are inherited.
    """
    f = b.field
    n = b.n_objects
    homs = {}
    keep = {}
    for i in range(n):
        for j in range(n):
            if i > j:
                continue
            if i == j:
                u = b.unit_index(i)
                homs[(i, i)] = [BasisElement(b.hom_basis(i, i)[u].name, 0)]
                keep[(i, i)] = {u: 0}
            else:
                basis = b.hom_basis(i, j)
                if basis:
                    homs[(i, j)] = [BasisElement(el.name, el.degree) for el in basis]
                    keep[(i, j)] = {idx: idx for idx in range(len(basis))}
    diff = {}
    for (i, j), table in b.diff.items():
        if (i, j) not in keep or i == j:
            continue
        kept = keep[(i, j)]
        new = {(kept[r], kept[c]): v for (r, c), v in table.items()
               if r in kept and c in kept}
        if new:
            diff[(i, j)] = new
    comp = {}
    for (i, j, k), table in b.comp.items():
        if (i, j) not in keep or (j, k) not in keep or (i, k) not in keep:
            continue
        kij, kjk, kik = keep[(i, j)], keep[(j, k)], keep[(i, k)]
        inv_ik = {v: kk for kk, v in kik.items()}
        new = {}
        for (g, fi), out in table.items():
            if g not in kjk or fi not in kij:
                continue
            newout = {inv_ik[h]: v for h, v in out.items() if h in inv_ik}
            dropped = {h: v for h, v in out.items() if h not in inv_ik}
            if dropped:
                raise PresentationError(
                    f"directed part not closed under composition at ({i},{j},{k})")
            if newout:
                new[(kjk[g], kij[fi])] = newout
        if new:
            comp[(i, j, k)] = new
    units = {i: 0 for i in range(n)}
    return DgCategoryPresentation(f, b.objects, homs, diff, comp, units)


# -- object-level mutations --------------------------------------------------------


def left_mutation_object(x: TwistedComplex, e: TwistedComplex) -> TwistedComplex:
    """L_E X = minimized cone of the evaluation hom(E, X) ⊗ E -> X."""
    _, ev = evaluation(e, x)
    return minimize(cone(ev))


def right_mutation_object(x: TwistedComplex, e: TwistedComplex) -> TwistedComplex:
    """R_E X = minimized cone of the coevaluation X -> hom(X, E)^dual ⊗ E, shifted by -1."""
    _, coev = coevaluation(x, e)
    return minimize(cone(coev).shift(-1))


class CollectionState:
    """An ordered collection of twisted complexes, exceptional or spherical."""

    def __init__(self, base: DgCategoryPresentation, members, d: int, kind: str):
        if kind not in (EXCEPTIONAL, SPHERICAL):
            raise ValueError(f"unknown collection kind {kind!r}")
        self.base = base
        self.members = list(members)
        self.d = d
        self.kind = kind

    @property
    def length(self) -> int:
        return len(self.members)

    @classmethod
    def exceptional_foundation(cls, a: DgCategoryPresentation, d: int):
        return cls(a, [generator(a, i + 1) for i in range(a.n_objects)], d, EXCEPTIONAL)

    @classmethod
    def spherical_foundation(cls, b: DgCategoryPresentation, d: int):
        return cls(b, [generator(b, i + 1) for i in range(b.n_objects)], d, SPHERICAL)

    def verify(self) -> VerificationReport:
        rep = VerificationReport(f"collection-{self.kind}")
        if self.kind == EXCEPTIONAL:
            bad = []
            for i, m in enumerate(self.members):
                dims = hom_cohomology_dims(m, m)
                if dims != {0: 1}:
                    bad.append({"member": i + 1, "end_dims": dims_witness(dims)})
            rep.add("members_exceptional", not bad, {"violations": bad})
            bad = []
            for i in range(self.length):
                for j in range(i):
                    dims = hom_cohomology_dims(self.members[i], self.members[j])
                    if dims:
                        bad.append({"pair": [i + 1, j + 1], "dims": dims_witness(dims)})
            rep.add("backward_homs_acyclic", not bad, {"violations": bad})
        else:
            from .spherical import is_spherical
            bad = []
            for i, m in enumerate(self.members):
                cert = is_spherical(m, self.d)
                if not cert.passed:
                    bad.append({"member": i + 1, "end_dims": dims_witness(cert.self_hom_dims)})
            rep.add("members_spherical", not bad, {"violations": bad})
        return rep

    def mutated(self, i: int, direction: str) -> "CollectionState":
        """Mutate at 1-based slot i, swapping slots i and i+1."""
        if not 1 <= i <= self.length - 1:
            raise ValueError(f"mutation slot {i} out of range 1..{self.length - 1}")
        a, b = self.members[i - 1], self.members[i]
        if self.kind == EXCEPTIONAL:
            if direction == "left":
                new_a, new_b = left_mutation_object(b, a), a
            elif direction == "right":
                new_a, new_b = b, right_mutation_object(a, b)
            else:
                raise ValueError(f"unknown direction {direction!r}")
        else:
            from .spherical import dual_twist, spherical_twist
            if direction == "left":
                new_a, new_b = spherical_twist(a, b), a
            elif direction == "right":
                new_a, new_b = b, dual_twist(b, a)
            else:
                raise ValueError(f"unknown direction {direction!r}")
        members = list(self.members)
        members[i - 1], members[i] = new_a, new_b
        return CollectionState(self.base, members, self.d, self.kind)


def right_dual_collection(c: CollectionState):
    """(F_i) with hom(E_i, F_j) = k when i = j and acyclic otherwise.

    Built as F_j = L_{E_1} ... L_{E_{j-1}} E_j; the defining biorthogonality
    is always verified and is the contract, the recipe is not.
    """
    if c.kind != EXCEPTIONAL:
        raise ValueError("right dual collection requires an exceptional collection")
    duals = []
    for j in range(c.length):
        x = c.members[j]
        for k in range(j - 1, -1, -1):
            x = left_mutation_object(x, c.members[k])
        duals.append(x)
    for i in range(c.length):
        for j in range(c.length):
            dims = hom_cohomology_dims(c.members[i], duals[j])
            want = {0: 1} if i == j else {}
            if dims != want:
                raise PresentationError(
                    f"dual collection verification failed at (E_{i + 1}, F_{j + 1}): {dims}")
    return duals


# -- helix windows ------------------------------------------------------------------


class HelixWindow:
    """Objects E_i for lo <= i <= hi with cached graded hom dimensions."""

    def __init__(self, base: DgCategoryPresentation, d: int, lo: int, hi: int):
        self.base = base
        self.d = d
        self.ell = base.n_objects
        self.lo = lo
        self.hi = hi
        self.objects: dict[int, TwistedComplex] = {}
        self.gate_results: list[dict] = []
        self._dims: dict[tuple[int, int], dict] = {}

    def object(self, i: int) -> TwistedComplex:
        if i not in self.objects:
            raise KeyError(f"helix object E_{i} outside window [{self.lo}, {self.hi}]")
        return self.objects[i]

    def hom_dims(self, i: int, j: int) -> dict:
        key = (i, j)
        if key not in self._dims:
            self._dims[key] = hom_cohomology_dims(self.object(i), self.object(j))
        return self._dims[key]

    def pairs(self):
        for i in range(self.lo, self.hi + 1):
            for j in range(self.lo, self.hi + 1):
                yield i, j


def extend_helix(a: DgCategoryPresentation, d: int, lo: int, hi: int,
                 gate: bool = True) -> HelixWindow:
    """Generate helix objects on [lo, hi] by mutation recurrences.

    Leftward: E_{i} = L_{E_{i+1}} ... L_{E_{i+l-1}} (E_{i+l}) [-d-1].
    Rightward steps invert the recurrence with right mutations and [d+1];
    when gate is set, every rightward step is verified by running the left
    recurrence back and requiring an "equivalent" verdict.
    """
    ell = a.n_objects
    if lo > 1 or hi < ell:
        raise ValueError(f"window [{lo}, {hi}] must contain the foundation [1, {ell}]")
    w = HelixWindow(a, d, lo, hi)
    for i in range(1, ell + 1):
        w.objects[i] = generator(a, i)
    for i in range(0, lo - 1, -1):
        m = w.objects[i + ell]
        for k in range(i + ell - 1, i, -1):
            m = left_mutation_object(m, w.objects[k])
        w.objects[i] = minimize(m.shift(-d - 1))
    for i in range(ell + 1, hi + 1):
        m = w.objects[i - ell].shift(d + 1)
        for k in range(i - ell + 1, i):
            m = right_mutation_object(m, w.objects[k])
        w.objects[i] = m
        if gate:
            back = m
            for k in range(i - 1, i - ell, -1):
                back = left_mutation_object(back, w.objects[k])
            back = minimize(back.shift(-d - 1))
            verdict = quasi_equivalence(back, w.objects[i - ell])
            w.gate_results.append({"index": i, "verdict": verdict})
            if verdict != EQUIVALENT:
                raise PresentationError(
                    f"rightward helix step at E_{i} failed its round-trip gate: {verdict}")
    return w


def serre_duality_check(w: HelixWindow) -> VerificationReport:
    """dim Hom^n(E_i, E_j) = dim Hom^{d+1-n}(E_j, E_{i-l}) on the window."""
    rep = VerificationReport("helix-serre-duality", {"window": [w.lo, w.hi], "d": w.d})
    bad = []
    checked = 0
    for i in range(w.lo + w.ell, w.hi + 1):
        for j in range(w.lo, w.hi + 1):
            left = w.hom_dims(i, j)
            right = w.hom_dims(j, i - w.ell)
            flipped = {w.d + 1 - n: v for n, v in right.items() if v}
            checked += 1
            if {n: v for n, v in left.items() if v} != flipped:
                bad.append({"pair": [i, j], "forward": dims_witness(left),
                            "serre_flip": dims_witness(flipped)})
    rep.add("serre_window_invariant", not bad,
            {"pairs_checked": checked, "violations": bad})
    return rep


def is_acyclic_helix(w: HelixWindow) -> VerificationReport:
    """Pass iff every in-window pair i < j has homs concentrated in degree 0."""
    rep = VerificationReport("acyclic", {"window": [w.lo, w.hi], "d": w.d})
    violations = []
    for i in range(w.lo, w.hi + 1):
        for j in range(i + 1, w.hi + 1):
            dims = w.hom_dims(i, j)
            for n, v in sorted(dims.items()):
                if n != 0 and v:
                    violations.append({"pair": [i, j], "degree": n, "dim": v})
    rep.add("forward_homs_in_degree_zero", not violations, {"violations": violations})
    return rep


def euler_matrix(c: CollectionState):
    """Matrix of Euler characteristics chi(hom(E_i, E_j))."""
    from .twisted import hom_complex
    n = c.length
    return [[hom_complex(c.members[i], c.members[j]).euler() for j in range(n)]
            for i in range(n)]
