"""
Ordinary algebras, coalgebras, bialgebras and Hopf algebras given by
structure constants, with axiom checkers that report a witness for every
failure.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .tensor import (
    MultiMap, NotInvertible, Space, ShapeError, compose, convolve, flip, identity,
    invert, scalar_map, solve_convolution_inverse, tensor_map, _spaces,
)


class NotHopf(ArithmeticError):
    def __init__(self, message, obstruction=None):
        super().__init__(message)
        self.obstruction = obstruction


# ---------------------------------------------------------------------------
# reports

@dataclass
class AxiomResult:
    name: str
    passed: bool
    witness: dict | None = None
    detail: str = ""

    def to_dict(self):
        d = {"name": self.name, "passed": self.passed}
        if self.witness is not None:
            d["witness"] = self.witness
        if self.detail:
            d["detail"] = self.detail
        return d


@dataclass
class Report:
    subject: str
    results: list = dc_field(default_factory=list)

    @property
    def ok(self):
        return all(r.passed for r in self.results)

    def __bool__(self):
        return self.ok

    def add(self, result):
        self.results.append(result)
        return result

    def extend(self, other, prefix=""):
        for r in other.results:
            self.results.append(AxiomResult(prefix + r.name, r.passed, r.witness, r.detail))
        return self

    def failures(self):
        return [r for r in self.results if not r.passed]

    def get(self, name):
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def to_dict(self):
        return {"subject": self.subject, "ok": self.ok,
                "checks": [r.to_dict() for r in sorted(self.results, key=lambda r: r.name)]}

    def to_text(self):
        lines = [f"{self.subject}: {'PASS' if self.ok else 'FAIL'}"]
        for r in sorted(self.results, key=lambda r: r.name):
            line = f"  [{'pass' if r.passed else 'FAIL'}] {r.name}"
            if r.witness is not None:
                line += f"  witness: {r.witness}"
            if r.detail:
                line += f"  ({r.detail})"
            lines.append(line)
        return "\n".join(lines)

    def __str__(self):
        return self.to_text()


def _labels(spaces, idx):
    return [s.basis_labels[k] for s, k in zip(spaces, idx)]


def compare(name, lhs, rhs):
    """An AxiomResult for lhs == rhs, with the first differing entry as witness."""
    if not lhs.same_shape(rhs):
        return AxiomResult(name, False, detail=f"shape mismatch {lhs!r} vs {rhs!r}")
    key = lhs.first_difference(rhs)
    if key is None:
        return AxiomResult(name, True)
    o, i = key
    wit = {"input": _labels(lhs.domain, i), "output": _labels(lhs.codomain, o),
           "lhs": str(lhs.coeff(o, i)), "rhs": str(rhs.coeff(o, i))}
    return AxiomResult(name, False, witness=wit)


# ---------------------------------------------------------------------------
# structure types

@dataclass
class AlgebraData:
    carrier: Space
    mult: MultiMap
    unit: MultiMap

    @property
    def field(self):
        return self.mult.field

    @property
    def spaces(self):
        return _spaces(self.carrier)


@dataclass
class CoalgebraData:
    carrier: object
    comult: MultiMap
    counit: MultiMap

    @property
    def field(self):
        return self.comult.field

    @property
    def spaces(self):
        return _spaces(self.carrier)


@dataclass
class BialgebraData:
    carrier: Space
    mult: MultiMap
    unit: MultiMap
    comult: MultiMap
    counit: MultiMap

    @property
    def field(self):
        return self.mult.field

    @property
    def spaces(self):
        return _spaces(self.carrier)

    @property
    def algebra(self):
        return AlgebraData(self.carrier, self.mult, self.unit)

    @property
    def coalgebra(self):
        return CoalgebraData(self.carrier, self.comult, self.counit)

    @property
    def dim(self):
        return self.carrier.dim

    def identity(self):
        return identity(self.carrier, self.field)


@dataclass
class HopfData(BialgebraData):
    antipode: MultiMap = None
    antipode_inverse: MultiMap = None

    @classmethod
    def from_bialgebra(cls, B, antipode=None):
        S = antipode if antipode is not None else find_antipode(B)
        return cls(B.carrier, B.mult, B.unit, B.comult, B.counit, S, invert(S))


@dataclass
class QuasiTriangular:
    H: HopfData
    R: MultiMap
    R_inv: MultiMap = None

    def __post_init__(self):
        if self.R_inv is None:
            self.R_inv = element_inverse(self.R, self.H)


@dataclass
class DualQuasiTriangular:
    H: HopfData
    r: MultiMap
    r_inv: MultiMap = None

    def __post_init__(self):
        if self.r_inv is None:
            C = tensor_coalgebra(self.H.coalgebra, self.H.coalgebra)
            self.r_inv = solve_convolution_inverse(self.r, scalar_map(1, self.r.field), C.comult,
                                                   scalar_map(1, self.r.field), C.counit)


# ---------------------------------------------------------------------------
# helpers on tensor powers

def tensor_coalgebra(C1, C2, braiding=None):
    """C1⊗C2 with Δ = (id⊗Ψ⊗id)(Δ⊗Δ); the flip when no braiding is given."""
    s1, s2 = C1.spaces, C2.spaces
    if braiding is None:
        if len(s1) != 1 or len(s2) != 1:
            raise ShapeError("tensor_coalgebra needs single-space factors without a braiding")
        braiding = flip(s1[0], s2[0], C1.field)
    comult = tensor_map(C1.comult, C2.comult).then(braiding, len(s1))
    counit = tensor_map(C1.counit, C2.counit)
    return CoalgebraData(s1 + s2, comult, counit)


def pointwise_product(x, y, mult):
    """Slotwise product in A^{⊗n} of two maps landing in A^{⊗n}.

    x: D -> A^n, y: D' -> A^n; result D⊗D' -> A^n with slot k equal to
    x_k y_k.
    """
    n = len(x.codomain)
    z = tensor_map(x, y)
    perm = []
    for k in range(n):
        perm += [k, n + k]
    z = z.permute_outputs(perm)
    for k in range(n):
        z = z.then(mult, k)
    return z


def power_unit(H, n):
    u = H.unit
    out = u
    for _ in range(n - 1):
        out = tensor_map(out, u)
    return out


def element_inverse(R, H):
    """Inverse of an invertible element of H^{⊗n} (slotwise algebra)."""
    n = len(R.codomain)
    spaces = R.codomain
    one = power_unit(H, n)
    # left multiplication by R as a linear map on H^{⊗n}
    L = pointwise_product(R, identity(spaces, R.field), H.mult)
    Linv = invert(L)
    return compose(Linv, one)


def convolution(f, g, C, A):
    """m_A (f⊗g) Δ_C."""
    if f.domain != C.spaces or g.domain != C.spaces or f.codomain != A.spaces or g.codomain != A.spaces:
        raise ShapeError("convolution: maps must go from the coalgebra to the algebra")
    return convolve(f, g, A.mult, C.comult)


def convolution_unit(C, A):
    return compose(A.unit, C.counit)


def ground_algebra(field):
    return AlgebraData((), scalar_map(1, field), scalar_map(1, field))


# ---------------------------------------------------------------------------
# checkers

def check_algebra(A, name="algebra"):
    rep = Report(name)
    m, u = A.mult, A.unit
    sp = A.spaces
    idA = identity(sp, A.field)
    rep.add(compare("associativity", m.after(m, 0), m.after(m, 1)))
    rep.add(compare("left unit", m.after(u, 0), idA))
    rep.add(compare("right unit", m.after(u, len(sp)), idA))
    return rep


def check_coalgebra(C, name="coalgebra"):
    rep = Report(name)
    d, e = C.comult, C.counit
    sp = C.spaces
    idC = identity(sp, C.field)
    rep.add(compare("coassociativity", d.then(d, 0), d.then(d, len(sp))))
    rep.add(compare("left counit", d.then(e, 0), idC))
    rep.add(compare("right counit", d.then(e, len(sp)), idC))
    return rep


def bialgebra_compatibility(B, braiding=None):
    """The four compatibility identities of Δ, ε with m, 1 under a braiding."""
    V = B.carrier
    if braiding is None:
        braiding = flip(V, V, B.field)
    m, u, d, e = B.mult, B.unit, B.comult, B.counit
    out = []
    lhs = m.then(d, 0)
    rhs = tensor_map(d, d).then(braiding, 1).then(m, 0).then(m, 1)
    out.append(compare("comultiplication is multiplicative", lhs, rhs))
    out.append(compare("comultiplication preserves unit", u.then(d, 0), tensor_map(u, u)))
    out.append(compare("counit is multiplicative", m.then(e, 0), tensor_map(e, e)))
    out.append(compare("counit preserves unit", u.then(e, 0), scalar_map(1, B.field)))
    return out


def check_bialgebra(B, braiding=None, name="bialgebra"):
    rep = Report(name)
    rep.extend(check_algebra(B.algebra))
    rep.extend(check_coalgebra(B.coalgebra))
    for r in bialgebra_compatibility(B, braiding):
        rep.add(r)
    return rep


def antipode_axioms(B, S, S_inv=None):
    out = []
    target = compose(B.unit, B.counit)
    out.append(compare("antipode left", B.comult.then(S, 0).then(B.mult, 0), target))
    out.append(compare("antipode right", B.comult.then(S, 1).then(B.mult, 0), target))
    if S_inv is not None:
        idB = B.identity()
        out.append(compare("antipode inverse (left)", compose(S_inv, S), idB))
        out.append(compare("antipode inverse (right)", compose(S, S_inv), idB))
    return out


def check_hopf(H, braiding=None, name="hopf"):
    rep = check_bialgebra(H, braiding, name)
    if H.antipode is None:
        rep.add(AxiomResult("antipode present", False, detail="no antipode supplied"))
        return rep
    for r in antipode_axioms(H, H.antipode, H.antipode_inverse):
        rep.add(r)
    return rep


def find_antipode(B):
    """The convolution inverse of the identity, or NotHopf."""
    try:
        return solve_convolution_inverse(B.identity(), B.mult, B.comult, B.unit, B.counit)
    except NotInvertible as exc:
        raise NotHopf(f"identity is not convolution invertible ({exc})",
                      obstruction={"side": exc.side, "equation": exc.witness}) from exc


# ---------------------------------------------------------------------------
# derived structures

def relabel(H, name, labels=None):
    """Same structure constants on a renamed carrier."""
    V = Space(name, H.carrier.dim, labels or H.carrier.basis_labels)

    def re(f):
        return f.with_spaces(tuple(V for _ in f.domain), tuple(V for _ in f.codomain))

    if isinstance(H, HopfData):
        return HopfData(V, re(H.mult), re(H.unit), re(H.comult), re(H.counit),
                        re(H.antipode), re(H.antipode_inverse))
    return BialgebraData(V, re(H.mult), re(H.unit), re(H.comult), re(H.counit))


def dual_hopf(B, name=None):
    """B* on the dual basis: (ef)(h) = e(h1)f(h2), (Δf)(h⊗g) = f(hg)."""
    V = B.carrier
    D = Space(name or f"{V.name}*", V.dim, tuple(f"{lab}*" for lab in V.basis_labels))
    fld = B.field

    def dualize(f):
        # transpose, with every slot renamed to D
        ent = {(i, o): c for (o, i), c in f.entries.items()}
        return MultiMap(tuple(D for _ in f.codomain), tuple(D for _ in f.domain), ent, fld, check=False)

    mult = dualize(B.comult)
    comult = dualize(B.mult)
    unit = dualize(B.counit)
    counit = dualize(B.unit)
    if isinstance(B, HopfData) and B.antipode is not None:
        return HopfData(D, mult, unit, comult, counit, dualize(B.antipode), dualize(B.antipode_inverse))
    return BialgebraData(D, mult, unit, comult, counit)


def co_opposite(H, name=None):
    """Same algebra, flipped coproduct, antipode S^{-1} (classical case)."""
    V = H.carrier
    comult = H.comult.then(flip(V, V, H.field), 0)
    if name is not None:
        out = HopfData(V, H.mult, H.unit, comult, H.counit, H.antipode_inverse, H.antipode)
        return relabel(out, name)
    return HopfData(V, H.mult, H.unit, comult, H.counit, H.antipode_inverse, H.antipode)


def opposite_algebra(A):
    V = A.carrier
    return AlgebraData(V, A.mult.after(flip(V, V, A.field), 0), A.unit)


def tensor_algebra_elements_unit(H, n):
    return power_unit(H, n)


# ---------------------------------------------------------------------------
# (dual) quasitriangular structures

def check_quasitriangular(QT, name="quasitriangular"):
    H = QT.H
    R, Ri = QT.R, QT.R_inv
    V = H.carrier
    rep = Report(name)
    m, d = H.mult, H.comult
    u = H.unit
    R13 = R.then(u, 1)
    R23 = R.then(u, 0)
    R12 = tensor_map(R, u)
    rep.add(compare("(Δ⊗id)R = R13 R23", R.then(d, 0), pointwise_product(R13, R23, m)))
    rep.add(compare("(id⊗Δ)R = R13 R12", R.then(d, 1), pointwise_product(R13, R12, m)))
    dop = d.then(flip(V, V, H.field), 0)
    rep.add(compare("R Δ(h) = Δop(h) R", pointwise_product(R, d, m), pointwise_product(dop, R, m)))
    one2 = tensor_map(u, u)
    rep.add(compare("R R^-1 = 1", pointwise_product(R, Ri, m), one2))
    rep.add(compare("R^-1 R = 1", pointwise_product(Ri, R, m), one2))
    return rep


def check_dual_quasitriangular(DQT, name="dual quasitriangular"):
    H = DQT.H
    r, ri = DQT.r, DQT.r_inv
    m, d = H.mult, H.comult
    rep = Report(name)
    rr = tensor_map(r, r)
    # r(ab, c) = r(a, c1) r(b, c2): rr inputs (a, c1, b, c2)
    rep.add(compare("r(ab,c) = r(a,c1) r(b,c2)", r.after(m, 0),
                    rr.permute_inputs((0, 2, 1, 3)).after(d, 2)))
    # r(a, bc) = r(a1, c) r(a2, b): rr inputs (a1, c, a2, b)
    rep.add(compare("r(a,bc) = r(a1,c) r(a2,b)", r.after(m, 1),
                    rr.permute_inputs((0, 2, 3, 1)).after(d, 0)))
    dd = tensor_map(d, d)  # outputs a1 a2 b1 b2
    lhs = dd.permute_outputs((0, 2, 1, 3)).then(r, 0).then(m, 0)
    rhs = dd.permute_outputs((2, 0, 1, 3)).then(r, 2).then(m, 0)
    rep.add(compare("a2 b2 r(a1,b1) = b1 a1 r(a2,b2)", lhs, rhs))
    C = tensor_coalgebra(H.coalgebra, H.coalgebra)
    one = scalar_map(1, r.field)
    target = C.counit
    rep.add(compare("r * r^-1 = ε⊗ε", convolve(r, ri, one, C.comult), target))
    rep.add(compare("r^-1 * r = ε⊗ε", convolve(ri, r, one, C.comult), target))
    return rep
