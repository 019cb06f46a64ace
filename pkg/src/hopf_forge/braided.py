"""
Modules over a quasitriangular Hopf algebra (H, R) as a braided category.

Objects are `HModule`s: a list of based spaces with an H-action on their
tensor product.  Braidings are computed from R on the fly.  On top of that
sit bialgebras in the category, Yetter-Drinfeld modules, (co)module
(co)algebras, and the four tensor-action constructions that let YD modules
act on relative module categories.

Throughout, `psi(V, W)` is the braiding V⊗W -> W⊗V and `psi_inv(V, W)` its
inverse W⊗V -> V⊗W.
"""
from __future__ import annotations

from dataclasses import dataclass

from .hopf import (
    AxiomResult, HopfData, QuasiTriangular, Report, antipode_axioms, bialgebra_compatibility,
    check_algebra, check_coalgebra, compare, find_antipode,
)
from .tensor import MultiMap, ShapeError, _spaces, identity, invert, tensor_map


class AmbientMismatch(ValueError):
    pass


class MissingAntipode(ValueError):
    pass


def _swap_pair(X):
    """Swap the two output slots of a map I -> H⊗H."""
    return X.permute_outputs((1, 0))


class Ambient:
    """The braided category of left modules over (H, R).

    With ``inverse=True`` the same modules carry the inverse braiding
    v⊗w ↦ R^-(1)▷w ⊗ R^-(2)▷v, which is the braiding induced by R21^-1.
    """

    def __init__(self, qt, inverse=False):
        if not isinstance(qt, QuasiTriangular):
            raise TypeError("Ambient needs a QuasiTriangular structure")
        self.qt = qt
        self.inverse = inverse
        self.H = qt.H
        self.field = qt.H.field
        if inverse:
            self.R = _swap_pair(qt.R_inv)
            self.R_inv = _swap_pair(qt.R)
        else:
            self.R = qt.R
            self.R_inv = qt.R_inv

    def __eq__(self, other):
        return isinstance(other, Ambient) and other.qt is self.qt and other.inverse == self.inverse

    def __hash__(self):
        return hash((id(self.qt), self.inverse))

    def __repr__(self):
        tag = " (inverse braiding)" if self.inverse else ""
        return f"<Ambient {self.H.carrier.name}{tag}>"

    def mirror(self):
        return Ambient(self.qt, not self.inverse)

    @property
    def hspace(self):
        return self.H.carrier

    def trivial_module(self, spaces):
        spaces = _spaces(spaces)
        act = tensor_map(self.H.counit, identity(spaces, self.field))
        return HModule(spaces, act, self)

    def unit_object(self):
        return HModule((), self.H.counit, self)

    def regular_module(self):
        """H acting on itself by left multiplication."""
        return HModule((self.hspace,), self.H.mult, self)

    def _check(self, *mods):
        for M in mods:
            if M.ambient.qt is not self.qt:
                raise AmbientMismatch("modules live over different quasitriangular Hopf algebras")

    def psi(self, V, W):
        """Ψ_{V,W}(v⊗w) = R(2)▷w ⊗ R(1)▷v."""
        self._check(V, W)
        nv, nw = len(V.spaces), len(W.spaces)
        X = tensor_map(self.R, identity(V.spaces + W.spaces, self.field))
        # outputs: r1, r2, V..., W...  ->  r2, W..., r1, V...
        perm = [1] + [2 + nv + k for k in range(nw)] + [0] + [2 + k for k in range(nv)]
        X = X.permute_outputs(perm)
        X = X.then(W.action, 0)
        return X.then(V.action, nw)

    def psi_inv(self, V, W):
        """Inverse of psi(V, W): w⊗v ↦ R^-(1)▷v ⊗ R^-(2)▷w."""
        self._check(V, W)
        nv, nw = len(V.spaces), len(W.spaces)
        X = tensor_map(self.R_inv, identity(W.spaces + V.spaces, self.field))
        # outputs: s1, s2, W..., V...  ->  s1, V..., s2, W...
        perm = [0] + [2 + nw + k for k in range(nv)] + [1] + [2 + k for k in range(nw)]
        X = X.permute_outputs(perm)
        X = X.then(V.action, 0)
        return X.then(W.action, nv)


def trivial_ambient(field):
    from .catalog import trivial_qt
    return Ambient(trivial_qt(field))


# ---------------------------------------------------------------------------
# modules

@dataclass
class HModule:
    spaces: tuple
    action: MultiMap
    ambient: Ambient

    def __post_init__(self):
        self.spaces = _spaces(self.spaces)
        if self.action.domain != (self.ambient.hspace,) + self.spaces or self.action.codomain != self.spaces:
            raise ShapeError("an H-action must be a map H⊗V -> V")

    @property
    def field(self):
        return self.ambient.field

    def __matmul__(self, other):
        return tensor_modules(self, other)


def tensor_action(mods, ambient):
    """The action of H on M1⊗...⊗Mk through the iterated coproduct."""
    H = ambient.H
    if not mods:
        return H.counit
    k = len(mods)
    spaces = sum((M.spaces for M in mods), ())
    d = identity((ambient.hspace,), ambient.field)
    for _ in range(k - 1):
        d = d.then(H.comult, 0)
    X = tensor_map(d, identity(spaces, ambient.field))
    perm = []
    pos = k
    for j, M in enumerate(mods):
        perm.append(j)
        perm.extend(range(pos, pos + len(M.spaces)))
        pos += len(M.spaces)
    X = X.permute_outputs(perm)
    at = 0
    for M in mods:
        X = X.then(M.action, at)
        at += len(M.spaces)
    return X


def tensor_modules(*mods):
    if not mods:
        raise ValueError("need at least one module")
    amb = mods[0].ambient
    amb._check(*mods)
    spaces = sum((M.spaces for M in mods), ())
    return HModule(spaces, tensor_action(list(mods), amb), amb)


def check_module(M, name="H-module"):
    H = M.ambient.H
    a = M.action
    rep = Report(name)
    rep.add(compare("H-action associative", a.after(H.mult, 0), a.after(a, 1)))
    rep.add(compare("H-action unital", a.after(H.unit, 0), identity(M.spaces, M.field)))
    return rep


def equivariance(f, ins, outs, name):
    """f commutes with the H-actions on the tensor products of `ins` and `outs`."""
    amb = (ins or outs)[0].ambient if (ins or outs) else None
    if amb is None:
        return AxiomResult(name, True)
    lhs = tensor_action(list(ins), amb).then(f, 0)
    rhs = tensor_action(list(outs), amb).after(f, 1)
    return compare(name, lhs, rhs)


# ---------------------------------------------------------------------------
# bialgebras in the category

@dataclass
class BraidedBialgebra(HopfData):
    action: MultiMap = None
    ambient: Ambient = None

    @property
    def module(self):
        return HModule((self.carrier,), self.action, self.ambient)

    def braiding(self):
        M = self.module
        return self.ambient.psi(M, M)

    def has_antipode(self):
        return self.antipode is not None


def as_braided(H, ambient=None, action=None):
    """View an ordinary Hopf algebra (or a braided one given by data) in an ambient."""
    if ambient is None:
        ambient = trivial_ambient(H.field)
    if action is None:
        action = tensor_map(ambient.H.counit, identity((H.carrier,), H.field))
    return BraidedBialgebra(H.carrier, H.mult, H.unit, H.comult, H.counit,
                            getattr(H, "antipode", None), getattr(H, "antipode_inverse", None),
                            action, ambient)


def with_antipode(B):
    """Fill in S and S^-1 by solving for the convolution inverse of the identity."""
    if B.antipode is None:
        B.antipode = find_antipode(B)
        B.antipode_inverse = invert(B.antipode)
    return B


def check_braided_bialgebra(B, name="braided bialgebra"):
    rep = Report(name)
    M = B.module
    rep.extend(check_module(M), "module: ")
    rep.extend(check_algebra(B.algebra))
    rep.extend(check_coalgebra(B.coalgebra))
    for r in bialgebra_compatibility(B, B.braiding()):
        rep.add(r)
    rep.add(equivariance(B.mult, [M, M], [M], "multiplication is H-linear"))
    rep.add(equivariance(B.unit, [], [M], "unit is H-linear"))
    rep.add(equivariance(B.comult, [M], [M, M], "comultiplication is H-linear"))
    rep.add(equivariance(B.counit, [M], [], "counit is H-linear"))
    if B.antipode is not None:
        for r in antipode_axioms(B, B.antipode, B.antipode_inverse):
            rep.add(r)
        rep.add(equivariance(B.antipode, [M], [M], "antipode is H-linear"))
    return rep


def co_opposite_braided(B):
    """cop-B: same product, coproduct Ψ^-1 Δ, antipode S^-1, in the mirrored ambient."""
    M = B.module
    comult = B.comult.then(B.ambient.psi_inv(M, M), 0)
    return BraidedBialgebra(B.carrier, B.mult, B.unit, comult, B.counit,
                            B.antipode_inverse, B.antipode, B.action, B.ambient.mirror())


def is_commutative(B):
    return compare("commutative", B.mult, B.mult.after(B.braiding(), 0))


def is_cocommutative(B):
    return compare("cocommutative", B.comult, B.comult.then(B.braiding(), 0))


def check_commutative_in_inverse_braiding(B, name="bialgebra with inverse braiding"):
    """A (co)commutative bialgebra stays a bialgebra when Ψ is replaced by Ψ^-1."""
    rep = Report(name)
    comm, cocomm = is_commutative(B), is_cocommutative(B)
    pre = AxiomResult("precondition: commutative or cocommutative", comm.passed or cocomm.passed,
                      detail="" if comm.passed or cocomm.passed else "neither commutative nor cocommutative")
    rep.add(pre)
    if not pre.passed:
        return rep
    M = B.module
    for r in bialgebra_compatibility(B, B.ambient.psi_inv(M, M)):
        rep.add(r)
    return rep


# ---------------------------------------------------------------------------
# (co)actions: shared building blocks

def _n(X):
    return len(X.spaces)


def check_left_action(a, mult, unit, V, name):
    out = []
    out.append(compare(f"{name} associative", a.after(mult, 0), a.after(a, 1)))
    out.append(compare(f"{name} unital", a.after(unit, 0), identity(V.spaces, V.field)))
    return out


def check_right_action(a, mult, unit, V, name):
    n = _n(V)
    out = []
    out.append(compare(f"{name} associative", a.after(mult, n), a.after(a, 0)))
    out.append(compare(f"{name} unital", a.after(unit, n), identity(V.spaces, V.field)))
    return out


def check_left_coaction(d, comult, counit, V, name):
    out = []
    out.append(compare(f"{name} coassociative", d.then(comult, 0), d.then(d, 1)))
    out.append(compare(f"{name} counital", d.then(counit, 0), identity(V.spaces, V.field)))
    return out


def check_right_coaction(d, comult, counit, V, name):
    n = _n(V)
    out = []
    out.append(compare(f"{name} coassociative", d.then(comult, n), d.then(d, 0)))
    out.append(compare(f"{name} counital", d.then(counit, n), identity(V.spaces, V.field)))
    return out


def left_tensor_action(B, X, aX, Y, aY):
    """B acting on X⊗Y: (aX⊗aY)(id⊗Ψ_{B,X}⊗id)(Δ⊗id)."""
    M = B.module
    Z = tensor_map(B.comult, identity(X.spaces + Y.spaces, B.field))
    Z = Z.then(B.ambient.psi(M, X), 1)
    Z = Z.then(aX, 0)
    return Z.then(aY, _n(X))


def right_tensor_action(B, X, aX, Y, aY):
    """B acting on X⊗Y from the right: (aX⊗aY)(id⊗Ψ_{Y,B}⊗id)(id⊗id⊗Δ)."""
    M = B.module
    nx = _n(X)
    Z = tensor_map(identity(X.spaces + Y.spaces, B.field), B.comult)
    Z = Z.then(B.ambient.psi(Y, M), nx)
    Z = Z.then(aX, 0)
    return Z.then(aY, nx)


def left_tensor_coaction(B, X, dX, Y, dY):
    """(m⊗id)(id⊗Ψ_{X,B}⊗id)(δX⊗δY)."""
    M = B.module
    Z = tensor_map(dX, dY)
    Z = Z.then(B.ambient.psi(X, M), 1)
    return Z.then(B.mult, 0)


def right_tensor_coaction(B, X, dX, Y, dY):
    """(id⊗id⊗m)(id⊗Ψ_{B,Y}⊗id)(δX⊗δY)."""
    M = B.module
    nx, ny = _n(X), _n(Y)
    Z = tensor_map(dX, dY)
    Z = Z.then(B.ambient.psi(M, Y), nx)
    return Z.then(B.mult, nx + ny)


# ---------------------------------------------------------------------------
# Yetter-Drinfeld modules

@dataclass
class YDModule:
    module: HModule
    over: BraidedBialgebra
    action: MultiMap
    coaction: MultiMap
    side: str = "left"

    @property
    def spaces(self):
        return self.module.spaces


def _yd_condition_left(V):
    B = V.over
    M, X = B.module, V.module
    psi = B.ambient.psi
    a, d = V.action, V.coaction
    lhs = tensor_map(B.comult, d).then(psi(M, M), 1).then(B.mult, 0).then(a, 1)
    rhs = tensor_map(B.comult, identity(X.spaces, B.field))
    rhs = rhs.then(psi(M, X), 1).then(a, 0).then(d, 0).then(psi(X, M), 1).then(B.mult, 0)
    return compare("Yetter-Drinfeld compatibility", lhs, rhs)


def _yd_condition_right(V):
    B = V.over
    M, X = B.module, V.module
    n = _n(X)
    psi = B.ambient.psi
    a, d = V.action, V.coaction
    lhs = tensor_map(d, B.comult).then(psi(M, M), n).then(a, 0).then(B.mult, n)
    rhs = tensor_map(identity(X.spaces, B.field), B.comult)
    rhs = rhs.then(psi(X, M), 0).then(a, 1).then(d, 1).then(psi(M, X), 0).then(B.mult, n)
    return compare("Yetter-Drinfeld compatibility", lhs, rhs)


def check_yd(V, name="Yetter-Drinfeld module"):
    B = V.over
    rep = Report(name)
    rep.extend(check_module(V.module), "H-module: ")
    M, X = B.module, V.module
    if V.side == "left":
        for r in check_left_action(V.action, B.mult, B.unit, X, "B-action"):
            rep.add(r)
        for r in check_left_coaction(V.coaction, B.comult, B.counit, X, "B-coaction"):
            rep.add(r)
        rep.add(_yd_condition_left(V))
        rep.add(equivariance(V.action, [M, X], [X], "B-action is H-linear"))
        rep.add(equivariance(V.coaction, [X], [M, X], "B-coaction is H-linear"))
    else:
        for r in check_right_action(V.action, B.mult, B.unit, X, "B-action"):
            rep.add(r)
        for r in check_right_coaction(V.coaction, B.comult, B.counit, X, "B-coaction"):
            rep.add(r)
        rep.add(_yd_condition_right(V))
        rep.add(equivariance(V.action, [X, M], [X], "B-action is H-linear"))
        rep.add(equivariance(V.coaction, [X], [X, M], "B-coaction is H-linear"))
    return rep


def yd_tensor(V1, V2):
    """V1⊗V2 with the diagonal action and coaction."""
    if V1.over is not V2.over or V1.side != V2.side:
        raise AmbientMismatch("yd_tensor needs two YD modules on the same side of one bialgebra")
    B = V1.over
    X1, X2 = V1.module, V2.module
    mod = tensor_modules(X1, X2)
    if V1.side == "left":
        act = left_tensor_action(B, X1, V1.action, X2, V2.action)
        coact = left_tensor_coaction(B, X1, V1.coaction, X2, V2.coaction)
    else:
        act = right_tensor_action(B, X1, V1.action, X2, V2.action)
        coact = right_tensor_coaction(B, X1, V1.coaction, X2, V2.coaction)
    return YDModule(mod, B, act, coact, V1.side)


def yd_braiding(V, W):
    """Ψ^YD_{V,W} = (a⊗id)(id⊗Ψ_{V,W})(δ_V⊗id) for left YD modules."""
    B = V.over
    amb = B.ambient
    Z = tensor_map(V.coaction, identity(W.spaces, B.field))
    Z = Z.then(amb.psi(V.module, W.module), 1)
    return Z.then(W.action, 0)


def trivial_yd(B, space=None, side="left"):
    """The unit object: k (or a given space) with action ε and coaction 1."""
    spaces = (space,) if space is not None else ()
    mod = B.ambient.trivial_module(spaces)
    idV = identity(spaces, B.field)
    if side == "left":
        act = tensor_map(B.counit, idV)
        coact = tensor_map(B.unit, idV)
    else:
        act = tensor_map(idV, B.counit)
        coact = tensor_map(idV, B.unit)
    return YDModule(mod, B, act, coact, side)


def left_adjoint_yd(B):
    """B with b▷c = b1 Ψ(b2⊗c) -> b1 c' S(b2') and the regular coaction Δ."""
    if B.antipode is None:
        raise MissingAntipode("the adjoint action needs an antipode")
    M = B.module
    Z = tensor_map(B.comult, identity((B.carrier,), B.field))
    Z = Z.then(B.braiding(), 1).then(B.antipode, 2).then(B.mult, 1).then(B.mult, 0)
    return YDModule(M, B, Z, B.comult, "left")


def right_adjoint_action(B):
    """m(S⊗m)(Ψ⊗id)(id⊗Δ): c ◁ b = S(b1') c' b2."""
    if B.antipode is None:
        raise MissingAntipode("the adjoint action needs an antipode")
    Z = tensor_map(identity((B.carrier,), B.field), B.comult)
    Z = Z.then(B.braiding(), 0).then(B.antipode, 0).then(B.mult, 1).then(B.mult, 0)
    return Z


def right_adjoint_yd(B):
    """B with the right adjoint action and the right regular coaction Δ."""
    return YDModule(B.module, B, right_adjoint_action(B), B.comult, "right")


def translate_right_left(V):
    """A right YD module over B becomes a left YD module over cop-B with the inverse braiding."""
    B = V.over
    if V.side != "right":
        raise ValueError("translate_right_left expects a right YD module")
    if B.antipode_inverse is None:
        raise MissingAntipode("the translation needs S^-1")
    amb = B.ambient
    M, X = B.module, V.module
    a_new = V.action.after(amb.psi_inv(X, M), 0).after(B.antipode_inverse, 0)
    d_new = V.coaction.then(amb.psi_inv(M, X), 0)
    Bc = co_opposite_braided(B)
    mod = HModule(X.spaces, X.action, Bc.ambient)
    return YDModule(mod, Bc, a_new, d_new, "left")


def translate_left_right(V, B):
    """Inverse of translate_right_left; `B` is the original bialgebra."""
    amb = B.ambient
    M = B.module
    X = HModule(V.module.spaces, V.module.action, amb)
    a_old = V.action.after(B.antipode, 0).after(amb.psi(X, M), 0)
    d_old = V.coaction.then(amb.psi(M, X), 0)
    return YDModule(X, B, a_old, d_old, "right")


# ---------------------------------------------------------------------------
# algebra and coalgebra objects with (co)actions

@dataclass
class AlgebraObject:
    module: HModule
    mult: MultiMap
    unit: MultiMap

    @property
    def spaces(self):
        return self.module.spaces

    @property
    def field(self):
        return self.module.field


@dataclass
class CoalgebraObject:
    module: HModule
    comult: MultiMap
    counit: MultiMap

    @property
    def spaces(self):
        return self.module.spaces

    @property
    def field(self):
        return self.module.field


def _algebra_checks(A, rep):
    M = A.module
    rep.extend(check_module(M), "H-module: ")
    for r in check_algebra(A).results:
        rep.add(r)
    rep.add(equivariance(A.mult, [M, M], [M], "multiplication is H-linear"))
    rep.add(equivariance(A.unit, [], [M], "unit is H-linear"))


def _coalgebra_checks(C, rep):
    M = C.module
    rep.extend(check_module(M), "H-module: ")
    for r in check_coalgebra(C).results:
        rep.add(r)
    rep.add(equivariance(C.comult, [M], [M, M], "comultiplication is H-linear"))
    rep.add(equivariance(C.counit, [M], [], "counit is H-linear"))


@dataclass
class ComoduleAlgebra:
    algebra: AlgebraObject
    coaction: MultiMap
    over: BraidedBialgebra

    @property
    def module(self):
        return self.algebra.module


def check_comodule_algebra(A, name="comodule algebra"):
    B = A.over
    alg = A.algebra
    X = alg.module
    rep = Report(name)
    _algebra_checks(alg, rep)
    for r in check_left_coaction(A.coaction, B.comult, B.counit, X, "coaction"):
        rep.add(r)
    d = A.coaction
    rep.add(compare("coaction is multiplicative", alg.mult.then(d, 0),
                    left_tensor_coaction(B, X, d, X, d).then(alg.mult, 1)))
    rep.add(compare("coaction preserves unit", alg.unit.then(d, 0), tensor_map(B.unit, alg.unit)))
    rep.add(equivariance(d, [X], [B.module, X], "coaction is H-linear"))
    return rep


@dataclass
class ModuleAlgebra:
    algebra: AlgebraObject
    action: MultiMap
    over: BraidedBialgebra
    side: str = "right"

    @property
    def module(self):
        return self.algebra.module


def check_module_algebra(A, name="module algebra"):
    B = A.over
    alg = A.algebra
    X = alg.module
    a = A.action
    rep = Report(name)
    _algebra_checks(alg, rep)
    if A.side == "right":
        for r in check_right_action(a, B.mult, B.unit, X, "action"):
            rep.add(r)
        rhs = right_tensor_action(B, X, a, X, a).then(alg.mult, 0)
        rep.add(compare("action respects multiplication", a.after(alg.mult, 0), rhs))
        rep.add(compare("action fixes unit", a.after(alg.unit, 0), tensor_map(alg.unit, B.counit)))
        rep.add(equivariance(a, [X, B.module], [X], "action is H-linear"))
    else:
        for r in check_left_action(a, B.mult, B.unit, X, "action"):
            rep.add(r)
        rhs = left_tensor_action(B, X, a, X, a).then(alg.mult, 0)
        rep.add(compare("action respects multiplication", a.after(alg.mult, 1), rhs))
        rep.add(compare("action fixes unit", a.after(alg.unit, 1), tensor_map(B.counit, alg.unit)))
        rep.add(equivariance(a, [B.module, X], [X], "action is H-linear"))
    return rep


@dataclass
class ModuleCoalgebra:
    """A coalgebra in left B-modules."""
    coalgebra: CoalgebraObject
    action: MultiMap
    over: BraidedBialgebra

    @property
    def module(self):
        return self.coalgebra.module


def check_module_coalgebra(C, name="module coalgebra"):
    B = C.over
    co = C.coalgebra
    X = co.module
    a = C.action
    rep = Report(name)
    _coalgebra_checks(co, rep)
    for r in check_left_action(a, B.mult, B.unit, X, "action"):
        rep.add(r)
    rhs = left_tensor_action(B, X, a, X, a).after(co.comult, 1)
    rep.add(compare("comultiplication is B-linear", a.then(co.comult, 0), rhs))
    rep.add(compare("counit is B-linear", a.then(co.counit, 0), tensor_map(B.counit, co.counit)))
    rep.add(equivariance(a, [B.module, X], [X], "action is H-linear"))
    return rep


@dataclass
class ComoduleCoalgebra:
    """A coalgebra in right B-comodules."""
    coalgebra: CoalgebraObject
    coaction: MultiMap
    over: BraidedBialgebra

    @property
    def module(self):
        return self.coalgebra.module


def check_comodule_coalgebra(C, name="comodule coalgebra"):
    B = C.over
    co = C.coalgebra
    X = co.module
    d = C.coaction
    rep = Report(name)
    _coalgebra_checks(co, rep)
    for r in check_right_coaction(d, B.comult, B.counit, X, "coaction"):
        rep.add(r)
    lhs = d.then(co.comult, 0)
    rhs = co.comult.then(right_tensor_coaction(B, X, d, X, d), 0)
    rep.add(compare("comultiplication is B-colinear", lhs, rhs))
    rep.add(compare("counit is B-colinear", d.then(co.counit, 0), co.counit.then(B.unit, 0)))
    rep.add(equivariance(d, [X], [X, B.module], "coaction is H-linear"))
    return rep


# ---------------------------------------------------------------------------
# relative modules

KINDS = ("lmod_A(lcomod_B)", "lmod_A(rmod_B)", "lmod_A(lmod_B)", "lcomod_C(lmod_B)", "lcomod_C(rcomod_B)")


@dataclass
class RelModule:
    """An object W with an A- (or C-) structure and a B-structure, of one of the five kinds."""
    kind: str
    module: HModule
    a_struct: MultiMap
    b_struct: MultiMap
    base: object
    over: BraidedBialgebra

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown relative module kind {self.kind!r}")

    @property
    def spaces(self):
        return self.module.spaces


def check_rel_module(W, name=None):
    rep = Report(name or W.kind)
    B = W.over
    X = W.module
    Bm = B.module
    A = W.base
    a, b = W.a_struct, W.b_struct
    rep.extend(check_module(X), "H-module: ")
    if W.kind.startswith("lmod_A"):
        alg = A.algebra
        Am = alg.module
        for r in check_left_action(a, alg.mult, alg.unit, X, "A-action"):
            rep.add(r)
        rep.add(equivariance(a, [Am, X], [X], "A-action is H-linear"))
        if W.kind == "lmod_A(lcomod_B)":
            for r in check_left_coaction(b, B.comult, B.counit, X, "B-coaction"):
                rep.add(r)
            rep.add(equivariance(b, [X], [Bm, X], "B-coaction is H-linear"))
            dAW = left_tensor_coaction(B, Am, A.coaction, X, b)
            rep.add(compare("A-action is B-colinear", a.then(b, 0), dAW.then(a, 1)))
        elif W.kind == "lmod_A(rmod_B)":
            for r in check_right_action(b, B.mult, B.unit, X, "B-action"):
                rep.add(r)
            rep.add(equivariance(b, [X, Bm], [X], "B-action is H-linear"))
            bAW = right_tensor_action(B, Am, A.action, X, b)
            rep.add(compare("A-action is B-linear", b.after(a, 0), a.after(bAW, 0)))
        else:
            for r in check_left_action(b, B.mult, B.unit, X, "B-action"):
                rep.add(r)
            rep.add(equivariance(b, [Bm, X], [X], "B-action is H-linear"))
            bAW = left_tensor_action(B, Am, A.action, X, b)
            rep.add(compare("A-action is B-linear", b.after(a, 1), a.after(bAW, 0)))
    else:
        co = A.coalgebra
        Cm = co.module
        for r in check_left_coaction(a, co.comult, co.counit, X, "C-coaction"):
            rep.add(r)
        rep.add(equivariance(a, [X], [Cm, X], "C-coaction is H-linear"))
        if W.kind == "lcomod_C(lmod_B)":
            for r in check_left_action(b, B.mult, B.unit, X, "B-action"):
                rep.add(r)
            rep.add(equivariance(b, [Bm, X], [X], "B-action is H-linear"))
            bCW = left_tensor_action(B, Cm, A.action, X, b)
            rep.add(compare("C-coaction is B-linear", b.then(a, 0), bCW.after(a, 1)))
        else:
            for r in check_right_coaction(b, B.comult, B.counit, X, "B-coaction"):
                rep.add(r)
            rep.add(equivariance(b, [X], [X, Bm], "B-coaction is H-linear"))
            dCW = right_tensor_coaction(B, Cm, A.coaction, X, b)
            rep.add(compare("C-coaction is B-colinear", a.then(dCW, 0), b.then(a, 0)))
    return rep


def _same_over(V, W):
    if V.over is not W.over:
        raise AmbientMismatch("the YD module and the relative module must share B")


def tensor_act_comod(V, W):
    """V▷W for V a left YD module and W in lmod_A(lcomod_B), A a comodule algebra."""
    if W.kind != "lmod_A(lcomod_B)" or V.side != "left":
        raise ValueError("tensor_act_comod needs a left YD module and an object of lmod_A(lcomod_B)")
    _same_over(V, W)
    B = V.over
    A = W.base
    amb = B.ambient
    Am, X, Y = A.algebra.module, V.module, W.module
    # a_{V▷W} = (a_V⊗a_W)(id⊗Ψ_{A,V}⊗id)(δ_A⊗id)
    act = tensor_map(A.coaction, identity(X.spaces + Y.spaces, B.field))
    act = act.then(amb.psi(Am, X), 1).then(V.action, 0).then(W.a_struct, _n(X))
    # δ_{V▷W} = (m⊗id)(id⊗Ψ_{V,B}⊗id)(δ_V⊗δ_W)
    coact = tensor_map(V.coaction, W.b_struct).then(amb.psi(X, B.module), 1).then(B.mult, 0)
    return RelModule(W.kind, tensor_modules(X, Y), act, coact, A, B)


def tensor_act_mod_right(V, W):
    """V▷W for V a right YD module and W in lmod_A(rmod_B), A a right module algebra."""
    if W.kind != "lmod_A(rmod_B)" or V.side != "right":
        raise ValueError("tensor_act_mod_right needs a right YD module and an object of lmod_A(rmod_B)")
    _same_over(V, W)
    B = V.over
    A = W.base
    amb = B.ambient
    Am, X, Y = A.algebra.module, V.module, W.module
    nx = _n(X)
    # a_{V▷W} = (id_V⊗a_W)(id_V⊗b_A⊗id_W)(Ψ_{A,V}⊗id)(id_A⊗δ_V⊗id_W)
    act = tensor_map(identity(Am.spaces, B.field), V.coaction, identity(Y.spaces, B.field))
    act = act.then(amb.psi(Am, X), 0).then(A.action, nx).then(W.a_struct, nx)
    # b_{V▷W} = (b_V⊗b_W)(id_V⊗Ψ_{W,B}⊗id_B)(id⊗Δ)
    bact = tensor_map(identity(X.spaces + Y.spaces, B.field), B.comult)
    bact = bact.then(amb.psi(Y, B.module), nx).then(V.action, 0).then(W.b_struct, nx)
    return RelModule(W.kind, tensor_modules(X, Y), act, bact, A, B)


def tensor_act_mod_left(V, W):
    """V▷W for V a left YD module over Hopf B and W in lmod_A(lmod_B), A a left module algebra."""
    if W.kind != "lmod_A(lmod_B)" or V.side != "left":
        raise ValueError("tensor_act_mod_left needs a left YD module and an object of lmod_A(lmod_B)")
    _same_over(V, W)
    B = V.over
    if B.antipode_inverse is None:
        raise MissingAntipode("tensor_act_mod_left needs S^-1")
    A = W.base
    amb = B.ambient
    Am, X, Y = A.algebra.module, V.module, W.module
    na = _n(Am)
    # a▷(v⊗w) = v(0) ⊗ (S^-1 v(-1) ▷ a)·w, with both crossings inverse braidings
    act = tensor_map(identity(Am.spaces, B.field), V.coaction, identity(Y.spaces, B.field))
    act = act.then(B.antipode_inverse, na)
    act = act.then(amb.psi_inv(B.module, Am), 0).then(A.action, 0)
    act = act.then(amb.psi_inv(X, Am), 0).then(W.a_struct, _n(X))
    bact = left_tensor_action(B, X, V.action, Y, W.b_struct)
    return RelModule(W.kind, tensor_modules(X, Y), act, bact, A, B)


def tensor_coact(V, W):
    """V▷W for the two coalgebra variants, chosen by W.kind."""
    _same_over(V, W)
    B = V.over
    C = W.base
    amb = B.ambient
    Cm, X, Y = C.coalgebra.module, V.module, W.module
    nx = _n(X)
    if W.kind == "lcomod_C(lmod_B)":
        if V.side != "left":
            raise ValueError("variant (i) needs a left YD module")
        # δ_{V▷W} = (a_C⊗id)(id_B⊗Ψ_{V,C}⊗id_W)(δ_V⊗δ_W)
        coact = tensor_map(V.coaction, W.a_struct).then(amb.psi(X, Cm), 1).then(C.action, 0)
        bact = left_tensor_action(B, X, V.action, Y, W.b_struct)
        return RelModule(W.kind, tensor_modules(X, Y), coact, bact, C, B)
    if W.kind == "lcomod_C(rcomod_B)":
        if V.side != "right":
            raise ValueError("variant (ii) needs a right YD module")
        # γ_{V▷W} = (id_C⊗a_V⊗id_W)(Ψ_{V,C}⊗id)(id_V⊗δ_C⊗id_W)(id_V⊗γ_W)
        gam = tensor_map(identity(X.spaces, B.field), W.a_struct)
        gam = gam.then(C.coaction, nx).then(amb.psi(X, Cm), 0).then(V.action, _n(Cm))
        dlt = right_tensor_coaction(B, X, V.coaction, Y, W.b_struct)
        return RelModule(W.kind, tensor_modules(X, Y), gam, dlt, C, B)
    raise ValueError("tensor_coact needs an object of lcomod_C(lmod_B) or lcomod_C(rcomod_B)")


def act(V, W):
    """Dispatch V▷W to the right construction for W's kind."""
    if W.kind == "lmod_A(lcomod_B)":
        return tensor_act_comod(V, W)
    if W.kind == "lmod_A(rmod_B)":
        return tensor_act_mod_right(V, W)
    if W.kind == "lmod_A(lmod_B)":
        return tensor_act_mod_left(V, W)
    return tensor_coact(V, W)


def categorical_module_laws(V1, V2, W, name="categorical module laws"):
    """(V1⊗V2)▷W = V1▷(V2▷W) and 1▷W = W, as literal equalities of structure maps."""
    rep = Report(name)
    left = act(yd_tensor(V1, V2), W)
    right = act(V1, act(V2, W))
    rep.add(compare("associator: first structure map", left.a_struct, right.a_struct))
    rep.add(compare("associator: second structure map", left.b_struct, right.b_struct))
    rep.add(compare("associator: H-action", left.module.action, right.module.action))
    one = act(trivial_yd(V1.over, side=V1.side), W)
    rep.add(compare("unit: first structure map", one.a_struct, W.a_struct))
    rep.add(compare("unit: second structure map", one.b_struct, W.b_struct))
    return rep


# ---------------------------------------------------------------------------
# standard objects built from a Hopf algebra in the category

def algebra_object(B):
    return AlgebraObject(B.module, B.mult, B.unit)


def coalgebra_object(B):
    return CoalgebraObject(B.module, B.comult, B.counit)


def regular_comodule_algebra(B):
    """B^reg: B coacting on itself by Δ."""
    return ComoduleAlgebra(algebra_object(B), B.comult, B)


def trivial_comodule_algebra(B):
    """B^triv: the coaction 1⊗id."""
    return ComoduleAlgebra(algebra_object(B), tensor_map(B.unit, identity((B.carrier,), B.field)), B)


def right_adjoint_module_algebra(B):
    """H^ad: B acting on itself by the right adjoint action."""
    return ModuleAlgebra(algebra_object(B), right_adjoint_action(B), B, "right")


def left_adjoint_module_algebra(B):
    return ModuleAlgebra(algebra_object(B), left_adjoint_yd(B).action, B, "left")


def left_adjoint_coaction(B):
    """δ^ad = (m⊗id)(id⊗Ψ(id⊗S)Δ)Δ."""
    if B.antipode is None:
        raise MissingAntipode("the adjoint coaction needs an antipode")
    Z = B.comult.then(B.comult, 1).then(B.antipode, 2).then(B.braiding(), 1)
    return Z.then(B.mult, 0)


def adjoint_coaction_algebra(B):
    """B coacting on itself by δ^ad; a comodule algebra when B is commutative."""
    return ComoduleAlgebra(algebra_object(B), left_adjoint_coaction(B), B)


def regular_module_coalgebra(B):
    """B as a coalgebra in left B-modules via left multiplication."""
    return ModuleCoalgebra(coalgebra_object(B), B.mult, B)


def trivial_comodule_coalgebra(B):
    """B as a coalgebra in right B-comodules via the trivial coaction id⊗1."""
    return ComoduleCoalgebra(coalgebra_object(B), tensor_map(identity((B.carrier,), B.field), B.unit), B)


def hopf_module(B):
    """B^reg as an object of lmod_{B^reg}(lcomod_B): left multiplication and Δ."""
    return RelModule("lmod_A(lcomod_B)", B.module, B.mult, B.comult, regular_comodule_algebra(B), B)


def trivial_coaction_module(B):
    """B in lmod_{B^triv}(lcomod_B): left multiplication by A and the coaction 1⊗id."""
    A = trivial_comodule_algebra(B)
    return RelModule("lmod_A(lcomod_B)", B.module, B.mult, A.coaction, A, B)


def adjoint_relmodule_right(B):
    """H^ad as an object of lmod_{H^ad}(rmod_H): left multiplication and right adjoint action."""
    A = right_adjoint_module_algebra(B)
    return RelModule("lmod_A(rmod_B)", B.module, B.mult, A.action, A, B)


def adjoint_relmodule_left(B):
    """B as an object of lmod_{B^ad}(lmod_B) for the left adjoint action."""
    A = left_adjoint_module_algebra(B)
    return RelModule("lmod_A(lmod_B)", B.module, B.mult, A.action, A, B)


def regular_comodule_relmodule(B):
    """B in lcomod_C(lmod_B) with C = B acting on itself, coaction Δ, action by multiplication."""
    C = regular_module_coalgebra(B)
    return RelModule("lcomod_C(lmod_B)", B.module, B.comult, B.mult, C, B)


def regular_right_comodule_relmodule(B):
    """B in lcomod_C(rcomod_B), C = B with trivial coaction, both coactions Δ."""
    C = trivial_comodule_coalgebra(B)
    return RelModule("lcomod_C(rcomod_B)", B.module, B.comult, B.comult, C, B)
