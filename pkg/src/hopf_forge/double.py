"""
Dually paired braided Hopf algebras and what they build: induced
(co)actions, crossed products, Heisenberg doubles, bosonization and the
braided Drinfeld double Drin_H(C, B).

The double is assembled by a rewriting engine.  Words are written in three
letter types ordered B < H < C; any adjacent pair that is out of order (or
repeats a type) is replaced using one of four local rules:

    x·y  -> m(x, y)                      same type
    h·b  -> (h1▷b) h2
    c·h  -> h2 (S^-1(h1)▷c)
    c·b  -> (H-word) b' c' (H-word)      the straightening relation

Each rule lowers (#C-before-B, #H-before-B, #C-before-H) lexicographically,
so normalization terminates; a step budget still guards against broken
inputs.  Normal forms b·h·c are then re-expressed in the C⊗H⊗B basis that
the double is published in.
"""
from __future__ import annotations

import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field

from .braided import (
    Ambient, AlgebraObject, BraidedBialgebra, MissingAntipode, ModuleAlgebra, check_left_action,
    check_right_coaction, co_opposite_braided, equivariance, left_tensor_action, left_tensor_coaction, right_tensor_coaction, tensor_action, tensor_modules,
    trivial_ambient, as_braided, yd_tensor, _algebra_checks,
)
from .hopf import (
    AlgebraData, AxiomResult, HopfData, NotHopf, QuasiTriangular, Report, check_algebra,
    check_hopf, check_quasitriangular, co_opposite, compare, dual_hopf, find_antipode,
)
from .tensor import (
    MultiMap, NotInvertible, ShapeError, Space, compose, identity, invert, multi_indices, rank,
    tensor_map,
)


class RewriteBudgetExceeded(RuntimeError):
    def __init__(self, message, word=None):
        super().__init__(message)
        self.word = word


class DoubleConstructionError(ValueError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


# ---------------------------------------------------------------------------
# flattening tensor products into one based space

def flat_space(spaces, name, sep="|"):
    labels = [sep.join(parts) for parts in _label_product(spaces)]
    return Space(name, len(labels), tuple(labels))


def _label_product(spaces):
    out = [()]
    for s in spaces:
        out = [p + (lab,) for p in out for lab in s.basis_labels]
    return out


def merge_map(spaces, target, field):
    """The reindexing V1⊗...⊗Vk -> target (row-major)."""
    ent = {((n,), idx): 1 for n, idx in enumerate(multi_indices(spaces))}
    return MultiMap(tuple(spaces), (target,), ent, field)


def _flatten_algebra(spaces, mult, unit, target):
    field = mult.field
    mg = merge_map(spaces, target, field)
    sp = mg.transpose()
    m = compose(mg, mult).after(sp, 0).after(sp, 1)
    u = compose(mg, unit)
    return AlgebraData(target, m, u), mg


def _pair_product(u, v, m1, m2):
    """Slotwise product in X⊗Y of u: D -> X⊗Y and v: D' -> X⊗Y."""
    w = tensor_map(u, v).permute_outputs((0, 2, 1, 3))
    return w.then(m1, 0).then(m2, 1)


def _times(x, y, mult):
    """m(x⊗y) for x: D -> A, y: D' -> A; the result has inputs D⊗D'."""
    return tensor_map(x, y).then(mult, 0)


# ---------------------------------------------------------------------------
# pairings

@dataclass
class Pairing:
    C: BraidedBialgebra
    B: BraidedBialgebra
    ev: MultiMap
    coev: MultiMap = None

    def __post_init__(self):
        if self.C.ambient != self.B.ambient:
            raise ValueError("paired bialgebras must live in the same braided category")
        if self.ev.domain != (self.C.carrier, self.B.carrier) or self.ev.codomain != ():
            raise ShapeError("ev must be a map C⊗B -> k")
        if self.coev is not None and (self.coev.domain != () or
                                      self.coev.codomain != (self.B.carrier, self.C.carrier)):
            raise ShapeError("coev must be a map k -> B⊗C")

    @property
    def ambient(self):
        return self.B.ambient

    @property
    def field(self):
        return self.ev.field

    @property
    def hopf(self):
        return self.B.antipode is not None and self.C.antipode is not None


def ev_matrix(P):
    """ev as a map C -> B* (rows indexed by B)."""
    ent = {((b,), (c,)): v for ((), (c, b)), v in P.ev.entries.items()}
    return MultiMap((P.C.carrier,), (P.B.carrier,), ent, P.field, check=False)


def pairing_rank(P):
    return rank(ev_matrix(P))


def coevaluation(P):
    """The copairing k -> B⊗C inverse to ev, or NotInvertible when ev is degenerate."""
    inv = invert(ev_matrix(P))
    ent = {((b, c), ()): v for ((c,), (b,)), v in inv.entries.items()}
    return MultiMap((), (P.B.carrier, P.C.carrier), ent, P.field, check=False)


def with_coevaluation(P):
    if P.coev is None:
        P.coev = coevaluation(P)
    return P


def check_pairing(P, name="pairing"):
    C, B, ev = P.C, P.B, P.ev
    fld = P.field
    rep = Report(name)
    ee = tensor_map(ev, ev)
    # ev(cc', b) = ev(c, b2) ev(c', b1)
    rep.add(compare("ev(m_C⊗id) = ev⊗2(id⊗Δ_B)", ev.after(C.mult, 0),
                    ee.permute_inputs((0, 2, 3, 1)).after(B.comult, 2)))
    # ev(c, bb') = ev(c2, b) ev(c1, b')
    rep.add(compare("ev(id⊗m_B) = ev⊗2(Δ_C⊗id)", ev.after(B.mult, 1),
                    ee.permute_inputs((2, 0, 1, 3)).after(C.comult, 0)))
    rep.add(compare("ev(1, b) = ε(b)", ev.after(C.unit, 0), B.counit))
    rep.add(compare("ev(c, 1) = ε(c)", ev.after(B.unit, 1), C.counit))
    rep.add(equivariance(ev, [C.module, B.module], [], "ev is H-linear"))
    if P.hopf:
        rep.add(compare("ev(S⊗id) = ev(id⊗S)", ev.after(C.antipode, 0), ev.after(B.antipode, 1)))
    if P.coev is not None:
        co = P.coev
        rep.add(equivariance(co, [], [B.module, C.module], "coev is H-linear"))
        zig = tensor_map(identity((C.carrier,), fld), co).then(ev, 0)
        rep.add(compare("(ev⊗id)(id⊗coev) = id_C", zig, identity((C.carrier,), fld)))
        zag = tensor_map(co, identity((B.carrier,), fld)).then(ev, 1)
        rep.add(compare("(id⊗ev)(coev⊗id) = id_B", zag, identity((B.carrier,), fld)))
    return rep


# ---------------------------------------------------------------------------
# comodules to modules

def coaction_to_action(P, coaction, X, variant="comod_B"):
    """Turn a coaction on the H-module X into an action through ev.

    "comod_B":       left B-coaction δ: X -> B⊗X gives the cop-C action (ev⊗id)(id⊗δ).
    "comod_copC":    left cop-C-coaction δ: X -> C⊗X gives the B-action (ev⊗id)(Ψ_{B,C}⊗id)(S⊗δ).
    "right_comod_C": right C-coaction δ: X -> X⊗C gives the left B-action (id⊗ev)(δ⊗id)Ψ_{B,X}(S⊗id).
    """
    C, B = P.C, P.B
    fld = P.field
    amb = P.ambient
    if variant == "comod_B":
        return tensor_map(identity((C.carrier,), fld), coaction).then(P.ev, 0)
    if variant not in ("comod_copC", "right_comod_C"):
        raise ValueError(f"unknown variant {variant!r}")
    if B.antipode is None:
        raise MissingAntipode(f"the {variant} construction needs an antipode on B")
    if variant == "comod_copC":
        Z = tensor_map(B.antipode, coaction)
        Z = Z.then(amb.psi(B.module, C.module), 0)
        return Z.then(P.ev, 0)
    n = len(X.spaces)
    Z = tensor_map(B.antipode, identity(X.spaces, fld))
    Z = Z.then(amb.psi(B.module, X), 0)
    Z = Z.then(coaction, 0)
    return Z.then(P.ev, n)


def comod_to_copC_module(P, X, coaction, name="induced cop-C module"):
    """Φ: left B-comodules -> left cop-C-modules, with its checks.

    Returns (action, report).  The report compares the action on X⊗X built
    from the tensor coaction with the cop-C tensor action (inverse braiding).
    """
    a = coaction_to_action(P, coaction, X, "comod_B")
    Cc = co_opposite_braided(P.C)
    rep = Report(name)
    for r in check_left_action(a, P.C.mult, P.C.unit, X, "cop-C action"):
        rep.add(r)
    d2 = left_tensor_coaction(P.B, X, coaction, X, coaction)
    XX = tensor_modules(X, X)
    lhs = coaction_to_action(P, d2, XX, "comod_B")
    rhs = left_tensor_action(Cc, X, a, X, a)
    rep.add(compare("action on X⊗X is the tensor action", lhs, rhs))
    return a, rep


# ---------------------------------------------------------------------------
# layered algebras: structure on a list of spaces, flattened on demand

@dataclass
class CrossProduct:
    """An algebra on an ordered tensor product of factors.

    `algebra` lives on a single flattened space; `factors` and `merge`
    record how it decomposes, and `embeddings` map each factor in as a
    subalgebra.
    """
    algebra: AlgebraData
    factors: tuple
    kinds: tuple
    merge: MultiMap
    layered_mult: MultiMap
    layered_unit: MultiMap
    module_action: MultiMap = None
    embeddings: dict = dc_field(default_factory=dict)

    @property
    def carrier(self):
        return self.algebra.carrier

    @property
    def mult(self):
        return self.algebra.mult

    @property
    def unit(self):
        return self.algebra.unit

    @property
    def dim(self):
        return self.algebra.carrier.dim


def _build_cross(spaces, kinds, mult, unit, name, field, units, action=None):
    target = flat_space(spaces, name)
    alg, mg = _flatten_algebra(spaces, mult, unit, target)
    cp = CrossProduct(alg, tuple(spaces), tuple(kinds), mg, mult, unit)
    if action is not None:
        cp.module_action = compose(mg, action).after(mg.transpose(), 1)
    # factor k embeds with units in all other slots
    for k, kind in enumerate(kinds):
        emb = identity((spaces[k],), field)
        pre = None
        for j in range(len(spaces)):
            if j == k:
                piece = emb
            else:
                piece = units[j]
            pre = piece if pre is None else tensor_map(pre, piece)
        cp.embeddings[kind] = compose(mg, pre)
    return cp


def _ambient_smash_layer(spaces, mult, unit, action, H):
    """X⋊H on X⊗H: (x h)(x' h') = x (h1▷x') h2 h'."""
    n = len(spaces)
    fld = mult.field
    hs = H.carrier
    idall = identity(tuple(spaces) + (hs,) + tuple(spaces) + (hs,), fld)
    Z = idall.then(H.comult, n)
    # (x, h1, h2, x', h') -> (x, h1, x', h2, h')
    perm = list(range(n)) + [n] + list(range(n + 2, 2 * n + 2)) + [n + 1, 2 * n + 2]
    Z = Z.permute_outputs(perm)
    Z = Z.then(action, n)
    Z = Z.then(mult, 0)
    Z = Z.then(H.mult, n)
    # input order is (x, h, x', h'); mult is written in those slots already
    u = tensor_map(unit, H.unit)
    return Z, u


def smash_product(A, name="A#B"):
    """A⋊B for a left module algebra A over a braided bialgebra B.

    m = (m_A⊗m_B)(id⊗a⊗id⊗id)(id⊗id⊗Ψ_{B,A}⊗id)(id⊗Δ⊗id⊗id)
    """
    if A.side != "left":
        raise ValueError("smash_product needs a left module algebra")
    B = A.over
    alg = A.algebra
    X = alg.module
    n = len(X.spaces)
    fld = B.field
    bs = B.carrier
    spaces = tuple(X.spaces) + (bs,)
    Z = identity(spaces + spaces, fld)
    Z = Z.then(B.comult, n)
    Z = Z.then(B.ambient.psi(B.module, X), n + 1)
    Z = Z.then(A.action, n)
    Z = Z.then(alg.mult, 0)
    Z = Z.then(B.mult, n)
    u = tensor_map(alg.unit, B.unit)
    action = tensor_action([X, B.module], B.ambient)
    return _build_cross(spaces, ("A", "B"), Z, u, name, fld, [alg.unit, B.unit], action)


def _with_H(cp_spaces, kinds, mult, unit, action, units, amb, name):
    H = amb.H
    Z, u = _ambient_smash_layer(cp_spaces, mult, unit, action, H)
    spaces = tuple(cp_spaces) + (H.carrier,)
    return _build_cross(spaces, tuple(kinds) + ("H",), Z, u, name, H.field, list(units) + [H.unit])


def cross_product_comod(A, P, with_H=True, name=None):
    """A⋊cop-C (⋊H) for a left B-comodule algebra A.

    Relations: c a = (R^-(1)▷a(0)) (R^-(2)▷c1) ev(c2, a(-1)), and, with H,
    h a = (h1▷a) h2, h c = (h1▷c) h2.
    """
    C, B = P.C, P.B
    if A.over is not B:
        raise ValueError("the comodule algebra must be over the paired B")
    amb = P.ambient
    fld = P.field
    alg = A.algebra
    X = alg.module
    n = len(X.spaces)
    cs = C.carrier
    # cross map (c, a) -> (A, C)
    Y = tensor_map(C.comult, A.coaction)          # c1, c2, a(-1), a(0)...
    Y = Y.then(P.ev, 1)                           # c1, a(0)
    Y = Y.then(amb.R_inv, 0)                      # x1, x2, c1, a(0)
    perm = [0] + list(range(3, 3 + n)) + [1, 2]
    Y = Y.permute_outputs(perm)                   # x1, a, x2, c1
    Y = Y.then(X.action, 0)
    Y = Y.then(C.action, n)                       # A, C
    spaces = tuple(X.spaces) + (cs,)
    Z = identity(spaces + spaces, fld)            # a, c, a', c'
    Z = Z.then(Y, n)                              # a, A, C, c'
    Z = Z.then(alg.mult, 0)
    Z = Z.then(C.mult, n)
    u = tensor_map(alg.unit, C.unit)
    action = tensor_action([X, C.module], amb)
    tag = "Heis" if name is None else name
    if not with_H:
        return _build_cross(spaces, ("A", "C"), Z, u, tag, fld, [alg.unit, C.unit], action)
    return _with_H(spaces, ("A", "C"), Z, u, action, [alg.unit, C.unit], amb, tag)


def heisenberg_double(P, with_H=True, name="Heis"):
    """Heis_H(C, B) = B^reg ⋊ cop-C ⋊ H."""
    from .braided import regular_comodule_algebra
    return cross_product_comod(regular_comodule_algebra(P.B), P, with_H, name)


def twisted_tensor_product(P, with_H=True, name="B⊗C"):
    """B^triv ⋊ cop-C (⋊H): the braided tensor product B⊗_{Ψ^-1}C."""
    from .braided import trivial_comodule_algebra
    return cross_product_comod(trivial_comodule_algebra(P.B), P, with_H, name)


def check_cross_product(cp, name="cross product"):
    rep = Report(name)
    for r in check_algebra(cp.algebra).results:
        rep.add(r)
    return rep


def check_embeddings(cp, algebras, name="subalgebras"):
    """Each factor embeds as a subalgebra; `algebras` maps kind -> (mult, unit)."""
    rep = Report(name)
    for kind, (m, u) in algebras.items():
        e = cp.embeddings[kind]
        rep.add(compare(f"{kind} embeds multiplicatively", compose(e, m), _times(e, e, cp.mult)))
        rep.add(compare(f"{kind} embeds unitally", compose(e, u), cp.unit))
    return rep


# ---------------------------------------------------------------------------
# the rewriting engine

_B, _H, _C = 0, 1, 2
_KIND = {_B: "B", _H: "H", _C: "C"}


def _rule_table(f, types_out):
    """Turn a map X⊗Y -> Z1⊗...⊗Zk into {(x, y): [(word, coeff)]}."""
    table = {}
    for (o, i), c in f.entries.items():
        word = tuple(zip(types_out, o))
        table.setdefault(i, []).append((word, c))
    return table


def _unit_letter(unit):
    ent = unit.entries
    if len(ent) == 1:
        ((o, _), c), = ent.items()
        if c == c.field.one():
            return o[0]
    return None


class Straightener:
    """Normal forms b·h·c for words in the letters of B, H and C."""

    def __init__(self, mults, units, hb, ch, cb, field, max_steps=10 ** 6):
        self.field = field
        self.max_steps = max_steps
        self.tables = {
            (_B, _B): _rule_table(mults[_B], (_B,)),
            (_H, _H): _rule_table(mults[_H], (_H,)),
            (_C, _C): _rule_table(mults[_C], (_C,)),
            (_H, _B): _rule_table(hb, (_B, _H)),
            (_C, _H): _rule_table(ch, (_H, _C)),
            (_C, _B): _rule_table(cb, (_H, _B, _C, _H)),
        }
        self.units = {}
        self.droppable = set()
        for t, u in units.items():
            self.units[t] = [(o[0], c) for (o, _), c in u.entries.items()]
            k = _unit_letter(u)
            if k is not None:
                self.droppable.add((t, k))
        self.memo = {}
        self.steps = 0

    def __getstate__(self):
        state = dict(self.__dict__)
        state["memo"] = {}
        return state

    def _strip(self, word):
        return tuple(x for x in word if x not in self.droppable)

    def normalize(self, word):
        """{(b, h, c): coeff} for a word of letters (type, index)."""
        self.steps = 0
        return self._normalize(self._strip(tuple(word)))

    def _normalize(self, word):
        hit = self.memo.get(word)
        if hit is not None:
            return hit
        for pos in range(len(word) - 1):
            x, y = word[pos], word[pos + 1]
            if x[0] < y[0]:
                continue
            self.steps += 1
            if self.steps > self.max_steps:
                raise RewriteBudgetExceeded(
                    f"normalization exceeded {self.max_steps} rewrite steps", word=word)
            table = self.tables[(x[0], y[0])]
            out = {}
            head, tail = word[:pos], word[pos + 2:]
            for w, c in table.get((x[1], y[1]), ()):
                sub = self._normalize(self._strip(head + w + tail))
                for k, v in sub.items():
                    prev = out.get(k)
                    out[k] = v * c if prev is None else prev + v * c
            out = {k: v for k, v in out.items() if v}
            self.memo[word] = out
            return out
        out = self._pad(word)
        self.memo[word] = out
        return out

    def _pad(self, word):
        present = {t: i for t, i in word}
        choices = []
        for t in (_B, _H, _C):
            if t in present:
                choices.append([(present[t], self.field.one())])
            else:
                choices.append(self.units[t])
        out = {}
        for b, cb in choices[0]:
            for h, ch in choices[1]:
                for c, cc in choices[2]:
                    out[(b, h, c)] = cb * ch * cc
        return out


def _straightening_rules(P):
    """The three exchange rules as maps, all built from the ambient R."""
    C, B = P.C, P.B
    amb = P.ambient
    H = amb.H
    fld = P.field
    if B.antipode is None or C.antipode is None:
        raise MissingAntipode("the double is built for Hopf pairings only")
    # h·b -> (h1▷b) h2
    hb = tensor_map(H.comult, identity((B.carrier,), fld)).permute_outputs((0, 2, 1)).then(B.action, 0)
    # c·h -> h2 (S^-1(h1)▷c)
    ch = tensor_map(identity((C.carrier,), fld), H.comult).then(H.antipode_inverse, 1)
    ch = ch.permute_outputs((2, 1, 0)).then(C.action, 1)
    # c·b -> R1^-(1) (R2^-(1)▷b2) (R2^-(2)▷c2) R(2) ev(R1^-(2)▷c1, R(1)▷S b3) ev(c3, b1)
    d3C = C.comult.then(C.comult, 1)
    d3B = B.comult.then(B.comult, 1)
    X = tensor_map(d3C, d3B)                       # c1 c2 c3 b1 b2 b3
    X = X.then(P.ev, 2)                            # c1 c2 b2 b3
    X = X.then(B.antipode, 3)
    X = X.then(amb.R, 3)                           # c1 c2 b2 r1 r2 Sb3
    X = X.permute_outputs((0, 1, 2, 4, 3, 5)).then(B.action, 4)   # c1 c2 b2 r2 B
    X = X.then(amb.R_inv, 0)                       # x1 x2 c1 c2 b2 r2 B
    X = X.then(C.action, 1)                        # x1 C c2 b2 r2 B
    X = X.permute_outputs((0, 2, 3, 4, 1, 5)).then(P.ev, 4)       # x1 c2 b2 r2
    X = X.then(amb.R_inv, 1)                       # x1 y1 y2 c2 b2 r2
    X = X.permute_outputs((0, 1, 4, 2, 3, 5))      # x1 y1 b2 y2 c2 r2
    X = X.then(B.action, 1).then(C.action, 2)      # x1 B C r2
    return hb, ch, X


# ---------------------------------------------------------------------------
# the double

@dataclass
class DoubleAlgebra:
    hopf: HopfData
    pairing: Pairing
    ambient: Ambient
    embed_C: MultiMap
    embed_H: MultiMap
    embed_B: MultiMap
    split: MultiMap
    engine: Straightener
    to_engine: MultiMap
    engine_space: Space
    closed_antipode: MultiMap
    R: MultiMap = None
    report: Report = None

    @property
    def carrier(self):
        return self.hopf.carrier

    @property
    def dim(self):
        return self.hopf.carrier.dim

    @property
    def mult(self):
        return self.hopf.mult

    def straightening(self):
        """b·c rewritten in the C⊗H⊗B presentation, as a map B⊗C -> C⊗H⊗B."""
        bc = _times(self.embed_B, self.embed_C, self.mult)
        return compose(self.split, bc)

    def engine_mult(self):
        """The multiplication in the engine's b·h·c basis."""
        T = self.to_engine
        Ti = invert(T)
        return compose(T, self.mult).after(Ti, 0).after(Ti, 1)

    def quasitriangular(self):
        if self.R is None:
            raise ValueError("no R-matrix: the pairing has no coevaluation")
        return QuasiTriangular(self.hopf, self.R)


def _product_rows(engine, T_cols, Tinv, basis, rows, nd):
    """Products x*y for x in `rows`, every y, in the C⊗H⊗B basis."""
    out = {}
    for x in rows:
        start = T_cols[x]
        for y in range(nd):
            c, h, b = basis[y]
            cur = start
            for letter in ((_C, c), (_H, h), (_B, b)):
                if letter in engine.droppable:
                    continue
                nxt = {}
                for (b0, h0, c0), v in cur.items():
                    sub = engine.normalize(((_B, b0), (_H, h0), (_C, c0), letter))
                    for k, w in sub.items():
                        prev = nxt.get(k)
                        nxt[k] = v * w if prev is None else prev + v * w
                cur = {k: v for k, v in nxt.items() if v}
            res = {}
            for k, v in cur.items():
                for z, w in Tinv.get(k, ()):
                    prev = res.get(z)
                    res[z] = v * w if prev is None else prev + v * w
            for z, v in res.items():
                if v:
                    out[((z,), (x, y))] = v
    return out


def _worker(args):
    return _product_rows(*args)


def drinfeld_double(P, max_rewrite_steps=10 ** 6, jobs=1, check=True, name="Drin"):
    """Drin_H(C, B) on C⊗H⊗B, verified as a Hopf algebra before it is returned."""
    if not P.hopf:
        raise MissingAntipode("the double needs Hopf algebras on both sides of the pairing")
    C, B = P.C, P.B
    amb = P.ambient
    H = amb.H
    fld = P.field
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))
    hb, ch, cb = _straightening_rules(P)
    engine = Straightener({_B: B.mult, _H: H.mult, _C: C.mult},
                          {_B: B.unit, _H: H.unit, _C: C.unit}, hb, ch, cb, fld, max_rewrite_steps)
    cs, hs, bs = C.carrier, H.carrier, B.carrier
    nc, nh, nb = cs.dim, hs.dim, bs.dim
    D = flat_space((cs, hs, bs), name)
    E = Space(f"{name}-bhc", nb * nh * nc,
              tuple(f"{bl}|{hl}|{cl}" for bl in bs.basis_labels for hl in hs.basis_labels
                    for cl in cs.basis_labels))
    basis = [(c, h, b) for c in range(nc) for h in range(nh) for b in range(nb)]

    def eidx(b, h, c):
        return (b * nh + h) * nc + c

    T_cols = []
    tent = {}
    for x, (c, h, b) in enumerate(basis):
        nf = engine.normalize(((_C, c), (_H, h), (_B, b)))
        T_cols.append(nf)
        for (b0, h0, c0), v in nf.items():
            tent[((eidx(b0, h0, c0),), (x,))] = v
    T = MultiMap((D,), (E,), tent, fld, check=False)
    try:
        Ti = invert(T)
    except NotInvertible as exc:
        raise DoubleConstructionError("ordered monomials c·h·b are not a basis") from exc
    Tinv = {}
    for ((z,), (e,)), v in Ti.entries.items():
        b0, rest = divmod(e, nh * nc)
        h0, c0 = divmod(rest, nc)
        Tinv.setdefault((b0, h0, c0), []).append((z, v))
    nd = len(basis)
    if jobs and jobs > 1:
        chunks = [list(range(k, nd, jobs)) for k in range(jobs)]
        ent = {}
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_worker, [(engine, T_cols, Tinv, basis, ch_, nd) for ch_ in chunks]):
                ent.update(part)
    else:
        ent = _product_rows(engine, T_cols, Tinv, basis, range(nd), nd)
    mult = MultiMap((D, D), (D,), ent, fld, check=False)

    mg = merge_map((cs, hs, bs), D, fld)
    split = mg.transpose()
    uC, uH, uB = C.unit, H.unit, B.unit
    iC = compose(mg, tensor_map(identity((cs,), fld), uH, uB))
    iH = compose(mg, tensor_map(uC, identity((hs,), fld), uB))
    iB = compose(mg, tensor_map(uC, uH, identity((bs,), fld)))
    unit = compose(mg, tensor_map(uC, uH, uB))
    counit = tensor_map(C.counit, H.counit, B.counit).after(split, 0)

    # coproduct on generators, extended multiplicatively
    dH = H.comult.then(iH, 0).then(iH, 1)
    dB = B.comult.then(amb.R, 1).permute_outputs((0, 2, 1, 3)).then(B.action, 2)   # b1 r2 B
    dB = dB.then(iB, 0).then(iH, 1).then(mult, 0).then(iB, 1)
    dC = C.comult.then(amb.R_inv, 0).permute_outputs((0, 3, 1, 2)).then(C.action, 2)  # x1 c2 C
    dC = dC.then(iH, 0).then(iC, 1).then(mult, 0).then(iC, 1)
    comult = _pair_product(_pair_product(dC, dH, mult, mult), dB, mult, mult).after(split, 0)

    # closed antipode: S(chb) = S(b) S(h) S(c)
    sH = compose(iH, H.antipode)
    sB = B.antipode.then(amb.R, 0).permute_outputs((1, 0, 2)).then(B.action, 1)   # r2 B
    sB = sB.then(H.antipode, 0).then(iH, 0).then(iB, 1).then(mult, 0)
    sC = C.antipode_inverse.then(amb.R_inv, 0).then(C.action, 1)                  # x1 C
    sC = sC.then(H.antipode, 0).then(iH, 0).then(iC, 1).then(mult, 0)
    S = tensor_map(sC, sH, sB).permute_outputs((2, 1, 0)).then(mult, 0).then(mult, 0).after(split, 0)

    rep = Report(f"double {name}")
    try:
        S_inv = invert(S)
    except NotInvertible:
        S_inv = None
        rep.add(AxiomResult("closed antipode invertible", False))
    Dh = HopfData(D, mult, unit, comult, counit, S, S_inv)
    out = DoubleAlgebra(Dh, P, amb, iC, iH, iB, split, engine, T, E, S)
    if P.coev is not None:
        R = tensor_map(amb.R, P.coev).permute_outputs((0, 3, 2, 1))    # r1 f e r2
        R = R.then(iH, 0).then(iC, 1).then(mult, 0).then(iB, 1).then(iH, 2).then(mult, 1)
        out.R = R
    if check:
        rep.extend(check_double(out), "")
        out.report = rep
        if not rep.ok:
            raise DoubleConstructionError(f"the double {name} fails its checks:\n{rep.to_text()}", rep)
    else:
        out.report = rep
    return out


def check_double(Dbl, solve_antipode=True):
    """Hopf axioms, triangular decomposition, embeddings, relations and R-matrix."""
    D = Dbl.hopf
    P = Dbl.pairing
    H = Dbl.ambient.H
    rep = Report("double")
    rep.extend(check_hopf(D), "hopf: ")
    tri = _times(_times(Dbl.embed_C, Dbl.embed_H, D.mult), Dbl.embed_B, D.mult)
    rep.add(compare("triangular decomposition c·h·b", tri, Dbl.split.transpose()))
    for kind, e, X in (("C", Dbl.embed_C, P.C), ("H", Dbl.embed_H, H), ("B", Dbl.embed_B, P.B)):
        rep.add(compare(f"{kind} is a subalgebra", compose(e, X.mult), _times(e, e, D.mult)))
        rep.add(compare(f"{kind} unit", compose(e, X.unit), D.unit))
    for r in defining_relations(Dbl):
        rep.add(r)
    if solve_antipode:
        try:
            solved = find_antipode(D)
            rep.add(compare("solved antipode = closed formula", solved, Dbl.closed_antipode))
        except NotHopf as exc:
            rep.add(AxiomResult("solved antipode exists", False, detail=str(exc)))
    if Dbl.R is not None:
        rep.extend(check_quasitriangular(Dbl.quasitriangular()), "R-matrix: ")
    return rep


def _act_R_inv_pair(amb, B, C):
    """(b, c) -> (R^-(1)▷b, R^-(2)▷c)."""
    return tensor_map(amb.R_inv, identity((B.carrier, C.carrier), B.field)) \
        .permute_outputs((0, 2, 1, 3)).then(B.action, 0).then(C.action, 1)


def defining_relations(Dbl):
    """Both sides of the generator relations, evaluated in the double."""
    P = Dbl.pairing
    C, B = P.C, P.B
    amb = Dbl.ambient
    H = amb.H
    m = Dbl.mult
    iC, iH, iB = Dbl.embed_C, Dbl.embed_H, Dbl.embed_B
    out = []
    # h x = (h1▷x) h2
    for kind, X, iX in (("b", B, iB), ("c", C, iC)):
        lhs = _times(iH, iX, m)
        rhs = tensor_map(H.comult, identity((X.carrier,), P.field)).permute_outputs((0, 2, 1))
        rhs = rhs.then(X.action, 0).then(iX, 0).then(iH, 1).then(m, 0)
        out.append(compare(f"h{kind} = (h1▷{kind})h2", lhs, rhs))
    # (R^-(1)▷b2)(R^-(2)▷c1) ev(c2, b1) = R^-(1) c2 b1 R(2) ev(R^-(2)▷c1, R(1)▷b2)
    dd = tensor_map(C.comult, B.comult)             # c1 c2 b1 b2
    lhs = dd.then(P.ev, 1)                          # c1 b2
    lhs = lhs.permute_outputs((1, 0)).then(_act_R_inv_pair(amb, B, C), 0)
    lhs = lhs.then(iB, 0).then(iC, 1).then(m, 0)
    rhs = dd.then(amb.R_inv, 0).then(amb.R, 6)     # x1 x2 c1 c2 b1 b2 r1 r2
    rhs = rhs.permute_outputs((0, 3, 4, 7, 1, 2, 6, 5))
    rhs = rhs.then(C.action, 4).then(B.action, 5).then(P.ev, 4)   # x1 c2 b1 r2
    rhs = rhs.then(iH, 0).then(iC, 1).then(iB, 2).then(iH, 3)
    rhs = rhs.then(m, 0).then(m, 0).then(m, 0)
    out.append(compare("cross relation", lhs, rhs))
    return out


def primitive_indices(X):
    """Basis vectors x with Δx = x⊗1 + 1⊗x (unit must be a basis vector)."""
    k = _unit_letter(X.unit)
    if k is None:
        return []
    out = []
    one = X.field.one()
    for x in range(X.carrier.dim):
        if x == k:
            continue
        col = X.comult.column((x,))
        want = {(x, k): one, (k, x): one} if x != k else {}
        if col == want:
            out.append(x)
    return out


def commutator_relations(Dbl, cs=None, bs=None):
    """The two braided-commutator forms of the c·b relation on primitive generators.

    [c,b]_{Ψ^-1} = ev(c,b) - R^-(1)R(2) ev(R^-(2)▷c, R(1)▷b)
    [b,c]_Ψ     = R(2)_(1)R^-(1) ev(R^-(2)R(2)_(2)▷c, R(1)▷b) - ev(R(2)▷c, R(1)▷b)
    """
    P = Dbl.pairing
    C, B = P.C, P.B
    amb = Dbl.ambient
    H = amb.H
    m = Dbl.mult
    fld = P.field
    iC, iH, iB = Dbl.embed_C, Dbl.embed_H, Dbl.embed_B
    cs = primitive_indices(C) if cs is None else cs
    bs = primitive_indices(B) if bs is None else bs
    unitD = Dbl.hopf.unit
    ev = P.ev
    idCB = identity((C.carrier, B.carrier), fld)
    # maps with inputs (c, b) -> D
    cb = _times(iC, iB, m)
    bc = _times(iB, iC, m).permute_inputs((1, 0))
    psi_inv_cb = _act_R_inv_pair(amb, B, C).after(idCB.permute_outputs((1, 0)), 0)  # (c,b)->(b',c')
    braided_inv = psi_inv_cb.then(iB, 0).then(iC, 1).then(m, 0)
    comm1_lhs = cb - braided_inv
    Z = tensor_map(amb.R_inv, amb.R, idCB)          # x1 x2 r1 r2 c b
    Z = Z.permute_outputs((0, 3, 1, 4, 2, 5)).then(C.action, 2).then(B.action, 3)  # x1 r2 C B
    Z = Z.then(ev, 2).then(iH, 0).then(iH, 1).then(m, 0)
    comm1_rhs = tensor_map(ev, unitD) - Z
    # Ψ(b⊗c) = R(2)▷c ⊗ R(1)▷b, multiplied in D
    Y = tensor_map(amb.R, idCB).permute_outputs((1, 2, 0, 3)).then(C.action, 0).then(B.action, 1)  # C B
    braided = Y.then(iC, 0).then(iB, 1).then(m, 0)
    comm2_lhs = bc - braided
    W = tensor_map(amb.R, amb.R_inv, idCB)          # r1 r2 x1 x2 c b
    W = W.then(H.comult, 1)                         # r1 r21 r22 x1 x2 c b
    W = W.permute_outputs((0, 1, 3, 4, 2, 5, 6)).then(H.mult, 3)  # r1 r21 x1 (x2 r22) c b
    W = W.then(C.action, 3)                         # r1 r21 x1 C b
    W = W.permute_outputs((1, 2, 3, 0, 4)).then(B.action, 3)       # r21 x1 C B
    W = W.then(ev, 2).then(iH, 0).then(iH, 1).then(m, 0)
    V = Y.then(ev, 0)
    comm2_rhs = W - tensor_map(V, unitD)
    out = []
    for c in cs:
        for b in bs:
            tag = f"({C.carrier.basis_labels[c]}, {B.carrier.basis_labels[b]})"
            pick = MultiMap((), (C.carrier, B.carrier), {((c, b), ()): 1}, fld)
            out.append(compare(f"[c,b]_Ψ^-1 form {tag}", compose(comm1_lhs, pick), compose(comm1_rhs, pick)))
            out.append(compare(f"[b,c]_Ψ form {tag}", compose(comm2_lhs, pick), compose(comm2_rhs, pick)))
    return out


def heisenberg_relations(cp, P, cs=None, bs=None):
    """In Heis_H(C,B): [c,b]_{Ψ^-1} = ev(c,b) on primitive generators."""
    C, B = P.C, P.B
    amb = P.ambient
    fld = P.field
    m = cp.mult
    iC, iB = cp.embeddings["C"], cp.embeddings["A"]
    cs = primitive_indices(C) if cs is None else cs
    bs = primitive_indices(B) if bs is None else bs
    cb = _times(iC, iB, m)
    idCB = identity((C.carrier, B.carrier), fld)
    twisted = _act_R_inv_pair(amb, B, C).after(idCB.permute_outputs((1, 0)), 0)
    twisted = twisted.then(iB, 0).then(iC, 1).then(m, 0)
    lhs = cb - twisted
    rhs = tensor_map(P.ev, cp.unit)
    out = []
    for c in cs:
        for b in bs:
            tag = f"({C.carrier.basis_labels[c]}, {B.carrier.basis_labels[b]})"
            pick = MultiMap((), (C.carrier, B.carrier), {((c, b), ()): 1}, fld)
            out.append(compare(f"[c,b]_Ψ^-1 = ev(c,b) {tag}", compose(lhs, pick), compose(rhs, pick)))
    return out


# ---------------------------------------------------------------------------
# the classical double

def dual_pairing(Bh, ambient=None):
    """cop-B and cop-B* in the trivial category, with ev(h, f) = f(h)."""
    if getattr(Bh, "antipode", None) is None:
        Bh = HopfData.from_bialgebra(Bh)
    fld = Bh.field
    amb = ambient or trivial_ambient(fld)
    C = as_braided(co_opposite(Bh), amb)
    Bs = as_braided(co_opposite(dual_hopf(Bh)), amb)
    n = Bh.carrier.dim
    ev = MultiMap((C.carrier, Bs.carrier), (), {((), (i, i)): 1 for i in range(n)}, fld)
    return with_coevaluation(Pairing(C, Bs, ev))


def classical_double(Bh, max_rewrite_steps=10 ** 6, jobs=1, check=True, name=None):
    """Drin_k(B) := Drin_k(cop-B, cop-B*), the usual quantum double."""
    P = dual_pairing(Bh)
    return drinfeld_double(P, max_rewrite_steps, jobs, check, name or f"D({Bh.carrier.name})")


# ---------------------------------------------------------------------------
# modules and comodule algebras over the double

def yd_to_drin_module(V, Dbl):
    """A left YD module over B as a module over the double.

    B and H act as before; c▷v = ev(c, v(-1)) v(0).
    """
    P = Dbl.pairing
    if V.over is not P.B or V.side != "left":
        raise ValueError("expected a left YD module over the paired B")
    fld = P.field
    aC = coaction_to_action(P, V.coaction, V.module, "comod_B")
    sp = (P.C.carrier, Dbl.ambient.hspace, P.B.carrier) + tuple(V.spaces)
    Z = identity(sp, fld).then(V.action, 2).then(V.module.action, 1).then(aC, 0)
    return plain_module(Dbl.hopf, V.spaces, Z.after(Dbl.split, 0))


@dataclass
class PlainModule:
    """A module over an ordinary algebra (no braiding involved)."""
    over: HopfData
    spaces: tuple
    action: MultiMap


def plain_module(Hh, spaces, action):
    return PlainModule(Hh, tuple(spaces), action)


def check_plain_module(M, name="module"):
    A = M.over
    rep = Report(name)
    a = M.action
    rep.add(compare("action associative", a.after(A.mult, 0), a.after(a, 1)))
    rep.add(compare("action unital", a.after(A.unit, 0), identity(M.spaces, A.field)))
    return rep


def diagonal_action(M1, M2):
    """x▷(v⊗w) = x1▷v ⊗ x2▷w through the ordinary coproduct."""
    A = M1.over
    n1, n2 = len(M1.spaces), len(M2.spaces)
    Z = tensor_map(A.comult, identity(M1.spaces + M2.spaces, A.field))
    perm = [0] + list(range(2, 2 + n1)) + [1] + list(range(2 + n1, 2 + n1 + n2))
    Z = Z.permute_outputs(perm).then(M1.action, 0).then(M2.action, n1)
    return PlainModule(A, M1.spaces + M2.spaces, Z)


def check_drin_module_functor(V1, V2, Dbl, name="YD -> double modules"):
    rep = Report(name)
    M1, M2 = yd_to_drin_module(V1, Dbl), yd_to_drin_module(V2, Dbl)
    rep.extend(check_plain_module(M1), "V1: ")
    rep.extend(check_plain_module(M2), "V2: ")
    M12 = yd_to_drin_module(yd_tensor(V1, V2), Dbl)
    rep.add(compare("tensor product of YD modules = diagonal module", M12.action,
                    diagonal_action(M1, M2).action))
    return rep


@dataclass
class PlainComoduleAlgebra:
    algebra: AlgebraData
    coaction: MultiMap
    over: HopfData


def check_plain_comodule_algebra(A, name="comodule algebra"):
    D = A.over
    X = A.algebra
    d = A.coaction
    rep = Report(name)
    for r in check_algebra(X).results:
        rep.add(r)
    rep.add(compare("coaction coassociative", d.then(D.comult, 0), d.then(d, 1)))
    rep.add(compare("coaction counital", d.then(D.counit, 0), identity((X.carrier,), X.field)))
    rep.add(compare("coaction multiplicative", X.mult.then(d, 0),
                    _pair_product(d, d, D.mult, X.mult)))
    rep.add(compare("coaction unital", X.unit.then(d, 0), tensor_map(D.unit, X.unit)))
    return rep


def _delta_b_into(Dbl, P, target_embed, action, coact):
    """a(-1) R(2) ⊗ (R(1)▷a(0)) for a left B-coaction."""
    amb = Dbl.ambient
    n = len(coact.codomain) - 1
    Z = coact.then(amb.R, 1)                        # b r1 r2 a...
    perm = [0, 2, 1] + list(range(3, 3 + n))
    Z = Z.permute_outputs(perm).then(action, 2)    # b r2 A
    return Z.then(Dbl.embed_B, 0).then(Dbl.embed_H, 1).then(Dbl.mult, 0).then(target_embed, 1)


def _delta_c_into(Dbl, P, target_embed):
    """R^-(1) c2 ⊗ (R^-(2)▷c1)."""
    C = P.C
    amb = Dbl.ambient
    Z = C.comult.then(amb.R_inv, 0).permute_outputs((0, 3, 1, 2)).then(C.action, 2)
    return Z.then(Dbl.embed_H, 0).then(Dbl.embed_C, 1).then(Dbl.mult, 0).then(target_embed, 1)


def _delta_h_into(Dbl, target_embed):
    H = Dbl.ambient.H
    return H.comult.then(Dbl.embed_H, 0).then(target_embed, 1)


def drin_comod_algebra_left(A, Dbl, name=None):
    """A⋊cop-C⋊H as a left comodule algebra over Drin_H(C, B).

    δ(a) = a(-1)R(2) ⊗ R(1)▷a(0),  δ(c) = R^-(1)c2 ⊗ R^-(2)▷c1,  δ(h) = h1⊗h2.
    """
    P = Dbl.pairing
    cp = cross_product_comod(A, P, with_H=True, name=name or "A#C#H")
    X = A.algebra.module
    if len(X.spaces) != 1:
        raise ValueError("comodule algebras on a single space only")
    dA = _delta_b_into(Dbl, P, cp.embeddings["A"], X.action, A.coaction)
    dC = _delta_c_into(Dbl, P, cp.embeddings["C"])
    dH = _delta_h_into(Dbl, cp.embeddings["H"])
    coact = _pair_product(_pair_product(dA, dC, Dbl.mult, cp.mult), dH, Dbl.mult, cp.mult)
    coact = coact.after(cp.merge.transpose(), 0)
    return PlainComoduleAlgebra(cp.algebra, coact, Dbl.hopf), cp


@dataclass
class RightComoduleAlgebra:
    algebra: AlgebraObject
    coaction: MultiMap
    over: BraidedBialgebra

    @property
    def module(self):
        return self.algebra.module


def check_right_comodule_algebra(A, name="right comodule algebra"):
    Cb = A.over
    alg = A.algebra
    X = alg.module
    d = A.coaction
    rep = Report(name)
    _algebra_checks(alg, rep)
    for r in check_right_coaction(d, Cb.comult, Cb.counit, X, "coaction"):
        rep.add(r)
    rep.add(compare("coaction is multiplicative", alg.mult.then(d, 0),
                    right_tensor_coaction(Cb, X, d, X, d).then(alg.mult, 0)))
    rep.add(compare("coaction preserves unit", alg.unit.then(d, 0), tensor_map(alg.unit, Cb.unit)))
    rep.add(equivariance(d, [X], [X, Cb.module], "coaction is H-linear"))
    return rep


def regular_right_comodule_algebra(Cb):
    from .braided import algebra_object
    return RightComoduleAlgebra(algebra_object(Cb), Cb.comult, Cb)


def trivial_right_comodule_algebra(Cb, A=None):
    from .braided import algebra_object
    alg = algebra_object(Cb) if A is None else A
    d = tensor_map(identity(alg.spaces, Cb.field), Cb.unit)
    return RightComoduleAlgebra(alg, d, Cb)


def induced_module_algebra(A, P):
    """A right C-comodule algebra becomes a left B-module algebra."""
    X = A.module
    a = coaction_to_action(P, A.coaction, X, "right_comod_C")
    return ModuleAlgebra(A.algebra, a, P.B, "left")


def drin_comod_algebra_right(A, Dbl, name=None):
    """A'⋊B⋊H as a left comodule algebra over Drin_H(C, B), for a right C-comodule algebra A'.

    δ(a) = R^-(1)a(-1) ⊗ R^-(2)▷a(0),  δ(b) = b1R(2) ⊗ R(1)▷b2,  δ(h) = h1⊗h2.
    """
    P = Dbl.pairing
    amb = Dbl.ambient
    MA = induced_module_algebra(A, P)
    sm = smash_product(MA, name=name or "A#B")
    cp = _with_H(sm.factors, ("A", "B"), sm.layered_mult, sm.layered_unit,
                 tensor_action([A.module, P.B.module], amb), [A.algebra.unit, P.B.unit], amb,
                 name or "A#B#H")
    X = A.module
    if len(X.spaces) != 1:
        raise ValueError("comodule algebras on a single space only")
    # a(0) ⊗ a(-1) -> R^-(1) a(-1) ⊗ R^-(2)▷a(0)
    Z = A.coaction.then(amb.R_inv, 0)               # x1 x2 a c
    Z = Z.permute_outputs((0, 3, 1, 2)).then(X.action, 2)   # x1 c A
    dA = Z.then(Dbl.embed_H, 0).then(Dbl.embed_C, 1).then(Dbl.mult, 0).then(cp.embeddings["A"], 1)
    B = P.B
    dB = B.comult.then(amb.R, 1).permute_outputs((0, 2, 1, 3)).then(B.action, 2)
    dB = dB.then(Dbl.embed_B, 0).then(Dbl.embed_H, 1).then(Dbl.mult, 0).then(cp.embeddings["B"], 1)
    dH = _delta_h_into(Dbl, cp.embeddings["H"])
    coact = _pair_product(_pair_product(dA, dB, Dbl.mult, cp.mult), dH, Dbl.mult, cp.mult)
    coact = coact.after(cp.merge.transpose(), 0)
    return PlainComoduleAlgebra(cp.algebra, coact, Dbl.hopf), cp, MA


# ---------------------------------------------------------------------------
# bosonization

def bosonize(B, name=None):
    """The Radford biproduct B⋊H on B⊗H.

    (b⊗h)(b'⊗h') = b(h1▷b') ⊗ h2h',   Δ(b⊗h) = b1 R(2)h1 ⊗ (R(1)▷b2) h2.
    """
    amb = B.ambient
    H = amb.H
    fld = B.field
    bs, hs = B.carrier, H.carrier
    spaces = (bs, hs)
    Z = identity(spaces + spaces, fld).then(H.comult, 1)      # b h1 h2 b' h'
    Z = Z.permute_outputs((0, 1, 3, 2, 4)).then(B.action, 1)  # b B h2 h'
    Z = Z.then(B.mult, 0).then(H.mult, 1)
    u = tensor_map(B.unit, H.unit)
    target = flat_space(spaces, name or f"{bs.name}#{hs.name}")
    alg, mg = _flatten_algebra(spaces, Z, u, target)
    sp = mg.transpose()
    D = tensor_map(B.comult, H.comult)                         # b1 b2 h1 h2
    D = D.then(amb.R, 2)                                       # b1 b2 r1 r2 h1 h2
    D = D.permute_outputs((0, 3, 4, 2, 1, 5)).then(H.mult, 1)  # b1 (r2 h1) r1 b2 h2
    D = D.then(B.action, 2)                                    # b1 H B h2
    comult = D.then(mg, 0).then(mg, 1)
    comult = compose(comult, sp)
    counit = compose(tensor_map(B.counit, H.counit), sp)
    bi = HopfData(target, alg.mult, alg.unit, comult, counit)
    try:
        S = find_antipode(bi)
        bi.antipode = S
        bi.antipode_inverse = invert(S)
    except (NotHopf, NotInvertible):
        pass
    return bi
