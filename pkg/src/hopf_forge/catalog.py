"""
Constructors for the concrete Hopf algebras, braided Hopf algebras,
pairings, modules and cocycles used throughout the package.  Every
constructor checks its output before returning it.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .groups import FiniteGroup, cyclic_group, direct_product, symmetric_group
from .hopf import (
    DualQuasiTriangular, HopfData, QuasiTriangular, check_dual_quasitriangular,
    check_hopf, check_quasitriangular, find_antipode,
)
from .scalars import cyclotomic, primitive_root, rationals
from .tensor import MultiMap, Space, invert


class CatalogError(ValueError):
    pass


def _require(report):
    if not report.ok:
        raise CatalogError(report.to_text())
    return report


def _hopf(V, mult, unit, comult, counit, antipode, field, check=True):
    def mk(ent, dom, cod):
        return MultiMap(dom, cod, ent, field)
    m = mk(mult, (V, V), (V,))
    u = mk(unit, (), (V,))
    d = mk(comult, (V,), (V, V))
    e = mk(counit, (V,), ())
    S = mk(antipode, (V,), (V,)) if antipode is not None else None
    H = HopfData(V, m, u, d, e, S, invert(S) if S is not None else None)
    if S is None:
        H.antipode = find_antipode(H)
        H.antipode_inverse = invert(H.antipode)
    if check:
        _require(check_hopf(H, name=f"{V.name}"))
    return H


# ---------------------------------------------------------------------------
# groups

def as_group(G):
    if isinstance(G, FiniteGroup):
        return G
    return FiniteGroup(G)


def group_algebra(G, field=None, name=None):
    """kG in the group-like basis."""
    G = as_group(G)
    field = field or rationals()
    n = G.order
    V = Space(name or f"k{G.name}", n, G.labels)
    mult = {((G.mul(a, b),), (a, b)): 1 for a in range(n) for b in range(n)}
    unit = {((G.e,), ()): 1}
    comult = {((g, g), (g,)): 1 for g in range(n)}
    counit = {((), (g,)): 1 for g in range(n)}
    S = {((G.inv[g],), (g,)): 1 for g in range(n)}
    return _hopf(V, mult, unit, comult, counit, S, field)


def functions_on_group(G, field=None, name=None):
    """k[G] in the delta basis."""
    G = as_group(G)
    field = field or rationals()
    n = G.order
    V = Space(name or f"k[{G.name}]", n, tuple(f"d_{lab}" for lab in G.labels))
    mult = {((g,), (g, g)): 1 for g in range(n)}
    unit = {((g,), ()): 1 for g in range(n)}
    comult = {((a, b), (G.mul(a, b),)): 1 for a in range(n) for b in range(n)}
    counit = {((), (G.e,)): 1}
    S = {((G.inv[g],), (g,)): 1 for g in range(n)}
    return _hopf(V, mult, unit, comult, counit, S, field)


Z2 = lambda: cyclic_group(2)  # noqa: E731
Z3 = lambda: cyclic_group(3)  # noqa: E731
S3 = lambda: symmetric_group(3)  # noqa: E731


def klein_four():
    return direct_product(cyclic_group(2), cyclic_group(2))


# ---------------------------------------------------------------------------
# small pointed Hopf algebras

def sweedler(field=None):
    """Sweedler's algebra: g^2 = 1, x^2 = 0, xg = -gx, Δx = x⊗1 + g⊗x."""
    return taft(2, field=field, name="Sweedler")


def taft(n, field=None, name=None):
    """Taft algebra on the basis x^j g^i: g^n = 1, x^n = 0, gx = z xg, Δx = x⊗1 + g⊗x."""
    if n < 2:
        raise CatalogError("taft(n) needs n >= 2")
    field = field or (rationals() if n == 2 else cyclotomic(n))
    z = primitive_root(field) if n > 2 else field(-1)
    if z ** n != 1 or any(z ** k == 1 for k in range(1, n)):
        raise CatalogError(f"{field} has no primitive {n}-th root as its generator")
    labels = []
    for j in range(n):
        for i in range(n):
            xs = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
            gs = "" if i == 0 else ("g" if i == 1 else f"g^{i}")
            labels.append((xs + gs) or "1")
    V = Space(name or f"Taft{n}", n * n, labels)

    def idx(j, i):
        return j * n + (i % n)

    # (x^j g^i)(x^k g^l) = z^{ik} x^{j+k} g^{i+l}, from g x = z x g
    mult = {}
    for j in range(n):
        for i in range(n):
            for k in range(n):
                for l in range(n):
                    if j + k < n:
                        mult[((idx(j + k, i + l),), (idx(j, i), idx(k, l)))] = z ** (i * k)
    unit = {((idx(0, 0),), ()): 1}
    # Δ(x^j g^i) = sum_r binom_z(j, r) x^r g^{j-r+i} ⊗ x^{j-r} g^i
    comult = {}
    for j in range(n):
        for i in range(n):
            for r in range(j + 1):
                c = q_binomial(j, r, z)
                if c:
                    comult[((idx(r, j - r + i), idx(j - r, i)), (idx(j, i),))] = c
    counit = {((), (idx(0, i),)): 1 for i in range(n)}
    return _hopf(V, mult, unit, comult, counit, None, field)


def q_factorial(k, q):
    out = q.field.one()
    for a in range(1, k + 1):
        out = out * q_integer(a, q)
    return out


def q_integer(a, q):
    s = q.field.zero()
    for b in range(a):
        s = s + q ** b
    return s


def q_binomial(n, k, q):
    """Gaussian binomial coefficient via the q-Pascal rule (no division)."""
    if k < 0 or k > n:
        return q.field.zero()
    rows = [[q.field.one()]]
    for m in range(1, n + 1):
        prev = rows[-1]
        row = []
        for j in range(m + 1):
            left = prev[j - 1] if j >= 1 else q.field.zero()
            right = prev[j] if j < m else q.field.zero()
            row.append(left + (q ** j) * right if j < m else left)
        rows.append(row)
    return rows[n][k]


# ---------------------------------------------------------------------------
# quasitriangular group algebras of cyclic groups

def cyclic_qt_candidate(n, c, field=None, root=None):
    """R = (1/n) sum_{a,b} root^{c a b} K^a ⊗ K^b on kZ/n."""
    field = field or (rationals() if n <= 2 else cyclotomic(n))
    H = group_algebra(cyclic_group(n), field)
    w = root if root is not None else (primitive_root(field) if n > 2 else field(-1 if n == 2 else 1))
    V = H.carrier
    inv_n = field(Fraction(1, n))
    ent = {((a, b), ()): inv_n * w ** (c * a * b) for a in range(n) for b in range(n)}
    R = MultiMap((), (V, V), ent, field)
    return H, R


def find_cyclic_r_matrices(n, field=None, root=None):
    """Brute force over exponent patterns c*a*b; returns the passing c values."""
    passing = []
    for c in range(n):
        H, R = cyclic_qt_candidate(n, c, field, root)
        try:
            QT = QuasiTriangular(H, R)
        except Exception:
            continue
        if check_quasitriangular(QT).ok:
            passing.append(c)
    return passing


def cyclic_qt(n, field=None, root=None):
    """kZ/n with R = (1/n) sum root^{-ab} K^a⊗K^b.

    `root` defaults to the generator z of cyclotomic(n).  With this sign the
    braiding on vectors of K-weights root^a, root^b is root^{ab} times the
    flip, and bosonizing the braided line gives the Taft algebra in its
    usual presentation.
    """
    if n == 1:
        field = field or rationals()
        H = group_algebra(cyclic_group(1), field)
        R = MultiMap((), (H.carrier, H.carrier), {((0, 0), ()): 1}, field)
        return QuasiTriangular(H, R)
    H, R = cyclic_qt_candidate(n, -1, field, root)
    QT = QuasiTriangular(H, R)
    _require(check_quasitriangular(QT, name=f"cyclic_qt({n})"))
    return QT


def trivial_qt(field=None):
    return cyclic_qt(1, field or rationals())


def cyclic_dual_qt(n, field=None, root=None):
    """k[Z/n]... as the group algebra kZ/n with the bicharacter r(a,b) = root^{ab}."""
    field = field or (rationals() if n <= 2 else cyclotomic(n))
    H = group_algebra(cyclic_group(n), field)
    w = root if root is not None else (primitive_root(field) if n > 2 else field(-1))
    V = H.carrier
    r = MultiMap((V, V), (), {((), (a, b)): w ** (a * b) for a in range(n) for b in range(n)}, field)
    D = DualQuasiTriangular(H, r)
    _require(check_dual_quasitriangular(D, name=f"cyclic_dual_qt({n})"))
    return D


# ---------------------------------------------------------------------------
# crossed modules over groups

def _group_yd(G, field, labels, grading, act, side, name):
    from .braided import HModule, YDModule, as_braided, check_yd
    B = as_braided(group_algebra(G, field))
    amb = B.ambient
    V = Space(name, len(labels), labels)
    n = V.dim
    mod = HModule((V,), MultiMap((amb.hspace, V), (V,), {((v,), (0, v)): 1 for v in range(n)}, field), amb)
    if side == "left":
        action = MultiMap((B.carrier, V), (V,), {((act(g, v),), (g, v)): 1 for g in range(G.order) for v in range(n)}, field)
        coaction = MultiMap((V,), (B.carrier, V), {((grading[v], v), (v,)): 1 for v in range(n)}, field)
    else:
        action = MultiMap((V, B.carrier), (V,), {((act(g, v),), (v, g)): 1 for g in range(G.order) for v in range(n)}, field)
        coaction = MultiMap((V,), (V, B.carrier), {((v, grading[v]), (v,)): 1 for v in range(n)}, field)
    Y = YDModule(mod, B, action, coaction, side)
    _require(check_yd(Y, name=f"crossed module {name}"))
    return Y


def crossed_module_over_group(G, grading, action, labels=None, field=None, side="left", name="V", over=None):
    """A G-graded G-module as a YD module over kG.

    `grading[v]` is the degree of basis vector v and `action(g, v)` the
    index of g▷v (or v◁g for side="right").  Compatibility
    |g▷v| = g|v|g^-1 (resp. |v◁g| = g^-1|v|g) is checked and a violation
    raises CatalogError with a witness.
    """
    G = as_group(G)
    field = field or rationals()
    labels = labels or [f"{name}{i}" for i in range(len(grading))]
    for g in range(G.order):
        for v in range(len(grading)):
            w = action(g, v)
            want = G.conj(g, grading[v]) if side == "left" else G.conj(G.inv[g], grading[v])
            if grading[w] != want:
                raise CatalogError(f"grading not compatible: g={G.labels[g]}, v={labels[v]}")
    Y = _group_yd(G, field, labels, grading, action, side, name)
    if over is not None:
        Y = _rebase_yd(Y, over)
    return Y


def _rebase_yd(Y, B):
    from .braided import HModule, YDModule
    mod = HModule(Y.module.spaces, Y.module.action.with_spaces((B.ambient.hspace,) + Y.module.spaces, Y.module.spaces), B.ambient)
    if Y.side == "left":
        a = Y.action.with_spaces((B.carrier,) + Y.spaces, Y.spaces)
        d = Y.coaction.with_spaces(Y.spaces, (B.carrier,) + Y.spaces)
    else:
        a = Y.action.with_spaces(Y.spaces + (B.carrier,), Y.spaces)
        d = Y.coaction.with_spaces(Y.spaces, Y.spaces + (B.carrier,))
    return YDModule(mod, B, a, d, Y.side)


def adjoint_crossed_module(G, field=None, side="left", over=None):
    """kG graded by itself with the conjugation action."""
    G = as_group(G)
    if side == "left":
        act = G.conj
    else:
        def act(g, v):
            return G.conj(G.inv[g], v)
    return crossed_module_over_group(G, list(range(G.order)), act, list(G.labels), field, side, "ad", over)


def conjugacy_class_module(G, rep, field=None, side="left", over=None):
    """The span of the conjugacy class of `rep`, graded by itself."""
    G = as_group(G)
    cls = sorted({G.conj(g, rep) for g in range(G.order)})
    index = {c: k for k, c in enumerate(cls)}
    if side == "left":
        def act(g, v):
            return index[G.conj(g, cls[v])]
    else:
        def act(g, v):
            return index[G.conj(G.inv[g], cls[v])]
    labels = [f"[{G.labels[c]}]" for c in cls]
    return crossed_module_over_group(G, cls, act, labels, field, side, f"cl{G.labels[rep]}", over)


def permutation_crossed_module(G, perm_action, npoints, field=None, side="left", over=None):
    """A permutation representation placed in degree e."""
    G = as_group(G)
    grading = [G.e] * npoints
    return crossed_module_over_group(G, grading, perm_action, [f"p{i}" for i in range(npoints)], field, side,
                                     "perm", over)


def group_crossed_modules(G, field=None, side="left"):
    """A small family of crossed modules over one kG, all over the same braided kG."""
    from .braided import as_braided
    G = as_group(G)
    field = field or rationals()
    B = as_braided(group_algebra(G, field))
    out = [adjoint_crossed_module(G, field, side, over=B)]
    seen = set()
    for g in range(G.order):
        cls = frozenset(G.conj(h, g) for h in range(G.order))
        if g != G.e and cls not in seen:
            seen.add(cls)
            out.append(conjugacy_class_module(G, g, field, side, over=B))
    if G.order > 1:
        # left (resp. right) multiplication permutes G; placed in degree e
        if side == "left":
            out.append(permutation_crossed_module(G, G.mul, G.order, field, side, over=B))
        else:
            out.append(permutation_crossed_module(G, lambda g, v: G.mul(v, g), G.order, field, side, over=B))
    return B, out


# ---------------------------------------------------------------------------
# the braided line k[x]/(x^n) over kZ/n and its dual

def braided_line(n, qt=None, root=None, weight=1, symbol="x"):
    """k[x]/(x^n) with x primitive, K▷x = root^weight x, in modules over cyclic_qt.

    The braiding on x^i ⊗ x^j is root^{weight^2 ij} times the flip, so the
    coproduct is Δ(x^j) = Σ_r binom_q(j, r) x^r ⊗ x^{j-r} with q = root^{weight^2}.
    """
    from .braided import Ambient, BraidedBialgebra, check_braided_bialgebra, with_antipode
    if qt is None:
        qt = cyclic_qt(n)
    amb = Ambient(qt)
    field = qt.H.field
    order = qt.H.carrier.dim
    w = root if root is not None else (primitive_root(field) if order > 2 else field(-1))
    q = w ** (weight * weight)
    if any(q ** k == 1 for k in range(1, n)) or q ** n != 1:
        raise CatalogError(f"the braiding parameter is not a primitive {n}-th root of unity")
    labels = ["1", symbol] + [f"{symbol}^{j}" for j in range(2, n)]
    V = Space(f"{symbol}-line{n}", n, labels)
    mult = {((i + j,), (i, j)): 1 for i in range(n) for j in range(n) if i + j < n}
    unit = {((0,), ()): 1}
    comult = {}
    for j in range(n):
        for r in range(j + 1):
            comult[((r, j - r), (j,))] = q_binomial(j, r, q)
    counit = {((), (0,)): 1}
    action = {((j,), (a, j)): w ** (a * weight * j) for a in range(order) for j in range(n)}

    def mk(ent, dom, cod):
        return MultiMap(dom, cod, ent, field)
    B = BraidedBialgebra(V, mk(mult, (V, V), (V,)), mk(unit, (), (V,)), mk(comult, (V,), (V, V)),
                         mk(counit, (V,), ()), None, None, mk(action, (amb.hspace, V), (V,)), amb)
    with_antipode(B)
    _require(check_braided_bialgebra(B, name=f"braided line n={n}"))
    return B


# ---------------------------------------------------------------------------
# pairings and doubles

def braided_line_pairing(n, qt=None, root=None, scale=None):
    """The lines k[e]/(e^n) (weight 1) and k[f]/(f^n) (weight -1) paired by ev(f^a, e^b) = δ_ab c_a.

    ev(f, e) = scale (default 1); the multiplicativity rules force
    c_a = [a]_q! scale^a.
    """
    from .double import Pairing, check_pairing, with_coevaluation
    if qt is None:
        qt = cyclic_qt(n, root=root)
    field = qt.H.field
    order = qt.H.carrier.dim
    w = root if root is not None else (primitive_root(field) if order > 2 else field(-1))
    B = braided_line(n, qt=qt, root=w, weight=1, symbol="e")
    C = braided_line(n, qt=qt, root=w, weight=-1, symbol="f")
    lam = field(1) if scale is None else field(scale)
    q = w  # weight^2 = 1 on both lines
    ent = {((), (a, a)): q_factorial(a, q) * lam ** a for a in range(n)}
    ev = MultiMap((C.carrier, B.carrier), (), ent, field)
    P = with_coevaluation(Pairing(C, B, ev))
    _require(check_pairing(P, name=f"braided line pairing n={n}"))
    return P


def sl2_root_data(n):
    """(field, ζ, braiding root ζ^-2) for the small quantum group at a primitive 2n-th root ζ."""
    field = cyclotomic(2 * n)
    z = primitive_root(field)
    return field, z, z ** -2


def small_quantum_sl2(n, jobs=1, mirror=False):
    """Drin_{kZ/n}(k[f]/(f^n), k[e]/(e^n)) with ev(f, e) = 1/(ζ - ζ^-1).

    The braiding root is ζ^-2 (ζ^2 with `mirror`), so in the double
    f e - ζ^-2 e f = (1 - K^2-type element)/(ζ - ζ^-1).  Returns (double, pairing).
    """
    from .double import drinfeld_double
    if n < 2:
        raise CatalogError("small_quantum_sl2 needs n >= 2")
    field, z, root = sl2_root_data(n)
    if mirror:
        root = z ** 2
    qt = cyclic_qt(n, field=field, root=root)
    P = braided_line_pairing(n, qt=qt, root=root, scale=(z - z ** -1).inverse())
    return drinfeld_double(P, jobs=jobs, name=f"u_q(sl2),n={n}"), P


# ---------------------------------------------------------------------------
# group pairings, bicharacters and cycles

def group_pairing(G, field=None):
    """cop-k[G] paired with kG by ev(δ_x, g) = [x = g]; its double has basis g·δ_h."""
    from .braided import as_braided, trivial_ambient
    from .double import Pairing, check_pairing, with_coevaluation
    from .hopf import co_opposite
    G = as_group(G)
    field = field or rationals()
    amb = trivial_ambient(field)
    B = as_braided(group_algebra(G, field), amb)
    C = as_braided(co_opposite(functions_on_group(G, field)), amb)
    n = G.order
    ev = MultiMap((C.carrier, B.carrier), (), {((), (g, g)): 1 for g in range(n)}, field)
    P = with_coevaluation(Pairing(C, B, ev))
    _require(check_pairing(P, name=f"group pairing {G.name}"))
    return P


def _abelian_coordinates(orders):
    """Elements of Z/n1 x ... x Z/nk as exponent tuples, in direct_product order."""
    coords = [()]
    for n in orders:
        coords = [c + (a,) for c in coords for a in range(n)]
    return coords


def abelian_group(orders):
    G = cyclic_group(orders[0])
    for n in orders[1:]:
        G = direct_product(G, cyclic_group(n))
    return G


def _bicharacter_values(orders, matrix, field, root=None):
    """χ(a, b) = w^{Σ M_ij a_i b_j} with w a primitive lcm(orders)-th root."""
    from math import lcm
    N = lcm(*orders)
    if root is None:
        root = field(-1) if N == 2 else (field(1) if N == 1 else primitive_root(field))
    if N > 2 and root ** N != 1:
        raise CatalogError(f"{field} has no {N}-th root of unity as generator")
    from math import gcd
    coords = _abelian_coordinates(orders)
    k = len(orders)
    weight = [[N // gcd(orders[i], orders[j]) for j in range(k)] for i in range(k)]
    vals = {}
    for x, a in enumerate(coords):
        for y, b in enumerate(coords):
            e = sum(matrix[i][j] * weight[i][j] * a[i] * b[j] for i in range(k) for j in range(k))
            vals[(x, y)] = root ** (e % N)
    return vals


def group_bicharacter_cocycle(orders, matrix, field=None, name="σ"):
    """σ(g, h) = χ(g, h) on k[Z/n1 x ...] for the bicharacter with exponent matrix M.

    For orders (n, n) and M = [[0, 1], [0, 0]] this is σ((a,b),(c,d)) = ζ^{ad}.
    """
    from .cocycle import Cocycle2, require_cocycle
    from math import lcm
    N = lcm(*orders)
    field = field or (rationals() if N <= 2 else cyclotomic(N))
    G = abelian_group(orders)
    B = group_algebra(G, field)
    vals = _bicharacter_values(orders, matrix, field)
    V = B.carrier
    sig = MultiMap((V, V), (), {((), k): v for k, v in vals.items()}, field)
    return require_cocycle(Cocycle2(B, sig, name=name))


def group_cycle(orders, matrix, field=None, B=None):
    """The 2-cycle Σ χ(α, β) e_α ⊗ e_β in kG⊗kG, e_α the character idempotents.

    Characters are indexed through the same bicharacter exponents, so the
    result is a Drinfeld twist of kG (the dual of a bicharacter cocycle).
    """
    from .cocycle import Cycle2, check_cycle
    from math import lcm
    N = lcm(*orders)
    field = field or (rationals() if N <= 2 else cyclotomic(N))
    G = abelian_group(orders)
    if B is None:
        B = group_algebra(G, field)
    n = G.order
    vals = _bicharacter_values(orders, matrix, field)
    # pairing of group elements with characters: <α, g> = w^{α·g} (standard dot form)
    ident = [[1 if i == j else 0 for j in range(len(orders))] for i in range(len(orders))]
    dot = _bicharacter_values(orders, ident, field)
    inv_n = field(Fraction(1, n))
    # e_α = (1/n) Σ_g <α, g>^-1 g
    e = [{g: inv_n * dot[(a, g)].inverse() for g in range(n)} for a in range(n)]
    ent = {}
    for a in range(n):
        for b in range(n):
            w = vals[(a, b)]
            for g, cg in e[a].items():
                for h, ch in e[b].items():
                    ent[(g, h)] = ent.get((g, h), field.zero()) + w * cg * ch
    V = B.carrier
    c = MultiMap((), (V, V), {(k, ()): v for k, v in ent.items()}, field)
    cyc = Cycle2(B, c)
    _require(check_cycle(cyc, name="group 2-cycle"))
    return cyc


def braided_line_cocycle(n, params, qt=None, B=None):
    """An H-linear normalized σ on the braided line with σ(x^a, x^b) = params[(a, b)].

    Unlisted pairs with a, b > 0 are zero.  The result is checked.
    """
    from .cocycle import Cocycle2, require_cocycle
    if B is None:
        B = braided_line(n, qt=qt)
    fld = B.field
    V = B.carrier
    ent = {((), (0, 0)): 1}
    for (a, b), v in params.items():
        ent[((), (a, b))] = v
    sig = MultiMap((V, V), (), ent, fld)
    return require_cocycle(Cocycle2(B, sig, name="σ_line"))


# ---------------------------------------------------------------------------
# named entries (addressable as "name" or "name:key=value,key=value")

class UnknownEntry(CatalogError):
    pass


@dataclass
class CatalogItem:
    """A built catalog entry: `kind` tells the caller how to check or dump `obj`."""
    name: str
    kind: str      # hopf, braided-hopf, quasitriangular, dual-quasitriangular, pairing,
                   # double, yd-module, cocycle, cycle
    obj: object
    pairing: object = None   # the pairing a double was built from


def parse_group(text):
    """Z4, S3, V4 or products such as Z2xZ2."""
    parts = text.split("x") if text not in ("V4",) else ["Z2", "Z2"]
    groups = []
    for p in parts:
        if len(p) >= 2 and p[0] in "ZC" and p[1:].isdigit() and int(p[1:]) >= 1:
            groups.append(cyclic_group(int(p[1:])))
        elif len(p) >= 2 and p[0] == "S" and p[1:].isdigit() and 1 <= int(p[1:]) <= 5:
            groups.append(symmetric_group(int(p[1:])))
        else:
            raise CatalogError(f"unknown group {text!r} (use Zn, Sn, V4 or products like Z2xZ2)")
    G = groups[0]
    for H in groups[1:]:
        G = direct_product(G, H)
    return G


def _int(x, key):
    try:
        return int(x)
    except ValueError:
        raise CatalogError(f"{key} must be an integer, got {x!r}") from None


def _orders(text):
    return tuple(_int(x, "orders") for x in text.split("x"))


def _matrix(text, k):
    rows = [[_int(x, "matrix") for x in r.split(".")] for r in text.split("/")]
    if len(rows) != k or any(len(r) != k for r in rows):
        raise CatalogError(f"matrix must be {k}x{k}, rows separated by '/' and entries by '.'")
    return rows


def _hopf_field(field, default):
    return field if field is not None else default


def _e_sweedler(p, field):
    return CatalogItem("sweedler", "hopf", sweedler(field))


def _e_taft(p, field):
    n = _int(p.get("n", "3"), "n")
    return CatalogItem(f"taft:n={n}", "hopf", taft(n, field))


def _e_group_algebra(p, field):
    G = parse_group(p.get("G", "S3"))
    return CatalogItem(f"group-algebra:G={p.get('G', 'S3')}", "hopf", group_algebra(G, field))


def _e_functions(p, field):
    G = parse_group(p.get("G", "S3"))
    return CatalogItem(f"functions-on-group:G={p.get('G', 'S3')}", "hopf", functions_on_group(G, field))


def _e_cyclic_qt(p, field):
    n = _int(p.get("n", "3"), "n")
    return CatalogItem(f"cyclic-qt:n={n}", "quasitriangular", cyclic_qt(n, field))


def _e_cyclic_dual_qt(p, field):
    n = _int(p.get("n", "3"), "n")
    return CatalogItem(f"cyclic-dual-qt:n={n}", "dual-quasitriangular", cyclic_dual_qt(n, field))


def _e_braided_line(p, field):
    n = _int(p.get("n", "3"), "n")
    return CatalogItem(f"braided-line:n={n}", "braided-hopf", braided_line(n), braided_line_pairing(n))


def _e_braided_line_pairing(p, field):
    n = _int(p.get("n", "3"), "n")
    P = braided_line_pairing(n)
    return CatalogItem(f"braided-line-pairing:n={n}", "pairing", P, P)


def _e_group_pairing(p, field):
    G = parse_group(p.get("G", "S3"))
    P = group_pairing(G, field)
    return CatalogItem(f"group-pairing:G={p.get('G', 'S3')}", "pairing", P, P)


def _e_small_quantum_sl2(p, field, jobs=1):
    n = _int(p.get("n", "3"), "n")
    if n < 3:
        raise CatalogError("small-quantum-sl2 needs n >= 3 (ζ - ζ^-1 vanishes for n = 2)")
    D, P = small_quantum_sl2(n, jobs=jobs)
    return CatalogItem(f"small-quantum-sl2:n={n}", "double", D, P)


def _e_group_double(p, field, jobs=1):
    from .double import drinfeld_double
    G = parse_group(p.get("G", "S3"))
    P = group_pairing(G, field)
    return CatalogItem(f"group-double:G={p.get('G', 'S3')}", "double",
                       drinfeld_double(P, jobs=jobs, name=f"D({G.name})"), P)


def _e_classical_double(p, field, jobs=1):
    from .double import classical_double
    of = p.get("of", "sweedler")
    if of == "sweedler":
        H = sweedler(field)
    elif of.startswith("taft") and of[4:].isdigit():
        H = taft(int(of[4:]), field)
    else:
        raise CatalogError(f"classical-double: 'of' must be sweedler or taftN, got {of!r}")
    D = classical_double(H, jobs=jobs)
    return CatalogItem(f"classical-double:of={of}", "double", D, D.pairing)


def _e_adjoint_crossed_module(p, field):
    G = parse_group(p.get("G", "S3"))
    return CatalogItem(f"adjoint-crossed-module:G={p.get('G', 'S3')}", "yd-module",
                       adjoint_crossed_module(G, field))


def _e_bicharacter(p, field):
    orders = _orders(p.get("orders", "2x2"))
    M = _matrix(p.get("matrix", "0.1/0.0"), len(orders))
    s = group_bicharacter_cocycle(orders, M, field)
    return CatalogItem(f"bicharacter:orders={p.get('orders', '2x2')},matrix={p.get('matrix', '0.1/0.0')}",
                       "cocycle", s)


def _e_group_cycle(p, field):
    orders = _orders(p.get("orders", "2x2"))
    M = _matrix(p.get("matrix", "0.0/1.0"), len(orders))
    return CatalogItem(f"group-cycle:orders={p.get('orders', '2x2')},matrix={p.get('matrix', '0.0/1.0')}",
                       "cycle", group_cycle(orders, M, field))


def _e_line_cocycle(p, field):
    n = _int(p.get("n", "2"), "n")
    t = _int(p.get("t", "1"), "t")
    symbol = p.get("symbol", "x")
    if not symbol.isalpha():
        raise CatalogError(f"symbol must be a letter, got {symbol!r}")
    B = braided_line(n, symbol=symbol)
    params = {(1, 1): B.field(t)} if n == 2 else {(a, n - a): B.field(t) for a in range(1, n)}
    name = f"braided-line-cocycle:n={n},t={t}" + ("" if symbol == "x" else f",symbol={symbol}")
    return CatalogItem(name, "cocycle", braided_line_cocycle(n, params, B=B))


def _e_dual_r_cocycle(p, field):
    from .cocycle import left_cocycle, require_cocycle
    n = _int(p.get("n", "3"), "n")
    D = cyclic_dual_qt(n, field)
    return CatalogItem(f"dual-r-cocycle:n={n}", "cocycle", require_cocycle(left_cocycle(D.H, D.r)))


ENTRIES = {
    "sweedler": (_e_sweedler, "Sweedler's 4-dimensional Hopf algebra"),
    "taft": (_e_taft, "Taft algebra of dimension n^2 (n)"),
    "group-algebra": (_e_group_algebra, "group algebra kG (G)"),
    "functions-on-group": (_e_functions, "function algebra k[G] (G)"),
    "cyclic-qt": (_e_cyclic_qt, "kZ/n with its R-matrix (n)"),
    "cyclic-dual-qt": (_e_cyclic_dual_qt, "kZ/n with a dual R-matrix (n)"),
    "braided-line": (_e_braided_line, "k[x]/(x^n) in Z/n-modules (n)"),
    "braided-line-pairing": (_e_braided_line_pairing, "the paired lines k[f], k[e] (n)"),
    "group-pairing": (_e_group_pairing, "cop-k[G] paired with kG (G)"),
    "small-quantum-sl2": (_e_small_quantum_sl2, "the small quantum group as a double (n)"),
    "group-double": (_e_group_double, "the quantum double D(G) from the group pairing (G)"),
    "classical-double": (_e_classical_double, "the quantum double of sweedler or taftN (of)"),
    "adjoint-crossed-module": (_e_adjoint_crossed_module, "kG with conjugation and grading (G)"),
    "bicharacter": (_e_bicharacter, "bicharacter 2-cocycle on an abelian group (orders, matrix)"),
    "group-cycle": (_e_group_cycle, "bicharacter 2-cycle in kG⊗kG (orders, matrix)"),
    "braided-line-cocycle": (_e_line_cocycle, "H-linear 2-cocycle on the braided line (n, t, symbol)"),
    "dual-r-cocycle": (_e_dual_r_cocycle, "dual R-matrix as a left 2-cocycle (n)"),
}

# the instances `check --all` runs
DEFAULT_INSTANCES = (
    "sweedler", "taft:n=3", "taft:n=4",
    "group-algebra:G=Z2", "group-algebra:G=Z3", "group-algebra:G=S3", "group-algebra:G=V4",
    "functions-on-group:G=S3",
    "cyclic-qt:n=2", "cyclic-qt:n=3", "cyclic-qt:n=4", "cyclic-dual-qt:n=2", "cyclic-dual-qt:n=3",
    "braided-line:n=2", "braided-line:n=3", "braided-line:n=4",
    "braided-line-pairing:n=2", "braided-line-pairing:n=3",
    "group-pairing:G=Z2", "group-pairing:G=Z3", "group-pairing:G=S3",
    "small-quantum-sl2:n=3", "group-double:G=Z2", "group-double:G=Z3", "group-double:G=S3",
    "classical-double:of=sweedler", "classical-double:of=taft3",
    "adjoint-crossed-module:G=S3", "adjoint-crossed-module:G=Z3",
    "bicharacter:orders=2x2,matrix=0.1/0.0", "bicharacter:orders=4,matrix=1",
    "group-cycle:orders=2x2,matrix=0.0/1.0",
    "braided-line-cocycle:n=2,t=3", "braided-line-cocycle:n=3,t=2",
    "dual-r-cocycle:n=2", "dual-r-cocycle:n=3",
)


def parse_entry_name(text):
    """'name:key=value,...' -> (name, {key: value})."""
    name, _, rest = text.partition(":")
    params = {}
    if rest:
        for part in rest.split(","):
            key, eq, value = part.partition("=")
            if not eq or not key:
                raise CatalogError(f"bad parameter {part!r} in {text!r} (expected key=value)")
            params[key.strip()] = value.strip()
    return name.strip(), params


def lookup(text, field=None, jobs=1):
    """Build the catalog entry named by `text`."""
    name, params = parse_entry_name(text)
    if name not in ENTRIES:
        raise UnknownEntry(f"unknown catalog entry {name!r}; known: {', '.join(sorted(ENTRIES))}")
    builder = ENTRIES[name][0]
    if builder in (_e_small_quantum_sl2, _e_group_double, _e_classical_double):
        return builder(params, field, jobs=jobs)
    return builder(params, field)
