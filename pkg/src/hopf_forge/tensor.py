"""
Based vector spaces and sparse multilinear maps between tensor products of
them.  A map stores only its nonzero coefficients, keyed by
(output multi-index, input multi-index).
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product

from .scalars import Scalar


class ShapeError(ValueError):
    pass


class NotInvertible(ArithmeticError):
    def __init__(self, message, side=None, witness=None):
        super().__init__(message)
        self.side = side
        self.witness = witness


@dataclass(frozen=True)
class Space:
    name: str
    dim: int
    basis_labels: tuple = dc_field(default=None)

    def __post_init__(self):
        labels = self.basis_labels
        if labels is None:
            labels = tuple(f"{self.name}{i}" for i in range(self.dim))
        labels = tuple(str(x) for x in labels)
        object.__setattr__(self, "basis_labels", labels)
        if self.dim < 1:
            raise ShapeError(f"space {self.name} must have positive dimension")
        if len(labels) != self.dim:
            raise ShapeError(f"space {self.name}: {len(labels)} labels for dim {self.dim}")
        if len(set(labels)) != len(labels):
            raise ShapeError(f"space {self.name}: basis labels must be distinct")

    def index(self, label):
        return self.basis_labels.index(label)

    def __repr__(self):
        return f"Space({self.name!r}, {self.dim})"


def _spaces(x):
    if isinstance(x, Space):
        return (x,)
    return tuple(x)


def tensor_space(spaces, name=None):
    """Flatten a list of spaces into one space with product labels."""
    spaces = _spaces(spaces)
    if len(spaces) == 1:
        return spaces[0]
    labels = ["⊗".join(parts) for parts in product(*(s.basis_labels for s in spaces))]
    return Space(name or "⊗".join(s.name for s in spaces), len(labels), tuple(labels))


def multi_indices(spaces):
    return product(*(range(s.dim) for s in spaces))


class MultiMap:
    """A linear map V1⊗...⊗Vk -> W1⊗...⊗Wl with exact sparse coefficients."""

    __slots__ = ("domain", "codomain", "entries", "field", "_by_in", "_by_out")

    def __init__(self, domain, codomain, entries, field, check=True):
        self.domain = _spaces(domain)
        self.codomain = _spaces(codomain)
        self.field = field
        if check:
            clean = {}
            for (o, i), c in entries.items():
                o = tuple(o)
                i = tuple(i)
                if len(o) != len(self.codomain) or len(i) != len(self.domain):
                    raise ShapeError(f"index {(o, i)} does not match the map's shape")
                for k, s in zip(o, self.codomain):
                    if not 0 <= k < s.dim:
                        raise ShapeError(f"output index {o} out of range")
                for k, s in zip(i, self.domain):
                    if not 0 <= k < s.dim:
                        raise ShapeError(f"input index {i} out of range")
                c = field(c) if not isinstance(c, Scalar) else c
                if c.field != field:
                    raise ShapeError("coefficient from a different field")
                if c:
                    clean[(o, i)] = c
            entries = clean
        self.entries = entries
        self._by_in = None
        self._by_out = None

    # -- indexes
    def by_input(self):
        if self._by_in is None:
            d = {}
            for (o, i), c in self.entries.items():
                d.setdefault(i, []).append((o, c))
            self._by_in = d
        return self._by_in

    def by_output(self):
        if self._by_out is None:
            d = {}
            for (o, i), c in self.entries.items():
                d.setdefault(o, []).append((i, c))
            self._by_out = d
        return self._by_out

    def column(self, i):
        return dict(self.by_input().get(tuple(i), ()))

    def coeff(self, o, i):
        return self.entries.get((tuple(o), tuple(i)), self.field.zero())

    @property
    def shape(self):
        return (tuple(s.dim for s in self.codomain), tuple(s.dim for s in self.domain))

    def nnz(self):
        return len(self.entries)

    def __repr__(self):
        dn = "⊗".join(s.name for s in self.domain) or "I"
        cn = "⊗".join(s.name for s in self.codomain) or "I"
        return f"<MultiMap {dn} -> {cn}, {len(self.entries)} entries>"

    def same_shape(self, other):
        return self.domain == other.domain and self.codomain == other.codomain

    def __eq__(self, other):
        if not isinstance(other, MultiMap):
            return NotImplemented
        return self.same_shape(other) and self.entries == other.entries

    __hash__ = None

    def first_difference(self, other):
        """Sorted-first (out, in) key where the two maps differ, or None."""
        keys = set(self.entries) | set(other.entries)
        bad = [k for k in keys if self.entries.get(k) != other.entries.get(k)]
        if not bad:
            return None
        return min(bad, key=lambda k: (k[1], k[0]))

    def is_zero(self):
        return not self.entries

    # -- linear structure
    def __add__(self, other):
        if not self.same_shape(other):
            raise ShapeError("cannot add maps of different shapes")
        out = dict(self.entries)
        for k, c in other.entries.items():
            prev = out.get(k)
            out[k] = c if prev is None else prev + c
        return MultiMap(self.domain, self.codomain, _drop_zeros(out), self.field, check=False)

    def __neg__(self):
        return MultiMap(self.domain, self.codomain, {k: -c for k, c in self.entries.items()}, self.field, check=False)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        s = self.field(s)
        if not s:
            return zero_map(self.domain, self.codomain, self.field)
        return MultiMap(self.domain, self.codomain, {k: c * s for k, c in self.entries.items()}, self.field, check=False)

    # -- composition helpers
    def then(self, f, at=0):
        """(id ⊗ f ⊗ id) ∘ self, with f applied to output slots starting at `at`."""
        k = len(f.domain)
        if tuple(self.codomain[at:at + k]) != f.domain:
            raise ShapeError(f"cannot apply {f!r} at output slot {at} of {self!r}")
        fi = f.by_input()
        acc = {}
        for (o, i), c in self.entries.items():
            hits = fi.get(o[at:at + k])
            if not hits:
                continue
            head = o[:at]
            tail = o[at + k:]
            for o2, c2 in hits:
                key = (head + o2 + tail, i)
                prev = acc.get(key)
                acc[key] = c * c2 if prev is None else prev + c * c2
        cod = self.codomain[:at] + f.codomain + self.codomain[at + k:]
        return MultiMap(self.domain, cod, _drop_zeros(acc), self.field, check=False)

    def after(self, g, at=0):
        """self ∘ (id ⊗ g ⊗ id), with g feeding input slots starting at `at`."""
        k = len(g.codomain)
        if tuple(self.domain[at:at + k]) != g.codomain:
            raise ShapeError(f"cannot feed {g!r} into input slot {at} of {self!r}")
        go = g.by_output()
        acc = {}
        for (o, i), c in self.entries.items():
            hits = go.get(i[at:at + k])
            if not hits:
                continue
            head = i[:at]
            tail = i[at + k:]
            for i2, c2 in hits:
                key = (o, head + i2 + tail)
                prev = acc.get(key)
                acc[key] = c * c2 if prev is None else prev + c * c2
        dom = self.domain[:at] + g.domain + self.domain[at + k:]
        return MultiMap(dom, self.codomain, _drop_zeros(acc), self.field, check=False)

    def permute_outputs(self, perm):
        """New output slot j carries old output slot perm[j]."""
        cod = tuple(self.codomain[p] for p in perm)
        ent = {(tuple(o[p] for p in perm), i): c for (o, i), c in self.entries.items()}
        return MultiMap(self.domain, cod, ent, self.field, check=False)

    def permute_inputs(self, perm):
        """New input slot j is old input slot perm[j]."""
        dom = tuple(self.domain[p] for p in perm)
        ent = {(o, tuple(i[p] for p in perm)): c for (o, i), c in self.entries.items()}
        return MultiMap(dom, self.codomain, ent, self.field, check=False)

    def restrict_input(self, i):
        """The vector self(basis element i) as a map from the unit object."""
        i = tuple(i)
        ent = {(o, ()): c for o, c in self.by_input().get(i, ())}
        return MultiMap((), self.codomain, ent, self.field, check=False)

    def transpose(self):
        ent = {(i, o): c for (o, i), c in self.entries.items()}
        return MultiMap(self.codomain, self.domain, ent, self.field, check=False)

    def with_spaces(self, domain, codomain):
        """Reinterpret the same coefficients over other spaces of equal dims."""
        domain = _spaces(domain)
        codomain = _spaces(codomain)
        if tuple(s.dim for s in domain) != tuple(s.dim for s in self.domain) or \
                tuple(s.dim for s in codomain) != tuple(s.dim for s in self.codomain):
            raise ShapeError("relabelled spaces must keep dimensions")
        return MultiMap(domain, codomain, self.entries, self.field, check=False)

    def to_matrix(self):
        """Dense list-of-rows over flattened output/input indices."""
        rows = list(multi_indices(self.codomain))
        cols = list(multi_indices(self.domain))
        ri = {r: n for n, r in enumerate(rows)}
        ci = {c: n for n, c in enumerate(cols)}
        z = self.field.zero()
        mat = [[z] * len(cols) for _ in rows]
        for (o, i), c in self.entries.items():
            mat[ri[o]][ci[i]] = c
        return mat

    def flatten(self):
        """The same map between single flattened spaces."""
        dom = (tensor_space(self.domain),) if self.domain else ()
        cod = (tensor_space(self.codomain),) if self.codomain else ()
        dstr = _strides(self.domain)
        cstr = _strides(self.codomain)
        ent = {}
        for (o, i), c in self.entries.items():
            oo = (sum(a * s for a, s in zip(o, cstr)),) if cod else ()
            ii = (sum(a * s for a, s in zip(i, dstr)),) if dom else ()
            ent[(oo, ii)] = c
        return MultiMap(dom, cod, ent, self.field, check=False)


def _strides(spaces):
    out = []
    acc = 1
    for s in reversed(spaces):
        out.append(acc)
        acc *= s.dim
    return tuple(reversed(out))


def unflatten_index(k, spaces):
    out = []
    for s in reversed(spaces):
        out.append(k % s.dim)
        k //= s.dim
    return tuple(reversed(out))


def _drop_zeros(d):
    return {k: c for k, c in d.items() if c}


def zero_map(domain, codomain, field):
    return MultiMap(domain, codomain, {}, field, check=False)


def identity(spaces, field):
    spaces = _spaces(spaces)
    one = field.one()
    ent = {(i, i): one for i in multi_indices(spaces)}
    return MultiMap(spaces, spaces, ent, field, check=False)


def scalar_map(value, field):
    """The map I -> I given by multiplication with `value`."""
    value = field(value)
    ent = {((), ()): value} if value else {}
    return MultiMap((), (), ent, field, check=False)


def vector(spaces, coeffs, field):
    """An element of a tensor product, as a map from the unit object."""
    return MultiMap((), spaces, {(tuple(k), ()): c for k, c in coeffs.items()}, field)


def functional(spaces, coeffs, field):
    return MultiMap(spaces, (), {((), tuple(k)): c for k, c in coeffs.items()}, field)


def from_matrix(domain, codomain, rows, field):
    """Build a map from a dense matrix over flattened indices."""
    domain = _spaces(domain)
    codomain = _spaces(codomain)
    cols = list(multi_indices(domain))
    ent = {}
    for r, o in enumerate(multi_indices(codomain)):
        for c, i in enumerate(cols):
            v = rows[r][c]
            if v != 0:
                ent[(o, i)] = field(v)
    return MultiMap(domain, codomain, ent, field)


def compose(f, g):
    """f ∘ g; the codomain of g must equal the domain of f."""
    if g.codomain != f.domain:
        raise ShapeError(f"cannot compose {f!r} after {g!r}")
    if f.field != g.field:
        raise ShapeError("field mismatch in compose")
    return f.after(g, 0) if g.codomain else _compose_scalar(f, g)


def _compose_scalar(f, g):
    # g lands in the unit object: contract over the empty index
    acc = {}
    fi = f.by_input().get((), ())
    for (o, i), c in g.entries.items():
        for o2, c2 in fi:
            key = (o2, i)
            prev = acc.get(key)
            acc[key] = c * c2 if prev is None else prev + c * c2
    return MultiMap(g.domain, f.codomain, _drop_zeros(acc), f.field, check=False)


def compose_all(*maps):
    """compose_all(f, g, h) = f ∘ g ∘ h."""
    out = maps[-1]
    for f in reversed(maps[:-1]):
        out = compose(f, out)
    return out


def tensor_map(*maps):
    """f ⊗ g ⊗ ...; all maps must share one field."""
    out = maps[0]
    for g in maps[1:]:
        if g.field != out.field:
            raise ShapeError("field mismatch in tensor_map")
        ent = {}
        for (o1, i1), c1 in out.entries.items():
            for (o2, i2), c2 in g.entries.items():
                ent[(o1 + o2, i1 + i2)] = c1 * c2
        out = MultiMap(out.domain + g.domain, out.codomain + g.codomain, ent, out.field, check=False)
    return out


def flip(V, W, field):
    """The swap V⊗W -> W⊗V."""
    one = field.one()
    ent = {((w, v), (v, w)): one for v in range(V.dim) for w in range(W.dim)}
    return MultiMap((V, W), (W, V), ent, field, check=False)


# ---------------------------------------------------------------------------
# exact sparse elimination

class SparseEchelon:
    """Incremental row echelon form over a field.

    Rows are dicts column -> Scalar.  Each new row is reduced by existing
    pivots at its leading column until it vanishes or starts a new pivot; the
    pivot of a row is its first nonzero column, so the result does not
    depend on anything but the row order.
    """

    def __init__(self, field):
        self.field = field
        self.pivots = {}

    def add(self, row, rhs=None):
        """Insert a row; returns None if it reduced to zero, else its pivot column.

        With an augmented right-hand side, a row reducing to 0 = c (c != 0) is
        reported by returning the string 'inconsistent'.
        """
        row = {k: v for k, v in row.items() if v}
        if rhs is None:
            rhs = self.field.zero()
        while row:
            col = min(row)
            piv = self.pivots.get(col)
            if piv is None:
                inv = row[col].inverse()
                row = {k: v * inv for k, v in row.items()}
                self.pivots[col] = (row, rhs * inv)
                return col
            prow, prhs = piv
            f = row[col]
            for k, v in prow.items():
                nv = row.get(k)
                nv = -f * v if nv is None else nv - f * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
            rhs = rhs - f * prhs
        if rhs:
            return "inconsistent"
        return None

    def rank(self):
        return len(self.pivots)

    def solve(self, ncols=None):
        """Back substitution; free columns are set to zero."""
        sol = {}
        for col in sorted(self.pivots, reverse=True):
            row, rhs = self.pivots[col]
            v = rhs
            for k, c in row.items():
                if k != col and k in sol:
                    v = v - c * sol[k]
            if v:
                sol[col] = v
        return sol


def rank(f):
    """Exact rank of f viewed as a matrix (outputs x inputs)."""
    ech = SparseEchelon(f.field)
    cols = {}
    rows = {}
    for (o, i), c in f.entries.items():
        j = cols.setdefault(i, len(cols))
        rows.setdefault(o, {})[j] = c
    for o in sorted(rows):
        ech.add(rows[o])
    return ech.rank()


def solve_linear(rows, rhs, field):
    """Solve sum_j rows[r][j] x_j = rhs[r]; returns (solution dict, bad row index)."""
    ech = SparseEchelon(field)
    for r, row in enumerate(rows):
        res = ech.add(row, rhs[r])
        if res == "inconsistent":
            return None, r
    return ech.solve(), None


def _conv(f, g, m, comult):
    # m ∘ (f ⊗ g) ∘ Δ, with f, g sharing domain C and codomain A
    x = comult.then(f, 0).then(g, len(f.codomain))
    if m is None:
        return x
    return x.then(m, 0)


def convolve(f, g, m, comult):
    """The convolution product m(f⊗g)Δ."""
    return _conv(f, g, m, comult)


def solve_convolution_inverse(f, m, comult, unit, counit):
    """The two-sided convolution inverse of f: C -> A.

    `m`: A⊗A -> A, `comult`: C -> C⊗C, `unit`: I -> A, `counit`: C -> I.  The
    coalgebra and algebra carriers may be lists of spaces (tensor products)
    or empty (the ground field).
    """
    C = f.domain
    A = f.codomain
    field = f.field
    nA = len(A)
    nC = len(C)
    unknowns = {}
    for a in multi_indices(A):
        for c in multi_indices(C):
            unknowns[(a, c)] = len(unknowns)
    # target u∘ε
    target = compose(unit, counit) if (unit.codomain or counit.domain) else compose(unit, counit)
    mi = m.by_input() if m is not None else None
    fi = f.by_input()
    rows = {}
    # (f * g)(c) = sum m(f(c1), g(c2))
    for (cc, c), d in comult.entries.items():
        c1 = cc[:nC]
        c2 = cc[nC:]
        for a1, fv in fi.get(c1, ()):
            if nA == 0:
                key = ((), c)
                row = rows.setdefault(key, {})
                col = unknowns[((), c2)]
                v = d * fv
                row[col] = row[col] + v if col in row else v
                continue
            for a2 in multi_indices(A):
                for ao, mv in mi.get(a1 + a2, ()):
                    key = (ao, c)
                    row = rows.setdefault(key, {})
                    col = unknowns[(a2, c2)]
                    v = d * fv * mv
                    row[col] = row[col] + v if col in row else v
    eqs = []
    rhs = []
    keys = []
    for key in sorted(set(rows) | {k for k in ((a, c) for a in multi_indices(A) for c in multi_indices(C))}):
        eqs.append(rows.get(key, {}))
        rhs.append(target.coeff(key[0], key[1]))
        keys.append(key)
    sol, bad = solve_linear(eqs, rhs, field)
    if sol is None:
        raise NotInvertible("convolution equation f*g = u∘ε has no solution", side="right", witness=keys[bad])
    inv_keys = {v: k for k, v in unknowns.items()}
    g = MultiMap(C, A, {inv_keys[j]: v for j, v in sol.items()}, field, check=False)
    for side, prod in (("right", convolve(f, g, m, comult)), ("left", convolve(g, f, m, comult))):
        if prod != target:
            raise NotInvertible(f"candidate inverse fails the {side} convolution identity",
                                side=side, witness=prod.first_difference(target))
    return g


def invert(f):
    """Inverse of a bijective linear map (square after flattening)."""
    rows_idx = list(multi_indices(f.codomain))
    cols_idx = list(multi_indices(f.domain))
    n = len(cols_idx)
    if len(rows_idx) != n:
        raise NotInvertible("map is not square")
    ci = {c: k for k, c in enumerate(cols_idx)}
    ri = {r: k for k, r in enumerate(rows_idx)}
    rows = [dict() for _ in rows_idx]
    for (o, i), c in f.entries.items():
        rows[ri[o]][ci[i]] = c
    one = f.field.one()
    ech = SparseEchelon(f.field)
    for k, row in enumerate(rows):
        aug = dict(row)
        aug[n + k] = one
        res = ech.add(aug)
        if res is None or (isinstance(res, int) and res >= n):
            raise NotInvertible("map is singular", witness=rows_idx[k])
    # back-substitute into reduced row echelon form
    order = sorted(ech.pivots)
    reduced = {}
    for col in reversed(order):
        row, _ = ech.pivots[col]
        row = dict(row)
        for k2 in [k for k in row if k != col and k < n]:
            c = row.pop(k2)
            for kk, vv in reduced[k2].items():
                if kk == k2:
                    continue
                nv = row.get(kk)
                nv = -c * vv if nv is None else nv - c * vv
                if nv:
                    row[kk] = nv
                else:
                    row.pop(kk, None)
        reduced[col] = row
    ent = {}
    for col, row in reduced.items():
        for k, v in row.items():
            if k >= n:
                # inverse maps codomain basis (k - n) to domain basis col
                ent[(cols_idx[col], rows_idx[k - n])] = v
    return MultiMap(f.codomain, f.domain, ent, f.field, check=False)
