"""
Exact scalars: rationals, cyclotomic fields Q(z_n), and univariate rational
function fields over either of those.

Every value is kept in a canonical form, so two scalars are equal exactly
when their stored representations are equal.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction


class ScalarError(ValueError):
    pass


class ScalarParseError(ScalarError):
    def __init__(self, message, text="", position=0):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


class ScalarDivisionByZero(ScalarError, ZeroDivisionError):
    pass


class FieldMismatch(ScalarError):
    pass


@dataclass(frozen=True)
class FieldSpec:
    kind: str  # "rationals" | "cyclotomic" | "rational-functions"
    order: int = 1
    base: "FieldSpec | None" = None
    var: str | None = None

    def __post_init__(self):
        if self.kind == "cyclotomic" and self.order < 1:
            raise ScalarError("cyclotomic order must be >= 1")
        if self.kind == "rational-functions":
            if self.base is None or self.base.kind == "rational-functions":
                raise ScalarError("rational function fields need a rationals or cyclotomic base")
            if not self.var or not re.fullmatch(r"[A-Za-y][A-Za-z0-9_]*", self.var) or self.var == "z":
                raise ScalarError(f"bad variable name {self.var!r}")

    # -- construction helpers
    def __str__(self):
        if self.kind == "rationals":
            return "rationals"
        if self.kind == "cyclotomic":
            return f"cyclotomic({self.order})"
        return f"rational-functions({self.base},{self.var})"

    @property
    def ops(self):
        eng = _ENGINES.get(self)
        if eng is None:
            if self.kind == "rational-functions":
                eng = _RatFuncOps(self)
            else:
                eng = _CycloOps(1 if self.kind == "rationals" else self.order)
            _ENGINES[self] = eng
        return eng

    def cyclotomic_layer(self):
        if self.kind == "cyclotomic":
            return self
        if self.kind == "rational-functions" and self.base.kind == "cyclotomic":
            return self.base
        return None

    def zero(self):
        return Scalar(self, self.ops.zero)

    def one(self):
        return Scalar(self, self.ops.one)

    def __call__(self, value):
        """Coerce an int, Fraction, string or Scalar into this field."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch(f"scalar from {value.field} used in {self}")
            return value
        if isinstance(value, str):
            return parse_scalar(value, self)
        if isinstance(value, (int, Fraction)):
            return Scalar(self, self.ops.from_fraction(Fraction(value)))
        raise TypeError(f"cannot coerce {type(value).__name__} to a scalar")


def rationals():
    return FieldSpec("rationals")


def cyclotomic(n):
    return FieldSpec("cyclotomic", order=int(n))


def rational_functions(base, var="q"):
    return FieldSpec("rational-functions", base=base, var=var)


_FIELD_RE = re.compile(r"\s*(rationals|Q|cyclotomic\((\d+)\)|rational-functions\((.*),\s*([A-Za-z][A-Za-z0-9_]*)\))\s*$")


def parse_field(text):
    """Inverse of str(FieldSpec)."""
    m = _FIELD_RE.match(text)
    if not m:
        raise ScalarError(f"unknown field description {text!r}")
    if m.group(1) in ("rationals", "Q"):
        return rationals()
    if m.group(2) is not None:
        return cyclotomic(int(m.group(2)))
    return rational_functions(parse_field(m.group(3)), m.group(4))


_ENGINES: dict = {}


# ---------------------------------------------------------------------------
# integer polynomial helpers (coefficient lists, lowest degree first)

def _poly_divmod_int(num, den):
    """Exact division of integer polynomials with monic den."""
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1]
        q[k] = c
        if c:
            for j, d in enumerate(den):
                num[k + j] -= c * d
    return q, num[: len(den) - 1]


def cyclotomic_polynomial(n):
    """Integer coefficients of Phi_n, lowest degree first."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod_int(poly, cyclotomic_polynomial(d))
            assert not any(rem)
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return poly


class _CycloOps:
    """Arithmetic on Q(z_n); elements are (numerators, denominator)."""

    def __init__(self, n):
        self.n = n
        self.phi_poly = cyclotomic_polynomial(n)
        self.deg = len(self.phi_poly) - 1
        d = self.deg
        # x^k mod Phi_n for k < 2d - 1
        table = []
        cur = [0] * d
        cur[0] = 1
        for _k in range(max(2 * d - 1, 1)):
            table.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for j in range(d):
                    cur[j] -= top * self.phi_poly[j]
        self.table = table
        self.zero = ((0,) * d, 1)
        self.one = ((1,) + (0,) * (d - 1), 1)

    @staticmethod
    def _norm(nums, den):
        if den < 0:
            nums = [-a for a in nums]
            den = -den
        g = math.gcd(den, *nums)
        if g != 1:
            nums = [a // g for a in nums]
            den //= g
        if not any(nums):
            den = 1
        return (tuple(nums), den)

    def from_fraction(self, fr):
        nums = [0] * self.deg
        nums[0] = fr.numerator
        return (tuple(nums), fr.denominator)

    def add(self, a, b):
        an, ad = a
        bn, bd = b
        if ad == bd:
            return self._norm([x + y for x, y in zip(an, bn)], ad)
        return self._norm([x * bd + y * ad for x, y in zip(an, bn)], ad * bd)

    def neg(self, a):
        return (tuple(-x for x in a[0]), a[1])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        an, ad = a
        bn, bd = b
        d = self.deg
        if d == 1:
            return self._norm([an[0] * bn[0]], ad * bd)
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(an):
            if x:
                for j, y in enumerate(bn):
                    if y:
                        prod[i + j] += x * y
        out = [0] * d
        for k, c in enumerate(prod):
            if c:
                for j, t in enumerate(self.table[k]):
                    if t:
                        out[j] += c * t
        return self._norm(out, ad * bd)

    def is_zero(self, a):
        return not any(a[0])

    def inv(self, a):
        if self.is_zero(a):
            raise ScalarDivisionByZero("division by zero")
        an, ad = a
        d = self.deg
        if d == 1:
            return self._norm([ad], an[0])
        # columns of the multiplication-by-a matrix are a * x^j
        cols = []
        for j in range(d):
            e = [0] * d
            e[j] = 1
            prodn, _ = self.mul((an, 1), (tuple(e), 1))
            cols.append(prodn)
        mat = [[Fraction(cols[j][i]) for j in range(d)] + [Fraction(1 if i == 0 else 0)] for i in range(d)]
        for c in range(d):
            p = next(r for r in range(c, d) if mat[r][c] != 0)
            mat[c], mat[p] = mat[p], mat[c]
            pv = mat[c][c]
            mat[c] = [x / pv for x in mat[c]]
            for r in range(d):
                if r != c and mat[r][c] != 0:
                    f = mat[r][c]
                    mat[r] = [x - f * y for x, y in zip(mat[r], mat[c])]
        sol = [mat[i][d] * ad for i in range(d)]
        den = 1
        for s in sol:
            den = den * s.denominator // math.gcd(den, s.denominator)
        return self._norm([int(s * den) for s in sol], den)

    def gen(self):
        if self.deg == 1:
            # z is -1 for n = 2 and 1 for n = 1
            return self.from_fraction(Fraction(-1 if self.n == 2 else 1))
        nums = [0] * self.deg
        nums[1] = 1
        return (tuple(nums), 1)

    def as_fraction(self, a):
        """Return a Fraction when the element is rational, else None."""
        if any(a[0][1:]):
            return None
        return Fraction(a[0][0], a[1])

    def format(self, a, sym="z"):
        an, ad = a
        terms = []
        for k, c in enumerate(an):
            if not c:
                continue
            fr = Fraction(c, ad)
            terms.append((k, fr))
        if not terms:
            return "0"
        out = ""
        for idx, (k, fr) in enumerate(terms):
            neg = fr < 0
            mag = -fr if neg else fr
            if k == 0:
                body = str(mag)
            else:
                mono = sym if k == 1 else f"{sym}^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if idx == 0:
                out = ("-" if neg else "") + body
            else:
                out += (" - " if neg else " + ") + body
        return out


class _RatFuncOps:
    """Rational functions num/den over a base engine, den monic, gcd 1."""

    def __init__(self, spec):
        self.spec = spec
        self.base = spec.base.ops
        b = self.base
        self.zero = ((), (b.one,))
        self.one = ((b.one,), (b.one,))

    # polynomials over the base: tuples of base elements, no trailing zeros
    def _trim(self, p):
        p = list(p)
        while p and self.base.is_zero(p[-1]):
            p.pop()
        return tuple(p)

    def _padd(self, p, q):
        b = self.base
        n = max(len(p), len(q))
        out = []
        for i in range(n):
            x = p[i] if i < len(p) else b.zero
            y = q[i] if i < len(q) else b.zero
            out.append(b.add(x, y))
        return self._trim(out)

    def _pneg(self, p):
        return tuple(self.base.neg(x) for x in p)

    def _pmul(self, p, q):
        b = self.base
        if not p or not q:
            return ()
        out = [b.zero] * (len(p) + len(q) - 1)
        for i, x in enumerate(p):
            if b.is_zero(x):
                continue
            for j, y in enumerate(q):
                out[i + j] = b.add(out[i + j], b.mul(x, y))
        return self._trim(out)

    def _pscale(self, p, c):
        return self._trim([self.base.mul(x, c) for x in p])

    def _pdivmod(self, p, q):
        b = self.base
        p = list(p)
        lead_inv = b.inv(q[-1])
        quo = [b.zero] * max(len(p) - len(q) + 1, 0)
        while len(p) >= len(q) and p:
            c = b.mul(p[-1], lead_inv)
            k = len(p) - len(q)
            quo[k] = c
            for j, y in enumerate(q):
                p[k + j] = b.sub(p[k + j], b.mul(c, y))
            p = list(self._trim(p))
        return self._trim(quo), tuple(p)

    def _pgcd(self, p, q):
        while q:
            _, r = self._pdivmod(p, q)
            p, q = q, r
        if not p:
            return p
        return self._pscale(p, self.base.inv(p[-1]))

    def _norm(self, num, den):
        num = self._trim(num)
        den = self._trim(den)
        if not den:
            raise ScalarDivisionByZero("division by zero")
        if not num:
            return self.zero
        g = self._pgcd(num, den)
        if len(g) > 1:
            num, _ = self._pdivmod(num, g)
            den, _ = self._pdivmod(den, g)
        li = self.base.inv(den[-1])
        return (self._pscale(num, li), self._pscale(den, li))

    def from_fraction(self, fr):
        return self._norm((self.base.from_fraction(fr),), (self.base.one,))

    def from_base(self, x):
        return self._norm((x,), (self.base.one,))

    def add(self, a, b):
        if a[1] == b[1]:
            return self._norm(self._padd(a[0], b[0]), a[1])
        return self._norm(self._padd(self._pmul(a[0], b[1]), self._pmul(b[0], a[1])), self._pmul(a[1], b[1]))

    def neg(self, a):
        return (self._pneg(a[0]), a[1])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        return self._norm(self._pmul(a[0], b[0]), self._pmul(a[1], b[1]))

    def is_zero(self, a):
        return not a[0]

    def inv(self, a):
        if not a[0]:
            raise ScalarDivisionByZero("division by zero")
        return self._norm(a[1], a[0])

    def var(self):
        return ((self.base.zero, self.base.one), (self.base.one,))

    def gen(self):
        return self.from_base(self.base.gen())

    def as_fraction(self, a):
        if len(a[0]) == 1 and len(a[1]) == 1:
            return self.base.as_fraction(a[0][0])
        return None

    def _pformat(self, p):
        v = self.spec.var
        terms = []
        for k in range(len(p) - 1, -1, -1):
            c = p[k]
            if self.base.is_zero(c):
                continue
            fr = self.base.as_fraction(c)
            mono = "" if k == 0 else (v if k == 1 else f"{v}^{k}")
            if fr is not None:
                neg = fr < 0
                mag = -fr if neg else fr
                if not mono:
                    body = str(mag)
                else:
                    body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                neg = False
                inner = f"({self.base.format(c)})"
                body = inner if not mono else f"{inner}*{mono}"
            terms.append((neg, body))
        out = ""
        for i, (neg, body) in enumerate(terms):
            if i == 0:
                out = ("-" if neg else "") + body
            else:
                out += (" - " if neg else " + ") + body
        return out or "0"

    def format(self, a):
        num, den = a
        if not num:
            return "0"
        ns = self._pformat(num)
        if len(den) == 1:
            return ns
        return f"({ns})/({self._pformat(den)})"


class Scalar:
    """An immutable exact field element."""

    __slots__ = ("field", "data")

    def __init__(self, field, data):
        self.field = field
        self.data = data

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch(f"cannot combine {self.field} with {other.field}")
            return other.data
        if isinstance(other, (int, Fraction)):
            return self.field.ops.from_fraction(Fraction(other))
        return NotImplemented

    def __add__(self, other):
        d = self._coerce(other)
        if d is NotImplemented:
            return d
        return Scalar(self.field, self.field.ops.add(self.data, d))

    __radd__ = __add__

    def __sub__(self, other):
        d = self._coerce(other)
        if d is NotImplemented:
            return d
        return Scalar(self.field, self.field.ops.sub(self.data, d))

    def __rsub__(self, other):
        d = self._coerce(other)
        if d is NotImplemented:
            return d
        return Scalar(self.field, self.field.ops.sub(d, self.data))

    def __mul__(self, other):
        d = self._coerce(other)
        if d is NotImplemented:
            return d
        return Scalar(self.field, self.field.ops.mul(self.data, d))

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(self.field, self.field.ops.neg(self.data))

    def inverse(self):
        return Scalar(self.field, self.field.ops.inv(self.data))

    def __truediv__(self, other):
        d = self._coerce(other)
        if d is NotImplemented:
            return d
        return Scalar(self.field, self.field.ops.mul(self.data, self.field.ops.inv(d)))

    def __rtruediv__(self, other):
        d = self._coerce(other)
        if d is NotImplemented:
            return d
        return Scalar(self.field, self.field.ops.mul(d, self.field.ops.inv(self.data)))

    def __pow__(self, k):
        if not isinstance(k, int):
            raise TypeError("exponent must be an integer")
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = self.field.one()
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.data == other.data
        if isinstance(other, (int, Fraction)):
            return self.data == self.field.ops.from_fraction(Fraction(other))
        return NotImplemented

    def __hash__(self):
        return hash(self.data)

    def __bool__(self):
        return not self.field.ops.is_zero(self.data)

    def is_zero(self):
        return self.field.ops.is_zero(self.data)

    def as_fraction(self):
        return self.field.ops.as_fraction(self.data)

    def __str__(self):
        return self.field.ops.format(self.data)

    def __repr__(self):
        return f"Scalar({str(self)!r}, {self.field})"


def primitive_root(field):
    """A primitive n-th root of unity z of the cyclotomic layer of `field`."""
    layer = field.cyclotomic_layer()
    if layer is None:
        raise FieldMismatch(f"{field} has no cyclotomic layer")
    if field.kind == "cyclotomic":
        return Scalar(field, field.ops.gen())
    return Scalar(field, field.ops.gen())


def variable(field):
    if field.kind != "rational-functions":
        raise FieldMismatch(f"{field} has no function variable")
    return Scalar(field, field.ops.var())


# ---------------------------------------------------------------------------
# parser

def _tokenize(text):
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
        elif ch.isdigit():
            end = pos
            while end < n and text[end].isdigit():
                end += 1
            toks.append(("int", text[pos:end], pos))
            pos = end
        elif ch.isalpha() or ch == "_":
            end = pos
            while end < n and (text[end].isalnum() or text[end] == "_"):
                end += 1
            toks.append(("name", text[pos:end], pos))
            pos = end
        elif ch in "+-*/^()":
            toks.append(("op", ch, pos))
            pos += 1
        else:
            raise ScalarParseError(f"unexpected character {ch!r}", text, pos)
    toks.append(("end", "", n))
    return toks


class _Parser:
    def __init__(self, text, field):
        self.text = text
        self.field = field
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise ScalarParseError(msg, self.text, tok[2])

    def parse(self):
        if self.peek()[0] == "end":
            self.fail("empty expression")
        v = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return v

    def expr(self):
        v = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.unary()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            tok = self.take()
            w = self.unary()
            if tok[1] == "*":
                v = v * w
            else:
                if w.is_zero():
                    raise ScalarDivisionByZero(f"division by zero at position {tok[2]}: {self.text!r}")
                v = v / w
        return v

    def unary(self):
        if self.peek()[:2] == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek()[:2] == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def exponent(self):
        sign = 1
        paren = False
        if self.peek()[:2] == ("op", "("):
            self.take()
            paren = True
        while self.peek()[:2] in (("op", "-"), ("op", "+")):
            if self.take()[1] == "-":
                sign = -sign
        tok = self.peek()
        if tok[0] != "int":
            self.fail("exponent must be an integer")
        self.take()
        if paren:
            if self.peek()[:2] != ("op", ")"):
                self.fail("expected ')'")
            self.take()
        return sign * int(tok[1])

    def power(self):
        v = self.atom()
        if self.peek()[:2] == ("op", "^"):
            tok = self.take()
            k = self.exponent()
            if k < 0 and v.is_zero():
                raise ScalarDivisionByZero(f"division by zero at position {tok[2]}: {self.text!r}")
            v = v ** k
        return v

    def atom(self):
        tok = self.peek()
        f = self.field
        if tok[0] == "int":
            self.take()
            return f(int(tok[1]))
        if tok[0] == "name":
            self.take()
            name = tok[1]
            if name == "z":
                if f.cyclotomic_layer() is None:
                    raise FieldMismatch(f"symbol 'z' at position {tok[2]} needs a cyclotomic field, got {f}")
                return primitive_root(f)
            if f.kind == "rational-functions" and name == f.var:
                return variable(f)
            raise FieldMismatch(f"symbol {name!r} at position {tok[2]} is not defined in {f}")
        if tok[:2] == ("op", "("):
            self.take()
            v = self.expr()
            if self.peek()[:2] != ("op", ")"):
                self.fail("expected ')'")
            self.take()
            return v
        self.fail("expected a number, symbol or '('")


def parse_scalar(text, field):
    """Parse a coefficient expression into a canonical scalar of `field`."""
    return _Parser(str(text), field).parse()
