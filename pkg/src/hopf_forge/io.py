"""
The hopf-forge/1 interchange format.

A document is a JSON object

    {"format": "hopf-forge/1",
     "field": "cyclotomic(3)",
     "spaces": {"V": {"dim": 2, "labels": ["1", "g"]}},
     "maps": {"H.mult": {"domain": ["V", "V"], "codomain": ["V"],
                         "entries": [[[0], [0, 0], "1"], ...]}},
     "structures": {"H": {"type": "hopf", "mult": "H.mult", ...}},
     "metadata": {...}}

Coefficients are strings in the canonical scalar syntax.  Saving is
canonical: keys sorted, entries sorted by (output, input) multi-index, one
entry per line, so equal documents are equal byte strings.  Every
structural error names the offending location as a JSON pointer.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

from .scalars import FieldSpec, ScalarError, parse_field, parse_scalar
from .tensor import MultiMap, ShapeError, Space

FORMAT = "hopf-forge/1"


class DocumentError(ValueError):
    """A malformed document; `pointer` locates the problem."""

    def __init__(self, message, pointer=""):
        self.pointer = pointer or "/"
        self.message = message
        super().__init__(f"{self.pointer}: {message}")


def _escape(token):
    return str(token).replace("~", "~0").replace("/", "~1")


def pointer(*parts):
    return "".join("/" + _escape(p) for p in parts)


# field descriptions for every structure type: role -> (kind, required)
SCHEMAS = {
    "algebra": {"mult": ("map", True), "unit": ("map", True)},
    "coalgebra": {"comult": ("map", True), "counit": ("map", True)},
    "bialgebra": {"mult": ("map", True), "unit": ("map", True),
                  "comult": ("map", True), "counit": ("map", True)},
    "hopf": {"mult": ("map", True), "unit": ("map", True), "comult": ("map", True),
             "counit": ("map", True), "antipode": ("map", False), "antipode_inverse": ("map", False)},
    "quasitriangular": {"hopf": ("structure", True), "R": ("map", True)},
    "dual-quasitriangular": {"hopf": ("structure", True), "r": ("map", True)},
    "braided-hopf": {"mult": ("map", True), "unit": ("map", True), "comult": ("map", True),
                     "counit": ("map", True), "antipode": ("map", False),
                     "antipode_inverse": ("map", False), "action": ("map", True),
                     "ambient": ("structure", True), "inverse_braiding": ("bool", False)},
    "pairing": {"C": ("structure", True), "B": ("structure", True), "ev": ("map", True),
                "coev": ("map", False)},
    "module": {"over": ("structure", True), "action": ("map", True)},
    "yd-module": {"over": ("structure", True), "action": ("map", True), "coaction": ("map", True),
                  "h_action": ("map", True), "side": ("str", False)},
    "comodule-algebra": {"algebra": ("structure", True), "over": ("structure", True),
                         "coaction": ("map", True)},
    "cocycle": {"over": ("structure", True), "sigma": ("map", True), "side": ("str", False)},
    "cycle": {"over": ("structure", True), "c": ("map", True)},
}

# which structure types a reference may point to
REF_TYPES = {
    ("quasitriangular", "hopf"): {"hopf"},
    ("dual-quasitriangular", "hopf"): {"hopf"},
    ("braided-hopf", "ambient"): {"quasitriangular"},
    ("pairing", "C"): {"braided-hopf"},
    ("pairing", "B"): {"braided-hopf"},
    ("module", "over"): {"hopf", "bialgebra", "algebra", "braided-hopf"},
    ("yd-module", "over"): {"braided-hopf"},
    ("comodule-algebra", "algebra"): {"algebra"},
    ("comodule-algebra", "over"): {"hopf", "bialgebra", "braided-hopf"},
    ("cocycle", "over"): {"hopf", "bialgebra", "braided-hopf"},
    ("cycle", "over"): {"hopf", "bialgebra", "braided-hopf"},
}


@dataclass
class Document:
    field: FieldSpec
    spaces: dict = dc_field(default_factory=dict)       # name -> Space
    maps: dict = dc_field(default_factory=dict)         # name -> MultiMap
    structures: dict = dc_field(default_factory=dict)   # name -> {"type": ..., role: ref}
    metadata: dict = dc_field(default_factory=dict)

    def __eq__(self, other):
        return isinstance(other, Document) and dumps(self) == dumps(other)

    def structure_type(self, name):
        try:
            return self.structures[name]["type"]
        except KeyError:
            raise DocumentError(f"unknown structure {name!r}", pointer("structures", name)) from None


# ---------------------------------------------------------------------------
# serialization

def _map_json(f, space_names):
    rows = sorted(f.entries.items())
    return {
        "domain": [space_names[s] for s in f.domain],
        "codomain": [space_names[s] for s in f.codomain],
        "entries": [[list(o), list(i), str(c)] for (o, i), c in rows],
    }


def to_json(doc):
    names = {}
    spaces = {}
    for name, V in doc.spaces.items():
        names[V] = name
        spaces[name] = {"dim": V.dim, "labels": list(V.basis_labels)}
    maps = {}
    for name, f in doc.maps.items():
        if f.field != doc.field:
            raise DocumentError(f"map over {f.field}, document over {doc.field}", pointer("maps", name))
        for V in f.domain + f.codomain:
            if V not in names:
                raise DocumentError(f"space {V.name!r} is not declared", pointer("maps", name))
        maps[name] = _map_json(f, names)
    return {"format": FORMAT, "field": str(doc.field), "spaces": spaces, "maps": maps,
            "structures": doc.structures, "metadata": doc.metadata}


def _encode(obj, indent, level):
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k), ensure_ascii=False)}: {_encode(obj[k], indent, level + 1)}"
                 for k in sorted(obj)]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(not isinstance(x, (dict, list, tuple)) for x in obj):
            return json.dumps(list(obj), ensure_ascii=False, separators=(", ", ": "))
        items = [pad + _encode(x, indent, level + 1) for x in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    return json.dumps(obj, ensure_ascii=False)


def _encode_row(row):
    return json.dumps(row, ensure_ascii=False, separators=(",", ":"))


def dumps(doc):
    """Canonical text of a document (ends with a newline)."""
    data = to_json(doc)
    # entries are written one per line; everything else goes through _encode
    maps = data.pop("maps")
    placeholder = {}
    for name, m in maps.items():
        rows = m["entries"]
        body = "[]" if not rows else "[\n" + ",\n".join("        " + _encode_row(r) for r in rows) + "\n      ]"
        key = f"\x00{len(placeholder)}\x00"
        placeholder[key] = body
        m = dict(m, entries=key)
        maps[name] = m
    data["maps"] = maps
    text = _encode(data, 2, 0)
    for key, body in placeholder.items():
        text = text.replace(json.dumps(key), body, 1)
    return text + "\n"


def save(doc, path):
    text = dumps(doc)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    return text


# ---------------------------------------------------------------------------
# parsing

def _expect(cond, message, ptr):
    if not cond:
        raise DocumentError(message, ptr)


def _is_index_list(x):
    return isinstance(x, list) and all(isinstance(k, int) and not isinstance(k, bool) for k in x)


def from_json(data, field=None):
    """Validate a decoded JSON object and build the Document."""
    _expect(isinstance(data, dict), "a document is a JSON object", "/")
    _expect(data.get("format") == FORMAT, f"format must be {FORMAT!r}", "/format")
    for key in data:
        _expect(key in ("format", "field", "spaces", "maps", "structures", "metadata"),
                f"unknown top-level key {key!r}", pointer(key))
    try:
        fld = parse_field(data.get("field", ""))
    except ScalarError as exc:
        raise DocumentError(str(exc), "/field") from None
    if field is not None and field != fld:
        raise DocumentError(f"document is over {fld}, expected {field}", "/field")
    doc = Document(fld)

    spaces = data.get("spaces", {})
    _expect(isinstance(spaces, dict), "spaces must be an object", "/spaces")
    for name, s in spaces.items():
        ptr = pointer("spaces", name)
        _expect(isinstance(s, dict), "a space is an object", ptr)
        dim = s.get("dim")
        _expect(isinstance(dim, int) and not isinstance(dim, bool) and dim >= 1,
                "dim must be a positive integer", ptr + "/dim")
        labels = s.get("labels")
        if labels is not None:
            _expect(isinstance(labels, list) and all(isinstance(x, str) for x in labels),
                    "labels must be a list of strings", ptr + "/labels")
        try:
            doc.spaces[name] = Space(name, dim, tuple(labels) if labels is not None else None)
        except ShapeError as exc:
            raise DocumentError(str(exc), ptr) from None

    maps = data.get("maps", {})
    _expect(isinstance(maps, dict), "maps must be an object", "/maps")
    for name, m in maps.items():
        doc.maps[name] = _parse_map(m, doc, pointer("maps", name))

    structures = data.get("structures", {})
    _expect(isinstance(structures, dict), "structures must be an object", "/structures")
    doc.structures = {k: dict(v) if isinstance(v, dict) else v for k, v in structures.items()}
    for name in structures:
        _validate_structure(doc, name)

    meta = data.get("metadata", {})
    _expect(isinstance(meta, dict), "metadata must be an object", "/metadata")
    doc.metadata = meta
    return doc


def _parse_map(m, doc, ptr):
    _expect(isinstance(m, dict), "a map is an object", ptr)
    sides = {}
    for side in ("domain", "codomain"):
        names = m.get(side)
        _expect(isinstance(names, list), f"{side} must be a list of space names", f"{ptr}/{side}")
        out = []
        for k, n in enumerate(names):
            _expect(isinstance(n, str) and n in doc.spaces, f"unresolved space {n!r}", f"{ptr}/{side}/{k}")
            out.append(doc.spaces[n])
        sides[side] = tuple(out)
    dom, cod = sides["domain"], sides["codomain"]
    rows = m.get("entries")
    _expect(isinstance(rows, list), "entries must be a list", f"{ptr}/entries")
    entries = {}
    for k, row in enumerate(rows):
        rp = f"{ptr}/entries/{k}"
        _expect(isinstance(row, list) and len(row) == 3, "an entry is [output, input, coefficient]", rp)
        o, i, c = row
        _expect(_is_index_list(o) and len(o) == len(cod), "output multi-index does not match the codomain",
                rp + "/0")
        _expect(_is_index_list(i) and len(i) == len(dom), "input multi-index does not match the domain",
                rp + "/1")
        _expect(all(0 <= x < V.dim for x, V in zip(o, cod)), "output index out of range", rp + "/0")
        _expect(all(0 <= x < V.dim for x, V in zip(i, dom)), "input index out of range", rp + "/1")
        _expect(isinstance(c, str), "coefficients are strings", rp + "/2")
        try:
            val = parse_scalar(c, doc.field)
        except ScalarError as exc:
            raise DocumentError(f"coefficient {c!r} does not parse in {doc.field}: {exc}", rp + "/2") from None
        key = (tuple(o), tuple(i))
        _expect(key not in entries, "duplicate entry", rp)
        if val:
            entries[key] = val
    return MultiMap(dom, cod, entries, doc.field)


def _carrier_of(doc, name):
    """The single carrier space of an algebra-like structure."""
    s = doc.structures[name]
    if s["type"] in ("algebra", "bialgebra", "hopf", "braided-hopf"):
        return doc.maps[s["mult"]].codomain
    if s["type"] == "coalgebra":
        return doc.maps[s["comult"]].domain
    return None


def _validate_structure(doc, name):
    ptr = pointer("structures", name)
    s = doc.structures[name]
    _expect(isinstance(s, dict), "a structure is an object", ptr)
    kind = s.get("type")
    _expect(kind in SCHEMAS, f"unknown structure type {kind!r}", ptr + "/type")
    schema = SCHEMAS[kind]
    for role in s:
        _expect(role == "type" or role in schema, f"unexpected field {role!r} for {kind}", f"{ptr}/{_escape(role)}")
    for role, (what, required) in schema.items():
        rp = f"{ptr}/{_escape(role)}"
        if role not in s:
            _expect(not required, f"missing {role!r}", rp)
            continue
        ref = s[role]
        if what == "map":
            _expect(isinstance(ref, str) and ref in doc.maps, f"unresolved map reference {ref!r}", rp)
        elif what == "structure":
            _expect(isinstance(ref, str) and ref in doc.structures, f"unresolved structure reference {ref!r}", rp)
            _expect(ref != name, "a structure cannot refer to itself", rp)
            target = doc.structures[ref]
            allowed = REF_TYPES.get((kind, role))
            if allowed is not None and isinstance(target, dict):
                _expect(target.get("type") in allowed,
                        f"{ref!r} has type {target.get('type')!r}, expected one of {sorted(allowed)}", rp)
        elif what == "bool":
            _expect(isinstance(ref, bool), f"{role} must be true or false", rp)
        else:
            _expect(isinstance(ref, str), f"{role} must be a string", rp)
    _check_shapes(doc, name, kind, s, ptr)


def _shape(doc, ptr, role, ref, dom, cod):
    f = doc.maps[ref]
    if f.domain != tuple(dom) or f.codomain != tuple(cod):
        got = f"{[V.name for V in f.domain]} -> {[V.name for V in f.codomain]}"
        want = f"{[V.name for V in dom]} -> {[V.name for V in cod]}"
        raise DocumentError(f"dimension mismatch: {ref!r} is {got}, expected {want}", f"{ptr}/{role}")


def _check_shapes(doc, name, kind, s, ptr):
    maps = doc.maps
    if kind in ("algebra", "bialgebra", "hopf", "braided-hopf"):
        cod = maps[s["mult"]].codomain
        _expect(len(cod) == 1, "mult must land in a single space", ptr + "/mult")
        V = cod[0]
        _shape(doc, ptr, "mult", s["mult"], (V, V), (V,))
        _shape(doc, ptr, "unit", s["unit"], (), (V,))
        if kind != "algebra":
            _shape(doc, ptr, "comult", s["comult"], (V,), (V, V))
            _shape(doc, ptr, "counit", s["counit"], (V,), ())
        for role in ("antipode", "antipode_inverse"):
            if role in s:
                _shape(doc, ptr, role, s[role], (V,), (V,))
        if kind == "braided-hopf":
            Hs = _carrier_of(doc, doc.structures[s["ambient"]]["hopf"])
            _shape(doc, ptr, "action", s["action"], (Hs[0], V), (V,))
    elif kind == "coalgebra":
        dom = maps[s["comult"]].domain
        _expect(len(dom) == 1, "comult must start from a single space", ptr + "/comult")
        V = dom[0]
        _shape(doc, ptr, "comult", s["comult"], (V,), (V, V))
        _shape(doc, ptr, "counit", s["counit"], (V,), ())
    elif kind in ("quasitriangular", "dual-quasitriangular"):
        (H,) = _carrier_of(doc, s["hopf"])
        if kind == "quasitriangular":
            _shape(doc, ptr, "R", s["R"], (), (H, H))
        else:
            _shape(doc, ptr, "r", s["r"], (H, H), ())
    elif kind == "pairing":
        (C,) = _carrier_of(doc, s["C"])
        (B,) = _carrier_of(doc, s["B"])
        _expect(doc.structures[s["C"]]["ambient"] == doc.structures[s["B"]]["ambient"],
                "C and B must share their ambient", ptr + "/B")
        _shape(doc, ptr, "ev", s["ev"], (C, B), ())
        if "coev" in s:
            _shape(doc, ptr, "coev", s["coev"], (), (B, C))
    elif kind == "module":
        (X,) = _carrier_of(doc, s["over"])
        act = maps[s["action"]]
        _expect(len(act.domain) >= 2 and act.domain[0] == X, "action must be a map over⊗V -> V", ptr + "/action")
        _shape(doc, ptr, "action", s["action"], act.domain, act.domain[1:])
    elif kind == "yd-module":
        (X,) = _carrier_of(doc, s["over"])
        side = s.get("side", "left")
        _expect(side in ("left", "right"), "side is left or right", ptr + "/side")
        act = maps[s["action"]]
        V = act.codomain
        _expect(len(V) >= 1, "action must land in V", ptr + "/action")
        if side == "left":
            _shape(doc, ptr, "action", s["action"], (X,) + V, V)
            _shape(doc, ptr, "coaction", s["coaction"], V, (X,) + V)
        else:
            _shape(doc, ptr, "action", s["action"], V + (X,), V)
            _shape(doc, ptr, "coaction", s["coaction"], V, V + (X,))
        amb = doc.structures[doc.structures[s["over"]]["ambient"]]
        (Hs,) = _carrier_of(doc, amb["hopf"])
        _shape(doc, ptr, "h_action", s["h_action"], (Hs,) + V, V)
    elif kind == "comodule-algebra":
        (A,) = _carrier_of(doc, s["algebra"])
        (X,) = _carrier_of(doc, s["over"])
        _shape(doc, ptr, "coaction", s["coaction"], (A,), (X, A))
    elif kind == "cocycle":
        (X,) = _carrier_of(doc, s["over"])
        _expect(s.get("side", "right") in ("left", "right"), "side is left or right", ptr + "/side")
        _shape(doc, ptr, "sigma", s["sigma"], (X, X), ())
    elif kind == "cycle":
        (X,) = _carrier_of(doc, s["over"])
        _shape(doc, ptr, "c", s["c"], (), (X, X))


def loads(text, field=None):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})", "/") from None
    return from_json(data, field)


def load(path, field=None):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}", "/") from None
    return loads(text, field)


# ---------------------------------------------------------------------------
# library objects -> documents

class DocumentBuilder:
    """Collects spaces, maps and structures while dumping library objects.

    Objects already added (by identity) are not written twice, so shared
    ambients and bialgebras become shared references.
    """

    def __init__(self, field, metadata=None):
        self.doc = Document(field, metadata=dict(metadata or {}))
        self._seen = {}
        self._space_names = {}

    # -- low level
    def _space(self, V):
        name = self._space_names.get(V)
        if name is not None:
            return V
        name = V.name
        k = 2
        while name in self.doc.spaces and self.doc.spaces[name] != V:
            name = f"{V.name}~{k}"
            k += 1
        if name != V.name:
            V2 = Space(name, V.dim, V.basis_labels)
        else:
            V2 = V
        self.doc.spaces[name] = V2
        self._space_names[V] = name
        self._space_names[V2] = name
        return V2

    def map(self, name, f):
        if f.field != self.doc.field:
            raise DocumentError(f"map {name!r} is over {f.field}, document over {self.doc.field}")
        dom = tuple(self._space(V) for V in f.domain)
        cod = tuple(self._space(V) for V in f.codomain)
        if dom != f.domain or cod != f.codomain:
            f = f.with_spaces(dom, cod)
        if name in self.doc.maps and self.doc.maps[name] != f:
            raise DocumentError(f"two different maps named {name!r}")
        self.doc.maps[name] = f
        return name

    def structure(self, name, kind, obj=None, **refs):
        if name in self.doc.structures:
            raise DocumentError(f"structure {name!r} written twice")
        self.doc.structures[name] = {"type": kind, **refs}
        if obj is not None:
            self._seen[id(obj)] = name
        return name

    def _known(self, obj):
        return self._seen.get(id(obj))

    # -- structures
    def _maps_of(self, name, obj, roles):
        out = {}
        for role in roles:
            f = getattr(obj, role, None)
            if f is not None:
                out[role] = self.map(f"{name}.{role}", f)
        return out

    def algebra(self, name, A):
        known = self._known(A)
        if known:
            return known
        return self.structure(name, "algebra", A, **self._maps_of(name, A, ("mult", "unit")))

    def hopf(self, name, H):
        from .braided import BraidedBialgebra
        if isinstance(H, BraidedBialgebra):
            return self.braided(name, H)
        known = self._known(H)
        if known:
            return known
        roles = ("mult", "unit", "comult", "counit", "antipode", "antipode_inverse")
        kind = "hopf" if getattr(H, "antipode", None) is not None else "bialgebra"
        if kind == "bialgebra":
            roles = roles[:4]
        return self.structure(name, kind, H, **self._maps_of(name, H, roles))

    def quasitriangular(self, name, qt):
        known = self._known(qt)
        if known:
            return known
        h = self.hopf(f"{name}.H", qt.H)
        return self.structure(name, "quasitriangular", qt, hopf=h, R=self.map(f"{name}.R", qt.R))

    def dual_quasitriangular(self, name, dqt):
        known = self._known(dqt)
        if known:
            return known
        h = self.hopf(f"{name}.H", dqt.H)
        return self.structure(name, "dual-quasitriangular", dqt, hopf=h, r=self.map(f"{name}.r", dqt.r))

    def _ambient(self, amb):
        key = ("ambient", id(amb.qt))
        known = self._seen.get(key)
        if known:
            return known
        base = "ambient"
        name, k = base, 2
        while name in self.doc.structures:
            name, k = f"{base}{k}", k + 1
        self.quasitriangular(name, amb.qt)
        self._seen[key] = name
        return name

    def braided(self, name, B):
        known = self._known(B)
        if known:
            return known
        roles = ("mult", "unit", "comult", "counit", "antipode", "antipode_inverse", "action")
        refs = self._maps_of(name, B, roles)
        refs["ambient"] = self._ambient(B.ambient)
        if B.ambient.inverse:
            refs["inverse_braiding"] = True
        return self.structure(name, "braided-hopf", B, **refs)

    def pairing(self, name, P):
        known = self._known(P)
        if known:
            return known
        c = self.braided(f"{name}.C", P.C)
        b = self.braided(f"{name}.B", P.B)
        refs = {"C": c, "B": b, "ev": self.map(f"{name}.ev", P.ev)}
        if P.coev is not None:
            refs["coev"] = self.map(f"{name}.coev", P.coev)
        return self.structure(name, "pairing", P, **refs)

    def yd_module(self, name, Y):
        known = self._known(Y)
        if known:
            return known
        over = self.braided(f"{name}.over", Y.over)
        return self.structure(name, "yd-module", Y, over=over, side=Y.side,
                              action=self.map(f"{name}.action", Y.action),
                              coaction=self.map(f"{name}.coaction", Y.coaction),
                              h_action=self.map(f"{name}.h_action", Y.module.action))

    def module(self, name, over_name, action):
        return self.structure(name, "module", over=over_name, action=self.map(f"{name}.action", action))

    def comodule_algebra(self, name, algebra, coaction, over):
        a = self.algebra(f"{name}.A", algebra)
        o = self.hopf(f"{name}.over", over)
        return self.structure(name, "comodule-algebra", over=o, algebra=a,
                              coaction=self.map(f"{name}.coaction", coaction))

    def cocycle(self, name, s):
        known = self._known(s)
        if known:
            return known
        over = self.hopf(f"{name}.over", s.over)
        return self.structure(name, "cocycle", s, over=over, side=s.side,
                              sigma=self.map(f"{name}.sigma", s.sigma))

    def cycle(self, name, cyc):
        over = self.hopf(f"{name}.over", cyc.over)
        return self.structure(name, "cycle", cyc, over=over, c=self.map(f"{name}.c", cyc.c))


# ---------------------------------------------------------------------------
# documents -> library objects

class Realizer:
    """Turns document structures into library objects (memoized)."""

    def __init__(self, doc):
        self.doc = doc
        self._cache = {}

    def get(self, name):
        if name not in self._cache:
            kind = self.doc.structure_type(name)
            self._cache[name] = getattr(self, "_" + kind.replace("-", "_"))(name, self.doc.structures[name])
        return self._cache[name]

    def _m(self, s, role):
        ref = s.get(role)
        return None if ref is None else self.doc.maps[ref]

    def _carrier(self, s):
        return self.doc.maps[s["mult"]].codomain[0]

    def _algebra(self, name, s):
        from .hopf import AlgebraData
        return AlgebraData(self._carrier(s), self._m(s, "mult"), self._m(s, "unit"))

    def _coalgebra(self, name, s):
        from .hopf import CoalgebraData
        return CoalgebraData(self.doc.maps[s["comult"]].domain[0], self._m(s, "comult"), self._m(s, "counit"))

    def _bialgebra(self, name, s):
        from .hopf import BialgebraData
        return BialgebraData(self._carrier(s), *(self._m(s, r) for r in ("mult", "unit", "comult", "counit")))

    def _hopf(self, name, s):
        from .hopf import HopfData
        return HopfData(self._carrier(s), *(self._m(s, r) for r in
                                             ("mult", "unit", "comult", "counit", "antipode", "antipode_inverse")))

    def _quasitriangular(self, name, s):
        from .hopf import QuasiTriangular
        return QuasiTriangular(self.get(s["hopf"]), self._m(s, "R"))

    def _dual_quasitriangular(self, name, s):
        from .hopf import DualQuasiTriangular
        return DualQuasiTriangular(self.get(s["hopf"]), self._m(s, "r"))

    def _braided_hopf(self, name, s):
        from .braided import Ambient, BraidedBialgebra
        key = ("ambient", s["ambient"], bool(s.get("inverse_braiding", False)))
        amb = self._cache.get(key)
        if amb is None:
            amb = Ambient(self.get(s["ambient"]), inverse=bool(s.get("inverse_braiding", False)))
            self._cache[key] = amb
        return BraidedBialgebra(self._carrier(s), *(self._m(s, r) for r in
                                                    ("mult", "unit", "comult", "counit", "antipode",
                                                     "antipode_inverse", "action")), amb)

    def _pairing(self, name, s):
        from .double import Pairing
        return Pairing(self.get(s["C"]), self.get(s["B"]), self._m(s, "ev"), self._m(s, "coev"))

    def _module(self, name, s):
        return {"over": self.get(s["over"]), "action": self._m(s, "action")}

    def _yd_module(self, name, s):
        from .braided import HModule, YDModule
        B = self.get(s["over"])
        act = self._m(s, "action")
        mod = HModule(act.codomain, self._m(s, "h_action"), B.ambient)
        return YDModule(mod, B, act, self._m(s, "coaction"), s.get("side", "left"))

    def _comodule_algebra(self, name, s):
        from .double import PlainComoduleAlgebra
        return PlainComoduleAlgebra(self.get(s["algebra"]), self._m(s, "coaction"), self.get(s["over"]))

    def _cocycle(self, name, s):
        from .cocycle import Cocycle2
        return Cocycle2(self.get(s["over"]), self._m(s, "sigma"), side=s.get("side", "right"), name=name)

    def _cycle(self, name, s):
        from .braided import as_braided
        from .cocycle import Cycle2
        over = self.get(s["over"])
        return Cycle2(over if hasattr(over, "ambient") else as_braided(over), self._m(s, "c"))


def check_structure(doc, name, realizer=None):
    """Run the checker suite that fits the structure's type; returns a Report."""
    from . import braided, cocycle, double, hopf
    R = realizer or Realizer(doc)
    kind = doc.structure_type(name)
    obj = R.get(name)
    label = f"{name} ({kind})"
    if kind == "algebra":
        return hopf.check_algebra(obj, name=label)
    if kind == "coalgebra":
        return hopf.check_coalgebra(obj, name=label)
    if kind == "bialgebra":
        return hopf.check_bialgebra(obj, name=label)
    if kind == "hopf":
        return hopf.check_hopf(obj, name=label)
    if kind == "quasitriangular":
        return hopf.check_quasitriangular(obj, name=label)
    if kind == "dual-quasitriangular":
        return hopf.check_dual_quasitriangular(obj, name=label)
    if kind == "braided-hopf":
        return braided.check_braided_bialgebra(obj, name=label)
    if kind == "pairing":
        return double.check_pairing(obj, name=label)
    if kind == "module":
        over, act = obj["over"], obj["action"]
        rep = hopf.Report(label)
        for r in braided.check_left_action(act, over.mult, over.unit, _Spaces(act.codomain, act.field), "action"):
            rep.add(r)
        return rep
    if kind == "yd-module":
        return braided.check_yd(obj, name=label)
    if kind == "comodule-algebra":
        return double.check_plain_comodule_algebra(obj, name=label)
    if kind == "cocycle":
        return cocycle.check_cocycle(obj, name=label)
    if kind == "cycle":
        return cocycle.check_cycle(obj, name=label)
    raise DocumentError(f"no checker for type {kind!r}", pointer("structures", name, "type"))


class _Spaces:
    """Minimal stand-in carrying `.spaces` for the action checkers."""

    def __init__(self, spaces, field):
        self.spaces = tuple(spaces)
        self.field = field
