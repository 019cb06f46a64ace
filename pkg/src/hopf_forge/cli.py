"""
Command line front end: `hopf-forge check|build|dump|list`.

Exit codes: 0 when every check passes, 1 when a check fails, 2 for bad
input (unreadable documents, unknown names, malformed flags).
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .catalog import DEFAULT_INSTANCES, ENTRIES, CatalogError, CatalogItem, UnknownEntry, lookup
from .hopf import AxiomResult, Report
from .io import (
    FORMAT, DocumentBuilder, DocumentError, Realizer, check_structure, load, save,
)
from .scalars import ScalarError, parse_field

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
BUILD_KINDS = ("double", "heis", "smash", "bosonize", "twist", "compose-cocycles")


class InputError(Exception):
    """Bad user input; reported with exit code 2."""


# ---------------------------------------------------------------------------
# checking catalog items

def check_item(item):
    """A Report for a built catalog item (constructors already ran their own checks)."""
    from . import braided, cocycle, double, hopf
    k, obj = item.kind, item.obj
    if k == "hopf":
        return hopf.check_hopf(obj, name=item.name)
    if k == "braided-hopf":
        return braided.check_braided_bialgebra(obj, name=item.name)
    if k == "quasitriangular":
        return hopf.check_quasitriangular(obj, name=item.name)
    if k == "dual-quasitriangular":
        return hopf.check_dual_quasitriangular(obj, name=item.name)
    if k == "pairing":
        return double.check_pairing(obj, name=item.name)
    if k == "double":
        rep = double.check_double(obj)
        rep.subject = item.name
        return rep
    if k == "yd-module":
        return braided.check_yd(obj, name=item.name)
    if k == "cocycle":
        return cocycle.check_cocycle(obj, name=item.name)
    if k == "cycle":
        return cocycle.check_cycle(obj, name=item.name)
    raise InputError(f"no checker for catalog kind {k!r}")


def _failed_construction(name, exc):
    rep = Report(name)
    rep.add(AxiomResult("construction", False, detail=str(exc).splitlines()[0] if str(exc) else ""))
    return rep


def _check_catalog_entry(args):
    name, field_text = args
    t0 = time.perf_counter()
    field = parse_field(field_text) if field_text else None
    try:
        item = lookup(name, field)
        rep = check_item(item)
    except UnknownEntry:
        raise
    except CatalogError as exc:
        rep = _failed_construction(name, exc)
    return name, rep.to_dict(), rep.to_text(), time.perf_counter() - t0


# ---------------------------------------------------------------------------
# documents for catalog items and build outputs

def _provenance(command, inputs, construction):
    return {"provenance": {"command": command, "inputs": inputs, "construction": construction,
                           "versions": {"hopf-forge": __version__, "format": FORMAT}}}


def item_document(item, metadata=None):
    """Dump a catalog item; the main structure is named after its kind."""
    obj = item.obj
    if item.kind == "double":
        field = obj.hopf.field
    elif item.kind in ("quasitriangular", "dual-quasitriangular"):
        field = obj.H.field
    elif item.kind in ("yd-module", "cycle"):
        field = obj.over.field
    else:
        field = obj.field
    b = DocumentBuilder(field, metadata)
    k = item.kind
    if k == "hopf":
        b.hopf("H", obj)
    elif k == "braided-hopf":
        b.braided("B", obj)
    elif k == "quasitriangular":
        b.quasitriangular("QT", obj)
    elif k == "dual-quasitriangular":
        b.dual_quasitriangular("DQT", obj)
    elif k == "pairing":
        b.pairing("P", obj)
    elif k == "double":
        b.hopf("Drin", obj.hopf)
        b.pairing("P", item.pairing)
        if obj.R is not None:
            b.quasitriangular("Drin.qt", obj.quasitriangular())
    elif k == "yd-module":
        b.yd_module("V", obj)
    elif k == "cocycle":
        b.cocycle("sigma", obj)
    elif k == "cycle":
        b.cycle("c", obj)
    else:
        raise InputError(f"cannot dump kind {k!r}")
    return b.doc


# ---------------------------------------------------------------------------
# output

def _emit(reports, fmt, out=None, extra=None):
    out = out or sys.stdout
    ok = all(r.ok for r in reports)
    if fmt == "json":
        data = {"format": FORMAT, "ok": ok,
                "reports": sorted((r.to_dict() for r in reports), key=lambda d: d["subject"])}
        if extra:
            data.update(extra)
        out.write(json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n")
    else:
        for r in sorted(reports, key=lambda r: r.subject):
            out.write(r.to_text() + "\n")
        if extra:
            for k in sorted(extra):
                out.write(f"{k}: {extra[k]}\n")
        out.write(("PASS" if ok else "FAIL") + f" ({len(reports)} report{'s' if len(reports) != 1 else ''})\n")
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------------------
# check

def cmd_check(args):
    field = _field(args)
    if args.all:
        return _check_all(args, field)
    if args.catalog:
        item = _lookup(args.catalog, field, args.jobs)
        return _emit([check_item(item)], args.report_format)
    if not args.file:
        raise InputError("check needs a document, --catalog NAME or --all")
    doc = load(args.file, field)
    R = Realizer(doc)
    names = [args.structure] if args.structure else sorted(doc.structures)
    if not names:
        raise InputError(f"{args.file} contains no structures")
    reports = []
    for name in names:
        if name not in doc.structures:
            raise InputError(f"unknown structure {name!r}; the document has {', '.join(sorted(doc.structures))}")
        reports.append(check_structure(doc, name, R))
    return _emit(reports, args.report_format)


def _check_all(args, field):
    names = list(DEFAULT_INSTANCES)
    field_text = str(field) if field is not None else ""
    work = [(n, field_text) for n in names]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_check_catalog_entry, work))
    else:
        results = [_check_catalog_entry(w) for w in work]
    results.sort(key=lambda r: r[0])
    ok = all(d["ok"] for _, d, _, _ in results)
    if args.report_format == "json":
        data = {"format": FORMAT, "ok": ok, "reports": [d for _, d, _, _ in results]}
        sys.stdout.write(json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n")
    else:
        for name, d, text, secs in results:
            sys.stdout.write(f"[{'pass' if d['ok'] else 'FAIL'}] {name}\n")
            if not d["ok"]:
                sys.stdout.write(text + "\n")
        sys.stdout.write(f"{'PASS' if ok else 'FAIL'}: {sum(d['ok'] for _, d, _, _ in results)}/{len(results)} "
                         "catalog entries\n")
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------------------
# build

def _pairing_source(args, field):
    """A pairing from --catalog or --algebra/--structure; Hopf inputs give their dual pairing."""
    from .double import dual_pairing
    if args.catalog:
        item = _lookup(args.catalog, field, args.jobs)
        if item.pairing is not None:
            return item.pairing, item.name
        if item.kind == "hopf":
            return dual_pairing(item.obj), f"dual pairing of {item.name}"
        raise InputError(f"{item.name} is a {item.kind}; expected a pairing, braided line or Hopf algebra")
    if args.algebra:
        doc = load(args.algebra, field)
        name = args.structure or _only(doc, ("pairing", "hopf"))
        kind = doc.structure_type(name)
        obj = Realizer(doc).get(name)
        if kind == "pairing":
            return obj, f"{args.algebra}#{name}"
        if kind == "hopf":
            return dual_pairing(obj), f"dual pairing of {args.algebra}#{name}"
        raise InputError(f"structure {name!r} is a {kind}; expected a pairing or hopf structure")
    raise InputError("give --catalog NAME or --algebra FILE")


def _only(doc, kinds):
    hits = sorted(n for n, s in doc.structures.items() if s.get("type") in kinds)
    # prefer top-level names (no dots) when several match
    top = [n for n in hits if "." not in n]
    pick = top or hits
    if len(pick) != 1:
        raise InputError(f"choose a structure with --structure (candidates: {', '.join(hits) or 'none'})")
    return pick[0]


def _double_of(P, args):
    from .double import drinfeld_double
    return drinfeld_double(P, max_rewrite_steps=args.max_rewrite_steps, jobs=args.jobs)


def _build_double(args, field):
    from .double import check_double
    P, source = _pairing_source(args, field)
    D = _double_of(P, args)
    rep = check_double(D)
    b = DocumentBuilder(P.field, _provenance("build double", {"pairing": source}, "Drinfeld double of the pairing"))
    b.hopf("Drin", D.hopf)
    b.pairing("P", P)
    if D.R is not None:
        b.quasitriangular("Drin.qt", D.quasitriangular())
    b.doc.metadata["dim"] = D.dim
    return b.doc, [rep]


def _build_heis(args, field):
    from .braided import regular_comodule_algebra
    from .double import check_cross_product, check_plain_comodule_algebra, drin_comod_algebra_left
    P, source = _pairing_source(args, field)
    D = _double_of(P, args)
    A, cp = drin_comod_algebra_left(regular_comodule_algebra(P.B), D, name="Heis")
    reps = [check_cross_product(cp, name="Heis algebra"),
            check_plain_comodule_algebra(A, name="Heis as a Drin-comodule algebra")]
    b = DocumentBuilder(P.field, _provenance("build heis", {"pairing": source},
                                             "B^reg ⋊ cop-C ⋊ H with its Drin-coaction"))
    b.hopf("Drin", D.hopf)
    b.pairing("P", P)
    b.comodule_algebra("Heis", cp.algebra, A.coaction, D.hopf)
    b.doc.metadata["dim"] = cp.dim
    b.doc.metadata["factors"] = [V.name for V in cp.factors]
    return b.doc, reps


def _build_smash(args, field):
    from .braided import (
        ModuleAlgebra, algebra_object, as_braided, check_module_algebra, left_adjoint_module_algebra,
    )
    from .double import check_cross_product, smash_product
    from .tensor import identity, tensor_map
    if not args.catalog:
        raise InputError("build smash needs --catalog NAME (a Hopf or braided Hopf algebra)")
    item = _lookup(args.catalog, field, args.jobs)
    if item.kind not in ("hopf", "braided-hopf"):
        raise InputError(f"{item.name} is a {item.kind}; smash needs a Hopf algebra")
    B = item.obj if item.kind == "braided-hopf" else as_braided(item.obj)
    if args.action == "trivial":
        A = ModuleAlgebra(algebra_object(B), tensor_map(B.counit, identity((B.carrier,), B.field)), B, "left")
    else:
        A = left_adjoint_module_algebra(B)
    reps = [check_module_algebra(A, name=f"{args.action} module algebra")]
    cp = smash_product(A, name=f"{B.carrier.name}#{B.carrier.name}")
    reps.append(check_cross_product(cp, name="smash product"))
    b = DocumentBuilder(B.field, _provenance("build smash", {"algebra": item.name, "action": args.action},
                                             "A ⋊ B with A = B under the chosen action"))
    b.hopf("B", B)
    b.algebra("Smash", cp.algebra)
    b.doc.metadata["dim"] = cp.dim
    if args.action == "trivial":
        from .hopf import compare
        # (a, b, a', b') -> (aa', bb')
        tensor_alg = tensor_map(B.mult, B.mult).permute_inputs((0, 2, 1, 3))
        plain = compose_flat(cp.merge, tensor_alg)
        rep = Report("trivial action gives the tensor algebra")
        rep.add(compare("A ⋊ B = A ⊗ B", cp.mult, plain))
        reps.append(rep)
    return b.doc, reps


def compose_flat(merge, layered_mult):
    """A layered product (x, y, x', y') -> (x, y) moved onto the flattened carrier."""
    from .tensor import compose
    split = merge.transpose()
    return compose(merge, layered_mult).after(split, 2).after(split, 0)


def _build_bosonize(args, field):
    from .braided import check_braided_bialgebra
    from .double import bosonize
    from .hopf import check_hopf
    if args.catalog:
        item = _lookup(args.catalog, field, args.jobs)
        if item.kind != "braided-hopf":
            raise InputError(f"{item.name} is a {item.kind}; bosonize needs a braided Hopf algebra")
        B, source = item.obj, item.name
    elif args.algebra:
        doc = load(args.algebra, field)
        name = args.structure or _only(doc, ("braided-hopf",))
        if doc.structure_type(name) != "braided-hopf":
            raise InputError(f"structure {name!r} is not a braided-hopf structure")
        B, source = Realizer(doc).get(name), f"{args.algebra}#{name}"
    else:
        raise InputError("give --catalog NAME or --algebra FILE")
    reps = [check_braided_bialgebra(B, name="input")]
    BH = bosonize(B)
    reps.append(check_hopf(BH, name="B⋊H"))
    b = DocumentBuilder(B.field, _provenance("build bosonize", {"braided": source}, "Radford biproduct B⋊H"))
    b.hopf("BH", BH)
    b.doc.metadata["dim"] = BH.dim
    return b.doc, reps


def _cocycle_for(ref, over, role, field, P=None):
    """A cocycle over `over` from a reference: triv, a catalog cocycle/cycle name, or FILE#name."""
    from .cocycle import Cocycle2, Cycle2, cycle_to_cocycle, trivial_cocycle
    if ref in (None, "triv", "trivial"):
        return trivial_cocycle(over, name="triv")
    if "#" in ref:
        path, _, name = ref.rpartition("#")
        doc = load(path, field)
        if name not in doc.structures:
            raise InputError(f"{path} has no structure {name!r}")
        kind = doc.structure_type(name)
        obj = Realizer(doc).get(name)
        item = CatalogItem(ref, kind, obj)
    else:
        item = _lookup(ref, field, 1)
    if item.kind == "cycle":
        if P is None or role != "C":
            raise InputError(f"{ref}: 2-cycles are only accepted on the C side of compose-cocycles")
        c = _rebase(item.obj.c, P.B.carrier, ref)
        return cycle_to_cocycle(Cycle2(P.B, c), P)
    if item.kind != "cocycle":
        raise InputError(f"{ref} is a {item.kind}, not a cocycle")
    s = item.obj.as_right() if item.obj.side == "left" and role == "C" else item.obj
    sig = _rebase(s.sigma, over.carrier, ref)
    return Cocycle2(over, sig, side="right", name=ref.split(":")[0])


def _rebase(f, V, ref):
    """Move f onto copies of V; basis labels must agree."""
    for W in f.domain + f.codomain:
        if W.dim != V.dim or W.basis_labels != V.basis_labels:
            raise InputError(f"{ref} does not live on {V.name} (basis {list(V.basis_labels)})")
    return f.with_spaces(tuple(V for _ in f.domain), tuple(V for _ in f.codomain))


def _build_twist(args, field):
    from .braided import as_braided
    from .cocycle import (
        check_twisted_algebra, compare_with_cross_product, copC, ind_B, ind_C, require_cocycle, twist_algebra,
    )
    from .double import heisenberg_double
    ref = args.cocycle or "triv"
    reps = []
    extra = {}
    if args.algebra and _doc_has_double(args.algebra, field) and ref.split("-")[0] in ("indB", "indC"):
        doc = load(args.algebra, field)
        P = Realizer(doc).get(_only(doc, ("pairing",)))
        D = _double_of(P, args)
        stored = Realizer(doc).get("Drin")
        if stored.mult != D.hopf.mult:
            raise InputError(f"{args.algebra}: Drin does not match the double of its pairing")
        side, _, inner = ref.partition("-")
        if side == "indB":
            s = ind_B(_cocycle_for(inner or "triv", P.B, "B", field), D)
        else:
            s = ind_C(_cocycle_for(inner or "triv", copC(P), "C", field, P), D)
        base, source = D.hopf, f"{args.algebra}#Drin"
        require_cocycle(s)
        T = twist_algebra(base, s)
        if side == "indB" and inner in ("", "triv"):
            rep, _ = compare_with_cross_product(T.algebra.mult, D, heisenberg_double(P),
                                                name="twisted double vs Heisenberg double")
            reps.append(rep)
            extra["heisenberg"] = "identical multiplication tensors" if rep.ok else "mismatch"
    else:
        if args.catalog:
            item = _lookup(args.catalog, field, args.jobs)
            if item.kind not in ("hopf", "braided-hopf"):
                raise InputError(f"{item.name} is a {item.kind}; twist needs a bialgebra")
            base, source = item.obj, item.name
        elif args.algebra:
            doc = load(args.algebra, field)
            name = args.structure or _only(doc, ("hopf", "braided-hopf"))
            base, source = Realizer(doc).get(name), f"{args.algebra}#{name}"
        elif ref not in ("triv", "trivial"):
            item = _lookup(ref, field, 1) if "#" not in ref else None
            if item is None or item.kind != "cocycle":
                raise InputError("give --catalog/--algebra for the bialgebra, or a catalog cocycle")
            base, source = item.obj.over, ref
        else:
            raise InputError("give --catalog NAME or --algebra FILE")
        over = base if hasattr(base, "ambient") else as_braided(base)
        s = _cocycle_for(ref, over, "B", field)
        T = twist_algebra(over, s)
    reps.append(check_twisted_algebra(T, name=f"twist by {ref}"))
    fld = T.algebra.mult.field
    b = DocumentBuilder(fld, _provenance("build twist", {"algebra": source, "cocycle": ref},
                                         "B_σ with the regular coaction"))
    base_name = b.hopf("Base", base)
    b.cocycle("sigma", s)
    b.map("Twisted.mult", T.algebra.mult)
    b.map("Twisted.unit", T.algebra.unit)
    b.structure("Twisted", "algebra", mult="Twisted.mult", unit="Twisted.unit")
    b.map("Twisted.coaction", T.comodule_algebra.coaction)
    b.structure("Twisted.comod", "comodule-algebra", algebra="Twisted", over=base_name,
                coaction="Twisted.coaction")
    b.doc.metadata.update(extra)
    return b.doc, reps


def _doc_has_double(path, field):
    doc = load(path, field)
    return "Drin" in doc.structures and any(s.get("type") == "pairing" for s in doc.structures.values())


def _build_compose(args, field):
    from .cocycle import check_cocycle, compose_cocycles, copC, ind_B, ind_C
    from .hopf import compare
    P, source = _pairing_source(args, field)
    D = _double_of(P, args)
    s = _cocycle_for(args.cocycle, P.B, "B", field)
    t = _cocycle_for(args.cocycle2, copC(P), "C", field, P)
    reps = [check_cocycle(s, name=f"σ = {args.cocycle or 'triv'}"),
            check_cocycle(t, name=f"τ = {args.cocycle2 or 'triv'}")]
    st = compose_cocycles(s, t, D)
    reps.append(check_cocycle(st, name="σ∘τ on the double"))
    special = Report("specializations")
    if args.cocycle2 in (None, "triv", "trivial"):
        special.add(compare("σ∘triv = Ind_B σ", st.sigma, ind_B(s, D).sigma))
    if args.cocycle in (None, "triv", "trivial"):
        special.add(compare("triv∘τ = Ind_C τ", st.sigma, ind_C(t, D).sigma))
    if special.results:
        reps.append(special)
    b = DocumentBuilder(P.field, _provenance("build compose-cocycles",
                                             {"pairing": source, "sigma": args.cocycle or "triv",
                                              "tau": args.cocycle2 or "triv"},
                                             "σ∘τ on the Drinfeld double"))
    b.hopf("Drin", D.hopf)
    b.pairing("P", P)
    b.cocycle("sigma.tau", st)
    return b.doc, reps


BUILDERS = {
    "double": _build_double, "heis": _build_heis, "smash": _build_smash, "bosonize": _build_bosonize,
    "twist": _build_twist, "compose-cocycles": _build_compose,
}


def cmd_build(args):
    field = _field(args)
    doc, reports = BUILDERS[args.kind](args, field)
    if args.out:
        save(doc, args.out)
    extra = {"written": args.out} if args.out else None
    return _emit(reports, args.report_format, extra=extra)


def cmd_dump(args):
    field = _field(args)
    if not args.catalog:
        raise InputError("dump needs --catalog NAME")
    item = _lookup(args.catalog, field, args.jobs)
    doc = item_document(item, _provenance("dump", {"catalog": item.name}, "catalog constructor"))
    if args.out:
        save(doc, args.out)
    else:
        from .io import dumps
        sys.stdout.write(dumps(doc))
    return EXIT_OK


def cmd_list(args):
    for name in sorted(ENTRIES):
        sys.stdout.write(f"{name:24s} {ENTRIES[name][1]}\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# plumbing

def _field(args):
    if not args.field:
        return None
    try:
        return parse_field(args.field)
    except ScalarError as exc:
        raise InputError(f"--field: {exc}") from None


def _lookup(name, field, jobs):
    try:
        return lookup(name, field, jobs=jobs)
    except UnknownEntry as exc:
        raise InputError(str(exc)) from None


def build_parser():
    p = argparse.ArgumentParser(prog="hopf-forge", description="Exact checks and constructions for "
                                "finite-dimensional (braided) Hopf algebras, doubles and 2-cocycles.")
    p.add_argument("--version", action="version", version=f"hopf-forge {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--field", help="field, e.g. rationals or cyclotomic(6)")
        sp.add_argument("--catalog", help="catalog entry, e.g. sweedler or small-quantum-sl2:n=3")
        sp.add_argument("--structure", help="structure name inside a document")
        sp.add_argument("--jobs", type=int, default=1, help="worker processes (never changes results)")
        sp.add_argument("--max-rewrite-steps", type=int, default=10 ** 6,
                        help="budget for the straightening engine")
        sp.add_argument("--report-format", choices=("text", "json"), default="text")

    c = sub.add_parser("check", help="verify a document, a catalog entry or the whole catalog")
    c.add_argument("file", nargs="?", help="hopf-forge/1 JSON document")
    c.add_argument("--all", action="store_true", help="check every default catalog instance")
    common(c)
    c.set_defaults(func=cmd_check)

    b = sub.add_parser("build", help="construct a structure and write it as a document")
    b.add_argument("kind", choices=BUILD_KINDS)
    b.add_argument("--algebra", help="input document")
    b.add_argument("--cocycle", help="σ: triv, a catalog cocycle, FILE#name, or indB-…/indC-… for twist")
    b.add_argument("--cocycle2", help="τ for compose-cocycles: triv, a catalog cocycle or 2-cycle")
    b.add_argument("--action", choices=("trivial", "adjoint"), default="trivial", help="action for smash")
    b.add_argument("--out", help="output path")
    common(b)
    b.set_defaults(func=cmd_build)

    d = sub.add_parser("dump", help="write a catalog entry as a document")
    d.add_argument("--out", help="output path (default: stdout)")
    common(d)
    d.set_defaults(func=cmd_dump)

    ls = sub.add_parser("list", help="list catalog entries")
    ls.set_defaults(func=cmd_list)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be at least 1")
    if getattr(args, "max_rewrite_steps", 1) < 1:
        parser.error("--max-rewrite-steps must be positive")
    try:
        return args.func(args)
    except (InputError, DocumentError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except CatalogError as exc:
        sys.stderr.write(f"check failed during construction:\n{exc}\n")
        return EXIT_FAIL
    except Exception as exc:  # noqa: BLE001 - construction errors carry their own reports
        from .cocycle import CocycleError
        from .double import DoubleConstructionError, RewriteBudgetExceeded
        if isinstance(exc, (CocycleError, DoubleConstructionError)):
            sys.stderr.write(f"check failed: {exc}\n")
            return EXIT_FAIL
        if isinstance(exc, RewriteBudgetExceeded):
            sys.stderr.write(f"error: {exc}\n")
            return EXIT_INPUT
        raise


if __name__ == "__main__":
    sys.exit(main())
