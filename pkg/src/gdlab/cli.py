"""Command-line entry point: ``gdlab <group> <command> ...``.

Exit status: 0 when every check passes or a verdict was produced, 1 when a
property violation was found (the report carries a witness), 2 on input errors.
"""
from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import __version__, bitset
from .axioms import (
    TABLE2,
    TABLE3,
    TABLE4,
    AxiomReport,
    check_table2,
    check_table3,
    check_table4_objects,
    full_report,
)
from .canonical import NotMinimalVariety, canonical_frame
from .complex_algebra import AxiomPrereqFailed, build_complex_algebra
from .corpus import corpus
from .dot import frame_dot, lattice_dot
from .duality import (
    FrameMorphism,
    HomInvalid,
    ImproperImage,
    LatticeHom,
    check_morphism_axioms,
    dual_frame_morphism,
    roundtrip,
)
from .frame import Frame, NuHatUndefined
from .io import (
    InputError,
    dumps,
    frame_names,
    frame_to_obj,
    lattice_from_obj,
    lattice_to_obj,
    load,
    read_json,
    render_witness,
    save,
)
from .lattice import LatticeError
from .logic.proofs import check_proof
from .logic.search import Countermodel, countermodel_search
from .logic.semantics import TooManyValuations, algebra_countermodel, frame_countermodel
from .logic.syntax import FormulaSyntaxError, parse_sequent
from .varieties import SPECIFICITY, classify_variety, verify_lemma1_consequences

OK, VIOLATION, INPUT_ERROR = 0, 1, 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _axiom_block(rep: AxiomReport, frame: Frame) -> dict:
    names = frame_names(frame)
    out = {}
    for name, res in rep.results.items():
        entry = {"passed": res.passed}
        if not res.passed:
            entry["witness"] = render_witness(res.witness, names)
            if res.note:
                entry["note"] = res.note
        out[name] = entry
    return out


def _emit_instance(obj: dict, out: str | None) -> None:
    if out:
        save(out, obj)
    else:
        sys.stdout.write(dumps(obj))


# lattice


def _lattice_check(args) -> tuple[int, dict]:
    obj = read_json(args.file)
    try:
        lat = lattice_from_obj(obj)
    except LatticeError as exc:
        # well-formed input that is not a bounded lattice is a finding
        return VIOLATION, {"lattice": False, "reason": f"{type(exc).__name__}: {exc}"}
    rep = {"lattice": True, "size": lat.n, "distributive": lat.is_distributive(), "has_nu": lat.nu is not None}
    return OK, rep


def _lattice_classify(args) -> tuple[int, dict]:
    _, lat = load(args.file, "lattice")
    lat.require_nu()
    v = classify_variety(lat)
    lemmas = verify_lemma1_consequences(lat)
    rep = {
        "laws": v.as_dict(),
        "varieties": {t: v.member(t) for t in (*reversed(SPECIFICITY), "M_dual", "G_dual")},
        "most_specific": v.most_specific(),
        "consequences": {i.name: i.passed for i in lemmas},
    }
    return (OK if all(i.passed for i in lemmas) else VIOLATION), rep


def _lattice_dual_frame(args) -> tuple[int, dict]:
    _, lat = load(args.file, "lattice")
    try:
        cf = canonical_frame(lat)
    except NotMinimalVariety as exc:
        return VIOLATION, {"error": str(exc)}
    obj = frame_to_obj(cf.frame, cf=cf)
    _emit_instance(obj, args.output)
    return OK, {"X": len(cf.X), "Y": len(cf.Y), "written": args.output} if args.output else None


# frame


def _frame_check_axioms(args) -> tuple[int, dict]:
    _, frame = load(args.file, "frame")
    if args.table == "2":
        rep, names = check_table2(frame), TABLE2
    elif args.table == "4":
        rep, names = check_table4_objects(frame), TABLE4
    elif args.table == "3":
        try:
            rep, names = check_table3(frame), TABLE3
        except NuHatUndefined as exc:
            return VIOLATION, {"table": "3", "error": str(exc)}
    else:
        rep = full_report(frame)
        names = list(rep.results)
    out = {"table": args.table or "all", "axioms": _axiom_block(rep, frame)}
    if rep.category is not None:
        out["category"] = rep.category
    return (OK if rep.all_passed(names) else VIOLATION), out


def _frame_classify(args) -> tuple[int, dict]:
    _, frame = load(args.file, "frame")
    rep = full_report(frame)
    return OK, {"category": rep.category, "failed": rep.failed()}


def _frame_complex_algebra(args) -> tuple[int, dict]:
    _, frame = load(args.file, "frame")
    try:
        alg = build_complex_algebra(frame)
    except AxiomPrereqFailed as exc:
        return VIOLATION, {"error": str(exc)}
    _emit_instance(lattice_to_obj(alg.lattice), args.output)
    if args.output:
        return OK, {"size": alg.lattice.n, "variety": alg.variety.most_specific(), "written": args.output}
    return OK, None


# duality


def _duality_roundtrip(args) -> tuple[int, dict]:
    _, lat = load(args.file, "lattice")
    try:
        r = roundtrip(lat)
    except NotMinimalVariety as exc:
        return VIOLATION, {"error": str(exc)}
    rep = {
        "variety": r.variety,
        "frame_category": r.frame_category,
        "expected_category": r.expected_category,
        "double_dual_variety": r.double_dual_variety,
        "unit_iso": r.unit_iso,
        "counit_iso": r.counit_iso,
        "passed": r.passed,
    }
    return (OK if r.passed else VIOLATION), rep


def _duality_check_morphism(args) -> tuple[int, dict]:
    kind, inst = load(args.file, ("morphism", "hom"))
    rep = {}
    if kind == "hom":
        h: LatticeHom = inst
        try:
            pi = dual_frame_morphism(h)
        except (HomInvalid, ImproperImage) as exc:
            return VIOLATION, {"error": str(exc)}
        rep["p"], rep["q"] = list(pi.p), list(pi.q)
    else:
        pi: FrameMorphism = inst
    ax = check_morphism_axioms(pi)
    names = {
        "Xs": pi.source.polarity.x_names,
        "Ys": pi.source.polarity.y_names,
        "Xt": pi.target.polarity.x_names,
        "Yt": pi.target.polarity.y_names,
    }
    block = {}
    for name, res in ax.results.items():
        block[name] = {"passed": res.passed}
        if not res.passed:
            block[name]["witness"] = render_witness(res.witness, names)
            block[name]["note"] = res.note
    rep["axioms"] = block
    return (OK if ax.all_passed() else VIOLATION), rep


# logic


def _logic_valid(args) -> tuple[int, dict]:
    s = parse_sequent(args.sequent)
    kind, model = load(args.model, ("lattice", "frame"))
    rep: dict = {"sequent": str(s), "model": kind}
    if kind == "lattice":
        model.require_nu()
        v = algebra_countermodel(model, s)
        if v is not None:
            v = {k: model.names[i] for k, i in sorted(v.items())}
    else:
        v = frame_countermodel(model, s)
        if v is not None:
            xs = model.polarity.x_names
            v = {k: [xs[i] for i in bitset.members(m)] for k, m in sorted(v.items())}
    rep["valid"] = v is None
    if v is not None:
        rep["witness"] = v
    return (OK if v is None else VIOLATION), rep


def _logic_countermodel(args) -> tuple[int, dict]:
    s = parse_sequent(args.sequent)
    if args.cls not in SPECIFICITY:
        raise _UsageError(f"unknown class {args.cls!r}")
    res = countermodel_search(s, args.cls, args.bound)
    rep: dict = {"sequent": str(s), "class": args.cls, "bound": args.bound}
    if isinstance(res, Countermodel):
        rep["verdict"] = "countermodel"
        rep["valuation"] = dict(sorted(res.named_valuation().items()))
        rep["lattice"] = lattice_to_obj(res.lattice, nested=True)
        if args.output:
            save(args.output, lattice_to_obj(res.lattice, name=f"countermodel to {s}"))
            rep["written"] = args.output
    else:
        rep["verdict"] = "exhausted"
        rep["searched"] = res.searched
    return OK, rep


def _logic_check_proof(args) -> tuple[int, dict]:
    _, (tree, ext) = load(args.file, "proof")
    v = check_proof(tree, ext)
    rep: dict = {"valid": v.valid, "extension": ext.name, "nodes_checked": v.checked}
    if not v.valid:
        rep["path"] = list(v.path or ())
        rep["reason"] = v.reason
    return (OK if v.valid else VIOLATION), rep


# corpus and export


def _corpus_generate(args) -> tuple[int, dict]:
    if args.cls not in SPECIFICITY:
        raise _UsageError(f"unknown class {args.cls!r}")
    if args.max_size < 2:
        raise _UsageError("--max-size must be at least 2")
    lats = corpus(args.max_size, args.cls)
    counts: dict[str, int] = {}
    files = []
    for i, lat in enumerate(lats):
        counts[str(lat.n)] = counts.get(str(lat.n), 0) + 1
        if args.output:
            d = Path(args.output)
            d.mkdir(parents=True, exist_ok=True)
            fn = f"{args.cls}_{lat.n}_{i:05d}.json"
            save(d / fn, lattice_to_obj(lat))
            files.append(fn)
    rep: dict = {"class": args.cls, "max_size": args.max_size, "total": len(lats), "by_size": counts}
    if not args.output:
        rep["lattices"] = [lattice_to_obj(lat, nested=True) for lat in lats]
    else:
        rep["directory"] = args.output
    return OK, rep


def _export_dot(args) -> tuple[int, dict | None]:
    kind, inst = load(args.file, ("lattice", "frame"))
    text = lattice_dot(inst) if kind == "lattice" else frame_dot(inst)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        return OK, {"written": args.output}
    sys.stdout.write(text)
    return OK, None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gdlab", description="Finite lattices with quasi-complements and their frames.")
    p.add_argument("--version", action="version", version=f"gdlab {__version__}")
    p.add_argument("--timing", action="store_true", help="add wall-clock time to the report")
    groups = p.add_subparsers(dest="group", required=True, parser_class=_Parser)

    def cmd(group, name, fn, help_):
        c = group.add_parser(name, help=help_)
        c.set_defaults(fn=fn)
        return c

    g = groups.add_parser("lattice").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    cmd(g, "check", _lattice_check, "validate a lattice file").add_argument("file")
    cmd(g, "classify", _lattice_classify, "variety membership of (L, nu)").add_argument("file")
    c = cmd(g, "dual-frame", _lattice_dual_frame, "canonical frame as a frame file")
    c.add_argument("file")
    c.add_argument("-o", "--output")

    g = groups.add_parser("frame").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    c = cmd(g, "check-axioms", _frame_check_axioms, "frame axioms with witnesses")
    c.add_argument("file")
    c.add_argument("--table", choices=("2", "3", "4"))
    cmd(g, "classify", _frame_classify, "frame category").add_argument("file")
    c = cmd(g, "complex-algebra", _frame_complex_algebra, "stable-set algebra as a lattice file")
    c.add_argument("file")
    c.add_argument("-o", "--output")

    g = groups.add_parser("duality").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    cmd(g, "roundtrip", _duality_roundtrip, "lattice -> frame -> lattice").add_argument("file")
    cmd(g, "check-morphism", _duality_check_morphism, "M1-M5 for a morphism or the dual of a hom").add_argument("file")

    g = groups.add_parser("logic").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    c = cmd(g, "valid", _logic_valid, "validity of a sequent in a lattice or frame")
    c.add_argument("--model", required=True)
    c.add_argument("sequent")
    c = cmd(g, "countermodel", _logic_countermodel, "bounded countermodel search")
    c.add_argument("--class", dest="cls", required=True)
    c.add_argument("--bound", type=int, required=True)
    c.add_argument("-o", "--output")
    c.add_argument("sequent")
    cmd(g, "check-proof", _logic_check_proof, "check a proof tree").add_argument("file")

    g = groups.add_parser("corpus").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    c = cmd(g, "generate", _corpus_generate, "enumerate lattices with nu up to isomorphism")
    c.add_argument("--max-size", type=int, required=True)
    c.add_argument("--class", dest="cls", required=True)
    c.add_argument("-o", "--output")

    g = groups.add_parser("export").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    c = cmd(g, "dot", _export_dot, "Graphviz text for a lattice or frame")
    c.add_argument("file")
    c.add_argument("-o", "--output")
    return p


def run(argv: list[str]) -> tuple[int, dict | None]:
    """Dispatch without printing; returns the exit code and the report."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        return INPUT_ERROR, {"error": f"usage: {exc}"}
    start = time.perf_counter()
    try:
        code, body = args.fn(args)
    except (InputError, LatticeError, FormulaSyntaxError, _UsageError, TooManyValuations) as exc:
        return INPUT_ERROR, {"error": str(exc)}
    if body is None:
        return code, None
    report = {"tool": f"gdlab {__version__}", "command": list(argv), **body}
    report["status"] = "ok" if code == OK else "violation"
    if args.timing:
        report["seconds"] = round(time.perf_counter() - start, 4)
    return code, report


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if any(a in ("-h", "--help", "--version") for a in argv):
        try:
            build_parser().parse_args(argv)
        except SystemExit as exc:
            return int(exc.code or 0)
        except _UsageError:
            pass  # reported by run() below
    code, report = run(argv)
    if report is not None:
        stream = sys.stderr if code == INPUT_ERROR else sys.stdout
        stream.write(dumps(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
