"""JSON instance files and report helpers.

Every top-level file carries ``"format": "gdlab/1"`` and a ``"kind"``; unknown
fields are rejected so that a misspelled key never passes silently.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from . import bitset
from .canonical import CanonicalFrame
from .duality import FrameMorphism, LatticeHom
from .frame import IMPROPER, Frame
from .lattice import FiniteLattice, LatticeError, validate_lattice
from .logic.proofs import LogicExtension, ProofTree
from .logic.syntax import FormulaSyntaxError, parse_sequent
from .polarity import Polarity

FORMAT = "gdlab/1"
KINDS = ("lattice", "frame", "hom", "morphism", "proof")


class InputError(ValueError):
    """Malformed or schema-invalid instance data."""


def _check_fields(obj: Any, allowed: set[str], required: set[str], where: str) -> None:
    if not isinstance(obj, dict):
        raise InputError(f"{where}: expected a JSON object")
    unknown = set(obj) - allowed
    if unknown:
        raise InputError(f"{where}: unknown field(s) {', '.join(sorted(unknown))}")
    missing = required - set(obj)
    if missing:
        raise InputError(f"{where}: missing field(s) {', '.join(sorted(missing))}")


def _pairs(raw: Any, where: str) -> list[tuple[int, int]]:
    if not isinstance(raw, list):
        raise InputError(f"{where}: expected a list of index pairs")
    out = []
    for p in raw:
        if not (isinstance(p, list) and len(p) == 2 and all(isinstance(v, int) for v in p)):
            raise InputError(f"{where}: bad pair {p!r}")
        out.append((p[0], p[1]))
    return out


def _header(obj: Any, kind: str, nested: bool) -> None:
    if not isinstance(obj, dict):
        raise InputError(f"{kind}: expected a JSON object")
    if not nested and obj.get("format") != FORMAT:
        raise InputError(f"{kind}: expected format {FORMAT!r}, found {obj.get('format')!r}")
    if "format" in obj and obj["format"] != FORMAT:
        raise InputError(f"{kind}: unsupported format {obj['format']!r}")
    if obj.get("kind", kind) != kind:
        raise InputError(f"expected kind {kind!r}, found {obj.get('kind')!r}")


# lattices

_LATTICE_FIELDS = {"format", "kind", "name", "elements", "leq", "covers", "nu"}


def lattice_from_obj(obj: Any, nested: bool = False) -> FiniteLattice:
    _header(obj, "lattice", nested)
    _check_fields(obj, _LATTICE_FIELDS, {"elements"}, "lattice")
    elements = obj["elements"]
    if not isinstance(elements, list) or not all(isinstance(e, str) for e in elements):
        raise InputError("lattice: elements must be a list of names")
    if "leq" not in obj and "covers" not in obj:
        raise InputError("lattice: one of leq or covers is required")
    leq = _pairs(obj["leq"], "lattice.leq") if "leq" in obj else None
    covers = _pairs(obj["covers"], "lattice.covers") if "covers" in obj else None
    nu = obj.get("nu")
    if nu is not None:
        if not isinstance(nu, list) or not all(isinstance(v, (int, str)) for v in nu):
            raise InputError("lattice.nu: expected a list of indices or names")
        nu = [elements.index(v) if isinstance(v, str) and v in elements else v for v in nu]
        if any(isinstance(v, str) for v in nu):
            raise InputError("lattice.nu: unknown element name")
    return validate_lattice(elements, leq=leq, covers=covers, nu=nu)


def lattice_to_obj(lat: FiniteLattice, nested: bool = False, name: str | None = None) -> dict:
    obj: dict[str, Any] = {} if nested else {"format": FORMAT, "kind": "lattice"}
    if name:
        obj["name"] = name
    obj["elements"] = list(lat.names)
    obj["covers"] = [list(c) for c in sorted(lat.covers())]
    if lat.nu is not None:
        obj["nu"] = list(lat.nu)
    return obj


# frames

_FRAME_FIELDS = {"format", "kind", "name", "elements", "X", "Y", "gal", "S", "R_wedge", "nu_hat"}


def _point_names(raw: Any, where: str, elements: list[str] | None) -> tuple[str, ...]:
    if not isinstance(raw, list) or not raw:
        raise InputError(f"{where}: expected a nonempty list")
    out = []
    for p in raw:
        if isinstance(p, str):
            out.append(p)
        elif isinstance(p, list) and all(isinstance(v, int) for v in p):
            if elements is not None:
                if any(not 0 <= v < len(elements) for v in p):
                    raise InputError(f"{where}: element index out of range in {p}")
                out.append("{" + ",".join(elements[v] for v in sorted(p)) + "}")
            else:
                out.append("{" + ",".join(str(v) for v in sorted(p)) + "}")
        else:
            raise InputError(f"{where}: points are names or element-index arrays")
    if len(set(out)) != len(out):
        raise InputError(f"{where}: duplicate points")
    return tuple(out)


def frame_from_obj(obj: Any, nested: bool = False) -> Frame:
    _header(obj, "frame", nested)
    _check_fields(obj, _FRAME_FIELDS, {"X", "Y", "gal", "S"}, "frame")
    elements = obj.get("elements")
    xn = _point_names(obj["X"], "frame.X", elements)
    yn = _point_names(obj["Y"], "frame.Y", elements)
    try:
        pol = Polarity.from_pairs(len(xn), len(yn), _pairs(obj["gal"], "frame.gal"), xn, yn)
        r = _pairs(obj["R_wedge"], "frame.R_wedge") if "R_wedge" in obj else None
        frame = Frame.from_pairs(pol, _pairs(obj["S"], "frame.S"), r)
    except (ValueError, IndexError) as exc:
        raise InputError(f"frame: {exc}") from None
    if "nu_hat" in obj:
        raw = obj["nu_hat"]
        if not isinstance(raw, list) or len(raw) != len(xn):
            raise InputError("frame.nu_hat: expected one entry per point of X")
        if not frame.has_nu_hat() or list(frame.nu_hat) != raw:
            raise InputError("frame.nu_hat disagrees with the sections of S")
    return frame


def frame_to_obj(frame: Frame, nested: bool = False, cf: CanonicalFrame | None = None) -> dict:
    pol = frame.polarity
    obj: dict[str, Any] = {} if nested else {"format": FORMAT, "kind": "frame"}
    if cf is not None:
        obj["elements"] = list(cf.source.names)
        obj["X"] = [bitset.to_list(x) for x in cf.X]
        obj["Y"] = [bitset.to_list(y) for y in cf.Y]
    else:
        obj["X"] = list(pol.x_names)
        obj["Y"] = list(pol.y_names)
    obj["gal"] = [list(p) for p in pol.pairs()]
    obj["S"] = sorted([list(p) for p in frame.s_pairs()])
    if frame.r_wedge is not None:
        obj["R_wedge"] = [[x, y] for x in range(pol.nx) for y in bitset.members(frame.r_wedge[x])]
    if frame.has_nu_hat():
        obj["nu_hat"] = [None if v is IMPROPER else v for v in frame.nu_hat]
    return obj


# homomorphisms and morphisms

_HOM_FIELDS = {"format", "kind", "name", "source", "target", "map"}
_MORPHISM_FIELDS = {"format", "kind", "name", "source", "target", "p", "q"}


def hom_from_obj(obj: Any, nested: bool = False) -> LatticeHom:
    _header(obj, "hom", nested)
    _check_fields(obj, _HOM_FIELDS, {"source", "target", "map"}, "hom")
    src = lattice_from_obj(obj["source"], nested=True)
    tgt = lattice_from_obj(obj["target"], nested=True)
    raw = obj["map"]
    if isinstance(raw, dict):
        try:
            m = tuple(tgt.index(raw[n]) for n in src.names)
        except KeyError as exc:
            raise InputError(f"hom.map: {exc}") from None
    elif isinstance(raw, list) and all(isinstance(v, int) for v in raw):
        m = tuple(raw)
    else:
        raise InputError("hom.map: expected a list of indices or an object of names")
    if len(m) != src.n or any(not 0 <= v < tgt.n for v in m):
        raise InputError("hom.map: not a total map into the target")
    return LatticeHom(src, tgt, m)


def hom_to_obj(h: LatticeHom) -> dict:
    return {
        "format": FORMAT,
        "kind": "hom",
        "source": lattice_to_obj(h.source, nested=True),
        "target": lattice_to_obj(h.target, nested=True),
        "map": list(h.map),
    }


def morphism_from_obj(obj: Any, nested: bool = False) -> FrameMorphism:
    _header(obj, "morphism", nested)
    _check_fields(obj, _MORPHISM_FIELDS, {"source", "target", "p", "q"}, "morphism")
    src = frame_from_obj(obj["source"], nested=True)
    tgt = frame_from_obj(obj["target"], nested=True)
    for key in ("p", "q"):
        if not isinstance(obj[key], list) or not all(isinstance(v, int) for v in obj[key]):
            raise InputError(f"morphism.{key}: expected a list of indices")
    try:
        return FrameMorphism(src, tgt, tuple(obj["p"]), tuple(obj["q"]))
    except ValueError as exc:
        raise InputError(f"morphism: {exc}") from None


def morphism_to_obj(pi: FrameMorphism) -> dict:
    return {
        "format": FORMAT,
        "kind": "morphism",
        "source": frame_to_obj(pi.source, nested=True),
        "target": frame_to_obj(pi.target, nested=True),
        "p": list(pi.p),
        "q": list(pi.q),
    }


# proofs

_PROOF_FIELDS = {"format", "kind", "name", "extension", "tree"}
_NODE_FIELDS = {"sequent", "rule", "premises"}


def _node_from_obj(obj: Any) -> ProofTree:
    _check_fields(obj, _NODE_FIELDS, {"sequent", "rule"}, "proof node")
    try:
        s = parse_sequent(obj["sequent"])
    except FormulaSyntaxError as exc:
        raise InputError(str(exc)) from None
    prem = obj.get("premises", [])
    if not isinstance(prem, list):
        raise InputError("proof node: premises must be a list")
    return ProofTree(s, str(obj["rule"]), tuple(_node_from_obj(p) for p in prem))


def _node_to_obj(t: ProofTree) -> dict:
    out: dict[str, Any] = {"sequent": str(t.conclusion), "rule": t.rule}
    if t.premises:
        out["premises"] = [_node_to_obj(p) for p in t.premises]
    return out


def proof_from_obj(obj: Any, nested: bool = False) -> tuple[ProofTree, LogicExtension]:
    _header(obj, "proof", nested)
    _check_fields(obj, _PROOF_FIELDS, {"tree"}, "proof")
    ext_obj = obj.get("extension", {"name": "M", "axioms": []})
    _check_fields(ext_obj, {"name", "axioms"}, set(), "proof.extension")
    try:
        ext = LogicExtension.parse(ext_obj.get("name", "M"), ext_obj.get("axioms", []))
    except FormulaSyntaxError as exc:
        raise InputError(str(exc)) from None
    return _node_from_obj(obj["tree"]), ext


def proof_to_obj(t: ProofTree, ext: LogicExtension) -> dict:
    return {
        "format": FORMAT,
        "kind": "proof",
        "extension": {"name": ext.name, "axioms": [str(a) for a in ext.axioms]},
        "tree": _node_to_obj(t),
    }


# files

_LOADERS = {
    "lattice": lattice_from_obj,
    "frame": frame_from_obj,
    "hom": hom_from_obj,
    "morphism": morphism_from_obj,
    "proof": proof_from_obj,
}


def read_json(path: str | Path) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def load(path: str | Path, expect: str | tuple[str, ...] | None = None) -> tuple[str, Any]:
    """Read a file and return ``(kind, instance)``."""
    obj = read_json(path)
    if not isinstance(obj, dict) or obj.get("kind") not in KINDS:
        raise InputError(f"{path}: missing or unknown kind")
    kind = obj["kind"]
    if expect is not None:
        allowed = (expect,) if isinstance(expect, str) else expect
        if kind not in allowed:
            raise InputError(f"{path}: expected {' or '.join(allowed)}, found {kind}")
    try:
        return kind, _LOADERS[kind](obj)
    except LatticeError as exc:
        raise InputError(f"{path}: {exc}") from None


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def save(path: str | Path, obj: dict) -> None:
    Path(path).write_text(dumps(obj), encoding="utf-8")


# witnesses

def render_witness(witness: dict | None, names: dict[str, tuple[str, ...]]) -> dict | None:
    """Replace tagged indices by names. ``names`` maps a sort tag (``X``, ``Y``, ...) to point names;
    set-valued tags end in ``*``."""
    if witness is None:
        return None
    out = {}
    for role, (tag, val) in witness.items():
        if tag.endswith("*"):
            pts = names[tag[:-1]]
            out[role] = [pts[i] for i in bitset.members(val)]
        else:
            out[role] = names[tag][val]
    return out


def frame_names(frame: Frame) -> dict[str, tuple[str, ...]]:
    return {"X": frame.polarity.x_names, "Y": frame.polarity.y_names}
