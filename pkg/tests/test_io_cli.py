import json
import subprocess
import sys

import pytest

from gdlab import cli, io
from gdlab.canonical import canonical_frame
from gdlab.catalog import benzene, de_morgan_chain4, named, reversal
from gdlab.complex_algebra import build_complex_algebra
from gdlab.dot import frame_dot, lattice_dot
from gdlab.duality import dual_frame_morphism, hom_from_names
from gdlab.logic import LogicExtension, ProofTree, parse_sequent


@pytest.fixture
def files(tmp_path):
    out = {}
    for name in ("chain2", "chain4-demorgan", "benzene", "n5-trivial", "chain3-m"):
        p = tmp_path / f"{name}.json"
        io.save(p, io.lattice_to_obj(named(name)))
        out[name] = str(p)
    return out


def run(argv, capsys):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# round trips


def test_lattice_roundtrip(tmp_path):
    for name in ("chain2", "benzene", "bool3", "n5-trivial"):
        p = tmp_path / "l.json"
        io.save(p, io.lattice_to_obj(named(name)))
        kind, lat = io.load(p)
        assert kind == "lattice" and lat == named(name)


def test_frame_roundtrip(tmp_path):
    cf = canonical_frame(benzene())
    p = tmp_path / "f.json"
    io.save(p, io.frame_to_obj(cf.frame, cf=cf))
    assert io.load(p)[1] == cf.frame
    io.save(p, io.frame_to_obj(cf.frame))
    assert io.load(p)[1] == cf.frame


def test_hom_and_morphism_roundtrip(tmp_path):
    h = hom_from_names(de_morgan_chain4(), reversal(2), [0, 0, 1, 1])
    p = tmp_path / "h.json"
    io.save(p, io.hom_to_obj(h))
    assert io.load(p)[1] == h
    pi = dual_frame_morphism(h)
    io.save(p, io.morphism_to_obj(pi))
    assert io.load(p)[1] == pi


def test_proof_roundtrip(tmp_path):
    t = ProofTree(parse_sequent("p |- p | q"), "cut", (
        ProofTree(parse_sequent("p |- p | q"), "or-r1"),
        ProofTree(parse_sequent("p | q |- p | q"), "id"),
    ))
    ext = LogicExtension.parse("G", ["p |- ~~p"])
    p = tmp_path / "p.json"
    io.save(p, io.proof_to_obj(t, ext))
    assert io.load(p)[1] == (t, ext)


def test_strict_fields(tmp_path):
    obj = io.lattice_to_obj(named("chain2"))
    obj["nuu"] = [1, 0]
    p = tmp_path / "bad.json"
    io.save(p, obj)
    with pytest.raises(io.InputError, match="unknown field"):
        io.load(p)


def test_format_tag_required(tmp_path):
    obj = io.lattice_to_obj(named("chain2"))
    del obj["format"]
    p = tmp_path / "bad.json"
    io.save(p, obj)
    with pytest.raises(io.InputError):
        io.load(p)


def test_nu_hat_cross_checked(tmp_path):
    cf = canonical_frame(de_morgan_chain4())
    obj = io.frame_to_obj(cf.frame, cf=cf)
    obj["nu_hat"] = [0, 0, 0]
    p = tmp_path / "f.json"
    io.save(p, obj)
    with pytest.raises(io.InputError, match="nu_hat"):
        io.load(p)


# dot


def test_dot_two_chain():
    text = lattice_dot(reversal(2).with_nu(None))
    assert text.count("[label=") == 2 and text.count("arrowhead=none") == 1


def test_dot_chain4_frame():
    text = frame_dot(canonical_frame(de_morgan_chain4()).frame)
    assert text.count("shape=box") == 3 and text.count("shape=ellipse") == 3
    assert text == frame_dot(canonical_frame(de_morgan_chain4()).frame)


def test_dot_benzene_algebra():
    alg = build_complex_algebra(canonical_frame(benzene()).frame).lattice
    text = lattice_dot(alg.with_nu(None))
    assert text.count("[label=") == 6 == alg.n
    assert text.count("arrowhead=none") == len(alg.covers()) == 6


# cli


def test_cli_classify(files, capsys):
    code, out, _ = run(["lattice", "classify", files["chain4-demorgan"]], capsys)
    assert code == 0 and json.loads(out)["varieties"]["DMA"] is True


def test_cli_roundtrip_benzene(files, capsys):
    code, out, _ = run(["duality", "roundtrip", files["benzene"]], capsys)
    rep = json.loads(out)
    assert code == 0 and rep["frame_category"] == "nuO" and rep["unit_iso"] and rep["counit_iso"]


def test_cli_countermodel(tmp_path, capsys):
    w = tmp_path / "w.json"
    code, out, _ = run(["logic", "countermodel", "--class", "M", "--bound", "5", "p |- ~~p", "-o", str(w)], capsys)
    assert code == 0 and json.loads(out)["verdict"] == "countermodel"
    kind, lat = io.load(w)
    assert kind == "lattice" and lat.nu == (2, 1, 1)


def test_cli_exhausted(capsys):
    code, out, _ = run(["logic", "countermodel", "--class", "G", "--bound", "4", "p |- ~~p"], capsys)
    assert code == 0 and json.loads(out)["verdict"] == "exhausted"


def test_cli_dual_frame_then_axioms(files, tmp_path, capsys):
    f = tmp_path / "f.json"
    assert run(["lattice", "dual-frame", files["chain4-demorgan"], "-o", str(f)], capsys)[0] == 0
    code, out, _ = run(["frame", "check-axioms", str(f), "--table", "4"], capsys)
    assert code == 0
    code, out, _ = run(["frame", "check-axioms", str(f)], capsys)
    rep = json.loads(out)
    assert code == 1 and rep["axioms"]["O"]["witness"] == {"x": "{a,b,1}"}
    code, out, _ = run(["frame", "classify", str(f)], capsys)
    assert json.loads(out)["category"] == "nuDMA"


def test_cli_complex_algebra_feeds_back(files, tmp_path, capsys):
    f = tmp_path / "f.json"
    a = tmp_path / "a.json"
    run(["lattice", "dual-frame", files["benzene"], "-o", str(f)], capsys)
    assert run(["frame", "complex-algebra", str(f), "-o", str(a)], capsys)[0] == 0
    code, out, _ = run(["lattice", "classify", str(a)], capsys)
    assert json.loads(out)["most_specific"] == "O"


def test_cli_valid_on_lattice_and_frame(files, tmp_path, capsys):
    code, out, _ = run(["logic", "valid", "--model", files["chain3-m"], "p |- ~~p"], capsys)
    assert code == 1 and json.loads(out)["witness"] == {"p": "a"}
    f = tmp_path / "f.json"
    run(["lattice", "dual-frame", files["chain3-m"], "-o", str(f)], capsys)
    code, out, _ = run(["logic", "valid", "--model", str(f), "p |- ~~p"], capsys)
    rep = json.loads(out)
    assert code == 1 and isinstance(rep["witness"]["p"], list)


def test_cli_check_morphism(tmp_path, capsys):
    h = hom_from_names(de_morgan_chain4(), reversal(2), [0, 0, 1, 1])
    p = tmp_path / "h.json"
    io.save(p, io.hom_to_obj(h))
    code, out, _ = run(["duality", "check-morphism", str(p)], capsys)
    assert code == 0 and all(v["passed"] for v in json.loads(out)["axioms"].values())
    io.save(p, io.morphism_to_obj(dual_frame_morphism(h)))
    assert run(["duality", "check-morphism", str(p)], capsys)[0] == 0


def test_cli_check_proof(tmp_path, capsys):
    t = ProofTree(parse_sequent("p |- q"), "id")
    p = tmp_path / "p.json"
    io.save(p, io.proof_to_obj(t, LogicExtension("M")))
    code, out, _ = run(["logic", "check-proof", str(p)], capsys)
    assert code == 1 and json.loads(out)["path"] == []


def test_cli_corpus(tmp_path, capsys):
    code, out, _ = run(["corpus", "generate", "--max-size", "4", "--class", "INV", "-o", str(tmp_path / "c")], capsys)
    rep = json.loads(out)
    assert code == 0 and rep["total"] == len(list((tmp_path / "c").iterdir()))


def test_cli_export_dot(files, capsys):
    code, out, _ = run(["export", "dot", files["chain2"]], capsys)
    assert code == 0 and out.startswith("digraph")


def test_cli_input_errors(files, tmp_path, capsys):
    assert run(["lattice", "check", str(tmp_path / "missing.json")], capsys)[0] == 2
    assert run(["frame", "classify", files["chain2"]], capsys)[0] == 2
    assert run(["logic", "valid", "--model", files["chain2"], "p |-"], capsys)[0] == 2
    assert run(["logic", "countermodel", "--class", "Q", "--bound", "3", "p |- p"], capsys)[0] == 2
    assert run(["nothing"], capsys)[0] == 2
    assert run(["nothing", "--help"], capsys)[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["lattice", "classify", str(bad)], capsys)[0] == 2


def test_cli_lattice_check_finding(tmp_path, capsys):
    p = tmp_path / "bowtie.json"
    p.write_text(json.dumps({"format": io.FORMAT, "kind": "lattice", "elements": list("abcd"),
                             "leq": [[0, 2], [0, 3], [1, 2], [1, 3]]}))
    code, out, _ = run(["lattice", "check", str(p)], capsys)
    assert code == 1 and json.loads(out)["lattice"] is False


def test_reports_are_deterministic(files):
    a = subprocess.run([sys.executable, "-m", "gdlab.cli", "duality", "roundtrip", files["n5-trivial"]],
                       capture_output=True, text=True)
    b = subprocess.run([sys.executable, "-m", "gdlab.cli", "duality", "roundtrip", files["n5-trivial"]],
                       capture_output=True, text=True)
    assert a.returncode == 0 and a.stdout == b.stdout


def test_timing_only_on_request(files, capsys):
    _, out, _ = run(["lattice", "check", files["chain2"]], capsys)
    assert "seconds" not in json.loads(out)
    _, out, _ = run(["--timing", "lattice", "check", files["chain2"]], capsys)
    assert "seconds" in json.loads(out)
