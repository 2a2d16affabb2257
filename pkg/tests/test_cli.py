"""Command-line interface: golden outputs, exit codes, pipelines."""

from __future__ import annotations

import pytest

from tensorgraphs.graphs import is_isomorphic, parse

from conftest import FIXTURES, fixture_text, run_cli


def fx(name: str) -> str:
    return str(FIXTURES / name)


R1_REPORT = """\
validation: ok
vertices: 8
edges: 12
legs: 0
colors: 0 1 2
2-bubbles: {01}:1 {02}:1 {12}:2
homology: H_0 = Z; H_1 = Z^2; H_2 = Z
chi: 0
jacket (012): faces = 4, genus = 1
degree: 1
boundary: empty
member phi4-matrix: yes
member phi4-rank3: n/a
"""

L23_REPORT = """\
validation: ok
vertices: 100
edges: 188
legs: 24
colors: 0 1 2 3
2-bubbles: {01}:13 {02}:14 {03}:12 {12}:25 {13}:37 {23}:38
homology: n/a (open graph)
boundary components: 2
boundary genera: 2, 3
member phi4-matrix: n/a
member phi4-rank3: yes
"""

NECKLACE_JACKETS_KV = """\
jacket.0123.faces=6
jacket.0123.genus=0
jacket.0132.faces=6
jacket.0132.genus=0
jacket.0213.faces=4
jacket.0213.genus=1
degree=1
faces=8
amplitude-exponent=2
"""


# ------------------------------------------------------------------ reports

def test_report_r1_golden():
    code, out, err = run_cli(["report", fx("r1.cg")])
    assert (code, err) == (0, "")
    assert out == R1_REPORT


def test_report_l23_golden():
    code, out, err = run_cli(["report", fx("l-2-3.cg")])
    assert (code, err) == (0, "")
    assert out == L23_REPORT


def test_report_kv_format():
    code, out, _ = run_cli(["report", fx("necklace.cg"), "--format", "kv"])
    assert code == 0
    lines = out.splitlines()
    assert "vertices=4" in lines
    assert "2-bubbles={01}:2,{02}:1,{03}:1,{12}:1,{13}:1,{23}:2" in lines
    assert "homology=H_0=Z;H_1=0;H_2=0;H_3=Z" in lines
    assert "member.phi4-rank3=yes" in lines
    # kv output is machine-friendly: one = separated pair per line, no spaces
    assert all(" " not in ln and ln.count("=") >= 1 for ln in lines)


# ---------------------------------------------------------------- queries

def test_homology_text_and_kv():
    code, out, _ = run_cli(["homology", fx("r1.cg")])
    assert code == 0
    assert out == "H_0 = Z\nH_1 = Z^2\nH_2 = Z\nchi = 0\n"
    code, out, _ = run_cli(["homology", fx("r1.cg"), "--format", "kv"])
    assert code == 0
    assert out == "H_0=Z\nH_1=Z^2\nH_2=Z\nchi=0\n"


def test_homology_open_graph_fails_cleanly():
    code, out, err = run_cli(["homology", fx("t1.cg")])
    assert code == 1
    assert out == ""
    assert err.startswith("error:")


def test_euler():
    code, out, _ = run_cli(["euler", fx("r0.cg")])
    assert (code, out) == (0, "chi = 2\n")


def test_bubbles_listing():
    code, out, _ = run_cli(["bubbles", fx("r1.cg"), "--colors", "1,2"])
    assert code == 0
    assert out == (
        "bubble {12}: a b p q\n"
        "bubble {12}: c d x y\n"
        "count = 2\n"
    )
    code, out, _ = run_cli(["bubbles", fx("r1.cg"), "--colors", "1,2", "--format", "kv"])
    assert out == "bubble.{12}=a,b,p,q\nbubble.{12}=c,d,x,y\ncount=2\n"


def test_jackets_golden():
    code, out, _ = run_cli(["jackets", fx("necklace.cg"), "--format", "kv"])
    assert code == 0
    assert out == NECKLACE_JACKETS_KV
    code, out, _ = run_cli(["jackets", fx("necklace.cg")])
    assert "jacket (0213): faces = 4, genus = 1" in out
    assert "degree = 1" in out
    assert "amplitude-exponent = 2" in out


def test_degree():
    code, out, _ = run_cli(["degree", fx("r1.cg")])
    assert code == 0
    assert out == "jacket (012): faces = 4, genus = 1\ndegree = 1\n"


def test_melonic_exit_codes():
    assert run_cli(["melonic", fx("melon.cg")])[0] == 0
    assert run_cli(["melonic", fx("melon.cg")])[1] == "melonic\n"
    code, out, _ = run_cli(["melonic", fx("necklace.cg")])
    assert (code, out) == (1, "not melonic\n")


def test_genus_and_bc_on_both_formats():
    assert run_cli(["genus", fx("w.rg")])[1] == "genus = 1\n"
    assert run_cli(["bc", fx("w.rg")])[1] == "bc = 1\n"
    # colored files are converted through the cyclic-order construction
    assert run_cli(["genus", fx("c1.cg")])[1] == "genus = 1\n"
    assert run_cli(["bc", fx("dipole3.cg")])[1] == "bc = 3\n"
    assert run_cli(["genus", fx("w.rg"), "--format", "kv"])[1] == "genus=1\n"


def test_boundary_degree():
    code, out, _ = run_cli(["boundary-degree", fx("l-2-3.cg")])
    assert (code, out) == (0, "boundary-degree = 15\n")


def test_validate_ok_and_failing(tmp_path):
    assert run_cli(["validate", fx("r1.cg")]) == (0, "ok\n", "")
    bad = tmp_path / "bad.cg"
    bad.write_text("colors 2 closed\nv a w\nv b b\ne e1 1 a b\n")
    code, out, _ = run_cli(["validate", str(bad)])
    assert code == 1
    assert out == "vertex 'a': missing color 2\nvertex 'b': missing color 2\n"


# ---------------------------------------------------------------- surgery

def test_sum_pipeline(tmp_path):
    out_path = tmp_path / "s.cg"
    code, _, _ = run_cli(
        ["sum", fx("r1.cg"), "alpha0", fx("r1.cg"), "beta0", "-o", str(out_path)]
    )
    assert code == 0
    code, out, _ = run_cli(["euler", str(out_path)])
    assert out == "chi = -2\n"


def test_open_cap_roundtrip(tmp_path):
    opened = tmp_path / "o.cg"
    run_cli(["open", fx("r1.cg"), "alpha0", "-o", str(opened)])
    code, out, _ = run_cli(["cap", str(opened), "alpha0.w", "alpha0.b"])
    assert code == 0
    assert is_isomorphic(parse(out), parse(fixture_text("r1.cg"))).isomorphic


def test_cone_boundary_pipeline():
    code, coned, _ = run_cli(["cone", fx("dipole3.cg")])
    assert code == 0
    code, bdry, _ = run_cli(["boundary", "-"], stdin_text=coned)
    assert code == 0
    code, verdict, _ = run_cli(["iso", "-", fx("dipole3.cg")], stdin_text=bdry)
    assert (code, verdict) == (0, "isomorphic\n")


def test_crys_sum_command():
    code, out, _ = run_cli(["crys-sum", fx("r1.cg"), "p", fx("r1.cg"), "a"])
    assert code == 0
    g = parse(out)
    assert len(g.vertices) == 14


def test_boundary_of_vacuum_graph():
    code, out, _ = run_cli(["boundary", fx("r1.cg")])
    assert (code, out) == (0, "colors 2 closed\n")


# ------------------------------------------------------------------- iso

def test_iso_exit_codes():
    code, out, _ = run_cli(["iso", fx("r0.cg"), fx("r1.cg")])
    assert (code, out) == (1, "not isomorphic\n")
    code, out, _ = run_cli(["iso", fx("r1.cg"), fx("r1.cg")])
    assert (code, out) == (0, "isomorphic\n")
    code, out, _ = run_cli(
        [
            "iso",
            fx("necklace.cg"),
            fx("necklace-base1.cg"),
            "--mode",
            "up-to-color-permutation",
        ]
    )
    assert (code, out) == (0, "isomorphic\n")
    assert run_cli(["iso", fx("necklace.cg"), fx("necklace-base1.cg")])[0] == 1


# ------------------------------------------------------------- membership

def test_member_command():
    code, out, _ = run_cli(["member", fx("r1.cg"), "--model", "phi4-matrix"])
    assert code == 0
    assert out == "component a: V\ncomponent c: V\nmember\n"
    code, _, err = run_cli(["member", fx("r1.cg"), "--model", "phi4-rank3"])
    assert code == 1
    assert "do not match rank-3 model" in err


def test_member_not_member_exit():
    code, out, _ = run_cli(["member", fx("twopoint.cg"), "--model", "phi4-rank3"])
    assert code == 1
    assert out.endswith("not member\n")


# ------------------------------------------------------------ enumeration

def test_enumerate_counts():
    code, out, _ = run_cli(["enumerate", "--model", "phi4-matrix", "-k", "2"])
    assert (code, out) == (0, "count = 24\n")
    code, out, _ = run_cli(
        ["enumerate", "--model", "phi4-rank3", "-k", "2", "--dedup"]
    )
    assert (code, out) == (0, "count = 144\ndistinct = 54\n")


# ------------------------------------------------------------- builders

def test_build_is_deterministic():
    a = run_cli(["build", "qg", "--genus", "1"])
    b = run_cli(["build", "qg", "--genus", "1"])
    assert a == b
    assert a[0] == 0


def test_build_matches_fixture_bytes():
    code, out, _ = run_cli(["build", "l", "--genera", "2,3"])
    assert code == 0
    assert out == fixture_text("l-2-3.cg")


def test_build_unknown_family():
    code, _, err = run_cli(["build", "ufo"])
    assert code == 1
    assert err.startswith("error: unknown family")


def test_build_tg_boundary_is_cg_pipeline(tmp_path):
    t = tmp_path / "t1.cg"
    assert run_cli(["build", "tg", "--genus", "1", "-o", str(t)])[0] == 0
    code, bdry, _ = run_cli(["boundary", str(t)])
    code2, verdict, _ = run_cli(["iso", "-", fx("c1.cg")], stdin_text=bdry)
    assert (code2, verdict) == (0, "isomorphic\n")


# ------------------------------------------------------------ separators

def test_find_separators_output(tmp_path):
    pout, mout = tmp_path / "p.cg", tmp_path / "m.cg"
    code, out, _ = run_cli(
        ["find-separators", "--out-p", str(pout), "--out-m", str(mout)]
    )
    assert code == 0
    assert out == (
        "separator P: 4 vertices, splice edges z0, z1\n"
        "separator M: 8 vertices, splice edges z0, z1\n"
    )
    assert pout.read_text() == fixture_text("p.cg")
    assert mout.read_text() == fixture_text("m.cg")


# ----------------------------------------------------------------- misc

def test_export_dot():
    code, out, _ = run_cli(["export-dot", fx("dipole3.cg")])
    assert code == 0
    assert out.startswith("graph")
    assert '"w"' in out and '"b"' in out


def test_stdin_stdout_dash():
    text = fixture_text("r0.cg")
    code, out, _ = run_cli(["euler", "-"], stdin_text=text)
    assert (code, out) == (0, "chi = 2\n")
    code, out, _ = run_cli(["validate", "-"], stdin_text=text)
    assert (code, out) == (0, "ok\n")


def test_fixture_at_references(monkeypatch):
    monkeypatch.setenv("TGRAPH_FIXTURES", str(FIXTURES))
    code, out, _ = run_cli(["euler", "@r1.cg"])
    assert (code, out) == (0, "chi = 0\n")
    monkeypatch.setenv("TGRAPH_FIXTURES", "/nonexistent")
    code, _, err = run_cli(["euler", "@r1.cg"])
    assert code == 1 and err.startswith("error:")


def test_missing_file_is_a_domain_error():
    code, out, err = run_cli(["euler", "/no/such/file.cg"])
    assert code == 1
    assert err.startswith("error:")


@pytest.mark.parametrize(
    "argv",
    [["nope"], ["homology"], ["bubbles", "x.cg"], []],
)
def test_usage_errors_exit_2(argv):
    code, _, err = run_cli(argv)
    assert code == 2
    assert "usage" in err.lower() or err == ""
