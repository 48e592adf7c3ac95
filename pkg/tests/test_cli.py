import json
import pathlib

from zfpd.cli import main
from zfpd.families import are_isomorphic, parse_graph6, wheel, path
from zfpd.products import cartesian_product

GOLDEN = pathlib.Path(__file__).parent / "data" / "golden_verify_t1.json"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_wheel_roundtrip(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "--family", "wheel", "--n", "6")
    assert code == 0
    assert are_isomorphic(parse_graph6(out.strip()), wheel(6))


def test_gen_invalid_family(capsys):
    code, _, err = run(capsys, "gen", "--family", "nope", "--n", "4")
    assert code == 2
    assert "unknown family" in err


def test_gen_wagner(capsys):
    code, out, _ = run(capsys, "gen", "--family", "wagner")
    g = parse_graph6(out.strip())
    assert g.n == 8 and g.degree_stats() == (3, 3)


def test_compute_on_cycle(capsys, tmp_path):
    gpath = tmp_path / "c6.g6"
    code, out, _ = run(capsys, "gen", "--family", "cycle", "--n", "6", "-o", str(gpath))
    assert code == 0
    code, out, _ = run(
        capsys, "compute", "--input", str(gpath), "--params", "zf,pd,dom", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    params = payload["graphs"][0]["params"]
    assert params["zf"]["value"] == 2
    assert params["pd"]["value"] == 1
    assert params["dom"]["value"] == 2
    for info in params.values():
        assert isinstance(info["witness"], list)


def test_compute_empty_file(capsys, tmp_path):
    gpath = tmp_path / "empty.g6"
    gpath.write_text("# nothing here\n", encoding="ascii")
    code, out, _ = run(capsys, "compute", "--input", str(gpath), "--params", "zf", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"graphs": []}


def test_compute_parse_error_reports_line(capsys, tmp_path):
    gpath = tmp_path / "bad.g6"
    gpath.write_text("A_\nD?\n", encoding="ascii")
    code, _, err = run(capsys, "compute", "--input", str(gpath), "--params", "zf")
    assert code == 2
    assert "line 2" in err


def test_compute_skips_disconnected_with_notice(capsys, tmp_path):
    gpath = tmp_path / "two.g6"
    gpath.write_text("A?\n", encoding="ascii")  # two isolated vertices
    code, out, _ = run(capsys, "compute", "--input", str(gpath), "--params", "zf", "--format", "json")
    assert code == 0
    entry = json.loads(out)["graphs"][0]
    assert entry["params"] == {}
    assert "disconnected" in entry["skipped"]["zf"]


def test_compute_spider_needs_tree(capsys, tmp_path):
    gpath = tmp_path / "c4.g6"
    run(capsys, "gen", "--family", "cycle", "--n", "4", "-o", str(gpath))
    code, out, _ = run(capsys, "compute", "--input", str(gpath), "--params", "spider", "--format", "json")
    assert code == 0
    entry = json.loads(out)["graphs"][0]
    assert "tree" in entry["skipped"]["spider"]


def test_compute_edgelist_input(capsys, tmp_path):
    gpath = tmp_path / "p4.txt"
    gpath.write_text("0 1\n1 2\n2 3\n", encoding="ascii")
    code, out, _ = run(
        capsys, "compute", "--input", str(gpath), "--edgelist", "--params", "zf", "--format", "json"
    )
    assert code == 0
    assert json.loads(out)["graphs"][0]["params"]["zf"]["value"] == 1


def test_product_command(capsys, tmp_path):
    a = tmp_path / "p2.g6"
    b = tmp_path / "p4.g6"
    run(capsys, "gen", "--family", "path", "--n", "2", "-o", str(a))
    run(capsys, "gen", "--family", "path", "--n", "4", "-o", str(b))
    code, out, _ = run(capsys, "product", "--kind", "cartesian", str(a), str(b))
    assert code == 0
    expected, _ = cartesian_product(path(2), path(4))
    assert are_isomorphic(parse_graph6(out.strip()), expected)


def test_product_amalgam(capsys, tmp_path):
    a = tmp_path / "p2.g6"
    run(capsys, "gen", "--family", "path", "--n", "2", "-o", str(a))
    code, out, _ = run(capsys, "product", "--kind", "amalgam", str(a), str(a), "--at", "1,0")
    assert code == 0
    assert are_isomorphic(parse_graph6(out.strip()), path(3))


def test_verify_pass_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "--ids", "T1", "--max-n", "4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    report = payload["reports"][0]
    assert report["passed"] is True
    assert set(report) == {
        "theorem", "claim", "universe", "checked", "failures", "notes", "elapsed_s", "passed",
    }


def test_verify_failing_claim_exit_one(capsys):
    code, out, _ = run(capsys, "verify", "--ids", "T8", "--max-n", "6", "--format", "json")
    assert code == 1
    report = json.loads(out)["reports"][0]
    assert report["passed"] is False
    assert report["failures"]
    for failure in report["failures"]:
        assert set(failure) == {"graph6", "expected", "observed"}


def test_verify_unknown_id(capsys):
    code, _, err = run(capsys, "verify", "--ids", "BOGUS")
    assert code == 2
    assert "unknown theorem id" in err


def test_verify_json_schema_stable_across_runs(capsys):
    code1, out1, _ = run(capsys, "verify", "--ids", "T3,T12", "--max-n", "5", "--format", "json")
    code2, out2, _ = run(capsys, "verify", "--ids", "T3,T12", "--max-n", "5", "--format", "json")
    assert code1 == code2 == 0
    a = json.loads(out1)
    b = json.loads(out2)
    for r in a["reports"] + b["reports"]:
        r.pop("elapsed_s")
    assert a == b


def test_verify_json_matches_golden_file(capsys):
    code, out, _ = run(capsys, "verify", "--ids", "T1", "--max-n", "4", "--format", "json")
    assert code == 0
    got = json.loads(out)
    for r in got["reports"]:
        r["elapsed_s"] = 0.0
    assert got == json.loads(GOLDEN.read_text())


def test_verify_table_format(capsys):
    code, out, _ = run(capsys, "verify", "--ids", "T1", "--max-n", "4", "--format", "table")
    assert code == 0
    assert "T1" in out and "pass" in out


def test_verify_workers_match_serial(capsys):
    code1, out1, _ = run(capsys, "verify", "--ids", "T1,T3", "--max-n", "5", "--format", "json")
    code2, out2, _ = run(capsys, "verify", "--ids", "T1,T3", "--max-n", "5", "--format", "json", "--workers", "2")
    assert code1 == code2 == 0
    a = json.loads(out1)
    b = json.loads(out2)
    for r in a["reports"] + b["reports"]:
        r.pop("elapsed_s")
    assert a == b
