import json
import math
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from hexpack import cli, geom2d, render


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_cell_on_hex_lattice(capsys):
    code, out, _ = run(capsys, "cell", "--input", "hexlattice", "--center", "0")
    doc = json.loads(out)
    assert code == 0
    assert doc["total_length"] == pytest.approx(4 * math.sqrt(3), abs=1e-9)
    assert doc["pass"] is True


def test_cell_output_is_byte_identical(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "cell", "--input", "figure2", "--center", "2", "-o", str(a))
    run(capsys, "cell", "--input", "figure2", "--center", "2", "-o", str(b))
    assert a.read_bytes() == b.read_bytes()
    text = a.read_text()
    assert text == json.dumps(json.loads(text), sort_keys=True, indent=2) + "\n"


def test_cell_svg(capsys, tmp_path):
    svg = tmp_path / "cell.svg"
    code, _, _ = run(capsys, "cell", "--input", "figure2", "--emit-svg", str(svg))
    assert code == 0
    root = ET.fromstring(svg.read_text())
    assert root.tag.endswith("svg")


def test_bad_center_is_usage_error(capsys):
    code, _, err = run(capsys, "cell", "--input", "figure2", "--center", "9")
    assert code == 3 and "--center" in err


def test_malformed_json_reports_position(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"dimension": 2,\n "points": [[0, 0], [2, 0]\n')
    code, _, err = run(capsys, "cell", "--input", str(bad))
    assert code == 3
    assert "line" in err and "column" in err


@pytest.mark.parametrize("doc", [
    {"dimension": 3, "points": [[0, 0, 0]]},
    {"dimension": 2, "points": "nope"},
    {"dimension": 2, "points": [[0, 0], [1, 0]]},
    {"dimension": 2, "points": [[0, "x"]]},
])
def test_invalid_packings_are_usage_errors(capsys, tmp_path, doc):
    path = tmp_path / "p.json"
    path.write_text(json.dumps(doc))
    code, _, _ = run(capsys, "cell", "--input", str(path))
    assert code == 3


def test_missing_file_and_bad_flag(capsys):
    assert run(capsys, "cell", "--input", "/no/such/file.json")[0] == 3
    with pytest.raises(SystemExit) as info:
        cli.main(["cell", "--bogus"])
    assert info.value.code == 3
    with pytest.raises(SystemExit) as info:
        cli.main(["verify-ineq", "--id", "ineq99"])
    assert info.value.code == 3


def test_verify_ineq3(capsys):
    code, out, _ = run(capsys, "verify-ineq", "--id", "ineq3")
    assert code == 0
    doc = json.loads(out)
    assert doc["outcome"] == "verified"
    assert doc["rounding_mode"] == "directed"


def test_verify_rejects_bad_limits(capsys):
    assert run(capsys, "verify-ineq", "--id", "ineq3", "--min-width", "0")[0] == 3


def test_verify_inconclusive_exit_code(capsys):
    code, out, _ = run(capsys, "verify-ineq", "--id", "ineq2", "--max-depth", "2")
    assert code == 2
    assert json.loads(out)["outcome"] == "inconclusive"


def test_marchal_figure2(capsys, tmp_path):
    svg = tmp_path / "m.svg"
    code, out, _ = run(capsys, "marchal", "--input", "figure2", "--samples", "20000", "--emit-svg", str(svg))
    doc = json.loads(out)
    assert code == 0
    assert doc["max_level"] == 3
    ET.fromstring(svg.read_text())


def test_marchal_degenerate_square(capsys, tmp_path):
    path = tmp_path / "sq.json"
    path.write_text(json.dumps({"dimension": 2, "points": [[0, 0], [2, 0], [2, 2], [0, 2]]}))
    code, out, _ = run(capsys, "marchal", "--input", str(path), "--samples", "1000")
    assert code == 2
    assert json.loads(out)["quadruple"] == [0, 1, 2, 3]
    code, _, _ = run(capsys, "marchal", "--input", str(path), "--samples", "1000", "--perturb")
    assert code == 0


def test_marchal_bad_panels(capsys):
    assert run(capsys, "marchal", "--input", "figure2", "--panels", "levels,nope")[0] == 3


def test_lemma_l(capsys):
    code, out, _ = run(capsys, "lemma-l", "--input", "hexagon")
    doc = json.loads(out)
    assert code == 0 and doc["sum_L"] == 6.0 and doc["equality"]
    assert run(capsys, "lemma-l", "--input", "fcc_kissing")[0] == 3


def test_l12(capsys):
    for name in ("fcc_kissing", "hcp_kissing"):
        code, out, _ = run(capsys, "l12", "--input", name)
        assert code == 0 and json.loads(out)["sum_L"] == pytest.approx(12.0)
    code, out, _ = run(capsys, "l12", "--input", "extremal13", "--norm-sum", "--no-separation")
    assert code == 0
    assert json.loads(out)["norm_sum"]["norm_sum"] == pytest.approx(26.52, abs=1e-9)
    # the norm profile is not a packing, so the separation check rejects it
    assert run(capsys, "l12", "--input", "extremal13", "--norm-sum")[0] == 3


def test_dodec(capsys):
    code, out, _ = run(capsys, "dodec")
    doc = json.loads(out)
    assert code == 0
    assert doc["t_D"] == pytest.approx(2.1029, abs=1e-4)
    assert abs(doc["identity_gap"]) < 1e-6


@pytest.mark.parametrize("graph,outcome", [("fthex", "infeasible"), ("fcc", "feasible"), ("hcp", "feasible")])
def test_contact_builtin(capsys, graph, outcome):
    code, out, _ = run(capsys, "contact", "--graph", graph)
    assert code == 0
    assert json.loads(out)["outcome"] == outcome


def test_contact_any_size(capsys):
    path = str(cli.fixture_path("wheel6_graph.json"))
    assert run(capsys, "contact", "--graph", path)[0] == 3
    code, out, _ = run(capsys, "contact", "--graph", path, "--any-size")
    assert code == 0 and json.loads(out)["outcome"] == "infeasible"


def test_contact_bad_graph(capsys, tmp_path):
    path = tmp_path / "g.json"
    path.write_text('{"rotation": [[1], []]}')
    assert run(capsys, "contact", "--graph", str(path))[0] == 3
    assert run(capsys, "contact", "--graph", "nonexistent")[0] == 3


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hexpack", "verify-ineq", "--id", "ineq7"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["outcome"] == "verified"


def test_render_panels_validate():
    V = geom2d.figure2_packing().array()
    svg = render.marchal_svg(V, panels=("levels",), resolution=20)
    ET.fromstring(svg)
    with pytest.raises(ValueError):
        render.marchal_svg(V, panels=("bogus",))
