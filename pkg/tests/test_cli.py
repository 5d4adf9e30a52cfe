"""Command-line interface: run reports, exit codes, and file outputs.

Commands are driven in-process through main(argv); one subprocess smoke
test checks the module entry point.
"""

import json
import subprocess
import sys

from permatch import (
    are_isomorphic,
    canonical_graph6,
    cycle,
    graph6_decode,
    graph6_encode,
    matching_join,
    complete,
    petersen,
)
from permatch.cli import main


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    report = json.loads(out.out) if out.out.strip() else None
    return code, report, out.err


def write_graph(tmp_path, g, name="g.g6"):
    path = tmp_path / name
    path.write_text(graph6_encode(g) + "\n", encoding="ascii")
    return str(path)


def test_gen_writes_graph6(tmp_path, capsys):
    out = tmp_path / "c6.g6"
    code, report, _ = run(capsys, ["gen", "cycle", "6", "--out", str(out)])
    assert code == 0
    assert report["command"] == "gen"
    assert report["inputs"] == {"family": "cycle", "params": ["6"]}
    assert report["result"]["vertices"] == 6
    assert report["result"]["edges"] == 6
    assert "elapsed_ms" in report
    g = graph6_decode(out.read_text().strip())
    assert are_isomorphic(g, cycle(6)) is not None
    assert report["result"]["graph6"] == graph6_encode(cycle(6))


def test_gen_families(capsys):
    code, report, _ = run(capsys, ["gen", "petersen"])
    assert code == 0 and report["result"]["vertices"] == 10

    code, report, _ = run(capsys, ["gen", "odd", "3"])
    assert code == 0
    assert report["result"]["vertices"] == 10
    assert len(report["result"]["symbol_generators"]) >= 1

    code, report, _ = run(capsys, ["gen", "complete-bipartite", "3", "3"])
    assert code == 0 and report["result"]["edges"] == 9

    code, report, _ = run(capsys, ["gen", "matching-join", "K3", "K3"])
    assert code == 0
    got = graph6_decode(report["result"]["graph6"])
    want = matching_join(complete(3), complete(3), [0, 1, 2])
    assert are_isomorphic(got, want) is not None

    code, report, _ = run(capsys, ["gen", "matching-join", "C5", "C5",
                                   "--phi", "0,3,1,4,2"])
    assert code == 0
    assert are_isomorphic(graph6_decode(report["result"]["graph6"]),
                          petersen()) is not None

    code, report, _ = run(capsys, ["gen", "composition", "C5", "2"])
    assert code == 0 and report["result"]["vertices"] == 10

    code, report, _ = run(capsys, ["gen", "subdivide-non-matching", "C6",
                                   "--edges", "0-1,2-3,4-5"])
    assert code == 0
    assert are_isomorphic(graph6_decode(report["result"]["graph6"]),
                          cycle(9)) is not None

    code, report, _ = run(capsys, ["gen", "subdivide-all", "K3"])
    assert code == 0
    assert report["result"]["edge_vertices"] == {"0-1": 3, "0-2": 4, "1-2": 5}


def test_gen_rejects_bad_input(capsys):
    code, report, err = run(capsys, ["gen", "nonesuch"])
    assert code == 2 and report is None and "error:" in err
    code, _, err = run(capsys, ["gen", "cycle", "2"])
    assert code == 2 and "error:" in err
    code, _, err = run(capsys, ["gen", "complete"])
    assert code == 2 and "error:" in err
    code, _, err = run(capsys, ["gen", "subdivide-non-matching", "C6"])
    assert code == 2 and "error:" in err


def test_aut_command(tmp_path, capsys):
    path = write_graph(tmp_path, petersen())
    code, report, _ = run(capsys, ["aut", path])
    assert code == 0
    res = report["result"]
    assert res["order"] == 120
    assert res["orbits"] == [list(range(10))]
    assert res["canonical_graph6"] == canonical_graph6(petersen())
    assert len(res["generators"]) >= 1

    code, _, err = run(capsys, ["aut", str(tmp_path / "missing.g6")])
    assert code == 2 and "error:" in err


def test_matching_analyze(tmp_path, capsys):
    path = write_graph(tmp_path, cycle(6))
    code, report, _ = run(capsys, ["matching", "analyze", path,
                                   "--edges", "0-1,2-3,4-5"])
    assert code == 0
    res = report["result"]
    assert res["is_matching"] and res["is_perfect"]
    assert res["stabilizer_order"] == 6 and res["induced_order"] == 6
    assert res["permutable"] and res["two_transitive"]

    code, _, _ = run(capsys, ["matching", "analyze", path,
                              "--edges", "0-1,2-3,4-5", "--check", "permutable"])
    assert code == 0

    path8 = write_graph(tmp_path, cycle(8), "c8.g6")
    code, report, _ = run(capsys, ["matching", "analyze", path8,
                                   "--edges", "0-1,2-3,4-5",
                                   "--check", "permutable"])
    assert code == 1
    assert report["result"]["permutable"] is False

    code, _, err = run(capsys, ["matching", "analyze", path, "--edges", "0-2"])
    assert code == 2 and "error:" in err


def test_matching_find(tmp_path, capsys):
    path = write_graph(tmp_path, cycle(6))
    code, report, _ = run(capsys, ["matching", "find", path, "-m", "3"])
    assert code == 0
    assert report["result"]["found"] is True
    assert report["result"]["report"]["permutable"] is True

    path8 = write_graph(tmp_path, cycle(8), "c8.g6")
    code, report, _ = run(capsys, ["matching", "find", path8, "-m", "3"])
    assert code == 1 and report["result"]["found"] is False

    code, report, _ = run(capsys, ["matching", "find", path8, "-m", "3",
                                   "--mode", "two_transitive"])
    assert code == 1


def test_group_file_input(tmp_path, capsys):
    path = write_graph(tmp_path, cycle(6))
    gens = tmp_path / "gens.txt"
    gens.write_text("# rotation only\n(0 1 2 3 4 5)\n", encoding="ascii")
    code, report, _ = run(capsys, ["matching", "analyze", path,
                                   "--edges", "0-1,2-3,4-5",
                                   "--group", str(gens)])
    assert code == 0
    res = report["result"]
    assert res["group_order"] == 6
    assert res["stabilizer_order"] == 3 and res["induced_order"] == 3
    assert res["permutable"] is False

    bad = tmp_path / "bad.txt"
    bad.write_text("(0 1)\n", encoding="ascii")
    code, _, err = run(capsys, ["matching", "analyze", path,
                                "--edges", "0-1,2-3,4-5", "--group", str(bad)])
    assert code == 2 and "error:" in err


def test_cover_command(tmp_path, capsys):
    path = write_graph(tmp_path, cycle(6))
    prefix = str(tmp_path / "cover")
    code, report, _ = run(capsys, ["cover", path, "-p", "2",
                                   "--tree-contains", "0-1,2-3,4-5",
                                   "--out", prefix])
    assert code == 0
    res = report["result"]
    assert res["base_vertices"] == 6 and res["cover_vertices"] == 12
    assert res["p"] == 2 and res["k"] == 1
    assert res["lifted_group_order"] == 24
    assert res["lifted_matching"] == "0-1,2-3,4-5"
    rep = res["lifted_matching_report"]
    assert rep["stabilizer_order"] == 2 and rep["induced_order"] == 2
    assert rep["permutable"] is False

    cov = graph6_decode((tmp_path / "cover.g6").read_text().strip())
    assert are_isomorphic(cov, cycle(12)) is not None
    fibers = json.loads((tmp_path / "cover.fibers.json").read_text())
    assert len(fibers) == 12 and fibers["0"] == [0, [0]]

    code, _, err = run(capsys, ["cover", path, "-p", "9"])
    assert code == 2 and "error:" in err
    code, _, err = run(capsys, ["cover", path, "-p", "2",
                                "--max-vertices", "5"])
    assert code == 2 and "error:" in err


def test_near_polygonal_command(tmp_path, capsys):
    path = write_graph(tmp_path, complete(4))
    code, report, _ = run(capsys, ["near-polygonal", path])
    assert code == 0
    res = report["result"]
    assert res["found"] and res["cycle_length"] == 3 and res["cycle_count"] == 4

    path = write_graph(tmp_path, petersen(), "pet.g6")
    code, report, _ = run(capsys, ["near-polygonal", path])
    assert code == 1 and report["result"]["found"] is False

    path = write_graph(tmp_path, matching_join(complete(3), complete(3),
                                               [0, 1, 2]), "prism.g6")
    code, _, err = run(capsys, ["near-polygonal", path])
    assert code == 2 and "error:" in err


def test_quotient_command(tmp_path, capsys):
    path = write_graph(tmp_path, cycle(6))
    part = tmp_path / "part.json"
    part.write_text(json.dumps([[0, 3], [1, 4], [2, 5]]), encoding="ascii")
    code, report, _ = run(capsys, ["quotient", path, "--partition", str(part)])
    assert code == 0
    res = report["result"]
    assert res["regular_cover"] is True
    assert are_isomorphic(graph6_decode(res["quotient_graph6"]),
                          cycle(3)) is not None
    assert res["blocks"] == [[0, 3], [1, 4], [2, 5]]

    code, report, _ = run(capsys, ["quotient", path, "--partition", str(part),
                                   "--group", "auto"])
    assert code == 0

    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps([[0, 1], [2, 3]]), encoding="ascii")
    code, _, err = run(capsys, ["quotient", path, "--partition", str(bad)])
    assert code == 2 and "error:" in err
    notlist = tmp_path / "notlist.json"
    notlist.write_text(json.dumps({"a": 1}), encoding="ascii")
    code, _, err = run(capsys, ["quotient", path, "--partition", str(notlist)])
    assert code == 2 and "error:" in err


def test_arcs_command(tmp_path, capsys):
    path = write_graph(tmp_path, petersen())
    code, report, _ = run(capsys, ["arcs", path])
    assert code == 0
    assert report["result"] == {"arc_transitive": True,
                                "two_arc_transitive": True}

    path = write_graph(tmp_path, matching_join(complete(3), complete(3),
                                               [0, 1, 2]), "prism.g6")
    code, report, _ = run(capsys, ["arcs", path])
    assert code == 0
    assert report["result"]["arc_transitive"] is False


def test_classify_command(capsys):
    code, report, _ = run(capsys, ["classify", "--m", "2"])
    assert code == 0
    assert report["result"]["match"] is True
    assert len(report["result"]["observed"]) == 4
    assert report["result"]["observed"] == report["result"]["expected"]

    code, report, _ = run(capsys, ["classify", "--m", "2",
                                   "--mode", "two_transitive"])
    assert code == 0 and report["result"]["mode"] == "two-transitive"

    code, _, err = run(capsys, ["classify", "--m", "9"])
    assert code == 2 and "error:" in err


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "permatch.cli", "gen", "petersen"],
        capture_output=True, text=True, timeout=60)
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["result"]["vertices"] == 10
