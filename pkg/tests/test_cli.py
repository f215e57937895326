import csv
import io
import json

from cli.router import CSV_COLUMNS, EXIT_BUDGET, EXIT_OK, EXIT_USAGE, run


def _run(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out)
    return code, out.getvalue()


def _result(*argv):
    code, text = _run(*argv)
    assert code == EXIT_OK
    envelope = json.loads(text)
    assert envelope["tool"] == "curve-census"
    assert envelope["command"] == argv[0]
    return envelope["result"]


def _csv(*argv):
    code, text = _run(*argv, "--format", "csv")
    assert code == EXIT_OK
    return list(csv.reader(io.StringIO(text)))


def test_constants_for_one_genus():
    assert _result("constants", "--k", "0", "--h", "0") == {"num": 1, "den": 2}
    assert _result("constants", "--k", "1", "--h", "1") == {"num": 0, "den": 1}


def test_constants_summary():
    result = _result("constants", "--k", "2")
    assert result["C_k"] == {"num": 1, "den": 1}
    assert result["planar_classes"] == 2
    assert [(s["h"], s["classes"]) for s in result["by_genus"]] == [(0, 2), (1, 1)]


def test_count_without_disks():
    result = _result("count", "--k", "0", "--h", "0", "--genus", "10", "--punctures", "0", "--mode", "no-disk")
    assert result["count"] == 6
    assert result["mode"] == "no_disk"
    assert len(result["per_graph"]) == 1


def test_count_up_to():
    result = _result("count", "--k", "1", "--genus", "0", "--punctures", "0", "--up-to")
    assert result["count"] == 2
    assert result["up_to"] is True


def test_count_needs_genus_of_the_ribbon_graph():
    code, _ = _run("count", "--k", "1", "--genus", "1", "--punctures", "0")
    assert code == EXIT_USAGE


def test_census_report():
    result = _result("census", "--k", "2")
    assert len(result["classes"]) == 3
    assert [s["classes"] for s in result["summary"]] == [2, 1]

    torus = _result("census", "--k", "2", "--genus", "1")["classes"]
    assert [(c["h"], c["b"], c["baut"]) for c in torus] == [(1, 2, 1)]


def test_census_above_cap_exits_with_budget_code():
    code, text = _run("census", "--k", "99")
    assert code == EXIT_BUDGET
    assert text == ""


def test_usage_errors():
    assert _run("census", "--k", "1", "--bogus")[0] == EXIT_USAGE
    assert _run("census", "--k", "-1")[0] == EXIT_USAGE
    assert _run("frobnicate")[0] == EXIT_USAGE
    assert _run("geometry", "--length", "0", "--genus", "1", "--punctures", "0")[0] == EXIT_USAGE
    assert _run("geometry", "--length", "inf", "--genus", "1", "--punctures", "0")[0] == EXIT_USAGE
    assert _run("geometry", "--length", "nan", "--genus", "1", "--punctures", "0")[0] == EXIT_USAGE
    assert _run("census", "--k", "1", "--format", "xml")[0] == EXIT_USAGE


def test_missing_census_file(tmp_path):
    code, _ = _run("census", "--k", "1", "--census-file", str(tmp_path / "nope.jsonl"))
    assert code == EXIT_USAGE


def test_census_file_round_trip(tmp_path):
    path = tmp_path / "k2.jsonl"
    code, _ = _run("census", "--k", "2", "--out", str(path))
    assert code == EXIT_OK
    assert path.is_file()

    argv = ("count", "--k", "2", "--h", "0", "--genus", "1", "--punctures", "2")
    assert _result(*argv, "--census-file", str(path)) == _result(*argv)

    # a k=2 file cannot answer a k=1 question
    code, _ = _run("count", "--k", "1", "--h", "0", "--genus", "0", "--punctures", "0", "--census-file", str(path))
    assert code == EXIT_USAGE


def test_csv_headers_and_rows():
    rows = _csv("census", "--k", "1")
    assert rows[0] == CSV_COLUMNS["census"]
    assert len(rows) == 2
    assert rows[1][:5] == ["1", "0", "3", "2", "2"]

    rows = _csv("count", "--k", "0", "--h", "0", "--genus", "2", "--punctures", "0")
    assert rows[0] == CSV_COLUMNS["count"]
    assert rows[-1] == ["0", "0", "2", "0", "iso", "total", "3"]

    rows = _csv("asymptotic", "--k", "0", "--genus", "10", "--punctures", "0")
    assert rows[0] == CSV_COLUMNS["asymptotic"]
    assert rows[1] == ["0", "", "10", "0", "total", "11", "2"]
    assert rows[2] == ["0", "", "10", "0", "closed", "5", "1"]


def test_output_is_byte_stable():
    argv = ("count", "--k", "2", "--h", "0", "--genus", "3", "--punctures", "1")
    assert _run(*argv)[1] == _run(*argv)[1]
    assert _run(*argv, "--format", "csv")[1] == _run(*argv, "--format", "csv")[1]


def test_geometry_report():
    result = _result("geometry", "--length", "0.35", "--genus", "1", "--punctures", "1")
    assert result["budget"] == 3
    assert [p["k"] for p in result["per_k"]] == [0, 1, 2]
    assert result["bound"] == sum(p["count"] for p in result["per_k"])

    rows = _csv("geometry", "--length", "0.1", "--genus", "2", "--punctures", "0")
    assert rows[0] == CSV_COLUMNS["geometry"]
    assert rows[-1][-2:] == ["total", "3"]

    assert _run("geometry", "--length", "1", "--genus", "2", "--punctures", "0")[0] == EXIT_BUDGET


def test_long_geodesics_exceed_the_census_cap():
    for length in ("20", "200", "1e6"):
        code, text = _run("geometry", "--length", length, "--genus", "1", "--punctures", "0")
        assert code == EXIT_BUDGET
        assert text == ""


def test_stats_report():
    result = _result("stats", "--k", "0", "--genus", "2", "--punctures", "0")
    assert result["orbits"] == 3
    assert result["disk_fraction"] == {"num": 1, "den": 3}
    assert result["rigid_fraction"] == {"num": 2, "den": 3}

    rows = _csv("stats", "--k", "0", "--genus", "100", "--punctures", "0")
    assert rows[1][6:8] == ["1", "52"]


def test_threads_flag_builds_with_a_pool():
    assert _result("constants", "--k", "3", "--threads", "2") == _result("constants", "--k", "3")
