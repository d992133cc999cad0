"""Command line behavior: schemas, exit codes, determinism."""

import io
import json

import pytest

from domexc.cli import main
from domexc.graph6 import to_graph6
from domexc.graphs import cycle, path


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out), err


def test_analyze_inline(capsys):
    code, payload, _ = run_json(capsys, "analyze", "C~")
    assert code == 0
    assert set(payload) == {"tool_version", "input", "results"}
    assert payload["input"] == {"source": "inline", "graphs": 1}
    (r,) = payload["results"]
    assert r["index"] == 0
    assert r["graph6"] == "C~" and r["canonical_graph6"] == "C~"
    assert r["order"] == 4 and r["size"] == 6 and r["connected"]
    assert r["params"]["gamma"] == {
        "defined": True,
        "value": 1,
        "optimal_sets": 4,
        "excellent": True,
    }


def test_analyze_all_params_with_isolate(capsys):
    code, payload, _ = run_json(capsys, "analyze", "A?", "--param", "all")
    assert code == 0
    params = payload["results"][0]["params"]
    assert len(params) == 8
    assert params["gamma"]["value"] == 2
    for pid in ("gamma_t", "gamma_tr", "gamma_t_oc"):
        assert params[pid]["defined"] is False
        assert "isolated" in params[pid]["reason"]


def test_analyze_canonical_null_beyond_cap(capsys):
    code, payload, _ = run_json(capsys, "analyze", to_graph6(path(13)))
    assert code == 0
    assert payload["results"][0]["canonical_graph6"] is None


def test_analyze_file_with_bad_line(tmp_path, capsys):
    f = tmp_path / "mixed.g6"
    f.write_text("C~\n{oops\nBw\n")
    code, payload, _ = run_json(capsys, "analyze", str(f))
    assert code == 2
    rs = payload["results"]
    assert len(rs) == 3
    assert "error" in rs[1] and rs[1]["line"] == 2
    assert rs[0]["graph6"] == "C~" and rs[2]["graph6"] == "Bw"


def test_analyze_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("C~\nCl\n"))
    code, payload, _ = run_json(capsys, "analyze", "-")
    assert code == 0
    assert payload["input"]["source"] == "stdin"
    assert [r["graph6"] for r in payload["results"]] == ["C~", "Cl"]


def test_analyze_parallel_byte_identical(tmp_path, capsys):
    f = tmp_path / "batch.g6"
    f.write_text("".join(to_graph6(cycle(n)) + "\n" for n in range(3, 10)))
    _, serial, _ = run(capsys, "analyze", str(f), "--param", "all")
    _, parallel, _ = run(capsys, "analyze", str(f), "--param", "all", "--jobs", "3")
    assert serial == parallel


def test_jobs_env(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("DOMEXC_JOBS", "2")
    f = tmp_path / "two.g6"
    f.write_text("C~\nCl\n")
    code, payload, _ = run_json(capsys, "analyze", str(f))
    assert code == 0 and len(payload["results"]) == 2


def test_analyze_bad_param(capsys):
    code, _, err = run(capsys, "analyze", "C~", "--param", "gamma,delta")
    assert code == 2 and "delta" in err


def test_analyze_missing_file(capsys):
    code, _, err = run(capsys, "analyze", "/no/such/file.g6")
    assert code == 2
    assert "no such file and not a graph6 string" in err


def test_family_members(capsys):
    code, payload, _ = run_json(capsys, "family", to_graph6(cycle(7)))
    assert code == 0
    (r,) = payload["results"]
    assert r["defined"] and r["excellent"] and r["value"] == 3
    assert [m["name"] for m in r["members"]] == ["K1", "E2", "K2", "E3"]
    assert all(m["graph6"] for m in r["members"])


def test_family_not_excellent_and_undefined(capsys):
    code, payload, _ = run_json(capsys, "family", to_graph6(path(3)))
    assert code == 0
    assert payload["results"][0]["excellent"] is False
    assert payload["results"][0]["members"] == []
    code, payload, _ = run_json(capsys, "family", "A?", "--param", "gamma_t")
    assert code == 0
    assert payload["results"][0]["defined"] is False


def test_family_text_output(capsys):
    code, out, _ = run(capsys, "family", to_graph6(cycle(7)), "--output", "text")
    assert code == 0
    assert "members: K1, E2, K2, E3" in out


def test_verify_quick(capsys):
    code, payload, _ = run_json(capsys, "verify", "--suite", "quick")
    assert code == 0
    assert payload["summary"] == {"pass": 15, "fail": 0, "skipped-long-running": 0}
    assert all(r["status"] == "pass" for r in payload["results"])
    assert all(r["runtime"] is None for r in payload["results"])


def test_verify_paper_expected_failures(capsys):
    code, payload, _ = run_json(capsys, "verify", "--suite", "paper")
    assert code == 1
    failing = {r["claim_id"] for r in payload["results"] if r["status"] == "fail"}
    assert failing == {
        "complement-product-families-extended",
        "four-regular-nine-survey",
    }
    skipped = [r for r in payload["results"] if r["status"] == "skipped-long-running"]
    assert [r["claim_id"] for r in skipped] == ["five-regular-twelve-search"]
    ids = [r["claim_id"] for r in payload["results"]]
    assert len(ids) == len(set(ids)) == 31
    assert payload["summary"]["pass"] == 28


def test_verify_timings(capsys):
    code, payload, _ = run_json(capsys, "verify", "--suite", "quick", "--timings")
    assert code == 0
    assert all(isinstance(r["runtime"], float) for r in payload["results"])


def test_verify_repeat_byte_identical(capsys):
    _, first, _ = run(capsys, "verify", "--suite", "quick")
    _, second, _ = run(capsys, "verify", "--suite", "quick", "--jobs", "4")
    assert first == second


def test_verify_text_summary(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "quick", "--output", "text")
    assert code == 0
    assert out.strip().splitlines()[-1] == "15 passed, 0 failed, 0 skipped (long)"


def test_gen_counts(capsys):
    code, out, _ = run(capsys, "gen", "trees", "7")
    assert code == 0 and len(out.split()) == 11
    code, out, _ = run(capsys, "gen", "all", "4")
    assert code == 0 and len(out.split()) == 11
    code, out, _ = run(capsys, "gen", "regular", "6", "3")
    assert code == 0 and len(out.split()) == 2


def test_gen_errors(capsys):
    code, _, err = run(capsys, "gen", "regular", "6")
    assert code == 2 and "needs N and K" in err
    code, _, err = run(capsys, "gen", "regular", "5", "3")
    assert code == 2 and "even" in err
    code, _, err = run(capsys, "gen", "all", "9")
    assert code == 2


def test_search_pattern(capsys):
    code, payload, _ = run_json(
        capsys,
        "search",
        "--gen",
        "regular:9:4",
        "--pattern",
        "K3",
        "--connected",
        "--include-family",
    )
    assert code == 0
    assert payload["input"] == {"source": "regular:9:4", "size": 16}
    assert len(payload["results"]) == 3
    for r in payload["results"]:
        assert r["values"]["gamma"] == 3
        assert "K3" in r["family"]["members"]


def test_search_where_clause(capsys):
    code, payload, _ = run_json(
        capsys, "search", "--gen", "all:5", "--where", "gamma=1", "--where", "beta0=4"
    )
    assert code == 0
    for r in payload["results"]:
        assert r["values"] == {"gamma": 1, "beta0": 4}


def test_search_catalog_file(tmp_path, capsys):
    f = tmp_path / "c.g6"
    f.write_text("".join(to_graph6(cycle(n)) + "\n" for n in (4, 5, 6)))
    code, payload, _ = run_json(
        capsys, "search", "--catalog", str(f), "--excellent", "gamma"
    )
    assert code == 0
    assert len(payload["results"]) == 3


def test_search_errors(capsys):
    code, _, err = run(capsys, "search", "--gen", "regular:9")
    assert code == 2 and "bad gen spec" in err
    code, _, err = run(capsys, "search")
    assert code == 2 and "needs --catalog" in err
    code, _, err = run(capsys, "search", "--gen", "all:4", "--where", "gamma2=1")
    assert code == 2 and "gamma2" in err
    code, _, err = run(capsys, "search", "--gen", "all:4", "--where", "gamma=x")
    assert code == 2


def test_convert_canonical_idempotent(capsys):
    g = cycle(5).relabel((2, 0, 3, 1, 4))
    code, out, _ = run(capsys, "convert", to_graph6(g), "--to", "canonical", "--output", "text")
    assert code == 0
    canon = out.strip()
    code, out, _ = run(capsys, "convert", canon, "--to", "canonical", "--output", "text")
    assert code == 0 and out.strip() == canon


def test_convert_edges(capsys):
    code, payload, _ = run_json(capsys, "convert", "Cl", "--to", "edges")
    assert code == 0
    r = payload["results"][0]
    assert r["order"] == 4 and len(r["edges"]) == 4


def test_convert_bad_inline(capsys):
    code, _, err = run(capsys, "convert", "!!bad!!")
    assert code == 2 and "not a graph6 string" in err
