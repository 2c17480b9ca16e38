import io
import json
import logging
import sys

from epgap.bounds import bound_th2
from epgap.cli import main, parse_pattern
from epgap.formats import parse_edge_list, write_graph6
from epgap.graphs import (
    complete,
    complete_bipartite,
    cycle,
    disjoint_copies,
    generate,
    path,
)


def invoke(monkeypatch, capsys, argv, stdin_text=""):
    # rebind logging to the stderr capture active for this test
    logging.getLogger().handlers.clear()
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin_text))
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_bound_th2_values(monkeypatch, capsys):
    code, out, _ = invoke(monkeypatch, capsys, ["bound", "--theorem", "th2", "--k", "1", "--r", "2"])
    assert code == 0
    assert json.loads(out) == 67
    code, out, _ = invoke(monkeypatch, capsys, ["bound", "--theorem", "th2", "--k", "2", "--r", "2"])
    assert code == 0
    assert json.loads(out) == 259


def test_bound_th1_scalar_and_pretty(monkeypatch, capsys):
    code, out, _ = invoke(monkeypatch, capsys, ["bound", "--theorem", "th1", "--k", "1", "--r", "6"])
    assert code == 0
    assert json.loads(out) == 3019825151
    code, out, _ = invoke(
        monkeypatch, capsys,
        ["bound", "--theorem", "th1", "--k", "1", "--r", "6", "--pretty"],
    )
    assert code == 0
    assert "log2(2)" in out
    assert out.strip().endswith("= 3019825151")


def test_bound_kostochka(monkeypatch, capsys):
    code, out, _ = invoke(monkeypatch, capsys, ["bound", "--theorem", "kost", "--r", "2"])
    assert code == 0
    assert json.loads(out) == 1296.0


def test_bound_missing_parameters(monkeypatch, capsys):
    code, _, err = invoke(monkeypatch, capsys, ["bound", "--theorem", "th2", "--k", "1"])
    assert code == 2
    assert "error:" in err


def test_gen_pipes_into_tw(monkeypatch, capsys):
    code, out, _ = invoke(monkeypatch, capsys, ["gen", "--family", "xi", "--r", "5"])
    assert code == 0
    line = out.strip()
    assert line == write_graph6(generate("xi", r=5)).strip()
    code, out, _ = invoke(monkeypatch, capsys, ["tw"], stdin_text=line + "\n")
    assert code == 0
    assert json.loads(out) == 2


def test_gen_edges_and_dot(monkeypatch, capsys):
    code, out, _ = invoke(
        monkeypatch, capsys,
        ["gen", "--family", "complete", "--n", "4", "--format", "edges"],
    )
    assert code == 0
    g = parse_edge_list(out)
    assert (g.n, g.m) == (4, 6)
    code, out, _ = invoke(
        monkeypatch, capsys,
        ["gen", "--family", "complete", "--n", "4", "--format", "dot"],
    )
    assert code == 0
    assert "graph" in out and "--" in out


def test_gen_unknown_family(monkeypatch, capsys):
    code, _, err = invoke(monkeypatch, capsys, ["gen", "--family", "moebius"])
    assert code == 2
    assert "error:" in err


def test_tw_json_certificate(monkeypatch, capsys):
    code, out, _ = invoke(
        monkeypatch, capsys, ["tw", "--cert", "json"],
        stdin_text=write_graph6(cycle(5)),
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["width"] == 2
    assert all(isinstance(b, list) for b in payload["bags"])
    bag_count = len(payload["bags"])
    for a, b in payload["tree_edges"]:
        assert 0 <= a < bag_count and 0 <= b < bag_count


def test_pw_pace_certificate(monkeypatch, capsys):
    code, out, _ = invoke(
        monkeypatch, capsys, ["pw", "--cert", "pace"],
        stdin_text=write_graph6(path(4)),
    )
    assert code == 0
    lines = [ln for ln in out.splitlines() if ln]
    fields = lines[0].split()
    assert fields[:2] == ["s", "td"]
    assert fields[3] == "2"  # width + 1
    assert fields[4] == "4"
    bag_lines = [ln for ln in lines[1:] if ln.startswith("b ")]
    assert len(bag_lines) == int(fields[2])
    for ln in bag_lines:
        for v in ln.split()[2:]:
            assert 1 <= int(v) <= 4


def test_tw_pretty(monkeypatch, capsys):
    code, out, _ = invoke(
        monkeypatch, capsys, ["tw", "--pretty"], stdin_text=write_graph6(path(5))
    )
    assert code == 0
    assert out.strip() == "treewidth: 1"


def test_minor_found_and_pattern_forms_agree(monkeypatch, capsys):
    host = write_graph6(cycle(6))
    code, out_family, _ = invoke(
        monkeypatch, capsys, ["minor", "--pattern", "complete:3"], stdin_text=host
    )
    assert code == 0
    payload = json.loads(out_family)
    assert payload["found"] is True
    assert set(payload["model"]["branch_sets"]) == {"0", "1", "2"}
    g6_pattern = write_graph6(complete(3)).strip()
    code, out_g6, _ = invoke(
        monkeypatch, capsys, ["minor", "--pattern", g6_pattern], stdin_text=host
    )
    assert code == 0
    assert out_g6 == out_family


def test_minor_absent(monkeypatch, capsys):
    host = write_graph6(path(6))
    code, out, _ = invoke(
        monkeypatch, capsys, ["minor", "--pattern", "complete:3"], stdin_text=host
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["found"] is False
    assert "model" not in payload
    code, out, _ = invoke(
        monkeypatch, capsys,
        ["minor", "--pattern", "complete:3", "--pretty"], stdin_text=host,
    )
    assert code == 0
    assert out.strip() == "no minor"


def test_pack_command(monkeypatch, capsys):
    code, out, _ = invoke(
        monkeypatch, capsys, ["pack", "--pattern", "complete:3"],
        stdin_text=write_graph6(complete(6)),
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == 2
    assert len(payload["models"]) == 2
    for model in payload["models"]:
        assert set(model) == {"branch_sets", "pattern_hash", "host_hash"}


def test_cover_command(monkeypatch, capsys):
    code, out, _ = invoke(
        monkeypatch, capsys, ["cover", "--pattern", "complete:3"],
        stdin_text=write_graph6(complete(5)),
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == 3
    assert len(payload["vertices"]) == 3
    code, out, _ = invoke(
        monkeypatch, capsys, ["cover", "--pattern", "complete:3", "--pretty"],
        stdin_text=write_graph6(complete(5)),
    )
    assert code == 0
    assert out.startswith("cover = 3:")


def test_epgap_cover_branch(monkeypatch, capsys):
    code, out, _ = invoke(
        monkeypatch, capsys,
        ["epgap", "--pattern", "complete_bipartite:2,3", "--k", "2"],
        stdin_text=write_graph6(complete_bipartite(2, 3)),
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["type"] == "cover"
    assert len(payload["vertices"]) == 1
    assert payload["parameters"] == {"k": 2, "host_n": 5, "pattern_n": 5}
    assert payload["bounds"]["th2"] == 1849
    assert payload["bounds"]["th1"] is None


def test_epgap_packing_branch(monkeypatch, capsys):
    host = disjoint_copies(2, complete_bipartite(2, 3))
    code, out, _ = invoke(
        monkeypatch, capsys,
        ["epgap", "--pattern", "complete_bipartite:2,3", "--k", "2"],
        stdin_text=write_graph6(host),
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["type"] == "packing"
    assert len(payload["models"]) == 2
    assert payload["bounds"]["th2"] == bound_th2(2, 5)


def test_epgap_bad_k(monkeypatch, capsys):
    code, _, err = invoke(
        monkeypatch, capsys,
        ["epgap", "--pattern", "complete:3", "--k", "0"],
        stdin_text=write_graph6(path(3)),
    )
    assert code == 2
    assert "error:" in err


def test_verify_clean_lemma(monkeypatch, capsys):
    code, out, _ = invoke(
        monkeypatch, capsys,
        ["verify", "--lemma", "stiebitz", "--trials", "5", "--seed", "7"],
    )
    assert code == 0
    reports = json.loads(out)
    assert len(reports) == 1
    assert reports[0]["lemma"] == "stiebitz"
    assert reports[0]["failures"] == []


def test_verify_failing_lemma_exits_one(monkeypatch, capsys):
    code, out, _ = invoke(
        monkeypatch, capsys,
        ["verify", "--lemma", "twk2r", "--trials", "5", "--seed", "42"],
    )
    assert code == 1
    reports = json.loads(out)
    assert reports[0]["failures"]
    code, out, _ = invoke(
        monkeypatch, capsys,
        ["verify", "--lemma", "twk2r", "--trials", "5", "--seed", "42", "--pretty"],
    )
    assert code == 1
    assert "42:twk2r:1" in out


def test_verify_unknown_lemma(monkeypatch, capsys):
    code, _, err = invoke(monkeypatch, capsys, ["verify", "--lemma", "nope"])
    assert code == 2
    assert "error:" in err


def test_bad_stdin_graph(monkeypatch, capsys):
    code, _, err = invoke(monkeypatch, capsys, ["tw"], stdin_text="!!!bad\n")
    assert code == 2
    assert "error:" in err


def test_size_limit_exits_two(monkeypatch, capsys):
    code, _, err = invoke(
        monkeypatch, capsys, ["tw"], stdin_text=write_graph6(complete(30))
    )
    assert code == 2
    assert "error:" in err


def test_usage_errors(monkeypatch, capsys):
    assert invoke(monkeypatch, capsys, [])[0] == 2
    assert invoke(monkeypatch, capsys, ["frobnicate"])[0] == 2
    assert invoke(monkeypatch, capsys, ["pack"])[0] == 2  # missing --pattern
    assert invoke(monkeypatch, capsys, ["--help"])[0] == 0


def test_pattern_spec_errors(monkeypatch, capsys):
    host = write_graph6(path(3))
    for bad in ["complete:", "complete:a", "nope:3", "complete_bipartite:2"]:
        code, _, err = invoke(
            monkeypatch, capsys, ["minor", "--pattern", bad], stdin_text=host
        )
        assert code == 2, bad
        assert "error:" in err


def test_parse_pattern_helper():
    assert parse_pattern("complete:4") == complete(4)
    assert parse_pattern("xi:3") == generate("xi", r=3)
    assert parse_pattern(write_graph6(cycle(5)).strip()) == cycle(5)


def test_output_is_deterministic(monkeypatch, capsys):
    argv = ["pack", "--pattern", "complete:3"]
    host = write_graph6(complete(6))
    first = invoke(monkeypatch, capsys, argv, stdin_text=host)
    second = invoke(monkeypatch, capsys, argv, stdin_text=host)
    assert first[0] == second[0] == 0
    assert first[1] == second[1]
