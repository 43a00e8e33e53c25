import io
import json
import sys

import numpy as np
import pytest

from app.cli import CliConfig, ExitCode
from app.core import build_embedded_graph
from app.main import build_parser, main
from app.storage import write_graph_json, write_weighted_graph_json

from .conftest import FIXTURES, relation_embedded_graph, relation_weighted_graph

pytestmark = pytest.mark.usefixtures("clean_env")

TRUST_ROUTE = str(FIXTURES / "trust_route.json")
TRUST = str(FIXTURES / "trust_target.json")


def run(capsys, *argv):
    code = main([str(arg) for arg in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _write(path, data: bytes) -> str:
    path.write_bytes(data)
    return str(path)


# =========================
# distance
# =========================

def test_distance_best_route(capsys):
    code, out, _ = run(capsys, "distance", "--graph", TRUST_ROUTE, "--from", "a", "--to", "d",
                       "--target-file", TRUST, "--direction", "undirected")
    assert code == ExitCode.OK
    assert out == "1.3500\na -> b -> d\n"


def test_distance_explicit_route(capsys):
    code, out, _ = run(capsys, "distance", "--graph", TRUST_ROUTE, "--from", "a", "--to", "d", "--via", "c",
                       "--target-file", TRUST, "--direction", "undirected")
    assert code == ExitCode.OK
    assert out == "1.5800\na -> c -> d\n"


def test_distance_with_symmetrized_graph(capsys):
    code, out, _ = run(capsys, "distance", "--graph", TRUST_ROUTE, "--from", "a", "--to", "d",
                       "--target-file", TRUST, "--symmetrize")
    assert code == ExitCode.OK
    assert out.startswith("1.3500\n")


def test_distance_to_itself(capsys):
    code, out, _ = run(capsys, "distance", "--graph", TRUST_ROUTE, "--from", "c", "--to", "c", "--target-file", TRUST)
    assert code == ExitCode.OK
    assert out == "0.0000\nc\n"


def test_distance_without_path(capsys):
    code, out, err = run(capsys, "distance", "--graph", TRUST_ROUTE, "--from", "a", "--to", "d", "--target-file", TRUST)
    assert code == ExitCode.NO_PATH == 3
    assert out == ""
    assert "'a'" in err and "'d'" in err


def test_distance_table(capsys):
    code, out, _ = run(capsys, "distance", "--graph", TRUST_ROUTE, "--from", "a",
                       "--target-file", TRUST, "--direction", "undirected")
    assert code == ExitCode.OK
    assert out == "a\t0.0000\nb\t0.5800\nc\t0.8200\nd\t1.3500\n"


def test_distance_unknown_vertex(capsys):
    code, _, err = run(capsys, "distance", "--graph", TRUST_ROUTE, "--from", "a", "--to", "q", "--target-file", TRUST)
    assert code == ExitCode.IO_OR_SCHEMA
    assert "'q'" in err


# =========================
# translate / threshold
# =========================

def test_threshold_friend_column(tmp_path, capsys):
    graph = _write(tmp_path / "friend.json", write_weighted_graph_json(relation_weighted_graph("friend")))
    code, out, _ = run(capsys, "threshold", "--graph", graph, "--cutoff", "0.6")
    assert code == ExitCode.OK
    doc = json.loads(out)
    assert doc["kind"] == "edge"
    assert {edge["target"] for edge in doc["edges"]} == {"friend", "colleague"}

    code, out, _ = run(capsys, "threshold", "--graph", graph, "--cutoff", "1.1")
    assert json.loads(out)["edges"] == []


def test_threshold_reads_stdin(tmp_path, capsys, monkeypatch):
    data = write_weighted_graph_json(relation_weighted_graph("digital"))
    monkeypatch.setattr(sys, "stdin", io.TextIOWrapper(io.BytesIO(data)))
    code, out, _ = run(capsys, "threshold", "--graph", "-", "--cutoff", "0.3")
    assert code == ExitCode.OK
    assert {edge["target"] for edge in json.loads(out)["edges"]} == {"computer", "smartphone"}


def test_threshold_rejects_embedded_graph(capsys):
    code, _, err = run(capsys, "threshold", "--graph", TRUST_ROUTE, "--cutoff", "0.5")
    assert code == ExitCode.IO_OR_SCHEMA
    assert "kind" in err


def test_non_numeric_cutoff_is_a_usage_error(capsys):
    code, _, _ = run(capsys, "threshold", "--graph", TRUST_ROUTE, "--cutoff", "high")
    assert code == ExitCode.USAGE == 64


def test_missing_file(tmp_path, capsys):
    code, _, _ = run(capsys, "stats", "--graph", tmp_path / "absent.json")
    assert code == ExitCode.IO_OR_SCHEMA


def _random_fixture(tmp_path, seed):
    rng = np.random.default_rng(seed)
    dim = int(rng.integers(1, 6))
    names = [f"n{i}" for i in range(int(rng.integers(2, 9)))]
    pairs = {(str(a), str(b)) for a, b in rng.choice(names, size=(int(rng.integers(1, 15)), 2))}
    edges = [(pair, rng.normal(size=dim) + 0.01) for pair in sorted(pairs)]
    graph = _write(tmp_path / "g.json", write_graph_json(build_embedded_graph(names, edges, dim=dim)))
    target = tmp_path / "target.json"
    target.write_text(json.dumps((rng.normal(size=dim) + 0.01).tolist()))
    return graph, str(target), round(float(rng.uniform(-0.5, 0.5)), 3)


@pytest.mark.parametrize("seed", range(20))
def test_two_step_pipeline_equals_single_step(tmp_path, capsys, seed):
    graph, target, cutoff = _random_fixture(tmp_path, seed)
    weighted, two_step, one_step = tmp_path / "w.json", tmp_path / "e2.json", tmp_path / "e1.json"

    assert run(capsys, "translate", "--graph", graph, "--target-file", target, "--out", weighted)[0] == 0
    assert run(capsys, "threshold", "--graph", weighted, "--cutoff", cutoff, "--out", two_step)[0] == 0
    assert run(capsys, "translate-threshold", "--graph", graph, "--target-file", target,
               "--cutoff", cutoff, "--out", one_step)[0] == 0
    assert two_step.read_bytes() == one_step.read_bytes()


def test_outputs_are_deterministic(tmp_path, capsys):
    graph, target, _ = _random_fixture(tmp_path, 99)
    first = run(capsys, "translate", "--graph", graph, "--target-file", target, "--metric", "dot")[1]
    second = run(capsys, "translate", "--graph", graph, "--target-file", target, "--metric", "dot")[1]
    assert first == second


def test_family_export_keeps_six_edges(tmp_path, capsys):
    graph = _write(tmp_path / "family.json", write_graph_json(relation_embedded_graph("family")))
    kept = tmp_path / "kept.json"
    run(capsys, "translate-threshold", "--graph", graph, "--target-file", TRUST, "--cutoff", "0.5", "--out", kept)
    code, out, _ = run(capsys, "export", "--graph", kept, "--format", "dot")
    assert code == ExitCode.OK
    assert out.startswith('digraph "G" {')
    assert out.count("->") == 6


def test_export_weight_labels_and_tsv(tmp_path, capsys):
    graph = _write(tmp_path / "w.json", write_weighted_graph_json(relation_weighted_graph("work")))
    code, out, _ = run(capsys, "export", "--graph", graph, "--format", "dot", "--label", "weight")
    assert code == ExitCode.OK
    assert '"me" -> "computer" [label="0.19"];' in out

    code, out, _ = run(capsys, "export", "--graph", graph, "--format", "tsv")
    assert "me\tboss\t0.12\n" in out

    code, _, _ = run(capsys, "export", "--graph", TRUST_ROUTE, "--format", "dot", "--label", "weight")
    assert code == ExitCode.IO_OR_SCHEMA


# =========================
# model-backed commands
# =========================

def test_translate_with_model(toy_model, tmp_path, capsys):
    classroom = tmp_path / "a.json"
    run(capsys, "embed", "--graph", FIXTURES / "classroom_a_tokens.json", "--model", toy_model, "--out", classroom)
    code, out, _ = run(capsys, "translate", "--graph", classroom, "--target", "talk", "--model", toy_model)
    assert code == ExitCode.OK
    doc = json.loads(out)
    assert doc["kind"] == "weighted" and len(doc["edges"]) == 5


def test_unknown_target_token(toy_model, capsys):
    code, _, err = run(capsys, "translate", "--graph", TRUST_ROUTE, "--target", "zeppelin", "--model", toy_model)
    assert code == ExitCode.UNKNOWN_TOKEN == 2
    assert "zeppelin" in err


def test_model_must_be_configured(capsys):
    code, _, err = run(capsys, "translate", "--graph", TRUST_ROUTE, "--target", "trust")
    assert code == ExitCode.USAGE
    assert "EMBEDGRAPH_MODEL" in err


def test_model_from_environment(toy_model, monkeypatch, capsys):
    monkeypatch.setenv("EMBEDGRAPH_MODEL", str(toy_model))
    code, out, _ = run(capsys, "nearest", "--target", "family", "--topn", "2")
    assert code == ExitCode.OK
    assert [line.split("\t")[0] for line in out.splitlines()] == ["family", "mother"]


def _embedded_classrooms(tmp_path, capsys, toy_model):
    paths = []
    for name in "abc":
        out = tmp_path / f"{name}.json"
        code, _, _ = run(capsys, "embed", "--graph", FIXTURES / f"classroom_{name}_tokens.json",
                         "--model", toy_model, "--kind", "vle", "--out", out)
        assert code == ExitCode.OK
        paths.append(out)
    return paths


def test_similarity_of_two_graphs(toy_model, tmp_path, capsys):
    a, b, _ = _embedded_classrooms(tmp_path, capsys, toy_model)
    code, out, _ = run(capsys, "similarity", a, b)
    assert code == ExitCode.OK
    value, report = out.splitlines()
    assert 0.0 < float(value) <= 1.0
    assert report == "matched=5 only_in_first=0 only_in_second=0"

    code, out, _ = run(capsys, "similarity", a, a)
    assert out.splitlines()[0] == "1.00"


def test_similarity_table(toy_model, tmp_path, capsys):
    paths = _embedded_classrooms(tmp_path, capsys, toy_model)
    code, out, _ = run(capsys, "similarity", *paths)
    assert code == ExitCode.OK
    rows = [line.split("\t") for line in out.splitlines()]
    assert [row[:2] for row in rows] == [["a", "b"], ["a", "c"], ["b", "c"]]


def test_similarity_without_correspondence(tmp_path, capsys):
    g1 = _write(tmp_path / "g1.json", write_graph_json(build_embedded_graph(["a", "b"], [(("a", "b"), [1.0])])))
    g2 = _write(tmp_path / "g2.json", write_graph_json(build_embedded_graph(["x", "y"], [(("x", "y"), [1.0])])))
    code, _, _ = run(capsys, "similarity", g1, g2)
    assert code == ExitCode.NO_CORRESPONDENCE == 4


def test_similarity_needs_two_graphs(capsys):
    code, out, err = run(capsys, "similarity", TRUST_ROUTE)
    assert code == ExitCode.USAGE
    assert out == ""
    assert "GRAPH" in err


# =========================
# convert / stats
# =========================

def test_convert_round_trip(tmp_path, capsys):
    edge_list, vle, back = tmp_path / "el.json", tmp_path / "vle.json", tmp_path / "back.json"
    run(capsys, "convert", "--graph", TRUST_ROUTE, "--out", edge_list)
    run(capsys, "convert", "--graph", edge_list, "--kind", "vle", "--out", vle)
    run(capsys, "convert", "--graph", vle, "--kind", "adjacency", "--out", back)
    run(capsys, "convert", "--graph", back, "--out", back)
    assert json.loads(vle.read_text())["layout"] == "vle"
    assert back.read_bytes() == edge_list.read_bytes()


def test_convert_refuses_huge_adjacency(tmp_path, capsys):
    doc = {
        "dim": 1,
        "vertices": [f"v{i}" for i in range(10_000)],
        "edges": [{"source": "v0", "target": "v1", "vector": [1.0]}],
    }
    graph = tmp_path / "huge.json"
    graph.write_text(json.dumps(doc))
    code, _, err = run(capsys, "convert", "--graph", graph, "--kind", "adjacency")
    assert code == ExitCode.IO_OR_SCHEMA
    assert "4096" in err


def test_stats(capsys):
    code, out, _ = run(capsys, "stats", "--graph", FIXTURES / "relations_tokens.json")
    assert code == ExitCode.OK
    assert out == "vertices\t14\nedges\t13\ndim\t-\n"

    code, out, _ = run(capsys, "stats", "--graph", TRUST_ROUTE)
    assert out == "vertices\t4\nedges\t4\ndim\t2\n"


def test_config_from_flags(tmp_path, monkeypatch):
    monkeypatch.setenv("EMBEDGRAPH_DENSE_CAP", "12")
    args = build_parser().parse_args(["stats", "--graph", "g.json", "--model", "vectors.bin", "-vv"])
    config = CliConfig.from_args(args)
    assert config.dense_cap == 12
    assert config.log_level == "DEBUG"
    assert config.resolved_model_format().value == "binary"


def test_usage_errors(capsys):
    assert run(capsys, "frobnicate")[0] == ExitCode.USAGE
    assert run(capsys, "convert", "--graph", TRUST_ROUTE, "--dense-cap", "0")[0] == ExitCode.USAGE
    assert run(capsys, "--version")[0] == ExitCode.OK
