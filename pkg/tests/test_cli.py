"""The command-line interface: JSON payloads in, deterministic reports out,
and the documented exit-code contract (0 pass, 1 fail, 2 parse, 3 resource)."""

import json

import pytest

from noether.cli import main


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io
        import sys
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


def write_payload(tmp_path, payload) -> str:
    path = tmp_path / "job.json"
    path.write_text(json.dumps(payload))
    return str(path)


def test_groebner_golden(tmp_path, capsys):
    path = write_payload(tmp_path, {
        "ring": {"field": "q", "vars": ["x", "y"]},
        "generators": ["x^2 - 1", "x*y - 1"]})
    code, doc = run(capsys, "groebner", path)
    assert code == 0
    assert doc["status"] == "pass"
    assert doc["result"]["basis"] == ["y^2 - 1", "x - y"]
    assert doc["config"]["ring"] == "Q[x,y]"


def test_ideal_membership_true_false(tmp_path, capsys):
    base = {"op": "membership", "ring": {"field": "q", "vars": ["x"]},
            "ideal": ["x^2"]}
    code, doc = run(capsys, "ideal",
                    write_payload(tmp_path, dict(base, element="x^3")))
    assert (code, doc["result"]["value"]) == (0, True)
    code, doc = run(capsys, "ideal",
                    write_payload(tmp_path, dict(base, element="x")))
    assert (code, doc["status"]) == (1, "fail")


def test_ideal_saturate(tmp_path, capsys):
    code, doc = run(capsys, "ideal", write_payload(tmp_path, {
        "op": "saturate", "ring": {"field": "q", "vars": ["x", "y"]},
        "ideal": ["x^2*y"], "f": "x"}))
    assert code == 0
    assert doc["result"]["generators"] == ["y"]


def test_ideal_enumerate_finite(tmp_path, capsys):
    code, doc = run(capsys, "ideal", write_payload(tmp_path, {
        "op": "enumerate-ideals", "finite_ring": {"zmod": 6}}))
    assert code == 0
    assert doc["result"]["count"] == 4


def test_open_contains(tmp_path, capsys):
    code, doc = run(capsys, "open", write_payload(tmp_path, {
        "op": "contains", "ring": {"field": "q", "vars": ["x"]},
        "a": "x", "b": "x^2"}))
    assert (code, doc["result"]["value"]) == (0, True)


def test_open_cover_check(tmp_path, capsys):
    code, doc = run(capsys, "open", write_payload(tmp_path, {
        "op": "cover-check", "ring": {"field": "q", "vars": ["x"]},
        "target": "1", "pieces": ["x", "x - 1"]}))
    assert code == 0


def test_digraph_validate_and_witness(tmp_path, capsys):
    payload = {"op": "validate", "digraph": {
        "ring": {"field": "q", "vars": ["x"]},
        "nodes": [{"open": "1", "gens": ["x"]},
                  {"open": "x", "gens": ["1"]}],
        "edges": [[0, 1]], "root": 0}}
    code, doc = run(capsys, "digraph-validate", write_payload(tmp_path, payload))
    assert code == 1
    assert doc["result"]["increasing_on_ideals"] is False
    assert doc["witness"] == {"increasing": [[0, 1]]}


def test_digraph_validate_accepts_generators_alias(tmp_path, capsys):
    payload = {"op": "validate", "digraph": {
        "ring": {"field": "q", "vars": ["x"]},
        "nodes": [{"open": "1", "generators": []},
                  {"open": "x", "generators": ["1"]}],
        "edges": [[0, 1]], "root": 0}}
    code, doc = run(capsys, "digraph-validate", write_payload(tmp_path, payload))
    assert (code, doc["status"]) == (0, "pass")


def test_digraph_eval(tmp_path, capsys):
    payload = {"op": "evaluate", "open": "x", "digraph": {
        "ring": {"field": "q", "vars": ["x"]},
        "nodes": [{"open": "1", "gens": []},
                  {"open": "x", "gens": ["1"]}],
        "edges": [[0, 1]], "root": 0}}
    code, doc = run(capsys, "digraph-eval", write_payload(tmp_path, payload))
    assert code == 0
    assert doc["result"]["generators"] == ["1"]


def test_digraph_extract(tmp_path, capsys):
    payload = {"oracle": {"kind": "quasi-coherent",
                          "ring": {"field": "q", "vars": ["x"]},
                          "ideal": ["x - 1"]},
               "basis": ["x", "x - 1", "x^2 - x"]}
    code, doc = run(capsys, "digraph-extract", write_payload(tmp_path, payload))
    assert code == 0
    assert doc["result"]["nodes"] == [{"gens": ["x - 1"], "open": "1"}]
    assert doc["result"]["edges"] == []


def test_zz_extract(tmp_path, capsys):
    payload = {"op": "zz-extract",
               "space": {"points": [0, 1], "below": [[0, 1]]},
               "assignment": [{"open": [0], "n": 2},
                              {"open": [0, 1], "n": 4}]}
    code, doc = run(capsys, "digraph-validate", write_payload(tmp_path, payload))
    assert code == 0
    assert doc["result"]["regenerates"] is True
    assert doc["result"]["nodes"] == [{"n": 4, "open": [0, 1]},
                                      {"n": 2, "open": [0]}]


def test_cech_projective_flags(capsys):
    code, doc = run(capsys, "cech-projective", "--n", "1", "--d", "-3")
    assert code == 0
    assert doc["result"] == {"H0": 0, "H1": 2}


def test_cech_affine_vanishing(tmp_path, capsys):
    payload = {"op": "vanishing", "ring": {"field": "q", "vars": ["x"]},
               "ideal": ["x - 1"],
               "cover": {"target": "1", "pieces": ["x", "x - 1"]}}
    code, doc = run(capsys, "cech-affine", write_payload(tmp_path, payload))
    assert (code, doc["status"]) == (0, "pass")


def test_baer_test(tmp_path, capsys):
    payload = {"op": "test", "finite_ring": {"zmod": 4},
               "module": {"kind": "ring"}}
    code, doc = run(capsys, "baer", write_payload(tmp_path, payload))
    assert code == 0
    assert doc["result"]["injective"] is True


def test_baer_chain(tmp_path, capsys):
    payload = {"op": "chain", "finite_ring": {"zmod": 4},
               "module": {"kind": "zero"}, "K": 2}
    code, doc = run(capsys, "baer", write_payload(tmp_path, payload))
    assert code == 0
    assert doc["result"]["stage_sizes"] == [1, 8, 512]


def test_etale_suite_power(capsys):
    code, doc = run(capsys, "etale", "--depth", "3", "--field", "q",
                    "--exponent-rule", "power")
    assert (code, doc["status"]) == (0, "pass")


def test_etale_suite_literal_fails(capsys):
    code, doc = run(capsys, "etale", "--depth", "3", "--field", "fp:5",
                    "--exponent-rule", "literal")
    assert (code, doc["status"]) == (1, "fail")
    assert doc["result"]["failing_level"] == 3


def test_parse_error_exit_code(capsys, monkeypatch):
    code, doc = run(capsys, "ideal", "-", stdin="not json",
                    monkeypatch=monkeypatch)
    assert code == 2
    assert doc["status"] == "error"


def test_unknown_op_exit_code(capsys, monkeypatch):
    code, doc = run(capsys, "ideal", "-", stdin='{"op": "nonsense"}',
                    monkeypatch=monkeypatch)
    assert code == 2


def test_budget_exit_code(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("NOETHER_BUDGET_MAX_DEGREE", "2")
    path = write_payload(tmp_path, {
        "ring": {"field": "q", "vars": ["x"]}, "generators": ["x^5"]})
    code, doc = run(capsys, "groebner", path)
    assert code == 3
    assert doc["config"]["error_type"] == "ResourceBudgetError"


def test_text_rendering(tmp_path, capsys):
    path = write_payload(tmp_path, {
        "op": "membership", "ring": {"field": "q", "vars": ["x"]},
        "ideal": ["x^2"], "element": "x^3"})
    code = main(["ideal", path, "--text"])
    out = capsys.readouterr().out
    assert code == 0
    assert "ideal: PASS" in out


def test_json_output_is_deterministic_modulo_timing(tmp_path, capsys):
    path = write_payload(tmp_path, {
        "ring": {"field": "q", "vars": ["x", "y"]},
        "generators": ["x^2 - 1", "x*y - 1"]})
    docs = []
    for _ in range(2):
        _, doc = run(capsys, "groebner", path)
        doc.pop("timings")
        docs.append(doc)
    assert docs[0] == docs[1]
