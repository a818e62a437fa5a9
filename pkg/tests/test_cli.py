import io
import json

import pytest

from cyclesplit.cli import ParseError, parse_poly, run
from cyclesplit.examples import example1_matrix_ring, example1_witness
from cyclesplit.ncpoly import from_int_coeffs
from cyclesplit.rings import parse_ring_spec


def invoke(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def test_parse_poly_basic():
    ring = parse_ring_spec("Mat:3:Z")
    f = parse_poly("X^3 - 4", ring)
    assert f == from_int_coeffs(ring, [-4, 0, 0, 1])
    assert parse_poly("X^0", ring) == from_int_coeffs(ring, [1])
    assert parse_poly("2*X^2 - X + 1", ring) == from_int_coeffs(ring, [1, -1, 2])
    assert parse_poly("-X", ring) == from_int_coeffs(ring, [0, -1])


def test_parse_poly_rational_coefficients():
    q = parse_ring_spec("Mat:2:Q")
    f = parse_poly("1/2*X + 1", q)
    assert f.coeffs[1] == q.from_base_scalar(__import__("fractions").Fraction(1, 2))
    with pytest.raises(ParseError):
        parse_poly("1/2*X", parse_ring_spec("Mat:2:Z"))


def test_parse_poly_rejects_products():
    ring = parse_ring_spec("Z")
    with pytest.raises(ParseError) as err:
        parse_poly("X^2*(X-1)", ring)
    assert "col" in str(err.value)
    for bad in ("", "X +", "* X", "X^", "2**X"):
        with pytest.raises(ParseError):
            parse_poly(bad, ring)


def test_cli_example_suites_pass():
    code, text = invoke("example1", "--ring", "UT:2:Z")
    assert code == 0
    assert "[FAIL]" not in text
    code, text = invoke("example2")
    assert code == 0
    assert "[FAIL]" not in text


def test_cli_example1_with_endo_battery():
    code, text = invoke("example1", "--p", "2")
    assert code == 0
    assert "translation properties" in text


def test_cli_verify_perturbed_witness_fails(tmp_path):
    ring = example1_matrix_ring(parse_ring_spec("Z"))
    w = example1_witness(ring)
    blob = w.to_json()
    # perturb the last pseudoroot
    blob["pseudoroots"][2] = [[1, 2], [0, 0]]
    path = tmp_path / "w.json"
    path.write_text(json.dumps(blob))
    code, text = invoke("verify", "--witness", f"@{path}", "--format", "json")
    assert code == 1

    path2 = tmp_path / "good.json"
    path2.write_text(json.dumps(w.to_json()))
    code, text = invoke("verify", "--witness", f"@{path2}", "--format", "json")
    assert code == 0
    payload = json.loads(text)
    assert payload["passed"] is True


def test_cli_parse_errors_exit_2():
    code, _ = invoke("roots", "--ring", "Nope", "--poly", "X")
    assert code == 2
    code, _ = invoke("roots", "--ring", "Zmod:6", "--poly", "X^2*(X-1)")
    assert code == 2
    code, _ = invoke("verify", "--witness", "@/no/such/file.json")
    assert code == 2


def test_cli_deterministic_output():
    first = invoke("search", "--ring", "Zmod:4", "--poly", "X^2", "--seed", "1")
    second = invoke("search", "--ring", "Zmod:4", "--poly", "X^2", "--seed", "1")
    assert first == second
    code, text = first
    assert code == 0
    lines = [json.loads(line) for line in text.splitlines()]
    assert "summary" in lines[-1]


def test_cli_roots_and_eval_and_divide():
    code, text = invoke("roots", "--ring", "Zmod:6", "--poly", "X^2 - X", "--format", "json")
    assert code == 0
    assert json.loads(text)["count"] == 4

    code, text = invoke(
        "eval", "--ring", "Zmod:7", "--poly", "X^2 + 1", "--element", "3",
        "--mode", "commuting", "--format", "json",
    )
    assert code == 0
    assert json.loads(text)["value"] == 3

    code, text = invoke(
        "divide", "--ring", "Mat:2:Z", "--poly", "X^2",
        "--element", "[[1,0],[0,1]]", "--format", "json",
    )
    assert code == 0
    payload = json.loads(text)
    assert payload["remainder"] == [[1, 0], [0, 1]]
    assert payload["quotient"]["coeffs"] == [[[1, 0], [0, 1]], [[1, 0], [0, 1]]]


def test_cli_expand_rotate_round_trip(tmp_path):
    ring = example1_matrix_ring(parse_ring_spec("Z"))
    w = example1_witness(ring)
    path = tmp_path / "w.json"
    path.write_text(json.dumps(w.to_json()))
    code, text = invoke("expand", "--witness", f"@{path}", "--format", "json")
    assert code == 0
    expanded = json.loads(text)
    assert expanded["coeffs"][-1] == [[1, 0], [0, 1]]

    code, text = invoke("rotate", "--witness", f"@{path}", "--k", "1", "--format", "json")
    assert code == 0
    rotated = json.loads(text)
    assert rotated["pseudoroots"][0] == w.to_json()["pseudoroots"][2]


def test_cli_search_task_file(tmp_path):
    from cyclesplit.search import SearchTask, task_from_json

    ring = parse_ring_spec("Zmod:4")
    task = SearchTask(ring, from_int_coeffs(ring, [0, 0, 1]), 2, "all_splittings")
    assert task_from_json(task.to_json()) == task
    path = tmp_path / "task.json"
    path.write_text(json.dumps(task.to_json()))
    code, text = invoke("search", "--task", f"@{path}")
    assert code == 0
    assert json.loads(text.splitlines()[-1])["summary"]["witness_count"] == 2
    code, _ = invoke("search", "--poly", "X^2")
    assert code == 1  # needs --task or --ring/--poly


def test_cli_centralizer():
    code, text = invoke(
        "centralizer", "--ring", "Zmod:6", "--elements", "[1, 5]", "--format", "json"
    )
    assert code == 0
    payload = json.loads(text)
    assert payload["count"] == 6  # commutative ring: everything commutes


def test_cli_endos_json():
    code, text = invoke("endos", "--p", "2", "--format", "json")
    assert code == 0
    payload = json.loads(text)
    assert payload["passed"] is True
    assert payload["monoid"]["endo_count"] == 8
    assert payload["composition_order_evidence"]["left_operand_first"] == 64


def test_cli_export_formats(tmp_path):
    code, text = invoke("export", "--p", "2", "--table", "minpoly", "--format", "csv")
    assert code == 0
    assert text.splitlines()[0] == "root,element,minpoly"

    code, text = invoke("export", "--p", "2", "--table", "monoid", "--format", "json")
    assert code == 0
    payload = json.loads(text)
    assert len(payload["rows"]) == 8

    out_file = tmp_path / "table.txt"
    code, _ = invoke(
        "export", "--p", "3", "--table", "images", "--out", str(out_file)
    )
    assert code == 0
    assert out_file.read_text().splitlines()[0].startswith("endo")

    code, text = invoke("export", "--table", "descriptor", "--base", "Zmod:5")
    assert code == 0
    payload = json.loads(text)
    assert payload["basis_size"] == 3 and payload["base"] == "Zmod:5"


def test_cli_export_descriptor_round_trips_as_ring(tmp_path):
    code, text = invoke("export", "--table", "descriptor", "--base", "Zmod:3")
    path = tmp_path / "alg.json"
    path.write_text(text)
    ring = parse_ring_spec(f"Table:{path}")
    assert ring.cardinality == 27
    # and the search CLI accepts it
    code, text = invoke(
        "search", "--ring", f"Table:{path}", "--poly", "X^3 - X^2",
        "--mode", "commuting_splittings_only",
    )
    assert code == 0
    summary = json.loads(text.splitlines()[-1])["summary"]
    assert summary["cycle_class_count"] == 15
