"""End-to-end CLI behaviour: output shapes, exit codes, and determinism."""

from __future__ import annotations

import json
import re
import subprocess
import sys

import pytest

from braceforge import __version__
from braceforge.census import census_lookup
from braceforge.cli import main
from braceforge.constructions import example_q8
from braceforge.groups import make_cyclic
from braceforge.jsonio import (brace_to_obj, canonical_dumps, group_to_obj, parse)
from braceforge.report import hg_descriptor


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_version(capsys):
    code, out, _ = run(capsys, "--version")
    assert code == 0
    assert out.strip() == f"braceforge {__version__}"


def test_no_command_is_usage_error(capsys):
    assert main([]) == 2
    assert main(["group"]) == 2
    assert main(["frobnicate"]) == 2
    capsys.readouterr()


def test_group_list(capsys):
    code, out, _ = run(capsys, "group", "list")
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 28
    assert lines[0] == "C1  (order 1)"
    assert lines[-1] == "C15  (order 15)"


def test_group_list_json(capsys):
    code, out, _ = run(capsys, "group", "list", "--json")
    data = json.loads(out)
    assert code == 0
    assert len(data) == 28
    assert {"label": "Q8", "order": 8} in data


def test_group_show_label(capsys):
    code, out, _ = run(capsys, "group", "show", "Q8")
    assert code == 0
    assert "label: Q8" in out
    assert "order: 8" in out
    assert "abelian: False" in out
    assert "subgroups: 6" in out


def test_group_show_json_round_trip(capsys):
    code, out, _ = run(capsys, "group", "show", "D8", "--json")
    assert code == 0
    assert json.loads(out)["label"] == "D8"


def test_group_show_file(capsys, tmp_path):
    path = tmp_path / "c16.json"
    path.write_text(canonical_dumps(group_to_obj(make_cyclic(16))))
    code, out, _ = run(capsys, "group", "show", str(path))
    assert code == 0
    assert "order: 16" in out
    assert "label: C16" in out


def test_group_show_unknown_label_lists_census(capsys):
    code, _, err = run(capsys, "group", "show", "NOPE")
    assert code == 2
    assert err.startswith("error: ")
    assert "available" in err and "Q8" in err


def test_group_show_rejects_bad_file(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, _, err = run(capsys, "group", "show", str(path))
    assert code == 2 and "not valid JSON" in err

    path.write_text(canonical_dumps({"order": 2, "label": "x"}))
    code, _, err = run(capsys, "group", "show", str(path))
    assert code == 2 and "missing keys" in err


def test_brace_enumerate_human(capsys):
    code, out, _ = run(capsys, "brace", "enumerate", "C2xC2", "--up-to-iso", "--no-cache")
    assert code == 0
    assert "additive: C2xC2 (order 4)" in out
    assert "operations: 4" in out
    assert "iso classes: 2" in out
    assert "by circ type: C2xC2 x1, C4 x3" in out


def test_brace_enumerate_json_deterministic_and_cached(capsys, tmp_path):
    args = ("brace", "enumerate", "S3", "--json", "--cache-dir", str(tmp_path))
    code1, out1, _ = run(capsys, *args)
    assert code1 == 0
    assert list(tmp_path.glob("*.json"))
    code2, out2, _ = run(capsys, *args)
    assert (code2, out2) == (0, out1)
    assert json.loads(out1)["additive"]["label"] == "S3"


def test_brace_enumerate_over_cap(capsys, tmp_path):
    path = tmp_path / "c16.json"
    path.write_text(canonical_dumps(group_to_obj(make_cyclic(16))))
    code, _, err = run(capsys, "brace", "enumerate", str(path), "--no-cache")
    assert code == 2
    assert "capped at order 15" in err


def test_brace_check_valid(capsys, tmp_path):
    path = tmp_path / "b.json"
    path.write_text(canonical_dumps(brace_to_obj(example_q8())))
    code, out, _ = run(capsys, "brace", "check", str(path))
    assert code == 0
    assert out.strip() == "ok: order 8, dot type Q8, circ type D8"
    code, out, _ = run(capsys, "brace", "check", str(path), "--json")
    assert code == 0
    assert json.loads(out) == {"valid": True, "order": 8,
                               "dot_type": "Q8", "circ_type": "D8"}


def test_brace_check_reports_violating_triple(capsys, tmp_path):
    # no brace pairs a prime-order group with a relabeled copy of itself
    from braceforge.groups import transport
    c5 = make_cyclic(5)
    obj = {"order": 5, "label": "broken",
           "dot": [list(r) for r in c5.table],
           "circ": [list(r) for r in transport(c5, (0, 2, 1, 3, 4)).table]}
    path = tmp_path / "broken.json"
    path.write_text(canonical_dumps(obj))

    code, _, err = run(capsys, "brace", "check", str(path))
    assert code == 2
    assert "compatibility fails at (a, b, c)" in err

    code, out, _ = run(capsys, "brace", "check", str(path), "--json")
    data = json.loads(out)
    assert code == 2
    assert data["valid"] is False
    assert isinstance(data["triple"], list) and len(data["triple"]) == 3


def test_brace_check_schema_error(capsys, tmp_path):
    path = tmp_path / "b.json"
    path.write_text(canonical_dumps({"order": 2}))
    code, out, _ = run(capsys, "brace", "check", str(path), "--json")
    assert code == 2
    data = json.loads(out)
    assert data["valid"] is False and data["triple"] is None


def test_classify_good_group(capsys):
    code, out, _ = run(capsys, "classify", "C15", "--no-cache")
    assert code == 0
    assert "verdict: good" in out
    assert "braces examined: 1" in out


def test_classify_bad_group_with_witness(capsys):
    code, out, _ = run(capsys, "classify", "Q8", "--no-cache", "--exhaustive")
    assert code == 0
    assert "verdict: bad" in out
    assert "braces examined: 28" in out
    assert "witness circ type: C2xC2xC2" in out
    assert "witness subgroup: {0, 1}" in out
    assert "failing pair: (1, 1) (dot-closure)" in out


def test_classify_json(capsys, tmp_path):
    code, out, _ = run(capsys, "classify", "C9", "--json", "--cache-dir", str(tmp_path))
    data = json.loads(out)
    assert code == 0
    assert data["good"] is True and data["braces_examined"] == 3


def test_classify_unknown_label(capsys):
    code, _, err = run(capsys, "classify", "NOPE", "--no-cache")
    assert code == 2
    assert "available" in err


def test_verify_theorem_human(capsys):
    code, out, _ = run(capsys, "verify", "theorem", "--max-order", "8", "--no-cache")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "C1 (order 1): predicted good, computed good"
    assert "Q8 (order 8): predicted bad, computed bad" in lines
    assert lines[-1] == "all match: True"
    assert not any("MISMATCH" in l for l in lines)


def test_verify_theorem_json(capsys):
    code, out, _ = run(capsys, "verify", "theorem", "--max-order", "10",
                       "--json", "--no-cache")
    data = json.loads(out)
    assert code == 0
    assert data["all_match"] is True
    assert data["good_labels"] == ["C1", "C2", "C3", "C2xC2", "C5", "C7", "C9"]


def test_verify_theorem_mismatch_exits_1(capsys, monkeypatch):
    monkeypatch.setattr("braceforge.classify.theorem_predicate", lambda g: False)
    code, out, _ = run(capsys, "verify", "theorem", "--max-order", "4", "--no-cache")
    assert code == 1
    assert "MISMATCH" in out
    assert "all match: False" in out


def test_verify_theorem_usage_errors(capsys):
    code, _, err = run(capsys, "verify", "theorem", "--max-order", "16", "--no-cache")
    assert code == 2 and "capped" in err
    code, _, err = run(capsys, "verify", "theorem", "--workers", "0", "--no-cache")
    assert code == 2 and "--workers" in err


def test_verify_theorem_worker_output_identical(capsys):
    base = ("verify", "theorem", "--max-order", "10", "--json", "--no-cache")
    _, out1, _ = run(capsys, *base, "--workers", "1")
    _, out2, _ = run(capsys, *base, "--workers", "2")
    assert out1 == out2


def test_example_human_output(capsys):
    code, out, _ = run(capsys, "example", "q8")
    assert code == 0
    assert "construction: q8" in out
    assert "dot type: Q8" in out
    assert "circ type: D8" in out
    assert "gamma[1] = (0, 1, 2, 3, 6, 7, 4, 5)" in out
    assert re.search(r"witness: subgroup \{[0-9, ]+\} fails "
                     r"(dot-closure|gamma) at \(\d+, \d+\)", out)
    head, _, tail = out.partition("\n\n")
    assert json.loads(tail)["order"] == 8


def test_example_good_case_has_no_witness(capsys):
    code, out, _ = run(capsys, "example", "order4")
    assert code == 0
    assert "witness: none, every circ-subgroup is a left ideal" in out


def test_example_defaults(capsys):
    assert json.loads(run(capsys, "example", "cn-even", "--json")[1])["order"] == 4
    assert json.loads(run(capsys, "example", "pq", "--json")[1])["order"] == 6
    assert json.loads(run(capsys, "example", "p-odd", "--json")[1])["order"] == 9


def test_example_parameters(capsys):
    code, out, _ = run(capsys, "example", "pq", "--p", "7", "--q", "3", "--json")
    assert code == 0 and json.loads(out)["order"] == 21
    code, out, _ = run(capsys, "example", "cn-even", "--n", "10", "--json")
    assert code == 0 and json.loads(out)["order"] == 10


def test_example_rejects_bad_parameters(capsys):
    code, _, err = run(capsys, "example", "cn-even", "--n", "7")
    assert code == 2 and "even" in err
    code, _, err = run(capsys, "example", "pq", "--p", "5", "--q", "3")
    assert code == 2 and "divide" in err
    code, _, err = run(capsys, "example", "nonsense")
    assert code == 2


def test_hg_report_sugar_and_dot(capsys, tmp_path):
    dot_path = tmp_path / "lattice.dot"
    code, out, _ = run(capsys, "hg", "report", "trivial:C2", "--dot", str(dot_path))
    assert code == 0
    assert "type: C2" in out
    assert "galois group: C2" in out
    assert "bijective correspondence: True" in out
    assert "classical: True" in out
    assert dot_path.read_text() == (
        "digraph hg_lattice {\n"
        "  rankdir=BT;\n"
        '  n0 [label="{0}" style=solid];\n'
        '  n1 [label="{0,1}" style=solid];\n'
        "  n0 -> n1;\n"
        "}\n"
    )


def test_hg_report_almost_trivial(capsys):
    code, out, _ = run(capsys, "hg", "report", "almost-trivial:S3")
    assert code == 0
    assert "bijective correspondence: False" in out
    assert out.count("not a left ideal") == 3


def test_hg_report_file_json(capsys, tmp_path):
    b = example_q8()
    path = tmp_path / "q8.json"
    path.write_text(canonical_dumps(brace_to_obj(b)))
    code, out, _ = run(capsys, "hg", "report", str(path), "--json")
    assert code == 0
    bundle = parse(out.encode("utf-8"))
    assert bundle.descriptor == hg_descriptor(b)
    assert bundle.timing_ms is None


def test_hg_report_unknown_sugar_label(capsys):
    code, _, err = run(capsys, "hg", "report", "trivial:NOPE")
    assert code == 2 and "available" in err


def test_module_entry_point_runs():
    proc = subprocess.run([sys.executable, "-m", "braceforge", "group", "list"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "C1  (order 1)"


def test_cli_subprocess_deterministic_across_worker_counts(tmp_path):
    base = [sys.executable, "-m", "braceforge", "verify", "theorem",
            "--max-order", "12", "--json", "--no-cache"]
    one = subprocess.run(base + ["--workers", "1"], capture_output=True, check=True)
    two = subprocess.run(base + ["--workers", "2"], capture_output=True, check=True)
    assert one.stdout == two.stdout
