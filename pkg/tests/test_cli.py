"""Command-line surface: payload shapes, formats, and exit codes."""

import json
import math
from fractions import Fraction

import pytest

from dla_lab.cli import main, render_json


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_cycle_json(capsys):
    code, out, err = run(capsys, "compute", "--graph", "cycle:6")
    assert code == 0
    assert err == ""
    payload = json.loads(out)
    assert payload["schema"] == "dla-lab/1"
    assert payload["dim"] == 17
    assert payload["degree"] == 10
    assert payload["center_dim"] == 2
    assert payload["ideal_dim"] == 15
    assert payload["yz_even_ok"] is True


def test_compute_complete_orbit_compressed(capsys):
    code, out, _ = run(
        capsys, "compute", "--graph", "complete:5", "--orbit-compress"
    )
    assert code == 0
    assert json.loads(out)["dim"] == 24


def test_compute_path_graph(capsys):
    code, out, _ = run(capsys, "compute", "--graph", "path:3")
    assert code == 0
    assert json.loads(out)["dim"] == 9


def test_compute_graph_from_file(capsys, tmp_path):
    spec = tmp_path / "triangle.graph"
    spec.write_text("3\n# a triangle\n0 1\n1 2\n0 2\n")
    code, out, _ = run(capsys, "compute", "--graph", f"file:{spec}")
    assert code == 0
    assert json.loads(out)["dim"] == 8


def test_orbit_compression_needs_named_family(capsys):
    code, _, err = run(
        capsys, "compute", "--graph", "path:4", "--orbit-compress"
    )
    assert code == 2
    assert "orbit" in err


def test_verify_cycle_passes(capsys):
    code, out, _ = run(capsys, "verify-cycle", "--n", "5")
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    names = {c["name"] for c in payload["checks"]}
    assert "dimension-3n-minus-1" in names
    assert all(c["status"] == "ok" for c in payload["checks"])


def test_verify_cycle_rejects_tiny_ring(capsys):
    code, _, err = run(capsys, "verify-cycle", "--n", "2")
    assert code == 2
    assert "n >= 3" in err


def test_verify_complete_passes_off_the_boundary(capsys):
    code, out, _ = run(capsys, "verify-complete", "--n", "4")
    assert code == 0
    assert json.loads(out)["ok"] is True


def test_verify_complete_reports_the_tight_boundary_case(capsys):
    """At three vertices the dimension meets the parity bound exactly,
    so the strict-inequality check honestly fails."""
    code, out, _ = run(capsys, "verify-complete", "--n", "3")
    assert code == 1
    payload = json.loads(out)
    assert payload["ok"] is False
    failures = [
        c["name"] for c in payload["checks"] if c["status"] == "fail"
    ]
    assert failures == ["dimension-below-parity-bound"]


def test_variance_cycle_four(capsys):
    code, out, _ = run(capsys, "variance", "--family", "cycle", "--n", "4")
    assert code == 0
    payload = json.loads(out)
    assert payload["expectation"] == 0.0
    assert payload["variance"] == pytest.approx(2.0 / 3.0, abs=1e-11)
    assert payload["per_component_purities"] == [
        [0.25, 4.0],
        [0.0, 4.0],
        [0.25, 4.0],
    ]


def test_variance_cycle_five(capsys):
    code, out, _ = run(capsys, "variance", "--family", "cycle", "--n", "5")
    assert code == 0
    payload = json.loads(out)
    assert payload["expectation"] == pytest.approx(
        1.0 / math.sqrt(5), abs=1e-11
    )
    assert payload["variance"] == pytest.approx(8.0 / 15.0, abs=1e-11)


def test_variance_rejects_other_families(capsys):
    code, _, err = run(capsys, "variance", "--family", "complete", "--n", "4")
    assert code == 2
    assert "cycle" in err


def test_bounds_complete_graph(capsys):
    code, out, _ = run(capsys, "bounds", "--graph", "complete:6")
    assert code == 0
    payload = json.loads(out)
    assert payload["binom_bound"] == 84
    assert payload["yz_bound"] == 42
    assert payload["dim_formula"] == 38


def test_sweep_csv_shape(capsys):
    code, out, _ = run(
        capsys,
        "sweep",
        "--family",
        "cycle",
        "--min",
        "3",
        "--max",
        "7",
        "--output",
        "csv",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == (
        "n,dim,degree,center_dim,ideal_dim,aut_bound,yz_even_ok,runtime_ms"
    )
    assert len(lines) == 1 + 5
    dims = [int(line.split(",")[1]) for line in lines[1:]]
    assert dims == [3 * n - 1 for n in range(3, 8)]


def test_csv_is_sweep_only(capsys):
    code, _, err = run(
        capsys, "compute", "--graph", "cycle:4", "--output", "csv"
    )
    assert code == 2
    assert "csv" in err


def test_memory_budget_exit_code(capsys):
    code, _, err = run(
        capsys, "compute", "--graph", "cycle:8", "--memory-budget", "10"
    )
    assert code == 3
    assert "budget" in err


def test_bad_graph_spec(capsys):
    code, _, err = run(capsys, "compute", "--graph", "blob:9")
    assert code == 2
    assert "graph" in err.lower()


def test_unknown_command_is_a_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_json_rendering_is_stable_and_rational_aware(capsys):
    assert render_json({"x": Fraction(3, 4)}) == '{\n  "x": "3/4"\n}'
    code, out, _ = run(capsys, "variance", "--family", "cycle", "--n", "6")
    assert code == 0
    assert render_json(json.loads(out)) == out.rstrip("\n")
