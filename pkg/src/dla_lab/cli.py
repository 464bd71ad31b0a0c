"""Command-line front end for the DLA computations.

Commands
--------
compute
    Run the Lie-closure on one graph and report dimension, degree,
    center/ideal dimensions, the automorphism orbit bound, and the
    parity sanity flag.
verify-cycle / verify-complete
    Run the full closed-form verification suite for the cycle or
    complete family at one size; one line per check.
variance
    Loss-function expectation, variance, and per-component purities
    (cycle family only — no other family here has a proven component
    decomposition).
bounds
    Dimension bounds from graph symmetry without running the closure.
sweep
    compute over a range of sizes for one family, optionally as CSV.

Output is JSON by default (schema field ``dla-lab/1``), with floats
pre-rounded to 12 significant digits and exact rationals rendered as
``"p/q"`` strings so that reports are byte-stable: re-parsing a report
and re-emitting it reproduces the exact bytes.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from .closure import (
    DEFAULT_MEMORY_BUDGET,
    DlaReport,
    ResourceBudgetError,
    center_dimension,
    generate_dla,
    generate_dla_orbit_compressed,
    ideal_dimension,
    span_ledger,
)
from .complete_forms import (
    DECOMPOSITION_CONJECTURE,
    fact_suite,
    kn_basis,
    kn_ideal_basis,
)
from .cycle_forms import (
    ab_power_coeffs,
    ab_power_trig_coeffs,
    ab_recursion_identity_ok,
    ab_recursion_identity_residual,
    alternating_eigen_residual,
    canonical_relation_residuals,
    cycle_basis,
    cycle_center,
    orbit_bracket,
    su2_relation_residuals,
)
from .graphs import dimension_bounds, kn_formulas, maxcut_generators, parse_graph_spec
from .paulis import commutator, pauli_type
from .spectral import RECOMPUTE_VERTEX_CAP, cycle_spectral_report

SCHEMA_VERSION = "dla-lab/1"
DEFAULT_TOLERANCE = 1e-9
DEFAULT_SEED = 20240901

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

#: largest n at which verify-cycle expands orbits to raw Pauli strings
#: for the bracket-table and span cross-checks (cost ~ (3n)^2 * 2n)
EXPANSION_CHECK_CAP = 8


class UsageError(ValueError):
    """Bad command input detected after argument parsing."""


@dataclass(frozen=True)
class RunConfig:
    """Validated per-invocation settings shared by all commands."""

    command: str
    graph: str | None = None
    family: str | None = None
    n: int | None = None
    n_min: int | None = None
    n_max: int | None = None
    orbit_compress: bool = False
    memory_budget: int = DEFAULT_MEMORY_BUDGET
    tolerance: float = DEFAULT_TOLERANCE
    output: str = "json"
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        if self.tolerance <= 0:
            raise UsageError("tolerance must be positive")
        if self.memory_budget <= 0:
            raise UsageError("memory budget must be positive")
        if self.output not in ("json", "csv", "text"):
            raise UsageError(f"unknown output format {self.output!r}")


# ---------------------------------------------------------------------------
# report formatting


def _jsonable(value):
    """Normalize a report value for byte-stable JSON emission."""
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        return float(f"{value:.12g}")
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    raise TypeError(f"cannot serialize {type(value).__name__} in a report")


def render_json(payload: dict) -> str:
    """Serialize a report; stable key order, 12-significant-digit floats."""
    return json.dumps(_jsonable(payload), indent=2)


def _render_text(payload: dict) -> str:
    lines = []
    for key, value in _jsonable(payload).items():
        if key == "checks":
            for chk in value:
                res = chk.get("residual")
                res_s = "-" if res is None else f"{res:.3e}" if isinstance(res, float) else str(res)
                lines.append(f"  {chk['name']:<34} {chk['status']:<4} residual={res_s}")
        elif key == "rows":
            for row in value:
                lines.append("  " + "  ".join(f"{k}={v}" for k, v in row.items()))
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines)


def _render_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(_jsonable(row))
    return buf.getvalue().rstrip("\n")


def _emit(payload: dict, config: RunConfig) -> None:
    if config.output == "json":
        print(render_json(payload))
    elif config.output == "text":
        print(_render_text(payload))
    elif config.output == "csv":
        if "rows" not in payload:
            raise UsageError("csv output is only available for sweep")
        print(_render_csv(payload["rows"]))


# ---------------------------------------------------------------------------
# shared computation pieces


def _all_x_mask(n: int) -> int:
    return (1 << n) - 1


def _basis_parity_ok(report: DlaReport) -> bool:
    """Every basis element YZ-even, with identity and all-X excluded.

    Works in whichever coordinate system the closure ran in; both checks
    are invariant under qubit permutations, so testing orbit
    representatives is equivalent to testing every string.
    """
    if report.coords == "complete-orbit":
        n = report.n
        for vec in report.basis:
            for (p, q, r) in vec:
                if (q + r) % 2 != 0:
                    return False
                if (p, q, r) in ((0, 0, 0), (n, 0, 0)):
                    return False
        return True
    full = _all_x_mask(report.n)
    if report.coords == "pauli":
        strings = (p for vec in report.basis for p in vec.support())
    else:
        strings = (p for vec in report.basis for p in vec.keys())
    for p in strings:
        if not pauli_type(p).yz_even:
            return False
        if p.is_identity() or (p.x_mask == full and p.z_mask == 0):
            return False
    return True


def _compute_row(graph, config: RunConfig) -> dict:
    start = time.perf_counter()
    if config.orbit_compress:
        if graph.family not in ("cycle", "complete"):
            raise UsageError(
                "orbit compression needs a cycle:N or complete:N graph"
            )
        report = generate_dla_orbit_compressed(
            graph.family, graph.n, config.memory_budget
        )
    else:
        report = generate_dla(maxcut_generators(graph), config.memory_budget)
    cdim = center_dimension(report)
    idim = ideal_dimension(report)
    runtime_ms = int(round((time.perf_counter() - start) * 1000))
    bounds = dimension_bounds(graph)
    return {
        "n": graph.n,
        "dim": report.dimension,
        "degree": report.degree,
        "center_dim": cdim,
        "ideal_dim": idim,
        "aut_bound": bounds["aut_bound"],
        "yz_even_ok": _basis_parity_ok(report),
        "runtime_ms": runtime_ms,
    }


class _CheckList:
    """Accumulates named pass/fail/skip checks for the verify commands."""

    def __init__(self):
        self.checks: list[dict] = []

    def add(self, name: str, ok: bool, residual: float | None) -> None:
        self.checks.append(
            {
                "name": name,
                "status": "ok" if ok else "fail",
                "residual": residual,
            }
        )

    def skip(self, name: str) -> None:
        self.checks.append({"name": name, "status": "skip", "residual": None})

    @property
    def all_ok(self) -> bool:
        return all(c["status"] != "fail" for c in self.checks)


# ---------------------------------------------------------------------------
# commands


def cmd_compute(config: RunConfig) -> int:
    graph = parse_graph_spec(config.graph)
    row = _compute_row(graph, config)
    payload = {"schema": SCHEMA_VERSION, "command": "compute", "graph": config.graph}
    payload.update(row)
    _emit(payload, config)
    return EXIT_OK


def cmd_verify_cycle(config: RunConfig) -> int:
    n = config.n
    if n is None or n < 3:
        raise UsageError("n >= 3 required for the cycle family")
    tol = config.tolerance
    checks = _CheckList()

    report = generate_dla_orbit_compressed("cycle", n, config.memory_budget)
    checks.add(
        "dimension-3n-minus-1",
        report.dimension == 3 * n - 1,
        float(abs(report.dimension - (3 * n - 1))),
    )
    cdim = center_dimension(report)
    checks.add("center-dimension-2", cdim == 2, float(abs(cdim - 2)))

    basis = cycle_basis(n)
    c1, c2 = cycle_center(n)
    center_res = max(
        orbit_bracket(c, b).max_abs() for c in (c1, c2) for b in basis
    )
    checks.add("center-commutes", center_res == 0, float(center_res))

    # the explicit orbit basis spans the same space as the closure: the
    # dimensions agree (first check) and every closure representative
    # string belongs to one of the explicit basis orbits
    vocabulary = set()
    for b in basis:
        vocabulary.update(b.expand().support())
    stray = sum(
        1
        for vec in report.basis
        for rep in vec.keys()
        if rep not in vocabulary
    )
    checks.add("closure-span-in-orbit-basis", stray == 0, float(stray))

    if n <= EXPANSION_CHECK_CAP:
        worst = 0
        for a in basis:
            ea = a.expand()
            for b in basis:
                diff = orbit_bracket(a, b).expand() - commutator(ea, b.expand())
                worst = max(worst, max((abs(c) for _, c in diff.terms()), default=0))
        checks.add("bracket-table-homomorphism", worst == 0, float(worst))
    else:
        checks.skip("bracket-table-homomorphism")

    res = max(canonical_relation_residuals(n).values())
    checks.add("canonical-bracket-relations", res < tol, res)
    res = max(su2_relation_residuals(n).values())
    checks.add("su2-bracket-relations", res < tol, res)
    res = alternating_eigen_residual(n)
    checks.add("alternating-power-eigenvalue", res < tol, res)

    checks.add(
        "power-recursion-identity",
        ab_recursion_identity_ok(n),
        ab_recursion_identity_residual(n),
    )
    rows = ab_power_coeffs(n, n - 1)
    trig_res = 0.0
    for k in range(1, n):
        row = rows[k - 1]
        trig = ab_power_trig_coeffs(n, k)
        scale = max(abs(c) for c in row)
        trig_res = max(
            trig_res,
            max(abs(a - b) for a, b in zip(row, trig)) / scale,
        )
    checks.add("power-trig-closed-form", trig_res < tol, trig_res)

    if n <= RECOMPUTE_VERTEX_CAP:
        spectral = cycle_spectral_report(n, tolerance=math.inf)
        checks.add(
            "spectral-closed-forms",
            spectral.cross_residual < tol,
            spectral.cross_residual,
        )
    else:
        checks.skip("spectral-closed-forms")

    payload = {
        "schema": SCHEMA_VERSION,
        "command": "verify-cycle",
        "n": n,
        "tolerance": tol,
        "checks": checks.checks,
        "ok": checks.all_ok,
    }
    _emit(payload, config)
    return EXIT_OK if checks.all_ok else EXIT_VERIFY


def cmd_verify_complete(config: RunConfig) -> int:
    n = config.n
    if n is None or n < 2:
        raise UsageError("n >= 2 required for the complete family")
    checks = _CheckList()

    report = generate_dla_orbit_compressed("complete", n, config.memory_budget)
    forms = kn_formulas(n)
    checks.add(
        "dimension-formula",
        report.dimension == forms["dim"],
        float(abs(report.dimension - forms["dim"])),
    )
    cdim = center_dimension(report)
    checks.add(
        "center-dimension-formula",
        cdim == forms["center_dim"],
        float(abs(cdim - forms["center_dim"])),
    )
    idim = ideal_dimension(report)
    checks.add(
        "ideal-dimension-formula",
        idim == forms["ideal_dim"],
        float(abs(idim - forms["ideal_dim"])),
    )

    basis = kn_basis(n)
    ledger = span_ledger([v.to_dict() for v in basis])
    outside = sum(
        0 if report._ledger.contains(v.to_dict()) else 1 for v in basis
    )
    ok = (
        len(basis) == forms["dim"]
        and ledger.rank == forms["dim"]
        and outside == 0
    )
    checks.add(
        "explicit-basis-spans-closure",
        ok,
        float(abs(len(basis) - forms["dim"]) + abs(ledger.rank - forms["dim"]) + outside),
    )

    spanners = kn_ideal_basis(n)
    ledger = span_ledger([v.to_dict() for v in spanners])
    ok = len(spanners) == forms["ideal_dim"] == ledger.rank
    checks.add(
        "ideal-spanning-set-dimension",
        ok,
        float(abs(len(spanners) - forms["ideal_dim"]) + abs(ledger.rank - forms["ideal_dim"])),
    )

    for name, ok in fact_suite(n, report).items():
        checks.add(name, ok, None if ok else 1.0)

    checks.add(
        "dimension-below-parity-bound",
        forms["dim"] < forms["yz_bound"] < forms["binom_bound"],
        float(max(0, forms["dim"] - forms["yz_bound"] + 1)),
    )

    payload = {
        "schema": SCHEMA_VERSION,
        "command": "verify-complete",
        "n": n,
        "tolerance": config.tolerance,
        "checks": checks.checks,
        "ok": checks.all_ok,
        "note": DECOMPOSITION_CONJECTURE,
    }
    _emit(payload, config)
    return EXIT_OK if checks.all_ok else EXIT_VERIFY


def cmd_variance(config: RunConfig) -> int:
    if config.family != "cycle":
        raise UsageError(
            f"variance needs --family cycle: only the cycle family has a "
            f"proven decomposition into components (got {config.family!r})"
        )
    n = config.n
    if n is None or n < 3:
        raise UsageError("n >= 3 required for the cycle family")
    try:
        report = cycle_spectral_report(n, config.tolerance)
    except ArithmeticError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "variance",
        "family": config.family,
        "n": n,
        "expectation": report.expectation,
        "variance": report.variance,
        "per_component_purities": [
            [p.rho, p.obs] for p in report.purity_per_component
        ],
    }
    _emit(payload, config)
    return EXIT_OK


def cmd_bounds(config: RunConfig) -> int:
    graph = parse_graph_spec(config.graph)
    bounds = dimension_bounds(graph)
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "bounds",
        "graph": config.graph,
        "n": graph.n,
        "aut_bound": bounds["aut_bound"],
        "center_bound": bounds["center_bound"],
    }
    if graph.family == "complete":
        forms = kn_formulas(graph.n)
        payload["binom_bound"] = forms["binom_bound"]
        payload["yz_bound"] = forms["yz_bound"]
        payload["dim_formula"] = forms["dim"]
    _emit(payload, config)
    return EXIT_OK


def cmd_sweep(config: RunConfig) -> int:
    if config.family not in ("cycle", "complete"):
        raise UsageError("sweep supports --family cycle or complete")
    floor = 3 if config.family == "cycle" else 2
    lo, hi = config.n_min, config.n_max
    if lo is None or hi is None or lo < floor or hi < lo:
        raise UsageError(
            f"sweep needs --min and --max with {floor} <= min <= max"
        )
    sweep_config = RunConfig(
        command="compute",
        orbit_compress=True,
        memory_budget=config.memory_budget,
        tolerance=config.tolerance,
        output=config.output,
        seed=config.seed,
    )
    rows = []
    for n in range(lo, hi + 1):
        graph = parse_graph_spec(f"{config.family}:{n}")
        rows.append(_compute_row(graph, sweep_config))
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "sweep",
        "family": config.family,
        "rows": rows,
    }
    _emit(payload, config)
    return EXIT_OK


_DISPATCH = {
    "compute": cmd_compute,
    "verify-cycle": cmd_verify_cycle,
    "verify-complete": cmd_verify_complete,
    "variance": cmd_variance,
    "bounds": cmd_bounds,
    "sweep": cmd_sweep,
}


# ---------------------------------------------------------------------------
# argument parsing


def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be a positive number")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dla-lab",
        description=(
            "Dynamical Lie algebras of QAOA-MaxCut circuits: closure "
            "computations, closed-form verification, and loss statistics."
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--memory-budget",
        type=_positive_int,
        default=DEFAULT_MEMORY_BUDGET,
        metavar="ENTRIES",
        help="abort once the closure ledger holds this many entries "
        "(default %(default)s)",
    )
    common.add_argument(
        "--tolerance",
        type=_positive_float,
        default=DEFAULT_TOLERANCE,
        metavar="EPS",
        help="numeric comparison tolerance (default %(default)s)",
    )
    common.add_argument(
        "--output",
        choices=("json", "csv", "text"),
        default="json",
        help="report format; csv applies to sweep only (default json)",
    )
    common.add_argument(
        "--seed",
        type=int,
        default=DEFAULT_SEED,
        help="seed recorded for randomized suites (default %(default)s)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "compute",
        parents=[common],
        help="closure dimensions and bounds for one graph",
    )
    p.add_argument(
        "--graph",
        required=True,
        help="cycle:N | complete:N | path:N | file:PATH",
    )
    p.add_argument(
        "--orbit-compress",
        action="store_true",
        help="run in symmetry-orbit coordinates (cycle/complete only)",
    )

    for name, blurb in (
        ("verify-cycle", "verify every cycle-family closed form at size n"),
        ("verify-complete", "verify every complete-family closed form at size n"),
    ):
        p = sub.add_parser(name, parents=[common], help=blurb)
        p.add_argument("--n", type=int, required=True, help="number of vertices")

    p = sub.add_parser(
        "variance",
        parents=[common],
        help="loss expectation/variance and component purities",
    )
    p.add_argument("--family", required=True, help="graph family (cycle)")
    p.add_argument("--n", type=int, required=True, help="number of vertices")

    p = sub.add_parser(
        "bounds",
        parents=[common],
        help="symmetry dimension bounds without running the closure",
    )
    p.add_argument(
        "--graph",
        required=True,
        help="cycle:N | complete:N | path:N | file:PATH",
    )

    p = sub.add_parser(
        "sweep",
        parents=[common],
        help="orbit-compressed compute over a range of sizes",
    )
    p.add_argument("--family", required=True, help="cycle or complete")
    p.add_argument("--min", type=int, required=True, help="smallest size")
    p.add_argument("--max", type=int, required=True, help="largest size")

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        graph=getattr(args, "graph", None),
        family=getattr(args, "family", None),
        n=getattr(args, "n", None),
        n_min=getattr(args, "min", None),
        n_max=getattr(args, "max", None),
        orbit_compress=getattr(args, "orbit_compress", False),
        memory_budget=args.memory_budget,
        tolerance=args.tolerance,
        output=args.output,
        seed=args.seed,
    )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _config_from_args(args)
        return _DISPATCH[config.command](config)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceBudgetError as exc:
        print(f"resource budget exceeded: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
