"""End-to-end CLI behavior: schemas, determinism, exit codes."""

import json
import subprocess
import sys

BASE = [sys.executable, "-m", "ehrcollapse"]


def run_cli(*args, check=True):
    proc = subprocess.run(BASE + list(args), capture_output=True, text=True)
    if check:
        assert proc.returncode == 0, proc.stderr
    return proc


def json_lines(proc):
    return [json.loads(line) for line in proc.stdout.splitlines()]


# -- count ------------------------------------------------------------------------


def test_count_admissible_with_closed_form():
    records = json_lines(run_cli(
        "count", "--alpha", "3", "--beta", "3", "--t", "0..5",
        "--interior", "--closed-form",
    ))
    assert [r["count"] for r in records] == [1, 3, 6, 10, 15, 21]
    assert records[3]["interior"] == 0
    assert records[3]["closed_form"] == "10/1"


def test_count_rational_params():
    records = json_lines(run_cli("count", "--params", "2,3,3,2", "--t", "0..6"))
    assert [r["count"] for r in records] == [1, 2, 5, 9, 13, 19, 26]


def test_count_quad_legs():
    records = json_lines(run_cli(
        "count", "--u", "1", "--v", "0,1,2", "--t", "0..4",
    ))
    assert [r["count"] for r in records] == [1, 2, 4, 7, 10]


def test_count_simplex_interval_and_vertices():
    records = json_lines(run_cli(
        "count", "--legs", "1/2", "10/3", "3/5", "--t", "0..3",
    ))
    assert [r["count"] for r in records] == [1, 4, 10, 20]

    records = json_lines(run_cli(
        "count", "--interval", "0,1,2", "3,1,2", "--t", "1..4",
    ))
    assert [r["count"] for r in records] == [3, 6, 9, 12]

    records = json_lines(run_cli(
        "count", "--vertices", "0,0", "2,0", "1,1/2",
    ))
    assert records == [{"count": 3}]

    records = json_lines(run_cli("count", "--mw-image", "2", "--t", "2"))
    assert records == [{"p": 2, "t": 2, "count": 6}]


def test_count_requires_exactly_one_polytope():
    proc = run_cli("count", "--params", "1,1,1,1", "--legs", "1", "--t", "1",
                   check=False)
    assert proc.returncode == 2


# -- fit / period --------------------------------------------------------------------


def test_fit_reports_no_fit_for_irrational_pair():
    record = json_lines(run_cli(
        "fit", "--u", "1", "--v", "0,1,2", "--period", "3",
    ))[0]
    assert record["fit"] is None


def test_fit_golden_period_three():
    record = json_lines(run_cli(
        "fit", "--alpha", "3", "--beta", "3", "--period", "3",
    ))[0]
    assert record["fit"]["period"] == 3
    assert record["fit"]["coeffs"][0] == ["1/1", "3/2", "1/2"]


def test_period_reports_collapse():
    record = json_lines(run_cli("period", "--params", "2,3,3,2"))[0]
    assert record["denominator"] == 6
    assert record["minimal_period"] == 3
    assert record["collapse"] is True

    record = json_lines(run_cli("period", "--alpha", "2", "--beta", "4"))[0]
    assert record["minimal_period"] == 1
    assert record["guaranteed_period"] == 2


# -- check ------------------------------------------------------------------------


def test_check_criteria():
    record = json_lines(run_cli(
        "check", "--criterion", "collapse", "--params", "2,3,3,2",
    ))[0]
    assert record["verdict"] == "collapse-predicted"
    assert record["predicted_period_divisor"] == 3

    record = json_lines(run_cli(
        "check", "--criterion", "reciprocal", "--p", "2", "--q", "5",
    ))[0]
    assert record["predicted_period_divisor"] == 5

    record = json_lines(run_cli(
        "check", "--criterion", "classify", "--alpha", "4", "--beta", "2",
    ))[0]
    assert record["classification"] == "pseudo-rational-only"

    record = json_lines(run_cli(
        "check", "--criterion", "beta-equation", "--bound", "50",
    ))[0]
    assert record["solutions"] == [[2, 4], [3, 3]]


# -- search -----------------------------------------------------------------------


def test_search_bound_one():
    records = json_lines(run_cli("search", "--bound", "1"))
    assert records == [{
        "params": {"p": 1, "q": 1, "r": 1, "s": 1},
        "denominator": 1, "minimal_period": 1,
        "criterion_predicted": True, "collapse": False,
    }]


def test_search_deterministic_across_jobs():
    single = run_cli("search", "--bound", "2", "--jobs", "1").stdout
    multi = run_cli("search", "--bound", "2", "--jobs", "2").stdout
    assert single == multi
    records = [json.loads(line) for line in single.splitlines()]
    collapse = {(r["params"]["p"], r["params"]["q"], r["params"]["r"],
                 r["params"]["s"]): r["collapse"] for r in records}
    assert collapse[(1, 2, 2, 1)] is True
    for record in records:
        assert record["denominator"] % record["minimal_period"] == 0


def test_search_csv_header():
    lines = run_cli("search", "--bound", "1", "--format", "csv").stdout.splitlines()
    assert lines[0] == "p,q,r,s,denominator,minimal_period,criterion_predicted,collapse"
    assert lines[1] == "1,1,1,1,1,1,true,false"


# -- fib / tetra ---------------------------------------------------------------------


def test_fib_subcommand():
    records = json_lines(run_cli("fib", "--k", "2", "--n", "0..4"))
    assert [r["value"] for r in records] == [0, 1, 2, 5, 12]
    record = json_lines(run_cli("fib", "--k", "1", "--n", "4", "--triangle"))[0]
    assert record["params"] == {"p": 2, "q": 3, "r": 3, "s": 2}


def test_tetra_subcommand():
    records = json_lines(run_cli("tetra", "--n", "1", "--t", "0..3"))
    assert [r["count"] for r in records] == [1, 4, 10, 20]
    assert all(r["matches"] for r in records)
    record = json_lines(run_cli("tetra", "--limit"))[0]
    assert record["limit"] is True and len(record["legs"]) == 3


# -- guess-rec ---------------------------------------------------------------------


def test_guess_rec_from_values():
    values = ",".join(str((n + 1) * (n + 2) // 2) for n in range(40))
    record = json_lines(run_cli(
        "guess-rec", "--values", values, "--max-order", "3", "--max-degree", "1",
    ))[0]
    assert record["recurrence"] is not None
    assert record["recurrence"]["order"] <= 3


def test_guess_rec_from_counts():
    record = json_lines(run_cli(
        "guess-rec", "--alpha", "3", "--beta", "3", "--t-max", "60",
        "--max-order", "3", "--max-degree", "0",
    ))[0]
    assert record["recurrence"]["polys"] == [["1/1"], ["-3/1"], ["3/1"], ["-1/1"]]


# -- verify and exit codes --------------------------------------------------------------


def test_verify_suite_passes():
    proc = run_cli("verify", "--suite", "arith")
    summary = json.loads(proc.stdout.splitlines()[-1])
    assert summary["failed"] == 0 and summary["checks"] > 0


def test_unknown_suite_is_usage_error():
    proc = run_cli("verify", "--suite", "nope", check=False)
    assert proc.returncode == 2


def test_missing_subcommand_is_usage_error():
    proc = run_cli(check=False)
    assert proc.returncode == 2


def test_invalid_params_exit_code():
    proc = run_cli("count", "--params", "2,4,1,1", "--t", "1", check=False)
    assert proc.returncode == 2
    proc = run_cli("count", "--params", "1,1,1,1", "--t", "5..1", check=False)
    assert proc.returncode == 2


def test_byte_identical_reruns():
    args = ("count", "--alpha", "5", "--beta", "3", "--t", "0..30", "--closed-form")
    assert run_cli(*args).stdout == run_cli(*args).stdout
