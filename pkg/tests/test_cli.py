"""Command-line interface: reports, DOT exports, CSV tables, exit codes.

Runs main() in-process and asserts on captured output.  Exit contract:
0 success, 1 verification found a property failure, 2 bad usage or an
invalid Kupisch series.
"""

import json

import pytest

from nakayama import SuiteStats, VerificationResult, main
from nakayama.cli import algebra_report, classification_csv, format_report_text


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_json_worked_example(capsys):
    code, out, err = run(capsys, "analyze", "13,13,12,12,12", "--json")
    assert code == 0 and err == ""
    report = json.loads(out)
    assert report["kupisch"] == [13, 13, 12, 12, 12]
    assert (report["s"], report["p"], report["t"]) == (5, 12, 4)
    assert report["gorenstein"] == {
        "gorenstein": False,
        "v": None,
        "method": "resolution-quiver",
    }
    assert report["cm_free"] is False
    assert report["global_dimension"] == "infinite"
    rq = report["resolution_quiver"]
    assert rq["gamma"] == {"1": 4, "2": 5, "3": 5, "4": 1, "5": 2}
    assert rq["colors"] == {
        "1": "black", "2": "red", "3": "black", "4": "black", "5": "black",
    }
    assert rq["cycles"] == [[1, 4], [2, 5]]
    assert rq["sources"] == [3]
    core = report["core"]
    assert core["x_set"] == [1, 4]
    assert core["elementaries"] == [[1, 3], [4, 2]]
    assert (core["g"], core["p_prime"]) == (2, 5)
    assert report["counts"] == {"indecomposables": 62, "core_size": 10}


def test_analyze_json_gorenstein_example(capsys):
    code, out, _ = run(capsys, "analyze", "5,5,4", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["gorenstein"] == {
        "gorenstein": True,
        "v": 2,
        "method": "resolution-quiver",
    }
    assert report["global_dimension"] == "infinite"
    assert report["resolution_quiver"]["cycles"] == [[1, 3]]
    assert report["resolution_quiver"]["sources"] == [2]
    assert report["core"] == {
        "x_set": [1, 3],
        "elementaries": [[1, 2], [3, 1]],
        "g": 2,
        "p_prime": 3,
    }
    assert report["counts"] == {"indecomposables": 14, "core_size": 6}


def test_analyze_json_finite_global_dimension(capsys):
    code, out, _ = run(capsys, "analyze", "3,2", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["gorenstein"]["method"] == "syzygy-oracle"
    assert report["gorenstein"]["v"] == 2
    assert report["cm_free"] is True
    assert report["global_dimension"] == 2
    assert report["core"]["p_prime"] is None


def test_analyze_text_default(capsys):
    code, out, _ = run(capsys, "analyze", "5,5,4")
    assert code == 0
    assert "Kupisch series (5,5,4)   s=3  p=4  t=2" in out
    assert "Gorenstein: yes, v = 2   (method: resolution-quiver)" in out
    assert "CM-free: no" in out
    assert "global dimension: infinite" in out
    assert "cycles: (1,3) black" in out
    assert "sources: {2}" in out
    assert "X = {1,3}" in out
    assert "E(1) = M(1,2)  E(3) = M(3,1)" in out
    assert "g = 2   p' = 3" in out
    assert "counts: 14 indecomposables, 6 in core" in out


def test_analyze_text_mixed_cycle(capsys):
    _, out, _ = run(capsys, "analyze", "13,13,12,12,12", "--text")
    assert "Gorenstein: no   (method: resolution-quiver)" in out
    assert "cycles: (1,4) black; (2,5) mixed" in out
    assert "p' = 5" in out


def test_analyze_rejects_bad_series(capsys):
    code, out, err = run(capsys, "analyze", "5,1")
    assert code == 2 and out == ""
    assert "error: SimpleProjective" in err
    code, _, err = run(capsys, "analyze", "2,4")
    assert code == 2 and "SerialViolation" in err
    code, _, err = run(capsys, "analyze", "a,b")
    assert code == 2 and "malformed series" in err
    code, _, err = run(capsys, "analyze", "3,,2")
    assert code == 2 and "empty entry" in err


def test_json_and_text_are_mutually_exclusive(capsys):
    code, _, _ = run(capsys, "analyze", "3,2", "--json", "--text")
    assert code == 2


def test_rq_dot(capsys):
    code, out, _ = run(capsys, "rq", "5,5,4", "--dot")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "digraph resolution_quiver {"
    assert lines[-1] == "}"
    assert '  v1 [label="1", style=filled, fillcolor=black, fontcolor=white];' in lines
    assert '  v2 [label="2"];' in lines  # red vertex: unfilled
    assert "  v1 -> v3;" in lines
    assert "  v2 -> v1 [style=dotted];" in lines  # arrow out of a red vertex
    assert "  v3 -> v1;" in lines


def test_arq_dot(capsys):
    code, out, _ = run(capsys, "arq", "2,2", "--dot", "--mark-core")
    assert code == 0
    assert out.count("->") == 4
    assert "doublecircle" in out  # elementary simples
    assert 'style="filled,bold"' in out  # core projectives
    code, plain, _ = run(capsys, "arq", "2,2", "--dot")
    assert code == 0 and "doublecircle" not in plain
    code, big, _ = run(capsys, "arq", "13,13,12,12,12", "--dot")
    assert code == 0
    assert sum(1 for ln in big.splitlines() if "[label=" in ln) == 62
    assert big.count("->") == 114


def test_classify_csv(capsys):
    code, out, _ = run(capsys, "classify", "--s", "3", "--csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "roof,residue,kind,g,v,t"
    assert len(lines) == 13
    # quoted roof labels (they contain commas); empty v for non-Gorenstein
    assert '"(2,4,3)",1,F,0,,1' in lines
    assert '"(2,3,3)",2,Mixed,1,,2' in lines
    assert '"(2,3,3)",3,G,1,4,2' in lines
    assert '"(2,2,2)",3,G,3,0,3' in lines


def test_classify_s1(capsys):
    code, out, _ = run(capsys, "classify", "--s", "1")
    assert code == 0
    assert out.splitlines() == ["roof,residue,kind,g,v,t", "(2),1,G,1,0,1"]


def test_classify_range_check(capsys):
    code, _, err = run(capsys, "classify", "--s", "9")
    assert code == 2 and "1..8" in err
    code, _, _ = run(capsys, "classify", "--s", "0")
    assert code == 2


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--s-max", "2", "--p-max", "4")
    assert code == 0
    assert "PASS: 10 series, 51 modules," in out
    assert " 0 failures (" in out
    assert "ok   oracle-equivalence:" in out
    assert "FAIL" not in out


def test_verify_bad_bounds(capsys):
    code, _, err = run(capsys, "verify", "--s-max", "0")
    assert code == 2 and "error:" in err


def test_verify_reports_failures(monkeypatch, capsys):
    # exit contract: property failures exit 1 and are listed
    fake = VerificationResult(
        s_max=1, p_max=2, series_count=1, module_count=2,
        suites={"demo-suite": SuiteStats(3, 1)},
        failures=("(2,) demo-suite: broken",),
        failure_count=1, flags=("curiosity",),
        oracle_elapsed=0.0, elapsed=0.1,
    )
    import nakayama.cli as cli

    monkeypatch.setattr(cli, "run_verification", lambda s, p: fake)
    code, out, _ = run(capsys, "verify")
    assert code == 1
    assert "FAIL demo-suite: 3 checks, 1 failures" in out
    assert "FAIL (2,) demo-suite: broken" in out
    assert "note: curiosity" in out
    assert "FAIL: 1 series, 2 modules, 3 checks, 1 failures" in out


def test_usage_errors(capsys):
    assert run(capsys, )[0] == 2  # missing subcommand
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "analyze")[0] == 2  # missing series
    assert run(capsys, "classify")[0] == 2  # missing --s


def test_output_is_deterministic(capsys):
    a = run(capsys, "analyze", "7,7,6", "--json")
    b = run(capsys, "analyze", "7,7,6", "--json")
    assert a == b
    c = run(capsys, "classify", "--s", "4")
    d = run(capsys, "classify", "--s", "4")
    assert c == d


def test_python_level_helpers_match_cli(capsys):
    from nakayama import KupischSeries

    report = algebra_report(KupischSeries((5, 5, 4)))
    _, out, _ = run(capsys, "analyze", "5,5,4", "--json")
    assert json.loads(out) == report
    _, txt, _ = run(capsys, "analyze", "5,5,4")
    assert txt == format_report_text(report)
    _, csv_out, _ = run(capsys, "classify", "--s", "2")
    assert csv_out == classification_csv(2)
