import json
import subprocess
import sys
from pathlib import Path

import pytest

from superaudit.cli import main
from superaudit.suites import (
    DISCREPANCY,
    PASS,
    SUITES,
    Report,
    UnknownSuite,
    emit_report,
    report_from_json,
    run_suite,
)

GOLDEN = Path(__file__).parent / "golden"


def _by_name(report):
    return {c.name: c for c in report.checks}


def test_susy1_golden():
    assert emit_report(run_suite("susy1"), "text") == (GOLDEN / "susy1.txt").read_text()


def test_empty_report_is_header_only():
    text = emit_report(Report("empty", "multiplicative", "0.1.0", []))
    assert not any(line.startswith("[") for line in text.splitlines())
    assert text.splitlines()[-1] == "checks: 0  pass: 0  fail: 0  discrepancy: 0"


@pytest.mark.parametrize("name", sorted(SUITES))
def test_json_round_trip(name):
    r = run_suite(name)
    back = report_from_json(emit_report(r, "json"))
    assert back == r
    data = json.loads(emit_report(r, "json"))
    assert set(data) == {"suite", "mode", "version", "checks"}
    assert set(data["checks"][0]) == {"name", "status", "witness", "anchor"}


def test_no_suite_reports_fail():
    for mode in ("multiplicative", "graded"):
        report = run_suite("all", mode)
        assert report.counts()["fail"] == 0


def test_discrepancies_show_computed_witness():
    for c in run_suite("all").checks:
        if c.status == DISCREPANCY:
            assert c.witness and c.anchor


def test_susy2_records_printed_constant():
    checks = _by_name(run_suite("susy2"))
    c = checks["[D1,D2] = -2E as stated"]
    assert c.status == DISCREPANCY
    assert c.witness.startswith("computed [D1,D2] = -1*E")
    assert checks["[Di,Di] = 0"].status == PASS
    assert checks["[D1,D2] = 2*d/dz on C^{1|2}"].status == PASS


def test_realform_sigma_both_modes():
    mult = _by_name(run_suite("realform", "multiplicative"))
    graded = _by_name(run_suite("realform", "graded"))
    assert mult["sigma o sigma = id [multiplicative]"].status == PASS
    assert graded["sigma o sigma = id [graded]"].status == PASS
    assert mult["sigma(M*M') = sigma(M)*sigma(M') [multiplicative]"].status == PASS
    assert graded["sigma(M*M') = sigma(M)*sigma(M') [graded]"].status != PASS


def test_aut_table_discrepancies_and_swap():
    checks = _by_name(run_suite("aut-c11"))
    assert checks["[V,V] = 2U2 as printed"].witness == "computed [V,V] = -2*U2"
    assert checks["printed [U,U] and [U,V] entries hold after swapping U1 and U2"].status == PASS


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite("nope")


def test_cli_exit_codes(capsys):
    assert main(["verify", "--suite", "stabilizer"]) == 0
    assert main(["verify", "--suite", "susy1"]) == 1
    capsys.readouterr()
    assert main(["eval", "--context", "c11", "z + w"]) == 2
    assert "undeclared generator" in capsys.readouterr().err
    assert main(["eval", "--context", "nope", "z"]) == 2
    with pytest.raises(SystemExit) as info:
        main(["verify", "--suite", "nope"])
    assert info.value.code == 2


def test_cli_eval_and_bracket(capsys):
    assert main(["eval", "--context", "c11", "d/dzeta + zeta*d/dz"]) == 0
    assert capsys.readouterr().out == "1*zeta*d/dz + 1*d/dzeta\n"
    assert main(["bracket", "--context", "c11", "d/dzeta + zeta*d/dz", "d/dzeta + zeta*d/dz"]) == 0
    assert capsys.readouterr().out == "2*d/dz\n"
    assert main(["eval", "even x; odd t, s; (x + t*s)^2"]) == 0
    assert capsys.readouterr().out == "2*x*t*s + 1*x^2\n"


def test_cli_list(capsys):
    assert main(["list"]) == 0
    assert capsys.readouterr().out == (GOLDEN / "list.txt").read_text()


def test_cli_json(capsys):
    main(["verify", "--suite", "incidence", "--format", "json"])
    assert report_from_json(capsys.readouterr().out) == run_suite("incidence")


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "superaudit", "verify", "--suite", "susy1"],
        capture_output=True, text=True, check=False,
    )
    assert out.returncode == 1
    assert out.stdout == (GOLDEN / "susy1.txt").read_text()
