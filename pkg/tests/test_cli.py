"""Command line behavior: output goldens and exit codes."""

import json

import pytest

from pfaffkit.cli import main

COLORED_22 = """\
2 2 2
a
a[1,1] a[1,2]
a[2,1] a[2,2]
b
b[1,2]
c
c[1,2]
"""


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def colored_file(tmp_path):
    f = tmp_path / "x22.txt"
    f.write_text(COLORED_22)
    return str(f)


# --- pfaffian ----------------------------------------------------------------


def test_pfaffian_colored(colored_file, capsys):
    code, out, _ = run(capsys, "pfaffian", colored_file)
    assert code == 0
    assert out.strip() == "a[1,1]*a[2,2] - a[2,1]*a[1,2] + c[1,2]*b[1,2]"


def test_pfaffian_full_rational(tmp_path, capsys):
    f = tmp_path / "k4.txt"
    f.write_text("full 4\n0 1/2 3 -1\n-1/2 0 2 0\n-3 -2 0 5\n1 0 -5 0\n")
    code, out, _ = run(capsys, "pfaffian", "--ring", "rational", str(f))
    assert code == 0
    assert out.strip() == "1/2"


def test_pfaffian_odd_size_is_shape_violation(tmp_path, capsys):
    f = tmp_path / "odd.txt"
    f.write_text("full 3\n0 1 2\n-1 0 3\n-2 -3 0\n")
    code, _, err = run(capsys, "pfaffian", "--ring", "rational", str(f))
    assert code == 3
    assert "shape" in err


def test_pfaffian_not_alternating_is_shape_violation(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("full 2\n0 1\n1 0\n")
    code, _, err = run(capsys, "pfaffian", "--ring", "rational", str(f))
    assert code == 3


def test_pfaffian_malformed_is_parse_error(tmp_path, capsys):
    f = tmp_path / "trunc.txt"
    f.write_text("full 4\n0 1\n")
    code, _, err = run(capsys, "pfaffian", str(f))
    assert code == 2
    assert "parse error" in err


def test_pfaffian_missing_file(capsys):
    code, _, err = run(capsys, "pfaffian", "/nonexistent/m.txt")
    assert code == 2


# --- verify --------------------------------------------------------------------


def test_verify_suite_text(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "central", "--n", "1")
    assert code == 0
    assert "PASS central:commutant:n1" in out
    assert out.strip().splitlines()[-1].startswith("suite central: PASS (2 checks")


def test_verify_suite_json_schema(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "ncmsf", "--n", "2", "--format", "json")
    assert code == 0
    rep = json.loads(out)
    assert rep["schema"] == 1
    assert rep["suite"] == "ncmsf"
    assert rep["status"] == "pass"
    ids = [c["id"] for c in rep["checks"]]
    assert ids == sorted(ids)
    for c in rep["checks"]:
        assert set(c) == {"id", "status", "residual", "millis"}


def test_verify_single_coloring(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "msf", "--pq", "2", "2")
    assert code == 0
    assert "msf:identity:p2q2" in out


def test_verify_bound_exceeded_suggests_force(capsys):
    code, _, err = run(capsys, "verify", "--suite", "ncmsf", "--n", "4")
    assert code == 2
    assert "--force" in err


def test_verify_bad_suite_is_usage_error(capsys):
    code, _, err = run(capsys, "verify", "--suite", "bogus")
    assert code == 2


def test_verify_seed_env_default(capsys, monkeypatch):
    monkeypatch.setenv("PFAFFKIT_SEED", "17")
    code, out, _ = run(capsys, "verify", "--suite", "msf", "--pq", "1", "1")
    assert code == 0


# --- eigenvalue ------------------------------------------------------------------


def test_eigenvalue_numeric_both(capsys):
    code, out, _ = run(capsys, "eigenvalue", "--n", "2", "--lambda", "3,1", "--via", "both")
    assert code == 0
    assert out.strip() == "4 = 4"


def test_eigenvalue_symbolic_default(capsys):
    code, out, _ = run(capsys, "eigenvalue", "--n", "1", "--symbolic")
    assert code == 0
    assert out.strip() == "lam[1]"


def test_eigenvalue_symbolic_product(capsys):
    code, out, _ = run(capsys, "eigenvalue", "--n", "3", "--symbolic", "--via", "product")
    assert code == 0
    assert out.strip() == "(lam[1]+2)*(lam[2]+1)*lam[3]"


def test_eigenvalue_symbolic_both(capsys):
    code, out, _ = run(capsys, "eigenvalue", "--n", "2", "--symbolic", "--via", "both")
    assert code == 0
    assert out.strip() == "lam[1]*lam[2] + lam[2] = (lam[1]+1)*lam[2]"


def test_eigenvalue_via_pfaffian(capsys):
    code, out, _ = run(capsys, "eigenvalue", "--n", "2", "--lambda", "3,1", "--via", "pfaffian")
    assert code == 0
    assert out.strip() == "4"


def test_eigenvalue_weight_length_mismatch(capsys):
    code, _, err = run(capsys, "eigenvalue", "--n", "2", "--lambda", "3,1,5")
    assert code == 2


def test_eigenvalue_needs_exactly_one_weight_flag(capsys):
    code, _, err = run(capsys, "eigenvalue", "--n", "2")
    assert code == 2
    code, _, err = run(capsys, "eigenvalue", "--n", "2", "--lambda", "3,1", "--symbolic")
    assert code == 2


def test_eigenvalue_unparsable_weight(capsys):
    code, _, err = run(capsys, "eigenvalue", "--n", "1", "--lambda", "x")
    assert code == 2


# --- forms -----------------------------------------------------------------------


def test_forms_uea(capsys):
    code, out, _ = run(capsys, "forms", "--mode", "uea", "--n", "1")
    assert code == 0
    assert "omega = 2*a[1,1] e[1]e[-1]" in out
    assert "tau = e[1]e[-1]" in out


def test_forms_commutative_needs_size(capsys):
    code, _, err = run(capsys, "forms", "--mode", "commutative")
    assert code == 2


def test_unknown_command(capsys):
    code, _, _ = run(capsys, "bogus")
    assert code == 2


def test_no_command(capsys):
    assert main([]) == 2
