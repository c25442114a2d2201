"""CLI contract: exit codes, determinism, serialization round-trips."""

import json
import random

from grax.algebra import GroupAlgebraElement, GroupAlgebraMatrix, nrd
from grax.cli import main
from grax.groups import group_from_catalog
from grax import serde


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_group_command(capsys):
    code, out, _ = run_cli(capsys, "group", "--name", "S3", "--no-timestamp")
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "pass"
    assert doc["result"]["irreducible_degrees"] == [1, 1, 2]
    assert doc["schema"] == "grax-report/1"


def test_unknown_group_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "group", "--name", "NoSuchGroup")
    assert code == 2
    assert "usage error" in err


def test_unknown_suite_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "suite", "--name", "nonsense")
    assert code == 2


def test_nrd_command_matches_library(capsys, tmp_path):
    G = group_from_catalog("S3")
    M = GroupAlgebraMatrix.from_entries(
        G, [[GroupAlgebraElement.from_coeffs(G, [1, 1, 1, 1, 1, 1])]])
    path = tmp_path / "m.json"
    path.write_text(json.dumps(serde.gam_to_json(M)))
    code, out, _ = run_cli(capsys, "nrd", "--group", "S3",
                           "--matrix", f"@{path}", "--no-timestamp")
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["values"] == ["6", "0", "0"]


def test_cyclo_command_all_pass(capsys):
    code, out, _ = run_cli(capsys, "cyclo", "--fmax", "8", "--ellmax", "5",
                           "--no-timestamp")
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["all_pass"] is True


def test_cyclo_direct_convention_fails(capsys):
    code, out, _ = run_cli(capsys, "cyclo", "--f", "5", "--ell", "2",
                           "--convention", "direct", "--no-timestamp")
    assert code == 1
    doc = json.loads(out)
    assert doc["status"] == "fail"


def test_suite_determinism(capsys):
    argv = ["suite", "--name", "pairing", "--seed", "7", "--scale", "0.02",
            "--no-timestamp"]
    code1, out1, _ = run_cli(capsys, *argv)
    code2, out2, _ = run_cli(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2


def test_fit_oracle_check(capsys, tmp_path):
    G = group_from_catalog("C3")
    rng = random.Random(0)
    M = GroupAlgebraMatrix.from_entries(
        G, [[GroupAlgebraElement.from_coeffs(G, [rng.randrange(-3, 4) for _ in range(3)])
             for _ in range(2)] for _ in range(2)])
    path = tmp_path / "m.json"
    path.write_text(json.dumps(serde.gam_to_json(M)))
    code, out, _ = run_cli(capsys, "fit", "--group", "C3", "--matrix", f"@{path}",
                           "--a", "1", "--oracle-check", "--no-timestamp")
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["fitting"]["hnf"] == doc["result"]["oracle"]["hnf"]


def test_epsilon_command(capsys, tmp_path):
    G = group_from_catalog("C1")
    M = GroupAlgebraMatrix.from_int_grid(G, [[2], [3]])
    path = tmp_path / "m.json"
    path.write_text(json.dumps(serde.gam_to_json(M)))
    code, out, _ = run_cli(capsys, "epsilon", "--group", "C1",
                           "--matrix", f"@{path}", "--no-timestamp")
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["nonzero_components"] == [True]


def test_serde_roundtrips():
    G = group_from_catalog("Q8")
    rng = random.Random(1)
    M = GroupAlgebraMatrix.from_entries(
        G, [[GroupAlgebraElement.from_coeffs(
                G, [rng.randrange(-4, 5) for _ in range(8)]) for _ in range(2)]
            for _ in range(2)])
    back = serde.json_to_gam(json.loads(json.dumps(serde.gam_to_json(M))))
    assert back.group.name == "Q8"
    assert all((a - b).is_zero() for r1, r2 in zip(M.entries, back.entries)
               for a, b in zip(r1, r2))
    x = nrd(M)
    x2 = serde.json_to_central(json.loads(json.dumps(serde.central_to_json(x))))
    assert x2 == x


def test_rational_strings():
    from fractions import Fraction
    assert serde.rat_to_str(Fraction(-3, 2)) == "-3/2"
    assert serde.rat_to_str(Fraction(4)) == "4"
    assert serde.str_to_rat("-3/2") == Fraction(-3, 2)


def test_group_serialization_roundtrip():
    for name in ("C6", "C2xC3", "D4", "Q8"):
        G = group_from_catalog(name)
        back = serde.json_to_group(json.loads(json.dumps(serde.group_to_json(G))))
        assert back is G


def test_budget_env_var(capsys, monkeypatch):
    monkeypatch.setenv("GRAX_BUDGET", json.dumps({"max_matrix_size": 1, "rounds": 2}))
    code, out, _ = run_cli(capsys, "xi", "--group", "S3", "--no-timestamp")
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["denominator"] >= 1
    assert "1x1 elements" in doc["result"]["provenance"][0]
    assert len(doc["result"]["provenance"]) == 1  # no 2x2 pass under the env budget
