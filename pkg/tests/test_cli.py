import json
import subprocess
import sys
from fractions import Fraction

import pytest

from redpair.cli import ConfigError, main, parse_config


def write_config(tmp_path, text, name="job.cfg"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def run_main(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


A2_FUNDSERIES = """
lie_type = A2
k = sl2
labels = [2, 2]
command = fundseries
nu = -3
cutoff = 169/8
"""


# ---------------------------------------------------------------------------
# config parsing


def test_parse_scalars_and_arrays():
    job = parse_config("""
# comment
lie_type = A2    # trailing comment
mu = 3
cutoff = 169/8
labels = [2, 0]
matrix = [[1, 0], [0, 1/2]]
""")
    assert job["lie_type"] == "A2"
    assert job["mu"] == Fraction(3)
    assert job["cutoff"] == Fraction(169, 8)
    assert job["labels"] == [Fraction(2), Fraction(0)]
    assert job["matrix"] == [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1, 2)]]


def test_parse_rejects_floats():
    with pytest.raises(ConfigError):
        parse_config("cutoff = 1.5\n")


def test_parse_rejects_bad_lines():
    with pytest.raises(ConfigError):
        parse_config("just a line without equals\n")
    with pytest.raises(ConfigError):
        parse_config("a = 1\na = 2\n")
    with pytest.raises(ConfigError):
        parse_config("x = [1, 2\n")


# ---------------------------------------------------------------------------
# commands end to end


def test_generic_check_job(tmp_path, capsys):
    cfg = write_config(tmp_path, """
lie_type = A2
k = sl2
labels = [2, 2]
command = generic-check
mu = 3
""")
    code, out, err = run_main(capsys, ["--config", cfg, "--emit", "machine"])
    assert code == 0, err
    doc = json.loads(out)
    assert doc["genericity"]["holds"] is True
    assert doc["genericity"]["mu"] == ["3"]


def test_threshold_job_statement(tmp_path, capsys):
    cfg = write_config(tmp_path, """
lie_type = B2
k = sl2
labels = [2, 2]
command = sl2-threshold
""")
    code, out, err = run_main(capsys, ["--config", cfg, "--emit", "machine"])
    assert code == 0, err
    doc = json.loads(out)
    assert doc["threshold"]["value"] == 7
    assert doc["threshold"]["statement"] == "generic iff m >= 6"


def test_fundseries_job_table(tmp_path, capsys):
    cfg = write_config(tmp_path, A2_FUNDSERIES)
    code, out, err = run_main(capsys, ["--config", cfg, "--emit", "machine"])
    assert code == 0, err
    doc = json.loads(out)
    table = doc["table"]
    assert table["s"] == 1 and table["r"] == 2
    got = {entry["delta"][0]: entry["mult"] for entry in table["entries"]}
    assert got == {"3": 1, "5": 1, "7": 2, "9": 2, "11": 3}


def test_verify_job(tmp_path, capsys):
    cfg = write_config(tmp_path, """
lie_type = B2
k = sl2
labels = [2, 2]
command = verify
nu = -6
cutoff = 256/20
""")
    code, out, err = run_main(capsys, ["--config", cfg, "--emit", "machine"])
    assert code == 0, err
    doc = json.loads(out)
    assert doc["verify"]["all_ok"] is True
    assert doc["verify"]["generic"] is True
    assert doc["verify"]["rho_identity_ok"] is True
    assert doc["verify"]["degree_sum_ok"] is True


def test_pair_info_job(tmp_path, capsys):
    cfg = write_config(tmp_path, """
lie_type = A2
k = cartan
command = pair-info
""")
    code, out, err = run_main(capsys, ["--config", cfg, "--emit", "machine"])
    assert code == 0, err
    doc = json.loads(out)
    assert doc["pair"]["rank_t"] == 2
    assert len(doc["pair"]["delta_t"]) == 6


def test_parabolic_job(tmp_path, capsys):
    cfg = write_config(tmp_path, """
lie_type = A2
k = sl2
labels = [2, 2]
command = parabolic
mu = 3
""")
    code, out, err = run_main(capsys, ["--config", cfg, "--emit", "machine"])
    assert code == 0, err
    doc = json.loads(out)
    parab = doc["parabolic"]
    assert parab["lambda"] == ["5"]
    assert parab["s"] == 1 and parab["r"] == 2
    assert parab["rho_n"] == ["4"] and parab["rho_n_perp"] == ["3"]


def test_levi_and_explicit_jobs(tmp_path, capsys):
    cfg = write_config(tmp_path, """
lie_type = A2
k = levi
nodes = [1]
command = pair-info
""")
    code, out, _ = run_main(capsys, ["--config", cfg, "--emit", "machine"])
    assert code == 0
    doc = json.loads(out)
    assert doc["pair"]["k_positive_roots"] == [["1", "0"]]

    cfg2 = write_config(tmp_path, """
lie_type = A2
k = explicit
restriction = [[2, 2]]
k_simple_roots = [[2]]
k_coroots = [[1]]
command = pair-info
""", name="job2.cfg")
    code2, out2, _ = run_main(capsys, ["--config", cfg2, "--emit", "machine"])
    assert code2 == 0
    doc2 = json.loads(out2)
    assert doc2["pair"]["rho"] == ["1"]


def test_fundseries_rank_two_levi(tmp_path, capsys):
    # the chamber is found by the fixpoint iteration: nu = 0 gives
    # mu = (1, 2) and entries at mu and mu + (1, 1)
    cfg = write_config(tmp_path, """
lie_type = A2
k = levi
nodes = [1]
command = fundseries
nu = [0, 0]
cutoff = 20
""")
    code, out, err = run_main(capsys, ["--config", cfg, "--emit", "machine"])
    assert code == 0, err
    doc = json.loads(out)
    got = {tuple(entry["delta"]): entry["mult"] for entry in doc["table"]["entries"]}
    assert got == {("1", "2"): 1, ("2", "3"): 1}
    assert doc["table"]["mu"] == ["1", "2"]


def test_fundamental_basis_input(tmp_path, capsys):
    # nu given in fundamental coordinates: (0, 0) is still zero
    cfg = write_config(tmp_path, """
lie_type = A2
k = levi
nodes = [1]
command = fundseries
nu = [0, 0]
nu_basis = fundamental
cutoff = 20
""")
    code, out, err = run_main(capsys, ["--config", cfg, "--emit", "machine"])
    assert code == 0, err
    doc = json.loads(out)
    assert doc["table"]["mu"] == ["1", "2"]


# ---------------------------------------------------------------------------
# exit codes


def test_exit_code_parse_error(tmp_path, capsys):
    cfg = write_config(tmp_path, "lie_type = A2\nmu = 1.5\n")
    code, _, err = run_main(capsys, ["generic-check", "--config", cfg])
    assert code == 2
    assert "parse error" in err


def test_exit_code_missing_config(tmp_path, capsys):
    code, _, err = run_main(capsys, ["generic-check", "--config",
                                     str(tmp_path / "absent.cfg")])
    assert code == 2


def test_exit_code_validation_error(tmp_path, capsys):
    # non-integral mu for the rank-one subalgebra
    cfg = write_config(tmp_path, """
lie_type = A2
k = sl2
labels = [2, 2]
command = generic-check
mu = 1/2
""")
    code, _, err = run_main(capsys, ["--config", cfg])
    assert code == 3
    assert "validation error" in err


def test_exit_code_cap_exceeded(tmp_path, capsys):
    cfg = write_config(tmp_path, """
lie_type = A2
k = sl2
labels = [2, 2]
command = generic-check
mu = 3
""")
    code, _, err = run_main(capsys, ["--config", cfg, "--max-weyl", "1"])
    assert code == 4
    assert "cap" in err


def test_cap_from_config_key(tmp_path, capsys):
    cfg = write_config(tmp_path, """
lie_type = A2
k = sl2
labels = [2, 2]
command = generic-check
mu = 3
max_weyl = 1
""")
    code, _, err = run_main(capsys, ["--config", cfg])
    assert code == 4
    # the command-line flag takes precedence
    code2, out, _ = run_main(capsys, ["--config", cfg, "--max-weyl", "10",
                                      "--emit", "machine"])
    assert code2 == 0
    assert json.loads(out)["genericity"]["holds"] is True


def test_command_conflict_is_parse_error(tmp_path, capsys):
    cfg = write_config(tmp_path, """
lie_type = A2
k = sl2
labels = [2, 2]
command = parabolic
mu = 3
""")
    code, _, err = run_main(capsys, ["generic-check", "--config", cfg])
    assert code == 2


# ---------------------------------------------------------------------------
# determinism and human/machine agreement


def test_machine_output_byte_identical(tmp_path, capsys):
    cfg = write_config(tmp_path, A2_FUNDSERIES)
    _, out1, _ = run_main(capsys, ["--config", cfg, "--emit", "machine"])
    _, out2, _ = run_main(capsys, ["--config", cfg, "--emit", "machine"])
    assert out1 == out2


def test_machine_output_byte_identical_subprocess(tmp_path):
    cfg = write_config(tmp_path, A2_FUNDSERIES)
    runs = [
        subprocess.run(
            [sys.executable, "-m", "redpair.cli", "--config", cfg,
             "--emit", "machine"],
            capture_output=True, check=True,
        ).stdout
        for _ in range(2)
    ]
    assert runs[0] == runs[1]
    assert json.loads(runs[0].decode("utf-8"))["table"]["cutoff"] == "169/8"


def test_human_and_machine_agree_on_table(tmp_path, capsys):
    cfg = write_config(tmp_path, A2_FUNDSERIES)
    _, human, _ = run_main(capsys, ["--config", cfg, "--emit", "human"])
    _, machine, _ = run_main(capsys, ["--config", cfg, "--emit", "machine"])
    doc = json.loads(machine)
    rows = [line.strip() for line in human.splitlines()
            if line.strip().startswith("[") and " : " in line]
    parsed = {}
    for row in rows:
        delta, mult, norm = [part.strip() for part in row.split(":")]
        parsed[delta] = (int(mult), norm)
    for entry in doc["table"]["entries"]:
        delta = "[" + ", ".join(entry["delta"]) + "]"
        assert parsed[delta] == (entry["mult"], entry["norm2_shifted"])
    assert len(parsed) == len(doc["table"]["entries"])