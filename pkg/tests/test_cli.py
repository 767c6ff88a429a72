import json
import subprocess
import sys

import pytest

from positroids.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def summary(out):
    last = out.strip().splitlines()[-1]
    assert last.startswith("SUMMARY ")
    return json.loads(last[len("SUMMARY "):])


def test_convert_pair(capsys):
    code, out, _ = run(capsys, "convert", "--pair", "2143", "3412", "2")
    assert code == 0
    assert "window: [4,3,6,5]" in out and "dim: 2" in out


def test_convert_window(capsys):
    code, out, _ = run(capsys, "convert", "--window", "[243]", "1")
    assert code == 0 and out.startswith("pair: 123 213 k=1")


def test_convert_necklace_in_any_order(capsys):
    code, out, _ = run(capsys, "convert", "--necklace", "124|234|346|456|562|612")
    assert code == 0 and "window: [3,6,5,8,7,10]" in out


def test_convert_round_trips_through_every_representation(capsys):
    _, out, _ = run(capsys, "convert", "--pair", "2143", "3412", "2")
    lines = dict(line.split(": ", 1) for line in out.splitlines() if ": " in line and not line[0].isdigit())
    _, out2, _ = run(capsys, "convert", "--necklace", lines["necklace"])
    _, out3, _ = run(capsys, "convert", "--decorated", lines["decorated"], "--k", "2")
    assert out == out2 == out3


@pytest.mark.parametrize("argv", [["convert", "--pair", "2143", "1234", "2"], ["convert", "--window", "[0,2]"],
                                  ["convert", "--window", "[4,3,6,5]", "1"], ["rpoly", "123", "1234"],
                                  ["plabic", "check", "no_such_graph"], ["tnn", "1,0;x,1"],
                                  ["--field", "p7", "tnn", "1,0;0,1;0,0"]])
def test_invalid_input_exits_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nonsense"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["--field", "p4", "verify", "rpoly"])
    assert exc.value.code == 2


def test_class(capsys):
    code, out, _ = run(capsys, "class", "[3,4,6,5]")
    assert code == 0
    assert "class: s1" in out and "bergeron-sottile: s21" in out
    assert summary(out) == {"checks": 1, "failed": 0, "passed": 1}
    _, out, _ = run(capsys, "class", "[4,3,6,5]")
    assert "class: s11 + s2" in out


def test_rpoly(capsys):
    code, out, _ = run(capsys, "rpoly", "123", "321", "--q", "2,3")
    assert code == 0
    assert "CHECK rpoly.count.q2 PASS R(2)=3 flags=3" in out
    assert summary(out)["failed"] == 0


def test_rpoly_work_bound(capsys):
    code, _, err = run(capsys, "--max-work", "10", "rpoly", "123", "321", "--q", "3")
    assert code == 2 and "exceed" in err


@pytest.mark.parametrize("name", ["hexagon", "basic_g24"])
def test_plabic_check(capsys, name):
    code, out, _ = run(capsys, "plabic", "check", name)
    assert code == 0 and "reduced: yes" in out
    assert summary(out)["failed"] == 0


def test_plabic_check_on_non_reduced_graph(capsys):
    code, out, _ = run(capsys, "plabic", "check", "doubled_g12")
    assert code == 0 and "reduced: no" in out


def test_plabic_measure_and_labels(capsys, tmp_path):
    code, out, _ = run(capsys, "plabic", "measure", "basic_g24", "--weights", "p=1,q=2,r=3,s=4,t=5,u=6")
    assert code == 0
    assert "D13 11" in out and "D24 30" in out
    _, out, _ = run(capsys, "plabic", "labels", "hexagon")
    assert out.split() == ["124", "126", "234", "246", "256", "346", "456"]
    code, _, _ = run(capsys, "plabic", "labels", "doubled_g12")
    assert code == 2
    path = tmp_path / "g.pg"
    path.write_text("2 1\nB 1 1\nB 2 2\nV a white\nE x 1 a 2\nE y a 2 3\nR a y x\nR 1 x\nR 2 y\n")
    _, out, _ = run(capsys, "plabic", "trips", str(path))
    assert "f: [2,3]" in out


def test_plabic_over_a_finite_field(capsys):
    code, out, _ = run(capsys, "--field", "p7", "plabic", "measure", "basic_g24", "--weights", "p=1,q=2,r=3,s=4,t=5,u=6")
    assert code == 0 and "D13 4" in out


def test_tnn(capsys):
    code, out, _ = run(capsys, "tnn", "1,0;1,1;0,1")
    assert code == 0 and "CHECK tnn.completion PASS" in out
    code, out, _ = run(capsys, "tnn", "1,0;0,1;1,1;0,0")
    assert code == 1 and summary(out) == {"checks": 1, "failed": 1, "passed": 0}


@pytest.mark.parametrize("argv", [["verify", "bijections", "--n", "4"], ["verify", "rpoly", "--n", "3", "--q", "2,3"],
                                  ["verify", "deodhar"], ["verify", "smt", "--n", "3"], ["verify", "classes", "--n", "4"],
                                  ["verify", "plabic", "--file", "hexagon"], ["verify", "tnn", "--trials", "5"]])
def test_verify_suites_pass(capsys, argv):
    code, out, _ = run(capsys, *argv)
    s = summary(out)
    assert code == 0 and s["failed"] == 0 and s["checks"] > 0
    assert all(line.startswith(("CHECK ", "SUMMARY ", "reduced:", "f:")) for line in out.strip().splitlines())


def test_verify_is_deterministic(capsys):
    _, a, _ = run(capsys, "--seed", "4", "verify", "tnn", "--trials", "5")
    _, b, _ = run(capsys, "--seed", "4", "verify", "tnn", "--trials", "5")
    assert a == b


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "positroids", "class", "[4,3,6,5]"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip().splitlines()[-1].startswith("SUMMARY")
