import json
import subprocess
import sys

import pytest

from tensorlayers.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_lr_prints_value(capsys):
    assert call(capsys, "lr", "--lambda", "3,2,1", "--mu", "2,1", "--nu", "2,1") == (0, "2\n", "")


def test_socle_example(capsys):
    code, out, _ = call(capsys, "socle", "--cat", "TT", "--object", "J", "--tuple", "-|1;1|-", "--t", "0", "--q", "1", "--json")
    assert code == 0
    rows = json.loads(out)
    assert {r["simple"] for r in rows} == {"-|-;-|-", "1|-;1|-", "-|1;-|1"}
    assert all(r["multiplicity"] == 1 for r in rows)


def test_poset_dot_and_csv(capsys):
    code, out, _ = call(capsys, "poset", "--degree", "0,1;1,0", "--t", "0", "--q-bound", "2", "--dot")
    assert code == 0 and out.startswith("digraph")
    code, out, _ = call(capsys, "poset", "--degree", "0,1;1,0", "--t", "0", "--q-bound", "2", "--csv")
    assert out.splitlines()[0] == "q,element" and len(out.splitlines()) == 6


def test_ext_profile(capsys):
    code, out, _ = call(capsys, "ext", "--kappa", "1|-;-|-", "--lambda", "-|1;-|-", "--t", "0", "--q-max", "3", "--csv")
    assert code == 0
    assert out.splitlines()[1:] == ["0,0", "1,1", "2,0", "3,0"]


def test_resolution_flags_degree_notes(capsys):
    code, out, err = call(capsys, "resolution", "--cat", "TT", "--tuple", "-|1;1|-", "--t", "0", "--degree-bound", "1")
    assert code == 0 and "closed form" in err
    assert "-|1;1|-" in out


def test_parse_errors_exit_2(capsys):
    code, _, err = call(capsys, "socle", "--tuple", "-|1;1|-/", "--t", "0", "--q", "1")
    assert code == 2 and "position 8" in err
    code, _, err = call(capsys, "lr", "--lambda", "1,2", "--mu", "1", "--nu", "1")
    assert code == 2


def test_missing_t_is_usage_error(capsys):
    code, _, err = call(capsys, "socle", "--tuple", "-|1;1|-", "--q", "1")
    assert code == 2 and "--t" in err


def test_levelize_file(tmp_path, capsys):
    src = tmp_path / "m.txt"
    src.write_text("a b 1\nb a -1\nc c 3\n")
    dest = tmp_path / "out.json"
    code, out, _ = call(capsys, "levelize", str(src), "--json", "-o", str(dest))
    assert code == 0
    doc = json.loads(dest.read_text())
    assert doc["phi_plus"] == [["a", "b", "1"]]
    code, _, _ = call(capsys, "levelize", str(tmp_path / "missing.txt"))
    assert code == 2


def test_symmetry_and_selftest(capsys):
    code, out, _ = call(capsys, "symmetry", "--check", "m_h", "--max-boxes", "2")
    assert code == 0 and "PASS" in out
    code, out, _ = call(capsys, "selftest", "--max-boxes", "2", "--t", "0")
    assert code == 0


@pytest.mark.parametrize(
    "argv",
    [
        ["ext", "--kappa", "1|-;-|-", "--lambda", "-|1;-|-", "--t", "0", "--q-max", "4", "--json"],
        ["selftest", "--max-boxes", "2", "--t", "1"],
    ],
)
def test_worker_count_does_not_change_output(argv):
    outs = {
        subprocess.run(
            [sys.executable, "-m", "tensorlayers", *argv, "--workers", str(w)],
            capture_output=True,
            check=True,
        ).stdout
        for w in (1, 4)
    }
    assert len(outs) == 1
