import json
import subprocess
import sys
from fractions import Fraction

import pytest

from geocover import instances
from geocover.cli import main
from geocover.instances import PROBLEMS, SplitMix64, decode, encode, generate, validate
from geocover.solution import OK, Solution


def run(capsys, *argv, **kw):
    code = main(list(argv), **kw)
    return code, capsys.readouterr().out


def write(tmp_path, inst):
    path = tmp_path / "inst.json"
    path.write_text(json.dumps(inst))
    return str(path)


def test_splitmix_first_value():
    assert SplitMix64(0).next() == 0xE220A8397B1DCDAF


def test_gen_is_deterministic(capsys):
    for p in PROBLEMS:
        a = run(capsys, "gen", p, "--seed", "17", "--k", "1")
        b = run(capsys, "gen", p, "--seed", "17", "--k", "1")
        assert a == b and a[0] == 0


@pytest.mark.parametrize("problem", PROBLEMS)
def test_gen_round_trips(problem):
    for seed in range(25):
        inst = generate(problem, SplitMix64(seed), n=5, m=4, k=1 + seed % 3)
        again = validate(json.loads(instances.dumps(inst)))
        assert again == inst


def test_gen_rejects_bad_sizes(capsys):
    assert run(capsys, "gen", "partition", "--n", "2")[0] == 1
    assert run(capsys, "gen", "kcenter2d", "--k", "5")[0] == 1


def test_encode_decode():
    assert encode(Fraction(15, 2)) == {"num": 15, "den": 2}
    assert encode(Fraction(4, 2)) == 2
    assert encode(7.5) == "7.500000000"
    assert decode({"num": 15, "den": 2}) == Fraction(15, 2)


def test_solve_interval_cover(tmp_path, capsys):
    f = write(tmp_path, {"problem": "cover1d-intervals", "points": [[1, 1], [3, 1]],
                         "intervals": [[0, 2, 5], [2, 4, 3], [0, 4, 7]]})
    code, out = run(capsys, "solve", f)
    res = json.loads(out)
    assert code == 0 and res["status"] == "ok" and res["value"] == 7 and res["witness"] == [2]


def test_solve_kcenter_exact_and_float(tmp_path, capsys):
    f = write(tmp_path, {"problem": "kcenter1d", "points": [[0, 1], [10, 3]], "L": 0, "k": 1})
    assert json.loads(run(capsys, "solve", f)[1])["value"] == {"den": 2, "num": 15}
    res = json.loads(run(capsys, "solve", f, "--mode", "float")[1])
    assert float(res["value"]) == pytest.approx(7.5, rel=1e-9)
    assert json.loads(run(capsys, "solve", f, "--oracle")[1])["value"] == {"den": 2, "num": 15}


def test_solve_errors(tmp_path, capsys):
    bad = write(tmp_path, {"problem": "cover1d-intervals", "points": [],
                           "intervals": [[3, 1, 1]]})
    code, out = run(capsys, "solve", bad)
    assert code == 1 and json.loads(out)["status"] == "error"
    extra = write(tmp_path, {"problem": "kcenter1d", "points": [], "L": 0, "k": 1, "x": 1})
    assert run(capsys, "solve", extra)[0] == 1
    assert run(capsys, "solve", str(tmp_path / "missing.json"))[0] == 1
    weighted = write(tmp_path, {"problem": "kcenter2d", "points": [[0, 0, 3]],
                                "k": 1, "lx": 1, "ly": 1})
    assert run(capsys, "solve", weighted)[0] == 1


def test_solve_infeasible(tmp_path, capsys):
    f = write(tmp_path, {"problem": "cover1d-points", "points": [[1, 1]],
                         "intervals": [[7, 8, 1]]})
    code, out = run(capsys, "solve", f)
    assert code == 2 and json.loads(out)["status"] == "infeasible"
    assert "value" not in json.loads(out)


def test_solve_output_is_canonical(tmp_path, capsys):
    inst = generate("cover2d-maxweight", SplitMix64(5), n=6, k=3)
    f = write(tmp_path, inst)
    outs = []
    for _ in range(2):
        res = json.loads(run(capsys, "solve", f)[1])
        res.pop("elapsed_ms")
        outs.append(res)
    assert outs[0] == outs[1]


def test_check_passes(capsys):
    code, out = run(capsys, "check", "cover1d-intervals", "--count", "200", "--seed", "42")
    assert code == 0 and "200/200" in out


def test_check_rejects_caps_over_limit(capsys):
    assert run(capsys, "check", "cover2d-maxweight", "--caps", "n=9")[0] == 1
    assert run(capsys, "check", "kcenter1d", "--caps", "bogus=1")[0] == 1


def test_check_reports_injected_fault(capsys):
    def broken(inst, mode="exact"):
        sol, name = instances.run_solver(inst, mode)
        if sol.feasible:
            sol = Solution(OK, sol.value + 1, sol.witness)
        return sol, name

    code, out = run(capsys, "check", "cover1d-intervals", "--count", "20", solver=broken)
    assert code == 3 and "MISMATCH" in out
    # the counterexample is printed in full
    assert '"problem": "cover1d-intervals"' in out


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "geocover", "gen", "kcenter2d", "--seed", "1"],
                         capture_output=True, text=True, check=True).stdout
    assert json.loads(out)["problem"] == "kcenter2d"
