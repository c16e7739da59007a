import json

import pytest

from retset.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("argv, expected", [
    (["set", "window", "PS(5;-1;[1])", "130"], "0,4,24,124"),
    (["set", "classify", "PS(25;0;[1,1])"], "widely-p-normal-only"),
    (["set", "window", "AP(1,6)", "20"], "1,7,13,19"),
    (["set", "classify", "PS(5;-1;[1])"], "p-normal"),
    (["set", "canonical", "coset base=(0,0,0) rect=(0,0,0) req=[eq(1,2), double(3,1)]"],
     "[1*(1,1,2)]"),
    (["set", "intersect", "coset base=(0,0) rect=(0,0) req=[eq(1,2)]",
      "coset base=(0,0) rect=(0,0) req=[double(1,2)]"], "coset base=(0,0) rect=(0,0) req=[eq(1,2), double(1,2)]"),
])
def test_set_commands(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.strip() == expected


def test_set_diff_exit_codes(capsys):
    assert run(capsys, "set", "diff", "AP(0,2)", "AP(1,2)", "0", "50")[0] == 1
    assert run(capsys, "set", "diff", "PS(5;-1;[1])", "PS(5;-1;[1]) add{17}", "0", "100", "50")[0] == 0


def test_lemma56_command(capsys):
    code, out, _ = run(capsys, "set", "lemma56", "1", "-1", "0")
    d = json.loads(out)
    assert code == 0 and d["components"][0]["form"] == 4


def test_usage_errors(capsys):
    assert run(capsys, "set", "window", "PS(5;1;[1")[0] == 3
    assert run(capsys, "set", "window", "PS(5;1/3;[1])", "10")[0] == 3
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 3
    assert run(capsys, "scan")[0] == 3


def test_undecided_exit(capsys):
    assert run(capsys, "set", "window", "PS(5;0;[1|-1])", "10")[0] == 2


def test_scan_builtin(capsys, tmp_path):
    code, out, err = run(capsys, "scan", "--builtin", "torus", "--exact", "-N", "60")
    assert code == 0 and out.startswith("n,verdict,error_bound\n")
    assert "members: 2,26,50" in err
    prefix = str(tmp_path / "r")
    code, _, err = run(capsys, "scan", "--builtin", "example36", "-N", "30", "--out", prefix)
    assert code == 0 and "false-accept bound" in err
    rep = json.load(open(prefix + ".json"))
    assert {0, 1, 5, 25} <= set(rep["members"])
    first = open(prefix + ".json").read()
    run(capsys, "scan", "--builtin", "example36", "-N", "30", "--out", prefix)
    assert open(prefix + ".json").read() == first


def test_scan_files(capsys, tmp_path):
    from retset import configs
    g, v = tmp_path / "g.txt", tmp_path / "v.txt"
    g.write_text(configs.torus_group())
    v.write_text(configs.TORUS_EQUATIONS)
    code, out, _ = run(capsys, "scan", "--group", str(g), "--equations", str(v), "-N", "30")
    assert code == 0 and "26,probable-member" in out


def test_weak_field_is_usage_error(capsys):
    assert run(capsys, "scan", "--builtin", "example36", "-N", "100", "--field-degree", "2")[0] == 3


def test_verify_example36_small(capsys):
    code, out, _ = run(capsys, "verify-example36", "-N", "30")
    assert code == 0 and "verify-example36: PASS" in out


def test_verify_example36_negative_control(capsys):
    code, out, _ = run(capsys, "verify-example36", "-N", "0", "--corrupt")
    assert code == 1 and "failing_j=1" in out


def test_verify_counterexample_small(capsys):
    code, out, _ = run(capsys, "verify-counterexample", "-N", "700", "--n-max", "0")
    assert code == 0 and out.startswith("# Only the computable ingredients")
    code, out, _ = run(capsys, "verify-counterexample", "-N", "30", "--n-max", "0", "--corrupt")
    assert code == 1 and "failing_index=3" in out


def test_fset_command(capsys, tmp_path):
    from test_fsets import FILE
    f = tmp_path / "f.txt"
    f.write_text(FILE)
    code, out, _ = run(capsys, "fset", str(f))
    assert code == 0 and "req=[mult(1,2)]" in out
