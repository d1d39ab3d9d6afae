import json

import pytest

from higher_hochschild.cli import main
from higher_hochschild.simplicial import standard_model


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out), out


def test_compute_circle_dual(capsys):
    code, rep, _ = run_json(capsys, "compute", "--space", "circle_minimal",
                            "--algebra", "dual_numbers", "--window", "-4")
    assert code == 0
    assert rep["degrees"] == {"0": 2, "-1": 1, "-2": 1, "-3": 1, "-4": 1}
    assert rep["trusted_min"] <= -4


def test_compute_point_exterior(capsys):
    code, rep, _ = run_json(capsys, "compute", "--space", "point", "--algebra", "exterior1",
                            "--window", "-3")
    assert code == 0
    assert [rep["degrees"][str(n)] for n in range(0, -4, -1)] == [1, 1, 0, 0]


def test_compare_circles(capsys):
    code, out, _ = run(capsys, "compare", "--a", "circle_minimal", "--b", "circle_two_cell",
                       "--algebra", "dual_numbers", "--window", "-3")
    assert code == 0
    assert "degree -3: PASS" in out
    assert "classical homological HH_n is degree -n" in out


def test_compare_mismatch_exits_1(capsys):
    code, rep, _ = run_json(capsys, "compare", "--a", "circle_minimal", "--b", "point",
                            "--algebra", "dual_numbers", "--window", "-2")
    assert code == 1
    assert rep["verdicts"]["degree 0"] is True
    assert rep["verdicts"]["degree -1"] is False


@pytest.mark.parametrize("argv", [
    ["compute", "--space", "klein_bottle", "--algebra", "dual_numbers", "--window", "-2"],
    ["compute", "--space", "point", "--algebra", "nope", "--window", "-2"],
    ["compute", "--space", "point", "--algebra", "dual_numbers", "--window", "2"],
    ["compute", "--space", "point", "--algebra", "dual_numbers"],
    ["frobnicate"],
    ["cech", "--space", "circle_minimal", "--cover", "two_arc", "--algebra", "dual_numbers",
     "--window", "-2"],
])
def test_usage_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        code = main(argv)
        raise SystemExit(code)
    assert exc.value.code == 2


def test_basis_cap_exits_3(capsys, monkeypatch):
    monkeypatch.setenv("HH_MAX_BASIS", "1000")
    code, _, err = run(capsys, "compute", "--space", "square", "--algebra", "dual_numbers",
                       "--window", "-3")
    assert code == 3
    assert "basis cap" in err


def test_json_round_trip_and_determinism(capsys):
    argv = ["compute", "--space", "sphere(2)", "--algebra", "koszul", "--window", "-3", "--json"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    assert json.dumps(json.loads(first), indent=2) + "\n" == first


def test_text_output_is_deterministic(capsys):
    argv = ["compare", "--a", "circle_minimal", "--b", "circle_two_cell", "--algebra", "exterior1",
            "--window", "-2"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_ring_and_representatives(capsys):
    code, rep, _ = run_json(capsys, "compute", "--space", "point", "--algebra", "exterior1",
                            "--window", "-2", "--ring", "--representatives")
    assert code == 0
    assert len(rep["ring_labels"]) == 2
    assert rep["ring"]["1*1"] == {}
    assert set(rep["representatives"]) == {"0", "-1"}
    code, out, _ = run(capsys, "compute", "--space", "point", "--algebra", "exterior1",
                       "--window", "-2", "--ring")
    assert "product 1*1 = {}" in out


def test_ring_with_module_is_usage_error(capsys):
    code, _, _ = run(capsys, "compute", "--space", "circle_minimal", "--algebra", "dual_numbers",
                     "--module", "regular", "--window", "-2", "--ring")
    assert code == 2


def test_module_coefficients(capsys):
    code, rep, _ = run_json(capsys, "compute", "--space", "circle_minimal",
                            "--algebra", "dual_numbers", "--module", "augmentation",
                            "--window", "-3")
    assert code == 0
    assert rep["degrees"]["0"] == 1


def test_json_inputs(capsys, tmp_path):
    space = tmp_path / "s1.json"
    space.write_text(json.dumps(standard_model("circle_minimal").to_json()))
    alg = tmp_path / "a.json"
    alg.write_text(json.dumps({"basis": [{"name": "1", "degree": 0}, {"name": "t", "degree": 0}],
                               "unit": "1", "product": []}))
    code, rep, _ = run_json(capsys, "compute", "--space", str(space), "--algebra", str(alg),
                            "--window", "-3")
    assert code == 0
    assert rep["degrees"] == {"0": 2, "-1": 1, "-2": 1, "-3": 1}
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, _ = run(capsys, "compute", "--space", str(bad), "--algebra", "dual_numbers",
                     "--window", "-2")
    assert code == 2


def test_cech_commands(capsys, tmp_path):
    code, rep, _ = run_json(capsys, "cech", "--space", "circle_two_cell", "--cover", "single",
                            "--algebra", "dual_numbers", "--window", "-2", "--tuple-cap", "4")
    assert code == 0
    assert all(rep["verdicts"].values())
    cover = tmp_path / "cover.json"
    cover.write_text(json.dumps({"opens": {"U1": ["x.[01]"], "U2": ["y.[01]"]}}))
    code, rep, _ = run_json(capsys, "cech", "--space", "circle_two_cell", "--cover", str(cover),
                            "--algebra", "dual_numbers", "--window", "-2", "--tuple-cap", "4")
    assert code == 1
    assert rep["verdicts"]["degree 0"] is True


def test_bar_command(capsys):
    code, rep, _ = run_json(capsys, "bar", "--algebra", "dual_numbers", "--window", "-3",
                            "--cap", "6")
    assert code == 0
    assert rep["degrees"] == {"0": 2, "-1": 1, "-2": 1, "-3": 1}
    assert rep["verdicts"]["periodic resolution agrees"] is True


def test_check_command(capsys):
    code, rep, _ = run_json(capsys, "check", "--space", "circle_two_cell", "--algebra", "koszul",
                            "--window", "-3", "--samples", "5", "--normalized")
    assert code == 0
    assert all(rep["verdicts"].values())
