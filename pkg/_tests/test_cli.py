"""End-to-end runs of the command-line front door."""
from __future__ import annotations

import json

import pytest

from z2kit.cli import RunConfig, build_parser, main
from z2kit.exactla import IntMatrix
from z2kit.resolve import Presentation
from z2kit.staralg import FLIP_TABLE


def write_json(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload), encoding="utf-8")
    return str(path)


def matrix_file(tmp_path, rows, name="s.json"):
    return write_json(tmp_path, name, IntMatrix.from_rows(rows).to_payload())


def test_multiplicities_text(tmp_path, capsys):
    path = matrix_file(tmp_path, [[1, 0], [1, -1]])

    code = main(["multiplicities", path])

    out = capsys.readouterr().out.splitlines()
    assert code == 0
    assert out[0] == "n1=0 n2=0 n3=1"
    assert out[1:] == [
        "n = n1 + n2 + 2*n3: 2 = 2",
        "trace(S) = n1 - n2: 0 = 0",
        "n3 = rank_F2(I + S): 1 = 1",
    ]


def test_multiplicities_json(tmp_path, capsys):
    path = matrix_file(tmp_path, [[-1, 0, 0], [0, -1, 0], [0, 0, -1]])

    code = main(["--format", "json", "multiplicities", path])

    payload = json.loads(capsys.readouterr().out)
    assert code == 0
    assert list(payload) == ["n1", "n2", "n3", "n", "trace", "identities"]
    assert (payload["n1"], payload["n2"], payload["n3"]) == (0, 3, 0)
    assert all(item["holds"] for item in payload["identities"])


def test_not_an_involution_exits_with_two(tmp_path, capsys):
    path = matrix_file(tmp_path, [[1, 1], [0, 1]])

    code = main(["multiplicities", path])

    assert code == 2
    assert "not an involution" in capsys.readouterr().err


def test_non_square_matrix_is_a_format_error(tmp_path, capsys):
    path = matrix_file(tmp_path, [[1, 0, 0], [0, 1, 0]])

    assert main(["multiplicities", path]) == 1
    assert capsys.readouterr().err.startswith("error: ")


@pytest.mark.parametrize(
    ("content", "message"),
    [
        (None, "Cannot read"),
        ("{not json", "is not valid JSON"),
        ('{"rows": 1}', "Invalid matrix payload"),
    ],
)
def test_unreadable_inputs_exit_with_one(tmp_path, capsys, content, message):
    path = tmp_path / "input.json"
    if content is not None:
        path.write_text(content, encoding="utf-8")

    code = main(["decompose", str(path)])

    assert code == 1
    assert message in capsys.readouterr().err


def test_decompose_json(tmp_path, capsys):
    path = matrix_file(tmp_path, [[1, 0], [1, -1]])

    code = main(["--format", "json", "decompose", path])

    payload = json.loads(capsys.readouterr().out)
    assert code == 0
    assert list(payload) == ["n1", "n2", "n3", "P", "verified"]
    assert payload["verified"] is True
    assert payload["P"]["rows"] == 2


def test_decompose_output_is_deterministic(tmp_path, capsys):
    path = matrix_file(tmp_path, [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 2], [0, 0, 0, -1]])

    main(["--seed", "3", "decompose", path])
    first = capsys.readouterr().out
    main(["--seed", "3", "decompose", path])
    second = capsys.readouterr().out

    assert first == second
    assert "verified: yes" in first


def test_resolve_json(tmp_path, capsys):
    z3 = Presentation(generators=1, relations=[[3]], gamma=[[-1]])
    path = write_json(tmp_path, "z3.json", z3.to_payload())

    code = main(["--format", "json", "resolve", path])

    payload = json.loads(capsys.readouterr().out)
    assert code == 0
    assert payload["certificate"]["multiplicities"] == {"n1": 0, "n2": 0, "n3": 1}
    assert payload["verification"]["passed"] is True


def test_resolve_graded_text(tmp_path, capsys):
    z3 = Presentation(generators=1, relations=[[3]], gamma=[[-1]])
    z = Presentation(generators=1, relations=[[0]], gamma=[[1]])
    path = write_json(tmp_path, "graded.json", {"even": z3.to_payload(), "odd": z.to_payload()})

    code = main(["resolve", path])

    out = capsys.readouterr().out
    assert code == 0
    assert out.startswith("even: n1=0 n2=0 n3=1\nodd: n1=0 n2=1 n3=0\n")
    assert "all checks passed" in out


def test_resolve_invalid_presentation(tmp_path, capsys):
    bad = {"generators": 1, "relations": {"rows": 1, "cols": 0, "entries": [[]]}, "gamma": [[2]]}
    path = write_json(tmp_path, "bad.json", bad)

    assert main(["resolve", path]) == 2
    assert capsys.readouterr().err.startswith("error: ")


def test_star_eval_text(tmp_path, capsys):
    path = tmp_path / "exprs.txt"
    path.write_text("s[1] s[1]* + s[2] s[2]*\n# orthogonality\ns[1]* s[2]\n", encoding="utf-8")

    code = main(["star-eval", str(path)])

    assert code == 0
    assert capsys.readouterr().out.splitlines() == [
        "# r=1 n=2",
        "s[1] s[1]* + s[2] s[2]* = e[1,1]",
        "s[1]* s[2] = 0",
    ]


def test_star_eval_reports_the_shared_algebra(tmp_path, capsys):
    path = tmp_path / "exprs.txt"
    path.write_text("s[1] s[1]* + s[2] s[2]*\ns[3]\n", encoding="utf-8")

    assert main(["star-eval", str(path)]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "# r=1 n=3"
    assert out[1] == "s[1] s[1]* + s[2] s[2]* = e[1,1] s[1] s[1]* + e[1,1] s[2] s[2]*"

    assert main(["--format", "json", "star-eval", str(path), "-n", "2"]) == 2
    assert "line 2:" in capsys.readouterr().err


def test_star_eval_json_with_explicit_dimensions(tmp_path, capsys):
    path = tmp_path / "exprs.txt"
    path.write_text("1\n\ns[1] s[1]* s[1]\n", encoding="utf-8")

    code = main(["--format", "json", "star-eval", str(path), "-r", "2", "-n", "3"])

    payload = json.loads(capsys.readouterr().out)
    results = payload["results"]
    assert (payload["matrix_size"], payload["cuntz_index"]) == (2, 3)
    assert code == 0
    assert [item["line"] for item in results] == [1, 3]
    assert results[0] == {"line": 1, "input": "1", "normal_form": "e[1,1] + e[2,2]", "terms": 2}
    assert results[1]["normal_form"] == "e[1,1] s[1] + e[2,2] s[1]"


def test_star_eval_syntax_error(tmp_path, capsys):
    path = tmp_path / "exprs.txt"
    path.write_text("s[1]\ne[1,\n", encoding="utf-8")

    assert main(["star-eval", str(path)]) == 1
    assert capsys.readouterr().err.startswith("error: line 2:")


def test_verify_hom_builtin(capsys):
    code = main(["--format", "json", "--workers", "2", "verify-hom", "example5"])

    payload = json.loads(capsys.readouterr().out)
    assert code == 0
    assert payload["passed"] is True
    assert payload["mutation"] is None
    assert len(payload["involutive"]["checks"]) == 9


def test_verify_hom_mutation_exits_with_three(capsys):
    code = main(["verify-hom", "example5", "--mutate", "swap-v2-v3"])

    out = capsys.readouterr().out
    assert code == 3
    assert "FAIL" in out


def test_verify_hom_map_file(tmp_path, capsys):
    path = write_json(tmp_path, "flip.json", FLIP_TABLE)

    assert main(["verify-hom", path]) == 0
    assert capsys.readouterr().out.count("all checks passed") == 2


def test_verify_hom_unknown_target(capsys):
    assert main(["verify-hom", "example6"]) == 1
    assert "Cannot read example6" in capsys.readouterr().err


def test_invalid_option_values(tmp_path, capsys):
    path = matrix_file(tmp_path, [[1]])

    assert main(["--workers", "0", "multiplicities", path]) == 1
    assert "Invalid option workers" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ["factor"],
        ["multiplicities"],
        ["--workers", "two", "verify-hom", "example5"],
        ["verify-hom", "x", "--bogus"],
    ],
)
def test_usage_errors_exit_with_one(argv, capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(argv)

    assert excinfo.value.code == 1
    assert "usage: z2kit" in capsys.readouterr().err


def test_global_flags_after_the_command(capsys):
    code = main(["verify-hom", "example5", "--format", "json", "--workers", "2"])

    assert code == 0
    assert json.loads(capsys.readouterr().out)["passed"] is True


def test_flags_before_the_command_survive_the_subparser():
    args = build_parser().parse_args(["--seed", "4", "decompose", "s.json"])

    assert args.seed == 4
    assert args.format is None


def test_run_config_prefers_flags_over_settings(monkeypatch):
    monkeypatch.setenv("Z2KIT_SEED", "9")
    monkeypatch.setenv("Z2KIT_WORKERS", "4")
    args = build_parser().parse_args(["--seed", "2", "decompose", "s.json"])

    run = RunConfig.from_args(args)

    assert run.seed == 2
    assert run.workers == 4
    assert run.inputs == ["s.json"]
