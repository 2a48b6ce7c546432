"""Tests for the command line, configuration and the verification script."""

import json

import pytest

import main
import verify_paper
from constructions.policy import AsdPolicy
from utils.config_manager import ConfigManager
from utils.constants import (
    EXIT_DOMAIN_ERROR, EXIT_OK, EXIT_PARSE_ERROR, EXIT_POLICY_REJECTION, POLICY_ENV_VAR, RECIPE_DIR,
)


@pytest.fixture(autouse=True)
def _no_policy_env(monkeypatch):
    monkeypatch.delenv(POLICY_ENV_VAR, raising=False)


def _write(tmp_path, text, name="recipe.txt"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_eval_documented_recipe_json(capsys):
    code = main.main(["eval", str(RECIPE_DIR / "realize_1_0_-6.recipe"), "--json"])
    assert code == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert (data["c1_cubed"], data["c1c2"], data["c3"]) == (-48, 48, 48)
    assert data["todd"] == 2
    assert data["schema_version"] == 1


def test_eval_table_output(capsys):
    code = main.main(["eval", str(RECIPE_DIR / "cp2_blowup.recipe")])
    assert code == EXIT_OK
    out = capsys.readouterr().out
    assert "96" in out
    assert "provenance" in out


@pytest.mark.parametrize("name, expected", [
    ("realize_1_0_-6_kahler_side.recipe", [0, 24, 48]),
    ("twistor_k3.recipe", [0, 96, 48]),
    ("corollary.recipe", [24, 96, 54]),
])
def test_shipped_recipes(capsys, name, expected):
    assert main.main(["eval", str(RECIPE_DIR / name), "--json"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert [data["c1_cubed"], data["c1c2"], data["c3"]] == expected


def test_eval_parse_error_exit_code(tmp_path, capsys):
    path = _write(tmp_path, "emit twistor(blowup(k3_family(1), 1))")
    assert main.main(["eval", path]) == EXIT_PARSE_ERROR
    assert "line 1" in capsys.readouterr().err


def test_eval_policy_rejection_exit_code(capsys):
    path = str(RECIPE_DIR / "catalog_3_unknown_k0.recipe")
    assert main.main(["eval", path]) == EXIT_POLICY_REJECTION
    assert "k0(3) unknown" in capsys.readouterr().err


def test_eval_assume_policy(capsys):
    path = str(RECIPE_DIR / "catalog_3_unknown_k0.recipe")
    assert main.main(["eval", path, "--policy", "assume", "--json"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["warnings"]


def test_eval_policy_from_environment(monkeypatch, capsys):
    monkeypatch.setenv(POLICY_ENV_VAR, "assume")
    path = str(RECIPE_DIR / "catalog_3_unknown_k0.recipe")
    assert main.main(["eval", path]) == EXIT_OK
    assert "assume" in capsys.readouterr().out


def test_eval_bad_escape_exit_code(tmp_path, capsys):
    path = _write(tmp_path, 'emit twistor(surface("\\x", 24, -16, spin, kahler))')
    assert main.main(["eval", path]) == EXIT_PARSE_ERROR
    assert "line 1" in capsys.readouterr().err


def test_eval_missing_file():
    assert main.main(["eval", "no/such/recipe"]) == EXIT_DOMAIN_ERROR


def test_format_command(tmp_path, capsys):
    path = _write(tmp_path, "let   Z=k3_family( 2 )  # comment\nemit blowup(Z,1)")
    assert main.main(["format", path]) == EXIT_OK
    assert capsys.readouterr().out == "let Z = k3_family(2)\nemit blowup(Z, 1)\n"


def test_realize_worked_instance(capsys):
    code = main.main(["realize", "--m", "1", "--n", "0", "--ntilde", "-6", "--json"])
    assert code == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert (data["k"], data["l"]) == (14, 6)
    assert [data["J"]["c1_cubed"], data["J"]["c1c2"], data["J"]["c3"]] == [0, 24, 48]
    assert [data["J_tilde"]["c1_cubed"], data["J_tilde"]["c1c2"]] == [-48, 48]


def test_realize_table(capsys):
    assert main.main(["realize", "--m", "0", "--n", "2", "--ntilde", "-4"]) == EXIT_OK
    assert "k = 6" in capsys.readouterr().out


def test_realize_constraint_violation(capsys):
    code = main.main(["realize", "--m", "1", "--n", "0", "--ntilde", "-5"])
    assert code == EXIT_DOMAIN_ERROR
    assert "max admissible n_tilde: -6" in capsys.readouterr().err


def test_realize_unknown_k0(capsys):
    code = main.main(["realize", "--m", "3", "--n", "0", "--ntilde", "-10"])
    assert code == EXIT_POLICY_REJECTION


def test_threshold_cp3(capsys):
    code = main.main([
        "threshold", "--a3", "1", "--a2b", "4", "--ab2", "16", "--b3", "64",
        "--ap1", "4", "--bp1", "16", "--betti-sum", "4", "--json",
    ])
    assert code == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["threshold"] == 5
    assert data["leading_coefficient"] == "1/6"
    assert data["todd_cubic"] == ["1", "11/6", "1", "1/6"]


def test_threshold_table(capsys):
    args = ["threshold", "--a3", "6", "--a2b", "0", "--ab2", "0", "--b3", "0",
            "--ap1", "0", "--bp1", "0", "--betti-sum", "8"]
    assert main.main(args) == EXIT_OK
    assert "N = 2" in capsys.readouterr().out


def test_threshold_without_cubic_term():
    args = ["threshold", "--a3", "0", "--a2b", "1", "--ab2", "0", "--b3", "0",
            "--ap1", "0", "--bp1", "0", "--betti-sum", "1"]
    assert main.main(args) == EXIT_DOMAIN_ERROR


def test_verbose_flag(capsys):
    assert main.main(["--verbose", "eval", str(RECIPE_DIR / "twistor_k3.recipe"), "--json"]) == EXIT_OK


def test_verify_paper_command(capsys):
    assert main.main(["verify-paper"]) == EXIT_OK
    captured = capsys.readouterr()
    out = captured.out
    assert "WARNING" not in captured.err
    assert "ALL CHECKS PASSED" in out
    assert "FAILED" not in out


def test_verify_checks_individually(capsys):
    for name, check in verify_paper.CHECKS:
        assert check(), name


# ---------------------------------------------------------------- configuration

def test_resolve_policy_precedence(tmp_path):
    manager = ConfigManager(tmp_path)
    assert manager.resolve_policy(environ={}) is AsdPolicy.KNOWN_TABLE

    manager.save_config({"policy": "reject"})
    assert manager.resolve_policy(environ={}) is AsdPolicy.REJECT_UNKNOWN

    env = {POLICY_ENV_VAR: "assume"}
    assert manager.resolve_policy(environ=env) is AsdPolicy.ASSUME
    assert manager.resolve_policy("known", environ=env) is AsdPolicy.KNOWN_TABLE


def test_resolve_policy_rejects_unknown_names(tmp_path):
    with pytest.raises(ValueError):
        ConfigManager(tmp_path).resolve_policy(environ={POLICY_ENV_VAR: "maybe"})


def test_config_save_load_list(tmp_path):
    manager = ConfigManager(tmp_path)
    assert manager.load_config() is None
    manager.save_config(ConfigManager.create_config_dict(AsdPolicy.ASSUME), "assume.json")
    assert manager.load_config("assume.json") == {"policy": "assume"}
    assert manager.list_configs() == ["assume.json"]


def test_bad_policy_in_environment_is_a_usage_error(monkeypatch):
    monkeypatch.setenv(POLICY_ENV_VAR, "maybe")
    assert main.main(["eval", str(RECIPE_DIR / "twistor_k3.recipe")]) == EXIT_PARSE_ERROR


def test_config_command_saves_and_lists(tmp_path, capsys):
    code = main.main(["config", "--config-dir", str(tmp_path), "--set-policy", "assume", "--list"])
    assert code == EXIT_OK
    out = capsys.readouterr().out
    assert "default_config.json" in out
    assert "effective policy: assume" in out
    assert ConfigManager(tmp_path).load_config() == {"policy": "assume"}


def test_config_command_keeps_other_keys(tmp_path, capsys):
    ConfigManager(tmp_path).save_config({"policy": "known", "note": "lab machine"})
    assert main.main(["config", "--config-dir", str(tmp_path), "--set-policy", "reject"]) == EXIT_OK
    assert ConfigManager(tmp_path).load_config() == {"policy": "reject", "note": "lab machine"}
