import json
import os
import subprocess
import sys

import pytest

from hopfgal import cli

PKG_SRC = os.path.join(os.path.dirname(__file__), "..", "src")


def run_cli(args, env=None):
    full_env = dict(os.environ)
    full_env["PYTHONPATH"] = PKG_SRC + os.pathsep + full_env.get("PYTHONPATH", "")
    if env:
        full_env.update(env)
    proc = subprocess.run(
        [sys.executable, "-m", "hopfgal.cli", *args],
        capture_output=True,
        text=True,
        env=full_env,
    )
    return proc


def fx(fixtures, name):
    return str(fixtures / name)


# exit codes -----------------------------------------------------------------


def test_verify_ok(fixtures):
    proc = run_cli(["verify", fx(fixtures, "hopf_sweedler.json")])
    assert proc.returncode == 0
    assert "all axioms pass" in proc.stdout


def test_verify_corrupted_antipode(fixtures):
    proc = run_cli(["verify", fx(fixtures, "hopf_sweedler_bad_antipode.json")])
    assert proc.returncode == 1
    assert "antipode: FAIL" in proc.stdout
    assert "witness [2]" in proc.stdout


def test_verify_malformed_json(fixtures):
    proc = run_cli(["verify", fx(fixtures, "malformed.json")])
    assert proc.returncode == 2


def test_verify_algebra_level_corruption(fixtures):
    # 1 . x = 0 breaks the algebra axioms at construction; the verify
    # command reports the first failing check with its witness
    proc = run_cli(["verify", fx(fixtures, "hopf_bad_unit.json")])
    assert proc.returncode == 1
    assert "associativity: FAIL" in proc.stdout
    assert "witness [0, 1, 1]" in proc.stdout


def test_missing_file_is_input_error(fixtures):
    proc = run_cli(["verify", fx(fixtures, "does_not_exist.json")])
    assert proc.returncode == 2


def test_integrals_reports(fixtures):
    proc = run_cli(["integrals", fx(fixtures, "hopf_qc2.json")])
    assert proc.returncode == 0
    assert "left integral: 1 + s" in proc.stdout
    assert "semisimple: true" in proc.stdout
    proc = run_cli(["integrals", fx(fixtures, "hopf_sweedler.json")])
    assert "left integral: x + gx" in proc.stdout
    assert "semisimple: false" in proc.stdout
    proc = run_cli(["integrals", fx(fixtures, "hopf_f2c2.json")])
    assert "left integral: 1 + s" in proc.stdout
    assert "semisimple: false" in proc.stdout


def test_expectation_exit_codes(fixtures):
    assert run_cli(["tame", fx(fixtures, "ext_f4.json"), "--expect", "tame"]).returncode == 0
    assert run_cli(["tame", fx(fixtures, "ext_trivial.json"), "--expect", "tame"]).returncode == 1
    assert (
        run_cli(["galois", fx(fixtures, "ext_gaussian.json"), "--expect", "hopf-galois"]).returncode
        == 0
    )
    assert (
        run_cli(["galois", fx(fixtures, "ext_trivial.json"), "--expect", "neither"]).returncode
        == 0
    )


def test_homology_module_and_lattice(fixtures):
    proc = run_cli(["homology", fx(fixtures, "mod_trivial_f2c2.json")])
    assert "H_0 dimension: 1" in proc.stdout
    proc = run_cli(["homology", fx(fixtures, "mod_regular_sweedler.json")])
    assert "H_0 dimension: 0" in proc.stdout
    proc = run_cli(["homology", fx(fixtures, "lat_zi_qc2.json")])
    assert "invariant factors: [2]" in proc.stdout


def test_cyclic_pass_and_warning(fixtures):
    proc = run_cli(
        [
            "cyclic",
            fx(fixtures, "comodalg_graded_f3.json"),
            "--module",
            fx(fixtures, "mod_kc2_ayd_f3.json"),
            "--levels",
            "3",
        ]
    )
    assert proc.returncode == 0
    assert proc.stdout.count("cyclicity pass") == 4
    proc = run_cli(
        [
            "cyclic",
            fx(fixtures, "comodalg_graded_f3.json"),
            "--module",
            fx(fixtures, "mod_kc2_swap_f3.json"),
            "--levels",
            "1",
        ]
    )
    assert proc.returncode == 0  # informational failure for non-AYD coefficients
    assert "cyclicity FAIL" in proc.stdout
    assert "warning" in proc.stdout


def test_cyclic_resource_bound(fixtures):
    proc = run_cli(
        [
            "cyclic",
            fx(fixtures, "comodalg_graded_f3.json"),
            "--module",
            fx(fixtures, "mod_kc2_ayd_f3.json"),
            "--levels",
            "12",
        ]
    )
    assert proc.returncode == 3


def test_cyclic_resource_bound_four_dimensional(fixtures):
    # level 9 on a 4-dimensional S overflows the default bound before
    # any matrices are built
    proc = run_cli(
        [
            "cyclic",
            fx(fixtures, "comodalg_klein_f3.json"),
            "--module",
            fx(fixtures, "mod_kc2_ayd_f3.json"),
            "--levels",
            "9",
        ]
    )
    assert proc.returncode == 3
    proc = run_cli(
        [
            "cyclic",
            fx(fixtures, "comodalg_klein_f3.json"),
            "--module",
            fx(fixtures, "mod_kc2_ayd_f3.json"),
            "--levels",
            "1",
        ]
    )
    assert proc.returncode == 0


def test_env_var_dimension_bound(fixtures):
    proc = run_cli(
        [
            "cyclic",
            fx(fixtures, "comodalg_graded_f3.json"),
            "--module",
            fx(fixtures, "mod_kc2_ayd_f3.json"),
            "--levels",
            "2",
        ],
        env={"HOPFGAL_MAX_DIM": "8"},
    )
    assert proc.returncode == 3


def test_bar_shift_pass_and_precondition(fixtures):
    proc = run_cli(
        [
            "bar-shift",
            fx(fixtures, "ext_gaussian.json"),
            "--module",
            fx(fixtures, "smashmod_regular.json"),
            "--levels",
            "4",
        ]
    )
    assert proc.returncode == 0
    assert "dim B_n(S, M): [4, 8, 16, 32, 64]" in proc.stdout
    proc = run_cli(
        [
            "bar-shift",
            fx(fixtures, "ext_trivial.json"),
            "--module",
            fx(fixtures, "smashmod_regular.json"),
            "--levels",
            "2",
        ]
    )
    assert proc.returncode == 1
    assert "j : S#H -> End(S) bijective" in proc.stdout


def test_assoc_order_pipeline(fixtures):
    proc = run_cli(["assoc-order", fx(fixtures, "lat_zi_qc2.json"), "--candidates"])
    assert proc.returncode == 0
    assert "1/2*1 + 1/2*s" in proc.stdout
    assert "hopf order: true" in proc.stdout
    assert "tame: true" in proc.stdout
    assert "free generator: ['1', '1']" in proc.stdout
    proc = run_cli(["assoc-order", fx(fixtures, "lat_zi_qc2.json"), "--order", "group-ring"])
    assert "invariant factors: [2]" in proc.stdout
    proc = run_cli(
        ["assoc-order", fx(fixtures, "lat_zzeta3_qc2.json"), "--order", "group-ring"]
    )
    assert "tame: true" in proc.stdout


def test_assoc_order_inline_candidates(fixtures):
    proc = run_cli(
        ["assoc-order", fx(fixtures, "lat_zi_qc2.json"), "--candidates", "1,1"]
    )
    assert proc.returncode == 0
    assert "free generator: ['1', '1']" in proc.stdout


# determinism and round trips ---------------------------------------------------


ALL_COMMANDS = [
    ["verify", "hopf_sweedler.json"],
    ["verify", "hopf_qc2.json"],
    ["integrals", "hopf_sweedler.json"],
    ["tame", "ext_f4.json"],
    ["galois", "ext_gaussian.json"],
    ["homology", "mod_trivial_f2c2.json"],
    ["homology", "lat_zi_qc2.json"],
    ["cyclic", "comodalg_graded_f3.json", "--module", "mod_kc2_ayd_f3.json", "--levels", "2"],
    ["cyclic", "comodalg_graded_f3.json", "--module", "mod_kc2_swap_f3.json", "--levels", "1"],
    ["bar-shift", "ext_gaussian.json", "--module", "smashmod_algebra.json", "--levels", "3"],
    ["assoc-order", "lat_zi_qc2.json", "--candidates"],
]


def materialize(fixtures, command):
    return [a if not a.endswith(".json") else fx(fixtures, a) for a in command]


@pytest.mark.parametrize("command", ALL_COMMANDS, ids=lambda c: "-".join(c[:2]))
def test_json_reports_are_byte_identical_across_runs(fixtures, command):
    args = materialize(fixtures, command) + ["--json"]
    first = run_cli(args)
    second = run_cli(args)
    assert first.stdout == second.stdout
    assert first.stdout.endswith("\n")
    json.loads(first.stdout)  # canonical JSON parses


@pytest.mark.parametrize("command", ALL_COMMANDS, ids=lambda c: "-".join(c[:2]))
def test_human_text_round_trips_through_json(fixtures, command):
    args = materialize(fixtures, command)
    human = run_cli(args).stdout
    machine = run_cli(args + ["--json"]).stdout
    assert cli.render_human(json.loads(machine)) == human
