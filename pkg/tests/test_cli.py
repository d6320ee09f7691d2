import json
import math

import pytest

from ewlgames.cli import ConfigError, main, parse_angle, parse_steps
from ewlgames.output import BAYES_COLUMNS, TWO_PLAYER_COLUMNS

PI = math.pi


def run(*argv):
    return main(list(argv))


def read_rows(path):
    lines = path.read_text().strip().split("\n")
    return lines[0].split(","), [ln.split(",") for ln in lines[1:]]


class TestAngleParsing:
    @pytest.mark.parametrize(
        "text,expected",
        [
            ("pi", PI),
            ("pi/8", PI / 8),
            ("2pi", 2 * PI),
            ("3pi/4", 3 * PI / 4),
            ("2*pi/3", 2 * PI / 3),
            ("0.75", 0.75),
            (" PI / 2 ", PI / 2),
        ],
    )
    def test_forms(self, text, expected):
        assert parse_angle(text) == pytest.approx(expected, abs=1e-15)

    def test_garbage_rejected(self):
        with pytest.raises(ConfigError):
            parse_angle("tau/2")

    def test_steps(self):
        steps = parse_steps("pi, pi/2, pi/2")
        assert steps.astuple() == pytest.approx((PI, PI / 2, PI / 2))

    def test_steps_arity(self):
        with pytest.raises(ConfigError):
            parse_steps("pi,pi")


class TestSolve:
    def test_classical_dilemma(self, tmp_path):
        out = tmp_path / "eq.csv"
        assert run("solve", "--game", "prisoners_dilemma", "--gamma", "0", "--out", str(out)) == 0
        header, rows = read_rows(out)
        assert header == TWO_PLAYER_COLUMNS
        assert len(rows) == 16
        assert all(r[10] == "1" and r[11] == "1" for r in rows)

    def test_maximal_entanglement_header_only(self, tmp_path):
        out = tmp_path / "eq.csv"
        assert run("solve", "--game", "prisoners_dilemma", "--gamma", "pi/2", "--out", str(out)) == 0
        header, rows = read_rows(out)
        assert header == TWO_PLAYER_COLUMNS and rows == []

    def test_unknown_game_exits_1_listing_names(self, tmp_path, capsys):
        code = run("solve", "--game", "nope", "--gamma", "0", "--out", str(tmp_path / "x.csv"))
        assert code == 1
        err = capsys.readouterr().err
        assert "prisoners_dilemma" in err and "matching_pennies" in err

    def test_out_of_range_gamma_exits_1(self, tmp_path):
        assert run("solve", "--game", "prisoners_dilemma", "--gamma", "2pi", "--out", str(tmp_path / "x.csv")) == 1

    def test_json_format(self, tmp_path):
        out = tmp_path / "eq.json"
        assert (
            run(
                "solve", "--game", "prisoners_dilemma", "--gamma", "0",
                "--out", str(out), "--format", "json",
            )
            == 0
        )
        payload = json.loads(out.read_text())
        assert payload["metadata"]["command"] == "solve"
        assert payload["metadata"]["grid_size"] == 8
        assert len(payload["records"]) == 16

    def test_unwritable_out_exits_2(self):
        assert run("solve", "--game", "prisoners_dilemma", "--gamma", "0", "--out", "/nonexistent/dir/x.csv") == 2

    def test_missing_catalogue_exits_2(self, tmp_path):
        code = run(
            "solve", "--game", "prisoners_dilemma", "--gamma", "0",
            "--catalogue", str(tmp_path / "missing.ini"), "--out", str(tmp_path / "x.csv"),
        )
        assert code == 2

    def test_custom_catalogue(self, tmp_path):
        cat = tmp_path / "games.ini"
        cat.write_text("[coordination]\npayoff_a = 1,0,0,1\npayoff_b = 1,0,0,1\n")
        out = tmp_path / "eq.csv"
        code = run(
            "solve", "--game", "coordination", "--gamma", "0",
            "--catalogue", str(cat), "--out", str(out),
        )
        assert code == 0
        _, rows = read_rows(out)
        assert len(rows) > 0


class TestUsageErrors:
    def test_no_subcommand_exits_1(self):
        assert run() == 1

    def test_unknown_flag_exits_1(self):
        assert run("solve", "--frobnicate") == 1

    def test_missing_required_option_exits_1(self, capsys):
        assert run("solve", "--gamma", "0", "--out", "x.csv") == 1
        assert "--game" in capsys.readouterr().err


class TestSweep:
    def test_csv_and_plot(self, tmp_path):
        out = tmp_path / "sweep.csv"
        plot = tmp_path / "sweep.svg"
        code = run(
            "sweep", "--game", "prisoners_dilemma", "--gamma-grid", "9",
            "--out", str(out), "--plot", str(plot),
        )
        assert code == 0
        header, rows = read_rows(out)
        assert header == TWO_PLAYER_COLUMNS
        assert rows[0][0] == "0"
        assert plot.read_text().startswith("<svg")

    def test_config_file_with_flag_override(self, tmp_path):
        cfg = tmp_path / "run.ini"
        cfg.write_text(
            "[run]\ngame = prisoners_dilemma\ngamma_grid = 5\n"
            f"out = {tmp_path / 'cfg.csv'}\nformat = csv\n"
        )
        assert run("sweep", "--config", str(cfg)) == 0
        assert (tmp_path / "cfg.csv").exists()
        # flag overrides the config file's output path
        assert run("sweep", "--config", str(cfg), "--out", str(tmp_path / "flag.csv")) == 0
        assert (tmp_path / "flag.csv").exists()

    def test_config_unknown_key_exits_1(self, tmp_path, capsys):
        cfg = tmp_path / "run.ini"
        cfg.write_text("[run]\ngame = prisoners_dilemma\nwibble = 3\n")
        assert run("sweep", "--config", str(cfg), "--out", str(tmp_path / "x.csv")) == 1
        assert "wibble" in capsys.readouterr().err


class TestBayesSweep:
    def test_boundary_rows_project_onto_two_player(self, tmp_path):
        bayes_out = tmp_path / "bayes.csv"
        two_out = tmp_path / "two.csv"
        assert (
            run(
                "bayes-sweep", "--game", "prisoners_dilemma", "--game2", "deadlock",
                "--gamma-grid", "5", "--p-grid", "3", "--out", str(bayes_out),
            )
            == 0
        )
        assert (
            run("sweep", "--game", "prisoners_dilemma", "--gamma-grid", "5", "--out", str(two_out))
            == 0
        )
        bh, brows = read_rows(bayes_out)
        th, trows = read_rows(two_out)
        assert bh == BAYES_COLUMNS
        projected = {
            (r[0], r[3], r[4], r[15], r[16]) for r in brows if r[1] == "1"
        }
        two = {(r[0], r[2], r[3], r[10], r[11]) for r in trows}
        assert projected == two

    def test_requires_game2(self, capsys):
        assert run("bayes-sweep", "--game", "prisoners_dilemma", "--out", "x.csv") == 1
        assert "--game2" in capsys.readouterr().err


class TestStrategies:
    def test_coarse_grid_rows(self, capsys):
        assert run("strategies", "--steps", "pi,pi/2,pi/2") == 0
        lines = capsys.readouterr().out.strip().split("\n")
        assert lines[0] == "index,theta,phi,alpha"
        assert len(lines) == 1 + 8

    def test_1824_rows_to_file(self, tmp_path):
        out = tmp_path / "strategies.csv"
        assert run("strategies", "--steps", "pi/8,pi/8,pi/8", "--out", str(out)) == 0
        assert len(out.read_text().strip().split("\n")) == 1 + 1824

    def test_7968_rows_to_file(self, tmp_path):
        out = tmp_path / "strategies.csv"
        assert run("strategies", "--steps", "pi/32,pi/8,pi/8", "--out", str(out)) == 0
        assert len(out.read_text().strip().split("\n")) == 1 + 7968

    def test_bad_steps_exit_1(self):
        assert run("strategies", "--steps", "0,pi,pi") == 1


class TestFlagPlumbing:
    def test_threads_and_epsilon_flags(self, tmp_path):
        serial = tmp_path / "serial.csv"
        threaded = tmp_path / "threaded.csv"
        base = ["sweep", "--game", "stag_hunt", "--gamma-grid", "5", "--steps", "pi/4,pi/2,pi/2"]
        assert run(*base, "--threads", "1", "--epsilon", "1e-9", "--out", str(serial)) == 0
        assert run(*base, "--threads", "4", "--epsilon", "1e-9", "--out", str(threaded)) == 0
        assert serial.read_bytes() == threaded.read_bytes()

    def test_module_entry_point(self, tmp_path):
        import subprocess
        import sys

        proc = subprocess.run(
            [sys.executable, "-m", "ewlgames", "--version"], capture_output=True, text=True
        )
        assert proc.returncode == 0
        assert "ewlgames" in proc.stdout

    def test_identical_runs_are_byte_identical(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        base = [
            "sweep", "--game", "prisoners_dilemma", "--gamma-grid", "9",
            "--format", "json",
        ]
        assert run(*base, "--out", str(a)) == 0
        assert run(*base, "--out", str(b)) == 0
        assert a.read_bytes() == b.read_bytes()


class TestAnalyze:
    @pytest.fixture()
    def sweep_csv(self, tmp_path):
        out = tmp_path / "sweep.csv"
        assert (
            run("sweep", "--game", "prisoners_dilemma", "--gamma-grid", "17", "--out", str(out))
            == 0
        )
        return out

    def test_outputs(self, tmp_path, sweep_csv):
        prefix = str(tmp_path / "an")
        code = run(
            "analyze", "--records", str(sweep_csv), "--gamma-slice", "0",
            "--out", prefix, "--plot", prefix,
        )
        assert code == 0
        header, rows = read_rows(tmp_path / "an_theta_scatter.csv")
        assert header == ["theta_a", "theta_b"]
        assert all(r[0] == "3.14159265359" for r in rows[:16])
        hh, hrows = read_rows(tmp_path / "an_payoff_hist.csv")
        assert hh == ["bin_center", "count"]
        assert sum(int(r[1]) for r in hrows) == 16
        assert (tmp_path / "an_theta_scatter.svg").exists()
        assert (tmp_path / "an_payoff_hist.svg").exists()
        assert (tmp_path / "an_theta_payoff.svg").exists()

    def test_single_record_histogram_has_one_row(self, tmp_path):
        records = tmp_path / "one.csv"
        header = ",".join(TWO_PLAYER_COLUMNS)
        records.write_text(
            header + "\n0.5,0,4,5,3.14159265359,0,0,3.14159265359,0,1.57079632679,1.25,1.25\n"
        )
        assert run("analyze", "--records", str(records), "--gamma-slice", "0.5", "--out", str(tmp_path / "an")) == 0
        _, rows = read_rows(tmp_path / "an_payoff_hist.csv")
        assert len(rows) == 1 and rows[0][1] == "1"

    def test_empty_records_file_exits_1(self, tmp_path, capsys):
        records = tmp_path / "empty.csv"
        records.write_text(",".join(TWO_PLAYER_COLUMNS) + "\n")
        code = run(
            "analyze", "--records", str(records), "--gamma-slice", "0",
            "--out", str(tmp_path / "an"),
        )
        assert code == 1
        assert "no records to analyze" in capsys.readouterr().err

    def test_slice_outside_range_exits_1(self, tmp_path, sweep_csv, capsys):
        code = run(
            "analyze", "--records", str(sweep_csv), "--gamma-slice", "3.0",
            "--out", str(tmp_path / "an"),
        )
        assert code == 1
        assert "outside the swept range" in capsys.readouterr().err

    def test_inline_sweep(self, tmp_path):
        prefix = str(tmp_path / "inline")
        code = run(
            "analyze", "--game", "stag_hunt", "--gamma-grid", "9",
            "--gamma-slice", "pi/4", "--out", prefix,
        )
        assert code == 0
        _, rows = read_rows(tmp_path / "inline_payoff_hist.csv")
        assert rows
