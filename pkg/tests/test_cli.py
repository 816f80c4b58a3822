import json

import pytest

from wsnsim import algorithm_names
from wsnsim.cli import (EXIT_CONFIG, EXIT_OK, EXIT_RUNTIME, ConfigError, main,
                        parse_config)


def write_cfg(tmp_path, text, name="run.cfg"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return path


class TestParseConfig:
    def test_empty_file_keeps_defaults(self, tmp_path):
        cfg = parse_config(write_cfg(tmp_path, ""))
        assert cfg.field.node_count == 100
        assert cfg.field.side_m == 100.0
        assert cfg.field.bs_position == (50.0, 50.0)
        assert cfg.field.base_probability == 0.1
        assert cfg.radio.packet_bits == 4000
        assert cfg.seeds == [0]
        assert cfg.formats == {"csv", "json"}

    def test_full_config(self, tmp_path):
        cfg = parse_config(write_cfg(tmp_path, """
            [field]
            side = 200        # metres
            nodes = 50
            p = 0.05
            advanced_fraction = 0.2
            advanced_energy_factor = 2.0
            initial_energy = 0.25
            max_rounds = 100
            bs_x = 10
            bs_y = 20
            [radio]
            packet_bits = 2000
            elec_energy_per_bit = 50e-9
            [run]
            algorithms = leach, sep-kef-1-2-p
            seeds = 1, 2, 3
            output_dir = results
            formats = json
        """))
        assert cfg.field.side_m == 200.0
        assert cfg.field.node_count == 50
        assert cfg.field.bs_position == (10.0, 20.0)
        assert cfg.field.max_rounds == 100
        assert cfg.radio.packet_bits == 2000
        assert cfg.algorithms == ["leach", "sep-kef-1-2-p"]
        assert cfg.seeds == [1, 2, 3]
        assert str(cfg.output_dir) == "results"
        assert cfg.formats == {"json"}

    def test_bs_defaults_to_centre_of_overridden_side(self, tmp_path):
        cfg = parse_config(write_cfg(tmp_path, "side = 60\nbs_x = 5\n"))
        assert cfg.field.bs_position == (5.0, 30.0)

    def test_unknown_key_names_key_and_line(self, tmp_path):
        path = write_cfg(tmp_path, "nodes = 10\nbogus = 3\n")
        with pytest.raises(ConfigError, match=r"line 2.*bogus"):
            parse_config(path)

    def test_unparsable_value_names_key_and_line(self, tmp_path):
        path = write_cfg(tmp_path, "\nnodes = many\n")
        with pytest.raises(ConfigError, match=r"line 2.*nodes.*many"):
            parse_config(path)

    def test_unknown_algorithm_rejected(self, tmp_path):
        path = write_cfg(tmp_path, "algorithms = leach, leech\n")
        with pytest.raises(ConfigError, match="leech"):
            parse_config(path)

    def test_out_of_range_value_rejected(self, tmp_path):
        path = write_cfg(tmp_path, "p = 1.5\n")
        with pytest.raises(ConfigError):
            parse_config(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError, match="no-such"):
            parse_config(tmp_path / "no-such.cfg")

    def test_line_without_equals(self, tmp_path):
        path = write_cfg(tmp_path, "just words\n")
        with pytest.raises(ConfigError, match="line 1"):
            parse_config(path)


class TestMain:
    def run_ok(self, argv):
        rc = main(argv)
        assert rc == EXIT_OK
        return rc

    def test_list_algorithms(self, capsys):
        assert main(["--list-algorithms"]) == EXIT_OK
        printed = capsys.readouterr().out.split()
        assert sorted(printed) == sorted(algorithm_names())
        assert len(printed) == 18

    def test_no_algorithm_is_config_error(self, capsys, tmp_path):
        assert main(["--output-dir", str(tmp_path)]) == EXIT_CONFIG
        assert "configuration error" in capsys.readouterr().err

    def test_unknown_algorithm_flag(self, capsys, tmp_path):
        rc = main(["--algorithm", "nope", "--output-dir", str(tmp_path)])
        assert rc == EXIT_CONFIG
        assert "nope" in capsys.readouterr().err

    def test_negative_rounds_rejected(self, tmp_path):
        rc = main(["--algorithm", "leach", "--rounds", "-1",
                   "--output-dir", str(tmp_path)])
        assert rc == EXIT_CONFIG

    def test_end_to_end_outputs(self, tmp_path):
        out = tmp_path / "out"
        self.run_ok(["--algorithm", "leach", "--algorithm", "sep",
                     "--seed", "1", "--seed", "2", "--rounds", "40",
                     "--output-dir", str(out)])
        for algo in ("leach", "sep"):
            for seed in (1, 2):
                csv = out / algo / f"seed-{seed}.csv"
                assert csv.exists()
                lines = csv.read_text().splitlines()
                assert len(lines) == 41  # header + 40 rounds
        data = json.loads((out / "summary.json").read_text())
        assert len(data) == 4
        assert {(e["algorithm"], e["seed"]) for e in data} == \
            {("leach", 1), ("leach", 2), ("sep", 1), ("sep", 2)}

    def test_rerun_byte_identical(self, tmp_path):
        args = ["--algorithm", "leach-kef-1-1-p", "--seed", "7",
                "--rounds", "60"]
        out1, out2 = tmp_path / "a", tmp_path / "b"
        self.run_ok(args + ["--output-dir", str(out1)])
        self.run_ok(args + ["--output-dir", str(out2)])
        csv1 = (out1 / "leach-kef-1-1-p" / "seed-7.csv").read_bytes()
        csv2 = (out2 / "leach-kef-1-1-p" / "seed-7.csv").read_bytes()
        assert csv1 == csv2
        assert (out1 / "summary.json").read_bytes() == \
            (out2 / "summary.json").read_bytes()

    def test_format_json_only_skips_csv(self, tmp_path):
        out = tmp_path / "out"
        self.run_ok(["--algorithm", "leach", "--rounds", "10",
                     "--format", "json", "--output-dir", str(out)])
        assert (out / "summary.json").exists()
        assert not (out / "leach").exists()

    def test_flags_override_config(self, tmp_path):
        cfg = write_cfg(tmp_path, "algorithms = sep\nseeds = 9\nmax_rounds = 15\n")
        out = tmp_path / "out"
        self.run_ok(["--config", str(cfg), "--algorithm", "leach",
                     "--seed", "3", "--output-dir", str(out)])
        assert (out / "leach" / "seed-3.csv").exists()
        assert not (out / "sep").exists()
        # max_rounds from the config file still applies (not overridden)
        lines = (out / "leach" / "seed-3.csv").read_text().splitlines()
        assert len(lines) == 16

    def test_unwritable_output_is_runtime_error(self, capsys, tmp_path):
        blocker = tmp_path / "occupied"
        blocker.write_text("not a directory")
        rc = main(["--algorithm", "leach", "--rounds", "5",
                   "--output-dir", str(blocker)])
        assert rc == EXIT_RUNTIME
        assert "error" in capsys.readouterr().err
