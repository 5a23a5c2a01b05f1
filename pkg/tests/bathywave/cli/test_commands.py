import contextlib
import io
import json
import os
import tempfile
import unittest

import pandas as pd
import pytest
import yaml

SMALL_MODEL = [
    "--convs-per-branch",
    "1",
    "--filters-start",
    "2",
    "--filters-end",
    "2",
    "--dense-units",
    "4",
]


def run(*argv):
    """Run the command line and return ``(status, stdout, stderr)``."""
    from bathywave.core.cli import run_command

    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        status = run_command(list(argv))
    return status, out.getvalue(), err.getvalue()


class TestGenerate(unittest.TestCase):
    @pytest.mark.fast
    def test_same_seed_same_bytes(self):
        with tempfile.TemporaryDirectory() as tmp:
            a, b, c = (os.path.join(tmp, f"{name}.bwf") for name in "abc")
            assert run("generate", "--n", "20", "--seed", "7", "--out", a)[0] == 0
            assert run("generate", "--n", "20", "--seed", "7", "--out", b)[0] == 0
            status, stdout, _ = run(
                "generate", "--n", "20", "--seed", "7", "--method", "thread", "--workers", "3", "--out", c
            )
            assert status == 0
            assert "wrote 20 samples" in stdout
            with open(a, "rb") as fa, open(b, "rb") as fb, open(c, "rb") as fc:
                data = fa.read()
                assert data == fb.read()
                assert data == fc.read()

            with open(os.path.join(tmp, "context.yaml")) as f:
                context = yaml.safe_load(f)
            assert context["command"] == "generate"
            assert context["config"]["n_samples"] == 20
            assert context["config"]["seed"] == 7

    @pytest.mark.fast
    def test_grid_flags_and_no_context(self):
        from bathywave.io import read_dataset

        with tempfile.TemporaryDirectory() as tmp:
            out = os.path.join(tmp, "d.bwf")
            status, _, _ = run("generate", "--n", "3", "--n-bins", "300", "--no-context", "--out", out)
            assert status == 0
            assert read_dataset(out).grid.n_bins == 300
            assert not os.path.exists(os.path.join(tmp, "context.yaml"))

    @pytest.mark.fast
    def test_shifted(self):
        from bathywave.io import read_dataset

        with tempfile.TemporaryDirectory() as tmp:
            ref, shifted = os.path.join(tmp, "ref.bwf"), os.path.join(tmp, "shifted.bwf")
            assert run("generate", "--n", "4", "--seed", "2", "--out", ref)[0] == 0
            assert run("generate-shifted", "--n", "4", "--seed", "2", "--out", shifted)[0] == 0
            with open(ref, "rb") as f, open(shifted, "rb") as g:
                assert f.read() == g.read()

            status, _, _ = run(
                "generate-shifted", "--n", "4", "--seed", "2", "--background-offset", "0.5", "--out", shifted
            )
            assert status == 0
            a, b = read_dataset(ref), read_dataset(shifted)
            assert a.params_matrix().tolist() == b.params_matrix().tolist()
            assert (b.waveform_matrix() > a.waveform_matrix()).all()


class TestPipeline(unittest.TestCase):
    @pytest.mark.fast
    def test_generate_train_evaluate_predict(self):
        from bathywave.io import read_dataset

        with tempfile.TemporaryDirectory() as tmp:
            path = lambda name: os.path.join(tmp, name)  # noqa: E731

            assert run("generate", "--n", "40", "--seed", "3", "--out", path("d.bwf"))[0] == 0
            status, stdout, _ = run(
                "train",
                "--in", path("d.bwf"),
                "--out", path("m.bwnn"),
                "--curves", path("curves.csv"),
                "--metrics", path("val_metrics.csv"),
                "--test-out", path("test.bwf"),
                "--max-epochs", "2",
                "--batch-size", "8",
                *SMALL_MODEL,
            )
            assert status == 0
            assert "model:" in stdout
            assert len(read_dataset(path("test.bwf"))) == 2
            assert list(pd.read_csv(path("curves.csv")).epoch) == [1, 2]

            status, stdout, _ = run(
                "evaluate", "--model", path("m.bwnn"), "--in", path("test.bwf"), "--out", path("metrics.csv")
            )
            assert status == 0
            metrics = pd.read_csv(path("metrics.csv"))
            assert list(metrics.columns) == ["target", "mae", "rmse", "r2"]
            assert list(metrics.target) == ["depth", "kd", "bottom"]
            assert "kd: mae=" in stdout

            status, _, _ = run(
                "predict", "--model", path("m.bwnn"), "--in", path("d.bwf"), "--out", path("predictions.csv")
            )
            assert status == 0
            predictions = pd.read_csv(path("predictions.csv"))
            assert list(predictions.columns) == ["depth_hat", "kd_hat", "bottom_hat"]
            assert len(predictions) == 40

    @pytest.mark.fast
    def test_train_needs_datasets(self):
        with tempfile.TemporaryDirectory() as tmp:
            status, _, stderr = run("train", "--out", os.path.join(tmp, "m.bwnn"))
        assert status == 1
        assert any(line.startswith("error: ConfigError:") for line in stderr.splitlines())

    @pytest.mark.fast
    def test_config_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            config = os.path.join(tmp, "config.json")
            with open(config, "w") as f:
                json.dump({"train": {"epochs": 3}}, f)
            status, _, stderr = run(
                "generate", "--config", config, "--n", "2", "--out", os.path.join(tmp, "d.bwf")
            )
        assert status == 1
        assert "train.epochs" in stderr

    @pytest.mark.fast
    def test_config_file_wrong_type(self):
        with tempfile.TemporaryDirectory() as tmp:
            config = os.path.join(tmp, "config.json")
            with open(config, "w") as f:
                json.dump({"n_samples": "abc"}, f)
            status, _, stderr = run("generate", "--config", config, "--out", os.path.join(tmp, "d.bwf"))
        assert status == 1
        assert any(line.startswith("error: ConfigError:") for line in stderr.splitlines())
        assert "n_samples" in stderr


class TestAdaptationCommands(unittest.TestCase):
    @pytest.mark.fast
    def test_adapt_and_finetune(self):
        from bathywave.io import load_model

        with tempfile.TemporaryDirectory() as tmp:
            path = lambda name: os.path.join(tmp, name)  # noqa: E731

            assert run("generate", "--n", "30", "--seed", "1", "--no-context", "--out", path("d.bwf"))[0] == 0
            status, _, _ = run(
                "generate-shifted",
                "--n", "10",
                "--seed", "2",
                "--background-offset", "0.05",
                "--no-context",
                "--out", path("t.bwf"),
            )
            assert status == 0
            status, _, _ = run(
                "train", "--in", path("d.bwf"), "--out", path("m.bwnn"), "--max-epochs", "1", "--no-context", *SMALL_MODEL
            )
            assert status == 0

            status, stdout, _ = run(
                "adapt",
                "--model", path("m.bwnn"),
                "--source", path("d.bwf"),
                "--target", path("t.bwf"),
                "--out", path("adapted.csv"),
                "--metrics", path("adapted_metrics.csv"),
                "--solver", "emd",
            )
            assert status == 0
            assert len(pd.read_csv(path("adapted.csv"))) == 10
            assert list(pd.read_csv(path("adapted_metrics.csv")).target) == ["depth", "kd", "bottom"]
            assert "transport plans: 1, converged: True" in stdout
            with open(path("context.yaml")) as f:
                assert yaml.safe_load(f)["config"]["adapt"]["solver"] == "emd"

            status, stdout, _ = run(
                "finetune",
                "--model", path("m.bwnn"),
                "--target", path("t.bwf"),
                "--out", path("tuned.bwnn"),
                "--metrics", path("tuned_metrics.csv"),
                "--fraction", "0.5",
                "--max-epochs", "1",
                "--batch-size", "4",
            )
            assert status == 0
            assert "fine-tuned on 5 sample(s)" in stdout
            assert len(pd.read_csv(path("tuned_metrics.csv"))) == 3
            assert load_model(path("tuned.bwnn")).config == load_model(path("m.bwnn")).config

    @pytest.mark.fast
    def test_same_file_twice(self):
        with tempfile.TemporaryDirectory() as tmp:
            dataset = os.path.join(tmp, "d.bwf")
            assert run("generate", "--n", "2", "--no-context", "--out", dataset)[0] == 0
            status, _, stderr = run(
                "adapt", "--model", dataset, "--source", dataset, "--target", dataset, "--out", dataset
            )
        assert status == 1
        assert any(line.startswith("error: ConfigError:") for line in stderr.splitlines())


class TestStudyCommands(unittest.TestCase):
    @pytest.mark.fast
    def test_sensitivity(self):
        with tempfile.TemporaryDirectory() as tmp:
            config, dataset, out = (os.path.join(tmp, name) for name in ("config.json", "d.bwf", "s.csv"))
            with open(config, "w") as f:
                json.dump(
                    {
                        "model": {"convs_per_branch": 1, "filters_start": 2, "filters_end": 2, "dense_units": 4},
                        "train": {"max_epochs": 1, "batch_size": 8},
                    },
                    f,
                )
            assert run("generate", "--n", "30", "--seed", "4", "--no-context", "--out", dataset)[0] == 0
            status, _, _ = run(
                "sensitivity", "--config", config, "--in", dataset, "--out", out, "--knob", "loss=mae,mse"
            )
            assert status == 0
            table = pd.read_csv(out)
        assert list(table.loss) == ["mae", "mse"]
        assert "kd_r2" in table.columns

    @pytest.mark.fast
    def test_bad_knob(self):
        with tempfile.TemporaryDirectory() as tmp:
            dataset = os.path.join(tmp, "d.bwf")
            assert run("generate", "--n", "20", "--no-context", "--out", dataset)[0] == 0
            status, _, stderr = run("sensitivity", "--in", dataset, "--knob", "dropout=0.1")
        assert status == 1
        assert "knobs.dropout" in stderr


class TestInversionCommands(unittest.TestCase):
    @pytest.mark.fast
    def test_kdfit(self):
        with tempfile.TemporaryDirectory() as tmp:
            config = os.path.join(tmp, "config.json")
            with open(config, "w") as f:
                json.dump(
                    {
                        "ranges": {
                            "depth": [2.0, 8.0],
                            "kd": [0.3, 0.3],
                            "i_ref": [80.0, 80.0],
                            "i_w": [0.0, 0.0],
                            "amplitude": [1.0, 1.0],
                            "noise_fraction": [0.0, 0.0],
                            "imp_type": [0, 0],
                            "w_c": [0.2, 0.2],
                            "base_intensity": [0.0, 0.0],
                            "i_s": [1.0, 1.0],
                        }
                    },
                    f,
                )
            dataset, scatter = os.path.join(tmp, "d.bwf"), os.path.join(tmp, "scatter.csv")
            assert run("generate", "--config", config, "--n", "15", "--out", dataset)[0] == 0
            status, stdout, _ = run("kdfit", "--in", dataset, "--scatter", scatter)
            assert status == 0
            assert len(pd.read_csv(scatter)) == 15

        values = dict(line.split("=", 1) for line in stdout.splitlines() if line.startswith("kd"))
        assert float(values["kd"]) == pytest.approx(0.3, abs=0.02)
        assert float(values["kd_hat"]) == pytest.approx(2 * float(values["kd"]))

    @pytest.mark.fast
    def test_invert_with_lut(self):
        with tempfile.TemporaryDirectory() as tmp:
            dataset, out = os.path.join(tmp, "d.bwf"), os.path.join(tmp, "inv.csv")
            assert run("generate", "--n", "3", "--seed", "1", "--out", dataset)[0] == 0
            status, stdout, _ = run(
                "invert", "--in", dataset, "--out", out, "--lut-depth", "1:10:4", "--lut-kd", "0:1:3"
            )
            assert status == 0
            table = pd.read_csv(out)
        assert list(table.columns) == ["index", "depth_peak", "depth_lut", "kd_lut", "merit"]
        assert len(table) == 3
        assert (table.merit >= 0).all()
        assert "of 3 waveform(s)" in stdout

    @pytest.mark.fast
    def test_invalid_lut_axis(self):
        with tempfile.TemporaryDirectory() as tmp:
            dataset = os.path.join(tmp, "d.bwf")
            assert run("generate", "--n", "1", "--out", dataset)[0] == 0
            status, _, stderr = run("invert", "--in", dataset, "--lut-depth", "1:10")
        assert status == 1
        assert "lut.axes.depth" in stderr


class TestCommandLine(unittest.TestCase):
    @pytest.mark.fast
    def test_unknown_command(self):
        status, _, stderr = run("frobnicate")
        assert status == 1
        assert "error: UnknownCommand: unknown command 'frobnicate'" in stderr.splitlines()

    @pytest.mark.fast
    def test_no_command_prints_help(self):
        status, stdout, _ = run()
        assert status == 0
        assert "usage: bathywave" in stdout

    @pytest.mark.fast
    def test_usage_error(self):
        with pytest.raises(SystemExit) as info:
            run("generate", "--n", "3")
        assert info.value.code == 2

    @pytest.mark.fast
    def test_gradcheck(self):
        with tempfile.TemporaryDirectory() as tmp:
            out = os.path.join(tmp, "gradcheck.csv")
            status, stdout, _ = run("gradcheck", "--instances", "2", "--out", out)
            table = pd.read_csv(out)
        assert status == 0
        assert "conv1d: max relative error" in stdout
        assert len(table) == 6 * 2 * 2
