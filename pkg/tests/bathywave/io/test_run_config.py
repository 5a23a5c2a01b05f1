import json
import os
import tempfile
import unittest

import pytest
import yaml


def _write_json(directory, payload, name="config.json"):
    path = os.path.join(directory, name)
    with open(path, "w") as f:
        if isinstance(payload, str):
            f.write(payload)
        else:
            json.dump(payload, f)
    return path


class TestRunConfig(unittest.TestCase):
    @pytest.mark.fast
    def test_defaults(self):
        from bathywave.io import RunConfig
        from bathywave.nn import ModelConfig

        config = RunConfig()
        config.validate()
        assert config.model == ModelConfig.desk()
        assert config.split_ratios == (0.8, 0.15, 0.05)

    @pytest.mark.fast
    def test_nested_sections(self):
        from bathywave.io import RunConfig

        config = RunConfig.from_dict(
            {
                "n_samples": 100,
                "ranges": {"depth": [1.0, 5.0]},
                "train": {"max_epochs": 3, "loss": "mse"},
                "adapt": {"solver": "emd", "sinkhorn": {"epsilon": 0.2}},
                "grid": {"n_bins": 256},
            }
        )
        config.validate()
        assert config.n_samples == 100
        assert config.ranges.depth == (1.0, 5.0)
        assert config.ranges.kd == (0.0, 1.0)
        assert config.train.max_epochs == 3
        assert config.train.loss == "mse"
        assert config.adapt.sinkhorn.epsilon == 0.2
        assert config.grid.n_bins == 256

    @pytest.mark.fast
    def test_unknown_keys(self):
        from bathywave.core.exceptions import ConfigError
        from bathywave.io import RunConfig

        with pytest.raises(ConfigError) as info:
            RunConfig.from_dict({"epochs": 3})
        assert info.value.key == "epochs"

        with pytest.raises(ConfigError) as info:
            RunConfig.from_dict({"train": {"epochs": 3}})
        assert info.value.key == "train.epochs"

        with pytest.raises(ConfigError):
            RunConfig.from_dict({"train": 3})

    @pytest.mark.fast
    def test_wrong_types(self):
        from bathywave.core.exceptions import ConfigError
        from bathywave.io import RunConfig

        for d, key in (
            ({"n_samples": "abc"}, "n_samples"),
            ({"n_samples": True}, "n_samples"),
            ({"n_samples": 10.5}, "n_samples"),
            ({"train": {"shuffle": 1}}, "train.shuffle"),
            ({"train": {"loss": 3}}, "train.loss"),
            ({"ranges": {"depth": [1.0]}}, "ranges.depth"),
            ({"ranges": {"depth": [1.0, "x"]}}, "ranges.depth[1]"),
            ({"split_ratios": 0.8}, "split_ratios"),
            ({"paths": {"out": 3}}, "paths.out"),
            ({"adapt": {"sinkhorn": {"epsilon": "big"}}}, "adapt.sinkhorn.epsilon"),
        ):
            with pytest.raises(ConfigError) as info:
                RunConfig.from_dict(d)
            assert info.value.key == key

        config = RunConfig.from_dict({"train": {"learning_rate": 1}, "workers": None, "model": {"filters": [2, 4]}})
        assert config.train.learning_rate == 1.0
        assert isinstance(config.train.learning_rate, float)
        assert config.workers is None
        assert config.model.filters == (2, 4)

    @pytest.mark.fast
    def test_out_of_bounds(self):
        from bathywave.core.exceptions import ConfigError
        from bathywave.io import RunConfig

        for d in (
            {"n_samples": 0},
            {"seed": -1},
            {"split_ratios": [0.5, 0.5, 0.5]},
            {"method": "cluster"},
            {"workers": 0},
            {"ranges": {"depth": [5.0, 1.0]}},
            {"train": {"batch_size": 0}},
            {"model": {"convs_per_branch": 30, "pool_every": 1}},
            {"paths": {"dataset": "a.bwf", "out": "a.bwf"}},
        ):
            with pytest.raises(ConfigError):
                RunConfig.from_dict(d).validate()

    @pytest.mark.fast
    def test_replace(self):
        from bathywave.core.exceptions import ConfigError
        from bathywave.io import RunConfig

        config = RunConfig().replace("train", max_epochs=7).replace(seed=3)
        assert config.train.max_epochs == 7
        assert config.seed == 3
        with pytest.raises(ConfigError):
            RunConfig().replace("train", epochs=7)

    @pytest.mark.fast
    def test_file_round_trip(self):
        from bathywave.io import RunConfig, dump_config, load_config

        config = RunConfig(n_samples=10, seed=5).replace("train", learning_rate=0.01)
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "config.json")
            dump_config(config, path)
            back = load_config(path)
        assert back == config

    @pytest.mark.fast
    def test_malformed_file(self):
        from bathywave.core.exceptions import ConfigError
        from bathywave.io import load_config

        with tempfile.TemporaryDirectory() as tmp:
            with pytest.raises(ConfigError):
                load_config(_write_json(tmp, "{not json"))
            with pytest.raises(ConfigError):
                load_config(_write_json(tmp, {"train": {"max_epochs": -1}}))


class TestContext(unittest.TestCase):
    @pytest.mark.fast
    def test_write_context(self):
        import numpy as np

        from bathywave import __version__
        from bathywave.io import CONTEXT_FILE, RunConfig, write_context

        config = RunConfig(n_samples=12).to_dict()
        config["extra"] = np.float64(0.5)
        with tempfile.TemporaryDirectory() as tmp:
            path = write_context(tmp, "generate", config, argv=["generate", "--n", "12"])
            assert os.path.basename(path) == CONTEXT_FILE
            with open(path) as f:
                context = yaml.safe_load(f)
        assert context["version"] == __version__
        assert context["command"] == "generate"
        assert context["argv"] == ["generate", "--n", "12"]
        assert context["config"]["n_samples"] == 12
        assert context["config"]["extra"] == 0.5
        assert context["config"]["split_ratios"] == [0.8, 0.15, 0.05]
