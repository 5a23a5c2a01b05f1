import os
import tempfile
import types
import unittest

import numpy as np
import pytest


def _small_model(seed=0):
    from bathywave.nn import ModelConfig, build_tribranch

    cfg = ModelConfig(
        convs_per_branch=2,
        pool_every=1,
        kernel_size=3,
        filters_start=2,
        filters_end=2,
        dense_units=16,
        input_length=16,
    )
    return build_tribranch(cfg, seed=seed)


def _data(n=12, seed=0):
    rng = np.random.default_rng(seed)
    x = rng.normal(size=(n, 16, 1))
    y = np.stack(
        [x[:, :4, 0].mean(axis=1) + 2.0, 0.5 * x[:, 8, 0], x[:, 12:, 0].max(axis=1)], axis=1
    )
    return x, y


class TestLosses(unittest.TestCase):
    @pytest.mark.fast
    def test_values_and_gradients(self):
        from bathywave.nn.losses import huber, logcosh, mae, mse

        pred, target = np.array([1.0, 3.0]), np.zeros(2)
        value, grad = mae(pred, target)
        assert value == 2.0
        np.testing.assert_array_equal(grad, [0.5, 0.5])

        value, grad = mse(pred, target)
        assert value == 5.0
        np.testing.assert_array_equal(grad, [1.0, 3.0])

        value, grad = huber(np.array([0.5, 3.0]), target)
        assert value == pytest.approx((0.125 + 2.5) / 2)
        np.testing.assert_allclose(grad, [0.25, 0.5])

        value, _ = logcosh(target, target)
        assert value == pytest.approx(0.0, abs=1e-15)
        value, _ = logcosh(np.array([50.0]), np.zeros(1))
        assert value == pytest.approx(50.0 - np.log(2.0))

    @pytest.mark.fast
    def test_select_loss(self):
        from bathywave.core.exceptions import ConfigError
        from bathywave.nn import select_loss
        from bathywave.nn.losses import mae

        assert select_loss("mae") is mae
        assert select_loss("mean_absolute_error") is mae
        assert select_loss(mae) is mae
        with pytest.raises(ConfigError):
            select_loss("hinge")

    @pytest.mark.fast
    def test_tribranch_loss_is_branch_mean(self):
        from bathywave.nn import tribranch_loss

        outputs = {"depth": np.array([[1.0]]), "kd": np.array([[2.0]]), "bottom": np.array([[6.0]])}
        value, grads = tribranch_loss(outputs, np.zeros((1, 3)))
        assert value == pytest.approx(3.0)
        assert list(grads) == ["depth", "kd", "bottom"]
        np.testing.assert_allclose(grads["kd"], [[1 / 3]])


class TestTrainConfig(unittest.TestCase):
    @pytest.mark.fast
    def test_validate(self):
        from bathywave.core.exceptions import ConfigError
        from bathywave.nn import TrainConfig

        TrainConfig().validate()
        for kwargs in (
            {"batch_size": 0},
            {"learning_rate": 0.0},
            {"early_stop_patience": 0},
            {"min_delta": -1.0},
            {"noise_augment_sigma": -0.1},
            {"loss": "hinge"},
        ):
            with pytest.raises(ConfigError):
                TrainConfig(**kwargs).validate()


class TestTrain(unittest.TestCase):
    @pytest.mark.fast
    def test_loss_decreases(self):
        from bathywave.nn import TrainConfig, train

        model = _small_model()
        data = _data()
        cfg = TrainConfig(max_epochs=300, learning_rate=0.01, early_stop_patience=1000)
        report = train(model, data, data, cfg)
        assert report.stopped_epoch == 300
        assert len(report.train_loss) == len(report.val_loss) == 300
        assert report.train_loss[-1] < 0.5 * report.train_loss[0]

    @pytest.mark.slow
    def test_overfits_one_batch(self):
        from bathywave.nn import TrainConfig, train

        model = _small_model()
        data = _data(n=12)
        cfg = TrainConfig(batch_size=12, max_epochs=300, learning_rate=0.01, early_stop_patience=1000)
        report = train(model, data, data, cfg)
        assert report.train_loss[-1] < 0.05 * report.train_loss[0]

    @pytest.mark.fast
    def test_early_stopping_on_plateau(self):
        from bathywave.nn import TrainConfig, train
        from bathywave.nn.trainer._base import dataset_loss

        model = _small_model()
        x, y = _data()
        cfg = TrainConfig(max_epochs=10, early_stop_patience=3, min_delta=1e9)
        report = train(model, (x, y), (x, y), cfg)
        assert report.stopped_epoch == 4
        # weights of the only improving epoch are restored
        assert dataset_loss(model, x, y) == pytest.approx(report.val_loss[0], rel=1e-12)

    @pytest.mark.fast
    def test_best_weights_are_restored(self):
        from bathywave.nn import TrainConfig, train
        from bathywave.nn.trainer._base import dataset_loss

        model = _small_model(seed=3)
        x, y = _data(n=24, seed=1)
        cfg = TrainConfig(max_epochs=15, learning_rate=0.01, early_stop_patience=20)
        report = train(model, (x[:12], y[:12]), (x[12:], y[12:]), cfg)
        assert report.best_val_loss == min(report.val_loss)
        assert report.val_loss[report.best_epoch - 1] == report.best_val_loss
        assert dataset_loss(model, x[12:], y[12:]) == pytest.approx(report.best_val_loss, rel=1e-12)
        assert set(report.val_metrics) == {"depth", "kd", "bottom"}

    @pytest.mark.fast
    def test_curves_file(self):
        import pandas as pd

        from bathywave.nn import TrainConfig, train

        data = _data()
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "curves.csv")
            report = train(_small_model(), data, data, TrainConfig(max_epochs=3), curves_path=path)
            curves = pd.read_csv(path)
        assert list(curves.columns) == ["epoch", "train_loss", "val_loss"]
        assert list(curves.epoch) == [1, 2, 3]
        np.testing.assert_allclose(curves.val_loss, report.val_loss, rtol=1e-15)
        assert report.curves()[0][0] == 1

    @pytest.mark.fast
    def test_same_seed_same_curves(self):
        from bathywave.nn import TrainConfig, train

        data = _data()
        cfg = TrainConfig(max_epochs=4, batch_size=5, noise_augment_sigma=0.1, seed=9)
        a = train(_small_model(), data, data, cfg)
        b = train(_small_model(), data, data, cfg)
        assert a.train_loss == b.train_loss
        assert a.val_loss == b.val_loss

    @pytest.mark.fast
    def test_zero_epochs(self):
        from bathywave.nn import TrainConfig, train

        model = _small_model()
        before = model.get_weights()
        report = train(model, _data(), _data(), TrainConfig(max_epochs=0))
        assert report.stopped_epoch == 0
        assert report.best_epoch is None
        assert all(np.array_equal(u, v) for u, v in zip(before, model.get_weights()))

    @pytest.mark.fast
    def test_diverged_loss(self):
        from bathywave.core.exceptions.nn import DivergedLoss
        from bathywave.nn import TrainConfig, train

        x, y = _data()
        y[0, 1] = np.nan
        with pytest.raises(DivergedLoss) as info:
            train(_small_model(), (x, y), _data(), TrainConfig(max_epochs=5))
        assert info.value.epoch == 1
        assert info.value.report.train_loss == []

    @pytest.mark.fast
    def test_empty_dataset(self):
        from bathywave.core.exceptions.nn import EmptyDataset
        from bathywave.nn import train

        empty = (np.zeros((0, 16, 1)), np.zeros((0, 3)))
        with pytest.raises(EmptyDataset):
            train(_small_model(), empty, _data())
        with pytest.raises(EmptyDataset):
            train(_small_model(), _data(), empty)


class TestPredict(unittest.TestCase):
    @pytest.mark.fast
    def test_deterministic(self):
        from bathywave.nn import predict

        model = _small_model()
        x, _ = _data()
        a = predict(model, x)
        b = predict(model, x)
        assert a.shape == (12, 3)
        np.testing.assert_array_equal(a, b)

    @pytest.mark.fast
    def test_batch_independence(self):
        from bathywave.nn import predict

        model = _small_model()
        x, _ = _data()
        full = predict(model, x)
        np.testing.assert_allclose(predict(model, x[3:4])[0], full[3], rtol=1e-12, atol=1e-14)
        np.testing.assert_allclose(predict(model, x, batch_size=5), full, rtol=1e-12, atol=1e-14)

    @pytest.mark.fast
    def test_empty_input(self):
        from bathywave.nn import predict

        assert predict(_small_model(), np.zeros((0, 16, 1))).shape == (0, 3)

    @pytest.mark.fast
    def test_wrong_length(self):
        from bathywave.core.exceptions.nn import ShapeMismatch
        from bathywave.nn import predict

        with pytest.raises(ShapeMismatch):
            predict(_small_model(), np.zeros((2, 32, 1)))


class TestEvaluate(unittest.TestCase):
    @pytest.mark.fast
    def test_oracle_model(self):
        from bathywave.nn import evaluate

        y = np.random.default_rng(0).uniform(1.0, 5.0, size=(10, 3))
        x = np.zeros((10, 4, 1))
        x[:, 0, 0] = np.arange(10)

        oracle = types.SimpleNamespace(
            config=types.SimpleNamespace(input_length=4),
            predict_batch=lambda batch: y[batch[:, 0, 0].astype(int)],
        )
        metrics = evaluate(oracle, (x, y))
        assert list(metrics) == ["depth", "kd", "bottom"]
        for m in metrics.values():
            assert m.mae == 0.0
            assert m.rmse == 0.0
            assert m.r2 == pytest.approx(1.0)
