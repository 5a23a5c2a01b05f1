import unittest

import numpy as np
import pytest


class TestLayerForward(unittest.TestCase):
    @pytest.mark.fast
    def test_relu(self):
        from bathywave.nn.layers import ReLU, layer_forward

        y, _ = layer_forward(ReLU(), np.array([[-1.0, 0.0, 2.0]]))
        np.testing.assert_array_equal(y, [[0.0, 0.0, 2.0]])

    @pytest.mark.fast
    def test_conv_identity_kernel(self):
        from bathywave.nn.layers import Conv1D, layer_forward

        conv = Conv1D(1, 1, 3)
        conv.params["kernel"][1, 0, 0] = 1.0
        x = np.random.default_rng(0).normal(size=(2, 9, 1))
        y, _ = layer_forward(conv, x)
        np.testing.assert_allclose(y, x)

    @pytest.mark.fast
    def test_conv_same_padding_keeps_length(self):
        from bathywave.nn.layers import Conv1D, layer_forward

        for kernel_size in (1, 2, 4, 7):
            conv = Conv1D(3, 5, kernel_size)
            conv.build(np.random.default_rng(kernel_size))
            y, _ = layer_forward(conv, np.ones((2, 11, 3)))
            assert y.shape == (2, 11, 5)

    @pytest.mark.fast
    def test_batchnorm_train_mode_standardizes(self):
        from bathywave.nn.layers import BatchNorm1D, layer_forward

        bn = BatchNorm1D(3, eps=1e-12)
        x = np.random.default_rng(1).normal(loc=5.0, scale=3.0, size=(8, 20, 3))
        y, _ = layer_forward(bn, x, "train")
        np.testing.assert_allclose(y.mean(axis=(0, 1)), 0.0, atol=1e-9)
        np.testing.assert_allclose(y.var(axis=(0, 1)), 1.0, atol=1e-9)

    @pytest.mark.fast
    def test_batchnorm_running_statistics(self):
        from bathywave.nn.layers import BatchNorm1D, layer_forward

        bn = BatchNorm1D(2, momentum=0.5)
        x = np.full((4, 3, 2), 2.0)
        layer_forward(bn, x, "train")
        np.testing.assert_allclose(bn.state["running_mean"], [1.0, 1.0])
        np.testing.assert_allclose(bn.state["running_var"], [0.5, 0.5])

        # infer mode leaves the running statistics alone
        layer_forward(bn, x, "infer")
        np.testing.assert_allclose(bn.state["running_mean"], [1.0, 1.0])

    @pytest.mark.fast
    def test_maxpool_drops_trailing_sample(self):
        from bathywave.nn.layers import MaxPool1D, layer_forward

        x = np.array([1.0, 3.0, 2.0, 0.0, 9.0]).reshape(1, 5, 1)
        y, _ = layer_forward(MaxPool1D(2), x)
        np.testing.assert_array_equal(y.ravel(), [3.0, 2.0])

    @pytest.mark.fast
    def test_unknown_mode(self):
        from bathywave.nn.layers import ReLU, layer_forward

        with pytest.raises(ValueError):
            layer_forward(ReLU(), np.zeros((1, 2)), "eval")

    @pytest.mark.fast
    def test_shape_mismatch(self):
        from bathywave.core.exceptions.nn import ShapeMismatch
        from bathywave.nn.layers import BatchNorm1D, Conv1D, Dense, MaxPool1D, layer_forward

        with pytest.raises(ShapeMismatch):
            layer_forward(Conv1D(2, 4, 3), np.zeros((1, 8, 3)))
        with pytest.raises(ShapeMismatch):
            layer_forward(Dense(4, 1), np.zeros((1, 5)))
        with pytest.raises(ShapeMismatch):
            layer_forward(BatchNorm1D(3), np.zeros((1, 8, 2)))
        with pytest.raises(ShapeMismatch):
            layer_forward(MaxPool1D(2), np.zeros((1, 1, 2)))


class TestLayerBackward(unittest.TestCase):
    @pytest.mark.fast
    def test_dense_zero_upstream(self):
        from bathywave.nn.layers import Dense, layer_backward, layer_forward

        dense = Dense(4, 3)
        dense.build(np.random.default_rng(0))
        y, cache = layer_forward(dense, np.ones((2, 4)))
        dx, grads = layer_backward(dense, np.zeros_like(y), cache)
        assert not dx.any()
        assert not grads["kernel"].any()
        assert not grads["bias"].any()

    @pytest.mark.fast
    def test_maxpool_routes_every_gradient(self):
        from bathywave.nn.layers import MaxPool1D, layer_backward, layer_forward

        pool = MaxPool1D(2)
        x = np.random.default_rng(2).normal(size=(3, 9, 2))
        y, cache = layer_forward(pool, x)
        grad = np.random.default_rng(3).normal(size=y.shape)
        dx, grads = layer_backward(pool, grad, cache)
        assert dx.shape == x.shape
        assert grads == {}
        assert dx.sum() == pytest.approx(grad.sum())
        assert not dx[:, 8].any()

    @pytest.mark.fast
    def test_missing_cache(self):
        from bathywave.core.exceptions.nn import MissingCache
        from bathywave.nn.layers import ReLU, layer_backward, layer_forward

        relu, other = ReLU(), ReLU()
        with pytest.raises(MissingCache):
            layer_backward(relu, np.zeros((1, 2)), {})
        with pytest.raises(MissingCache):
            layer_backward(relu, np.zeros((1, 2)), None)

        _, cache = layer_forward(other, np.zeros((1, 2)))
        with pytest.raises(MissingCache):
            layer_backward(relu, np.zeros((1, 2)), cache)

    @pytest.mark.fast
    def test_upstream_shape_mismatch(self):
        from bathywave.core.exceptions.nn import ShapeMismatch
        from bathywave.nn.layers import ReLU, layer_backward, layer_forward

        relu = ReLU()
        _, cache = layer_forward(relu, np.zeros((1, 2)))
        with pytest.raises(ShapeMismatch):
            layer_backward(relu, np.zeros((1, 3)), cache)


class TestGradcheck(unittest.TestCase):
    @pytest.mark.fast
    def test_every_layer_kind(self):
        from bathywave.nn import gradcheck_all

        table = gradcheck_all(n_instances=50, seed=0)
        assert set(table.kind) == {"conv1d", "batchnorm", "relu", "maxpool", "flatten", "dense"}
        assert len(table) == 6 * 50 * 2
        worst = table.groupby("kind").max_rel_error.max()
        assert (worst < 1e-4).all(), worst

    @pytest.mark.fast
    def test_detects_a_wrong_gradient(self):
        from bathywave.nn import check_layer_gradients
        from bathywave.nn.layers import Dense

        class Broken(Dense):
            def backward(self, grad, cache):
                dx, grads = super().backward(grad, cache)
                return 2 * dx, grads

        layer = Broken(3, 2)
        layer.build(np.random.default_rng(0))
        errors = check_layer_gradients(layer, np.random.default_rng(1).normal(size=(2, 3)))
        assert errors["input"] > 0.1
        assert errors["kernel"] < 1e-4

    @pytest.mark.fast
    def test_state_is_restored(self):
        from bathywave.nn import check_layer_gradients
        from bathywave.nn.layers import BatchNorm1D

        bn = BatchNorm1D(2)
        before = {k: v.copy() for k, v in bn.state.items()}
        check_layer_gradients(bn, np.random.default_rng(0).normal(size=(3, 4, 2)))
        for k, v in before.items():
            np.testing.assert_array_equal(bn.state[k], v)
