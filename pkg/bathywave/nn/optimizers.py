import numpy as np


class Adam:
    """Adaptive-moment update of every trainable array of a model.

    Args:
        learning_rate (float, optional): step size. Defaults to ``1e-3``.
        beta_1 (float, optional): decay of the first moment. Defaults to ``0.9``.
        beta_2 (float, optional): decay of the second moment. Defaults to ``0.999``.
        epsilon (float, optional): denominator offset. Defaults to ``1e-8``.
    """

    def __init__(self, learning_rate=1e-3, beta_1=0.9, beta_2=0.999, epsilon=1e-8):
        self.learning_rate = learning_rate
        self.beta_1 = beta_1
        self.beta_2 = beta_2
        self.epsilon = epsilon
        self.iterations = 0
        self._m = {}
        self._v = {}

    def step(self, model, grads):
        """Apply one update.

        Args:
            model (TriBranchModel): updated in place.
            grads (dict): branch name -> per-layer gradient dicts, as returned by ``model.backward``.
        """
        self.iterations += 1
        t = self.iterations
        for name, branch in model.branches.items():
            for i, (layer, layer_grads) in enumerate(zip(branch.layers, grads[name])):
                for key, g in layer_grads.items():
                    slot = (name, i, key)
                    m = self._m.get(slot, 0.0)
                    v = self._v.get(slot, 0.0)
                    m = self.beta_1 * m + (1 - self.beta_1) * g
                    v = self.beta_2 * v + (1 - self.beta_2) * g * g
                    self._m[slot], self._v[slot] = m, v
                    m_hat = m / (1 - self.beta_1**t)
                    v_hat = v / (1 - self.beta_2**t)
                    layer.params[key] = layer.params[key] - self.learning_rate * m_hat / (
                        np.sqrt(v_hat) + self.epsilon
                    )
