"""Training callbacks. The trainer calls ``set_model`` once, then ``on_train_begin``,
``on_epoch_end(epoch, logs)`` after every epoch (``logs`` holds ``train_loss`` and
``val_loss``) and ``on_train_end``. Setting ``stop_training`` ends the loop after the
current epoch.
"""
import csv
import logging
import math

logger = logging.getLogger(__name__)


class Callback:
    def __init__(self):
        self.model = None
        self.stop_training = False

    def set_model(self, model):
        self.model = model

    def on_train_begin(self, logs=None):
        pass

    def on_epoch_end(self, epoch, logs=None):
        pass

    def on_train_end(self, logs=None):
        pass


class EarlyStopping(Callback):
    """Stop when the monitored loss has not improved for ``patience`` epochs.

    An epoch improves when its value is lower than the best one minus ``min_delta``.
    With ``restore_best_weights`` the model gets back the weights (and batch-norm
    statistics) of the best epoch when training ends.

    Args:
        patience (int, optional): Defaults to ``5``.
        min_delta (float, optional): Defaults to ``0.0``.
        monitor (str, optional): key of ``logs`` to watch. Defaults to ``"val_loss"``.
        restore_best_weights (bool, optional): Defaults to ``True``.
    """

    def __init__(self, patience=5, min_delta=0.0, monitor="val_loss", restore_best_weights=True):
        super().__init__()
        self.patience = patience
        self.min_delta = min_delta
        self.monitor = monitor
        self.restore_best_weights = restore_best_weights

    def on_train_begin(self, logs=None):
        self.best = math.inf
        self.best_epoch = 0
        self.best_weights = None
        self.wait = 0
        self.stopped_epoch = 0
        self.stop_training = False

    def on_epoch_end(self, epoch, logs=None):
        current = logs[self.monitor]
        if current < self.best - self.min_delta:
            self.best = current
            self.best_epoch = epoch
            self.wait = 0
            if self.restore_best_weights:
                self.best_weights = self.model.get_weights()
            return
        self.wait += 1
        if self.wait >= self.patience:
            self.stop_training = True
            self.stopped_epoch = epoch
            logger.info(
                f"Early stopping at epoch {epoch}, best {self.monitor} {self.best} at epoch {self.best_epoch}"
            )

    def on_train_end(self, logs=None):
        if self.best_weights is not None:
            self.model.set_weights(self.best_weights)


class CurveLogger(Callback):
    """Collect the per-epoch losses and optionally stream them to a CSV file.

    Args:
        filename (str, optional): CSV path with header ``epoch,train_loss,val_loss``.
            Values are written with 17 significant digits.
    """

    header = ("epoch", "train_loss", "val_loss")

    def __init__(self, filename=None):
        super().__init__()
        self.filename = filename
        self.rows = []
        self._file = None
        self._writer = None

    def on_train_begin(self, logs=None):
        self.rows = []
        if self.filename is not None:
            self._file = open(self.filename, "w", newline="")
            self._writer = csv.writer(self._file, lineterminator="\n")
            self._writer.writerow(self.header)

    def on_epoch_end(self, epoch, logs=None):
        row = (epoch, logs["train_loss"], logs["val_loss"])
        self.rows.append(row)
        if self._writer is not None:
            self._writer.writerow([epoch] + [format(v, ".17g") for v in row[1:]])
            self._file.flush()

    def on_train_end(self, logs=None):
        if self._file is not None:
            self._file.close()
            self._file = None
            self._writer = None
