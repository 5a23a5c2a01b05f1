from bathywave.nn.trainer._base import TrainConfig, Trainer, TrainReport, dataset_loss, train

__all__ = ["dataset_loss", "train", "TrainConfig", "Trainer", "TrainReport"]
