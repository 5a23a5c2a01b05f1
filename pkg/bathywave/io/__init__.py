"""Persistence: binary dataset files, model checkpoints, CSV exports, JSON run
configuration and the ``context.yaml`` run record.
"""
from bathywave.io._checkpoint import decode_model, encode_model, load_model, save_model
from bathywave.io._config import RunConfig, dump_config, load_config
from bathywave.io._context import CONTEXT_FILE, write_context
from bathywave.io._csv import (
    export_csv,
    export_curves,
    export_metrics,
    export_params,
    export_predictions,
    export_scatter,
)
from bathywave.io._dataset_file import (
    HEADER_SIZE,
    decode_dataset,
    encode_dataset,
    read_dataset,
    write_dataset,
)

__all__ = [
    "CONTEXT_FILE",
    "decode_dataset",
    "decode_model",
    "dump_config",
    "encode_dataset",
    "encode_model",
    "export_csv",
    "export_curves",
    "export_metrics",
    "export_params",
    "export_predictions",
    "export_scatter",
    "HEADER_SIZE",
    "load_config",
    "load_model",
    "read_dataset",
    "RunConfig",
    "save_model",
    "write_context",
    "write_dataset",
]
