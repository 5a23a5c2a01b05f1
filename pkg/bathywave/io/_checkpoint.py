"""Model checkpoint files.

Layout, little-endian throughout::

    magic b"BWNN", version (u16, = 1)
    config length (u32) + UTF-8 JSON of the ModelConfig and the init seed
    branch count (u32), then per branch:
        name length (u16) + UTF-8 name, layer count (u32), then per layer:
            kind code (u8), 4 integer hyperparameters (u32), 2 real hyperparameters (f64)
            array count (u16), then per array (parameters then running statistics,
            each group in name order):
                name length (u16) + UTF-8 name, ndim (u8), dims (u32 each), f64 values
    CRC-32 of everything before it (u32)

Integer and real hyperparameters fill the slots in the order of ``Layer.INT_FIELDS``
and ``Layer.FLOAT_FIELDS``; unused slots are zero.
"""
import json
import logging
import struct
import zlib

import numpy as np

from bathywave.core.exceptions.io import BadMagic, CountMismatch, HeaderCorrupted, TruncatedFile, VersionUnsupported
from bathywave.nn._model import Branch, ModelConfig, TriBranchModel
from bathywave.nn.layers import KIND_CODES, LAYERS, LayerSpec, layer_from_spec

logger = logging.getLogger(__name__)

MAGIC = b"BWNN"
VERSION = 1
N_INTS = 4
N_FLOATS = 2
LAYER_RECORD = struct.Struct(f"<B{N_INTS}I{N_FLOATS}d")
KINDS = {code: kind for kind, code in KIND_CODES.items()}


def _string(s: str, fmt="<H") -> bytes:
    raw = s.encode("utf-8")
    return struct.pack(fmt, len(raw)) + raw


def encode_model(m: TriBranchModel) -> bytes:
    parts = [MAGIC, struct.pack("<H", VERSION)]
    config = json.dumps({"model": m.config.to_dict(), "seed": m.seed}, sort_keys=True)
    parts.append(_string(config, "<I"))
    parts.append(struct.pack("<I", len(m.branches)))
    for name, branch in m.branches.items():
        parts.append(_string(name))
        parts.append(struct.pack("<I", len(branch.layers)))
        for layer in branch.layers:
            config = layer.get_config()
            ints = [int(config[k]) for k in layer.INT_FIELDS] + [0] * (N_INTS - len(layer.INT_FIELDS))
            floats = [float(config[k]) for k in layer.FLOAT_FIELDS] + [0.0] * (N_FLOATS - len(layer.FLOAT_FIELDS))
            parts.append(LAYER_RECORD.pack(KIND_CODES[layer.kind], *ints, *floats))
            arrays = [(k, layer.params[k]) for k in sorted(layer.params)]
            arrays += [(k, layer.state[k]) for k in sorted(layer.state)]
            parts.append(struct.pack("<H", len(arrays)))
            for key, array in arrays:
                parts.append(_string(key))
                parts.append(struct.pack(f"<B{array.ndim}I", array.ndim, *array.shape))
                parts.append(np.ascontiguousarray(array, dtype="<f8").tobytes())
    data = b"".join(parts)
    return data + struct.pack("<I", zlib.crc32(data))


def save_model(m: TriBranchModel, path):
    """Write ``m`` to ``path``; :func:`load_model` restores it bit for bit."""
    with open(path, "wb") as f:
        f.write(encode_model(m))
    logger.info(f"Saved model checkpoint to {path}")


class _Reader:
    def __init__(self, data, path):
        self.data = data
        self.path = path
        self.offset = 0

    def take(self, fmt):
        size = struct.calcsize(fmt)
        if self.offset + size > len(self.data):
            raise TruncatedFile(self.path, self.offset + size, len(self.data))
        values = struct.unpack_from(fmt, self.data, self.offset)
        self.offset += size
        return values

    def string(self, fmt="<H"):
        (n,) = self.take(fmt)
        return self.take(f"<{n}s")[0].decode("utf-8")

    def array(self, shape):
        count = int(np.prod(shape)) if shape else 1
        raw = self.take(f"<{8 * count}s")[0]
        return np.frombuffer(raw, dtype="<f8").astype(np.float64).reshape(shape)


def decode_model(data: bytes, path="<bytes>") -> TriBranchModel:
    if data[:4] != MAGIC:
        raise BadMagic(path, MAGIC, bytes(data[:4]))
    if len(data) < 10:
        raise TruncatedFile(path, 10, len(data))
    (crc,) = struct.unpack_from("<I", data, len(data) - 4)
    if zlib.crc32(data[:-4]) != crc:
        raise HeaderCorrupted(path)

    reader = _Reader(data[:-4], path)
    reader.take("<4s")
    (version,) = reader.take("<H")
    if version != VERSION:
        raise VersionUnsupported(path, version)
    meta = json.loads(reader.string("<I"))
    config = ModelConfig.from_dict(meta["model"])

    branches = []
    (n_branches,) = reader.take("<I")
    for _ in range(n_branches):
        name = reader.string()
        (n_layers,) = reader.take("<I")
        layers = []
        for _ in range(n_layers):
            code, *values = reader.take(LAYER_RECORD.format)
            if code not in KINDS:
                raise HeaderCorrupted(path)
            cls = LAYERS[KINDS[code]]
            ints, floats = values[:N_INTS], values[N_INTS:]
            layer_config = dict(zip(cls.INT_FIELDS, ints))
            layer_config.update(zip(cls.FLOAT_FIELDS, floats))
            layer = layer_from_spec(LayerSpec(KINDS[code], layer_config))
            (n_arrays,) = reader.take("<H")
            for _ in range(n_arrays):
                key = reader.string()
                (ndim,) = reader.take("<B")
                shape = reader.take(f"<{ndim}I") if ndim else ()
                store = layer.params if key in layer.params else layer.state
                store[key] = reader.array(tuple(shape))
            layers.append(layer)
        branches.append(Branch(name, layers))

    if reader.offset != len(reader.data):
        raise CountMismatch(path, reader.offset, len(reader.data))
    return TriBranchModel(config, branches, seed=meta["seed"])


def load_model(path) -> TriBranchModel:
    """Read a checkpoint written by :func:`save_model`.

    Raises:
        BadMagic: if the file does not start with ``b"BWNN"``.
        HeaderCorrupted: if the checksum does not match.
        VersionUnsupported: if the format version is not 1.
        TruncatedFile: if the content ends early.
    """
    with open(path, "rb") as f:
        data = f.read()
    model = decode_model(data, path)
    logger.info(f"Loaded model checkpoint from {path}")
    return model
