"""Binary dataset files.

Layout, little-endian throughout::

    offset  size  field
    0       4     magic b"BWF1"
    4       2     version (u16, = 1)
    6       1     split tag (u8, index in SPLIT_TAGS)
    7       1     reserved (u8, = 0)
    8       8     n_samples (u64)
    16      4     n_bins (u32)
    20      8     dt in seconds (f64)
    28      8     t0 in seconds (f64)
    36      8     seed (u64)
    44      4     CRC-32 of bytes 0-43 (u32)
    48      ...   n_samples records of 11 f64 parameters (WaveformParams field order)
                  followed by n_bins f32 samples
"""
import logging
import struct
import zlib

import numpy as np

from bathywave.core.exceptions.io import (
    BadMagic,
    CountMismatch,
    EmptyPayload,
    HeaderCorrupted,
    TruncatedFile,
    VersionUnsupported,
)
from bathywave.wave import FIELDS, SPLIT_TAGS, Dataset, TimeGrid

logger = logging.getLogger(__name__)

MAGIC = b"BWF1"
VERSION = 1
HEADER = struct.Struct("<4sHBBQIddQ")
HEADER_SIZE = HEADER.size + 4


def record_dtype(n_bins: int) -> np.dtype:
    return np.dtype([("params", "<f8", (len(FIELDS),)), ("samples", "<f4", (n_bins,))])


def encode_dataset(ds: Dataset, grid: TimeGrid = None) -> bytes:
    grid = ds.grid if grid is None else grid
    if grid is None:
        raise EmptyPayload("dataset without samples or time grid")
    header = HEADER.pack(
        MAGIC,
        VERSION,
        SPLIT_TAGS.index(ds.split_tag),
        0,
        len(ds),
        grid.n_bins,
        grid.dt,
        grid.t0,
        ds.seed,
    )
    header += struct.pack("<I", zlib.crc32(header))
    records = np.zeros(len(ds), dtype=record_dtype(grid.n_bins))
    if len(ds):
        records["params"] = ds.params_matrix()
        records["samples"] = np.stack([w.samples for w in ds.waveforms])
    return header + records.tobytes()


def write_dataset(ds: Dataset, path, grid: TimeGrid = None):
    """Write ``ds`` to ``path``. Samples are stored as float32, parameters as float64.

    Args:
        ds (Dataset): the dataset.
        path (str): destination file.
        grid (TimeGrid, optional): required only for an empty dataset.

    Raises:
        EmptyPayload: if ``ds`` is empty and no grid is given.
    """
    data = encode_dataset(ds, grid)
    with open(path, "wb") as f:
        f.write(data)
    logger.info(f"Wrote {len(ds)} samples to {path}")


def decode_dataset(data: bytes, path="<bytes>") -> Dataset:
    if data[:4] != MAGIC:
        raise BadMagic(path, MAGIC, bytes(data[:4]))
    if len(data) < HEADER_SIZE:
        raise TruncatedFile(path, HEADER_SIZE, len(data))

    (crc,) = struct.unpack_from("<I", data, HEADER.size)
    if zlib.crc32(data[: HEADER.size]) != crc:
        raise HeaderCorrupted(path)
    _, version, tag, _, n_samples, n_bins, dt, t0, seed = HEADER.unpack_from(data)
    if version != VERSION:
        raise VersionUnsupported(path, version)
    if tag >= len(SPLIT_TAGS):
        raise HeaderCorrupted(path)

    dtype = record_dtype(n_bins)
    expected = n_samples * dtype.itemsize
    found = len(data) - HEADER_SIZE
    if found < expected:
        raise TruncatedFile(path, HEADER_SIZE + expected, len(data))
    if found > expected:
        raise CountMismatch(path, expected, found)

    grid = TimeGrid(n_bins=n_bins, dt=dt, t0=t0)
    records = np.frombuffer(data, dtype=dtype, count=n_samples, offset=HEADER_SIZE)
    return Dataset.from_arrays(
        grid,
        records["samples"].astype(np.float32),
        records["params"].astype(np.float64),
        seed=seed,
        split_tag=SPLIT_TAGS[tag],
    )


def read_dataset(path) -> Dataset:
    """Read a dataset file.

    Raises:
        BadMagic: if the file does not start with ``b"BWF1"``.
        HeaderCorrupted: if the header checksum does not match.
        VersionUnsupported: if the format version is not 1.
        TruncatedFile: if the file is shorter than its header declares.
        CountMismatch: if the file holds more records than its header declares.
    """
    with open(path, "rb") as f:
        data = f.read()
    ds = decode_dataset(data, path)
    logger.info(f"Read {len(ds)} samples from {path}")
    return ds
