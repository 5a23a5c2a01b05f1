import os
import tempfile
import unittest

import numpy as np
import pytest


def _generated(n=5, seed=11, split_tag=None):
    from bathywave.simulator import generate_dataset
    from bathywave.wave import TimeGrid

    ds = generate_dataset(n, grid=TimeGrid(n_bins=256), seed=seed)
    if split_tag is not None:
        ds = ds.subset(range(n), split_tag)
    return ds


class TestDatasetFile(unittest.TestCase):
    @pytest.mark.fast
    def test_round_trip(self):
        from bathywave.io import decode_dataset, encode_dataset

        ds = _generated(split_tag="val")
        back = decode_dataset(encode_dataset(ds))
        assert len(back) == len(ds)
        assert back.seed == ds.seed
        assert back.split_tag == "val"
        assert back.grid == ds.grid
        np.testing.assert_array_equal(back.waveform_matrix(), ds.waveform_matrix())
        np.testing.assert_array_equal(back.params_matrix(), ds.params_matrix())
        assert [s.params for s in back] == [s.params for s in ds]

    @pytest.mark.fast
    def test_encoding_is_stable(self):
        from bathywave.io import decode_dataset, encode_dataset

        data = encode_dataset(_generated())
        assert encode_dataset(_generated()) == data
        assert encode_dataset(decode_dataset(data)) == data

    @pytest.mark.fast
    def test_layout(self):
        from bathywave.io import HEADER_SIZE, encode_dataset

        ds = _generated(n=3)
        data = encode_dataset(ds)
        assert HEADER_SIZE == 48
        assert data[:4] == b"BWF1"
        assert len(data) == HEADER_SIZE + 3 * (11 * 8 + 256 * 4)

    @pytest.mark.fast
    def test_samples_are_stored_as_float32(self):
        from bathywave.io import decode_dataset, encode_dataset
        from bathywave.wave import Dataset, TimeGrid

        grid = TimeGrid(n_bins=4)
        samples = np.array([[0.1, 0.2, 0.3, 1.0 / 3.0]])
        params = [[5.0, 0.2, 40.0, 0.5, 2.0, 0.0, 0.0, 0.5, 0.0, 1.0, 19.0]]
        back = decode_dataset(encode_dataset(Dataset.from_arrays(grid, samples, params)))
        np.testing.assert_array_equal(back[0].waveform.samples, samples[0].astype(np.float32))

    @pytest.mark.fast
    def test_empty_dataset_needs_a_grid(self):
        from bathywave.core.exceptions.io import EmptyPayload
        from bathywave.io import decode_dataset, encode_dataset
        from bathywave.wave import Dataset, TimeGrid

        with pytest.raises(EmptyPayload):
            encode_dataset(Dataset([]))
        back = decode_dataset(encode_dataset(Dataset([], seed=4), grid=TimeGrid(n_bins=8)))
        assert len(back) == 0
        assert back.seed == 4

    @pytest.mark.fast
    def test_every_header_byte_is_checked(self):
        from bathywave.core.exceptions import BathywaveError
        from bathywave.io import HEADER_SIZE, decode_dataset, encode_dataset

        data = encode_dataset(_generated(n=2))
        for offset in range(HEADER_SIZE):
            corrupted = bytearray(data)
            corrupted[offset] ^= 0x01
            with pytest.raises(BathywaveError):
                decode_dataset(bytes(corrupted))

    @pytest.mark.fast
    def test_errors(self):
        from bathywave.core.exceptions.io import BadMagic, CountMismatch, HeaderCorrupted, TruncatedFile
        from bathywave.io import decode_dataset, encode_dataset

        data = encode_dataset(_generated(n=2))
        with pytest.raises(BadMagic):
            decode_dataset(b"XXXX" + data[4:])
        with pytest.raises(HeaderCorrupted):
            decode_dataset(data[:8] + b"\xff" + data[9:])
        with pytest.raises(TruncatedFile):
            decode_dataset(data[:20])
        with pytest.raises(TruncatedFile):
            decode_dataset(data[:-1])
        with pytest.raises(CountMismatch):
            decode_dataset(data + b"\x00")

    @pytest.mark.fast
    def test_files(self):
        from bathywave.core.exceptions.io import BadMagic
        from bathywave.io import read_dataset, write_dataset

        ds = _generated()
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "train.bwf")
            write_dataset(ds, path)
            back = read_dataset(path)

            other = os.path.join(tmp, "other.bin")
            with open(other, "wb") as f:
                f.write(b"\x00" * 64)
            with pytest.raises(BadMagic):
                read_dataset(other)
        np.testing.assert_array_equal(back.waveform_matrix(), ds.waveform_matrix())
