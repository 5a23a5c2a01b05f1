"""JSON run configuration. See ``docs/config.rst`` for the schema."""
import dataclasses
import json
import logging
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple, Union, get_args, get_origin, get_type_hints

from bathywave.adapt import AdaptConfig
from bathywave.core.exceptions import ConfigError
from bathywave.core.exceptions.simulation import BadRange
from bathywave.core.exceptions.waveform import BadRatios
from bathywave.evaluator import EVALUATORS
from bathywave.nn import ModelConfig, TrainConfig
from bathywave.simulator import ParamRanges, ShiftConfig
from bathywave.wave import DEFAULT_RATIOS, TimeGrid, split_sizes

logger = logging.getLogger(__name__)


@dataclass
class RunConfig:
    """Everything a pipeline run depends on.

    The sections ``grid``, ``ranges``, ``shift``, ``model``, ``train`` and ``adapt`` hold the
    dataclass of the same concern; ``paths`` maps role names (``"dataset"``, ``"model"``,
    ``"out"``...) to files, which must all be distinct. The default model is the desk
    configuration of :meth:`ModelConfig.desk`.
    """

    n_samples: int = 50_000
    seed: int = 0
    split_seed: int = 0
    split_ratios: Tuple[float, float, float] = DEFAULT_RATIOS
    model_seed: int = 0
    method: str = "serial"
    workers: Optional[int] = None
    grid: TimeGrid = field(default_factory=TimeGrid)
    ranges: ParamRanges = field(default_factory=ParamRanges)
    shift: ShiftConfig = field(default_factory=ShiftConfig)
    model: ModelConfig = field(default_factory=ModelConfig.desk)
    train: TrainConfig = field(default_factory=TrainConfig)
    adapt: AdaptConfig = field(default_factory=AdaptConfig)
    paths: Dict[str, str] = field(default_factory=dict)

    def validate(self):
        """Raises:
        ConfigError: naming the first offending key.
        """
        if self.n_samples < 1:
            raise ConfigError("n_samples", "must be >= 1")
        for key in ("seed", "split_seed", "model_seed"):
            if not 0 <= getattr(self, key) < 2**64:
                raise ConfigError(key, "must fit an unsigned 64-bit integer")
        try:
            split_sizes(1, self.split_ratios)
        except BadRatios as e:
            raise ConfigError("split_ratios", str(e)) from e
        if self.method not in EVALUATORS:
            raise ConfigError("method", f"must be one of {list(EVALUATORS)}")
        if self.workers is not None and self.workers < 1:
            raise ConfigError("workers", "must be >= 1")
        self.grid.validate()
        try:
            self.ranges.validate()
        except BadRange as e:
            raise ConfigError(f"ranges.{e.field}", str(e)) from e
        self.shift.validate()
        self.model.validate()
        self.train.validate()
        self.adapt.validate()
        paths = [p for p in self.paths.values() if p is not None]
        if len(set(paths)) != len(paths):
            raise ConfigError("paths", f"must be distinct, got {self.paths}")

    def replace(self, section: str = None, **changes) -> "RunConfig":
        """Copy with top-level fields, or the fields of one section, replaced."""
        if section is None:
            return dataclasses.replace(self, **changes)
        try:
            updated = dataclasses.replace(getattr(self, section), **changes)
        except TypeError as e:
            raise ConfigError(section, str(e)) from e
        return dataclasses.replace(self, **{section: updated})

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "RunConfig":
        """Raises:
        ConfigError: on unknown keys or values of the wrong type.
        """
        return _build(cls(), d, "")


def _type_error(key, hint, value):
    name = getattr(hint, "__name__", str(hint))
    return ConfigError(key, f"expected {name}, got {value!r}")


def _coerce(value, hint, key):
    """Check a JSON value against the annotation of its field; lists become tuples."""
    origin, args = get_origin(hint), get_args(hint)
    if origin is Union:
        if value is None and type(None) in args:
            return None
        (hint,) = [a for a in args if a is not type(None)]
        return _coerce(value, hint, key)
    if origin is tuple:
        if not isinstance(value, (list, tuple)):
            raise _type_error(key, hint, value)
        if len(args) == 2 and args[1] is Ellipsis:
            args = (args[0],) * len(value)
        if len(value) != len(args):
            raise ConfigError(key, f"expected {len(args)} values, got {len(value)}")
        return tuple(_coerce(v, a, f"{key}[{i}]") for i, (v, a) in enumerate(zip(value, args)))
    if origin is dict:
        if not isinstance(value, dict):
            raise _type_error(key, hint, value)
        return {k: _coerce(v, Optional[args[1]], f"{key}.{k}") for k, v in value.items()}
    if hint is bool:
        if not isinstance(value, bool):
            raise _type_error(key, hint, value)
    elif hint is int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise _type_error(key, hint, value)
    elif hint is float:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise _type_error(key, hint, value)
        return float(value)
    elif hint is str:
        if not isinstance(value, str):
            raise _type_error(key, hint, value)
    return value


def _build(base, d, prefix):
    if not isinstance(d, dict):
        raise ConfigError(prefix.rstrip(".") or "<root>", f"expected an object, got {d!r}")
    names = {f.name for f in dataclasses.fields(base)}
    for key in d:
        if key not in names:
            raise ConfigError(f"{prefix}{key}", "unknown key")
    hints = get_type_hints(type(base))
    kwargs = {}
    for key, value in d.items():
        current = getattr(base, key)
        if dataclasses.is_dataclass(current):
            value = _build(current, value, f"{prefix}{key}.")
        else:
            value = _coerce(value, hints[key], f"{prefix}{key}")
        kwargs[key] = value
    try:
        return dataclasses.replace(base, **kwargs)
    except (TypeError, ValueError) as e:
        raise ConfigError(prefix.rstrip(".") or "<root>", str(e)) from e


def load_config(path) -> RunConfig:
    """Read and validate a JSON run configuration.

    Raises:
        ConfigError: on malformed JSON, unknown keys or out-of-bounds values.
    """
    with open(path) as f:
        try:
            d = json.load(f)
        except json.JSONDecodeError as e:
            raise ConfigError("<file>", f"{path} is not valid JSON: {e}") from e
    config = RunConfig.from_dict(d)
    config.validate()
    logger.info(f"Loaded run configuration from {path}")
    return config


def dump_config(config: RunConfig, path):
    with open(path, "w") as f:
        json.dump(config.to_dict(), f, indent=2, sort_keys=True)
