"""
Run configuration in a plain ``key = value`` text format.

Blank lines and ``#`` comments are ignored; ``profile_fractions`` takes a
comma-separated list. Defaults reproduce the constant-capillary-pressure
example (sigma 5, eta 6, d 0.1, K+ 10, K- 0.1, N 1000).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields
from pathlib import Path

from .exceptions import ConfigError


@dataclass(frozen=True)
class RunConfig:
    sigma: float = 5.0
    eta: float = 6.0
    d: float = 0.1
    kplus: float = 10.0
    kminus: float = 0.1
    u0: float = 1.0
    n: int = 1000
    tol: float = 1e-6
    max_iters: int = 100
    balance_threshold: float = 1e-2
    axis_scale: float = 1.0
    profile_fractions: tuple[float, ...] = (0.25, 0.5, 0.75, 1.0)
    output_dir: Path = Path("impregnate_out")

    def __post_init__(self):
        _validate(self)


KEYS = tuple(f.name for f in fields(RunConfig))

_POSITIVE = ("sigma", "tol", "balance_threshold", "axis_scale")
_NONNEGATIVE = ("eta", "d", "kplus", "kminus", "u0")


def _validate(cfg: RunConfig) -> None:
    for name in _POSITIVE:
        value = getattr(cfg, name)
        if not (math.isfinite(value) and value > 0.0):
            raise ConfigError(f"{name} must be positive and finite, got {value!r}")
    for name in _NONNEGATIVE:
        value = getattr(cfg, name)
        if not (math.isfinite(value) and value >= 0.0):
            raise ConfigError(f"{name} must be nonnegative and finite, got {value!r}")
    if cfg.n < 2:
        raise ConfigError(f"n must be >= 2, got {cfg.n}")
    if cfg.max_iters < 1:
        raise ConfigError(f"max_iters must be >= 1, got {cfg.max_iters}")
    if not cfg.profile_fractions:
        raise ConfigError("profile_fractions must not be empty")
    for frac in cfg.profile_fractions:
        if not 0.0 < frac <= 1.0:
            raise ConfigError(f"profile_fractions must lie in (0, 1], got {frac!r}")


def _convert(key: str, raw: str):
    raw = raw.strip()
    try:
        if key in ("n", "max_iters"):
            value = float(raw)
            if value != int(value):
                raise ValueError(raw)
            return int(value)
        if key == "profile_fractions":
            return tuple(float(part) for part in raw.split(",") if part.strip())
        if key == "output_dir":
            if not raw:
                raise ValueError(raw)
            return Path(raw)
        return float(raw)
    except ValueError:
        raise ConfigError(f"invalid value for {key}: {raw!r}") from None


def _check_key(key: str, where: str = "") -> str:
    norm = key.strip().replace("-", "_")
    if norm not in KEYS:
        raise ConfigError(f"unknown key {key!r}{where}; valid keys: {', '.join(KEYS)}")
    return norm


def parse_config(text: str = "", overrides: dict[str, str] | None = None) -> RunConfig:
    """Build a :class:`RunConfig` from file text and string overrides.

    Overrides win over file entries, file entries over defaults.
    """
    values: dict[str, object] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {line!r}")
        key, raw = line.split("=", 1)
        key = _check_key(key, f" on line {lineno}")
        try:
            values[key] = _convert(key, raw)
        except ConfigError as exc:
            raise ConfigError(f"line {lineno}: {exc}") from None
    for key, raw in (overrides or {}).items():
        key = _check_key(key)
        values[key] = _convert(key, raw)
    return RunConfig(**values)


def _fmt(value) -> str:
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, tuple):
        return ", ".join(repr(v) for v in value)
    return str(value)


def serialize_config(cfg: RunConfig) -> str:
    return "".join(f"{key} = {_fmt(getattr(cfg, key))}\n" for key in KEYS)


def load_config(path: str | Path | None, overrides: dict[str, str] | None = None) -> RunConfig:
    text = Path(path).read_text() if path is not None else ""
    return parse_config(text, overrides)

