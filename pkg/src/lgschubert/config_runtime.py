"""Settings resolution.

:func:`load_settings` deep-merges tree sources (later sources win), takes the
``lgschubert`` section and builds a typed :class:`EngineSettings` from it,
rejecting unknown keys and coercing string values from files and the
environment.
"""

import logging
import typing
from dataclasses import dataclass, fields, replace
from typing import Any, Mapping

from .config_sources import TreeSource
from .constants import DEFAULT_MAX_RANK, DEFAULT_TRIALS, GENERATOR_LIMIT, SETTINGS_SECTION
from .exceptions import ConfigurationError

_logger = logging.getLogger(__name__)

_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


@dataclass(frozen=True)
class EngineSettings:
    """Engine-wide settings.

    Attributes:
        max_rank: Largest rank accepted by the CLI.
        workers: Thread pool size for localization sums and quantum products; 1 is sequential.
        seed: Default seed of ``verify``.
        trials: Default number of random instances of ``verify``.
        log_level: Level of the CLI's stderr logging.
    """

    max_rank: int = DEFAULT_MAX_RANK
    workers: int = 1
    seed: int = 0
    trials: int = DEFAULT_TRIALS
    log_level: str = "WARNING"

    def __post_init__(self):
        if not 1 <= self.max_rank <= GENERATOR_LIMIT:
            raise ConfigurationError(f"max_rank must be in [1, {GENERATOR_LIMIT}], got {self.max_rank}")
        if self.workers < 1:
            raise ConfigurationError(f"workers must be >= 1, got {self.workers}")
        if self.seed < 0:
            raise ConfigurationError(f"seed must be >= 0, got {self.seed}")
        if self.trials < 1:
            raise ConfigurationError(f"trials must be >= 1, got {self.trials}")
        if self.log_level.upper() not in _LOG_LEVELS:
            raise ConfigurationError(f"log_level must be one of {', '.join(_LOG_LEVELS)}, got {self.log_level!r}")
        object.__setattr__(self, "log_level", self.log_level.upper())

    def override(self, **changes: Any) -> "EngineSettings":
        """Copy with the non-``None`` entries of *changes* applied."""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


def _deep_merge(a: Any, b: Any) -> Any:
    if isinstance(a, Mapping) and isinstance(b, Mapping):
        out = dict(a)
        for k, v in b.items():
            out[k] = _deep_merge(out[k], v) if k in out else v
        return out
    return b


def _coerce_int(node: Any, key: str) -> int:
    if isinstance(node, int) and not isinstance(node, bool):
        return node
    if isinstance(node, str):
        try:
            return int(node.strip())
        except ValueError:
            pass
    raise ConfigurationError(f"Expected int at {SETTINGS_SECTION}.{key}, got {node!r}")


def _coerce_str(node: Any, key: str) -> str:
    if isinstance(node, (str, int)) and not isinstance(node, bool):
        return str(node)
    raise ConfigurationError(f"Expected string at {SETTINGS_SECTION}.{key}, got {node!r}")


def build_settings(section: Mapping[str, Any]) -> EngineSettings:
    """Typed settings from the ``lgschubert`` section of a merged tree.

    Raises:
        ConfigurationError: On unknown keys, wrong types or out-of-range values.
    """
    if not isinstance(section, Mapping):
        raise ConfigurationError(f"Expected object at {SETTINGS_SECTION}")
    known = {f.name for f in fields(EngineSettings)}
    extra = sorted(k for k in section if k not in known)
    if extra:
        raise ConfigurationError(f"Unknown keys {extra} at {SETTINGS_SECTION}")
    hints = typing.get_type_hints(EngineSettings)
    values = {}
    for key, node in section.items():
        values[key] = _coerce_int(node, key) if hints[key] is int else _coerce_str(node, key)
    return EngineSettings(**values)


def load_settings(*sources: TreeSource) -> EngineSettings:
    """Merge *sources* in order and build :class:`EngineSettings`; no sources gives the defaults."""
    tree: Mapping[str, Any] = {}
    for source in sources:
        tree = _deep_merge(tree, source.get_tree())
    settings = build_settings(tree.get(SETTINGS_SECTION, {}))
    _logger.debug("settings from %s: %s", [type(s).__name__ for s in sources], settings)
    return settings
