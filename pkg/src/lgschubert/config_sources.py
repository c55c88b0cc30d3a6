"""Tree-shaped settings sources.

Every source returns a nested mapping; :func:`~lgschubert.config_runtime.load_settings`
merges them in order. :class:`DictSource` wraps an in-memory mapping,
:class:`JsonTreeSource` and :class:`YamlTreeSource` read files, and
:class:`EnvSource` maps ``LGSCHUBERT_*`` environment variables onto the
settings section.
"""

import json
import os
import re
from pathlib import Path
from typing import Any, Mapping

from .constants import ENV_PREFIX, SETTINGS_SECTION
from .exceptions import ConfigurationError

_PLACEHOLDER = re.compile(r"\$\{(\w+)(?::([^}]*))?\}")


def _lookup(match: re.Match) -> str:
    name, fallback = match.groups()
    return os.environ.get(name, fallback or "")


def expand_env(value: Any) -> Any:
    """Fill ``${NAME}`` and ``${NAME:fallback}`` placeholders in a settings tree.

    Strings anywhere in nested mappings and lists are rewritten; numbers and
    booleans pass through. ``seed: ${SEED:0}`` reads ``SEED`` or falls back to
    ``0``. A missing variable without a fallback leaves ``""``, which
    :func:`~lgschubert.config_runtime.load_settings` rejects for integer keys.
    """
    if isinstance(value, str):
        return _PLACEHOLDER.sub(_lookup, value)
    if isinstance(value, Mapping):
        return {key: expand_env(node) for key, node in value.items()}
    if isinstance(value, list):
        return [expand_env(node) for node in value]
    return value


class TreeSource:
    """Base class of settings sources; subclasses implement :meth:`get_tree`."""

    def get_tree(self) -> Mapping[str, Any]:
        raise NotImplementedError


class DictSource(TreeSource):
    """In-memory settings tree.

    Example:
        >>> DictSource({"lgschubert": {"workers": 4}}).get_tree()["lgschubert"]["workers"]
        4
    """

    def __init__(self, data: Mapping[str, Any], *, expand_env: bool = False):
        self._data = data
        self._expand = expand_env

    def get_tree(self) -> Mapping[str, Any]:
        return expand_env(self._data) if self._expand else self._data


class _FileTreeSource(TreeSource):
    kind = "settings"

    def __init__(self, path: str | Path, *, expand_env: bool = False):
        self._path = Path(path)
        self._expand = expand_env

    def _parse(self, text: str) -> Any:
        raise NotImplementedError

    def get_tree(self) -> Mapping[str, Any]:
        try:
            data = self._parse(self._path.read_text(encoding="utf-8"))
        except ConfigurationError:
            raise
        except Exception as e:
            raise ConfigurationError(f"Failed to load {self.kind} file {self._path}: {e}") from e
        if data is None:
            data = {}
        if not isinstance(data, Mapping):
            raise ConfigurationError(f"{self.kind} file {self._path} must contain a mapping at the top level")
        return expand_env(data) if self._expand else data


class JsonTreeSource(_FileTreeSource):
    """Settings read from a JSON file.

    Raises:
        ConfigurationError: If the file cannot be read or parsed.
    """

    kind = "JSON"

    def _parse(self, text: str) -> Any:
        return json.loads(text)


class YamlTreeSource(_FileTreeSource):
    """Settings read from a YAML file; needs the ``yaml`` extra (PyYAML).

    Raises:
        ConfigurationError: If PyYAML is missing or the file cannot be read or parsed.
    """

    kind = "YAML"

    def _parse(self, text: str) -> Any:
        try:
            import yaml
        except ImportError:
            raise ConfigurationError("PyYAML not installed; install lg-schubert[yaml]") from None
        return yaml.safe_load(text)


class EnvSource(TreeSource):
    """Settings from environment variables: ``LGSCHUBERT_MAX_RANK=5`` becomes ``{"lgschubert": {"max_rank": "5"}}``.

    Values stay strings; typing happens when settings are built.
    """

    def __init__(self, prefix: str = ENV_PREFIX, environ: Mapping[str, str] | None = None):
        self._prefix = prefix
        self._environ = environ

    def get_tree(self) -> Mapping[str, Any]:
        env = os.environ if self._environ is None else self._environ
        section = {k[len(self._prefix) :].lower(): v for k, v in env.items() if k.startswith(self._prefix) and len(k) > len(self._prefix)}
        return {SETTINGS_SECTION: section} if section else {}


def source_for_path(path: str | Path) -> TreeSource:
    """JSON or YAML source chosen by file suffix, with ${VAR} expansion enabled.

    Raises:
        ConfigurationError: For other suffixes.
    """
    suffix = Path(path).suffix.lower()
    if suffix == ".json":
        return JsonTreeSource(path, expand_env=True)
    if suffix in (".yaml", ".yml"):
        return YamlTreeSource(path, expand_env=True)
    raise ConfigurationError(f"Unsupported settings file type {suffix!r}; use .json, .yaml or .yml")
