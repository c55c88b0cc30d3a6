"""Constants used throughout lg-schubert.

This module defines the package logger, the environment prefix and settings
section of the configuration layer, and the default engine limits.
"""

import logging

LOGGER_NAME: str = "lgschubert"
"""Root logger name; every module logs under this hierarchy."""

LOGGER: logging.Logger = logging.getLogger(LOGGER_NAME)
"""Package logger for diagnostics that do not belong to a single module."""

SETTINGS_SECTION: str = "lgschubert"
"""Top-level key of the settings subtree read by :func:`load_settings`."""

ENV_PREFIX: str = "LGSCHUBERT_"
"""Prefix of environment variables read by :class:`EnvSource`."""

DEFAULT_MAX_RANK: int = 6
"""Largest rank the CLI accepts (cost guard)."""

GENERATOR_LIMIT: int = 9
"""Generators are single-digit tokens ``s1`` .. ``s9``."""

DEFAULT_TRIALS: int = 50
"""Default number of random instances per verification run."""
