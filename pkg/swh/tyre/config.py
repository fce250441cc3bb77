# Copyright (C) 2026  The Software Heritage developers
# See the AUTHORS file at the top-level directory of this distribution
# License: GNU General Public License version 3, or any later version
# See top-level LICENSE file for more information

import os
from typing import Any, Dict

from swh.core.config import read as config_read
from swh.tyre.constants import (
    DEFAULT_BENCH_SAMPLES,
    DEFAULT_GREEDY,
    DEFAULT_RECURSION_LIMIT,
)

DEFAULT_CONFIG: Dict[str, Any] = {
    "checked": False,
    "greedy": DEFAULT_GREEDY,
    "recursion_limit": DEFAULT_RECURSION_LIMIT,
    "bench": {"samples": DEFAULT_BENCH_SAMPLES},
}


def load_and_check_config(config_file):
    """Load a configuration file and check its ``tyre`` entry.

    Args:
        config_file (str): Path to the configuration file to load

    Raises:
        EnvironmentError: if no path is given
        FileNotFoundError: if the file does not exist
        KeyError, ValueError: see :func:`validate_config`

    Returns:
        the ``tyre`` configuration, defaults filled in

    """
    if not config_file:
        raise EnvironmentError("Configuration file must be defined")

    if not os.path.exists(config_file):
        raise FileNotFoundError("Configuration file %s does not exist" % (config_file,))

    cfg = config_read(config_file)
    return validate_config(cfg)


def _check_type(key: str, value: Any, expected: type) -> None:
    # bool is an int subclass, but not a valid count
    if not isinstance(value, expected) or (expected is int and isinstance(value, bool)):
        raise ValueError(
            "Invalid configuration; %s must be of type %s, got %r"
            % (key, expected.__name__, value)
        )


def validate_config(cfg):
    """Check the ``tyre`` entry of a loaded configuration.

    Args:
        cfg (dict): Loaded configuration.

    Raises:
        KeyError: if the ``tyre`` entry is missing
        ValueError: on an entry of the wrong type or out of range

    Returns:
        the ``tyre`` configuration, defaults filled in

    """
    if "tyre" not in cfg:
        raise KeyError("Invalid configuration; missing tyre config entry")

    tcfg = cfg["tyre"] or {}
    _check_type("tyre", tcfg, dict)
    bench = tcfg.get("bench") or {}
    _check_type("bench", bench, dict)
    result = dict(DEFAULT_CONFIG, **tcfg)
    result["bench"] = dict(DEFAULT_CONFIG["bench"], **bench)

    _check_type("checked", result["checked"], bool)
    _check_type("greedy", result["greedy"], bool)
    _check_type("recursion_limit", result["recursion_limit"], int)
    _check_type("bench.samples", result["bench"]["samples"], int)
    if result["recursion_limit"] < 1:
        raise ValueError("Invalid configuration; recursion_limit must be positive")
    if result["bench"]["samples"] < 1:
        raise ValueError("Invalid configuration; bench.samples must be positive")
    return result
