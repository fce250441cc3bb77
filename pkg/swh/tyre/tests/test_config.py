# Copyright (C) 2026  The Software Heritage developers
# See the AUTHORS file at the top-level directory of this distribution
# License: GNU General Public License version 3, or any later version
# See top-level LICENSE file for more information

import copy

import pytest
import yaml

from swh.tyre.config import DEFAULT_CONFIG, load_and_check_config, validate_config


def prepare_config_file(tmpdir, content, name="config.yml"):
    """Prepare configuration file in `$tmpdir/name` with content `content`.

    Args:
        tmpdir (LocalPath): root directory
        content (str/dict): Content of the file either as string or as a dict.
                            If a dict, converts the dict into a yaml string.
        name (str): configuration filename

    Returns
        path (str) of the configuration file prepared.

    """
    config_path = tmpdir / name
    if isinstance(content, dict):  # convert if needed
        content = yaml.dump(content)
    config_path.write_text(content, encoding="utf-8")
    return str(config_path)


@pytest.mark.parametrize("config_file", [None, ""])
def test_load_and_check_config_no_configuration(config_file):
    with pytest.raises(EnvironmentError, match="Configuration file must be defined"):
        load_and_check_config(config_file)


def test_load_and_check_config_inexistent_file():
    config_path = "/some/inexistent/config.yml"
    expected_error = f"Configuration file {config_path} does not exist"
    with pytest.raises(FileNotFoundError, match=expected_error):
        load_and_check_config(config_path)


def test_load_and_check_config_wrong_configuration(tmpdir):
    """Wrong configuration raises"""
    config_path = prepare_config_file(tmpdir, "something: useful")
    with pytest.raises(KeyError, match="missing tyre config entry"):
        load_and_check_config(config_path)


def test_load_and_check_config_defaults(tmpdir):
    config_path = prepare_config_file(tmpdir, {"tyre": None})
    assert load_and_check_config(config_path) == DEFAULT_CONFIG


def test_load_and_check_config_merges_defaults(tmpdir):
    config_path = prepare_config_file(
        tmpdir, {"tyre": {"greedy": False, "bench": {"samples": 3}}}
    )
    cfg = load_and_check_config(config_path)
    assert cfg["greedy"] is False
    assert cfg["checked"] is False
    assert cfg["bench"] == {"samples": 3}
    assert cfg["recursion_limit"] == DEFAULT_CONFIG["recursion_limit"]


def test_validate_config_does_not_alter_defaults():
    before = copy.deepcopy(DEFAULT_CONFIG)
    validate_config({"tyre": {"checked": True, "bench": {"samples": 2}}})
    assert DEFAULT_CONFIG == before


@pytest.mark.parametrize(
    "tyre_config,message",
    [
        ({"checked": "yes"}, "checked must be of type bool"),
        ({"greedy": 1}, "greedy must be of type bool"),
        ({"recursion_limit": "many"}, "recursion_limit must be of type int"),
        ({"recursion_limit": True}, "recursion_limit must be of type int"),
        ({"recursion_limit": 0}, "recursion_limit must be positive"),
        ({"bench": {"samples": 2.5}}, "bench.samples must be of type int"),
        ({"bench": {"samples": -1}}, "bench.samples must be positive"),
        (5, "tyre must be of type dict"),
        ({"bench": [1, 2]}, "bench must be of type dict"),
    ],
)
def test_validate_config_invalid_values(tyre_config, message):
    with pytest.raises(ValueError, match=message):
        validate_config({"tyre": tyre_config})
