"""Functions used by other modules
"""

import logging
import os
import pathlib
import re
from functools import lru_cache

from dotwiz import DotWiz
from toolz.curried import curry, merge, merge_with, pipe
import yaml


LOGGER = logging.getLogger(__name__)

CONFIG_PATH = pathlib.Path(__file__).parent.resolve() / "config.yaml"

CONFIG_ENV = "POLYBERN_CONFIG"


fullmatch = curry(re.fullmatch)


def read_yaml(filepath):
    """Read a YAML file

    Args:
      filepath: the path to the YAML file

    Returns:
      returns a dictionary

    >>> read_yaml(CONFIG_PATH)['bounds']['callan_max_size']
    10

    >>> read_yaml(getfixture('config_file'))['bounds']
    {'callan_max_size': 4}
    """
    with open(filepath, encoding="utf-8") as stream:
        data = yaml.safe_load(stream)

    return data


def merge_config(defaults, overrides):
    """Merge a two level configuration dictionary

    Sections missing from `overrides` are taken from `defaults`.

    Args:
      defaults: the packaged configuration
      overrides: a partial configuration

    Returns:
      the merged dictionary

    >>> merge_config(
    ...     {'bounds': {'a': 1, 'b': 2}, 'check': {'max': 40}},
    ...     {'bounds': {'b': 3}},
    ... )
    {'bounds': {'a': 1, 'b': 3}, 'check': {'max': 40}}
    """
    return merge_with(lambda x: merge(*x), defaults, overrides or {})


def get_config(path=None):
    """Get the configuration

    The packaged `config.yaml` supplies the defaults. A YAML file named
    by `path`, or else by the `POLYBERN_CONFIG` environment variable,
    overrides individual keys. Each file is read once per process.

    Args:
      path: optional path to a YAML file with overrides

    Returns:
      the configuration as a DotWiz

    >>> get_config(getfixture('config_file')).bounds.callan_max_size
    4
    >>> get_config(getfixture('config_file')).bounds.lonesum_max_cells
    20
    """
    return load_config(path or os.environ.get(CONFIG_ENV))


@lru_cache(maxsize=None)
def load_config(path):
    """Read and merge the configuration for a given override path

    Use `load_config.cache_clear()` after editing a configuration file.

    >>> load_config(None) is load_config(None)
    True
    """
    if path is not None:
        LOGGER.debug("configuration overrides from %s", path)
    return pipe(
        read_yaml(path) if path is not None else {},
        lambda x: merge_config(read_yaml(CONFIG_PATH), x),
        DotWiz,
    )


@curry
def write_text(dest, text):
    """Write a string to a file

    Args:
      dest: the destination path
      text: the contents

    Returns:
      the path of the written file

    >>> path = getfixture('tmp_path') / 'out.txt'
    >>> assert write_text(path, 'abc\\n') == path
    >>> path.read_text()
    'abc\\n'
    """
    with open(dest, "w", encoding="utf-8") as fstream:
        fstream.write(text)
    return dest
