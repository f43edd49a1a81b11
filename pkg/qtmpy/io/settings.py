#!/usr/bin/env python
# -*- coding: utf-8 -*-
#######################################################
# Default tolerances, limits and seed.
#######################################################
import os

_TEMPLATES = os.path.join(os.path.dirname(__file__), os.path.pardir, 'templates')

DEFAULT_SETTINGS_FILE = os.path.join(_TEMPLATES, 'settings.yml')

SCHEMA_FILE = os.path.join(_TEMPLATES, 'settings_schema.py')


def _read_yaml(fileName):
    import yaml

    with open(fileName, mode='r', encoding='utf-8') as f:
        data = yaml.safe_load(f)
    if data is None:
        return dict()
    if not isinstance(data, dict):
        raise ValueError(f"{fileName}: Settings must be a mapping, received '{type(data).__name__}'.")
    return data


def validate_settings(settings, fileName="settings"):
    """ Validate ``settings`` against the schema in ``templates/settings_schema.py``.

    :param settings: Dictionary with the settings.
    :param fileName: Name that is used in the error message.

    A ``ValueError`` that lists all invalid keys is raised if the validation fails.
    """
    import json
    from cerberus import Validator

    with open(SCHEMA_FILE, mode='r', encoding='utf-8') as f:
        schema = json.load(f)
    v = Validator(schema)
    if not v.validate(settings):
        msg = "; ".join(f"{k} {v.errors[k]}" for k in sorted(v.errors))
        raise ValueError(f"Failed to validate settings file {fileName}: {msg}")


def load_settings(fileName=None, environ=None):
    """ Return the settings as a dictionary.

    :param fileName: Optional name of a yaml file whose keys override the defaults.
    :param environ: The environment, defaults to ``os.environ``.
    :return: Dictionary with the keys ``validation_tolerance``, ``distribution_tolerance``,
             ``oracle_cells``, ``oracle_max_dimension`` and ``seed``.

    If ``fileName`` is ``None``, the file named by the environment variable
    ``QTM_CONFIG`` is used, if set. The environment variable ``QTM_SEED``
    overrides ``seed``.

    Usage: Type

       >>> from qtmpy.io.settings import load_settings
       >>> s = load_settings(environ={})
       >>> s['oracle_cells']
       4

    """
    environ = os.environ if environ is None else environ
    settings = _read_yaml(DEFAULT_SETTINGS_FILE)
    if fileName is None:
        fileName = environ.get('QTM_CONFIG') or None
    if fileName is not None:
        settings.update(_read_yaml(fileName))
    seed = environ.get('QTM_SEED')
    if seed is not None and seed != "":
        try:
            settings['seed'] = int(seed)
        except ValueError:
            raise ValueError(f"Environment variable QTM_SEED must be an integer, received '{seed}'.")
    validate_settings(settings, fileName if fileName is not None else DEFAULT_SETTINGS_FILE)
    return settings
