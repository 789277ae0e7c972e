import os

import singer
from singer import utils

from braidtk import json_schema
from braidtk.json_schema import INTEGER, OBJECT, STRING

LOGGER = singer.get_logger()

MAX_N_ENV = 'BRAIDTK_MAX_N'

DEFAULT_CONFIG = {
    'max_n': 8,
    'summit_cap': 100000,
    'output_format': 'text',
    'seed': 0,
    'logging_level': 'INFO'
}

CONFIG_SCHEMA = {
    'type': OBJECT,
    'properties': {
        'max_n': {'type': INTEGER, 'minimum': 1, 'maximum': 12},
        'summit_cap': {'type': INTEGER, 'minimum': 1},
        'output_format': {'enum': ['text', 'json', 'markdown']},
        'seed': {'type': INTEGER},
        'logging_level': {'enum': ['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']}
    },
    'additionalProperties': False
}

## command line flag -> config key
FLAG_KEYS = {
    'max_n': 'max_n',
    'summit_cap': 'summit_cap',
    'format': 'output_format',
    'seed': 'seed',
    'log_level': 'logging_level'
}


class ConfigError(Exception):
    """
    Raise when the merged configuration is invalid.
    """


def _from_environment(environ):
    value = environ.get(MAX_N_ENV)
    if value is None or value == '':
        return {}
    try:
        return {'max_n': int(value)}
    except ValueError:
        raise ConfigError('`{}` must be an integer, got {!r}'.format(MAX_N_ENV, value))


def load_config(config_path=None, flags=None, environ=None):
    """
    Merge configuration from, lowest precedence first: defaults, the JSON file at
    `config_path`, the environment, and explicit flags.
    :param config_path: [optional] path to a JSON config file
    :param flags: [optional] dict of parsed command line flags, None meaning unset
    :param environ: [optional] mapping used instead of os.environ
    :return: dict
    """
    config = dict(DEFAULT_CONFIG)

    if config_path:
        try:
            from_file = utils.load_json(config_path)
        except (IOError, ValueError) as e:
            raise ConfigError('Unable to read config file {}: {}'.format(config_path, e))
        if not isinstance(from_file, dict):
            raise ConfigError('Config file {} must hold a JSON object'.format(config_path))
        config.update(from_file)

    config.update(_from_environment(os.environ if environ is None else environ))

    for flag, key in FLAG_KEYS.items():
        value = (flags or {}).get(flag)
        if value is not None:
            config[key] = value

    errors = json_schema.instance_errors(CONFIG_SCHEMA, config)
    if errors:
        raise ConfigError('Invalid configuration: {}'.format('; '.join(errors)))

    LOGGER.debug('Configuration: {}'.format(config))
    return config
