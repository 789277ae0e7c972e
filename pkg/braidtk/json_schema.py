from jsonschema import Draft4Validator
from jsonschema.exceptions import SchemaError

NULL = 'null'
OBJECT = 'object'
ARRAY = 'array'
INTEGER = 'integer'
STRING = 'string'


class JSONSchemaError(Exception):
    """
    Raise this when there is an error with regards to an instance of JSON Schema
    """


def _unexpected_validation_error(errors, exception):
    """
    :param errors: [String, ...]
    :param exception: Exception
    :return: [String, ...]
    """

    if not errors:
        return ['Unexpected exception encountered: {}'.format(str(exception))]

    return errors + ['Unexpected exception encountered: {}'.format(str(exception))]


def validation_errors(schema):
    """
    Given a dict, returns any known JSON Schema validation errors. If there are none,
    implies that the dict is a valid Draft 4 JSON Schema.
    :param schema: dict
    :return: [String, ...]
    """

    errors = []

    if not isinstance(schema, dict):
        errors.append('Parameter `schema` is not a dict, instead found: {}'.format(type(schema)))
        return errors

    try:
        Draft4Validator.check_schema(schema)
    except SchemaError as error:
        errors.append(str(error))
    except Exception as ex:
        errors = _unexpected_validation_error(errors, ex)

    return errors


def instance_errors(schema, instance):
    """
    Validate `instance` against `schema`.
    :param schema: dict, a valid Draft 4 JSON Schema
    :param instance: any JSON value
    :return: [String, ...], one message per violation, prefixed by its path
    """

    validator = Draft4Validator(schema)
    errors = []
    for error in sorted(validator.iter_errors(instance), key=lambda e: [str(p) for p in e.path]):
        path = '/'.join(str(p) for p in error.path)
        errors.append('{}: {}'.format(path or '<root>', error.message))
    return errors


def validate(schema, instance, what='instance'):
    """
    Raise JSONSchemaError listing every violation of `schema` by `instance`.
    """

    schema_errors = validation_errors(schema)
    if schema_errors:
        raise JSONSchemaError('Invalid JSON Schema for {}'.format(what), *schema_errors)

    errors = instance_errors(schema, instance)
    if errors:
        raise JSONSchemaError('Invalid {}: {}'.format(what, '; '.join(errors)))
    return instance
