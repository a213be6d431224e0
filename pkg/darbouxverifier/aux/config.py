from copy import deepcopy
import os
import jsonschema
import pathlib
from ruamel.yaml import YAML

from darbouxverifier.aux.errors import ArgumentError

yaml = YAML()

BUDGET_VARIABLE = "DARBOUX_BUDGET"


def get_config_schema():
    script_dir = pathlib.Path(__file__).parent.resolve()
    schema_path = pathlib.Path(script_dir, "./config_schema.yaml").resolve()
    with open(schema_path) as schema_file:
        schema = yaml.load(schema_file)
        return schema


def extend_validator_with_default(validator_class):
    validate_properties = validator_class.VALIDATORS["properties"]

    def set_defaults(validator, properties, instance, schema):
        if isinstance(instance, dict):
            for property, subschema in properties.items():
                if "default" in subschema:
                    instance.setdefault(property, deepcopy(subschema["default"]))

        for error in validate_properties(
            validator,
            properties,
            instance,
            schema,
        ):
            yield error

    return jsonschema.validators.extend(
        validator_class,
        {"properties": set_defaults},
    )


def apply_environment(config, environ=None):
    environ = os.environ if environ is None else environ
    if BUDGET_VARIABLE in environ:
        value = environ[BUDGET_VARIABLE]
        try:
            budget = int(value)
        except ValueError:
            budget = 0
        if budget < 1:
            raise ArgumentError(
                "{} must be a positive integer, got '{}'".format(BUDGET_VARIABLE, value)
            )
        config["refinement"]["budget"] = budget
    return config


def default_config(environ=None):
    config = {}
    config_validator_with_defaults.validate(config)
    return apply_environment(config, environ)


def load_config(path, environ=None):
    with open(path, mode="r", encoding="UTF-8") as config_file:
        raw_config = yaml.load(config_file)
        if raw_config is None:
            raw_config = {}
        config = deepcopy(raw_config)
        validator.validate(config)
        config_with_defaults = deepcopy(config)
        config_validator_with_defaults.validate(config_with_defaults)
        return (
            config,
            apply_environment(config_with_defaults, environ),
            raw_config,
        )


config_schema = get_config_schema()
validator = jsonschema.validators.Draft202012Validator(config_schema)
validator_with_defaults = extend_validator_with_default(
    jsonschema.validators.Draft202012Validator
)
config_validator_with_defaults = validator_with_defaults(config_schema)
