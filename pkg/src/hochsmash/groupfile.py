"""JSON group files: schema validation, parsing, closure.

A group file looks like::

    {"schema_version": 1, "name": "c2-line", "cyclotomic_order": 1, "dim": 1,
     "generators": [[["-1"]]], "max_order": 10000}

Entries are cyclotomic literals in ``z``, a primitive m-th root of unity.
"""

import json
import os

import jsonschema

from .errors import GroupFileError, LiteralParseError
from .exactmath import format_cyclotomic, parse_cyclotomic
from .groups import DEFAULT_MAX_ORDER, close_group
from .linalg import Matrix

SCHEMA_VERSION = 1
MAX_ORDER_ENV = "HOCH_MAX_GROUP_ORDER"

GROUP_FILE_SCHEMA = {
    "type": "object",
    "required": ["name", "cyclotomic_order", "dim", "generators"],
    "additionalProperties": False,
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "name": {"type": "string", "minLength": 1},
        "cyclotomic_order": {"type": "integer", "minimum": 1},
        "dim": {"type": "integer", "minimum": 1},
        "generators": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "array",
                "items": {"type": "array", "items": {"type": "string"}},
            },
        },
        "max_order": {"type": "integer", "minimum": 1},
    },
}


def max_order_cap(requested=None):
    """Closure cap: the environment override wins, then the file, then the default."""
    env = os.environ.get(MAX_ORDER_ENV)
    if env:
        try:
            value = int(env)
        except ValueError:
            raise GroupFileError(f"{MAX_ORDER_ENV} must be an integer, got {env!r}") from None
        if value < 1:
            raise GroupFileError(f"{MAX_ORDER_ENV} must be positive")
        return value
    return requested or DEFAULT_MAX_ORDER


def parse_generators(data):
    """Validated group-file dict -> list of Matrix."""
    try:
        jsonschema.validate(data, GROUP_FILE_SCHEMA)
    except jsonschema.ValidationError as exc:
        path = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise GroupFileError(f"schema error at {path}: {exc.message}") from None
    m, d = data["cyclotomic_order"], data["dim"]
    gens = []
    for k, rows in enumerate(data["generators"]):
        if len(rows) != d or any(len(r) != d for r in rows):
            raise GroupFileError(f"generator {k} is not {d}x{d}")
        try:
            entries = [[parse_cyclotomic(x, m) for x in r] for r in rows]
        except LiteralParseError as exc:
            raise GroupFileError(f"generator {k}: {exc}") from None
        gens.append(Matrix.from_rows(entries, m))
    return gens


def group_from_data(data):
    gens = parse_generators(data)
    return close_group(gens, max_order=max_order_cap(data.get("max_order")), name=data["name"])


def parse_group_file(path):
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise GroupFileError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise GroupFileError(f"{path} is not valid JSON: {exc}") from None
    return group_from_data(data)


def group_to_data(name, generators, max_order=None):
    """Inverse of :func:`parse_generators` for matrices in one field."""
    m = generators[0].order
    data = {
        "schema_version": SCHEMA_VERSION,
        "name": name,
        "cyclotomic_order": m,
        "dim": generators[0].rows,
        "generators": [[[format_cyclotomic(x) for x in g.row(i)] for i in range(g.rows)]
                       for g in generators],
    }
    if max_order is not None:
        data["max_order"] = max_order
    return data
