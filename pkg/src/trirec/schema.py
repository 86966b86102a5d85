"""JSON Schemas of the CLI reports (draft 2020-12). Scalars are strings:
``"p/q"`` or ``"p"`` for exact values, Python float repr for float64."""

SCALAR = {"type": "string", "pattern": r"^(-?\d+(/\d+)?|-?(\d+\.?\d*([eE][-+]?\d+)?|inf|nan))$"}

EVAL_ROW = {
    "type": "object",
    "required": ["method", "n", "value", "terms_evaluated", "grid_points", "wall_time_ns"],
    "properties": {
        "method": {"enum": ["iterative", "rsum", "flat", "closed"]},
        "n": {"type": "integer", "minimum": 0},
        "value": SCALAR,
        "terms_evaluated": {"type": "integer", "minimum": 0},
        "grid_points": {"type": ["integer", "null"], "minimum": 0},
        "wall_time_ns": {"type": "integer", "minimum": 0},
    },
}

EVAL_REPORT = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "allOf": [EVAL_ROW],
    "required": ["command", "scalar"],
    "properties": {"command": {"const": "eval"}, "scalar": {"enum": ["rational", "float64"]}},
}

COMPARE_REPORT = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["command", "n_max", "methods", "all_equal", "rows"],
    "properties": {
        "command": {"const": "compare"},
        "n_max": {"type": "integer", "minimum": 0},
        "methods": {"type": "array", "items": {"type": "string"}},
        "all_equal": {"type": "boolean"},
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["n", "equal", "values"],
                "properties": {
                    "n": {"type": "integer"},
                    "equal": {"type": "boolean"},
                    "values": {"type": "object", "additionalProperties": SCALAR},
                },
            },
        },
    },
}

BENCH_REPORT = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["command", "n_max", "repeat", "rows"],
    "properties": {"command": {"const": "bench"}, "rows": {"type": "array", "items": EVAL_ROW}},
}

ERROR_REPORT = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["command", "error", "message"],
    "properties": {"error": {"type": "string"}, "message": {"type": "string"}},
}
