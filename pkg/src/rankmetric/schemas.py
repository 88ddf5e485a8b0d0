"""JSON Schemas for the reports the CLI writes to stdout."""

from __future__ import annotations

_int_list = {"type": "array", "items": {"type": "integer", "minimum": 0}}
_matrix = {"type": "array", "items": {"type": "array", "items": {"type": "integer", "minimum": 0}}}
_str_matrix = {"type": "array", "items": {"type": "array", "items": {"type": "string"}}}

PARAMETERS = {
    "type": "object",
    "required": ["p", "e", "q", "m", "n", "k", "modulus"],
    "properties": {
        "p": {"type": "integer"},
        "e": {"type": "integer"},
        "q": {"type": "integer"},
        "m": {"type": "integer"},
        "n": {"type": "integer"},
        "k": {"type": "integer"},
        "modulus": {"type": "string"},
    },
}

CODE_SUMMARY = {
    "type": "object",
    "required": ["n", "k", "weight_distribution", "d", "defect"],
    "properties": {
        "n": {"type": "integer"},
        "k": {"type": "integer"},
        "weight_distribution": _int_list,
        "d": {"type": "integer", "minimum": 1},
        "defect": {"type": "integer", "minimum": 0},
        "generalized_weights": {"type": ["array", "null"], "items": {"type": "integer"}},
    },
}

STEINER_REPORT = {
    "type": "object",
    "required": [
        "q", "t", "k", "n", "is_steiner", "degenerate", "expected_block_count",
        "actual_block_count", "uncovered", "multiply_covered",
    ],
    "properties": {
        "q": {"type": "integer"},
        "t": {"type": "integer", "minimum": 0},
        "k": {"type": "integer"},
        "n": {"type": "integer"},
        "is_steiner": {"type": "boolean"},
        "degenerate": {"type": "boolean"},
        "expected_block_count": {"type": ["integer", "null"]},
        "actual_block_count": {"type": "integer"},
        "uncovered_total": {"type": "integer"},
        "multiply_covered_total": {"type": "integer"},
        "uncovered": {"type": "array", "items": _matrix, "maxItems": 100},
        "multiply_covered": {
            "type": "array",
            "maxItems": 100,
            "items": {
                "type": "object",
                "required": ["subspace", "count"],
                "properties": {"subspace": _matrix, "count": {"type": "integer", "minimum": 2}},
            },
        },
    },
}

ANALYZE = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "analyze report",
    "type": "object",
    "required": ["parameters", "code", "dual", "classification", "timing_seconds"],
    "properties": {
        "parameters": PARAMETERS,
        "code": CODE_SUMMARY,
        "dual": CODE_SUMMARY,
        "classification": {"enum": ["MRD", "dually-AMRD", "AMRD-only", "other"]},
        "A_d_plus_1": {"type": "integer", "minimum": 0},
        "steiner": {"oneOf": [{"type": "null"}, STEINER_REPORT]},
        "timing_seconds": {"type": "number", "minimum": 0},
    },
}

STEINER = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "steiner report",
    "type": "object",
    "required": ["parameters", "d", "A_d", "A_d_plus_1", "blocks", "report", "warnings"],
    "properties": {
        "parameters": PARAMETERS,
        "d": {"type": "integer"},
        "A_d": {"type": "integer"},
        "A_d_plus_1": {"type": "integer"},
        "blocks": {"type": "array", "items": _matrix},
        "report": STEINER_REPORT,
        "warnings": {"type": "array", "items": {"type": "string"}},
    },
}

FEASIBILITY = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "feasibility report",
    "type": "object",
    "required": ["d", "q", "d_plus_1_prime", "d_even", "block_count_integral", "verdict", "reasons"],
    "properties": {
        "d": {"type": "integer", "minimum": 2},
        "q": {"type": "integer", "minimum": 2},
        "d_plus_1_prime": {"type": "boolean"},
        "d_even": {"type": "boolean"},
        "block_count_integral": {"type": "boolean"},
        "block_count": {"type": ["integer", "null"]},
        "verdict": {"type": "boolean"},
        "reasons": {"type": "array", "items": {"type": "string"}},
    },
}

SEARCH = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "search report",
    "type": "object",
    "required": ["parameters", "d", "trials", "seed", "hit_count", "hits"],
    "properties": {
        "parameters": {"type": "object"},
        "d": {"type": "integer"},
        "trials": {"type": "integer", "minimum": 0},
        "seed": {"type": "integer"},
        "hit_count": {"type": "integer", "minimum": 0},
        "hits": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["trial", "generator", "weight_distribution", "dual_weight_distribution"],
                "properties": {
                    "trial": {"type": "integer"},
                    "generator": _str_matrix,
                    "weight_distribution": _int_list,
                    "dual_weight_distribution": _int_list,
                },
            },
        },
    },
}

GAUSS = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "gauss report",
    "type": "object",
    "required": ["a", "b", "q", "value", "j_set", "phi_values", "product", "holds", "text"],
    "properties": {
        "a": {"type": "integer"},
        "b": {"type": "integer"},
        "q": {"type": "integer"},
        "value": {"type": "integer"},
        "j_set": {"type": "array", "items": {"type": "integer"}},
        "phi_values": {"type": "array", "items": {"type": "integer"}},
        "product": {"type": "integer"},
        "holds": {"type": "boolean"},
        "text": {"type": "string"},
    },
}
