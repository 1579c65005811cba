"""Machine-readable run reports.

A report is a flat JSON object whose keys are always present (``null`` when a
command does not produce that part), so downstream tools can rely on them.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field, fields

from .groups import AbelianGroup

SCHEMA_VERSION = 1

_GROUP = {
    "type": "object",
    "required": ["free_rank", "torsion"],
    "properties": {
        "free_rank": {"type": "integer", "minimum": 0},
        "torsion": {"type": "array", "items": {"type": "integer", "minimum": 2}},
    },
    "additionalProperties": False,
}

_NULLABLE_GROUP = {"oneOf": [{"type": "null"}, _GROUP]}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["schema_version", "command", "input", "seed", "d", "det", "dilation",
                 "charpoly", "certificate", "k0", "k1", "case", "summands", "identity_class",
                 "filterbank", "orthonormal", "norm_decay", "verification", "notes"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "command": {"enum": ["check", "ktheory", "filterbank", "verify", "normdecay"]},
        "input": {"type": "object"},
        "seed": {"type": ["integer", "null"]},
        "d": {"type": ["integer", "null"], "minimum": 1},
        "det": {"type": ["integer", "null"]},
        "dilation": {"type": ["boolean", "null"]},
        "charpoly": {"type": ["array", "null"], "items": {"type": "integer"}},
        "certificate": {"type": ["object", "null"]},
        "k0": _NULLABLE_GROUP,
        "k1": _NULLABLE_GROUP,
        "case": {"type": ["string", "null"]},
        "summands": {
            "type": ["array", "null"],
            "items": {
                "type": "object",
                "required": ["n", "parity", "role", "cokernel"],
                "properties": {
                    "n": {"type": "integer", "minimum": 0},
                    "parity": {"enum": [0, 1]},
                    "role": {"enum": ["coker", "ker"]},
                    "matrix": {"type": "array"},
                    "cokernel": _GROUP,
                },
            },
        },
        "identity_class": {
            "oneOf": [{"type": "null"}, {
                "type": "object",
                "required": ["residue", "modulus", "zero"],
                "properties": {"residue": {"type": "integer"}, "modulus": {"type": "integer"},
                               "zero": {"type": "boolean"}},
            }],
        },
        "filterbank": {"type": ["array", "null"],
                       "items": {"type": "array", "items": {"type": "integer"}}},
        "orthonormal": {"type": ["object", "null"]},
        "norm_decay": {"type": ["object", "null"]},
        "verification": {
            "type": ["array", "null"],
            "items": {"type": "object", "required": ["name", "passed", "checks"]},
        },
        "notes": {"type": "array", "items": {"type": "string"}},
        "timing": {"type": "object"},
    },
    "additionalProperties": False,
}


@dataclass
class RunReport:
    command: str
    input: dict
    seed: int | None = None
    d: int | None = None
    det: int | None = None
    dilation: bool | None = None
    charpoly: list | None = None
    certificate: dict | None = None
    k0: dict | None = None
    k1: dict | None = None
    case: str | None = None
    summands: list | None = None
    identity_class: dict | None = None
    filterbank: list | None = None
    orthonormal: dict | None = None
    norm_decay: dict | None = None
    verification: list | None = None
    notes: list = field(default_factory=list)
    timing: dict | None = None  # only serialized when present; breaks byte-stability
    schema_version: int = SCHEMA_VERSION

    @property
    def verification_passed(self) -> bool:
        return all(s["passed"] for s in self.verification or ())

    def groups(self) -> tuple[AbelianGroup | None, AbelianGroup | None]:
        conv = lambda g: None if g is None else AbelianGroup.from_dict(g)
        return conv(self.k0), conv(self.k1)

    def to_dict(self) -> dict:
        out = asdict(self)
        if out["timing"] is None:
            del out["timing"]
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "RunReport":
        names = {f.name for f in fields(cls)}
        unknown = set(data) - names
        if unknown:
            raise ValueError(f"unknown report keys: {sorted(unknown)}")
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        return cls.from_dict(json.loads(text))
