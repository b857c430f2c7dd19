"""Sweep configuration: per-suite defaults and JSON config-file validation."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, replace

import jsonschema

SUITES = ("thm1", "qdyson", "kadell", "lemma31", "lemma32", "prop41", "recursion", "cai", "section5")

# n_max is the largest number of variables for the constant-term suites, and the
# largest index (i, j for lemma31; n for prop41) for the two one-variable suites.
_DEFAULTS = {
    "thm1": dict(n_max=3, a_max=2, lambda_size_max=4),
    "qdyson": dict(n_max=4, a_max=2, lambda_size_max=0),
    "kadell": dict(n_max=3, a_max=2, lambda_size_max=3),
    "lemma31": dict(n_max=4, a_max=0, lambda_size_max=0),
    "lemma32": dict(n_max=3, a_max=2, lambda_size_max=0),
    "prop41": dict(n_max=10, a_max=0, lambda_size_max=0),
    "recursion": dict(n_max=3, a_max=2, lambda_size_max=4),
    "cai": dict(n_max=3, a_max=2, lambda_size_max=4),
    "section5": dict(n_max=3, a_max=2, lambda_size_max=0),
}

CONFIG_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "properties": {
        "suite": {"enum": list(SUITES)},
        "n_max": {"type": "integer", "minimum": 0},
        "a_max": {"type": "integer", "minimum": 0},
        "lambda_size_max": {"type": "integer", "minimum": 0},
        "seed": {"type": "integer"},
        "parallelism": {"type": "integer", "minimum": 1},
    },
    "required": ["suite"],
    "additionalProperties": False,
}


class ConfigError(ValueError):
    """Config document is unreadable or violates the schema."""


@dataclass(frozen=True)
class SweepConfig:
    suite: str
    n_max: int
    a_max: int
    lambda_size_max: int
    seed: int = 0
    parallelism: int = 1

    @classmethod
    def for_suite(cls, suite: str, **overrides) -> "SweepConfig":
        if suite not in SUITES:
            raise ConfigError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
        base = cls(suite=suite, **_DEFAULTS[suite])
        return replace(base, **{k: v for k, v in overrides.items() if v is not None})

    def as_dict(self, include_parallelism: bool = False) -> dict:
        d = asdict(self)
        if not include_parallelism:
            # worker count never changes results; keep it out of the report
            d.pop("parallelism")
        return d


def load_config(path) -> SweepConfig:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}") from exc
    validator = jsonschema.Draft202012Validator(CONFIG_SCHEMA)
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        err = errors[0]
        loc = "/" + "/".join(str(p) for p in err.absolute_path)
        raise ConfigError(f"{path}: {loc}: {err.message}")
    suite = doc.pop("suite")
    return SweepConfig.for_suite(suite, **doc)
