"""Deterministic JSON artifacts: fixed float formatting, schema tagging.

Every artifact carries ``"schema": 1``; readers reject unknown schema versions
and unknown keys.  Floats are rendered with 17 significant digits so repeated
runs with identical inputs produce byte-identical files.
"""

from __future__ import annotations

import json
import math

from .errors import ValidationError

SCHEMA_VERSION = 1


def _render(obj) -> str:
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            return '"%s"' % repr(obj)
        if obj == int(obj) and abs(obj) < 1e16:
            return "%.1f" % obj
        return format(obj, ".17g")
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        inner = ",".join(f"{json.dumps(str(k))}:{_render(v)}" for k, v in obj.items())
        return "{" + inner + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(_render(v) for v in obj) + "]"
    # numpy scalars and similar
    if hasattr(obj, "item"):
        return _render(obj.item())
    raise TypeError(f"cannot serialize {type(obj)!r}")


def dumps(obj: dict) -> str:
    """Canonical newline-terminated rendering with the schema field first."""
    tagged = {"schema": SCHEMA_VERSION}
    tagged.update(obj)
    return _render(tagged) + "\n"


def loads(text: str) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(
            f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(obj, dict):
        raise ValidationError("top-level JSON value must be an object")
    schema = obj.pop("schema", SCHEMA_VERSION)
    if schema != SCHEMA_VERSION:
        raise ValidationError(f"unsupported schema version {schema!r}")
    return obj


def require_keys(obj: dict, required, optional=()):
    """Reject missing required keys and any unknown key."""
    missing = [k for k in required if k not in obj]
    if missing:
        raise ValidationError(f"missing keys: {', '.join(missing)}")
    unknown = [k for k in obj if k not in set(required) | set(optional)]
    if unknown:
        raise ValidationError(f"unknown keys: {', '.join(unknown)}")
