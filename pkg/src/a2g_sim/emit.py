"""Deterministic text emitters shared by the CSV, JSON and CLI layers.

Every number leaves the package with six significant digits and a ``.``
decimal separator, independent of locale.
"""
from __future__ import annotations

import json
import math
from typing import Any


def fmt6(value: float) -> str:
    return format(float(value), ".6g")


def round6(obj: Any) -> Any:
    """Round every float in a JSON-like tree to six significant digits.

    Non-finite floats become ``None`` so the output stays strict JSON.
    """
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        if not math.isfinite(obj):
            return None
        return float(fmt6(obj))
    if isinstance(obj, dict):
        return {k: round6(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [round6(v) for v in obj]
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def to_json(obj: Any) -> str:
    return json.dumps(round6(obj), indent=2, ensure_ascii=False, allow_nan=False) + "\n"
