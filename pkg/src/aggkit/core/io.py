"""JSON reading and writing of fuzzy measures.

Two layouts are accepted::

    {"n": 2, "values": {"": 0, "1": 0.3, "2": 0.6, "1,2": 1}}
    {"n": 2, "array": [0, 0.3, 0.6, 1]}

Keys of the map form are comma-separated ascending 1-based indices.  The
writer always emits the map form.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from aggkit.core.measures import FuzzyMeasure, mask_of, members
from aggkit.errors import SpecError


def subset_key(mask: int) -> str:
    return ",".join(map(str, members(mask)))


def parse_subset_key(key: str, n: int) -> int:
    if key.strip() == "":
        return 0
    try:
        idx = [int(part) for part in key.split(",")]
    except ValueError:
        raise SpecError(f"bad subset key {key!r}") from None
    if idx != sorted(set(idx)):
        raise SpecError(f"subset key {key!r} must list distinct indices in ascending order")
    if idx[-1] > n:
        raise SpecError(f"subset key {key!r} mentions an element beyond n={n}")
    return mask_of(idx)


def measure_from_json(obj: Any) -> FuzzyMeasure:
    if not isinstance(obj, dict):
        raise SpecError("measure must be a JSON object")
    extra = set(obj) - {"n", "values", "array"}
    if extra:
        raise SpecError(f"unknown keys in measure: {sorted(extra)}")
    if ("values" in obj) == ("array" in obj):
        raise SpecError("measure needs exactly one of 'values' or 'array'")
    n = obj.get("n")
    if isinstance(n, bool) or not isinstance(n, int):
        raise SpecError("measure needs an integer 'n'")
    if "array" in obj:
        arr = obj["array"]
        if not isinstance(arr, list):
            raise SpecError("'array' must be a list")
        return FuzzyMeasure(n, tuple(_number(v) for v in arr))
    table = obj["values"]
    if not isinstance(table, dict):
        raise SpecError("'values' must be an object keyed by subsets")
    vals: list[float | None] = [None] * (1 << n) if 1 <= n <= 20 else []
    if not vals:
        raise SpecError(f"unsupported n={n}")
    for key, v in table.items():
        m = parse_subset_key(key, n)
        if vals[m] is not None:
            raise SpecError(f"subset {key!r} given twice")
        vals[m] = _number(v)
    missing = [subset_key(m) for m, v in enumerate(vals) if v is None]
    if missing:
        raise SpecError(f"measure is missing subsets: {missing[:5]}")
    return FuzzyMeasure(n, tuple(vals))


def _number(v: Any) -> float:
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise SpecError(f"expected a number, got {v!r}")
    return float(v)


def measure_to_json(mu: FuzzyMeasure) -> dict[str, Any]:
    return {"n": mu.n, "values": {subset_key(m): mu.values[m] for m in range(1 << mu.n)}}


def load_measure(path: str | Path) -> FuzzyMeasure:
    with open(path, encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SpecError(f"{path}: invalid JSON ({exc})") from None
    return measure_from_json(obj)


def dump_measure(mu: FuzzyMeasure) -> str:
    return json.dumps(measure_to_json(mu), indent=2)
