"""JSON instance files: schema version 1, exact rationals as strings.

Rationals serialize as "p/q" (or "p" when the denominator is 1); matrices as
nested row-major arrays of such strings. Three payload kinds exist:
a level-delta series, a chain, and a bare subspace task carrying its block
split. Loading validates the payload against its structural invariants, and
for series also against section-space membership; loading what was saved
reproduces the object bit-exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .chain import ChainComponent, ChainError, ComponentKind, ContinuousChain
from .curve import CurveModel
from .delta import build_delta
from .linalg import Subspace, format_rational, parse_rational
from .series import LimitLinearSeries, membership_failures
from .torus import TorusSplit

SCHEMA_VERSION = 1


class SchemaError(ValueError):
    """The file is not a valid instance of any supported payload kind."""


@dataclass(frozen=True)
class SubspaceTask:
    """A bare subspace together with the block split acting on it."""

    split: TorusSplit
    subspace: Subspace


def _matrix_json(v: Subspace) -> list[list[str]]:
    return [[format_rational(e) for e in row] for row in v.basis_rows()]


def _subspace_from_json(ambient_dim: int, rows: Any) -> Subspace:
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise SchemaError("a matrix must be a list of rows")
    try:
        parsed = [[parse_rational(e) for e in row] for row in rows]
        return Subspace.from_spanning(ambient_dim, parsed)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise SchemaError(f"bad matrix: {exc}") from exc


def series_to_json(g: LimitLinearSeries) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "level_delta_series",
        "d": g.model.d,
        "r": g.rank,
        "delta": list(g.delta.steps),
        "spaces": {
            format_rational(i): _matrix_json(v) for i, v in g.items()
        },
    }


def series_from_json(payload: dict) -> LimitLinearSeries:
    try:
        model = CurveModel(int(payload["d"]))
        rank = int(payload["r"])
        ladder = build_delta(model.d, [int(s) for s in payload["delta"]])
        raw_spaces = payload["spaces"]
        spaces = []
        for i in ladder.indices:
            key = format_rational(i)
            if key not in raw_spaces:
                raise SchemaError(f"missing space at index {key}")
            spaces.append(_subspace_from_json(model.ambient_dim, raw_spaces[key]))
        extra = set(raw_spaces) - {format_rational(i) for i in ladder.indices}
        if extra:
            raise SchemaError(f"spaces at indices outside the ladder: {sorted(extra)}")
        g = LimitLinearSeries(model, rank, ladder, tuple(spaces))
    except SchemaError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"bad series payload: {exc}") from exc
    bad = membership_failures(g)
    if bad:
        raise SchemaError(
            "spaces leave their section spaces at indices "
            + ", ".join(format_rational(i) for i in bad)
        )
    return g


def chain_to_json(c: ContinuousChain) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "chain",
        "d": c.model.d,
        "r": c.rank,
        "delta": list(c.delta.steps),
        "components": [
            {
                "index": format_rational(comp.index),
                "kind": comp.kind.value,
                "target": {"kind": comp.target_kind, "index": comp.target_index},
                "degree": comp.grassmann_degree,
                "basis": _matrix_json(comp.base_space),
            }
            for comp in c.components
        ],
        "nodes": [_matrix_json(node) for node in c.nodes],
        "hilbert": {
            "grassmann": c.hilbert[0],
            "picard": c.hilbert[1],
            "targets": list(c.hilbert[2]),
            "constant": c.hilbert[3],
        },
    }


def chain_from_json(payload: dict) -> ContinuousChain:
    try:
        model = CurveModel(int(payload["d"]))
        rank = int(payload["r"])
        ladder = build_delta(model.d, [int(s) for s in payload["delta"]])
        components = []
        for raw in payload["components"]:
            components.append(
                ChainComponent(
                    index=parse_rational(raw["index"]),
                    base_space=_subspace_from_json(model.ambient_dim, raw["basis"]),
                    kind=ComponentKind(raw["kind"]),
                    target_kind=raw["target"]["kind"],
                    target_index=int(raw["target"]["index"]),
                    grassmann_degree=int(raw["degree"]),
                )
            )
        nodes = tuple(
            _subspace_from_json(model.ambient_dim, raw) for raw in payload["nodes"]
        )
        hil = payload["hilbert"]
        hilbert = (
            int(hil["grassmann"]),
            int(hil["picard"]),
            tuple(int(t) for t in hil["targets"]),
            int(hil["constant"]),
        )
        return ContinuousChain(model, rank, ladder, tuple(components), nodes, hilbert)
    except SchemaError:
        raise
    except (KeyError, TypeError, ValueError, ChainError) as exc:
        raise SchemaError(f"bad chain payload: {exc}") from exc


def subspace_task_to_json(task: SubspaceTask) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "subspace",
        "dim1": task.split.dim1,
        "dim2": task.split.dim2,
        "basis": _matrix_json(task.subspace),
    }


def subspace_task_from_json(payload: dict) -> SubspaceTask:
    try:
        split = TorusSplit(int(payload["dim1"]), int(payload["dim2"]))
        subspace = _subspace_from_json(split.ambient_dim, payload["basis"])
        return SubspaceTask(split, subspace)
    except SchemaError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"bad subspace payload: {exc}") from exc


_TO_JSON = {
    LimitLinearSeries: series_to_json,
    ContinuousChain: chain_to_json,
    SubspaceTask: subspace_task_to_json,
}

_FROM_JSON = {
    "level_delta_series": series_from_json,
    "chain": chain_from_json,
    "subspace": subspace_task_from_json,
}

Instance = LimitLinearSeries | ContinuousChain | SubspaceTask


def dumps_instance(obj: Instance) -> str:
    encoder = _TO_JSON.get(type(obj))
    if encoder is None:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    return json.dumps(encoder(obj), indent=2, sort_keys=True) + "\n"


def loads_instance(text: str) -> Instance:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise SchemaError("top-level payload must be an object")
    if payload.get("schema_version") != SCHEMA_VERSION:
        raise SchemaError(
            f"unsupported schema_version {payload.get('schema_version')!r};"
            f" expected {SCHEMA_VERSION}"
        )
    kind = payload.get("kind")
    decoder = _FROM_JSON.get(kind)
    if decoder is None:
        raise SchemaError(f"unknown payload kind {kind!r}")
    return decoder(payload)


def save_instance(obj: Instance, path: str | Path) -> None:
    Path(path).write_text(dumps_instance(obj))


def load_instance(path: str | Path) -> Instance:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc
    return loads_instance(text)
