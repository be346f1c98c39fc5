import json

import pytest

from nodalseries.chain import build_chain
from nodalseries.generate import random_exact_lls
from nodalseries.linalg import Subspace
from nodalseries.serialize import (
    SchemaError,
    SubspaceTask,
    dumps_instance,
    load_instance,
    loads_instance,
    save_instance,
)
from nodalseries.torus import TorusSplit


def test_series_round_trip_bit_exact():
    g = random_exact_lls(3, 2, (2, 1, 1), seed=14)
    assert loads_instance(dumps_instance(g)) == g


def test_chain_round_trip_bit_exact():
    chain = build_chain(random_exact_lls(2, 1, (2, 2), seed=3))
    assert loads_instance(dumps_instance(chain)) == chain


def test_subspace_task_round_trip():
    task = SubspaceTask(TorusSplit(2, 3), Subspace.from_spanning(5, [(1, 0, 2, 0, 0)]))
    assert loads_instance(dumps_instance(task)) == task


def test_files_round_trip(tmp_path):
    g = random_exact_lls(1, 0, (2,), seed=5)
    path = tmp_path / "series.json"
    save_instance(g, path)
    assert load_instance(path) == g


def test_rationals_serialize_as_fraction_strings():
    task = SubspaceTask(TorusSplit(1, 1), Subspace.from_spanning(2, [(2, 3)]))
    payload = json.loads(dumps_instance(task))
    # canonical basis scales the leading entry to one
    assert payload["basis"] == [["1", "3/2"]]


def test_unknown_schema_version_rejected():
    g = random_exact_lls(1, 0, (1,), seed=0)
    payload = json.loads(dumps_instance(g))
    payload["schema_version"] = 2
    with pytest.raises(SchemaError):
        loads_instance(json.dumps(payload))


def test_unknown_kind_rejected():
    with pytest.raises(SchemaError):
        loads_instance(json.dumps({"schema_version": 1, "kind": "mystery"}))


def test_not_json_rejected():
    with pytest.raises(SchemaError):
        loads_instance("definitely not json {")


def test_bad_matrix_entries_rejected():
    payload = {
        "schema_version": 1,
        "kind": "subspace",
        "dim1": 1,
        "dim2": 1,
        "basis": [["1", "x"]],
    }
    with pytest.raises(SchemaError):
        loads_instance(json.dumps(payload))


def test_missing_space_rejected():
    g = random_exact_lls(1, 0, (1,), seed=1)
    payload = json.loads(dumps_instance(g))
    del payload["spaces"]["1"]
    with pytest.raises(SchemaError):
        loads_instance(json.dumps(payload))


def test_membership_violation_rejected_on_load():
    g = random_exact_lls(1, 0, (1,), seed=2)
    payload = json.loads(dumps_instance(g))
    # a first-block line that breaks the node condition at index 0
    payload["spaces"]["0"] = [["1", "0", "0", "0"]]
    with pytest.raises(SchemaError) as excinfo:
        loads_instance(json.dumps(payload))
    assert "section space" in str(excinfo.value)


def test_dimension_mismatch_rejected_on_load():
    g = random_exact_lls(1, 0, (1,), seed=2)
    payload = json.loads(dumps_instance(g))
    payload["spaces"]["0"] = [["1", "0", "0", "1"], ["0", "1", "0", "0"]]
    with pytest.raises(SchemaError):
        loads_instance(json.dumps(payload))
