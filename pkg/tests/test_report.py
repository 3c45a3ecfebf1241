import math

import numpy as np
import pytest

from cuspvol.report import emit_report, flatten, parse_report


def test_emit_format():
    text = emit_report({"a": 1, "b.c": 2.5, "d": "word"})
    assert text == 'a = 1\nb.c = 2.5\nd = "word"\n'


def test_round_trip_scalars():
    mapping = {
        "float": 0.1 + 0.2,
        "neg": -1.0 / 3.0,
        "tiny": 5e-324,
        "big": 1.7976931348623157e308,
        "int": -42,
        "bool_true": True,
        "bool_false": False,
        "none": None,
        "text": "case IVA, beta = 1.06",
        "inf": math.inf,
        "neg_inf": -math.inf,
    }
    assert parse_report(emit_report(mapping)) == mapping


def test_round_trip_random_floats():
    rng = np.random.default_rng(7)
    values = rng.uniform(-1e6, 1e6, size=500).tolist() + list(rng.standard_normal(500))
    mapping = {f"v{i}": float(v) for i, v in enumerate(values)}
    parsed = parse_report(emit_report(mapping))
    assert parsed == mapping  # exact, not approximate


def test_flatten_nested():
    nested = {"run": {"tol": 1e-3, "flags": [1, 2]}, "name": "x"}
    flat = flatten(nested)
    assert flat == {"run.tol": 1e-3, "run.flags.0": 1, "run.flags.1": 2, "name": "x"}


def test_flatten_tuple():
    assert flatten({"interval": (1.0, math.inf)}) == {"interval.0": 1.0, "interval.1": math.inf}


def test_bad_key_rejected():
    with pytest.raises(ValueError):
        emit_report({"has space": 1})
    with pytest.raises(ValueError):
        emit_report({"": 1})


def test_non_scalar_value_rejected():
    with pytest.raises(ValueError):
        emit_report({"a": [1, 2]})
    with pytest.raises(ValueError):
        emit_report({"a": {"b": 1}})


def test_parse_rejects_malformed():
    with pytest.raises(ValueError):
        parse_report("just a line without separator\n")
    with pytest.raises(ValueError):
        parse_report("key = not json at all\n")


def test_parse_skips_blank_lines():
    assert parse_report("a = 1\n\nb = 2\n") == {"a": 1, "b": 2}
