import json
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
import pytest

from bwkit.exact import ExactMatrix, ExactPoly, ExactScalar
from bwkit.report import REPORT_DIR_ENV, SCHEMA, dumps, encode, make_report, write_report


@dataclass
class Sample:
    x: Fraction
    hidden: float = field(default=1.0, repr=False)


def test_exact_values_are_lossless_strings():
    assert encode(Fraction(-4, 6)) == "-2/3"
    assert encode(ExactScalar(3)) == "3"
    assert encode(ExactScalar(Fraction(1, 2), -1)) == {"re": "1/2", "im": "-1"}
    assert encode(ExactMatrix([[1, 0], [0, Fraction(1, 3)]])) == [["1", "0"], ["0", "1/3"]]
    assert encode(ExactPoly([1, 0, 2])) == ["1", "0", "2"]


def test_floats_rounded_and_containers():
    assert encode(0.1 + 0.2) == 0.3
    assert encode(np.float64(1.0) / 3) == 0.333333333333
    assert encode(1j) == {"re": 0.0, "im": 1.0}
    assert encode(np.arange(2)) == [0, 1]
    assert encode({(1, 2): (True, None)}) == {"1,2": [True, None]}
    assert encode(Sample(Fraction(1, 2))) == {"x": "1/2"}
    with pytest.raises(TypeError):
        encode(object())


def test_dumps_is_canonical():
    a = make_report("x", "pass", {"b": 1, "a": Fraction(1, 3)})
    b = make_report("x", "pass", {"a": Fraction(2, 6), "b": 1})
    assert dumps(a) == dumps(b)
    assert json.loads(dumps(a))["schema"] == SCHEMA


def test_write_report_only_when_directory_is_set(tmp_path, monkeypatch):
    rep = make_report("x", "pass", {})
    monkeypatch.delenv(REPORT_DIR_ENV, raising=False)
    assert write_report(rep, "x") is None
    monkeypatch.setenv(REPORT_DIR_ENV, str(tmp_path / "out"))
    path = write_report(rep, "x")
    assert path.read_text() == dumps(rep)
