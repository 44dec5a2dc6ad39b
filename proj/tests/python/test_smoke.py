import json
import os
from fractions import Fraction
from pathlib import Path

import pytest

import gimel

FIXTURES = Path(os.environ.get("GIMEL_FIXTURE_DIR", Path(__file__).resolve().parents[2] / "fixtures"))


def load(name):
    return json.loads((FIXTURES / name).read_text())


def test_two_generator_family():
    for n in range(3, 9):
        report = gimel.compute(load(f"p2m37_n{n}.json"))
        g = report["gimel"]
        assert g["breakpoints"] == ["0", "1/2", "1"]
        assert gimel.evaluate(g, Fraction(1, 2)) == Fraction(-n, 2 * (n - 1))
        assert gimel.evaluate(g, 1) == Fraction(-(n + 2), n - 1) + Fraction(1, n - 1)


def test_tensor_and_dual():
    k = gimel.tensor(load("s3_p754.json"), load("s3_p976.json"))
    assert gimel.validate(k) == {"ok": True, "failure": "", "euler": 1}
    report = gimel.compute(k)
    assert report["gamma"] == {"breakpoints": ["0", "1/3", "1"], "values": ["-2", "-2/3", "0"]}
    assert gimel.gamma_at(k, Fraction(1, 2)) == Fraction(-1, 2)
    assert all(v["holds"] for v in gimel.verify(report))
    assert gimel.compute(gimel.dual(k))["gimel"]["values"] == ["0", "0"]


def test_trefoil_and_mirror():
    pd = "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]"
    assert gimel.compute_pd(pd)["gimel"]["values"] == ["0", "-1"]
    assert gimel.compute_pd(gimel.mirror_pd(pd))["gimel"]["values"] == ["0", "1"]


def test_s_for_a_user_potential():
    assert gimel.s_invariant(load("p2m37_n3.json"), "x^3 - x^2", 1) == -2


def test_errors_carry_a_kind():
    with pytest.raises(gimel.GimelError) as err:
        gimel.compute_pd("PD[X[4,1,3,2],X[2,3,1,4]]")
    assert err.value.args[0] == "unsupported-input"
    with pytest.raises(gimel.GimelError):
        gimel.compute({"n": 3, "modules": {"0": [1.5]}})
