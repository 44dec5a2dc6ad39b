"""Exact computation of the piecewise-linear slice-torus invariants of a knot
from a fixture complex or a planar diagram.

Complexes and reports are plain dicts in the same JSON schema the command-line
tool reads and writes. Rationals are strings such as ``"-3/4"``.
"""

import json
from fractions import Fraction

from ._core import GimelError
from . import _core

__all__ = [
    "GimelError",
    "compute",
    "compute_pd",
    "dual",
    "gamma_at",
    "mirror_pd",
    "s_invariant",
    "tensor",
    "validate",
    "verify",
    "evaluate",
]


def _text(fixture):
    return fixture if isinstance(fixture, str) else json.dumps(fixture)


def compute(fixture):
    return json.loads(_core.compute_fixture(_text(fixture)))


def compute_pd(pd):
    return json.loads(_core.compute_pd(pd))


def s_invariant(fixture, potential, alpha=1):
    return Fraction(_core.s_invariant(_text(fixture), potential, str(alpha)))


def tensor(a, b):
    return json.loads(_core.tensor(_text(a), _text(b)))


def dual(a):
    return json.loads(_core.dual(_text(a)))


def validate(fixture):
    ok, failure, euler = _core.validate(_text(fixture))
    return {"ok": ok, "failure": failure, "euler": euler}


def mirror_pd(pd):
    return _core.mirror_pd(pd)


def gamma_at(fixture, t):
    return Fraction(_core.gamma_at(_text(fixture), str(Fraction(t))))


def verify(report):
    return json.loads(_core.verify(json.dumps(report["gimel"])))


def evaluate(piecewise, t):
    """Exact value of a serialized piecewise-linear function at t."""
    t = Fraction(t)
    ts = [Fraction(x) for x in piecewise["breakpoints"]]
    vs = [Fraction(x) for x in piecewise["values"]]
    for i in range(len(ts) - 1):
        if ts[i] <= t <= ts[i + 1]:
            w = (t - ts[i]) / (ts[i + 1] - ts[i])
            return vs[i] + w * (vs[i + 1] - vs[i])
    raise ValueError(f"t = {t} is outside [0, 1]")
