"""Invariants of contact sub-Lorentzian structures on 3-manifolds."""

import json

from ._core import Error, algebra, algebra_names, frame_invariants, ode, run, simplify

__all__ = ["Error", "algebra", "algebra_names", "analyze", "frame_invariants", "ode", "run", "simplify"]


def analyze(source, command="analyze", *extra):
    """Run a report command and return the decoded JSON report together with the exit code."""
    code, out, err = run([command, source, *extra, "--format", "json"])
    if code == 3:
        raise Error(err.strip())
    return code, json.loads(out)
