import pytest

import sublorentz

MARTINET = ("d/dx + (1/2)*y^2*d/dz", "d/dy - (1/2)*x*y*d/dz")


def test_simplify():
    assert sublorentz.simplify("(x^2 - 1)/(x - 1)") == "x + 1"
    assert sublorentz.simplify("cosh(x)^2 - sinh(x)^2") == "1"


def test_martinet_invariants():
    r = sublorentz.frame_invariants(*MARTINET)
    assert r["chi"] == "1/(4*y^4)"
    assert r["kappa"] == "-5/(2*y^2)"
    assert r["X0"] == "-1/y*d/dx + y*d/dz"
    assert r["h_tilde"] == [["0", "1/(2*y^2)"], ["-1/(2*y^2)", "0"]]


def test_heisenberg_is_flat():
    r = sublorentz.frame_invariants("d/dx - (1/2)*y*d/dz", "d/dy + (1/2)*x*d/dz")
    assert r["chi"] == "0" and r["kappa"] == "0"


def test_degenerate_frame_raises():
    with pytest.raises(sublorentz.Error, match="DegenerateFrame"):
        sublorentz.frame_invariants("d/dx", "d/dy")


def test_algebra():
    assert "conformal8" in sublorentz.algebra_names()
    c = sublorentz.algebra("conformal8")
    assert c["dimension"] == 8
    assert c["jacobi"] == "pass"
    assert c["killing_det"] == "-2239488"
    assert c["inertia"] == (5, 3, 0)
    e = sublorentz.algebra("sl2_e", kappa="-1/2")
    assert e["killing_det"] == "-1/2"


def test_ode():
    r = sublorentz.ode("x*p")
    assert r["chi"] == "0" and r["kappa"] == "0"


def test_cli_report():
    code, report = sublorentz.analyze("martinet")
    assert code == 0
    assert report["invariants"]["kappa"] == "-5/(2*y^2)"
    assert all(c["status"] == "pass" for c in report["checks"])
    with pytest.raises(sublorentz.Error):
        sublorentz.analyze("no_such_structure")
