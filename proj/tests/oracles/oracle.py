"""Independent sympy computations used to freeze expected values.

Run from the repository root:

    python3 tests/oracles/oracle.py > tests/oracles/frozen.json

Nothing here calls into the C++ engine. Brackets, contact form, Reeb field
and frame expansions are solved directly as linear systems.
"""

import json
import re

import sympy as sp

x, y, z, u, p, k = sp.symbols("x y z u p k")


def bracket(X, Y, coords):
    return [sp.simplify(sum(X[a] * sp.diff(Y[b], coords[a]) - Y[a] * sp.diff(X[b], coords[a]) for a in range(3)))
            for b in range(3)]


def apply(X, f, coords):
    return sp.simplify(sum(X[a] * sp.diff(f, coords[a]) for a in range(3)))


def d_one_form(w, coords):
    return sp.Matrix(3, 3, lambda a, b: sp.diff(w[b], coords[a]) - sp.diff(w[a], coords[b]))


def pipeline(X1, X2, coords):
    """Contact form, Reeb field, structure functions and invariants."""
    w = sp.symbols("w0:3")
    omega = sp.Matrix(w)
    X1v, X2v = sp.Matrix(X1), sp.Matrix(X2)
    # omega(X1) = omega(X2) = 0 and d omega(X1, X2) = -omega([X1, X2]) = 1
    b12 = sp.Matrix(bracket(X1, X2, coords))
    sol = sp.solve([omega.dot(X1v), omega.dot(X2v), -omega.dot(b12) - 1], w, dict=True)[0]
    omega = sp.Matrix([sp.simplify(sol[s]) for s in w])
    dw = d_one_form(list(omega), coords)
    v = sp.symbols("v0:3")
    V = sp.Matrix(v)
    eqs = [omega.dot(V) - 1, (V.T * dw * X1v)[0], (V.T * dw * X2v)[0]]
    sol = sp.solve(eqs, v, dict=True)[0]
    X0 = [sp.simplify(sol[s]) for s in v]

    M = sp.Matrix.hstack(sp.Matrix(X0), X1v, X2v)

    def expand(W):
        return [sp.simplify(t) for t in M.LUsolve(sp.Matrix(W))]

    b10 = expand(bracket(X1, X0, coords))
    b20 = expand(bracket(X2, X0, coords))
    b21 = expand(bracket(X2, X1, coords))
    assert sp.simplify(b10[0]) == 0 and sp.simplify(b20[0]) == 0 and sp.simplify(b21[0] - 1) == 0
    c011, c012 = b10[1], b10[2]
    c021, c022 = b20[1], b20[2]
    c121, c122 = b21[1], b21[2]
    delta = c021 - c012
    h_tilde = [[c011, delta / 2], [-delta / 2, c022]]
    chi = sp.simplify(-c011**2 + delta**2 / 4)
    kappa = sp.simplify(apply(X2, c121, coords) + apply(X1, c122, coords) - c121**2 + c122**2 - (c012 + c021) / 2)
    return {
        "omega": [sp.simplify(t) for t in omega],
        "X0": X0,
        "sf": [c011, c012, c021, c022, c121, c122],
        "h_tilde": h_tilde,
        "chi": chi,
        "kappa": kappa,
        "frame_expand": expand,
    }


def restricted_lie(Z, X1, X2, coords, expand):
    """(L_Z g)(Xi, Xj) with g = diag(-1, 1) on the frame, as a 2x2 matrix."""
    g = sp.diag(-1, 1)
    ads = [expand(bracket(Z, X, coords)) for X in (X1, X2)]
    for a in ads:
        assert sp.simplify(a[0]) == 0
    A = sp.Matrix([[ads[i][1 + j] for j in range(2)] for i in range(2)])  # row i: [Z, Xi] on X1, X2
    return sp.simplify(-(A * g + g * A.T))


def render(e):
    s = str(sp.factor(sp.simplify(e)))
    return s.replace("**", "^")


def render_all(v):
    if isinstance(v, (list, tuple)):
        return [render_all(t) for t in v]
    return render(v)


def parse_structure_equations(text, labels, params):
    """c[i][j][k] = -(coefficient of w^i ^ w^j in dw^k), antisymmetrized."""
    n = len(labels)
    idx = {l: i for i, l in enumerate(labels)}
    c = [[[sp.Integer(0)] * n for _ in range(n)] for _ in range(n)]
    locals_ = {q: sp.Symbol(q) for q in params}
    for eq in text:
        lhs, rhs = eq.split("=")
        target = idx[lhs.strip()[1:]]
        for sign, coef, a, b in re.findall(r"([+-]?)\s*(?:([^\s+-][^+-]*?)\*)?\s*(\w+)\^(\w+)", rhs):
            value = sp.sympify(coef, locals=locals_) if coef else sp.Integer(1)
            if sign == "-":
                value = -value
            i, j = idx[a], idx[b]
            c[i][j][target] -= value
            c[j][i][target] += value
    return c


def killing(c):
    n = len(c)
    ad = [sp.Matrix(n, n, lambda kk, j: c[i][j][kk]) for i in range(n)]
    return sp.Matrix(n, n, lambda a, b: (ad[a] * ad[b]).trace())


def jacobi_ok(c):
    n = len(c)
    for a in range(n):
        for b in range(n):
            for d in range(n):
                for m in range(n):
                    s = 0
                    for l in range(n):
                        s += c[b][d][l] * c[a][l][m] + c[d][a][l] * c[b][l][m] + c[a][b][l] * c[d][l][m]
                    if sp.simplify(s) != 0:
                        return False
    return True


def inertia(K):
    ev = K.eigenvals()
    pos = sum(m for e, m in ev.items() if e > 0)
    neg = sum(m for e, m in ev.items() if e < 0)
    return [int(pos), int(neg), int(K.shape[0] - pos - neg)]


def main():
    out = {}
    xyz = (x, y, z)

    mart = pipeline([1, 0, y**2 / 2], [0, 1, -x * y / 2], xyz)
    out["martinet"] = {key: render_all(mart[key]) for key in ("omega", "X0", "sf", "h_tilde", "chi", "kappa")}
    out["martinet"]["bracket_21"] = render_all(bracket([0, 1, -x * y / 2], [1, 0, y**2 / 2], xyz))

    H1, H2 = [1, 0, -y / 2], [0, 1, x / 2]
    heis = pipeline(H1, H2, xyz)
    out["heisenberg"] = {key: render_all(heis[key]) for key in ("omega", "X0", "sf", "h_tilde", "chi", "kappa")}
    boost = [y, x, 0]
    dil = [x, y, 2 * z]
    out["heisenberg"]["boost_lie_derivative"] = render_all(restricted_lie(boost, H1, H2, xyz, heis["frame_expand"]).tolist())
    out["heisenberg"]["dilation_lie_derivative"] = render_all(restricted_lie(dil, H1, H2, xyz, heis["frame_expand"]).tolist())

    ode = {}
    xup = (x, u, p)
    for name, Q in (("zero", sp.Integer(0)), ("xp", x * p),
                    ("rigid", (1 + 2 * x) * sp.exp(u) + (x + x**2) * sp.exp(u) * p)):
        N1 = [sp.Integer(1), p, Q]
        N2 = [sp.Integer(0), sp.Integer(0), sp.Integer(1)]
        X1 = [(a + b) / 2 for a, b in zip(N1, N2)]
        X2 = [(a - b) / 2 for a, b in zip(N1, N2)]
        r = pipeline(X1, X2, xup)
        ode[name] = {key: render_all(r[key]) for key in ("omega", "X0", "sf", "chi", "kappa")}
    out["ode"] = ode

    conf_labels = ["T1", "T2", "T3", "P1", "P2", "P3", "P4", "W"]
    conf = [
        "dT1 = P1^T1 + P2^T2 + P3^T3",
        "dT2 = P1^T2 + P2^T1 + P4^T3",
        "dT3 = 2*P1^T3 - T1^T2",
        "dP1 = 1/2*P4^T1 - 1/2*P3^T2 - W^T3",
        "dP2 = 3/2*P4^T2 - 3/2*P3^T1",
        "dP3 = P3^P1 - P4^P2 - W^T1",
        "dP4 = P4^P1 - P3^P2 - W^T2",
        "dW = 2*W^P1 - P4^P3",
    ]
    c = parse_structure_equations(conf, conf_labels, [])
    K = killing(c)
    out["conformal8"] = {"jacobi": jacobi_ok(c), "killing": render_all(K.tolist()), "det": render(K.det()),
                         "inertia": inertia(K)}

    iso = parse_structure_equations(["dT1 = P^T2", "dT2 = P^T1", "dT3 = T2^T1", "dP = k*T2^T1"],
                                    ["T1", "T2", "T3", "P"], ["k"])
    table = []
    for i in range(4):
        for j in range(i + 1, 4):
            terms = [(render(iso[i][j][m].subs(k, 0)), m) for m in range(4) if iso[i][j][m].subs(k, 0) != 0]
            if terms:
                table.append([i, j, terms])
    out["isometry4_k0"] = table

    sl2 = [[[sp.Integer(0)] * 3 for _ in range(3)] for _ in range(3)]

    def setb(i, j, vec):
        for m in range(3):
            sl2[i][j][m] = vec[m]
            sl2[j][i][m] = -vec[m]

    # [X1,X0] = -k X2, [X2,X0] = -k X1, [X2,X1] = X0 in the order (X0, X1, X2)
    setb(1, 0, [0, 0, -k])
    setb(2, 0, [0, -k, 0])
    setb(2, 1, [1, 0, 0])
    out["sl2_e_killing"] = render_all(killing(sl2).tolist())

    print(json.dumps(out, indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
