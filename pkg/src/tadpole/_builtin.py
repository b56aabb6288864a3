"""Scenario data for the built-in families (JSON-compatible).

Conventions:

* a class vector is a dict ``{symbol: coefficient}`` over the base line
  symbols and the tower symbols ``zeta1``, ``zeta2``, ...;
* a model is a tower of split projective bundles (level ``i`` has
  hyperplane class ``zeta<i>`` and one twist per coordinate) together with
  the classes of the hypersurfaces cutting out the variety;
* ``equations`` list the monomials of each defining equation as
  ``{"sections": [...], "coords": {coord: exponent}}``; the catalog checks
  that they are homogeneous for the declared twists and classes;
* table rows are ``[V, W, chi]``; a table may stack several layers whose
  pushforwards add up (see d5).
"""

L1 = {"L": 1}
L2 = {"L": 2}


def _m(coords=None, *sections):
    return {"sections": list(sections), "coords": dict(coords or {})}


def _base_model(*sections):
    """Complete intersection in the base cut out by the given sections."""
    return {"sections": list(sections)}


def _orientifold():
    # z_o^2 = h w^2, a double cover of B branched along O = {h = 0}
    return {
        "name": "X",
        "pair": ["calD1", "calD2"],
        "description": "intersection of the two components: double cover of B branched along O",
        "model": {
            "tower": [{"coordinates": ["w", "z_o"], "twists": [{}, L1]}],
            "classes": [{"zeta1": 2, "L": 2}],
            "equations": [[_m({"z_o": 2}), _m({"w": 2}, "h")]],
        },
        "table": [["B", "O", 2], ["O", None, 1]],
    }


def _strata(**extra):
    out = {
        "B": {"model": {"sections": []}, "description": "the base"},
        "O": {"model": _base_model("h"), "description": "orientifold locus h = 0"},
    }
    out.update(extra)
    return out


WEIERSTRASS = {
    "name": "weierstrass",
    "title": "Weierstrass model y^2 z = x^3 + f x z^2 + g z^3 (E8)",
    "line_symbols": ["L"],
    "sections": {"f": {"L": 4}, "g": {"L": 6}, "h": L2, "eta": {"L": 4}, "sec_chi": {"L": 6}},
    "substitution": "f = -3h^2 + c eta, g = -2h^3 + c h eta + c^2 sec_chi",
    "lhs": {
        "kind": "hypersurface",
        "model": {
            "tower": [{"coordinates": ["z", "x", "y"], "twists": [{}, L2, {"L": 3}]}],
            "classes": [{"zeta1": 3, "L": 6}],
            "equations": [[_m({"y": 2, "z": 1}), _m({"x": 3}), _m({"x": 1, "z": 2}, "f"), _m({"z": 3}, "g")]],
        },
        "table": [["B", "Delta", 0], ["Delta", "C", 1], ["C", None, 2]],
        "pushforward": {"Delta": 1, "C": 1},
    },
    "strata": _strata(
        Delta={"unknown": True, "equation": "4f^3 + 27g^2 = 0", "class": {"L": 12},
               "description": "discriminant (cuspidal along C)"},
        C={"model": _base_model("f", "g"), "description": "cusp locus f = g = 0"},
        D={"unknown": True, "equation": "eta^2 + 12 h chi = 0", "class": {"L": 8},
           "description": "D: singular along S"},
        S={"model": _base_model("h", "eta", "sec_chi"), "description": "h = eta = chi = 0"},
    ),
    "components": [
        {
            "name": "calD1", "multiplicity": 1,
            "description": "exceptional divisor: conic bundle X1^2 = 3h w^2 + eta X3 w + chi X3^2",
            "model": {
                "tower": [{"coordinates": ["w", "X1", "X3"], "twists": [{}, L1, {"L": -2}]}],
                "classes": [{"zeta1": 2, "L": 2}],
                "equations": [[_m({"X1": 2}), _m({"w": 2}, "h"), _m({"X3": 1, "w": 1}, "eta"),
                               _m({"X3": 2}, "sec_chi")]],
            },
            "table": [["B", "D", 2], ["D", "S", 3], ["S", None, 2]],
        },
        {
            "name": "calD2", "multiplicity": 1,
            "description": "proper transform of the central fiber: X1^2 = X2 u - 3h u^2",
            "model": {
                "tower": [{"coordinates": ["u", "X1", "X2"], "twists": [{}, L1, L2]}],
                "classes": [{"zeta1": 2, "L": 2}],
                "equations": [[_m({"X1": 2}), _m({"X2": 1, "u": 1}), _m({"u": 2}, "h")]],
            },
            "table": [["B", None, 2]],
        },
    ],
    "intersections": [_orientifold()],
    "expected_pushforward": {"O": 2, "D": 1, "S": -1},
}


E6 = {
    "name": "e6",
    "title": "cubic x^3 + y^3 = a1 xyz + a2 x z^2 + a3 y z^2 + a4 z^3 (E6)",
    "line_symbols": ["L"],
    "sections": {"a1": L1, "a2": L2, "a3": L2, "a4": {"L": 3},
                 "nu": L1, "h": L2, "phi": L2, "sec_chi": {"L": 3}},
    "substitution": "central fiber is a double line times a line through x + y = nu z",
    "lhs": {
        "kind": "hypersurface",
        "model": {
            "tower": [{"coordinates": ["z", "x", "y"], "twists": [{}, L1, L1]}],
            "classes": [{"zeta1": 3, "L": 3}],
            "equations": [[_m({"x": 3}), _m({"y": 3}), _m({"x": 1, "y": 1, "z": 1}, "a1"),
                           _m({"x": 1, "z": 2}, "a2"), _m({"y": 1, "z": 2}, "a3"), _m({"z": 3}, "a4")]],
        },
    },
    "strata": _strata(
        D1={"model": {"sections": [], "classes": [L2],
                      "equations": [[_m(None, "h"), _m(None, "nu", "nu")]]},
            "description": "h + 3 nu^2 = 0"},
        D2={"unknown": True, "equation": "chi^2 - h phi^2 = 0", "class": {"L": 6},
            "description": "D2: nodal along T2"},
        T2={"model": _base_model("phi", "sec_chi"), "description": "phi = chi = 0"},
        S2={"model": _base_model("h", "phi", "sec_chi"), "description": "h = phi = chi = 0"},
    ),
    "components": [
        {
            "name": "calD1", "multiplicity": 1,
            "description": "exceptional divisor over the double line: U(q^2 - h z^2) = C z (phi q + chi z)",
            "model": {
                "tower": [{"coordinates": ["z", "q"], "twists": [{}, L1]},
                          {"coordinates": ["C", "U"], "twists": [{}, L1]}],
                "classes": [{"zeta2": 1, "zeta1": 2, "L": 3}],
                "equations": [[_m({"U": 1, "q": 2}), _m({"U": 1, "z": 2}, "h"),
                               _m({"C": 1, "z": 1, "q": 1}, "phi"), _m({"C": 1, "z": 2}, "sec_chi")]],
            },
            "table": [["B", "D2", 2], ["D2", "T2", 3], ["T2", "S2", 4], ["S2", None, 3]],
        },
        {
            "name": "calD2", "multiplicity": 1,
            "description": "proper transform: conic s^2 - 3sq + 3q^2 = 3 nu s z + 3h z^2",
            "model": {
                "tower": [{"coordinates": ["z", "s", "q"], "twists": [{}, L1, L1]}],
                "classes": [{"zeta1": 2, "L": 2}],
                "equations": [[_m({"s": 2}), _m({"s": 1, "q": 1}), _m({"q": 2}),
                               _m({"s": 1, "z": 1}, "nu"), _m({"z": 2}, "h")]],
            },
            "table": [["B", "D1", 2], ["D1", None, 3]],
        },
    ],
    "intersections": [_orientifold()],
    "expected_pushforward": {"O": 2, "D1": 1, "D2": 1, "T2": 1, "S2": -1},
    "published_pushforward": {"O": 2, "D1": 1, "D2": 1, "S2": -1},
}


def _quartic_lhs():
    return {
        "kind": "double_cover",
        "model": {
            "tower": [{"coordinates": ["z", "x"], "twists": [{}, L1]}],
            "classes": [{"zeta1": 4, "L": 4}],
            "equations": [[_m({"x": 4}), _m({"x": 2, "z": 2}, "b1"), _m({"x": 1, "z": 3}, "b2"),
                           _m({"z": 4}, "b3")]],
        },
    }


_QUARTIC_SECTIONS = {"b1": L2, "b2": {"L": 3}, "b3": {"L": 4}, "h": L2}


E7 = {
    "name": "e7",
    "title": "double cover y^2 = x^4 + b1 x^2 z^2 + b2 x z^3 + b3 z^4 (E7)",
    "line_symbols": ["L"],
    "sections": dict(_QUARTIC_SECTIONS, delta_s={"L": 3}, gamma={"L": 4}),
    "substitution": "central fiber y^2 = (h - x^2)^2 (two sheets)",
    "lhs": _quartic_lhs(),
    "strata": _strata(
        D3={"unknown": True, "equation": "gamma^2 - h delta^2 = 0", "class": {"L": 8},
            "description": "D3: nodal along T3"},
        T3={"model": _base_model("delta_s", "gamma"), "description": "delta = gamma = 0"},
        S3={"model": _base_model("h", "delta_s", "gamma"), "description": "h = delta = gamma = 0"},
    ),
    "components": [
        {
            "name": "calD1", "multiplicity": 1,
            "description": "exceptional divisor: U(x^2 - h z^2) = C z (delta x + gamma z)",
            "model": {
                "tower": [{"coordinates": ["z", "x"], "twists": [{}, L1]},
                          {"coordinates": ["C", "U"], "twists": [{}, L2]}],
                "classes": [{"zeta2": 1, "zeta1": 2, "L": 4}],
                "equations": [[_m({"U": 1, "x": 2}), _m({"U": 1, "z": 2}, "h"),
                               _m({"C": 1, "z": 1, "x": 1}, "delta_s"), _m({"C": 1, "z": 2}, "gamma")]],
            },
            "table": [["B", "D3", 2], ["D3", "T3", 3], ["T3", "S3", 4], ["S3", None, 3]],
        },
        {
            "name": "calD2", "multiplicity": 1,
            "description": "proper transform of the second sheet, isomorphic to the P^1-bundle of x",
            "model": {
                "tower": [{"coordinates": ["z", "x"], "twists": [{}, L1]}],
                "classes": [],
            },
            "table": [["B", None, 2]],
        },
    ],
    "intersections": [_orientifold()],
    "expected_pushforward": {"O": 2, "D3": 1, "T3": 1, "S3": -1},
    "published_pushforward": {"O": 2, "D3": 1, "S3": -1},
}


E7PRIME = {
    "name": "e7prime",
    "title": "double cover of E7 type, second degeneration (E7')",
    "line_symbols": ["L"],
    "sections": dict(_QUARTIC_SECTIONS, epsilon=L1, zeta_s={"L": 3}, tau={"L": 4}),
    "substitution": "b2 = 2 eps (h - 4 eps^2) + 2c zeta, b3 = ... + c^2 tau",
    "lhs": _quartic_lhs(),
    "strata": _strata(
        D4={"model": {"sections": [], "classes": [L2],
                      "equations": [[_m(None, "h"), _m(None, "epsilon", "epsilon")]]},
            "description": "h + 4 eps^2 = 0"},
        D6={"unknown": True, "equation": "zeta^2 - h tau = 0", "class": {"L": 6},
            "description": "D6: singular along S6"},
        S6={"model": _base_model("h", "zeta_s", "tau"), "description": "h = zeta = tau = 0"},
    ),
    "components": [
        {
            "name": "calD1", "multiplicity": 1,
            "description": "exceptional divisor: conic Y^2 = h W^2 + 2 zeta W C + tau C^2",
            "model": {
                "tower": [{"coordinates": ["W", "Y", "C"], "twists": [{}, L1, {"L": -1}]}],
                "classes": [{"zeta1": 2, "L": 2}],
                "equations": [[_m({"Y": 2}), _m({"W": 2}, "h"), _m({"W": 1, "C": 1}, "zeta_s"),
                               _m({"C": 2}, "tau")]],
            },
            "table": [["B", "D6", 2], ["D6", "S6", 3], ["S6", None, 2]],
        },
        {
            "name": "calD2", "multiplicity": 1,
            "description": "proper transform: conic Y^2 = w^2 - 4 eps w u + h u^2",
            "model": {
                "tower": [{"coordinates": ["u", "w", "Y"], "twists": [{}, L1, L1]}],
                "classes": [{"zeta1": 2, "L": 2}],
                "equations": [[_m({"Y": 2}), _m({"w": 2}), _m({"w": 1, "u": 1}, "epsilon"), _m({"u": 2}, "h")]],
            },
            "table": [["B", "D4", 2], ["D4", None, 3]],
        },
    ],
    "intersections": [_orientifold()],
    "expected_pushforward": {"O": 2, "D4": 1, "D6": 1, "S6": -1},
}


D5 = {
    "name": "d5",
    "title": "intersection of two quadrics in P^3 (D5)",
    "line_symbols": ["L"],
    "sections": {"d1": L2, "d2": L1, "d3": L2, "d4": L1, "d5": L1,
                 "alpha": L2, "eta": L1, "h": L2, "psi1": L1, "psi2": L1},
    "substitution": "central fiber: a double conic and a conic",
    "lhs": {
        "kind": "hypersurface",
        "model": {
            "tower": [{"coordinates": ["z", "x", "y", "w"], "twists": [{}, L1, L1, L1]}],
            "classes": [{"zeta1": 2, "L": 2}, {"zeta1": 2, "L": 2}],
            "equations": [
                [_m({"x": 2}), _m({"y": 2}), _m({"z": 2}, "d1"), _m({"z": 1, "w": 1}, "d2")],
                [_m({"w": 2}), _m({"x": 2}), _m({"z": 2}, "d3"), _m({"x": 1, "z": 1}, "d4"),
                 _m({"y": 1, "z": 1}, "d5")],
            ],
        },
    },
    "strata": _strata(
        D7={"model": {"sections": [], "classes": [L2],
                      "equations": [[_m(None, "h"), _m(None, "psi1", "psi1")]]},
            "description": "h - psi1^2 = 0"},
        D8={"model": {"sections": [], "classes": [L2],
                      "equations": [[_m(None, "h"), _m(None, "psi2", "psi2")]]},
            "description": "h - psi2^2 = 0"},
        D9={"unknown": True, "equation": "h eta^2 - alpha^2 = 0", "class": {"L": 4},
            "description": "D9: nodal along T9"},
        T9={"model": _base_model("alpha", "eta"), "description": "alpha = eta = 0"},
        S9={"model": _base_model("h", "alpha", "eta"), "description": "h = alpha = eta = 0"},
    ),
    "components": [
        {
            "name": "calD1", "multiplicity": 1,
            "description": ("exceptional divisor: the conic w^2 = v^2/4 + h z^2 + psi1 v z, "
                            "blown up where v = alpha z + eta w = 0"),
            "model": {
                "tower": [{"coordinates": ["z", "v", "w"], "twists": [{}, L1, L1]},
                          {"coordinates": ["C", "U"], "twists": [{}, L1]}],
                "classes": [{"zeta1": 2, "L": 2}, {"zeta2": 1, "zeta1": 1, "L": 2}],
                "equations": [
                    [_m({"w": 2}), _m({"v": 2}), _m({"z": 2}, "h"), _m({"v": 1, "z": 1}, "psi1")],
                    [_m({"U": 1, "v": 1}), _m({"C": 1, "z": 1}, "alpha"), _m({"C": 1, "w": 1}, "eta")],
                ],
            },
            # layer 1: the conic; layer 2: vertical lines over the points v = alpha z + eta w = 0
            "table": [["B", "D7", 2], ["D7", None, 3],
                      ["D9", "T9", 1], ["T9", "S9", 2], ["S9", None, 1]],
        },
        {
            "name": "calD2", "multiplicity": 1,
            "description": "proper transform: conic w^2 = x^2 + h z^2 + psi2 x z",
            "model": {
                "tower": [{"coordinates": ["z", "x", "w"], "twists": [{}, L1, L1]}],
                "classes": [{"zeta1": 2, "L": 2}],
                "equations": [[_m({"w": 2}), _m({"x": 2}), _m({"z": 2}, "h"), _m({"x": 1, "z": 1}, "psi2")]],
            },
            "table": [["B", "D8", 2], ["D8", None, 3]],
        },
    ],
    "intersections": [_orientifold()],
    "expected_pushforward": {"O": 2, "D7": 1, "D8": 1, "D9": 1, "T9": 1, "S9": -1},
    "published_pushforward": {"O": 2, "D7": 1, "D8": 1, "D9": 1, "S9": -1},
}


Q7 = {
    "name": "q7",
    "title": "cubic y x^2 = e1 y^3 - e2 y^2 z - e3 x z^2 - e4 y z^2 - e5 z^3 (Q7)",
    "line_symbols": ["L", "S"],
    "sections": {"e1": {"L": 2, "S": -2}, "e2": {"L": 2, "S": -1}, "e3": {"L": 1, "S": 1},
                 "e4": L2, "e5": {"L": 2, "S": 1},
                 "beta": {"L": 2, "S": -2}, "theta": {"L": 2, "S": -1}, "rho": {"L": 1, "S": 1},
                 "h": L2, "iota": {"L": 2, "S": 1}},
    "substitution": "central fiber y (x^2 + h z^2) = -iota z^3 at leading order",
    "lhs": {
        "kind": "hypersurface",
        "model": {
            "tower": [{"coordinates": ["z", "x", "y"], "twists": [{}, L1, {"S": 1}]}],
            "classes": [{"zeta1": 3, "L": 2, "S": 1}],
            "equations": [[_m({"y": 1, "x": 2}), _m({"y": 3}, "e1"), _m({"y": 2, "z": 1}, "e2"),
                           _m({"x": 1, "z": 2}, "e3"), _m({"y": 1, "z": 2}, "e4"), _m({"z": 3}, "e5")]],
        },
    },
    "strata": _strata(
        D10={"model": _base_model("iota"), "description": "iota = 0"},
        S10={"model": _base_model("iota", "h"), "description": "iota = h = 0"},
        D11={"unknown": True, "equation": "theta^2 + h beta = 0", "class": {"L": 4, "S": -2},
             "description": "D11: singular along S11"},
        S11={"model": _base_model("h", "beta", "theta"), "description": "h = beta = theta = 0"},
    ),
    "components": [
        {
            "name": "calD1", "multiplicity": 1,
            "description": "exceptional divisor: U(x^2 + h z^2) + iota C z^2 = 0",
            "model": {
                "tower": [{"coordinates": ["z", "x"], "twists": [{}, L1]},
                          {"coordinates": ["C", "U"], "twists": [{}, {"S": 1}]}],
                "classes": [{"zeta2": 1, "zeta1": 2, "L": 2, "S": 1}],
                "equations": [[_m({"U": 1, "x": 2}), _m({"U": 1, "z": 2}, "h"), _m({"C": 1, "z": 2}, "iota")]],
            },
            "table": [["B", "D10", 2], ["D10", "S10", 4], ["S10", None, 3]],
        },
        {
            "name": "calD2", "multiplicity": 1,
            "description": "proper transform: conic x^2 = beta y^2 - 2 theta y z - h z^2",
            "model": {
                "tower": [{"coordinates": ["z", "x", "y"], "twists": [{}, L1, {"S": 1}]}],
                "classes": [{"zeta1": 2, "L": 2}],
                "equations": [[_m({"x": 2}), _m({"y": 2}, "beta"), _m({"y": 1, "z": 1}, "theta"),
                               _m({"z": 2}, "h")]],
            },
            "table": [["B", "D11", 2], ["D11", "S11", 3], ["S11", None, 2]],
        },
    ],
    "intersections": [_orientifold()],
    "expected_pushforward": {"O": 2, "D10": 2, "S10": -1, "D11": 1, "S11": -1},
}


BUILTINS = {d["name"]: d for d in (WEIERSTRASS, E6, E7, E7PRIME, D5, Q7)}
