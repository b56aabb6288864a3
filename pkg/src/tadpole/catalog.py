"""Fibration families as data, and their instantiation over a base.

A scenario is a JSON-compatible dict (see ``tadpole._builtin`` for the
format).  :func:`instantiate_family` turns one into a
:class:`FamilyScenario` over a concrete or formal base, after checking that
the data is internally consistent:

* every equation given for a model is homogeneous, and the twists and
  hypersurface classes it implies agree with the declared ones;
* every stratum named in a table is registered;
* the stratified pushforwards of the resolution reproduce
  ``expected_pushforward`` (and the total space's table, when given,
  reproduces its pushforward).
"""

from __future__ import annotations

import copy
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping, Sequence

import sympy

from ._builtin import BUILTINS
from .bundles import CompleteIntersection, ProjBundle, Space, csm_smooth_ci, double_cover_csm, geometry_of, lift
from .constructible import ConstructibleFunction, Registry, StratificationTable, Stratum, push_stratified
from .errors import CatalogError, DegeneratePresentationError, MissingAssignmentError, NonHomogenizableError
from .ring import BaseGeometry, ChowClass
from .specialize import Component, Intersection, ResolutionDatum, specialization_pushforward

FAMILIES = tuple(BUILTINS)

Vector = dict[str, Fraction]


# -- homogeneity ------------------------------------------------------------

@dataclass
class TwistSolution:
    """Coordinate twists and equation classes implied by homogeneity.

    ``twists[c]`` is the line-bundle part of the class of coordinate ``c``
    (its full class is ``zeta_level + twists[c]``).  ``classes[e]`` is the
    class of equation ``e``, including its ``zeta<i>`` degrees.  Coordinates
    that no equation constrains are listed in ``free`` and given twist 0.
    """

    twists: dict[str, Vector]
    classes: list[Vector]
    free: set[str] = field(default_factory=set)

    @property
    def degree(self) -> Vector:
        return self.classes[0]


def _clean(vec: Mapping[str, Any]) -> Vector:
    return {k: Fraction(v) for k, v in vec.items() if v}


def _monomial(m) -> tuple[list[str], dict[str, int]]:
    if isinstance(m, Mapping):
        return list(m.get("sections", ())), dict(m.get("coords", {}))
    sections, coords = m
    return list(sections), dict(coords)


def solve_tower_twists(
    equations: Sequence[Sequence],
    sections: Mapping[str, Mapping[str, int]],
    levels: Sequence[Sequence[str]],
    anchors: Sequence[str] | None = None,
) -> TwistSolution:
    """Solve for twists making every equation homogeneous.

    ``levels`` lists the coordinates of each tower level; the first
    coordinate of a level (or the given anchor) has twist 0.
    """
    anchors = list(anchors) if anchors is not None else [lv[0] for lv in levels]
    level_of = {c: i for i, lv in enumerate(levels) for c in lv}
    basis = sorted({s for vec in sections.values() for s in vec})
    coords = [c for lv in levels for c in lv]
    unknown = {(c, s): sympy.Symbol(f"t_{c}_{s}") for c in coords if c not in anchors for s in basis}
    eq_sym = {(e, s): sympy.Symbol(f"E{e}_{s}") for e in range(len(equations)) for s in basis}
    system = []
    zeta_degrees: list[dict[int, int]] = []
    constrained = set()
    for e, eq in enumerate(equations):
        degrees = None
        for m in eq:
            secs, exps = _monomial(m)
            for name in secs:
                if name not in sections:
                    raise CatalogError(f"unknown section {name!r}")
            for c in exps:
                if c not in level_of:
                    raise CatalogError(f"unknown coordinate {c!r}")
            constrained.update(exps)
            deg = {}
            for c, k in exps.items():
                deg[level_of[c]] = deg.get(level_of[c], 0) + k
            deg = {i: k for i, k in deg.items() if k}
            if degrees is None:
                degrees = deg
            elif deg != degrees:
                raise NonHomogenizableError(f"equation {e} mixes tower degrees {degrees} and {deg}")
            for s in basis:
                lhs = sum(sections[n].get(s, 0) for n in secs)
                lhs += sum(k * unknown.get((c, s), 0) for c, k in exps.items())
                system.append(sympy.Eq(lhs, eq_sym[e, s]))
        zeta_degrees.append(degrees or {})
    variables = list(unknown.values()) + list(eq_sym.values())
    solutions = sympy.linsolve(system, variables) if system else sympy.FiniteSet(tuple(variables))
    if not solutions:
        raise NonHomogenizableError("no twists make the equations homogeneous")
    (values,) = solutions
    general = dict(zip(variables, (sympy.sympify(v) for v in values)))
    zero = {p: 0 for v in general.values() for p in v.free_symbols}
    value = {k: v.subs(zero) for k, v in general.items()}
    free = {c for (c, s), sym in unknown.items() if c not in constrained or general[sym].free_symbols}

    def vec(expr_of):
        return _clean({s: Fraction(str(value[expr_of(s)])) for s in basis})

    twists = {c: ({} if c in anchors else vec(lambda s, c=c: unknown[c, s])) for c in coords}
    classes = []
    for e in range(len(equations)):
        cls = vec(lambda s, e=e: eq_sym[e, s])
        for i, k in zeta_degrees[e].items():
            cls[f"zeta{i + 1}"] = Fraction(k)
        classes.append(cls)
    return TwistSolution(twists, classes, free)


def solve_twists(
    monomials: Sequence,
    sections: Mapping[str, Mapping[str, int]],
    coordinates: Sequence[str] | None = None,
    anchor: str | None = None,
) -> TwistSolution:
    """Twists of the coordinates of one weighted-homogeneous equation.

    ``monomials`` are ``(sections, {coordinate: exponent})`` pairs or the
    equivalent dicts.  Coordinates default to their order of appearance and
    the anchor (twist 0) to the first of them.
    """
    if coordinates is None:
        coordinates = []
        for m in monomials:
            for c in _monomial(m)[1]:
                if c not in coordinates:
                    coordinates.append(c)
    coordinates = list(coordinates)
    anchor = anchor if anchor is not None else coordinates[0]
    if anchor not in coordinates:
        raise CatalogError(f"anchor {anchor!r} is not a coordinate")
    return solve_tower_twists([monomials], sections, [coordinates], [anchor])


# -- models -----------------------------------------------------------------

def _vector_class(vec: Mapping[str, Any], geometry: BaseGeometry, levels: Sequence[ProjBundle]) -> ChowClass:
    out = geometry.zero()
    root = geometry.root
    for sym, coeff in vec.items():
        if not coeff:
            continue
        if sym == "zeta" and len(levels) == 1:
            sym = "zeta1"
        if sym.startswith("zeta") and sym[4:].isdigit():
            i = int(sym[4:])
            if not 1 <= i <= len(levels):
                raise CatalogError(f"{sym} is not available here")
            term = lift(levels[i - 1].zeta, geometry)
        else:
            try:
                term = lift(root.line_class(sym), geometry)
            except (KeyError, ValueError) as exc:
                raise MissingAssignmentError(f"no class for line symbol {sym!r} on {root.describe()}") from exc
        out = out + Fraction(coeff) * term
    return out


def build_model(mdata: Mapping, sections: Mapping, base: BaseGeometry, name: str = "") -> CompleteIntersection:
    """Complete intersection described by a model dict over ``base``."""
    space: Space = base
    levels: list[ProjBundle] = []
    for i, level in enumerate(mdata.get("tower", ()), start=1):
        coords = level["coordinates"]
        twists = level["twists"]
        if len(coords) != len(twists):
            raise CatalogError(f"{name}: level {i} has {len(coords)} coordinates but {len(twists)} twists")
        summands = [_vector_class(t, geometry_of(space), levels) for t in twists]
        space = ProjBundle(space, summands, zeta=f"zeta{i}", name=f"{name}:{i}")
        levels.append(space)
    geom = geometry_of(space)
    try:
        vectors = [sections[s] for s in mdata.get("sections", ())]
    except KeyError as exc:
        raise CatalogError(f"{name}: unknown section {exc.args[0]!r}") from None
    vectors += list(mdata.get("classes", ()))
    classes = [_vector_class(v, geom, levels) for v in vectors]
    return CompleteIntersection(space, classes, name=name)


def check_model_equations(mdata: Mapping, sections: Mapping, name: str = "") -> TwistSolution | None:
    """Gate: declared twists/classes agree with the ones the equations force."""
    if "equations" not in mdata:
        return None
    tower = mdata.get("tower", ())
    levels = [lv["coordinates"] for lv in tower]
    sol = solve_tower_twists(mdata["equations"], sections, levels)
    for lv in tower:
        anchor_twist = _clean(lv["twists"][0])
        for c, t in zip(lv["coordinates"], lv["twists"]):
            if c in sol.free:
                continue
            t = _clean(t)
            declared = _clean({k: t.get(k, 0) - anchor_twist.get(k, 0) for k in set(t) | set(anchor_twist)})
            if declared != sol.twists[c]:
                raise CatalogError(f"{name}: coordinate {c} declared {dict(t)} but equations force {sol.twists[c]}")
    declared_classes = mdata.get("classes")
    if declared_classes is not None:
        got = [_normalize_class(v) for v in declared_classes]
        if got != sol.classes and not any(_clean(lv["twists"][0]) for lv in tower):
            raise CatalogError(f"{name}: declared classes {got} but equations force {sol.classes}")
    return sol


def _normalize_class(vec: Mapping) -> Vector:
    out = _clean(vec)
    if "zeta" in out:
        out["zeta1"] = out.pop("zeta")
    return out


# -- scenarios --------------------------------------------------------------

@dataclass(frozen=True)
class SectionSpec:
    """A section of a line bundle on the base, e.g. ``f`` in ``L^4``."""

    name: str
    bundle_class: ChowClass

@dataclass
class FamilyScenario:
    """A family instantiated over a base, ready for verification."""

    name: str
    title: str
    base: BaseGeometry
    data: dict
    lhs_kind: str
    lhs_model: CompleteIntersection
    registry: Registry
    resolution: ResolutionDatum
    expected_pushforward: ConstructibleFunction
    published_pushforward: ConstructibleFunction
    lhs_table: StratificationTable | None = None
    lhs_pushforward: ConstructibleFunction | None = None
    sections: dict[str, SectionSpec] = field(default_factory=dict)

    def lhs_csm(self) -> ChowClass:
        """CSM pushforward of the constant function on the generic total space."""
        if self.lhs_kind == "double_cover":
            return double_cover_csm(self.lhs_model.ambient, self.lhs_model)
        return csm_smooth_ci(self.lhs_model)

    @property
    def components(self) -> tuple[Component, ...]:
        return self.resolution.components

    @property
    def intersections(self) -> tuple[Intersection, ...]:
        return self.resolution.intersections

    def to_dict(self) -> dict:
        return copy.deepcopy(self.data)

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.data, **kwargs)


def builtin(name: str) -> dict:
    """A deep copy of a built-in scenario dict."""
    try:
        return copy.deepcopy(BUILTINS[name])
    except KeyError:
        raise CatalogError(f"unknown family {name!r}; known: {', '.join(FAMILIES)}") from None


def load_scenario(path) -> dict:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _table(rows) -> StratificationTable:
    return StratificationTable(tuple(r) for r in rows)


def _with_assignments(base: BaseGeometry, L, S) -> BaseGeometry:
    given = {k: v for k, v in (("L", L), ("S", S)) if v is not None}
    if not given:
        return base
    if base.is_formal:
        raise CatalogError("L and S are symbols on a formal base and take no values")
    if not base.is_projective_space:
        raise CatalogError("assignments need a plain projective-space base")
    merged = dict(base.assignments)
    merged.update(given)
    return BaseGeometry(base.kind, base.symbols, base.degrees, base.caps,
                        tuple(sorted(merged.items())), base.tag)


def _check_symbols(data: dict, base: BaseGeometry) -> None:
    needed = list(data.get("line_symbols", ["L"]))
    if base.is_formal:
        missing = [s for s in needed if s not in base.line_symbols]
        if missing:
            raise MissingAssignmentError(f"formal base lacks line symbols {missing}")
    else:
        assigned = dict(base.assignments)
        missing = [s for s in needed if s not in assigned]
        if missing:
            raise MissingAssignmentError(
                f"family {data.get('name')!r} needs {', '.join(missing)} assigned on {base.describe()}"
            )


def instantiate_family(
    name_or_data: str | Mapping,
    base: BaseGeometry,
    L: int | None = None,
    S: int | None = None,
    check: bool = True,
) -> FamilyScenario:
    """Build a :class:`FamilyScenario` over ``base``.

    On a projective-space base ``L``/``S`` are the degrees ``k`` of ``O(k)``
    (they may also be pre-assigned on ``base``).  With ``check`` the
    consistency gates described in the module docstring are run.
    """
    data = builtin(name_or_data) if isinstance(name_or_data, str) else copy.deepcopy(dict(name_or_data))
    for key in ("name", "sections", "lhs", "strata", "components", "expected_pushforward"):
        if key not in data:
            raise CatalogError(f"scenario is missing {key!r}")
    base = _with_assignments(base, L, S)
    _check_symbols(data, base)
    name = data["name"]
    sections = {k: _clean(v) for k, v in data["sections"].items()}

    def model(mdata, label):
        if check:
            check_model_equations(mdata, sections, f"{name}/{label}")
        return build_model(mdata, sections, base, label)

    strata = []
    for sname, sdata in data["strata"].items():
        if sdata.get("unknown"):
            strata.append(Stratum(sname, description=sdata.get("description", "")))
        else:
            desc = sdata.get("description", "")
            try:
                strata.append(Stratum(sname, model(sdata["model"], sname), description=desc))
            except DegeneratePresentationError:
                # more equations than the base has dimensions: empty stratum
                strata.append(Stratum(sname, csm=base.zero(), description=desc + " (empty here)"))
    registry = Registry(base, strata)

    lhs = data["lhs"]
    kind = lhs.get("kind", "hypersurface")
    if kind not in ("hypersurface", "double_cover"):
        raise CatalogError(f"unknown total-space kind {kind!r}")
    lhs_model = model(lhs["model"], "Y")
    lhs_table = _table(lhs["table"]) if "table" in lhs else None
    lhs_push = ConstructibleFunction(lhs["pushforward"]) if "pushforward" in lhs else None

    components = [
        Component(c["name"], int(c.get("multiplicity", 1)), model(c["model"], c["name"]),
                  _table(c["table"]) if "table" in c else None)
        for c in data["components"]
    ]
    intersections = [
        Intersection(x["name"], tuple(x["pair"]), model(x["model"], x["name"]),
                     _table(x["table"]) if "table" in x else None)
        for x in data.get("intersections", ())
    ]
    resolution = ResolutionDatum(components, intersections)
    expected = ConstructibleFunction(data["expected_pushforward"])
    published = ConstructibleFunction(data.get("published_pushforward", data["expected_pushforward"]))
    for f in (expected, published):
        for s in f:
            registry[s]

    if check:
        derived = specialization_pushforward(resolution, registry)
        if derived != expected:
            raise CatalogError(f"{name}: tables push forward to {derived}, expected {expected}")
        if lhs_table is not None and lhs_push is not None:
            got = push_stratified(lhs_table, registry)
            if got != lhs_push:
                raise CatalogError(f"{name}: total-space table gives {got}, declared {lhs_push}")

    return FamilyScenario(
        name=name, title=data.get("title", name), base=base, data=data, lhs_kind=kind,
        lhs_model=lhs_model, registry=registry, resolution=resolution,
        expected_pushforward=expected, published_pushforward=published,
        lhs_table=lhs_table, lhs_pushforward=lhs_push,
        sections={k: SectionSpec(k, _vector_class(v, base, ())) for k, v in sections.items()},
    )


def rename_line_symbols(data: Mapping, mapping: Mapping[str, str]) -> dict:
    """Copy of a scenario with line symbols renamed (e.g. ``{"L": "M"}``)."""
    def walk(obj, key=None):
        if isinstance(obj, dict):
            vectorish = key in ("sections",) or key == "vector"
            out = {}
            for k, v in obj.items():
                if vectorish and isinstance(v, dict):
                    out[k] = {mapping.get(s, s): c for s, c in v.items()}
                else:
                    out[k] = walk(v, k)
            return out
        if isinstance(obj, list):
            if key in ("twists", "classes"):
                return [{mapping.get(s, s): c for s, c in v.items()} for v in obj]
            if key == "line_symbols":
                return [mapping.get(s, s) for s in obj]
            return [walk(v, key if key == "equations" else None) for v in obj]
        return obj

    out = walk(copy.deepcopy(dict(data)))
    for s in out.get("strata", {}).values():
        if "class" in s:
            s["class"] = {mapping.get(k, k): v for k, v in s["class"].items()}
    return out


def list_families() -> list[dict]:
    return [{"name": n, "title": d["title"], "line_symbols": list(d["line_symbols"]),
             "expected_pushforward": dict(d["expected_pushforward"])} for n, d in BUILTINS.items()]
