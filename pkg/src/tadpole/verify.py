"""Checks of the specialization identity, formally and over projective spaces.

Two modes:

* ``formal``: both sides as classes over a formal base of dimension ``d``,
  compared degree by degree;
* ``numeric``: over ``P^n`` with ``L = O(l)`` (and ``S = O(s)``), the
  singular strata are solved from the stratified pushforwards and both sides
  are compared degree by degree and as Euler characteristics.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping

from .bundles import csm_smooth_ci
from .catalog import FamilyScenario, builtin, instantiate_family
from .constructible import ConstructibleFunction, Registry, csm_of_function, solve_into
from .errors import CatalogError, UnsupportedGeometryError
from .ring import BaseGeometry, ChowClass, formal, projective_space, specialize_base
from .specialize import ResolutionDatum, specialization_csm

DEFAULT_MAX_DIM = 4


def max_dimension() -> int:
    """Dimension cap for formal checks (``TADPOLE_MAX_DIM``, default 4)."""
    raw = os.environ.get("TADPOLE_MAX_DIM")
    if raw is None:
        return DEFAULT_MAX_DIM
    try:
        return int(raw)
    except ValueError:
        raise CatalogError(f"TADPOLE_MAX_DIM must be an integer, got {raw!r}") from None


def _num(x: Fraction) -> int | str:
    return int(x) if x.denominator == 1 else str(x)


@dataclass
class DegreeRow:
    k: int
    lhs: str
    rhs: str
    diff: str

    def to_dict(self) -> dict:
        return {"k": self.k, "lhs": self.lhs, "rhs": self.rhs, "diff": self.diff}


@dataclass
class VerificationReport:
    family: str
    base: str
    mode: str
    degrees: list[DegreeRow]
    verdict: str
    ledger: dict[str, Any] | None = None
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_dict(self) -> dict:
        out = {
            "family": self.family,
            "base": self.base,
            "mode": self.mode,
            "degrees": [r.to_dict() for r in self.degrees],
            "verdict": self.verdict,
        }
        if self.ledger is not None:
            out["ledger"] = self.ledger
        if self.details:
            out["details"] = self.details
        return out

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    def to_markdown(self) -> str:
        lines = [f"### {self.family} over {self.base} ({self.mode}): **{self.verdict.upper()}**", ""]
        if self.ledger:
            lines += [f"`{self.ledger['formula']}`", ""]
        lines += ["| k | lhs | rhs | diff |", "|---|---|---|---|"]
        lines += [f"| {r.k} | {r.lhs} | {r.rhs} | {r.diff} |" for r in self.degrees]
        return "\n".join(lines) + "\n"


def _rows(lhs: ChowClass, rhs: ChowClass, top: int) -> list[DegreeRow]:
    rows = []
    for k in range(top + 1):
        a, b = lhs.degree_component(k), rhs.degree_component(k)
        rows.append(DegreeRow(k, str(a), str(b), str(a - b)))
    return rows


def _scenario(family, base: BaseGeometry) -> FamilyScenario:
    if isinstance(family, FamilyScenario):
        if family.base != base:
            return instantiate_family(family.data, base)
        return family
    return instantiate_family(family, base)


def _formal_base(family, d: int, max_dim: int | None = None) -> BaseGeometry:
    cap = max_dimension() if max_dim is None else max_dim
    if not 0 <= d <= cap:
        raise UnsupportedGeometryError(f"formal dimension {d} outside 0..{cap} (raise TADPOLE_MAX_DIM to allow)")
    if isinstance(family, FamilyScenario):
        if family.base.is_formal and family.base.dimension == d:
            return family.base
        data = family.data
    elif isinstance(family, Mapping):
        data = family
    else:
        data = builtin(family)
    return formal(d, data.get("line_symbols", ["L"]))


def formal_sides(family, d: int, resolution: ResolutionDatum | None = None) -> tuple[ChowClass, ChowClass]:
    scenario = _scenario(family, _formal_base(family, d))
    return scenario.lhs_csm(), specialization_csm(resolution or scenario.resolution)


def check_identity_formal(family, d: int, resolution: ResolutionDatum | None = None,
                          rhs: ChowClass | None = None, max_dim: int | None = None) -> VerificationReport:
    """Compare ``c_SM(phi_* 1_Y)`` with ``c_SM(phi0_* sigma 1)`` over a formal base.

    ``resolution`` or ``rhs`` replace the right-hand side (used by
    mutation tests).  ``max_dim`` overrides the dimension cap.
    """
    base = _formal_base(family, d, max_dim)
    scenario = _scenario(family, base)
    lhs = scenario.lhs_csm()
    if rhs is None:
        rhs = specialization_csm(resolution or scenario.resolution)
    ok = lhs == rhs
    details = {} if ok else {"difference": str(lhs - rhs)}
    return VerificationReport(scenario.name, base.describe(), "formal", _rows(lhs, rhs, d),
                              "pass" if ok else "fail", details=details)


def solve_registry(scenario: FamilyScenario, resolution: ResolutionDatum | None = None) -> Registry:
    """Registry with every solvable singular stratum filled in.

    Each component or intersection whose table has exactly one unknown
    stratum determines that stratum's CSM class from its smooth model, as
    does the table of the generic total space when one is given.
    """
    resolution = resolution or scenario.resolution
    registry = scenario.registry
    sources = [(p.table, csm_smooth_ci(p.model)) for p in (*resolution.components, *resolution.intersections)
               if p.table is not None]
    if scenario.lhs_table is not None:
        sources.append((scenario.lhs_table, scenario.lhs_csm()))
    progress = True
    while registry.unknowns() and progress:
        progress = False
        for table, total in sources:
            names = {n for row in table for n in (row.closed, row.removed) if n is not None}
            pending = [n for n in names if registry[n].is_unknown]
            if len(pending) == 1:
                registry = solve_into(table, total, registry)
                progress = True
    return registry


def _formula(f: ConstructibleFunction, chis: Mapping[str, Fraction], total: Fraction) -> str:
    """``2*chi(O) + chi(D) - chi(S) = 2*4 + 16 - 0 = 24``, orientifold first."""
    order = sorted(f, key=lambda n: (n != "O", n))
    names, values = [], []
    for i, n in enumerate(order):
        c = f[n]
        sign = "-" if c < 0 else ("+" if i else "")
        mult = f"{abs(c)}*" if abs(c) != 1 else ""
        names.append(f"{sign} {mult}chi({n})".strip())
        v = chis[n]
        shown = f"({_num(v)})" if v < 0 and (mult or i) else str(_num(v))
        values.append(f"{sign} {mult}{shown}".strip())
    return f"{' '.join(names)} = {' '.join(values)} = {_num(total)}"


def projective_base(n: int, L: int | None = None, S: int | None = None) -> BaseGeometry:
    kw = {k: v for k, v in (("L", L), ("S", S)) if v is not None}
    return projective_space(n, **kw)


def check_tadpole_numeric(family, n: int | BaseGeometry, L: int | None = None, S: int | None = None,
                          resolution: ResolutionDatum | None = None,
                          pushforward: Mapping[str, int] | None = None,
                          row: str = "expected") -> VerificationReport:
    """Compare both sides over ``P^n``; ``row`` picks ``expected`` or ``published`` pushforward."""
    base = n if isinstance(n, BaseGeometry) else projective_base(n, L, S)
    if not base.is_projective_space:
        raise UnsupportedGeometryError("numeric mode needs a projective-space base")
    scenario = instantiate_family(family.data if isinstance(family, FamilyScenario) else family, base, L=None)
    resolution = resolution or scenario.resolution
    registry = solve_registry(scenario, resolution)
    if pushforward is not None:
        f = ConstructibleFunction(pushforward)
    elif row == "published":
        f = scenario.published_pushforward
    elif row == "expected":
        f = scenario.expected_pushforward
    else:
        raise CatalogError(f"unknown pushforward row {row!r}")
    lhs = scenario.lhs_csm()
    rhs = csm_of_function(f, registry)
    chis = {name: registry.csm(name).integrate() for name in registry}
    lhs_total, rhs_total = lhs.integrate(), rhs.integrate()
    ok = lhs == rhs and lhs_total == rhs_total
    ledger = {"chi_Y": _num(lhs_total)}
    ledger.update({f"chi_{k}": _num(v) for k, v in chis.items()})
    ledger.update(lhs_total=_num(lhs_total), rhs_total=_num(rhs_total), formula=_formula(f, chis, rhs_total))
    details = {"pushforward": f.to_dict(), "row": "custom" if pushforward is not None else row}
    if not ok:
        details["difference"] = str(lhs - rhs)
    return VerificationReport(scenario.name, base.describe(), "numeric", _rows(lhs, rhs, base.dimension),
                              "pass" if ok else "fail", ledger, details)


@dataclass
class CrossCheck:
    family: str
    base: str
    formal: VerificationReport
    numeric: VerificationReport
    lhs_agrees: bool
    rhs_agrees: bool
    formal_lhs: int | str = 0
    formal_rhs: int | str = 0

    @property
    def passed(self) -> bool:
        return self.formal.passed and self.numeric.passed and self.lhs_agrees and self.rhs_agrees

    @property
    def totals(self) -> dict:
        """Degree-0 numbers per side: specialized formal class vs numeric ledger."""
        return {"lhs": [self.formal_lhs, self.numeric.ledger["lhs_total"]],
                "rhs": [self.formal_rhs, self.numeric.ledger["rhs_total"]]}

    def to_dict(self) -> dict:
        return {"family": self.family, "base": self.base, "mode": "cross-check", "totals": self.totals,
                "formal": self.formal.to_dict(), "numeric": self.numeric.to_dict(),
                "lhs_agrees": self.lhs_agrees, "rhs_agrees": self.rhs_agrees,
                "verdict": "pass" if self.passed else "fail"}


def cross_check_modes(family, target: int | BaseGeometry, L: int | None = None,
                      S: int | None = None) -> CrossCheck:
    """Specialize the formal classes to ``P^n`` and compare with numeric mode."""
    base = target if isinstance(target, BaseGeometry) else projective_base(target, L, S)
    if not base.is_projective_space:
        raise UnsupportedGeometryError("cross-check target must be a projective space, not a formal base")
    n = base.dimension
    formal_report = check_identity_formal(family, n)
    lhs_f, rhs_f = formal_sides(family, n)
    numeric = check_tadpole_numeric(family, base)
    scenario = instantiate_family(family.data if isinstance(family, FamilyScenario) else family, base)
    registry = solve_registry(scenario)
    lhs_n = scenario.lhs_csm()
    rhs_n = csm_of_function(scenario.expected_pushforward, registry)
    lhs_s, rhs_s = specialize_base(lhs_f, base), specialize_base(rhs_f, base)
    return CrossCheck(scenario.name, base.describe(), formal_report, numeric,
                      lhs_s == lhs_n and lhs_s.integrate() == lhs_n.integrate() == numeric_total(numeric, "lhs"),
                      rhs_s == rhs_n and rhs_s.integrate() == rhs_n.integrate() == numeric_total(numeric, "rhs"),
                      _num(lhs_s.integrate()), _num(rhs_s.integrate()))


def numeric_total(report: VerificationReport, side: str) -> Fraction:
    return Fraction(report.ledger[f"{side}_total"])


def euler_characteristic(family, n: int, L: int, S: int | None = None) -> Fraction:
    """``chi(Y)`` of the generic total space over ``P^n``."""
    return instantiate_family(family, projective_base(n, L, S)).lhs_csm().integrate()
