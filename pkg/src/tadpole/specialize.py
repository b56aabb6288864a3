"""Specialization of the constant function of a degenerating family.

The family is described by the components of a normal-crossing divisor on a
resolution of its total space, with multiplicities, together with the
pairwise intersections of those components.  The specialized function is
the pushforward of ``delta``, which takes the value ``m`` at points lying
on a single component of multiplicity ``m`` and vanishes on overlaps.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

from .bundles import CompleteIntersection, csm_smooth_ci
from .constructible import (
    ConstructibleFunction,
    Registry,
    StratificationTable,
    push_stratified,
)
from .errors import RegistryError, UnsupportedGeometryError
from .ring import ChowClass


@dataclass(frozen=True)
class Component:
    name: str
    multiplicity: int
    model: CompleteIntersection
    table: StratificationTable | None = None


@dataclass(frozen=True)
class Intersection:
    name: str
    pair: tuple[str, str]
    model: CompleteIntersection
    table: StratificationTable | None = None


class ResolutionDatum:
    """Components and pairwise intersections of the central fiber's preimage."""

    def __init__(self, components: Sequence[Component], intersections: Sequence[Intersection] = ()):
        self.components = tuple(components)
        self.intersections = tuple(intersections)
        names = [c.name for c in self.components]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate component names {names}")
        for c in self.components:
            if c.multiplicity < 1:
                raise ValueError(f"component {c.name!r} has multiplicity {c.multiplicity}")
        seen = set()
        for x in self.intersections:
            if len(x.pair) != 2:
                raise UnsupportedGeometryError(
                    f"{x.name!r} names {len(x.pair)} components; only pairwise overlaps are supported"
                )
            a, b = x.pair
            if a == b or a not in names or b not in names:
                raise ValueError(f"intersection {x.name!r} must pair two distinct components, got {x.pair}")
            key = frozenset(x.pair)
            if key in seen:
                raise ValueError(f"pair {x.pair} listed twice")
            seen.add(key)
        self._mult = {c.name: c.multiplicity for c in self.components}

    def __repr__(self):
        comps = ", ".join(f"{c.name}(m={c.multiplicity})" for c in self.components)
        return f"ResolutionDatum({comps}; overlaps={[x.name for x in self.intersections]})"

    def multiplicity(self, name: str) -> int:
        return self._mult[name]

    def scaled(self, k: int) -> ResolutionDatum:
        return ResolutionDatum([replace(c, multiplicity=k * c.multiplicity) for c in self.components],
                               self.intersections)

    def without(self, name: str) -> ResolutionDatum:
        """Drop a component (and its overlaps) or a single intersection term."""
        if name in self._mult:
            return ResolutionDatum([c for c in self.components if c.name != name],
                                   [x for x in self.intersections if name not in x.pair])
        return ResolutionDatum(self.components, [x for x in self.intersections if x.name != name])

    def with_multiplicity(self, name: str, m: int) -> ResolutionDatum:
        return ResolutionDatum([replace(c, multiplicity=m) if c.name == name else c for c in self.components],
                               self.intersections)

    def overlap_weight(self, x: Intersection) -> int:
        a, b = x.pair
        return self._mult[a] + self._mult[b]


def delta_function(r: ResolutionDatum) -> ConstructibleFunction:
    terms = {c.name: c.multiplicity for c in r.components}
    for x in r.intersections:
        terms[x.name] = terms.get(x.name, 0) - r.overlap_weight(x)
    return ConstructibleFunction(terms)


def delta_value(r: ResolutionDatum, on: Sequence[str]) -> int:
    """Value of delta at a point lying on exactly the named components."""
    names = set(on)
    if len(names) > 2:
        raise UnsupportedGeometryError("triple overlaps of components are not representable")
    if not names or not names <= set(r._mult):
        raise ValueError(f"unknown components {sorted(names)}")
    if len(names) == 1:
        return r.multiplicity(names.pop())
    if not any(set(x.pair) == names for x in r.intersections):
        raise UnsupportedGeometryError(f"components {sorted(names)} have no recorded intersection")
    return 0


def _tables(r: ResolutionDatum) -> dict[str, StratificationTable | None]:
    out = {c.name: c.table for c in r.components}
    out.update({x.name: x.table for x in r.intersections})
    return out


def specialization_pushforward(r: ResolutionDatum, registry: Registry | None = None) -> ConstructibleFunction:
    """Pushforward to the base of the specialized constant function."""
    tables = _tables(r)
    total = ConstructibleFunction()
    for name, coeff in delta_function(r).items():
        table = tables[name]
        if table is None:
            raise RegistryError(f"no stratification table for {name!r}")
        total = total + coeff * push_stratified(table, registry)
    return total


def _models(r: ResolutionDatum) -> dict[str, CompleteIntersection]:
    out = {c.name: c.model for c in r.components}
    out.update({x.name: x.model for x in r.intersections})
    return out


def specialization_csm(r: ResolutionDatum) -> ChowClass:
    """CSM class of the specialized pushforward, computed from smooth models only."""
    if not r.components:
        raise UnsupportedGeometryError("resolution datum has no components")
    models = _models(r)
    total = None
    for name, coeff in delta_function(r).items():
        term = coeff * csm_smooth_ci(models[name])
        total = term if total is None else total + term
    if total is None:
        total = r.components[0].model.base.zero()
    return total
