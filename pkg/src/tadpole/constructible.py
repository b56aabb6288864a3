"""Constructible functions over a registry of named strata.

Strata are symbols carrying class data rather than subschemes.  A stratum is
either backed by a smooth complete intersection model, by an explicitly
registered CSM class, or is still unknown (a singular locus whose CSM class
has to be solved from a stratified pushforward).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Optional

from .bundles import CompleteIntersection, csm_smooth_ci
from .errors import (
    NonInvertibleError,
    RegistryError,
    UnderdeterminedError,
    UnsolvedStratumError,
)
from .ring import BaseGeometry, ChowClass


@dataclass(frozen=True)
class Stratum:
    name: str
    model: Optional[CompleteIntersection] = None
    csm: Optional[ChowClass] = None
    description: str = ""

    @property
    def is_unknown(self) -> bool:
        return self.model is None and self.csm is None

    @property
    def source(self) -> str:
        if self.csm is not None:
            return "registered"
        if self.model is not None:
            return "smooth-model"
        return "unknown"

    def csm_class(self) -> ChowClass:
        if self.csm is not None:
            return self.csm
        if self.model is not None:
            return csm_smooth_ci(self.model)
        raise UnsolvedStratumError(f"stratum {self.name!r} has no CSM source yet")


class Registry(Mapping[str, Stratum]):
    """Immutable name -> :class:`Stratum` map over one base."""

    def __init__(self, base: BaseGeometry, strata: Iterable[Stratum] = ()):
        self.base = base
        items: dict[str, Stratum] = {}
        for s in strata:
            if s.name in items:
                raise RegistryError(f"duplicate stratum {s.name!r}")
            items[s.name] = s
        self._strata = MappingProxyType(items)
        self._cache: dict[str, ChowClass] = {}

    def __getitem__(self, name: str) -> Stratum:
        try:
            return self._strata[name]
        except KeyError:
            raise RegistryError(f"unregistered stratum {name!r}") from None

    def __iter__(self) -> Iterator[str]:
        return iter(self._strata)

    def __len__(self) -> int:
        return len(self._strata)

    def __repr__(self):
        return f"Registry({', '.join(f'{n}:{s.source}' for n, s in self._strata.items())})"

    def unknowns(self) -> list[str]:
        return [n for n, s in self._strata.items() if s.is_unknown]

    def csm(self, name: str) -> ChowClass:
        if name not in self._cache:
            self._cache[name] = self[name].csm_class()
        return self._cache[name]

    def register(self, name: str, csm: ChowClass) -> Registry:
        """New registry in which ``name`` carries the given CSM class."""
        old = self[name]
        strata = [s if s.name != name else Stratum(name, old.model, csm, old.description)
                  for s in self._strata.values()]
        new = Registry(self.base, strata)
        new._cache.update({k: v for k, v in self._cache.items() if k != name})
        return new


class ConstructibleFunction(Mapping[str, int]):
    """Finite integer combination of characteristic functions of strata."""

    def __init__(self, terms: Mapping[str, int] | None = None):
        clean = {}
        for name, coeff in (terms or {}).items():
            if int(coeff) != coeff:
                raise ValueError("constructible functions have integer coefficients")
            if coeff:
                clean[name] = int(coeff)
        self._terms = MappingProxyType(dict(sorted(clean.items())))

    @classmethod
    def indicator(cls, name: str) -> ConstructibleFunction:
        return cls({name: 1})

    def __getitem__(self, name: str) -> int:
        return self._terms[name]

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __add__(self, other: ConstructibleFunction) -> ConstructibleFunction:
        out = dict(self._terms)
        for k, v in other.items():
            out[k] = out.get(k, 0) + v
        return ConstructibleFunction(out)

    def __neg__(self):
        return ConstructibleFunction({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k: int):
        return ConstructibleFunction({n: k * v for n, v in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, Mapping):
            return dict(self._terms) == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for name, c in self._terms.items():
            body = f"1_{name}"
            parts.append(body if c == 1 else f"-{body}" if c == -1 else f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"ConstructibleFunction({self})"

    def to_dict(self) -> dict[str, int]:
        return dict(self._terms)


@dataclass(frozen=True)
class StratRow:
    closed: str
    removed: Optional[str]
    fiber_euler: int


class StratificationTable(tuple):
    """Rows ``(V_i, W_i, chi(F_i))``: fibers have Euler characteristic
    ``chi(F_i)`` over ``V_i \\ W_i``; ``W_i`` is ``None`` for an empty set."""

    def __new__(cls, rows: Iterable):
        return super().__new__(cls, tuple(r if isinstance(r, StratRow) else StratRow(*r) for r in rows))

    def strata(self) -> set[str]:
        names = set()
        for row in self:
            names.add(row.closed)
            if row.removed is not None:
                names.add(row.removed)
        return names

    def to_list(self) -> list[list]:
        return [[r.closed, r.removed, r.fiber_euler] for r in self]


def push_stratified(table: StratificationTable, registry: Registry | None = None) -> ConstructibleFunction:
    """Pushforward ``sum_i chi(F_i) (1_{V_i} - 1_{W_i})`` of a constant function."""
    if registry is not None:
        for name in sorted(table.strata()):
            registry[name]
    out: dict[str, int] = {}
    for row in table:
        out[row.closed] = out.get(row.closed, 0) + row.fiber_euler
        if row.removed is not None:
            out[row.removed] = out.get(row.removed, 0) - row.fiber_euler
    return ConstructibleFunction(out)


def csm_of_function(f: ConstructibleFunction, registry: Registry) -> ChowClass:
    total = registry.base.zero()
    for name, coeff in f.items():
        total = total + coeff * registry.csm(name)
    return total


def euler_of_function(f: ConstructibleFunction, registry: Registry) -> Fraction:
    return csm_of_function(f, registry).integrate()


def solve_stratum_csm(table: StratificationTable, total_csm: ChowClass, registry: Registry) -> ChowClass:
    """CSM class of the single unknown stratum of ``push_stratified(table)``.

    ``total_csm`` is the CSM pushforward of the total space described by
    the table.  Use :meth:`Registry.register` to record the answer.
    """
    f = push_stratified(table, registry)
    unknown = [n for n in f if registry[n].is_unknown]
    if len(unknown) != 1:
        raise UnderdeterminedError(
            f"expected exactly one unknown stratum, found {unknown or 'none'} in {f}"
        )
    name = unknown[0]
    coeff = f[name]
    if coeff not in (1, -1):
        raise NonInvertibleError(f"coefficient {coeff} of {name!r} is not a unit")
    known = csm_of_function(f - ConstructibleFunction({name: coeff}), registry)
    return (total_csm - known) * coeff


def solve_into(table: StratificationTable, total_csm: ChowClass, registry: Registry) -> Registry:
    """Solve the unknown stratum of ``table`` (if any) and return the updated registry."""
    f = push_stratified(table, registry)
    if not any(registry[n].is_unknown for n in f):
        return registry
    name = next(n for n in f if registry[n].is_unknown)
    return registry.register(name, solve_stratum_csm(table, total_csm, registry))
