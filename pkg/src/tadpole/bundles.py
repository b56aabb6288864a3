"""Split projective bundles, pushforward to the base and adjunction.

Conventions, fixed for the whole package: for ``P = P(M_1 + ... + M_r)``
with ``m_i = c_1(M_i)``, the homogeneous coordinate attached to summand ``i``
has divisor class ``zeta + m_i``.  Hence

* ``prod_i (zeta + m_i) = 0`` (Grothendieck relation),
* ``pi_*(zeta^(r-1+k)) = s_k`` with ``s = 1 / prod_i (1 + m_i)``,
* ``c(T_{P/B}) = prod_i (1 + zeta + m_i)``.

Bundles may be stacked: the parent of a :class:`ProjBundle` is either a
plain :class:`~tadpole.ring.BaseGeometry` or another bundle, and summands
may then involve the parent's hyperplane class.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from typing import Mapping, Sequence, Union

from .errors import BaseMismatchError, DegeneratePresentationError
from .ring import BaseGeometry, ChowClass

Space = Union[BaseGeometry, "ProjBundle"]


def geometry_of(space: Space) -> BaseGeometry:
    return space if isinstance(space, BaseGeometry) else space.geometry


def root_of(space: Space) -> BaseGeometry:
    return geometry_of(space).root


def lift(a: ChowClass, target: BaseGeometry) -> ChowClass:
    """Pull a class back from an ancestor geometry of ``target``."""
    if a.base == target:
        return a
    geom = target.parent
    while geom is not None and geom != a.base:
        geom = geom.parent
    if geom is None:
        raise BaseMismatchError(f"{a.base.describe()} is not below {target.describe()}")
    pad = (0,) * (len(target.symbols) - len(a.base.symbols))
    return ChowClass._raw(target, {m + pad: c for m, c in a.items()})


def _as_class(value, geometry: BaseGeometry) -> ChowClass:
    if isinstance(value, ChowClass):
        return lift(value, geometry)
    if isinstance(value, Mapping):
        return geometry.linear(value)
    if value == 0:
        return geometry.zero()
    raise TypeError(f"cannot read {value!r} as a class")


class ProjBundle:
    """``P(E) -> parent`` for a split bundle ``E`` with the given first Chern classes."""

    def __init__(self, parent: Space, summands: Sequence, zeta: str = "zeta", name: str = ""):
        self.parent = parent
        parent_geom = geometry_of(parent)
        self.summands = tuple(_as_class(m, parent_geom) for m in summands)
        if len(self.summands) < 2:
            raise ValueError("a projective bundle needs rank >= 2")
        for m in self.summands:
            if any(parent_geom.weight(mono) != 1 for mono, _ in m.items()):
                raise ValueError(f"summand {m} is not a degree-1 class")
        self.zeta_symbol = zeta
        self.name = name or f"P({', '.join(str(m) for m in self.summands)})"
        self.geometry = parent_geom.extend(zeta, self.rank - 1, tag=self.name)

    def __repr__(self):
        return f"ProjBundle({self.name} over {geometry_of(self.parent).describe()})"

    @property
    def rank(self) -> int:
        return len(self.summands)

    @property
    def relative_dimension(self) -> int:
        return self.rank - 1

    @property
    def dimension(self) -> int:
        return self.geometry.dimension

    @property
    def base(self) -> BaseGeometry:
        return self.geometry.root

    @property
    def zeta(self) -> ChowClass:
        return self.geometry.gen(self.zeta_symbol)

    def pullback(self, a: ChowClass) -> ChowClass:
        return lift(a, self.geometry)

    def coordinate_class(self, i: int) -> ChowClass:
        """Divisor class of the coordinate attached to summand ``i``."""
        return self.zeta + self.pullback(self.summands[i])

    @cached_property
    def elementary(self) -> list[ChowClass]:
        """``e_0..e_r`` of the summands, on the parent geometry."""
        geom = geometry_of(self.parent)
        e = [geom.one()] + [geom.zero()] * self.rank
        for m in self.summands:
            for k in range(self.rank, 0, -1):
                e[k] = e[k] + e[k - 1] * m
        return e

    @cached_property
    def segre(self) -> list[ChowClass]:
        total = geometry_of(self.parent).one()
        for m in self.summands:
            total = total * (1 + m)
        s = total.invert()
        return s.components()

    def reduce_zeta(self, a: ChowClass) -> ChowClass:
        """Rewrite ``a`` with zeta-degree below the rank."""
        a = lift(a, self.geometry)
        r = self.rank
        relation = [self.pullback(e) for e in self.elementary]
        zeta = self.zeta
        out = self.geometry.zero()
        pending = a
        while pending:
            high: dict = {}
            low: dict = {}
            for mono, c in pending.items():
                (high if mono[-1] >= r else low)[mono] = c
            out = out + ChowClass._raw(self.geometry, low)
            if not high:
                break
            pending = self.geometry.zero()
            for mono, c in high.items():
                rest = ChowClass._raw(self.geometry, {mono[:-1] + (mono[-1] - r,): c})
                # zeta^r = -sum_k e_k zeta^(r-k)
                replacement = self.geometry.zero()
                for k in range(1, r + 1):
                    if relation[k]:
                        replacement = replacement - relation[k] * zeta ** (r - k)
                pending = pending + rest * replacement
        return out

    def push(self, a: ChowClass) -> ChowClass:
        """One step down the tower: ``pi_*`` onto the parent geometry."""
        a = lift(a, self.geometry)
        parent_geom = geometry_of(self.parent)
        shift = self.rank - 1
        by_power: dict[int, dict] = {}
        for mono, c in a.items():
            k = mono[-1] - shift
            if k < 0 or k >= len(self.segre):
                continue
            by_power.setdefault(k, {})[mono[:-1]] = c
        out = parent_geom.zero()
        for k, terms in by_power.items():
            s_k = self.segre[k]
            if s_k:
                out = out + ChowClass._raw(parent_geom, terms) * s_k
        return out

    def push_to_base(self, a: ChowClass) -> ChowClass:
        return push_down(self, a)

    def tangent_chern(self) -> ChowClass:
        """``c(T P(E))`` including the pulled-back tangent class of the parent."""
        total = self.pullback(tangent_of(self.parent))
        for i in range(self.rank):
            total = total * (1 + self.coordinate_class(i))
        return total


def tangent_of(space: Space) -> ChowClass:
    if isinstance(space, BaseGeometry):
        return space.tangent_class()
    return space.tangent_chern()


def push_down(space: Space, a: ChowClass) -> ChowClass:
    """Push a class on ``space`` all the way to the plain base."""
    while isinstance(space, ProjBundle):
        a = space.push(a)
        space = space.parent
    return a


def reduce_zeta(expr: ChowClass, bundle: ProjBundle) -> ChowClass:
    return bundle.reduce_zeta(expr)


def push_to_base(a: ChowClass, bundle: ProjBundle) -> ChowClass:
    """Single-level pushforward onto the parent of ``bundle``."""
    return bundle.push(a)


def tangent_chern(bundle: ProjBundle) -> ChowClass:
    return bundle.tangent_chern()


class CompleteIntersection:
    """Zero scheme of a section of a split bundle ``V = sum_j O(h_j)`` on ``ambient``.

    ``ambient`` may be a plain base (for divisors of ``B`` itself) or a
    projective bundle tower.  ``assumed_smooth`` records whether the CSM
    class or only the Chern-Fulton class is meaningful.
    """

    def __init__(self, ambient: Space, classes: Sequence, assumed_smooth: bool = True, name: str = ""):
        self.ambient = ambient
        geom = geometry_of(ambient)
        self.classes = tuple(_as_class(h, geom) for h in classes)
        self.assumed_smooth = assumed_smooth
        self.name = name
        if len(self.classes) > geom.dimension:
            raise DegeneratePresentationError(
                f"codimension {len(self.classes)} exceeds ambient dimension {geom.dimension}"
            )
        if isinstance(ambient, ProjBundle):
            idx = len(geom.symbols) - 1
            for h in self.classes:
                if any(mono[idx] == 1 and c < 0 for mono, c in h.items()):
                    raise ValueError(f"hypersurface class {h} has negative zeta coefficient")

    def __repr__(self):
        label = self.name or "Z"
        return f"CompleteIntersection({label}: {[str(h) for h in self.classes]})"

    @property
    def codimension(self) -> int:
        return len(self.classes)

    @property
    def base(self) -> BaseGeometry:
        return root_of(self.ambient)

    def virtual_class(self) -> ChowClass:
        """``c(T ambient) / c(V) * [Z]`` on the ambient."""
        geom = geometry_of(self.ambient)
        fundamental = geom.one()
        normal = geom.one()
        for h in self.classes:
            fundamental = fundamental * h
            normal = normal * (1 + h)
        return tangent_of(self.ambient) * normal.invert() * fundamental


def chern_fulton_ci(z: CompleteIntersection) -> ChowClass:
    """Pushforward to the base of the Chern-Fulton class of ``z``; no smoothness needed."""
    return push_down(z.ambient, z.virtual_class())


def csm_smooth_ci(z: CompleteIntersection) -> ChowClass:
    """Pushforward to the base of ``c(TZ) cap [Z]`` for a smooth complete intersection."""
    if not z.assumed_smooth:
        raise DegeneratePresentationError(
            f"{z!r} is not marked smooth; use chern_fulton_ci for its virtual class"
        )
    return chern_fulton_ci(z)


def euler_char_ci(z: CompleteIntersection) -> Fraction:
    return csm_smooth_ci(z).integrate()


def double_cover_csm(target: Space, branch: CompleteIntersection | None = None) -> ChowClass:
    """CSM pushforward of the constant function on a double cover of ``target``.

    The cover is branched along the smooth divisor ``branch`` (or unbranched
    when it is ``None``), so the pushforward of its characteristic function
    is ``2 * 1_target - 1_branch``.
    """
    total = 2 * push_down(target, tangent_of(target))
    if branch is None:
        return total
    if geometry_of(branch.ambient) != geometry_of(target):
        raise BaseMismatchError("branch locus must live on the cover's target")
    return total - csm_smooth_ci(branch)
