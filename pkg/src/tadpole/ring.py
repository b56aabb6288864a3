"""Truncated graded polynomial rings with exact rational coefficients.

A :class:`BaseGeometry` fixes the generators of the ring, their degrees and
the truncation rules; a :class:`ChowClass` is an element of that ring.  Two
kinds of base exist:

* formal bases of dimension ``d`` with tangent symbols ``c1..cd`` and
  independent degree-1 line bundle symbols (``L``, ``S`` by default), where
  the only relation is vanishing above degree ``d``;
* projective spaces ``P^n`` with a single hyperplane generator ``H``, which
  also carry an integer multiple of ``H`` for every line bundle symbol.

Projective bundles extend a geometry by one more generator (their
hyperplane class); see :mod:`tadpole.bundles`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from numbers import Rational
from typing import Iterable, Mapping

from .errors import BaseMismatchError, IntegrationError, MissingAssignmentError, NonUnitError

Monomial = tuple[int, ...]

DEFAULT_LINE_SYMBOLS = ("L", "S")


@dataclass(frozen=True)
class BaseGeometry:
    """Generators and truncation data of a graded ring.

    ``caps`` is a sequence of ``(prefix, bound)`` pairs: the weighted degree
    of a monomial restricted to the first ``prefix`` generators may not
    exceed ``bound``.  A plain base has one cap; every projective bundle
    built on top of it appends another.
    """

    kind: str
    symbols: tuple[str, ...]
    degrees: tuple[int, ...]
    caps: tuple[tuple[int, int], ...]
    assignments: tuple[tuple[str, int], ...] = ()
    tag: str = ""
    parent: BaseGeometry | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if len(self.symbols) != len(self.degrees):
            raise ValueError("every symbol needs a degree")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError(f"duplicate symbols in {self.symbols}")
        if any(d <= 0 for d in self.degrees):
            raise ValueError("symbol degrees must be positive integers")
        if self.dimension < 0:
            raise ValueError("dimension must be non-negative")

    @property
    def dimension(self) -> int:
        return self.caps[-1][1]

    @property
    def root(self) -> BaseGeometry:
        geom = self
        while geom.parent is not None:
            geom = geom.parent
        return geom

    @property
    def is_formal(self) -> bool:
        return self.root.kind == "formal"

    @property
    def is_projective_space(self) -> bool:
        return self.kind == "projective"

    @property
    def line_symbols(self) -> tuple[str, ...]:
        """Degree-1 line bundle symbols usable in section tables."""
        if self.kind == "formal":
            return tuple(s for s in self.symbols if not _is_chern_symbol(s))
        return tuple(name for name, _ in self.assignments)

    def assignment(self, symbol: str) -> int:
        for name, value in self.assignments:
            if name == symbol:
                return value
        raise MissingAssignmentError(f"no assignment for {symbol!r} on {self.describe()}")

    def index(self, symbol: str) -> int:
        try:
            return self.symbols.index(symbol)
        except ValueError:
            raise KeyError(f"{symbol!r} is not a generator of {self.describe()}") from None

    def admits(self, mono: Monomial) -> bool:
        degs = self.degrees
        for prefix, bound in self.caps:
            total = 0
            for i in range(prefix):
                if mono[i]:
                    total += mono[i] * degs[i]
            if total > bound:
                return False
        return True

    def weight(self, mono: Monomial) -> int:
        return sum(e * d for e, d in zip(mono, self.degrees))

    def extend(self, symbol: str, relative_dimension: int, tag: str = "") -> BaseGeometry:
        """Geometry of a bundle of the given relative dimension over this one."""
        return BaseGeometry(
            kind="bundle",
            symbols=self.symbols + (symbol,),
            degrees=self.degrees + (1,),
            caps=self.caps + ((len(self.symbols) + 1, self.dimension + relative_dimension),),
            assignments=self.assignments,
            tag=tag,
            parent=self,
        )

    # convenience constructors for elements
    def zero(self) -> ChowClass:
        return ChowClass(self)

    def one(self) -> ChowClass:
        return ChowClass(self, {(0,) * len(self.symbols): 1})

    def gen(self, symbol: str) -> ChowClass:
        mono = [0] * len(self.symbols)
        mono[self.index(symbol)] = 1
        return ChowClass(self, {tuple(mono): 1})

    def linear(self, coefficients: Mapping[str, int | Fraction]) -> ChowClass:
        """Sum of ``coefficient * generator`` over the mapping."""
        out = {}
        n = len(self.symbols)
        for symbol, coeff in coefficients.items():
            mono = [0] * n
            mono[self.index(symbol)] = 1
            out[tuple(mono)] = out.get(tuple(mono), 0) + coeff
        return ChowClass(self, out)

    def line_class(self, symbol: str) -> ChowClass:
        """First Chern class of a named line bundle on a plain base."""
        if self.kind == "projective":
            return self.assignment(symbol) * self.gen("H")
        return self.gen(symbol)

    def tangent_class(self) -> ChowClass:
        """Total Chern class of the tangent bundle of a plain base."""
        if self.kind == "formal":
            total = self.one()
            for i in range(1, self.dimension + 1):
                total = total + self.gen(f"c{i}")
            return total
        if self.kind == "projective":
            return (self.one() + self.gen("H")) ** (self.dimension + 1)
        raise TypeError("tangent class of a bundle lives on the bundle; see tadpole.bundles")

    def describe(self) -> str:
        if self.kind == "formal":
            extra = ",".join(self.line_symbols)
            return f"formal(d={self.dimension}; {extra})"
        if self.kind == "projective":
            assigned = ", ".join(f"{k}=O({v})" for k, v in self.assignments)
            return f"P{self.dimension}" + (f" [{assigned}]" if assigned else "")
        return f"bundle[{self.tag}] over {self.parent.describe()}"


def _is_chern_symbol(symbol: str) -> bool:
    return symbol.startswith("c") and symbol[1:].isdigit()


def formal(dim: int, line_symbols: Iterable[str] = DEFAULT_LINE_SYMBOLS) -> BaseGeometry:
    """Formal base of dimension ``dim``: ``c1..c_dim`` plus degree-1 symbols."""
    if dim < 0:
        raise ValueError("dimension must be non-negative")
    line_symbols = tuple(line_symbols)
    symbols = tuple(f"c{i}" for i in range(1, dim + 1)) + line_symbols
    degrees = tuple(range(1, dim + 1)) + (1,) * len(line_symbols)
    return BaseGeometry("formal", symbols, degrees, ((len(symbols), dim),))


def projective_space(n: int, **assignments: int) -> BaseGeometry:
    """``P^n`` with hyperplane class ``H``; keywords assign ``O(k)`` to line symbols."""
    if n < 0:
        raise ValueError("dimension must be non-negative")
    pairs = tuple(sorted((k, int(v)) for k, v in assignments.items()))
    return BaseGeometry("projective", ("H",), (1,), ((1, n),), assignments=pairs)


class ChowClass:
    """Element of the truncated ring attached to ``base``.

    Instances are immutable.  Zero coefficients are never stored and
    monomials violating the truncation rules are dropped on construction,
    so equality is plain comparison of the term maps.
    """

    __slots__ = ("base", "_terms", "_hash")

    def __init__(self, base: BaseGeometry, terms: Mapping[Monomial, Rational] | None = None):
        self.base = base
        clean: dict[Monomial, Fraction] = {}
        if terms:
            n = len(base.symbols)
            for mono, coeff in terms.items():
                mono = tuple(mono)
                if len(mono) != n:
                    raise ValueError(f"monomial {mono} does not match generators {base.symbols}")
                if any(e < 0 for e in mono):
                    raise ValueError("negative exponent")
                coeff = Fraction(coeff)
                if coeff and base.admits(mono):
                    clean[mono] = clean.get(mono, 0) + coeff
            clean = {m: c for m, c in clean.items() if c}
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, base: BaseGeometry, terms: dict[Monomial, Fraction]) -> ChowClass:
        obj = cls.__new__(cls)
        obj.base = base
        obj._terms = terms
        obj._hash = None
        return obj

    # -- inspection -----------------------------------------------------
    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def coefficient(self, monomial: Mapping[str, int] | Monomial = ()) -> Fraction:
        if isinstance(monomial, Mapping):
            mono = [0] * len(self.base.symbols)
            for symbol, exp in monomial.items():
                mono[self.base.index(symbol)] = exp
            monomial = tuple(mono)
        elif not monomial:
            monomial = (0,) * len(self.base.symbols)
        return self._terms.get(tuple(monomial), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coefficient()

    def max_degree(self) -> int:
        return max((self.base.weight(m) for m in self._terms), default=-1)

    def degree_component(self, k: int) -> ChowClass:
        if k < 0:
            raise ValueError("degree must be non-negative")
        w = self.base.weight
        return ChowClass._raw(self.base, {m: c for m, c in self._terms.items() if w(m) == k})

    def components(self) -> list[ChowClass]:
        """Homogeneous parts in degrees ``0..dimension``."""
        return [self.degree_component(k) for k in range(self.base.dimension + 1)]

    # -- arithmetic -----------------------------------------------------
    def _coerce(self, other) -> ChowClass:
        if isinstance(other, ChowClass):
            if other.base != self.base:
                raise BaseMismatchError(
                    f"cannot combine classes on {self.base.describe()} and {other.base.describe()}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.base.one() * Fraction(other) if other else self.base.zero()
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return ChowClass._raw(self.base, out)

    __radd__ = __add__

    def __neg__(self):
        return ChowClass._raw(self.base, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return self.base.zero()
            return ChowClass._raw(self.base, {m: c * other for m, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        admits = self.base.admits
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                if not admits(m):
                    continue
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    del out[m]
        return ChowClass._raw(self.base, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers are defined")
        result = self.base.one()
        square = self
        while k:
            if k & 1:
                result = result * square
            k >>= 1
            if k:
                square = square * square
        return result

    def invert(self) -> ChowClass:
        """Multiplicative inverse of a class whose degree-0 term is 1."""
        if self.constant_term() != 1:
            raise NonUnitError(f"degree-0 term is {self.constant_term()}, expected 1")
        nilpotent = self - 1
        result = self.base.one()
        power = self.base.one()
        for _ in range(self.base.dimension):
            power = power * (-nilpotent)
            if power.is_zero():
                break
            result = result + power
        return result

    def integrate(self) -> Fraction:
        """Degree map: coefficient of ``H^n`` on ``P^n``."""
        if not self.base.is_projective_space:
            raise IntegrationError(f"no degree map on {self.base.describe()}")
        return self.coefficient((self.base.dimension,))

    # -- comparison / display -------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        if not isinstance(other, ChowClass):
            return NotImplemented
        return self.base == other.base and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.base, frozenset(self._terms.items())))
        return self._hash

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        w = self.base.weight
        return sorted(self._terms.items(), key=lambda mc: (w(mc[0]), tuple(-e for e in mc[0])))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for mono, coeff in self.sorted_terms():
            factors = []
            for sym, e in zip(self.base.symbols, mono):
                if e == 1:
                    factors.append(sym)
                elif e > 1:
                    factors.append(f"{sym}^{e}")
            body = "*".join(factors)
            if not body:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(body)
            elif coeff == -1:
                parts.append("-" + body)
            else:
                parts.append(f"{coeff}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"ChowClass({self})"


def arith_mul(a: ChowClass, b: ChowClass) -> ChowClass:
    return a * b


def series_invert(a: ChowClass) -> ChowClass:
    return a.invert()


def degree_component(a: ChowClass, k: int) -> ChowClass:
    return a.degree_component(k)


def integrate_top(a: ChowClass) -> Fraction:
    return a.integrate()


def substitute(a: ChowClass, target: BaseGeometry, images: Mapping[str, ChowClass]) -> ChowClass:
    """Ring map sending each generator of ``a.base`` to ``images[symbol]``."""
    missing = [s for s, i in zip(a.base.symbols, range(len(a.base.symbols)))
               if s not in images and any(m[i] for m in a._terms)]
    if missing:
        raise MissingAssignmentError(f"no image for {', '.join(missing)}")
    powers: dict[tuple[str, int], ChowClass] = {}

    def power(symbol: str, e: int) -> ChowClass:
        key = (symbol, e)
        if key not in powers:
            img = images[symbol]
            if img.base != target:
                raise BaseMismatchError(f"image of {symbol} is not on the target base")
            powers[key] = img ** e
        return powers[key]

    out = target.zero()
    for mono, coeff in a._terms.items():
        term = target.one() * coeff
        for symbol, e in zip(a.base.symbols, mono):
            if e:
                term = term * power(symbol, e)
        out = out + term
    return out


def specialize_base(a: ChowClass, target: BaseGeometry) -> ChowClass:
    """Send a class on a formal base to ``P^n``.

    ``c_i`` maps to ``binom(n+1, i) H^i`` and each line symbol to its
    assigned multiple of ``H``.
    """
    if not target.is_projective_space:
        raise MissingAssignmentError("specialization target must be a projective space")
    n = target.dimension
    H = target.gen("H")
    images: dict[str, ChowClass] = {}
    for symbol in a.base.symbols:
        if _is_chern_symbol(symbol):
            i = int(symbol[1:])
            images[symbol] = comb(n + 1, i) * H ** i
        else:
            try:
                images[symbol] = target.assignment(symbol) * H
            except MissingAssignmentError:
                pass
    return substitute(a, target, images)
