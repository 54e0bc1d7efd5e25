"""Combinatorial records of affine spherical varieties.

A record consists of a root system (the acting group), a weight sublattice M of
X(T) spanned by the weights of B-semiinvariant functions, and the B-stable
prime divisors. Each divisor carries its valuation vector kappa(D), written in
the basis dual to the declared basis of M, and is either G-stable or a color;
colors carry their type (U, T or N) and the set of simple roots moving them.
Types and moved-by data are input facts about the variety, not derived here.

Well-formedness that is structural (field shapes, index ranges) is enforced at
construction; semantic validation (strict convexity of the valuation cone, the
weight monoid spanning M, the type-T moving rule) is reported check by check by
``validate`` with witnesses instead of exceptions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .cones import Cone, ContainsLine, WeightMonoid, build_cone, dual_monoid
from .lattice import DualVector, LatticeVector, Sublattice, invariant_factors
from .rootsystems import RootSystem

COLOR = "color"
G_STABLE = "g-stable"
COLOR_TYPES = ("U", "T", "N")


class DatumError(ValueError):
    """A record violates the contract of the operation it was passed to."""


@dataclass(frozen=True)
class Divisor:
    """One B-stable prime divisor with its valuation vector kappa."""

    name: str
    kappa: DualVector
    kind: str
    color_type: Optional[str] = None
    moved_by: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "moved_by", frozenset(self.moved_by))
        if not self.name:
            raise DatumError("divisor name must be nonempty")
        if self.kind == COLOR:
            if self.color_type not in COLOR_TYPES:
                raise DatumError(
                    f"color {self.name!r} needs a type among {COLOR_TYPES}")
            if not self.moved_by:
                raise DatumError(f"color {self.name!r} must be moved by a simple root")
        elif self.kind == G_STABLE:
            if self.color_type is not None:
                raise DatumError(f"G-stable divisor {self.name!r} cannot carry a color type")
            if self.moved_by:
                raise DatumError(f"G-stable divisor {self.name!r} cannot be moved by simple roots")
        else:
            raise DatumError(f"unknown divisor kind {self.kind!r}")

    def is_color(self) -> bool:
        return self.kind == COLOR


@dataclass(frozen=True)
class SphericalDatum:
    root_system: RootSystem
    weight_lattice: Sublattice
    divisors: tuple

    def __post_init__(self):
        object.__setattr__(self, "divisors", tuple(self.divisors))
        if self.weight_lattice.lattice != "X(T)":
            raise DatumError("the weight lattice must be a sublattice of X(T)")
        if self.weight_lattice.ambient_rank != self.root_system.ambient_rank:
            raise DatumError("weight lattice and root system have different ambient ranks")
        names = [d.name for d in self.divisors]
        if len(set(names)) != len(names):
            raise DatumError("divisor names must be distinct")
        r = self.weight_lattice.rank
        for d in self.divisors:
            if d.kappa.rank != r:
                raise DatumError(
                    f"kappa of {d.name!r} has rank {d.kappa.rank}, expected {r}")
            if d.kappa.lattice != "M":
                raise DatumError(f"kappa of {d.name!r} must be a functional on M")
            bad = [i for i in d.moved_by if not (0 <= i < self.root_system.semisimple_rank)]
            if bad:
                raise DatumError(
                    f"divisor {d.name!r} moved by unknown simple roots {sorted(bad)}")

    @property
    def rank(self) -> int:
        return self.weight_lattice.rank

    @property
    def colors(self) -> tuple:
        return tuple(d for d in self.divisors if d.is_color())

    @property
    def g_stable_divisors(self) -> tuple:
        return tuple(d for d in self.divisors if not d.is_color())

    def divisor(self, name: str) -> Divisor:
        for d in self.divisors:
            if d.name == name:
                return d
        raise DatumError(
            f"no divisor named {name!r}; known: {[d.name for d in self.divisors]}")


@dataclass(frozen=True)
class ColorSubset:
    """The set of colors removed from the variety when passing to the open chart.

    Either every color is removed (excluded_color None) or all but one color of
    type T stays removed; no other shapes are admissible.
    """

    excluded_color: Optional[str] = None

    def resolve(self, datum: SphericalDatum) -> tuple:
        """The colors in the subset, in datum order."""
        if self.excluded_color is None:
            return datum.colors
        d = datum.divisor(self.excluded_color)
        if not d.is_color():
            raise DatumError(f"{d.name!r} is G-stable, not a color")
        if d.color_type != "T":
            raise DatumError(
                f"only a type-T color can be excluded; {d.name!r} has type {d.color_type}")
        return tuple(c for c in datum.colors if c.name != d.name)

    def complement(self, datum: SphericalDatum) -> tuple:
        """The divisors of the open chart: G-stable ones plus the excluded color."""
        excluded = set(c.name for c in self.resolve(datum))
        return tuple(d for d in datum.divisors
                     if not d.is_color() or d.name not in excluded)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> tuple:
        return tuple(c for c in self.checks if not c.passed)


def validate(datum: SphericalDatum) -> ValidationReport:
    """Semantic checks with witnesses; failures are report entries, not errors."""
    checks = []

    try:
        cone = full_cone(datum)
    except ContainsLine as exc:
        cone = None
        checks.append(CheckResult(
            "strict-convexity", False,
            f"valuation vectors span the line through {exc.line.coords}"))
    else:
        checks.append(CheckResult(
            "strict-convexity", True,
            "the valuation vectors span a strictly convex cone"))

    if cone is not None:
        basis = weight_monoid(datum).hilbert_basis
        rows = [v.coords for v in basis]
        factors = invariant_factors(rows) if rows else ()
        spans = len(factors) == datum.rank and all(f == 1 for f in factors)
        if spans:
            checks.append(CheckResult(
                "weight-monoid-spans-M", True,
                "the weight monoid generates M as a group"))
        else:
            checks.append(CheckResult(
                "weight-monoid-spans-M", False,
                f"Hilbert basis invariant factors {factors} do not span M"))

    for d in datum.colors:
        if d.color_type != "T":
            continue
        for i in sorted(d.moved_by):
            others = [c.name for c in datum.colors
                      if c.name != d.name and i in c.moved_by]
            if not others:
                checks.append(CheckResult(
                    "type-T-moving-rule", False,
                    f"simple root {i} moves only the type-T color {d.name!r}"))
                break
        else:
            continue
        break
    else:
        checks.append(CheckResult(
            "type-T-moving-rule", True,
            "every simple root moving a type-T color moves another color"))

    return ValidationReport(tuple(checks))


@lru_cache(maxsize=None)
def full_cone(datum: SphericalDatum) -> Cone:
    """The cone spanned by the valuation vectors of all B-stable divisors."""
    return build_cone([d.kappa for d in datum.divisors], rank=datum.rank, lattice="M")


@lru_cache(maxsize=None)
def weight_monoid(datum: SphericalDatum) -> WeightMonoid:
    """Hilbert basis of the weights with nonnegative order along every divisor."""
    return dual_monoid(full_cone(datum))


def levi_subset(datum: SphericalDatum, subset: ColorSubset = ColorSubset()) -> frozenset:
    """Simple roots moving no color of the subset: the Levi of the chart stabilizer.

    For the admissible subsets this equals the Levi computed from all colors; a
    discrepancy means the record violates the type-T moving rule and is
    reported as a data error.
    """
    chosen = subset.resolve(datum)
    n = datum.root_system.semisimple_rank
    moved = set()
    for c in chosen:
        moved |= c.moved_by
    result = frozenset(range(n)) - moved
    moved_all = set()
    for c in datum.colors:
        moved_all |= c.moved_by
    if result != frozenset(range(n)) - moved_all:
        raise DatumError(
            "excluding the color changes the chart stabilizer; "
            "the record violates the type-T moving rule")
    return result


@lru_cache(maxsize=None)
def slice_cone(datum: SphericalDatum, subset: ColorSubset = ColorSubset()) -> Cone:
    """Cone of valuation vectors of the divisors remaining on the open chart."""
    kappas = [d.kappa for d in subset.complement(datum)]
    return build_cone(kappas, rank=datum.rank, lattice="M")


@lru_cache(maxsize=None)
def slice_monoid(datum: SphericalDatum, subset: ColorSubset = ColorSubset()) -> WeightMonoid:
    """Weight monoid of the chart's toric slice: Hilbert basis of its dual cone."""
    return dual_monoid(slice_cone(datum, subset))
