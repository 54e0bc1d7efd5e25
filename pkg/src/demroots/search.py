"""Search for additive one-parameter subgroups moving a prescribed divisor.

The question has two stages. First a ray test on the record alone: the
divisor's valuation vector must span an extremal ray of the valuation vector
cone, alone among all divisors. Colors of type U or N are rejected outright;
no Borel-normalized additive action moves them.

Second, a witness search on the chart that removes every color (for a
G-stable divisor) or every color but this one (for a type-T color). A witness
is a Demazure root mu of the chart's valuation cone pinning the divisor's
ray, plus a nonzero weight shift lam vanishing on the ray, nonnegative on all
divisors and strictly positive on the removed colors. Then N*lam + mu is a
Demazure root pinning the same ray for every N >= 0, and for all large N the
resulting derivation lifts off the chart and moves exactly this divisor. How
large is large depends on the variety, not the record, so the threshold stays
symbolic in the reported family.

Weights in this module are written in coordinates on M (the basis declared by
the record), matching the cone machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional

from .cones import on_nonnegative_ray
from .lattice import DualVector, LatticeVector, pairing, primitive
from .spherical import ColorSubset, SphericalDatum, full_cone, slice_cone

HOLDS = "holds"
FAILS = "fails"
IMPOSSIBLE = "impossible"
WITNESS = "witness"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class RayCheck:
    divisor: str
    status: str
    ray: Optional[DualVector] = None
    sharing: tuple = ()
    reason: str = ""


@dataclass(frozen=True)
class MoveWitness:
    divisor: str
    ray: DualVector
    mu: LatticeVector
    shift: LatticeVector
    family: str


@dataclass(frozen=True)
class MoveReport:
    divisor: str
    check: RayCheck
    status: str
    witness: Optional[MoveWitness] = None


def check_divisor_ray(datum: SphericalDatum, name: str) -> RayCheck:
    """Can this divisor's ray carry a moving subgroup at all?"""
    d = datum.divisor(name)
    if d.is_color() and d.color_type in ("U", "N"):
        return RayCheck(
            divisor=name, status=IMPOSSIBLE,
            reason=f"colors of type {d.color_type} are never moved by a "
                   "Borel-normalized additive subgroup")
    if d.kappa.is_zero():
        return RayCheck(
            divisor=name, status=FAILS,
            reason="the divisor's valuation vector is zero, so it spans no ray")
    cone = full_cone(datum)
    rho = primitive(d.kappa)
    if rho not in cone.extremal_rays:
        return RayCheck(
            divisor=name, status=FAILS, ray=rho,
            reason="the valuation vector does not span an extremal ray of the "
                   "valuation vector cone")
    sharing = tuple(
        o.name for o in datum.divisors
        if o.name != name and not o.kappa.is_zero()
        and on_nonnegative_ray(o.kappa, rho))
    if sharing:
        return RayCheck(
            divisor=name, status=FAILS, ray=rho, sharing=sharing,
            reason="other divisors lie on the same ray: " + ", ".join(sharing))
    return RayCheck(divisor=name, status=HOLDS, ray=rho,
                    reason="the divisor alone spans an extremal ray")


def _selection_key(coords):
    return (max(abs(c) for c in coords), sum(abs(c) for c in coords), coords)


def _minimal_demazure_root(cone, rho, bound):
    """Smallest mu with cone pairing -1 on rho and >= 0 on the other rays."""
    others = [r for r in cone.extremal_rays if r != rho]
    rank = cone.rank
    best = None
    pivot = max(range(rank), key=lambda i: abs(rho.coords[i]))
    piv = rho.coords[pivot]
    for free in product(range(-bound, bound + 1), repeat=rank - 1):
        it = iter(free)
        coords = [0 if i == pivot else next(it) for i in range(rank)]
        partial = sum(rho.coords[i] * coords[i] for i in range(rank))
        num = -1 - partial
        if num % piv != 0:
            continue
        coords[pivot] = num // piv
        if abs(coords[pivot]) > bound:
            continue
        mu = LatticeVector(tuple(coords), lattice=cone.lattice)
        if any(pairing(r, mu) < 0 for r in others):
            continue
        key = _selection_key(mu.coords)
        if best is None or key < best[0]:
            best = (key, mu)
    return None if best is None else best[1]


def _minimal_shift(datum, subset, rho, bound):
    """Smallest nonzero lam vanishing on rho, in the weight monoid, and
    pairing at least 1 with every removed color.

    Scans sup-norm shells outward and stops at the first shell with a hit;
    the selection order puts sup-norm first, so nothing smaller is skipped.
    """
    removed = subset.resolve(datum)
    cone = full_cone(datum)
    rank = datum.rank
    for shell in range(1, bound + 1):
        best = None
        for coords in product(range(-shell, shell + 1), repeat=rank):
            if max(abs(c) for c in coords) != shell:
                continue
            lam = LatticeVector(coords, lattice="M")
            if pairing(rho, lam) != 0:
                continue
            if not cone.dual_contains(lam):
                continue
            if any(pairing(c.kappa, lam) < 1 for c in removed):
                continue
            key = _selection_key(coords)
            if best is None or key < best[0]:
                best = (key, lam)
        if best is not None:
            return best[1]
    return None


def find_witness(datum: SphericalDatum, name: str,
                 search_bound: int = 50) -> MoveReport:
    """Ray test, then bounded search for the Demazure root and weight shift."""
    check = check_divisor_ray(datum, name)
    if check.status != HOLDS:
        return MoveReport(divisor=name, check=check, status=check.status)

    d = datum.divisor(name)
    subset = ColorSubset(None if not d.is_color() else name)
    chart_cone = slice_cone(datum, subset)
    rho = check.ray
    if rho not in chart_cone.extremal_rays:
        # cannot happen for a pointed record; guards corrupted cone data
        failed = RayCheck(divisor=name, status=FAILS, ray=rho,
                          reason="ray is not extremal on the open chart")
        return MoveReport(divisor=name, check=failed, status=FAILS)

    mu = _minimal_demazure_root(chart_cone, rho, search_bound)
    if mu is None:
        return MoveReport(divisor=name, check=check, status=INCONCLUSIVE)
    lam = _minimal_shift(datum, subset, rho, search_bound)
    if lam is None:
        return MoveReport(divisor=name, check=check, status=INCONCLUSIVE)

    family = (f"N*{_fmt(lam.coords)} + {_fmt(mu.coords)} for all integers "
              "N >= some N0 (N0 not determined by this record)")
    witness = MoveWitness(divisor=name, ray=rho, mu=mu, shift=lam, family=family)
    return MoveReport(divisor=name, check=check, status=WITNESS, witness=witness)


def gstable_report(datum: SphericalDatum, search_bound: int = 50) -> tuple:
    """One MoveReport per G-stable divisor, in record order."""
    return tuple(find_witness(datum, d.name, search_bound)
                 for d in datum.g_stable_divisors)


def _fmt(coords) -> str:
    return "(" + ", ".join(str(c) for c in coords) + ")"
