"""Torus localization on Hilbert schemes of points on toric surfaces.

The two surfaces carried here (the projective plane and a product of two
projective lines) have finitely many torus-fixed points, one per chart;
the chart records the two tangent weights at its fixed point, evaluated
at an integer parameter pair (a, b).

A fixed point of the Hilbert scheme of k points is a tuple of monomial
ideals, one per chart, indexed by partitions with total size k.  At a cell
with arm a and leg l of a partition lying in a chart with weights (v1, v2)
the length-2k tangent representation contributes the two weights

    (a + 1) * v1 - l * v2        and        -a * v1 + (l + 1) * v2 .

The residue formula then turns integrals over the Hilbert scheme into
sums over fixed points of the localized class divided by the product of
the tangent weights.  For the genus with series exp(sum_j s_j x^j),
twisted by exp(t*x), the localized class at a fixed point with weight
power sums q_j is

    exp( sum_j (s_j + t*[j==1]) q_j u^j )

where u is a bookkeeping variable marking cohomological degree: the u^2k
coefficient integrates, everything below must cancel across fixed points.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Mapping

from .partitions import Partition, cell_hooks, multipartitions
from .polyring import Q, Monomial, SPoly, UPoly, monomial_insert, upoly_exp


class GenericityError(Exception):
    """A chart or tangent weight vanished; retry with other torus parameters."""


class VanishingCheckError(Exception):
    """A below-top-degree localization sum failed to cancel."""


@dataclass(frozen=True)
class SurfaceModel:
    """A toric surface with integer chart weights and its Chern invariants."""

    name: str
    charts: tuple[tuple[int, int], ...]
    c1sq: int
    c2: int
    weights: tuple[int, int]


SURFACE_NAMES = ("p2", "p1xp1")


def build_surface_model(name: str, a: int, b: int) -> SurfaceModel:
    """Surface model at torus parameters (a, b); rejects zero chart weights.

    For the plane the homogeneous coordinates carry weights (0, a, b), so
    the three fixed points see weights (a, b), (-a, b-a), (-b, a-b).  For
    the product of two lines the factor weights are a and b and the four
    fixed points see (+-a, +-b).
    """
    if (a, b) == (0, 0):
        raise GenericityError("torus parameters (0, 0) are degenerate")
    if name == "p2":
        charts = ((a, b), (-a, b - a), (-b, a - b))
        c1sq, c2 = 9, 3
    elif name == "p1xp1":
        charts = ((a, b), (a, -b), (-a, b), (-a, -b))
        c1sq, c2 = 8, 4
    else:
        raise ValueError(f"unknown surface {name!r}")
    for i, (v1, v2) in enumerate(charts):
        if v1 == 0 or v2 == 0:
            raise GenericityError(
                f"chart {i} of {name} has a zero weight at (a, b) = ({a}, {b})"
            )
    return SurfaceModel(name, charts, c1sq, c2, (a, b))


def is_generic(model: SurfaceModel, depth: int) -> bool:
    """True if no tangent weight vanishes for any partition of size <= depth.

    Every (arm, leg) pair with arm + leg <= depth - 1 occurs in some
    partition of size <= depth (the hook), and no other pair occurs, so
    checking hooks is exact.
    """
    for v1, v2 in model.charts:
        for arm in range(depth):
            for leg in range(depth - arm):
                if (arm + 1) * v1 == leg * v2 or (leg + 1) * v2 == arm * v1:
                    return False
    return True


def default_weights(depth: int) -> tuple[int, int]:
    return (1, depth * depth + depth + 1)


def find_generic_model(
    name: str,
    depth: int,
    weights: tuple[int, int] | None = None,
    max_tries: int = 64,
) -> SurfaceModel:
    """Build a model generic up to Hilbert depth ``depth``.

    Explicit weights are used as given and must pass; otherwise the
    deterministic schedule starts at (1, depth^2 + depth + 1) and
    increments b until the genericity precheck passes.
    """
    if weights is not None:
        model = build_surface_model(name, *weights)
        if not is_generic(model, depth):
            raise GenericityError(
                f"weights {weights} are degenerate for {name} at depth {depth}"
            )
        return model
    a, b = default_weights(depth)
    for _ in range(max_tries):
        try:
            model = build_surface_model(name, a, b)
            if is_generic(model, depth):
                return model
        except GenericityError:
            pass
        b += 1
    raise GenericityError(f"no generic parameters found for {name} at depth {depth}")


@dataclass(frozen=True)
class FixedPoint:
    """A torus-fixed subscheme: one partition per chart."""

    assignment: tuple[Partition, ...]

    @property
    def total(self) -> int:
        return sum(sum(lam) for lam in self.assignment)


def fixed_points(model: SurfaceModel, k: int) -> list[FixedPoint]:
    """All fixed points of the Hilbert scheme of k points, fixed order."""
    return [FixedPoint(t) for t in multipartitions(k, len(model.charts))]


def tangent_weights(chart: tuple[int, int], lam: Partition) -> list[int]:
    """The 2|lam| tangent weights of the punctual piece in one chart."""
    v1, v2 = chart
    if v1 == 0 or v2 == 0:
        raise GenericityError("chart weights must be nonzero")
    out = []
    for cell in cell_hooks(lam):
        w1 = (cell.arm + 1) * v1 - cell.leg * v2
        w2 = -cell.arm * v1 + (cell.leg + 1) * v2
        if w1 == 0 or w2 == 0:
            raise GenericityError(
                f"zero tangent weight at cell {cell} of {lam} in chart {chart}"
            )
        out.append(w1)
        out.append(w2)
    return out


@dataclass(frozen=True)
class TangentData:
    """Tangent weights at one fixed point with their derived quantities."""

    weights: tuple[int, ...]
    euler_product: int
    power_sums: tuple[int, ...]  # q_j = sum w_i^j for j = 1..2k


def tangent_data(model: SurfaceModel, point: FixedPoint) -> TangentData:
    ws: list[int] = []
    for chart, lam in zip(model.charts, point.assignment):
        ws.extend(tangent_weights(chart, lam))
    euler = 1
    for w in ws:
        euler *= w
    two_k = len(ws)
    powers = [1] * len(ws)
    sums = []
    for _ in range(two_k):
        powers = [p * w for p, w in zip(powers, ws)]
        sums.append(sum(powers))
    return TangentData(tuple(ws), euler, tuple(sums))


def fixed_point_contribution(
    model: SurfaceModel, point: FixedPoint, t: int, weight_cap: int
) -> UPoly:
    """The localized genus class of one fixed point, over its Euler class.

    Returns exp(sum_j (s_j + t*[j==1]) q_j u^j) / euler_product, truncated
    at u-degree 2k and the weight cap.
    """
    data = tangent_data(model, point)
    two_k = len(data.weights)
    E = [SPoly.zero(weight_cap)]
    for j in range(1, two_k + 1):
        coeff = SPoly.variable(j, weight_cap)
        if j == 1 and t:
            coeff = coeff + t
        E.append(coeff.scale(data.power_sums[j - 1]))
    return upoly_exp(UPoly(E)).scale(Q(1, data.euler_product))


def _exp_pieces(power_sums, weight_cap: int, dmax: int) -> list[dict]:
    """Homogeneous pieces P_d of exp(sum_j s_j q_j u^j) for d = 0..dmax.

    P_d is homogeneous of weight d, so pieces beyond the weight cap are
    empty.  Uses the derivative recurrence d*P_d = sum_j j q_j s_j P_{d-j},
    where each step multiplies by the single monomial s_j.
    """
    pieces: list[dict] = [{(): Q(1)}]
    top = min(dmax, weight_cap)
    for d in range(1, top + 1):
        acc: dict[Monomial, object] = {}
        for j in range(1, d + 1):
            qj = power_sums[j - 1]
            if not qj:
                continue
            factor = Q(j * qj, d)
            for mono, c in pieces[d - j].items():
                key = monomial_insert(mono, j)
                term = c * factor
                old = acc.get(key)
                acc[key] = term if old is None else old + term
        pieces.append({m: c for m, c in acc.items() if c})
    pieces.extend({} for _ in range(top + 1, dmax + 1))
    return pieces


@dataclass(frozen=True)
class LocalizedSums:
    """Fixed-point sums for the Hilbert scheme of k points.

    table[(d, m)] is the sum over all fixed points of

        q_1^m / (m! * euler_product) * P_d

    for d + m <= 2k and d <= weight cap.  The genus twisted by t is
    recovered at u-degree D as sum_m t^m table[(D - m, m)]; entries with
    d + m < 2k vanish identically (checked at construction time).
    """

    k: int
    weight_cap: int
    table: Mapping[tuple[int, int], SPoly]

    def genus_at(self, t: int, degree: int) -> SPoly:
        acc = SPoly.zero(self.weight_cap)
        tm = 1
        for m in range(degree + 1):
            if tm:
                part = self.table.get((degree - m, m))
                if part is not None and not part.is_zero():
                    acc = acc + part.scale(tm)
            tm *= t
        return acc


@lru_cache(maxsize=None)
def localized_sums(model: SurfaceModel, k: int, weight_cap: int) -> LocalizedSums:
    """Accumulate all fixed-point data of the Hilbert scheme of k points.

    Each fixed point is visited once; its exponential pieces are shared by
    every twist t.  Division by the Euler product happens per point, so
    the summation order cannot affect the exact result.
    """
    two_k = 2 * k
    dmax = min(two_k, weight_cap)
    acc: dict[tuple[int, int], dict] = {
        (d, m): {} for d in range(dmax + 1) for m in range(two_k - d + 1)
    }
    for point in fixed_points(model, k):
        data = tangent_data(model, point)
        pieces = _exp_pieces(data.power_sums, weight_cap, two_k)
        q1 = data.power_sums[0] if two_k else 0
        q1m = 1
        for m in range(two_k + 1):
            if q1m:
                scal = Q(q1m, factorial(m) * data.euler_product)
                for d in range(min(two_k - m, dmax) + 1):
                    bucket = acc[(d, m)]
                    for mono, c in pieces[d].items():
                        term = c * scal
                        old = bucket.get(mono)
                        if old is None:
                            bucket[mono] = term
                        else:
                            bucket[mono] = old + term
            q1m *= q1
    table = {key: SPoly(weight_cap, terms) for key, terms in acc.items()}
    for (d, m), poly in table.items():
        if d + m < two_k and not poly.is_zero():
            raise VanishingCheckError(
                f"below-top localization sum (degree {d}, twist power {m}) "
                f"for k={k} on {model.name}{model.weights} is {poly}"
            )
    return LocalizedSums(k, weight_cap, table)


def hilbert_genus(model: SurfaceModel, k: int, t: int, weight_cap: int) -> SPoly:
    """Universal genus of the Hilbert scheme of k points, twisted by t.

    Sums the top-degree fixed-point contributions; the below-top sums are
    asserted to cancel when the fixed-point data is built.  At t = 0 the
    value is homogeneous of weight 2k (checked whenever 2k fits the cap).
    """
    sums = localized_sums(model, k, weight_cap)
    genus = sums.genus_at(t, 2 * k)
    if t == 0 and 2 * k <= weight_cap and not genus.is_homogeneous(2 * k):
        raise VanishingCheckError(
            f"t=0 genus of k={k} not homogeneous of weight {2 * k}: {genus}"
        )
    return genus
