"""Assembly of the Kummer-variety Chern numbers from Hilbert-scheme genera.

Write H(t) for the generating series whose z^k coefficient is the
universal genus of the Hilbert scheme of k surface points, twisted by
exp(t * x).  The combination

    (z d/dz)^2 [ ln H(1) + ln H(-1) - 2 ln H(0) ] / c1sq

is, coefficient by coefficient, the universal genus of the generalised
Kummer varieties: the z^n coefficient equals the genus of the 2(n-1)-fold
member of the family.  That coefficient must be homogeneous of weight
2(n-1); the raw right-hand side is asserted to vanish in every other
weight before the projection, since off-weight residue is the most
sensitive symptom of a grading bug.

Twisting by exp(t * x) multiplies the genus series f by e^{tx}, which in
the log-coefficient variables is the substitution s1 -> s1 + t.  The
logarithm of the twisted series is exactly quadratic in the twist, which
``universal_series_quadratic_check`` verifies via third differences.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

from .localization import SurfaceModel, hilbert_genus
from .partitions import Partition
from .polyring import Q, ZSeries, zseries_euler_sq, zseries_log
from .symfun import (
    ChernTable,
    chern_from_power_integrals,
    power_integrals_from_genus_poly,
)


class HomogeneityError(Exception):
    """A series coefficient had exact residue outside its expected weight."""


class TableValidationError(Exception):
    """A computed Chern table violated a structural requirement."""


class QuadraticCheckError(Exception):
    """The twisted log series failed to be quadratic in the twist."""


def hilbert_genus_series(
    model: SurfaceModel, n_max: int, t: int, weight_cap: int
) -> ZSeries:
    """Series with z^k coefficient the twisted genus of the k-point scheme."""
    return ZSeries(
        [hilbert_genus(model, k, t, weight_cap) for k in range(n_max + 1)]
    )


@lru_cache(maxsize=None)
def kummer_genus_series(model: SurfaceModel, n_max: int) -> ZSeries:
    """Universal genus of the Kummer family through z^n_max.

    The z^n coefficient is homogeneous of weight 2(n-1) (the member has
    complex dimension 2(n-1)), so all arithmetic is capped at weight
    2(n_max - 1).
    """
    if n_max < 1:
        raise ValueError("need n_max >= 1")
    weight_cap = 2 * (n_max - 1)
    log_combined = (
        zseries_log(hilbert_genus_series(model, n_max, 1, weight_cap))
        + zseries_log(hilbert_genus_series(model, n_max, -1, weight_cap))
        - zseries_log(hilbert_genus_series(model, n_max, 0, weight_cap)).scale(2)
    )
    raw = zseries_euler_sq(log_combined).scale(Q(1, model.c1sq))
    coeffs = [raw[0]]
    for n in range(1, n_max + 1):
        w = 2 * (n - 1)
        residue = raw[n].off_weight_part(w)
        if not residue.is_zero():
            raise HomogeneityError(
                f"z^{n} coefficient has off-weight part {residue} "
                f"(expected pure weight {w})"
            )
        coeffs.append(raw[n].weight_part(w))
    if not raw[0].is_zero():
        raise HomogeneityError(f"constant coefficient is {raw[0]}, expected 0")
    return ZSeries(coeffs)


@dataclass(frozen=True)
class KummerResult:
    """Chern numbers of the 2(n-1)-dimensional Kummer-family member.

    ``chern`` keeps only the partitions into even parts; entries with an
    odd part are identically zero (the manifold is holomorphic symplectic)
    and are checked, then dropped.  ``advisories`` reports positivity or
    divisibility surprises for n > 8 where they are conjectural.
    """

    n: int
    dimension: int
    chern: ChernTable
    advisories: tuple[str, ...] = field(default=())


def _validate_kummer_table(n: int, table: ChernTable) -> KummerResult:
    kept: dict[Partition, object] = {}
    advisories: list[str] = []
    cube = n**3
    for mu in table.sorted_keys():
        value = table[mu]
        if value.denominator != 1:
            raise TableValidationError(f"n={n}: entry {mu} = {value} is not integral")
        value = int(value)
        if any(part % 2 for part in mu):
            if value != 0:
                raise TableValidationError(
                    f"n={n}: odd-part entry {mu} = {value}, expected 0"
                )
            continue
        kept[mu] = value
        problems = []
        if value <= 0:
            problems.append("not positive")
        if value % cube:
            problems.append(f"not divisible by {n}^3")
        if problems:
            message = f"n={n}: entry {mu} = {value} is " + " and ".join(problems)
            if n <= 8:
                raise TableValidationError(message)
            advisories.append(message)
    return KummerResult(
        n, table.degree, ChernTable(table.degree, kept), tuple(advisories)
    )


def kummer_chern_numbers(model: SurfaceModel, n: int) -> KummerResult:
    """Chern numbers of the n-th Kummer-family member, fully validated."""
    if n < 1:
        raise ValueError("need n >= 1")
    genus = kummer_genus_series(model, n)[n]
    d = 2 * (n - 1)
    table = chern_from_power_integrals(power_integrals_from_genus_poly(genus, d), d)
    if n == 1:
        # a single point: no validation beyond the value itself
        if table[()] != 1:
            raise TableValidationError(f"point genus is {table[()]}, expected 1")
        return KummerResult(1, 0, table)
    return _validate_kummer_table(n, table)


def hilbert_chern_numbers(model: SurfaceModel, k: int) -> ChernTable:
    """Chern numbers of the Hilbert scheme of k points on the surface."""
    if k < 0:
        raise ValueError("need k >= 0")
    genus = hilbert_genus(model, k, 0, 2 * k)
    d = 2 * k
    table = chern_from_power_integrals(power_integrals_from_genus_poly(genus, d), d)
    for mu in table.sorted_keys():
        if table[mu].denominator != 1:
            raise TableValidationError(
                f"k={k}: entry {mu} = {table[mu]} is not integral"
            )
    return ChernTable(d, {mu: int(table[mu]) for mu in table.sorted_keys()})


@dataclass(frozen=True)
class QuadraticCheckReport:
    """Outcome of the quadratic-in-twist verification."""

    n_max: int
    twists: tuple[int, ...]
    windows_checked: int


def third_difference_defect(logs: Mapping[int, ZSeries], m0: int) -> ZSeries:
    """L(m0+3) - 3 L(m0+2) + 3 L(m0+1) - L(m0); zero iff quadratic there."""
    return (
        logs[m0 + 3]
        - logs[m0 + 2].scale(3)
        + logs[m0 + 1].scale(3)
        - logs[m0]
    )


def universal_series_quadratic_check(
    model: SurfaceModel, n_max: int
) -> QuadraticCheckReport:
    """Verify that ln of the twisted Hilbert series is quadratic in the twist.

    Builds the series for twists -2..2 and requires both third finite
    differences to vanish exactly, coefficient by coefficient, through
    z^n_max.
    """
    twists = (-2, -1, 0, 1, 2)
    weight_cap = 2 * n_max
    logs = {
        m: zseries_log(hilbert_genus_series(model, n_max, m, weight_cap))
        for m in twists
    }
    windows = 0
    for m0 in twists[: len(twists) - 3]:
        defect = third_difference_defect(logs, m0)
        for n, coeff in enumerate(defect.coeffs):
            if not coeff.is_zero():
                raise QuadraticCheckError(
                    f"third difference at twists {m0}..{m0 + 3} has z^{n} "
                    f"coefficient {coeff}"
                )
        windows += 1
    return QuadraticCheckReport(n_max, twists, windows)
