"""Symmetric-function layer: Chern numbers vs power-sum integrals.

The Chern classes of a manifold are the elementary symmetric functions of
its Chern roots, while localization most naturally produces power sums of
the roots.  Newton's identities convert between the two bases:

    e_r = (1/r) * sum_{i=1..r} (-1)^(i-1) e_{r-i} p_i
    p_r = sum_{i=1..r-1} (-1)^(i-1) e_i p_{r-i} + (-1)^(r-1) r e_r

Products of basis elements are indexed by partitions, and multiplying two
indexed elements concatenates the index partitions, so a linear combination
is just a dict mapping partitions to rationals.

A genus with series f(x) = exp(sum_j l_j x^j) takes the value

    sum_{lam |- d} (prod_i l_{lam_i}) / (prod_j mult_j(lam)!) * P_lam

on a d-fold with power-sum integrals P_lam = integral of p_lam.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Mapping, Sequence

from .partitions import Partition, enumerate_partitions, sym_factor
from .polyring import Q, SPoly

# A linear combination of p_lam (or e_lam) basis elements.
Combo = dict[Partition, object]


def combo_mul(a: Combo, b: Combo) -> Combo:
    out: Combo = {}
    for la, ca in a.items():
        for lb, cb in b.items():
            key = tuple(sorted(la + lb, reverse=True))
            c = ca * cb
            old = out.get(key)
            out[key] = c if old is None else old + c
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def elementary_in_power_basis(r: int) -> Mapping[Partition, object]:
    """Expansion of e_r in the power-sum basis, via Newton's recursion."""
    if r < 0:
        raise ValueError("negative index")
    if r == 0:
        return {(): Q(1)}
    acc: Combo = {}
    for i in range(1, r + 1):
        sign = 1 if i % 2 == 1 else -1
        for lam, c in elementary_in_power_basis(r - i).items():
            key = tuple(sorted(lam + (i,), reverse=True))
            term = c * Q(sign, r)
            old = acc.get(key)
            acc[key] = term if old is None else old + term
    return {k: v for k, v in acc.items() if v}


@lru_cache(maxsize=None)
def elementary_product_in_power_basis(mu: Partition) -> Combo:
    """Expansion of e_mu = e_{mu_1} e_{mu_2} ... in the power-sum basis.

    Cached; treat the returned dict as immutable.
    """
    out: Combo = {(): Q(1)}
    for part in mu:
        out = combo_mul(out, dict(elementary_in_power_basis(part)))
    return out


@lru_cache(maxsize=None)
def power_in_elementary_basis(r: int) -> Mapping[Partition, object]:
    """Expansion of p_r in the elementary-symmetric basis."""
    if r < 0:
        raise ValueError("negative index")
    if r == 0:
        return {(): Q(1)}
    sign = 1 if (r - 1) % 2 == 0 else -1
    acc: Combo = {(r,): Q(sign * r)}
    for i in range(1, r):
        s = 1 if (i - 1) % 2 == 0 else -1
        for lam, c in power_in_elementary_basis(r - i).items():
            key = tuple(sorted(lam + (i,), reverse=True))
            term = c * Q(s)
            old = acc.get(key)
            acc[key] = term if old is None else old + term
    return {k: v for k, v in acc.items() if v}


@lru_cache(maxsize=None)
def power_product_in_elementary_basis(lam: Partition) -> Combo:
    """Cached; treat the returned dict as immutable."""
    out: Combo = {(): Q(1)}
    for part in lam:
        out = combo_mul(out, dict(power_in_elementary_basis(part)))
    return out


@dataclass(frozen=True)
class ChernTable:
    """All Chern numbers of one manifold of (even) complex dimension ``degree``.

    numbers maps each partition mu of the degree to the integral of
    c_{mu_1} c_{mu_2} ...; a genuine compact complex manifold gives integers.
    """

    degree: int
    numbers: Mapping[Partition, object]

    def __post_init__(self):
        for mu in self.numbers:
            if sum(mu) != self.degree:
                raise ValueError(f"{mu} is not a partition of {self.degree}")

    def __getitem__(self, mu) -> object:
        """Value for a partition of the degree; omitted entries are 0."""
        mu = tuple(mu)
        if sum(mu) != self.degree:
            raise KeyError(f"{mu} is not a partition of {self.degree}")
        return self.numbers.get(mu, 0)

    def sorted_keys(self) -> list[Partition]:
        return sorted(self.numbers)

    def top(self) -> object:
        """The top Chern number (Euler number)."""
        key = (self.degree,) if self.degree else ()
        return self.numbers.get(key, 0)


def chern_from_power_integrals(P: Mapping[Partition, object], d: int) -> ChernTable:
    """Convert power-sum integrals P_lam (lam |- d) to Chern numbers."""
    numbers = {}
    for mu in enumerate_partitions(d):
        total = Q(0)
        for lam, c in elementary_product_in_power_basis(mu).items():
            try:
                total += c * P[lam]
            except KeyError:
                raise KeyError(f"power integral for {lam} missing") from None
        numbers[mu] = total
    return ChernTable(d, numbers)


def power_integrals_from_chern(table: ChernTable) -> dict[Partition, object]:
    """Inverse conversion: P_lam from the Chern numbers."""
    d = table.degree
    out = {}
    for lam in enumerate_partitions(d):
        total = Q(0)
        for mu, c in power_product_in_elementary_basis(lam).items():
            total += c * table[mu]
        out[lam] = total
    return out


def power_integrals_from_genus_poly(g: SPoly, d: int) -> dict[Partition, object]:
    """Read P_lam off a universal-genus value.

    The coefficient of the monomial s_lam is P_lam divided by the product
    of multiplicity factorials, so the extraction multiplies it back.
    """
    return {
        lam: g.coefficient(lam) * sym_factor(lam) for lam in enumerate_partitions(d)
    }


def evaluate_genus(table: ChernTable, ell: Sequence[object]) -> object:
    """Value on ``table`` of the genus with series f(x) = exp(sum l_j x^j).

    ell[j-1] is l_j; entries up to the table degree are required.
    """
    d = table.degree
    if len(ell) < d:
        raise ValueError(f"need {d} log-coefficients, got {len(ell)}")
    P = power_integrals_from_chern(table)
    total = Q(0)
    for lam in enumerate_partitions(d):
        coeff = Q(1, sym_factor(lam))
        for part in lam:
            coeff *= ell[part - 1]
        if coeff:
            total += coeff * P[lam]
    return total


# -- genus presets ---------------------------------------------------------


def _series_inv(a: list) -> list:
    # 1/a for a power series with a[0] == 1
    n = len(a)
    out = [Q(1)] + [Q(0)] * (n - 1)
    for k in range(1, n):
        out[k] = -sum((a[j] * out[k - j] for j in range(1, k + 1)), Q(0))
    return out


def _series_mul(a: list, b: list) -> list:
    n = min(len(a), len(b))
    return [sum((a[j] * b[k - j] for j in range(k + 1)), Q(0)) for k in range(n)]


def _series_log(a: list) -> list:
    # log of a power series with a[0] == 1; returns coefficients from x^1 on
    n = len(a)
    L = [Q(0)] * n
    for k in range(1, n):
        acc = a[k]
        for j in range(1, k):
            acc -= Q(j, k) * L[j] * a[k - j]
        L[k] = acc
    return L[1:]


@lru_cache(maxsize=None)
def genus_log_coefficients(name: str, count: int) -> tuple:
    """log f coefficients (l_1, ..., l_count) for a named genus preset.

    todd:      f(x) = x / (1 - exp(-x))
    euler:     f(x) = 1 + x
    signature: f(x) = x / tanh(x)
    """
    n = count + 1
    if name == "euler":
        ell = [Q((-1) ** (j + 1), j) for j in range(1, n)]
    elif name == "todd":
        denom = [Q((-1) ** k, factorial(k + 1)) for k in range(n)]  # (1-e^-x)/x
        ell = _series_log(_series_inv(denom))
    elif name == "signature":
        sinh_over_x = [
            Q(1, factorial(k + 1)) if k % 2 == 0 else Q(0) for k in range(n)
        ]
        cosh = [Q(1, factorial(k)) if k % 2 == 0 else Q(0) for k in range(n)]
        ell = _series_log(_series_mul(cosh, _series_inv(sinh_over_x)))
    else:
        raise ValueError(f"unknown genus preset {name!r}")
    return tuple(ell[:count])


GENUS_PRESETS = ("todd", "euler", "signature")


# -- Chern-number key rendering ---------------------------------------------


def format_chern_key(mu: Partition) -> str:
    """Render a partition as a Chern monomial: (4, 2, 2) -> 'c2^2 c4'."""
    if not mu:
        return "1"
    parts = sorted(mu)
    bits = []
    i = 0
    while i < len(parts):
        j = i
        while j < len(parts) and parts[j] == parts[i]:
            j += 1
        e = j - i
        bits.append(f"c{parts[i]}" + (f"^{e}" if e > 1 else ""))
        i = j
    return " ".join(bits)


def parse_chern_key(key: str) -> Partition:
    """Inverse of format_chern_key."""
    key = key.strip()
    if key == "1":
        return ()
    parts: list[int] = []
    for bit in key.split():
        if not bit.startswith("c"):
            raise ValueError(f"bad Chern monomial {key!r}")
        body = bit[1:]
        if "^" in body:
            base, exp = body.split("^")
            parts.extend([int(base)] * int(exp))
        else:
            parts.append(int(body))
    return tuple(sorted(parts, reverse=True))
