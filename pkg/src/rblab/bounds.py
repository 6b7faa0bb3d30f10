"""Closed-form Turan arithmetic and exhaustive inequality sweeps.

Everything here is exact: integer comparisons with cleared denominators, and
Fractions only in the diagnostic ratios.  The sweep covers the four
inequalities that the packing-deletion argument leans on, over configurable
(r, n) ranges.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import ContractViolationError, InvalidParameterError
from .model import thresholds, turan_number
from .nesting import WeightedGraph
from .sequences import is_staircase_free


@dataclass(frozen=True)
class TuranDecomposition:
    """n = k0*(r-1) + m with 0 <= m <= r-2."""

    n: int
    r: int
    k0: int
    m: int


def decompose(n: int, r: int) -> TuranDecomposition:
    if r < 2 or n < 0:
        raise InvalidParameterError(f"need r >= 2 and n >= 0, got n={n} r={r}")
    k0, m = divmod(n, r - 1)
    return TuranDecomposition(n=n, r=r, k0=k0, m=m)


def turan_closed_form(m: int, n: int, r: int) -> Fraction:
    """C(n,2) - (n-m)(n+m-(r-1)) / (2(r-1)), exact.

    With the canonical decomposition m = n mod (r-1) this equals the Turan
    edge count t_{r-1}(n) as an integer.
    """
    if r <= 1:
        raise InvalidParameterError(f"need r >= 2, got {r}")
    return comb(n, 2) - Fraction((n - m) * (n + m - (r - 1)), 2 * (r - 1))


@dataclass(frozen=True)
class Prop31Violation:
    part: str
    r: int
    n: int
    s: int | None
    detail: str


@dataclass(frozen=True)
class Prop31Report:
    r_values: tuple[int, ...]
    n_max: int
    checks: dict[str, int]
    violations: tuple[Prop31Violation, ...]

    @property
    def total_checks(self) -> int:
        return sum(self.checks.values())

    def ok(self) -> bool:
        return not self.violations


def verify_prop31(r_values, n_max: int) -> Prop31Report:
    """Exhaustive exact check of the four packing-deletion inequalities.

    (i)   k2 >= C(r,2) + 1                      for n >= r+1;
    (ii)  t(n) - t(n-s) >= C(s,2) + s(n-s)(r-2)/(r-1)
                                              for 1 <= s <= min(r-1, n-1);
    (iii) t(n-s) * C(n,2) >= C(n-s,2) * t(n)    for 1 <= s <= n-1;
    (iv)  (C(r,2)-1)(C(n,2)-C(n-s,2)) >= C(r,2)(C(s,2)+s(n-s)(r-2)/(r-1)) + n-s
                                              for n >= r+1, 1 <= s <= r-1.

    The (ii) range is the one the vertex-deletion argument supports (one
    vertex per part); s values beyond r-1 genuinely violate the inequality
    and are out of scope.
    """
    r_values = tuple(sorted(set(r_values)))
    if any(r < 4 for r in r_values):
        raise InvalidParameterError("sweep is defined for r >= 4")
    if r_values and n_max < max(r_values) + 1:
        raise InvalidParameterError(f"n_max must reach max(r)+1 = {max(r_values) + 1}")
    checks = {"i": 0, "ii": 0, "iii": 0, "iv": 0}
    violations: list[Prop31Violation] = []

    for r in r_values:
        h = comb(r, 2)
        t = [turan_number(n, r - 1) if n >= 1 else 0 for n in range(n_max + 1)]
        for n in range(r - 1, n_max + 1):
            if n >= r + 1:
                checks["i"] += 1
                k2 = thresholds(n, r).k2
                if k2 < h + 1:
                    violations.append(
                        Prop31Violation("i", r, n, None, f"k2={k2} < {h + 1}")
                    )
            for s in range(1, min(r - 1, n - 1) + 1):
                checks["ii"] += 1
                lhs = (r - 1) * (t[n] - t[n - s])
                rhs = (r - 1) * comb(s, 2) + (r - 2) * s * (n - s)
                if lhs < rhs:
                    violations.append(
                        Prop31Violation("ii", r, n, s, f"{lhs} < {rhs} (scaled by r-1)")
                    )
            for s in range(1, n):
                checks["iii"] += 1
                if t[n - s] * comb(n, 2) < comb(n - s, 2) * t[n]:
                    violations.append(
                        Prop31Violation(
                            "iii", r, n, s, f"t({n - s})*C({n},2) < C({n - s},2)*t({n})"
                        )
                    )
            if n >= r + 1:
                for s in range(1, r):
                    checks["iv"] += 1
                    lhs = (r - 1) * (h - 1) * (comb(n, 2) - comb(n - s, 2))
                    rhs = h * ((r - 1) * comb(s, 2) + (r - 2) * s * (n - s)) + (
                        r - 1
                    ) * (n - s)
                    if lhs < rhs:
                        violations.append(
                            Prop31Violation("iv", r, n, s, f"{lhs} < {rhs} (scaled by r-1)")
                        )
    return Prop31Report(
        r_values=r_values, n_max=n_max, checks=checks, violations=tuple(violations)
    )


def capped_total(r: int, j: int) -> int:
    """j(j-1) + (C(r,2)-j)*C(r,2): total weight when the j smallest clique
    weights are capped at j-1 and the rest at C(r,2)."""
    return j * (j - 1) + (comb(r, 2) - j) * comb(r, 2)


def capped_total_max(r: int) -> int:
    """The convex bound is extremal at j = 1 or j = C(r,2) (the two agree)."""
    return max(capped_total(r, 1), capped_total(r, comb(r, 2)))


def check_n_equals_r(wg: WeightedGraph, r: int) -> bool:
    """Total-weight bound for the single-clique case n = r, k = C(r,2).

    Requires a staircase-free weighting; the bound f(G0) <= (C(r,2)-1)*C(r,2)
    then follows from convexity of the capped totals.
    """
    h = comb(r, 2)
    if wg.n != r:
        raise InvalidParameterError(f"graph must have exactly r = {r} vertices")
    if wg.k != h:
        raise InvalidParameterError(f"weight ceiling must be C(r,2) = {h}")
    if not is_staircase_free(wg, r):
        raise ContractViolationError("weighting has a staircase-dominating clique")
    return wg.total_weight() <= (h - 1) * h


@dataclass(frozen=True)
class ThresholdDiagnostics:
    """Exact rational quantities behind the k2 >= C(r,2)+1 lower bound.

    balanced_density: density of the balanced closed form relative to C(n,2)
    (defined for n >= 2r-2); small_n_ratio: the normalized closed form at
    n = r-1+m (defined for 2 <= m <= r-2); k2_excess: the quantity whose
    ceiling, plus C(r,2)-1, equals k2.
    """

    r: int
    n: int
    m: int
    balanced_density: Fraction | None
    small_n_ratio: Fraction | None
    k2_excess: Fraction


def threshold_diagnostics(r: int, n: int, m: int | None = None) -> ThresholdDiagnostics:
    if r < 4 or n < r - 1:
        raise InvalidParameterError(f"need r >= 4 and n >= r-1, got n={n} r={r}")
    if m is None:
        m = n % (r - 1)
    if not 0 <= m <= r - 2:
        raise InvalidParameterError(f"need 0 <= m <= r-2, got m={m}")
    g = turan_closed_form(m, n, r)
    if g <= 0:
        raise InvalidParameterError(f"degenerate closed form at n={n} m={m}")
    balanced = None
    if n >= 2 * r - 2:
        balanced = turan_closed_form(0, n, r) / comb(n, 2)
    small = None
    if 2 <= m <= r - 2:
        small = 2 * turan_closed_form(m, r - 1 + m, r) / m
    excess = (comb(r, 2) - 1) * (Fraction(comb(n, 2)) / g - 1)
    return ThresholdDiagnostics(
        r=r, n=n, m=m, balanced_density=balanced, small_n_ratio=small, k2_excess=excess
    )


