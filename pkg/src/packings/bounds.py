"""Upper bounds and exact-value windows for packing numbers.

Every function returns a BoundReport carrying a value (or None when the
method does not apply), a provenance label, and the intermediate quantities
behind the value.  All boundary comparisons use exact integer or rational
arithmetic; nothing here touches floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .core import DesignParams, choose

JOHNSON_SCHONHEIM = "johnson-schonheim"
HANANI = "hanani"
SECOND_JOHNSON = "second-johnson"
GEN_SECOND_JOHNSON = "generalized-second-johnson"
HORSLEY_1 = "horsley-1"
HORSLEY_2 = "horsley-2"
EXACT_WINDOW = "exact-window"        # block count pinned by the main counting window
EXACT_THRESHOLD = "exact-threshold"  # pinned at the largest constructible block count
EXACT_FAMILY = "exact-family"        # the tight parameter family hitting the threshold
EXACT_DIRECTED = "exact-directed"    # directed window at (t, lam) = (2, 1)
VIA_UNDIRECTED = "via-undirected"    # directed value bounded through its unordered shadow
ORACLE = "oracle"

EXACT_PROVENANCES = frozenset(
    {EXACT_WINDOW, EXACT_THRESHOLD, EXACT_FAMILY, EXACT_DIRECTED, ORACLE}
)


class NotApplicableError(ValueError):
    """A requested theorem or construction does not cover the given parameters."""


@dataclass(frozen=True)
class BoundReport:
    """A bound value plus the method and intermediate quantities that produced it."""

    value: int | None
    provenance: str
    detail: dict = field(default_factory=dict)
    exact: bool = False

    @property
    def applicable(self) -> bool:
        return self.value is not None


def johnson_schonheim(params: DesignParams) -> BoundReport:
    """Nested-floor counting bound; applies to every parameter set."""
    v, k, t, lam = params.v, params.k, params.t, params.lam
    value = lam * (v - t + 1) // (k - t + 1)
    for j in range(t - 2, -1, -1):
        value = (v - j) * value // (k - j)
    return BoundReport(value, JOHNSON_SCHONHEIM, {"v": v, "k": k, "t": t, "lam": lam})


def hanani_b(v: int, k: int, lam: int = 1) -> BoundReport:
    """Nested-floor bound at t=2, minus one when two congruences both hold.

    The improvement triggers when lam(v-1) = 0 mod (k-1) and
    lam*v*(v-1) = -1 mod k, taken verbatim.
    """
    if not v >= k >= 2:
        raise ValueError(f"require v >= k >= 2, got v={v} k={k}")
    base = johnson_schonheim(DesignParams(v, k, 2, lam)).value
    cong_r = lam * (v - 1) % (k - 1) == 0
    cong_b = lam * v * (v - 1) % k == (-1) % k
    improved = cong_r and cong_b
    return BoundReport(
        base - 1 if improved else base,
        HANANI,
        {"base": base, "congruence_r": cong_r, "congruence_b": cong_b, "improved": improved},
    )


def sj_quadratic_feasible(d: int, v: int, k: int, t: int = 2) -> bool:
    """Quadratic counting condition a size-d packing must satisfy at lam=1."""
    q, r = divmod(d * k, v)
    return d * (d - 1) * (t - 1) >= q * (q - 1) * v + 2 * q * r


def second_johnson(v: int, k: int, t: int = 2) -> BoundReport:
    """Largest block count passing the quadratic counting test (lam = 1).

    Scans upward and returns one less than the first failing count; a design
    of the failing size would contain one of every smaller size, so the first
    failure is decisive.  The weaker closed form v(k+1-t) // (k^2 - v(t-1))
    is reported in the detail when v(t-1) < k^2.
    """
    if not v >= k >= t >= 2:
        raise ValueError(f"require v >= k >= t >= 2, got v={v} k={k} t={t}")
    closed = v * (k + 1 - t) // (k * k - v * (t - 1)) if v * (t - 1) < k * k else None
    cap = johnson_schonheim(DesignParams(v, k, t, 1)).value
    for d in range(cap + 2):
        if not sj_quadratic_feasible(d, v, k, t):
            q, r = divmod(d * k, v)
            return BoundReport(
                d - 1,
                SECOND_JOHNSON,
                {"closed_form": closed, "first_infeasible": d, "q": q, "r": r},
            )
    # no failure at or below the nested-floor bound: the test adds nothing
    return BoundReport(
        None, SECOND_JOHNSON,
        {"closed_form": closed, "first_infeasible": None, "scanned_to": cap + 1},
    )


def gen_second_johnson_feasible(d: int, params: DesignParams) -> bool:
    """Convexity counting condition a size-d packing must satisfy for any lam.

    With dk = qv + r and 0 <= r < v, feasibility reads
    (t-1)*C(d, lam+1) >= v*C(q, lam+1) + r*C(q, lam).
    """
    if d < 0:
        raise ValueError(f"block count must be nonnegative, got {d}")
    v, t, lam = params.v, params.t, params.lam
    q, r = divmod(d * params.k, v)
    return (t - 1) * choose(d, lam + 1) >= v * choose(q, lam + 1) + r * choose(q, lam)


def gen_second_johnson_bound(params: DesignParams) -> BoundReport:
    """One less than the first block count failing the convexity counting test."""
    cap = johnson_schonheim(params).value
    for d in range(cap + 2):
        if not gen_second_johnson_feasible(d, params):
            q, r = divmod(d * params.k, params.v)
            return BoundReport(
                d - 1, GEN_SECOND_JOHNSON, {"first_infeasible": d, "q": q, "r": r}
            )
    return BoundReport(
        None, GEN_SECOND_JOHNSON, {"first_infeasible": None, "scanned_to": cap + 1}
    )


def _replication_split(v: int, k: int, lam: int) -> tuple[int, int]:
    """r and d with lam(v-1) = r(k-1) + d and 0 <= d < k-1."""
    return divmod(lam * (v - 1), k - 1)


def horsley_bound_1(v: int, k: int, lam: int = 1) -> BoundReport:
    """Replication-count bound for the low-remainder case d < r - lam (t = 2)."""
    if not 3 <= k < v:
        raise ValueError(f"require 3 <= k < v, got v={v} k={k}")
    r, d = _replication_split(v, k, lam)
    if d >= r - lam:
        return BoundReport(None, HORSLEY_1, {"r": r, "d": d, "reason": "d >= r - lam"})
    return BoundReport(v * (r - 1) // (k - 1), HORSLEY_1, {"r": r, "d": d})


def horsley_bound_2(v: int, k: int, lam: int = 1) -> BoundReport:
    """Replication-count bound for the high-remainder case d >= r - lam (t = 2).

    Two sub-cases carry their own side conditions; the minimum over the
    applicable ones is returned.  Evaluation is exact via Fractions, and a
    non-positive denominator marks the sub-case degenerate.
    """
    if not 3 <= k < v:
        raise ValueError(f"require 3 <= k < v, got v={v} k={k}")
    r, d = _replication_split(v, k, lam)
    if d < r - lam:
        return BoundReport(None, HORSLEY_2, {"r": r, "d": d, "reason": "d < r - lam"})
    cases: dict[str, tuple[Fraction, Fraction]] = {}
    if k * (r + lam - 1) > 2 * d + 2:
        cases["alpha"] = (Fraction(r - lam + 1, 2 * d + 2), Fraction(0))
    if (r - lam) * k * (k - 1) > 2 * (d + 1) * (d + k):
        cases["alpha-beta"] = (
            Fraction(r - lam, 2 * d + 2),
            Fraction(r - lam, 2 * (d + k)),
        )
    values: dict[str, int | None] = {}
    for name, (alpha, beta) in cases.items():
        den = k * (alpha - beta) - 1
        if den <= 0:
            values[name] = None  # degenerate, not applicable
            continue
        val = math.floor((r * v * (alpha - beta) - alpha * v) / den)
        # one block always exists, so a sub-case claiming less than one
        # (possible when r = lam) is degenerate rather than a bound
        values[name] = val if val >= 1 else None
    weights = {name: (alpha, beta) for name, (alpha, beta) in cases.items()}
    usable = [val for val in values.values() if val is not None]
    if not usable:
        return BoundReport(
            None,
            HORSLEY_2,
            {"r": r, "d": d, "cases": values, "weights": weights, "reason": "no sub-case applies"},
        )
    return BoundReport(
        min(usable), HORSLEY_2, {"r": r, "d": d, "cases": values, "weights": weights}
    )


def _least_ell(k: int, t: int, lam: int) -> int:
    """Least integer with (t-1) * C(ell, lam) > k."""
    ell = lam
    while (t - 1) * choose(ell, lam) <= k:
        ell += 1
    return ell


def _window_edge(n: int, k: int, t: int, lam: int) -> int:
    return n * k - (t - 1) * choose(n, lam + 1)


def exact_by_theorems(params: DesignParams) -> BoundReport:
    """Exact packing number when one of the large-block-size windows applies.

    First looks for the n with nk - (t-1)C(n,lam+1) <= lam*v strictly below
    the same expression at n+1 (at most one such n can exist); failing that,
    tries the boundary window at ell, the least count with
    (t-1)C(ell,lam) > k, whose upper edge is a rational number compared
    exactly.
    """
    v, k, t, lam = params.v, params.k, params.t, params.lam
    if t < 2:
        raise ValueError(f"require t >= 2, got t={t}")
    ell = _least_ell(k, t, lam)
    hits = []
    for n in range(1, ell + 1):
        lo = _window_edge(n, k, t, lam)
        hi = _window_edge(n + 1, k, t, lam)
        if lo <= lam * v < hi:
            hits.append((n, lo, hi))
    assert len(hits) <= 1, f"overlapping windows for {params}: {hits}"
    if hits:
        n, lo, hi = hits[0]
        # a nonempty window forces k > (t-1) * C(n, lam)
        assert k > (t - 1) * choose(n, lam)
        return BoundReport(n, EXACT_WINDOW, {"n": n, "window": (lo, hi)}, exact=True)
    lo = _window_edge(ell, k, t, lam)
    hi = Fraction((lam + 1) * (ell + 1) * k - (t - 1) * choose(ell + 1, lam + 1), lam + 2)
    if lo <= lam * v and lam * v < hi:
        return BoundReport(
            ell, EXACT_THRESHOLD, {"ell": ell, "window": (lo, hi)}, exact=True
        )
    return BoundReport(None, EXACT_WINDOW, {"reason": "outside both windows", "ell": ell})


def exact_family(n: int, t: int, lam: int) -> BoundReport:
    """Exact value n on the tight family v = (t-1)C(n,lam+1), k = (t-1)C(n-1,lam).

    With this v, lam*v lands exactly on the left edge of the boundary window
    at ell = n, so the threshold theorem pins the packing number.  The detail
    carries the parameter set realized.
    """
    if n < lam + 1:
        raise ValueError(f"require n >= lam + 1, got n={n} lam={lam}")
    v = (t - 1) * choose(n, lam + 1)
    k = (t - 1) * choose(n - 1, lam)
    if not v >= k >= t:
        raise NotApplicableError(
            f"family parameters v={v} k={k} degenerate for t={t} (need v >= k >= t)"
        )
    return BoundReport(n, EXACT_FAMILY, {"v": v, "k": k, "t": t, "lam": lam}, exact=True)


def exact_dpdn_by_theorem(v: int, k: int) -> BoundReport:
    """Exact directed packing number when the doubled window applies.

    Returns n when nk - C(n,3) <= 2v < (n+1)k - C(n+1,3); the directed value
    then coincides with the unordered packing number at multiplicity two.
    """
    if not v >= k >= 2:
        raise ValueError(f"require v >= k >= 2, got v={v} k={k}")
    for n in range(1, _least_ell(k, 2, 2) + 1):
        lo = n * k - choose(n, 3)
        hi = (n + 1) * k - choose(n + 1, 3)
        if lo <= 2 * v < hi:
            return BoundReport(n, EXACT_DIRECTED, {"n": n, "window": (lo, hi)}, exact=True)
    return BoundReport(None, EXACT_DIRECTED, {"reason": "outside the window"})


def bound_candidates(params: DesignParams, *, include_exact: bool = True) -> list[BoundReport]:
    """Every bound that can be evaluated at these parameters, in report order."""
    v, k, t, lam = params.v, params.k, params.t, params.lam
    out = [johnson_schonheim(params)]
    if t == 2:
        out.append(hanani_b(v, k, lam))
    out.append(gen_second_johnson_bound(params))
    if lam == 1 and t >= 2:
        out.append(second_johnson(v, k, t))
    if t == 2 and 3 <= k < v:
        out.append(horsley_bound_1(v, k, lam))
        out.append(horsley_bound_2(v, k, lam))
    if include_exact and t >= 2:
        out.append(exact_by_theorems(params))
    return out


def _pick_min(candidates: list[BoundReport]) -> BoundReport:
    best = None
    for rep in candidates:
        if rep.value is not None and (best is None or rep.value < best.value):
            best = rep
    assert best is not None  # the nested-floor bound always applies
    return best


def best_upper_bound(
    params: DesignParams, *, directed: bool = False, include_exact: bool = True
) -> BoundReport:
    """Smallest applicable upper bound, reporting which method won.

    For directed problems every unordered bound is applied to the shadow
    packing at multiplicity t! * lam, alongside the directed window when
    (t, lam) = (2, 1).  ``include_exact=False`` drops the exact-value windows,
    leaving only the classical bounds (used by the search oracle so that its
    certificates stay independent of the windows under test).
    """
    if not directed:
        return _pick_min(bound_candidates(params, include_exact=include_exact))
    candidates: list[BoundReport] = []
    if include_exact and (params.t, params.lam) == (2, 1):
        candidates.append(exact_dpdn_by_theorem(params.v, params.k))
    shadow = params.with_lam(math.factorial(params.t) * params.lam)
    for rep in bound_candidates(shadow, include_exact=include_exact):
        if rep.value is None:
            continue
        candidates.append(
            BoundReport(
                rep.value,
                VIA_UNDIRECTED,
                {"underlying": rep.provenance, "shadow_lam": shadow.lam, "detail": rep.detail},
            )
        )
    return _pick_min(candidates)
