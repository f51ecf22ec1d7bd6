"""Domain types, validators, and frequency accounting for packing designs.

A packing design places blocks (subsets of a point set) so that no t-subset
of points is covered more than ``lam`` times.  The directed variant uses
ordered blocks and counts ordered t-tuples along subsequences instead.  All
types are immutable after construction and every operation here is pure.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence, Union


class StructuralError(ValueError):
    """A design is malformed: point out of range or duplicate point in a block."""


def choose(a: int, b: int) -> int:
    """Binomial coefficient with C(a, b) = 0 whenever b < 0 or a < b."""
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def is_subsequence(needle: Sequence[int], haystack: Sequence[int]) -> bool:
    """True if needle occurs in haystack in order, not necessarily contiguously."""
    it = iter(haystack)
    return all(x in it for x in needle)


@dataclass(frozen=True)
class DesignParams:
    """Problem parameters: v points, block size k, t-subsets covered at most lam times."""

    v: int
    k: int
    t: int
    lam: int = 1

    def __post_init__(self) -> None:
        if not self.v >= self.k >= self.t >= 1:
            raise ValueError(
                f"require v >= k >= t >= 1, got v={self.v} k={self.k} t={self.t}"
            )
        if self.lam < 1:
            raise ValueError(f"require lam >= 1, got lam={self.lam}")

    def with_lam(self, lam: int) -> "DesignParams":
        return DesignParams(self.v, self.k, self.t, lam)


def _check_block(block: tuple[int, ...], v: int) -> None:
    seen = set()
    for x in block:
        if not 0 <= x < v:
            raise StructuralError(f"point {x} out of range for v={v}")
        if x in seen:
            raise StructuralError(f"duplicate point {x} in block {block}")
        seen.add(x)


@dataclass(frozen=True)
class PackingDesign:
    """An unordered design: blocks over the point set {0, ..., v-1}.

    Blocks are canonicalized to sorted tuples.  Sizes may vary, and empty or
    repeated blocks are legal input.
    """

    v: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.v < 1:
            raise StructuralError(f"v must be positive, got {self.v}")
        canon = []
        for block in self.blocks:
            b = tuple(sorted(block))
            _check_block(b, self.v)
            canon.append(b)
        object.__setattr__(self, "blocks", tuple(canon))

    @property
    def n(self) -> int:
        return len(self.blocks)


@dataclass(frozen=True)
class DirectedPackingDesign:
    """An ordered design: duplicate-free point sequences over {0, ..., v-1}."""

    v: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.v < 1:
            raise StructuralError(f"v must be positive, got {self.v}")
        canon = []
        for block in self.blocks:
            b = tuple(block)
            _check_block(b, self.v)
            canon.append(b)
        object.__setattr__(self, "blocks", tuple(canon))

    @property
    def n(self) -> int:
        return len(self.blocks)


Design = Union[PackingDesign, DirectedPackingDesign]


@dataclass(frozen=True)
class FrequencyProfile:
    """Per-point frequencies r(x) plus the count N[i] of points at each frequency i."""

    r: dict[int, int]
    N: dict[int, int]
    n: int

    @property
    def total_membership(self) -> int:
        """Sum of all block sizes (equals n*k for uniform block size k)."""
        return sum(i * cnt for i, cnt in self.N.items())


def frequency_profile(design: Design) -> FrequencyProfile:
    """Tabulate how often each point occurs across the blocks."""
    r = {x: 0 for x in range(design.v)}
    for block in design.blocks:
        for x in block:
            r[x] += 1
    return FrequencyProfile(r=r, N=dict(Counter(r.values())), n=len(design.blocks))


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a multiplicity check, with the worst offender as a witness."""

    valid: bool
    worst_t_set: tuple[int, ...] | None
    worst_multiplicity: int
    diagnostics: tuple[tuple[str, bool, object], ...] = ()


def _worst(counts: Counter) -> tuple[tuple[int, ...] | None, int]:
    if not counts:
        return None, 0
    top = max(counts.values())
    return min(s for s, c in counts.items() if c == top), top


def _check_sizes(design: Design, params: DesignParams, uniform: bool) -> None:
    if design.v != params.v:
        raise ValueError(f"design has v={design.v} but params have v={params.v}")
    for block in design.blocks:
        if uniform and len(block) != params.k:
            raise ValueError(
                f"uniform mode requires block size {params.k}, got {len(block)}"
            )
        if len(block) > params.k:
            raise ValueError(f"block {block} larger than k={params.k}")


def validate_packing(
    design: PackingDesign, params: DesignParams, *, uniform: bool = False
) -> ValidationReport:
    """Check that every t-subset of points lies in at most lam blocks.

    Repeated blocks count separately.  ``uniform`` additionally requires every
    block to have size exactly k (the default allows any size up to k).
    """
    _check_sizes(design, params, uniform)
    counts: Counter = Counter()
    for block in design.blocks:
        for sub in combinations(block, params.t):
            counts[sub] += 1
    worst, mult = _worst(counts)
    valid = mult <= params.lam
    diagnostics = (
        ("block-sizes", True, None),
        ("t-multiplicity", valid, {"t_set": worst, "multiplicity": mult, "limit": params.lam}),
    )
    return ValidationReport(valid, worst, mult, diagnostics)


def validate_directed(
    design: DirectedPackingDesign, params: DesignParams, *, uniform: bool = False
) -> ValidationReport:
    """Check that every ordered t-tuple is a subsequence of at most lam blocks.

    A t-tuple occurs in a block whenever its entries appear there in order;
    they need not be consecutive.
    """
    _check_sizes(design, params, uniform)
    counts: Counter = Counter()
    for block in design.blocks:
        # positions chosen in increasing order give exactly the ordered
        # t-tuples occurring as subsequences
        for sub in combinations(block, params.t):
            counts[sub] += 1
    worst, mult = _worst(counts)
    valid = mult <= params.lam
    diagnostics = (
        ("block-sizes", True, None),
        ("t-multiplicity", valid, {"t_set": worst, "multiplicity": mult, "limit": params.lam}),
    )
    return ValidationReport(valid, worst, mult, diagnostics)


def structural_diagnostics(
    design: PackingDesign, params: DesignParams
) -> tuple[tuple[str, bool, object], ...]:
    """Counting checks that every valid uniform design must satisfy.

    Three consequences of validity are evaluated: a cap on each point's
    frequency, a convexity bound on the frequency distribution, and a cap on
    the frequency sum of any t points.  A failure here on a validated design
    signals a bug upstream, not mere invalidity.
    """
    _check_sizes(design, params, uniform=True)
    v, k, t, lam = params.v, params.k, params.t, params.lam
    profile = frequency_profile(design)
    n = profile.n

    r_cap = lam * choose(v - 1, t - 1) // choose(k - 1, t - 1)
    worst_x = min(range(v), key=lambda x: (-profile.r[x], x))
    freq_ok = profile.r[worst_x] <= r_cap

    spread_lhs = sum(choose(i, lam + 1) * cnt for i, cnt in profile.N.items())
    spread_rhs = (t - 1) * choose(n, lam + 1)

    by_freq = sorted(range(v), key=lambda x: (-profile.r[x], x))[:t]
    freq_sum = sum(profile.r[x] for x in by_freq)
    sum_cap = (t - 1) * n + lam

    return (
        ("frequency-cap", freq_ok, {"point": worst_x, "frequency": profile.r[worst_x], "cap": r_cap}),
        ("frequency-spread", spread_lhs <= spread_rhs, {"lhs": spread_lhs, "rhs": spread_rhs}),
        ("frequency-sum", freq_sum <= sum_cap, {"points": tuple(by_freq), "sum": freq_sum, "cap": sum_cap}),
    )


def underlying_design(directed: DirectedPackingDesign) -> PackingDesign:
    """Forget block order: each ordered block becomes its point set.

    A valid directed design at (t, lam) yields a valid unordered packing at
    multiplicity t! * lam, since each t-subset has t! orderings.
    """
    return PackingDesign(directed.v, directed.blocks)
