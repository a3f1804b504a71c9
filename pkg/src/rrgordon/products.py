"""The product-side series family.

The base entries (index 1..r) are infinite products 1/prod(1 - q^m) over the
part values m allowed mod 2r+1; entries beyond r are defined level by level,
where climbing one level subtracts two entries of the previous level and
divides exactly by a power of q. Because that division destroys low-order
information, every level is computed at a padded order chosen upfront so the
requested entry is exact to the requested order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .partitions import allowed_residues
from .qseries import TruncatedSeries


@dataclass(frozen=True)
class ProductIndex:
    """Index into the product-side family, canonically decomposed.

    index = (r-1)*level + slot, with level = 0 and slot = index for the base
    range 1..r, and slot in 2..r for every higher level. The overlap
    (index at slot 1 equals the previous level's slot r) is resolved here,
    so evaluation never sees a slot-1 recursion step.
    """

    r: int
    index: int

    def __post_init__(self):
        if self.r < 2:
            raise ValueError(f"r must be at least 2, got {self.r}")
        if self.index < 1:
            raise ValueError(f"index must be positive, got {self.index}")

    @property
    def level(self) -> int:
        if self.index <= self.r:
            return 0
        return (self.index - 2) // (self.r - 1)

    @property
    def slot(self) -> int:
        return self.index - (self.r - 1) * self.level


def base_product(r: int, ell: int, N: int) -> TruncatedSeries:
    """Base entry ell in 1..r: product of 1/(1-q^m) over allowed m up to N.

    A part value m is allowed unless m is congruent to 0 or +-(r-ell+1)
    mod 2r+1. Each geometric factor is folded in as an O(N) running sum
    (c[n] += c[n-m]), which is exactly multiplication by 1/(1-q^m).
    """
    if not 1 <= ell <= r:
        raise ValueError(f"ell must lie in 1..{r}, got {ell}")
    allowed = allowed_residues(r, r - ell + 1)
    mod = 2 * r + 1
    c = [0] * (N + 1)
    c[0] = 1
    for m in range(1, N + 1):
        if m % mod not in allowed:
            continue
        for n in range(m, N + 1):
            c[n] += c[n - m]
    return TruncatedSeries.from_coeffs(c)


def _padded_orders(r: int, top_level: int, N: int) -> list[int]:
    """Order each level must be computed at so the top level is exact to N."""
    orders = [N] * (top_level + 1)
    for g in range(top_level, 0, -1):
        orders[g - 1] = orders[g] + g * (r - 1)
    return orders


def _climb(r: int, top_level: int, N: int):
    """Yield (level, entries) for levels 0..top_level.

    Each ``entries`` list holds the r series of that level, at that level's
    padded order (always >= N). Raises NonDivisibleError if a division is
    ever inexact, which would mean the construction itself is broken.
    """
    orders = _padded_orders(r, top_level, N)
    entries = [base_product(r, ell, orders[0]) for ell in range(1, r + 1)]
    yield 0, entries
    for g in range(1, top_level + 1):
        target = orders[g]
        new = [entries[r - 1].truncate(target)]
        for s in range(2, r + 1):
            numerator = entries[r - s] - entries[r - s + 1]
            new.append(numerator.shift_div(g * (s - 1)).truncate(target))
        entries = new
        yield g, entries


@lru_cache(maxsize=None)
def _family_at_level(r: int, level: int, N: int) -> tuple[TruncatedSeries, ...]:
    for g, entries in _climb(r, level, N):
        if g == level:
            return tuple(entries)
    raise AssertionError("unreachable")


def product_series(idx: ProductIndex, N: int) -> TruncatedSeries:
    """The product-side series for the given index, exact to order N."""
    if N < 0:
        raise ValueError("order must be non-negative")
    return _family_at_level(idx.r, idx.level, N)[idx.slot - 1]


def tail_valuation_profile(r: int, d_max: int, N: int) -> list[int | float]:
    """Valuations of (entry at index (r-1)(d+1)+1) - 1 for d = 1..d_max.

    Exhibits the q-adic convergence of the deep family tail to 1: entries
    are truncated to order N, so a valuation of INFINITE means the series
    is indistinguishable from 1 at that order. The profile is non-decreasing.
    """
    if d_max < 1:
        raise ValueError("d_max must be at least 1")
    one = TruncatedSeries.one(N)
    profile = []
    for g, entries in _climb(r, d_max, N):
        if g == 0:
            continue
        # index (r-1)(g+1)+1 normalizes to level g, slot r
        tail = entries[r - 1].truncate(N)
        profile.append((tail - one).valuation())
    return profile
