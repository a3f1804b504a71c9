"""Partition counting under Gordon difference conditions, plus the modular side.

Two independent routes to the same counts are kept side by side on purpose:
``enumerate_gordon`` lists partitions and checks the difference conditions
literally (the permanent correctness oracle, exponential in n), while
``count_gordon`` runs a polynomial dynamic program over part multiplicities.
The DP rests on the equivalence: a partition whose parts all exceed J
satisfies "parts r-1 apart differ by at least 2" exactly when every two
adjacent part values a, a+1 together occur at most r-1 times.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .qseries import TruncatedSeries


@dataclass(frozen=True)
class GordonParams:
    """Parameter triple (r, i, J) of the shifted Gordon conditions.

    r >= 2 is the modulus parameter (classes mod 2r+1 on the product side),
    1 <= i <= r bounds how many parts may equal J+1, and J >= 0 is the
    shift: all parts must exceed J.
    """

    r: int
    i: int
    J: int

    def __post_init__(self):
        if self.r < 2:
            raise ValueError(f"r must be at least 2, got {self.r}")
        if not 1 <= self.i <= self.r:
            raise ValueError(f"i must lie in 1..{self.r}, got {self.i}")
        if self.J < 0:
            raise ValueError(f"J must be non-negative, got {self.J}")

    @property
    def ell(self) -> int:
        """Complementary index r - i + 1; selects the excluded residues +-ell."""
        return self.r - self.i + 1

    @property
    def product_index(self) -> int:
        """Index (r-1)*J + ell of the matching product-side series."""
        return (self.r - 1) * self.J + self.ell


@dataclass(frozen=True)
class Partition:
    """A non-increasing sequence of positive integer parts."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p < 1 for p in self.parts):
            raise ValueError("parts must be positive")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("parts must be non-increasing")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def as_json_list(self) -> list[int]:
        return list(self.parts)


def iter_partitions(n: int, min_part: int = 1) -> Iterator[tuple[int, ...]]:
    """All partitions of n with parts >= min_part, as non-increasing tuples."""
    if n == 0:
        yield ()
        return

    def rec(remaining: int, max_part: int, prefix: list[int]):
        if remaining == 0:
            yield tuple(prefix)
            return
        for first in range(min(remaining, max_part), min_part - 1, -1):
            prefix.append(first)
            yield from rec(remaining - first, first, prefix)
            prefix.pop()

    yield from rec(n, n, [])


def satisfies_gordon(p: Partition, params: GordonParams) -> bool:
    """Check the three Gordon conditions directly on the part list.

    1. parts r-1 positions apart differ by at least 2,
    2. every part exceeds J,
    3. at most i-1 parts equal J+1.
    """
    parts = p.parts
    r, i, J = params.r, params.i, params.J
    span = r - 1
    for m in range(len(parts) - span):
        if parts[m] - parts[m + span] < 2:
            return False
    if parts and parts[-1] <= J:
        return False
    if sum(1 for x in parts if x == J + 1) > i - 1:
        return False
    return True


def enumerate_gordon(params: GordonParams, n: int) -> list[Partition]:
    """Brute-force oracle: all partitions of n passing the Gordon conditions.

    Output is sorted lexicographically decreasing, for reproducible goldens.
    Intended for n up to roughly 30; the partition count grows too fast
    beyond that for routine use.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    found = [
        Partition(parts)
        for parts in iter_partitions(n, min_part=params.J + 1)
        if satisfies_gordon(Partition(parts), params)
    ]
    found.sort(key=lambda p: p.parts, reverse=True)
    return found


def _gordon_counts(params: GordonParams, N: int) -> list[int]:
    """Counts for weights 0..N via the multiplicity DP.

    Part values a = J+1, J+2, ... are scanned in ascending order; the state
    is (multiplicity chosen for the previous value, weight so far). The
    multiplicity of value a is capped by r-1 minus the previous multiplicity,
    and additionally by i-1 at the first value J+1.
    """
    r, i, J = params.r, params.i, params.J
    # dp[prev_mult][w]
    dp = [[0] * (N + 1) for _ in range(r)]
    dp[0][0] = 1
    for a in range(J + 1, N + 1):
        new = [[0] * (N + 1) for _ in range(r)]
        first = a == J + 1
        for pf in range(r):
            row = dp[pf]
            bound = (i - 1) if first else (r - 1 - pf)
            for w in range(N + 1):
                ways = row[w]
                if not ways:
                    continue
                fmax = min(bound, (N - w) // a)
                for f in range(fmax + 1):
                    new[f][w + a * f] += ways
        dp = new
    return [sum(dp[pf][n] for pf in range(len(dp))) for n in range(N + 1)]


def count_gordon(params: GordonParams, n: int) -> int:
    """Number of partitions of n satisfying the Gordon conditions."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return _gordon_counts(params, n)[n]


def gordon_series(params: GordonParams, N: int) -> TruncatedSeries:
    """Generating function of the Gordon-condition counts, to order N."""
    return TruncatedSeries.from_coeffs(_gordon_counts(params, N))


def allowed_residues(r: int, i: int) -> set[int]:
    """Residues mod 2r+1 a part may take: everything but 0 and +-i."""
    mod = 2 * r + 1
    banned = {0, i % mod, (mod - i) % mod}
    return {c for c in range(mod) if c not in banned}


def count_modular(r: int, i: int, n: int) -> int:
    """Partitions of n into parts not congruent to 0 or +-i mod 2r+1."""
    if r < 2:
        raise ValueError(f"r must be at least 2, got {r}")
    if not 1 <= i <= r:
        raise ValueError(f"i must lie in 1..{r}, got {i}")
    if n < 0:
        raise ValueError("n must be non-negative")
    allowed = allowed_residues(r, i)
    dp = [0] * (n + 1)
    dp[0] = 1
    for v in range(1, n + 1):
        if v % (2 * r + 1) not in allowed:
            continue
        for w in range(v, n + 1):
            dp[w] += dp[w - v]
    return dp[n]
