"""Hilbert-Poincare series of graded quotients by the gap monomial ideals.

The ambient ring has one variable per integer index k, k+1, ..., graded by
weight (index times exponent, summed). The ideal is generated by the
products x_a^(r-t) * x_(a+1)^t, optionally preceded by a capped block in the
lowest variable. All generators are monomials, so each graded dimension is a
count of standard monomials: monomials divisible by no generator.

Two routes compute those counts: ``standard_monomial_count`` enumerates
monomials and tests divisibility literally (the oracle), while ``hp_series``
counts multiplicity vectors with bounded adjacent sums, which is the same
set by the divisor-avoidance characterization (f_a + f_(a+1) <= r-1 for all
a >= k, and f_k <= cap-1 when capped).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .partitions import GordonParams, iter_partitions
from .qseries import TruncatedSeries, series_sum

# a generator is a tuple of (variable_index, exponent) pairs, sorted by index
Generator = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class QuotientSpec:
    """Graded quotient S_k / ideal, for the gap ideal with optional cap.

    Without ``cap`` the generators run over all variables from index k.
    With ``cap`` = ell, the lowest variable gets the shorter leading block
    x_k^ell, x_k^(ell-1) x_(k+1)^(r-ell+1), ..., x_k x_(k+1)^(r-1) and the
    unrestricted generators start one variable higher.
    """

    r: int
    k: int
    cap: int | None = None

    def __post_init__(self):
        if self.r < 2:
            raise ValueError(f"r must be at least 2, got {self.r}")
        if self.k < 1:
            raise ValueError(f"k must be at least 1, got {self.k}")
        if self.cap is not None and not 1 <= self.cap <= self.r:
            raise ValueError(f"cap must lie in 1..{self.r}, got {self.cap}")


@dataclass(frozen=True)
class MonomialIdealSpec:
    """Generators of weight <= weight_bound, in variables >= first_var."""

    generators: tuple[Generator, ...]
    first_var: int
    weight_bound: int

    def as_json_list(self) -> list[list[list[int]]]:
        return [[[v, e] for v, e in gen] for gen in self.generators]


def gordon_quotient(params: GordonParams) -> QuotientSpec:
    """The quotient whose graded dimensions are the Gordon-condition counts."""
    return QuotientSpec(r=params.r, k=params.J + 1, cap=params.i)


def _generator_weight(gen: Generator) -> int:
    return sum(v * e for v, e in gen)


def expand_generators(spec: QuotientSpec, N: int) -> MonomialIdealSpec:
    """All ideal generators of weight at most N, canonically ordered."""
    if N < 0:
        raise ValueError("weight bound must be non-negative")
    r, k = spec.r, spec.k
    gens: list[Generator] = []
    if spec.cap is not None:
        ell = spec.cap
        if k * ell <= N:
            gens.append(((k, ell),))
        for s in range(1, ell):
            gen = ((k, ell - s), (k + 1, r - ell + s))
            if _generator_weight(gen) <= N:
                gens.append(gen)
        tail_start = k + 1
    else:
        tail_start = k
    a = tail_start
    while a * r <= N:
        for t in range(r):
            if a * r + t > N:
                break
            gens.append(((a, r),) if t == 0 else ((a, r - t), (a + 1, t)))
        a += 1
    gens.sort()
    return MonomialIdealSpec(tuple(gens), first_var=k, weight_bound=N)


def standard_monomial_count(ideal: MonomialIdealSpec, n: int) -> int:
    """Oracle: weight-n monomials on x_k, x_(k+1), ... divisible by no generator.

    Monomials of weight n correspond to partitions of n into parts >= k
    (part value = variable index, multiplicity = exponent); enumeration is
    exhaustive and meant for small n.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > ideal.weight_bound:
        raise ValueError("n exceeds the weight bound the ideal was expanded to")
    relevant = [g for g in ideal.generators if _generator_weight(g) <= n]
    count = 0
    for parts in iter_partitions(n, min_part=ideal.first_var):
        freq = Counter(parts)
        if not any(all(freq[v] >= e for v, e in g) for g in relevant):
            count += 1
    return count


@lru_cache(maxsize=None)
def _hp_counts(r: int, k: int, cap: int | None, N: int) -> tuple[int, ...]:
    """Graded dimensions 0..N by DP over multiplicity vectors.

    Variables are scanned from index N down to k; the state is the
    multiplicity at the previously scanned (higher) variable. Adjacent
    multiplicities must sum to at most r-1, and the lowest variable is
    additionally capped when the spec is capped.
    """
    dp = [[0] * (N + 1) for _ in range(r)]
    dp[0][0] = 1
    for a in range(N, k - 1, -1):
        new = [[0] * (N + 1) for _ in range(r)]
        at_floor = a == k and cap is not None
        for above in range(r):
            row = dp[above]
            bound = r - 1 - above
            if at_floor:
                bound = min(bound, cap - 1)
            for w in range(N + 1):
                ways = row[w]
                if not ways:
                    continue
                fmax = min(bound, (N - w) // a)
                for f in range(fmax + 1):
                    new[f][w + a * f] += ways
        dp = new
    return tuple(sum(dp[f][n] for f in range(r)) for n in range(N + 1))


def hp_series(spec: QuotientSpec, N: int) -> TruncatedSeries:
    """Hilbert-Poincare series of the quotient, to order N."""
    if N < 0:
        raise ValueError("order must be non-negative")
    return TruncatedSeries(_hp_counts(spec.r, spec.k, spec.cap, N))


def verify_hp_identities(r: int, k: int, N: int) -> bool:
    """The three structural identities tying capped and uncapped quotients.

    cap 1 at k equals uncapped at k+1; cap r at k equals uncapped at k;
    and for every i, the capped expansion at k equals the leading block
    joined with the uncapped expansion at k+1.
    """
    if not hp_series(QuotientSpec(r, k, cap=1), N).eq(
        hp_series(QuotientSpec(r, k + 1), N)
    ):
        return False
    if not hp_series(QuotientSpec(r, k, cap=r), N).eq(hp_series(QuotientSpec(r, k), N)):
        return False
    for i in range(1, r + 1):
        capped = set(expand_generators(QuotientSpec(r, k, cap=i), N).generators)
        block: set[Generator] = set()
        if k * i <= N:
            block.add(((k, i),))
        for s in range(1, i):
            gen = ((k, i - s), (k + 1, r - i + s))
            if _generator_weight(gen) <= N:
                block.add(gen)
        tail = set(expand_generators(QuotientSpec(r, k + 1), N).generators)
        if capped != block | tail:
            return False
    return True


def verify_hp_recursion(r: int, k: int, ell: int, N: int) -> bool:
    """Peel the lowest variable: capped series at k as a q-power combination
    of capped series at k+1."""
    if not 1 <= ell <= r:
        raise ValueError(f"ell must lie in 1..{r}, got {ell}")
    lhs = hp_series(QuotientSpec(r, k, cap=ell), N)
    rhs = series_sum(
        [
            hp_series(QuotientSpec(r, k + 1, cap=r - j + 1), N).mul_qpow(k * (j - 1))
            for j in range(1, ell + 1)
        ],
        N,
    )
    return lhs.eq(rhs)
