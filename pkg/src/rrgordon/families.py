"""Stage-indexed coefficient families whose first entries converge q-adically.

Each family is a vector of r series evolving by one shared step rule: the
new entry j is q^((d+1)(j-1)) times the sum of the previous entries
1..r-j+1. The two sides differ only in how the initial nonzero prefix is
derived from the parameters; that the prefixes coincide is exactly why the
two families (and hence the product side and the Hilbert side) agree.

Entry j at stage d has q-adic valuation at least d*(j-1), so for j >= 2 the
entries vanish to any fixed order once d is large, and entry 1 stabilizes.
``family_limit`` realizes the q-adic limit as truncated stabilization.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .hilbert import QuotientSpec, gordon_quotient, hp_series
from .partitions import GordonParams
from .products import ProductIndex, product_series
from .qseries import TruncatedSeries, series_sum


class Side(enum.Enum):
    """Which side of the identity a family expands."""

    PRODUCT = "product"
    HILBERT = "hilbert"


@dataclass(frozen=True)
class CoefficientFamily:
    side: Side
    params: GordonParams
    stage: int
    entries: tuple[TruncatedSeries, ...]

    @property
    def order(self) -> int:
        return self.entries[0].order

    def as_json_dict(self) -> dict:
        return {
            "flavor": self.side.value,
            "r": self.params.r,
            "i": self.params.i,
            "J": self.params.J,
            "stage": self.stage,
            "entries": [e.as_json_dict() for e in self.entries],
        }


def family_init(side: Side, params: GordonParams, N: int) -> CoefficientFamily:
    """Stage J+1 family: entry j is q^((J+1)(j-1)) up to the side's prefix
    length, zero beyond it."""
    r, J = params.r, params.J
    prefix = r - params.ell + 1 if side is Side.PRODUCT else params.i
    entries = tuple(
        TruncatedSeries.monomial((J + 1) * (j - 1), N)
        if j <= prefix
        else TruncatedSeries.zero(N)
        for j in range(1, r + 1)
    )
    return CoefficientFamily(side, params, stage=J + 1, entries=entries)


def family_step(fam: CoefficientFamily) -> CoefficientFamily:
    """Advance one stage: entry j becomes q^((d+1)(j-1)) times the running
    prefix sums of the current entries."""
    r = fam.params.r
    d_new = fam.stage + 1
    new = []
    for j in range(1, r + 1):
        acc = fam.entries[0]
        for m in range(2, r - j + 2):
            acc = acc + fam.entries[m - 1]
        new.append(acc.mul_qpow(d_new * (j - 1)))
    return CoefficientFamily(fam.side, fam.params, stage=d_new, entries=tuple(new))


def family_at_stage(
    side: Side, params: GordonParams, d: int, N: int
) -> CoefficientFamily:
    if d < params.J + 1:
        raise ValueError(f"stage must be at least J+1 = {params.J + 1}, got {d}")
    fam = family_init(side, params, N)
    while fam.stage < d:
        fam = family_step(fam)
    return fam


def family_limit(side: Side, params: GordonParams, N: int) -> TruncatedSeries:
    """q-adic limit of entry 1, exact to order N.

    Steps until entry 1 stops changing and every later entry is zero to
    order N; from that point no future stage can alter entry 1 below
    q^(N+1). Stabilization is guaranteed by stage J + N + 2.
    """
    bound = params.J + N + 2
    fam = family_init(side, params, N)
    while True:
        nxt = family_step(fam)
        tail_gone = all(not any(e.coeffs) for e in nxt.entries[1:])
        if tail_gone and nxt.entries[0].eq(fam.entries[0]):
            return nxt.entries[0]
        if nxt.stage > bound:
            raise RuntimeError(
                f"entry 1 failed to stabilize by stage {bound}; "
                "the valuation ladder must be broken"
            )
        fam = nxt


def verify_family_match(params: GordonParams, d_max: int, N: int) -> bool:
    """Both sides' families agree entrywise at every stage J+1..d_max."""
    if d_max < params.J + 1:
        raise ValueError(f"d_max must be at least J+1 = {params.J + 1}")
    prod = family_init(Side.PRODUCT, params, N)
    hilb = family_init(Side.HILBERT, params, N)
    while True:
        if not all(a.eq(b) for a, b in zip(prod.entries, hilb.entries)):
            return False
        if prod.stage >= d_max:
            return True
        prod = family_step(prod)
        hilb = family_step(hilb)


def verify_expansion(params: GordonParams, d: int, N: int) -> bool:
    """Both stage-d expansion identities, to order N.

    The Hilbert series of the target quotient must equal the sum of the
    stage-d Hilbert-side entries times the capped series one floor above
    stage d, and likewise the target product series must expand over the
    stage-d product-side entries times the deeper product entries.
    """
    r = params.r
    hilb = family_at_stage(Side.HILBERT, params, d, N)
    lhs_hp = hp_series(gordon_quotient(params), N)
    rhs_hp = series_sum(
        [
            hilb.entries[j - 1] * hp_series(QuotientSpec(r, d + 1, cap=r - j + 1), N)
            for j in range(1, r + 1)
        ],
        N,
    )
    if not lhs_hp.eq(rhs_hp):
        return False

    prod = family_at_stage(Side.PRODUCT, params, d, N)
    lhs_pr = product_series(ProductIndex(r, params.product_index), N)
    rhs_pr = series_sum(
        [
            prod.entries[j - 1] * product_series(ProductIndex(r, (r - 1) * d + j), N)
            for j in range(1, r + 1)
        ],
        N,
    )
    return lhs_pr.eq(rhs_pr)
