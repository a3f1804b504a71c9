"""Truncated formal power series in q with exact integer coefficients.

A series is carried to an explicit truncation order N: exponents 0..N are
retained, everything above is unknown. Coefficients are plain Python ints,
so they never overflow and never round. All operations are pure; instances
are immutable and safe to share between threads or processes.

Mixed-order operations truncate to the smaller order: callers build
high-order intermediates and compare at the target order.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

#: q-adic valuation of the zero series. Compares above every integer.
INFINITE = math.inf


class NonDivisibleError(ArithmeticError):
    """Exact division by a power of q hit a nonzero low-order coefficient."""


@dataclass(frozen=True)
class TruncatedSeries:
    """Formal power series mod q^(order+1); ``coeffs[n]`` is the q^n coefficient."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a truncated series retains at least exponent 0")
        if not all(isinstance(c, int) for c in self.coeffs):
            raise TypeError("coefficients must be exact integers")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    # -- constructors ----------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> TruncatedSeries:
        return cls(tuple(int(c) for c in coeffs))

    @classmethod
    def zero(cls, order: int) -> TruncatedSeries:
        return cls((0,) * (order + 1))

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        """The multiplicative identity, 1, at the given order."""
        return cls((1,) + (0,) * order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff: int = 1) -> TruncatedSeries:
        """c * q^exponent, truncated to ``order`` (zero if exponent > order)."""
        c = [0] * (order + 1)
        if 0 <= exponent <= order:
            c[exponent] = coeff
        return cls(tuple(c))

    @classmethod
    def geometric_series(cls, m: int, order: int) -> TruncatedSeries:
        """Expansion of 1/(1 - q^m): coefficient 1 at every multiple of m."""
        if m < 1:
            raise ValueError("m must be a positive integer")
        c = [0] * (order + 1)
        for n in range(0, order + 1, m):
            c[n] = 1
        return cls(tuple(c))

    # -- arithmetic (result order = min of operand orders) ---------------

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        n = min(self.order, other.order)
        return TruncatedSeries(
            tuple(a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1]))
        )

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        n = min(self.order, other.order)
        return TruncatedSeries(
            tuple(a - b for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1]))
        )

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        """Cauchy product, truncated to the smaller operand order."""
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [0] * (n + 1)
        for j in range(n + 1):
            aj = a[j]
            if aj == 0:
                continue
            for k in range(n + 1 - j):
                bk = b[k]
                if bk:
                    out[j + k] += aj * bk
        return TruncatedSeries(tuple(out))

    def mul_qpow(self, s: int) -> TruncatedSeries:
        """Multiply by q^s, keeping the same truncation order."""
        if s < 0:
            raise ValueError("s must be non-negative")
        n = self.order
        return TruncatedSeries((0,) * min(s, n + 1) + self.coeffs[: max(0, n + 1 - s)])

    def shift_div(self, k: int) -> TruncatedSeries:
        """Exact division by q^k; the result has order ``order - k``.

        Raises NonDivisibleError if any coefficient below q^k is nonzero:
        on valid inputs of the recursions built on top of this, that would
        mean an identity actually failed.
        """
        if k < 0:
            raise ValueError("k must be non-negative")
        if k > self.order:
            raise ValueError("cannot shift past the truncation order")
        if any(self.coeffs[:k]):
            bad = next(n for n in range(k) if self.coeffs[n])
            raise NonDivisibleError(
                f"coefficient {self.coeffs[bad]} at exponent {bad} blocks division by q^{k}"
            )
        return TruncatedSeries(self.coeffs[k:])

    def truncate(self, order: int) -> TruncatedSeries:
        """Restrict to a smaller (or equal) order."""
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[: order + 1])

    # -- queries ----------------------------------------------------------

    def valuation(self) -> int | float:
        """Smallest exponent with a nonzero coefficient, INFINITE if none retained."""
        for n, c in enumerate(self.coeffs):
            if c:
                return n
        return INFINITE

    def eq(self, other: TruncatedSeries) -> bool:
        """Coefficientwise equality up to the smaller of the two orders."""
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    def fingerprint(self) -> str:
        """Short stable digest of the exact coefficient vector."""
        payload = f"{self.order}:" + ",".join(str(c) for c in self.coeffs)
        return hashlib.sha256(payload.encode()).hexdigest()[:16]

    # -- serialization ----------------------------------------------------

    def as_json_dict(self) -> dict:
        """JSON form: coefficients as decimal strings (they may exceed 64 bits)."""
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json_dict(cls, obj: dict) -> TruncatedSeries:
        coeffs = tuple(int(c) for c in obj["coeffs"])
        if len(coeffs) != obj["order"] + 1:
            raise ValueError("coeffs length does not match order")
        return cls(coeffs)

    def __str__(self) -> str:
        terms = []
        for n, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if n == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append(f"q^{n}" if n > 1 else "q")
            else:
                terms.append(f"{c}*q^{n}" if n > 1 else f"{c}*q")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(q^{self.order + 1})"


def first_mismatch(a: TruncatedSeries, b: TruncatedSeries) -> int | None:
    """Smallest exponent where the two series differ, None if they agree."""
    n = min(a.order, b.order)
    for t in range(n + 1):
        if a.coeffs[t] != b.coeffs[t]:
            return t
    return None


def series_sum(terms: Sequence[TruncatedSeries], order: int) -> TruncatedSeries:
    acc = TruncatedSeries.zero(order)
    for t in terms:
        acc = acc + t
    return acc
