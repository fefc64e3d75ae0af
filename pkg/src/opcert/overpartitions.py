"""Exact overpartition counts and the scaled root sequence.

The table is built from the sparse recurrence

    pbar(n) = 2 * sum_{j>=1} (-1)^(j+1) * pbar(n - j^2),   pbar(0) = 1,

which follows from 1/phi(-q) with phi(-q) = 1 + 2*sum_j (-1)^j q^(j^2).
``bruteforce_count`` is a genuinely different algorithm (product-form DP over
part sizes, each contributing 1 + 2q^k + 2q^(2k) + ...) used as the oracle.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .intervals import (
    MIN_BITS,
    CertInterval,
    DomainError,
    iexp,
    ilog,
)

__all__ = [
    "ResourceError",
    "OverpartitionTable",
    "ScaledRoot",
    "build_table",
    "bruteforce_count",
    "r_alpha_value",
    "log_r_alpha",
]

MAX_TABLE_N = 2_000_000  # memory cap: ~Theta(max_n^(3/2)) work, desk scale only
BRUTEFORCE_CAP = 200


class ResourceError(RuntimeError):
    """Requested table size exceeds the configured cap."""


@dataclass
class OverpartitionTable:
    """Dense exact values pbar(0..max_n) plus a per-precision log cache."""

    values: list[int]
    _log_cache: dict[int, list[CertInterval | None]] = field(default_factory=dict, repr=False)

    @property
    def max_n(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def log_pbar(self, n: int, bits: int = MIN_BITS) -> CertInterval:
        """Enclosure of log pbar(n), cached per precision."""
        cache = self._log_cache.setdefault(bits, [None] * (self.max_n + 1))
        if n > self.max_n:
            raise IndexError(f"table covers 0..{self.max_n}, asked for {n}")
        got = cache[n]
        if got is None:
            got = ilog(CertInterval.from_exact(self.values[n], bits))
            cache[n] = got
        return got

    # -- disk cache: "n<TAB>decimal" per line, strictly increasing from 0 ----

    def save(self, path: str | os.PathLike) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            for n, v in enumerate(self.values):
                fh.write(f"{n}\t{v}\n")

    @staticmethod
    def load(path: str | os.PathLike) -> "OverpartitionTable":
        values: list[int] = []
        with open(path, "r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                n_str, v_str = line.split("\t")
                if int(n_str) != len(values):
                    raise ValueError(f"cache file corrupt near n={n_str}")
                values.append(int(v_str))
        if not values or values[0] != 1:
            raise ValueError("cache file does not start with pbar(0)=1")
        return OverpartitionTable(values)


def build_table(max_n: int) -> OverpartitionTable:
    if max_n < 0:
        raise DomainError("max_n must be >= 0")
    if max_n > MAX_TABLE_N:
        raise ResourceError(f"max_n={max_n} exceeds cap {MAX_TABLE_N}")
    values = [0] * (max_n + 1)
    values[0] = 1
    for n in range(1, max_n + 1):
        acc = 0
        j = 1
        sq = 1
        while sq <= n:
            if j & 1:
                acc += values[n - sq]
            else:
                acc -= values[n - sq]
            j += 1
            sq = j * j
        values[n] = 2 * acc
    return OverpartitionTable(values)


def bruteforce_count(n: int) -> int:
    """Count overpartitions of n by DP over part sizes, no recurrence.

    Part size k contributes the factor 1 + 2q^k + 2q^(2k) + ... (the 2 picks
    whether the first occurrence of k is overlined).
    """
    if n < 0:
        raise DomainError("n must be >= 0")
    if n > BRUTEFORCE_CAP:
        raise ResourceError(f"bruteforce oracle capped at n={BRUTEFORCE_CAP}")
    dp = [0] * (n + 1)
    dp[0] = 1
    for k in range(1, n + 1):
        new = list(dp)
        for total in range(k, n + 1):
            # m copies of part k, m >= 1, first one overlined or not
            m_sum = 0
            for used in range(k, total + 1, k):
                m_sum += dp[total - used]
            new[total] += 2 * m_sum
        dp = new
    return dp[n]


@dataclass(frozen=True)
class ScaledRoot:
    n: int
    alpha: Fraction
    value: CertInterval


def log_r_alpha(table: OverpartitionTable, n: int, alpha: Fraction,
                bits: int = MIN_BITS) -> CertInterval:
    """Enclosure of log r_alpha(n) = (log pbar(n) - alpha*log n)/n."""
    if n < 1:
        raise DomainError("log_r_alpha needs n >= 1")
    num = table.log_pbar(n, bits)
    if alpha:
        num = num - CertInterval.from_exact(alpha, bits) * ilog(CertInterval.from_exact(n, bits))
    return num / n


def r_alpha_value(table: OverpartitionTable, n: int, alpha: Fraction,
                  bits: int = MIN_BITS) -> ScaledRoot:
    """Enclosure of r_alpha(n) = (pbar(n)/n^alpha)^(1/n)."""
    val = iexp(log_r_alpha(table, n, alpha, bits))
    return ScaledRoot(n=n, alpha=Fraction(alpha), value=val)
