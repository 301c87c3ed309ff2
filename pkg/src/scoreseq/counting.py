"""Exact counting of score sequences, strong sequences and EGZ multisets.

Three independent routes to |S_n| are provided:

* a quadratic-time recursion n*|S_n| = sum_k |S_{n-k}|*|EGZ_k| driven by
  the divisor-sum formula
  |EGZ_n| = (1/2n) * sum_{d|n} (-1)^(n-d) * phi(n/d) * C(2d, d);
* a closed form summing over integer partitions in multiplicity encoding;
* a closed form averaging cycle-type products over all permutations,
  kept as a deliberately literal (and therefore slow) cross-check.

All counts use Python's arbitrary-precision integers; every division the
formulas perform is checked for exactness and a remainder aborts with
InternalInvariantError.  Completed tables are plain data and safe to
share across threads.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from math import comb, factorial
from typing import Iterator, Sequence

from .egz import DEFAULT_ENUMERATION_CAP, egz_zero_poly
from .errors import CacheError, InternalInvariantError
from .polynomial import IntPolynomial

__all__ = [
    "CountTable",
    "DEFAULT_PERMUTATION_CAP",
    "TABLE_CSV_HEADER",
    "TABLE_FORMAT_TAG",
    "catalan",
    "closed_formula_partitions",
    "closed_formula_permutations",
    "egz_count",
    "pointed_poly",
    "score_counts",
    "strong_counts",
    "svpt_count",
    "table_from_csv",
    "table_from_json",
    "table_to_csv",
    "table_to_json",
    "totient_sieve",
]

# Literal iteration over n! permutations stops being viable shortly after 8.
DEFAULT_PERMUTATION_CAP = 8

TABLE_FORMAT_TAG = "# count-table-v1"
TABLE_CSV_HEADER = "n,S,T,EGZ"


def totient_sieve(n: int) -> list[int]:
    """Euler's totient for 1..n by sieving; phi(k) is at index k-1."""
    if n < 1:
        raise ValueError("n must be positive")
    phi = list(range(n + 1))
    for p in range(2, n + 1):
        if phi[p] == p:  # p is prime
            for m in range(p, n + 1, p):
                phi[m] -= phi[m] // p
    return phi[1:]


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _egz_count(n: int, phi: Sequence[int]) -> int:
    """Divisor-sum count of size-n EGZ multisets; phi holds phi(1..>=n)."""
    acc = 0
    for d in _divisors(n):
        term = phi[n // d - 1] * comb(2 * d, d)
        acc += -term if (n - d) % 2 else term
    q, r = divmod(acc, 2 * n)
    if r:
        raise InternalInvariantError(
            f"EGZ divisor sum for n={n} not divisible by {2 * n}"
        )
    return q


def egz_count(n: int) -> int:
    """Number of size-n EGZ multisets, via the divisor-sum formula."""
    if n < 1:
        raise ValueError("n must be positive")
    return _egz_count(n, totient_sieve(n))


class CountTable:
    """Arrays of |S_k|, |T_k| and |EGZ_k| for k up to max_n.

    Construction is incremental: extend() grows the table without
    recomputing the prefix, so a cached table can be resumed.  The
    instrumentation counters record big-integer multiply-add steps of the
    two convolution recursions separately, and the peak size reached by a
    convolution accumulator.
    """

    def __init__(self):
        self.s_counts: list[int] = [1]
        self.t_counts: list[int] = [0]
        self.egz_counts: list[int] = [0]
        self.s_mul_adds = 0
        self.t_mul_adds = 0
        self._peak = 0
        self._t_filled = 0

    @property
    def max_n(self) -> int:
        return len(self.s_counts) - 1

    @property
    def peak_digits(self) -> int:
        """Decimal digits of the largest convolution accumulator seen."""
        return len(str(self._peak)) if self._peak else 0

    def extend(self, new_max: int) -> "CountTable":
        """Fill egz_counts and s_counts up to ``new_max``; returns self."""
        if new_max < 0:
            raise ValueError("table size must be nonnegative")
        if new_max <= self.max_n:
            return self
        phi = totient_sieve(new_max)
        for k in range(len(self.egz_counts), new_max + 1):
            self.egz_counts.append(_egz_count(k, phi))
        for m in range(len(self.s_counts), new_max + 1):
            total = 0
            for k in range(1, m + 1):
                total += self.s_counts[m - k] * self.egz_counts[k]
                self.s_mul_adds += 1
            q, r = divmod(total, m)
            if r:
                raise InternalInvariantError(
                    f"convolution sum at n={m} not divisible by {m}"
                )
            if total > self._peak:
                self._peak = total
            self.s_counts.append(q)
        return self

    def fill_strong(self) -> "CountTable":
        """Fill t_counts up to max_n via |T_n| = |S_n| - sum |T_i||S_{n-i}|."""
        for m in range(self._t_filled + 1, self.max_n + 1):
            acc = self.s_counts[m]
            for i in range(1, m):
                acc -= self.t_counts[i] * self.s_counts[m - i]
                self.t_mul_adds += 1
            self.t_counts.append(acc)
        self._t_filled = self.max_n
        return self


def score_counts(n: int) -> CountTable:
    """Dynamic-programming table of |S_0|..|S_n| (and |EGZ_1|..|EGZ_n|).

    Runs in O(n^2) multiply-adds, counting integer operations as unit
    cost; the instrumented count is available as ``s_mul_adds``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return CountTable().extend(n)


def strong_counts(table: CountTable) -> CountTable:
    """Fill the strong-sequence column of ``table`` in place."""
    return table.fill_strong()


def _partition_multiplicities(n: int) -> Iterator[list[tuple[int, int]]]:
    """Partitions of n as (part, multiplicity) lists, parts descending."""
    chosen: list[tuple[int, int]] = []

    def rec(remaining: int, max_part: int) -> Iterator[list[tuple[int, int]]]:
        if remaining == 0:
            yield list(chosen)
            return
        for part in range(min(max_part, remaining), 0, -1):
            for mult in range(remaining // part, 0, -1):
                chosen.append((part, mult))
                yield from rec(remaining - part * mult, part - 1)
                chosen.pop()

    yield from rec(n, n)


def closed_formula_partitions(n: int, egz: Sequence[int]) -> int:
    """|S_n| as a sum over partitions of n in multiplicity encoding.

    Each partition 1*m_1 + ... + n*m_n = n contributes
    prod |EGZ_i|^m_i / prod (i^m_i * m_i!).  The sum is accumulated in
    exact rationals and must come out integral.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if len(egz) < n + 1:
        raise ValueError(f"need EGZ counts for sizes 1..{n}")
    total = Fraction(0)
    for parts in _partition_multiplicities(n):
        num = 1
        den = 1
        for part, mult in parts:
            num *= egz[part] ** mult
            den *= part**mult * factorial(mult)
        total += Fraction(num, den)
    if total.denominator != 1:
        raise InternalInvariantError(
            f"partition sum for n={n} is not an integer: {total}"
        )
    return total.numerator


def closed_formula_permutations(
    n: int, egz: Sequence[int], cap: int = DEFAULT_PERMUTATION_CAP
) -> int:
    """|S_n| by averaging cycle-type products over all n! permutations.

    Deliberately iterates the symmetric group literally so it stays an
    independent witness for the partition form; capped accordingly.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > cap:
        raise ValueError(f"n={n} exceeds the permutation cap {cap}")
    if len(egz) < n + 1:
        raise ValueError(f"need EGZ counts for sizes 1..{n}")
    total = 0
    for perm in itertools.permutations(range(n)):
        seen = [False] * n
        prod = 1
        for start in range(n):
            if seen[start]:
                continue
            length = 0
            x = start
            while not seen[x]:
                seen[x] = True
                x = perm[x]
                length += 1
            prod *= egz[length]
        total += prod
    q, r = divmod(total, factorial(n))
    if r:
        raise InternalInvariantError(
            f"permutation sum for n={n} not divisible by {n}!"
        )
    return q


def pointed_poly(
    n: int, table: CountTable, cap: int = DEFAULT_ENUMERATION_CAP
) -> IntPolynomial:
    """Distribution of the fiber statistic over all pointed sequences.

    Computed as sum_k zero-distribution(EGZ_k) * |S_{n-k}|; evaluating at
    t=1 gives n*|S_n|.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if table.max_n < n - 1:
        raise ValueError(f"count table only reaches n={table.max_n}")
    acc = IntPolynomial()
    for k in range(1, n + 1):
        acc = acc + egz_zero_poly(k, cap) * table.s_counts[n - k]
    return acc


def catalan(n: int) -> int:
    """The n-th Catalan number C(2n, n) / (n + 1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    q, r = divmod(comb(2 * n, n), n + 1)
    if r:
        raise InternalInvariantError(f"C(2n,n) not divisible by n+1 at n={n}")
    return q


def svpt_count(n: int, table: CountTable) -> int:
    """Number of pointed sequences whose point occurs as a value.

    Equals sum_k catalan(k-1) * |S_{n-k}|.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if table.max_n < n - 1:
        raise ValueError(f"count table only reaches n={table.max_n}")
    return sum(catalan(k - 1) * table.s_counts[n - k] for k in range(1, n + 1))


def table_to_csv(table: CountTable) -> str:
    """Serialize a table as versioned CSV with header n,S,T,EGZ."""
    table.fill_strong()
    lines = [TABLE_FORMAT_TAG, TABLE_CSV_HEADER]
    for k in range(table.max_n + 1):
        lines.append(
            f"{k},{table.s_counts[k]},{table.t_counts[k]},{table.egz_counts[k]}"
        )
    return "\n".join(lines) + "\n"


def table_from_csv(text: str) -> CountTable:
    """Parse the CSV table format; raises CacheError with the bad line."""
    lines = text.splitlines()
    if not lines or lines[0].strip() != TABLE_FORMAT_TAG:
        raise CacheError(1, f"missing format tag {TABLE_FORMAT_TAG!r}")
    if len(lines) < 2 or lines[1].strip() != TABLE_CSV_HEADER:
        raise CacheError(2, f"expected header {TABLE_CSV_HEADER!r}")
    s: list[int] = []
    t: list[int] = []
    egz: list[int] = []
    for lineno, line in enumerate(lines[2:], start=3):
        if not line.strip():
            continue
        fields = line.split(",")
        if len(fields) != 4:
            raise CacheError(lineno, "expected 4 comma-separated fields")
        try:
            k, sv, tv, ev = (int(f) for f in fields)
        except ValueError:
            raise CacheError(lineno, "non-integer field") from None
        if k != len(s):
            raise CacheError(lineno, f"expected row n={len(s)}, got n={k}")
        if sv < 0 or tv < 0 or ev < 0:
            raise CacheError(lineno, "negative count")
        s.append(sv)
        t.append(tv)
        egz.append(ev)
    if not s:
        raise CacheError(3, "no data rows")
    return _table_from_arrays(s, t, egz)


def table_to_json(table: CountTable) -> str:
    """Serialize a table as JSON (exact integers, no string coding needed)."""
    table.fill_strong()
    return json.dumps(
        {
            "format": TABLE_FORMAT_TAG.lstrip("# "),
            "max_n": table.max_n,
            "s": table.s_counts,
            "t": table.t_counts,
            "egz": table.egz_counts,
        }
    )


def table_from_json(text: str) -> CountTable:
    """Parse the JSON table format; raises CacheError on any defect."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CacheError(exc.lineno, f"invalid JSON: {exc.msg}") from None
    if not isinstance(data, dict) or data.get("format") != TABLE_FORMAT_TAG.lstrip("# "):
        raise CacheError(1, "missing or wrong format tag")
    try:
        s = [int(x) for x in data["s"]]
        t = [int(x) for x in data["t"]]
        egz = [int(x) for x in data["egz"]]
        max_n = int(data["max_n"])
    except (KeyError, TypeError, ValueError):
        raise CacheError(1, "malformed table fields") from None
    if not s or len(s) != max_n + 1 or len(t) != len(s) or len(egz) != len(s):
        raise CacheError(1, "table arrays disagree with max_n")
    if min(itertools.chain(s, t, egz)) < 0:
        raise CacheError(1, "negative count")
    return _table_from_arrays(s, t, egz)


def _table_from_arrays(s: list[int], t: list[int], egz: list[int]) -> CountTable:
    table = CountTable()
    table.s_counts = s
    table.t_counts = t
    table.egz_counts = egz
    table._t_filled = table.max_n
    return table
