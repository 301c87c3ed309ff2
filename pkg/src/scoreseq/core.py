"""Score sequences of tournaments.

A tournament is a complete graph with every edge directed; the score
sequence lists the out-degrees of its vertices in nondecreasing order.
Landau's classical criterion characterizes these sequences: values lie in
[0, n-1] and are nondecreasing, every length-k prefix sums to at least
k(k-1)/2, and the whole sequence sums to exactly n(n-1)/2.

This module provides validation, the strong-summand decomposition, cyclic
shifts, and the text format used by the command-line tools.  All functions
are pure and all values immutable, so everything here is safe to use from
multiple threads.  Indexing is 0-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ParseError

__all__ = [
    "LandauViolation",
    "PointedScoreSequence",
    "ScoreSequence",
    "StrongDecomposition",
    "direct_sum",
    "fiber_count",
    "format_sequence",
    "is_score_sequence",
    "is_strong",
    "landau_violation",
    "parse_sequence",
    "rotation_shifts",
    "shift",
    "strong_summands",
]


@dataclass(frozen=True)
class LandauViolation:
    """First failed Landau condition: 1 range/order, 2 prefix sum, 3 total."""

    condition: int
    k: int  # 1-based position (condition 1) or prefix length (2, 3)
    message: str


def landau_violation(values: Sequence[int]) -> LandauViolation | None:
    """Return the first violated Landau condition, or None if all hold.

    The empty sequence satisfies all three conditions.
    """
    n = len(values)
    prev = 0
    total = 0
    for k, v in enumerate(values, 1):
        if v < 0 or v > n - 1:
            return LandauViolation(
                1, k, f"value {v} at position {k} outside [0, {n - 1}]"
            )
        if v < prev:
            return LandauViolation(
                1, k, f"value {v} at position {k} below predecessor {prev}"
            )
        total += v
        if k < n:
            floor = k * (k - 1) // 2
            if total < floor:
                return LandauViolation(
                    2, k, f"prefix of length {k} sums to {total} < {floor}"
                )
        prev = v
    need = n * (n - 1) // 2
    if total != need:
        return LandauViolation(3, n, f"sum {total} != {need}")
    return None


def is_score_sequence(values: Sequence[int]) -> bool:
    """True iff ``values`` satisfies all three Landau conditions."""
    return landau_violation(values) is None


class ScoreSequence(tuple):
    """A validated score sequence; behaves like a tuple of ints.

    Raises ValueError when the input fails a Landau condition.
    """

    __slots__ = ()

    def __new__(cls, values: Iterable[int] = ()) -> "ScoreSequence":
        vals = tuple(values)
        bad = landau_violation(vals)
        if bad is not None:
            raise ValueError(f"not a score sequence: {bad.message}")
        return super().__new__(cls, vals)

    def __repr__(self) -> str:
        return f"ScoreSequence({tuple.__repr__(self)})"

    @property
    def n(self) -> int:
        return len(self)


@dataclass(frozen=True)
class PointedScoreSequence:
    """A score sequence with a distinguished index in [0, n-1]."""

    seq: ScoreSequence
    point: int

    def __post_init__(self):
        if not isinstance(self.seq, ScoreSequence):
            object.__setattr__(self, "seq", ScoreSequence(self.seq))
        if not 0 <= self.point <= len(self.seq) - 1:
            raise ValueError(
                f"point {self.point} outside [0, {len(self.seq) - 1}]"
            )

    @property
    def n(self) -> int:
        return len(self.seq)


def is_strong(s: Sequence[int]) -> bool:
    """True iff ``s`` is the score sequence of a strongly connected tournament.

    Equivalently every proper prefix sums strictly above k(k-1)/2.  The
    empty sequence is not strong (the empty graph is not considered
    strongly connected); the singleton (0) is.
    """
    n = len(s)
    if n == 0:
        return False
    total = 0
    for k in range(1, n):
        total += s[k - 1]
        if total <= k * (k - 1) // 2:
            return False
    return True


def direct_sum(u: Sequence[int], v: Sequence[int]) -> ScoreSequence:
    """Concatenate ``u`` with ``v`` shifted up by len(u).

    The direct sum of two score sequences is again a score sequence; the
    empty sequence is the identity element.
    """
    k = len(u)
    return ScoreSequence(tuple(u) + tuple(x + k for x in v))


@dataclass(frozen=True)
class StrongDecomposition:
    """An ordered list of nonempty strong summands."""

    summands: tuple[ScoreSequence, ...]

    def __post_init__(self):
        if not self.summands:
            raise ValueError("a decomposition has at least one summand")
        if any(len(t) == 0 for t in self.summands):
            raise ValueError("summands must be nonempty")

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(t) for t in self.summands)

    def resum(self) -> ScoreSequence:
        """Direct sum of the summands, in order."""
        out = ScoreSequence()
        for t in self.summands:
            out = direct_sum(out, t)
        return out


def strong_summands(s: Sequence[int]) -> StrongDecomposition:
    """Split ``s`` into its unique sequence of strong summands.

    The cut points are exactly the proper prefix lengths k whose sum equals
    k(k-1)/2; each piece, rebased by its offset, is a strong score
    sequence.  ``s`` must be a nonempty score sequence.
    """
    n = len(s)
    if n == 0:
        raise ValueError("empty sequence has no decomposition")
    parts = []
    base = 0
    total = 0
    for k in range(1, n + 1):
        total += s[k - 1]
        if 2 * total == k * (k - 1):
            parts.append(ScoreSequence(x - base for x in s[base:k]))
            base = k
    return StrongDecomposition(tuple(parts))


def shift(s: Sequence[int], j: int) -> tuple[int, ...]:
    """Add ``j`` to every element mod n and sort nondecreasingly.

    The result is generally *not* a score sequence, so a plain tuple is
    returned; revalidate with is_score_sequence when needed.  ``j`` may be
    any integer and is normalized mod n.
    """
    n = len(s)
    if n == 0:
        raise ValueError("cannot shift an empty sequence")
    j %= n
    return tuple(sorted((x + j) % n for x in s))


def rotation_shifts(s: Sequence[int]) -> list[int]:
    """All j in [0, n-1] for which shift(s, j) is again a score sequence.

    These are 0 together with every suffix length-sum of the strong
    decomposition; shift(s, j) then equals the corresponding rotation of
    the summands.
    """
    n = len(s)
    lengths = strong_summands(s).lengths  # raises on empty input
    shifts = {0}
    acc = 0
    for size in reversed(lengths):
        acc += size
        shifts.add(acc % n)
    return sorted(shifts)


def fiber_count(s: Sequence[int], i: int) -> int:
    """Number of positions holding the value ``i``; may be zero."""
    n = len(s)
    if not 0 <= i <= n - 1:
        raise ValueError(f"value {i} outside [0, {n - 1}]")
    return sum(1 for x in s if x == i)


def parse_sequence(text: str) -> tuple[int, ...]:
    """Parse a comma-separated integer list; whitespace is tolerated.

    An empty or all-whitespace string parses to the empty tuple.  Raises
    ParseError carrying the 1-based character offset of the problem.
    """
    values = []
    n = len(text)

    def skip_ws(i: int) -> int:
        while i < n and text[i].isspace():
            i += 1
        return i

    i = skip_ws(0)
    if i == n:
        return ()
    while True:
        start = i
        if i < n and text[i] == "-":
            i += 1
        digits_from = i
        while i < n and text[i].isdigit():
            i += 1
        if i == digits_from:
            raise ParseError(start + 1, "expected an integer")
        values.append(int(text[start:i]))
        i = skip_ws(i)
        if i == n:
            return tuple(values)
        if text[i] != ",":
            raise ParseError(i + 1, f"expected ',' but found {text[i]!r}")
        i = skip_ws(i + 1)


def format_sequence(values: Sequence[int]) -> str:
    """Render a sequence in the comma-separated text format."""
    return ",".join(str(x) for x in values)
