"""The bijection between pointed score sequences and zero-sum multisets.

A pointed score sequence (s, i) splits at the smallest summand prefix u
covering position i; subtracting i from u modulo |u| yields an EGZ
multiset, and the remaining summands form a plain score sequence.  The
map phi sending (s, i) to that pair is a bijection onto the disjoint
union of EGZ_k x S_{n-k} over k = 1..n, and it transports the statistic
"occurrences of i in s" to "multiplicity of zero in the multiset".

The forward direction is a direct computation.  The inverse first
realizes the multiset as a shifted score sequence, then walks the cyclic
rotations of that sequence until the adjusted point lands in the last
strong summand; bijectivity promises exactly one rotation works, and the
code asserts this at runtime rather than trusting it silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import (
    PointedScoreSequence,
    ScoreSequence,
    direct_sum,
    rotation_shifts,
    shift,
    strong_summands,
)
from .egz import EgzMultiset, realize
from .errors import InternalInvariantError

__all__ = ["PhiImage", "f_inverse", "f_map", "mu_minus", "phi", "phi_inverse"]


@dataclass(frozen=True)
class PhiImage:
    """Output of phi: an EGZ multiset of size k plus a length n-k sequence."""

    egz: EgzMultiset
    rest: ScoreSequence

    def __post_init__(self):
        if not isinstance(self.rest, ScoreSequence):
            object.__setattr__(self, "rest", ScoreSequence(self.rest))

    @property
    def n(self) -> int:
        return self.egz.n + len(self.rest)


def mu_minus(s: Sequence[int], i: int) -> EgzMultiset:
    """Multiset of (s_x - i) mod n; always a valid EGZ multiset.

    Subtracting the same residue from all n values leaves the sum
    unchanged modulo n, so the membership condition is preserved.
    """
    n = len(s)
    if n == 0:
        raise ValueError("sequence is empty")
    if not 0 <= i <= n - 1:
        raise ValueError(f"point {i} outside [0, {n - 1}]")
    return EgzMultiset(tuple(sorted((x - i) % n for x in s)))


def _last_summand_start(s: Sequence[int]) -> int:
    return len(s) - strong_summands(s).lengths[-1]


def f_map(p: PointedScoreSequence) -> EgzMultiset:
    """Restriction of mu_minus to points inside the last strong summand.

    On that domain the map is a bijection onto the size-n EGZ family, and
    the multiplicity of zero in the image equals the number of times the
    point occurs as a value of the sequence.
    """
    if p.point < _last_summand_start(p.seq):
        raise ValueError(
            f"point {p.point} is not in the last strong summand (not in L_n)"
        )
    return mu_minus(p.seq, p.point)


def f_inverse(m: EgzMultiset) -> PointedScoreSequence:
    """The unique pointed sequence with its point in the last summand
    mapping to ``m`` under f_map.

    Anything other than exactly one candidate contradicts bijectivity and
    raises InternalInvariantError.
    """
    n = m.n
    base, j = realize(m)
    point0 = (n - j) % n
    hits = []
    for r in rotation_shifts(base):
        seq = base if r == 0 else ScoreSequence(shift(base, r))
        point = (point0 + r) % n
        if point >= _last_summand_start(seq):
            hits.append(PointedScoreSequence(seq, point))
    if len(hits) != 1:
        raise InternalInvariantError(
            f"expected exactly one preimage of {m.residues}, found {len(hits)}"
        )
    return hits[0]


def phi(p: PointedScoreSequence) -> PhiImage:
    """Split at the smallest summand prefix covering the point and encode it.

    The prefix u keeps the original values (the first |u| values of s),
    the point stays at its absolute position i < |u|, and the remainder is
    rebased into a standalone score sequence.
    """
    seq = p.seq
    cut = 0
    for size in strong_summands(seq).lengths:
        cut += size
        if p.point < cut:
            break
    head = ScoreSequence(seq[:cut])
    rest = ScoreSequence(x - cut for x in seq[cut:])
    return PhiImage(mu_minus(head, p.point), rest)


def phi_inverse(image: PhiImage) -> PointedScoreSequence:
    """Invert phi: decode the multiset, then reattach the remainder."""
    head = f_inverse(image.egz)
    return PointedScoreSequence(direct_sum(head.seq, image.rest), head.point)
