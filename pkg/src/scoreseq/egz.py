"""Zero-sum multisets over Z_n in the style of Erdos, Ginzburg and Ziv.

An EGZ multiset of size n is a multiset over the cyclic group Z_n whose
element sum is congruent to n(n-1)/2 modulo n.  These multisets are in
bijection with the n-element subsets of [1, 2n-1] whose sum is divisible
by n, and every one of them arises as a cyclic shift of some score
sequence; both correspondences are implemented here.

Enumeration grows like 4^n / n, so it is guarded by a configurable cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .core import ScoreSequence, is_score_sequence, parse_sequence
from .errors import InternalInvariantError, ParseError, SubsetError
from .polynomial import IntPolynomial

__all__ = [
    "DEFAULT_ENUMERATION_CAP",
    "EgzMultiset",
    "egz_zero_poly",
    "enumerate_egz",
    "format_multiset",
    "from_subset",
    "is_egz",
    "parse_multiset",
    "realize",
    "to_subset",
]

# Enumeration over Z_n has ~4^n/n members; beyond this n it stops being a
# sensible interactive default.  Callers may raise the cap explicitly.
DEFAULT_ENUMERATION_CAP = 14


def _target_residue(n: int) -> int:
    return (n * (n - 1) // 2) % n


@dataclass(frozen=True)
class EgzMultiset:
    """Canonical EGZ multiset: a sorted tuple of residues in [0, n-1].

    Equality and hashing follow the sorted residue tuple, which makes the
    representation deterministic for serialization.
    """

    residues: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "residues", tuple(self.residues))
        n = len(self.residues)
        if n == 0:
            raise ValueError("an EGZ multiset is nonempty")
        prev = 0
        for r in self.residues:
            if not 0 <= r <= n - 1:
                raise ValueError(f"residue {r} outside [0, {n - 1}]")
            if r < prev:
                raise ValueError("residues must be sorted nondecreasingly")
            prev = r
        if sum(self.residues) % n != _target_residue(n):
            raise ValueError(
                f"residue sum {sum(self.residues)} is not "
                f"{n * (n - 1) // 2} mod {n}"
            )

    @classmethod
    def from_values(cls, values: Iterable[int], n: int | None = None) -> "EgzMultiset":
        """Build the canonical multiset, reducing values mod n and sorting."""
        vals = list(values)
        size = len(vals) if n is None else n
        if size < 1:
            raise ValueError("an EGZ multiset is nonempty")
        if len(vals) != size:
            raise ValueError(f"expected {size} values, got {len(vals)}")
        return cls(tuple(sorted(v % size for v in vals)))

    @property
    def n(self) -> int:
        return len(self.residues)

    def count(self, value: int) -> int:
        """Multiplicity of ``value`` in the multiset."""
        return self.residues.count(value)


def is_egz(residues: Sequence[int], n: int) -> bool:
    """True iff ``residues`` represents a member of the size-n family.

    Values are interpreted modulo n, so any integer list of the right
    length qualifies when its reduced sum hits n(n-1)/2 mod n.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if len(residues) != n:
        return False
    return sum(r % n for r in residues) % n == _target_residue(n)


def enumerate_egz(
    n: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> Iterator[EgzMultiset]:
    """Yield every size-n EGZ multiset once, in lexicographic order."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > cap:
        raise ValueError(f"n={n} exceeds the enumeration cap {cap}")
    return _generate(n)


def _generate(n: int) -> Iterator[EgzMultiset]:
    target = _target_residue(n)
    buf = [0] * n

    def rec(pos: int, lo: int, acc: int) -> Iterator[EgzMultiset]:
        if pos == n - 1:
            # The last residue is forced mod n; at most one fits the range.
            last = (target - acc) % n
            if last >= lo:
                buf[pos] = last
                yield EgzMultiset(tuple(buf))
            return
        for v in range(lo, n):
            buf[pos] = v
            yield from rec(pos + 1, v, acc + v)

    yield from rec(0, 0, 0)


def egz_zero_poly(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> IntPolynomial:
    """Polynomial whose t^m coefficient counts multisets with m zeros."""
    counts = [0] * (n + 1)
    for m in enumerate_egz(n, cap):
        counts[m.count(0)] += 1
    return IntPolynomial(counts)


def to_subset(m: EgzMultiset) -> set[int]:
    """Map to the matching n-subset of [1, 2n-1] with sum divisible by n.

    With sorted residues b_1 <= ... <= b_n the subset is {b_i + i}.
    """
    return {b + i for i, b in enumerate(m.residues, 1)}


def from_subset(values: Iterable[int], n: int) -> EgzMultiset:
    """Inverse of to_subset; validates size, range and divisibility.

    Raises SubsetError with code 'size', 'range' or 'divisibility'.
    """
    if n < 1:
        raise ValueError("n must be positive")
    elems = sorted(values)
    if len(elems) != n or len(set(elems)) != len(elems):
        raise SubsetError(
            "size", f"need exactly {n} distinct elements, got {len(elems)}"
        )
    if elems[0] < 1 or elems[-1] > 2 * n - 1:
        raise SubsetError(
            "range", f"elements must lie in [1, {2 * n - 1}]"
        )
    if sum(elems) % n != 0:
        raise SubsetError(
            "divisibility", f"sum {sum(elems)} is not divisible by {n}"
        )
    return EgzMultiset(tuple(a - i for i, a in enumerate(elems, 1)))


def realize(m: EgzMultiset) -> tuple[ScoreSequence, int]:
    """Find the score sequence s and smallest j with multiset(s + j) == m.

    Convention: j satisfies sorted((s_x + j) mod n) == m.residues.  Every
    EGZ multiset admits at least one such shift, so exhausting all n
    candidates without a hit indicates a bug and aborts loudly.
    """
    n = m.n
    for j in range(n):
        candidate = tuple(sorted((r - j) % n for r in m.residues))
        if is_score_sequence(candidate):
            return ScoreSequence(candidate), j
    raise InternalInvariantError(
        f"no shift of {m.residues} yields a score sequence"
    )


def parse_multiset(text: str, n: int | None = None) -> EgzMultiset:
    """Parse '{0,0,2,4,4}' or a bare comma list into a canonical multiset.

    For the bare form an explicit ``n`` cross-checks the element count.
    Offsets in ParseError refer to the original string.
    """
    stripped = text.strip()
    left_pad = len(text) - len(text.lstrip())
    base = 0
    body = text
    if stripped.startswith("{"):
        if not stripped.endswith("}") or len(stripped) < 2:
            raise ParseError(len(text.rstrip()) + 1, "expected '}'")
        base = left_pad + 1
        body = stripped[1:-1]
    elif stripped.endswith("}"):
        raise ParseError(left_pad + 1, "expected '{'")
    try:
        values = parse_sequence(body)
    except ParseError as exc:
        raise ParseError(exc.offset + base, exc.reason) from None
    if not values:
        raise ParseError(base + 1, "expected at least one residue")
    if n is not None and len(values) != n:
        raise ValueError(f"expected {n} residues, got {len(values)}")
    return EgzMultiset.from_values(values)


def format_multiset(m: EgzMultiset) -> str:
    """Render a multiset in the braced text format."""
    return "{" + ",".join(str(r) for r in m.residues) + "}"
