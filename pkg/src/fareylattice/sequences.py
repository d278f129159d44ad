"""Construction of Farey sequences and their rank-filtered subsequences.

Families:

  farey        F_n, every reduced h/k with 0 <= h <= k <= n
  upper        terms of F_n with numerator at most m
  boolean      terms of F_n with h <= m and k-h <= n-m; these are exactly
               the reduced values |B & A| / |B| over nonempty subsets B of
               an n-set with a marked m-subset A
  left-half    terms of the symmetric boolean sequence (n = 2m) up to 1/2
  right-half   its terms from 1/2 on

One generator is trusted: F_n is produced by repeated application of the
modular-inverse successor step, and every other family is a filter of it.
Sequences are materialized as immutable tuples; the iterator forms exist
so the CLI can stream large orders without holding them.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterator

from .fracs import HALF, ONE, ZERO, Frac
from .neighbors import next_in_farey

FAREY = "farey"
UPPER = "upper"
BOOLEAN = "boolean"
LEFT_HALF = "left-half"
RIGHT_HALF = "right-half"

_FAMILIES = (FAREY, UPPER, BOOLEAN, LEFT_HALF, RIGHT_HALF)

# Materializing F_n costs ~0.3*n^2 terms of memory; refuse runaway orders.
MAX_ORDER = 10_000


@dataclass(frozen=True)
class SeqDescriptor:
    """Which sequence this is: family plus its order n and parameter m."""

    family: str
    n: int
    m: int | None = None

    def __post_init__(self) -> None:
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < 1:
            raise ValueError(f"order must be positive, got n={self.n}")
        if self.family == FAREY:
            if self.m is not None:
                raise ValueError("farey takes no parameter m")
            return
        if self.m is None:
            raise ValueError(f"{self.family} requires parameter m")
        if not 0 < self.m < self.n:
            raise ValueError(f"need 0 < m < n, got m={self.m}, n={self.n}")
        if self.family in (LEFT_HALF, RIGHT_HALF) and self.n != 2 * self.m:
            raise ValueError(
                f"halfsequences exist only for n = 2m, got n={self.n}, m={self.m}"
            )

    @property
    def is_symmetric_boolean(self) -> bool:
        """True for the boolean family with n = 2m, the case that splits in half."""
        return self.family == BOOLEAN and self.n == 2 * self.m

    def __str__(self) -> str:
        if self.family == FAREY:
            return f"farey(n={self.n})"
        return f"{self.family}(n={self.n}, m={self.m})"


class FareySeq:
    """An ascending, zero-indexed, duplicate-free sequence of Frac terms."""

    __slots__ = ("descriptor", "terms")

    def __init__(self, descriptor: SeqDescriptor, terms: tuple[Frac, ...]) -> None:
        for i in range(len(terms) - 1):
            if not terms[i] < terms[i + 1]:
                raise ValueError(
                    f"terms not strictly ascending at index {i}: "
                    f"{terms[i]} !< {terms[i + 1]}"
                )
        object.__setattr__(self, "descriptor", descriptor)
        object.__setattr__(self, "terms", terms)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("FareySeq is immutable")

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, i):
        return self.terms[i]

    def __iter__(self) -> Iterator[Frac]:
        return iter(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FareySeq):
            return NotImplemented
        return self.descriptor == other.descriptor and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.descriptor, self.terms))

    def index_of(self, f: Frac) -> int | None:
        """Zero-based position of f, or None when absent (binary search)."""
        i = bisect_left(self.terms, f)
        if i < len(self.terms) and self.terms[i] == f:
            return i
        return None

    def __contains__(self, f: object) -> bool:
        return isinstance(f, Frac) and self.index_of(f) is not None

    def __repr__(self) -> str:
        return f"FareySeq({self.descriptor}, {len(self.terms)} terms)"


def _check_order(n: int) -> None:
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    if n > MAX_ORDER:
        raise ValueError(f"order {n} exceeds the materialization guard {MAX_ORDER}")


def iter_farey(n: int) -> Iterator[Frac]:
    """Terms of F_n in ascending order, by successor stepping from 0/1."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    f = ZERO
    yield f
    while f != ONE:
        f = next_in_farey(f, n)
        yield f


def iter_upper(n: int, m: int) -> Iterator[Frac]:
    """Terms of F_n with numerator at most m."""
    SeqDescriptor(UPPER, n, m)  # validate parameters
    return (f for f in iter_farey(n) if f.h <= m)


def iter_boolean(n: int, m: int) -> Iterator[Frac]:
    """Terms of F_n with h <= m and k - h <= n - m."""
    SeqDescriptor(BOOLEAN, n, m)
    return (f for f in iter_farey(n) if f.h <= m and f.k - f.h <= n - m)


def farey(n: int) -> FareySeq:
    """The Farey sequence of order n."""
    _check_order(n)
    return FareySeq(SeqDescriptor(FAREY, n), tuple(iter_farey(n)))


def upper_subsequence(n: int, m: int) -> FareySeq:
    """The subsequence of F_n whose numerators stay at or below m."""
    _check_order(n)
    return FareySeq(SeqDescriptor(UPPER, n, m), tuple(iter_upper(n, m)))


def farey_boolean(n: int, m: int) -> FareySeq:
    """The Boolean-lattice subsequence: h <= m and k - h <= n - m in F_n."""
    _check_order(n)
    return FareySeq(SeqDescriptor(BOOLEAN, n, m), tuple(iter_boolean(n, m)))


def _require_symmetric(s: FareySeq, what: str) -> None:
    if not s.descriptor.is_symmetric_boolean:
        raise ValueError(f"{what} is defined only for boolean sequences with n = 2m, "
                         f"got {s.descriptor}")


def left_half(s: FareySeq) -> FareySeq:
    """Terms of a symmetric boolean sequence up to and including 1/2."""
    _require_symmetric(s, "left_half")
    d = SeqDescriptor(LEFT_HALF, s.descriptor.n, s.descriptor.m)
    return FareySeq(d, tuple(f for f in s if f <= HALF))


def right_half(s: FareySeq) -> FareySeq:
    """Terms of a symmetric boolean sequence from 1/2 on."""
    _require_symmetric(s, "right_half")
    d = SeqDescriptor(RIGHT_HALF, s.descriptor.n, s.descriptor.m)
    return FareySeq(d, tuple(f for f in s if f >= HALF))


def materialize(d: SeqDescriptor) -> FareySeq:
    """Build the sequence a descriptor names."""
    if d.family == FAREY:
        return farey(d.n)
    if d.family == UPPER:
        return upper_subsequence(d.n, d.m)
    if d.family == BOOLEAN:
        return farey_boolean(d.n, d.m)
    if d.family == LEFT_HALF:
        return left_half(farey_boolean(d.n, d.m))
    return right_half(farey_boolean(d.n, d.m))
