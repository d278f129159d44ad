"""Brute-force ground truth from the subset lattice itself.

Subsets of an n-element ground set are n-bit words; the marked block A is
the low m bits.  Scanning all 2^n words realizes the defining construction
of the boolean sequence family (reduced |B & A| / |B| over nonempty B) and
the rank-slice counts behind the binomial identities, with no number
theory involved, so these scans validate the closed-form modules.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd

from .fracs import Frac
from .identities import IdentityReport
from .sequences import BOOLEAN, FareySeq, SeqDescriptor

ENUM_BOUND = 24  # 2^n words are scanned; refuse anything bigger


def _check_bounds(n: int, m: int, bound: int = ENUM_BOUND) -> None:
    if not 0 < m < n:
        raise ValueError(f"need 0 < m < n, got n={n}, m={m}")
    if n > bound:
        raise ValueError(f"n={n} exceeds the enumeration bound {bound}")


def enumerate_fractions(n: int, m: int) -> FareySeq:
    """All reduced values |B & A| / |B| over nonempty subsets B, ascending.

    Must coincide with the arithmetic characterization (h <= m and
    k - h <= n - m inside F_n); the sequences module builds that one, this
    scan never consults it.
    """
    _check_bounds(n, m)
    amask = (1 << m) - 1
    seen: set[tuple[int, int]] = set()
    for bits in range(1, 1 << n):
        j = (bits & amask).bit_count()
        l = bits.bit_count()
        g = gcd(j, l)
        seen.add((j // g, l // g))
    terms = tuple(sorted(Frac(h, k) for h, k in seen))
    return FareySeq(SeqDescriptor(BOOLEAN, n, m), terms)


@lru_cache(maxsize=64)
def _intersection_histogram(n: int, m: int) -> dict[tuple[int, int], int]:
    """counts[(j, l)] = number of subsets with |B| = l and |B & A| = j."""
    amask = (1 << m) - 1
    counts: dict[tuple[int, int], int] = {}
    for bits in range(1 << n):
        key = ((bits & amask).bit_count(), bits.bit_count())
        counts[key] = counts.get(key, 0) + 1
    return counts


def count_exact_intersection(n: int, m: int, j: int, l: int) -> int:
    """Subsets with |B| = l and |B & A| = j, counted by enumeration.

    Always equals C(m, j) * C(n-m, l-j); the scan is cached per (n, m) so
    sweeping all (j, l) cells costs one pass.
    """
    _check_bounds(n, m)
    if not 0 <= j <= l <= n:
        raise ValueError(f"need 0 <= j <= l <= n, got j={j}, l={l}, n={n}")
    return _intersection_histogram(n, m).get((j, l), 0)


def filter_cardinality_check(n: int, m: int) -> IdentityReport:
    """Count the subsets meeting the marked block against 2^n - 2^(n-m).

    The first LHS entry is the direct count.  The second reassembles it
    from the enumerated nonempty subsets inside the block (2^m - 1 of
    them) plus the closed-form count 2^n - 2^m - 2^(n-m) + 1 of the mixed
    ones, so it matches the RHS exactly when the block count is right.
    """
    _check_bounds(n, m, bound=20)
    amask = (1 << m) - 1
    meeting = inside = 0
    for bits in range(1, 1 << n):
        if bits & amask:
            meeting += 1
            if (bits | amask) == amask:
                inside += 1
    mixed_closed = 2 ** n - 2 ** m - 2 ** (n - m) + 1
    return IdentityReport(
        "filter-cardinality",
        {"n": n, "m": m},
        [meeting, inside + mixed_closed],
        2 ** n - 2 ** (n - m),
    )
