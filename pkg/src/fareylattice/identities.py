"""Moebius function, interval totients, cardinality closed forms, and the
binomial-sum identities carried by the interior fractions of the sequences.

Every value here is an exact Python int; the sums grow like 2^(2m), so no
floating point is allowed anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, gcd

from .fracs import HALF, Frac
from .sequences import FareySeq, farey, farey_boolean


@lru_cache(maxsize=None)
def mobius(d: int) -> int:
    """Moebius mu(d) by trial division: 0 on a squared prime factor,
    else (-1)^(number of prime factors)."""
    if d < 1:
        raise ValueError(f"mobius needs a positive integer, got {d}")
    sign = 1
    p = 2
    while p * p <= d:
        if d % p == 0:
            d //= p
            if d % p == 0:
                return 0
            sign = -sign
        p += 1
    if d > 1:
        sign = -sign
    return sign


def phi_interval(h: int, i: int, l: int) -> int:
    """How many j in [i, l] are coprime to h; empty intervals count 0."""
    if h < 1:
        raise ValueError(f"phi_interval needs h >= 1, got {h}")
    if i < 1:
        raise ValueError(f"interval must start at a positive integer, got {i}")
    return sum(1 for j in range(i, l + 1) if gcd(h, j) == 1)


def phi_interval_mobius(h: int, lower: int, upper: int) -> int:
    """Coprime count on [lower+1, upper] via the divisor sum
    sum_{d | h, d <= min(upper, h)} mu(d) * (upper//d - lower//d)."""
    if lower < 0:
        raise ValueError(f"interval bound must be nonnegative, got {lower}")
    if lower >= upper:
        raise ValueError(f"empty interval [{lower + 1}, {upper}]")
    total = 0
    for d in range(1, min(upper, h) + 1):
        if h % d == 0:
            total += mobius(d) * (upper // d - lower // d)
    return total


def farey_size(m: int) -> int:
    """|F_m| = 1 + (1/2) sum_d mu(d) * floor(m/d) * (floor(m/d) + 1)."""
    if m < 1:
        raise ValueError(f"order must be positive, got {m}")
    total = sum(mobius(d) * (m // d) * (m // d + 1) for d in range(1, m + 1))
    # the weighted sum is always even; fail loudly rather than truncate
    half, rem = divmod(total, 2)
    if rem:
        raise ArithmeticError(f"odd divisor sum {total} for m={m}")
    return 1 + half


def farey_boolean_size(m: int) -> int:
    """|F(B(2m), m)| = 1 + sum_d mu(d) * floor(m/d) * (floor(m/d) + 1).

    The closed form is twice the F_m one minus one; it also holds at m = 1,
    where direct counting of (0/1, 1/2, 1/1) gives 3.
    """
    if m < 1:
        raise ValueError(f"order must be positive, got {m}")
    return 1 + sum(mobius(d) * (m // d) * (m // d + 1) for d in range(1, m + 1))


@dataclass
class IdentityReport:
    """LHS sums, the RHS closed form, and whether every LHS matched."""

    name: str
    params: dict[str, int]
    lhs: list[int]
    rhs: int

    @property
    def passed(self) -> bool:
        return all(v == self.rhs for v in self.lhs)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "params": dict(self.params),
            "lhs": list(self.lhs),
            "rhs": self.rhs,
            "pass": self.passed,
        }

    def __str__(self) -> str:
        status = "pass" if self.passed else "fail"
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.name} {params}: lhs={self.lhs} rhs={self.rhs} {status}"


def _interior(seq: FareySeq) -> list[Frac]:
    return [f for f in seq if 0 < f.h < f.k]


def _block_sum(seq_m: int, other_m: int, fractions: list[Frac]) -> int:
    """sum over f and over 1 <= s <= min(seq_m/h, other_m/(k-h)) of
    C(seq_m, s*h) * C(other_m, s*(k-h))."""
    total = 0
    for f in fractions:
        h, d = f.h, f.k - f.h
        for s in range(1, min(seq_m // h, other_m // d) + 1):
            total += comb(seq_m, s * h) * comb(other_m, s * d)
    return total


def interior_duality(n: int, m: int) -> IdentityReport:
    """The interior double sums of the (n, m) and (n, n-m) subsequences
    both collapse to 2^n - 2^m - 2^(n-m) + 1."""
    lhs = [
        _block_sum(m, n - m, _interior(farey_boolean(n, m))),
        _block_sum(n - m, m, _interior(farey_boolean(n, n - m))),
    ]
    return IdentityReport("interior-duality", {"n": n, "m": m}, lhs,
                          2 ** n - 2 ** m - 2 ** (n - m) + 1)


def filter_partition(n: int, m: int) -> IdentityReport:
    """2^n - 2^(n-m) subsets meet the marked m-block; removing the 2^m - 1
    subsets inside the block leaves the interior double sum."""
    interior = _block_sum(m, n - m, _interior(farey_boolean(n, m)))
    return IdentityReport("filter-partition", {"n": n, "m": m},
                          [2 ** n - 2 ** (n - m)],
                          2 ** m - 1 + interior)


def _split_sum(m: int, fractions: list[Frac], left_form: bool, third_term: bool) -> int:
    """Band sums for the symmetric sequence.

    Left of 1/2 the inner range is s <= m/(k-h) with summand
    C(m, s*(k-h)) * (C(m, s*h) [+ C(m, s*(k-2h))]); right of 1/2 the roles
    of h and k-h swap and the optional term uses 2h-k.
    """
    total = 0
    for f in fractions:
        h, k = f.h, f.k
        if left_form:
            outer, inner, extra = k - h, h, k - 2 * h
        else:
            outer, inner, extra = h, k - h, 2 * h - k
        for s in range(1, m // outer + 1):
            term = comb(m, s * inner)
            if third_term:
                term += comb(m, s * extra)
            total += comb(m, s * outer) * term
    return total


def symmetric_identities(m: int) -> list[IdentityReport]:
    """The three interior-sum identities of the symmetric sequence.

    sym-interior: the full interior double sum equals 2^(2m) - 2^(m+1) + 1.
    sym-halves:   the sums over (0,1/2) and (1/2,1) agree and equal
                  2^(2m-1) - 2^m - C(2m,m)/2 + 1.
    sym-thirds:   the four sums over (0,1/3), (1/3,1/2), (1/2,2/3), (2/3,1)
                  agree and equal the halves value minus
                  sum_t C(m,2t)*C(m,t).
    """
    if m <= 1:
        raise ValueError(f"identities need m > 1, got {m}")
    seq = farey_boolean(2 * m, m)
    interior = _interior(seq)
    third, two_thirds = Frac(1, 3), Frac(2, 3)

    central, rem = divmod(comb(2 * m, m), 2)
    if rem:
        raise ArithmeticError(f"odd central binomial for m={m}")
    halves_rhs = 2 ** (2 * m - 1) - 2 ** m + 1 - central
    cross = sum(comb(m, 2 * t) * comb(m, t) for t in range(1, m // 2 + 1))

    below = [f for f in interior if f < HALF]
    above = [f for f in interior if f > HALF]
    bands = [
        [f for f in below if f < third],
        [f for f in below if third < f],
        [f for f in above if f < two_thirds],
        [f for f in above if two_thirds < f],
    ]
    return [
        IdentityReport("sym-interior", {"m": m},
                       [_block_sum(m, m, interior)],
                       2 ** (2 * m) - 2 ** (m + 1) + 1),
        IdentityReport("sym-halves", {"m": m},
                       [_split_sum(m, below, True, False),
                        _split_sum(m, above, False, False)],
                       halves_rhs),
        IdentityReport("sym-thirds", {"m": m},
                       [_split_sum(m, bands[0], True, True),
                        _split_sum(m, bands[1], True, True),
                        _split_sum(m, bands[2], False, True),
                        _split_sum(m, bands[3], False, True)],
                       halves_rhs - cross),
    ]


def farey_identities(m: int) -> list[IdentityReport]:
    """The two interior-sum identities of the standard sequence F_m.

    farey-interior: sum over interior h/k, s <= m/k, of C(m,s*h)*C(m,s*k)
                    equals 2^(2m-1) - 2^m - C(2m,m)/2 + 1.
    farey-halves:   with summand C(m,s*k)*(C(m,s*h) + C(m,s*(k-h))) the
                    sums over (0,1/2) and (1/2,1) agree and equal the
                    interior value minus sum_t C(m,2t)*C(m,t).
    """
    if m <= 1:
        raise ValueError(f"identities need m > 1, got {m}")
    interior = _interior(farey(m))
    central, rem = divmod(comb(2 * m, m), 2)
    if rem:
        raise ArithmeticError(f"odd central binomial for m={m}")
    interior_rhs = 2 ** (2 * m - 1) - 2 ** m + 1 - central
    cross = sum(comb(m, 2 * t) * comb(m, t) for t in range(1, m // 2 + 1))

    plain = 0
    split = [0, 0]
    for f in interior:
        h, k = f.h, f.k
        plain_f = paired_f = 0
        for s in range(1, m // k + 1):
            plain_f += comb(m, s * h) * comb(m, s * k)
            paired_f += comb(m, s * k) * (comb(m, s * h) + comb(m, s * (k - h)))
        plain += plain_f
        if f < HALF:
            split[0] += paired_f
        elif f > HALF:
            split[1] += paired_f
    return [
        IdentityReport("farey-interior", {"m": m}, [plain], interior_rhs),
        IdentityReport("farey-halves", {"m": m}, split, interior_rhs - cross),
    ]
