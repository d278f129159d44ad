"""Exact reduced fractions in [0, 1] and 2x2 integer matrix maps on them.

Everything here is plain integer arithmetic; nothing is ever rounded.
"""

from __future__ import annotations

from math import gcd


class Frac:
    """An irreducible fraction h/k with 0 <= h <= k and k >= 1.

    The constructor canonicalizes: Frac(2, 4) is stored as 1/2 and
    Frac(0, 7) as 0/1.  Inputs outside [0, 1] are rejected.
    """

    __slots__ = ("h", "k")

    def __init__(self, h: int, k: int) -> None:
        if k == 0:
            raise ValueError("zero denominator")
        if h < 0 or k < 0:
            raise ValueError(f"negative component in {h}/{k}")
        if h > k:
            raise ValueError(f"{h}/{k} lies outside [0/1, 1/1]")
        g = gcd(h, k)
        object.__setattr__(self, "h", h // g)
        object.__setattr__(self, "k", k // g)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Frac is immutable")

    # comparisons by cross multiplication; Python ints never overflow
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Frac):
            return NotImplemented
        return self.h == other.h and self.k == other.k

    def __lt__(self, other: "Frac") -> bool:
        return self.h * other.k < other.h * self.k

    def __le__(self, other: "Frac") -> bool:
        return self.h * other.k <= other.h * self.k

    def __gt__(self, other: "Frac") -> bool:
        return self.h * other.k > other.h * self.k

    def __ge__(self, other: "Frac") -> bool:
        return self.h * other.k >= other.h * self.k

    def __hash__(self) -> int:
        return hash((self.h, self.k))

    def __str__(self) -> str:
        return f"{self.h}/{self.k}"

    def __repr__(self) -> str:
        return f"Frac({self.h}, {self.k})"

    @classmethod
    def parse(cls, text: str) -> "Frac":
        """Parse 'h/k' into a Frac."""
        parts = text.strip().split("/")
        if len(parts) != 2:
            raise ValueError(f"expected 'h/k', got {text!r}")
        try:
            h, k = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"expected 'h/k' with integer parts, got {text!r}") from None
        return cls(h, k)


ZERO = Frac(0, 1)
HALF = Frac(1, 2)
ONE = Frac(1, 1)


class UnimodularMap:
    """A 2x2 integer matrix [[a, b], [c, d]] acting on fractions.

    A fraction h/k is treated as the column vector (h, k), so the image
    of h/k is (a*h + b*k) / (c*h + d*k).  With |det| = 1 and gcd(h, k) = 1
    the image pair is automatically coprime; apply() checks that instead
    of re-reducing, so a non-unimodular matrix fails loudly.
    """

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a: int, b: int, c: int, d: int, check: bool = True) -> None:
        self.a, self.b, self.c, self.d = a, b, c, d
        if check and abs(self.det) != 1:
            raise ValueError(f"matrix {self} has determinant {self.det}, not +-1")

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def apply(self, f: Frac) -> Frac:
        """Image of f under the matrix, as a reduced Frac.

        Raises ValueError when f is outside the matrix's domain (the image
        falls outside [0/1, 1/1] or has a nonpositive denominator) and
        ArithmeticError when the image pair is not coprime, which can only
        happen for a non-unimodular matrix.
        """
        num = self.a * f.h + self.b * f.k
        den = self.c * f.h + self.d * f.k
        if den <= 0:
            raise ValueError(f"{f} maps to nonpositive denominator under {self}")
        if num < 0 or num > den:
            raise ValueError(f"{f} maps to {num}/{den}, outside [0/1, 1/1]")
        if gcd(num, den) != 1:
            raise ArithmeticError(
                f"image {num}/{den} of {f} under {self} is not reduced"
            )
        return Frac(num, den)

    def inverse(self) -> "UnimodularMap":
        """Exact integer inverse; defined because |det| = 1."""
        det = self.det
        if abs(det) != 1:
            raise ValueError(f"matrix {self} with determinant {det} has no integer inverse")
        return UnimodularMap(self.d * det, -self.b * det, -self.c * det, self.a * det)

    def __matmul__(self, other: "UnimodularMap") -> "UnimodularMap":
        return UnimodularMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
            check=False,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UnimodularMap):
            return NotImplemented
        return (self.a, self.b, self.c, self.d) == (other.a, other.b, other.c, other.d)

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.c, self.d))

    def __neg__(self) -> "UnimodularMap":
        return UnimodularMap(-self.a, -self.b, -self.c, -self.d, check=False)

    def is_identity(self) -> bool:
        return (self.a, self.b, self.c, self.d) == (1, 0, 0, 1)

    def is_involution(self) -> bool:
        """True when the matrix squares to plus or minus the identity."""
        sq = self @ self
        return sq.is_identity() or (-sq).is_identity()

    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __str__(self) -> str:
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"

    def __repr__(self) -> str:
        return f"UnimodularMap({self.a}, {self.b}, {self.c}, {self.d})"
