"""The catalog of monotone unimodular bijections between the sequences.

Eleven maps, each a 2x2 integer matrix acting on h/k as a column vector:

  complement       boolean(n,m)  -> boolean(n,n-m)   (k-h)/k      reversing
  farey-reversal   farey(m)      -> farey(m)         (k-h)/k      reversing
  sym-complement   boolean(2m,m) -> itself           (k-h)/k      reversing
  left-flip        left half     -> itself           (k-2h)/(2k-3h) reversing
  right-flip       right half    -> itself           h/(3h-k)     reversing
  left-to-right    left half     -> right half       (k-h)/(2k-3h) preserving
  right-to-left    right half    -> left half        (2h-k)/(3h-k) preserving
  left-to-farey    left half     -> farey(m)         h/(k-h)      preserving
  farey-to-left    farey(m)      -> left half        h/(k+h)      preserving
  right-to-farey   right half    -> farey(m)         (k-h)/h      reversing
  farey-to-right   farey(m)      -> right half       k/(k+h)      reversing

All but the first require n = 2m; the four farey bridges require m > 1.
Each map is checked two ways: extensionally, by applying the matrix to
every term of a materialized domain and comparing with the codomain, and
intensionally, through determinant, involution, and inverse-pair identities
on the matrices themselves.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .fracs import Frac, UnimodularMap
from .sequences import (
    BOOLEAN,
    FAREY,
    LEFT_HALF,
    RIGHT_HALF,
    FareySeq,
    SeqDescriptor,
    farey_boolean,
    materialize,
)

PRESERVING = "preserving"
REVERSING = "reversing"

COMPLEMENT = "complement"
FAREY_REVERSAL = "farey-reversal"
SYM_COMPLEMENT = "sym-complement"
LEFT_FLIP = "left-flip"
RIGHT_FLIP = "right-flip"
LEFT_TO_RIGHT = "left-to-right"
RIGHT_TO_LEFT = "right-to-left"
LEFT_TO_FAREY = "left-to-farey"
FAREY_TO_LEFT = "farey-to-left"
RIGHT_TO_FAREY = "right-to-farey"
FAREY_TO_RIGHT = "farey-to-right"

# (a, b, c, d) for [[a, b], [c, d]]; module-level so tests can corrupt a copy
MATRICES: dict[str, tuple[int, int, int, int]] = {
    COMPLEMENT: (-1, 1, 0, 1),
    FAREY_REVERSAL: (-1, 1, 0, 1),
    SYM_COMPLEMENT: (-1, 1, 0, 1),
    LEFT_FLIP: (-2, 1, -3, 2),
    RIGHT_FLIP: (1, 0, 3, -1),
    LEFT_TO_RIGHT: (-1, 1, -3, 2),
    RIGHT_TO_LEFT: (2, -1, 3, -1),
    LEFT_TO_FAREY: (1, 0, -1, 1),
    FAREY_TO_LEFT: (1, 0, 1, 1),
    RIGHT_TO_FAREY: (-1, 1, 1, 0),
    FAREY_TO_RIGHT: (0, 1, 1, 1),
}

MAP_NAMES = tuple(MATRICES)

# self-inverse maps, and the mutually inverse pairs
_INVOLUTIONS = frozenset(
    {COMPLEMENT, FAREY_REVERSAL, SYM_COMPLEMENT, LEFT_FLIP, RIGHT_FLIP}
)
_INVERSE_OF = {
    LEFT_TO_RIGHT: RIGHT_TO_LEFT,
    RIGHT_TO_LEFT: LEFT_TO_RIGHT,
    LEFT_TO_FAREY: FAREY_TO_LEFT,
    FAREY_TO_LEFT: LEFT_TO_FAREY,
    RIGHT_TO_FAREY: FAREY_TO_RIGHT,
    FAREY_TO_RIGHT: RIGHT_TO_FAREY,
}


@dataclass(frozen=True)
class MapDescriptor:
    """One catalog entry: a named matrix with its domain, codomain, direction."""

    name: str
    matrix: UnimodularMap
    domain: SeqDescriptor
    codomain: SeqDescriptor
    direction: str
    involution: bool = False
    inverse_of: str | None = None


@dataclass(frozen=True)
class Counterexample:
    source: Frac | None
    image: Frac | None
    reason: str

    def __str__(self) -> str:
        src = "-" if self.source is None else str(self.source)
        img = "-" if self.image is None else str(self.image)
        return f"input={src} image={img}: {self.reason}"


@dataclass
class VerificationReport:
    """Outcome of checking one catalog map at one parameter choice."""

    name: str
    n: int
    m: int
    checks: list[tuple[str, bool]] = field(default_factory=list)
    counterexample: Counterexample | None = None

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)

    def __str__(self) -> str:
        status = "pass" if self.passed else "fail"
        failed = [c for c, ok in self.checks if not ok]
        tail = "" if self.passed else f" failed={','.join(failed)} ({self.counterexample})"
        return f"{self.name} n={self.n} m={self.m}: {status}{tail}"


def _mat(name: str) -> UnimodularMap:
    return UnimodularMap(*MATRICES[name], check=False)


def _entry(name: str, domain: SeqDescriptor, codomain: SeqDescriptor,
           direction: str) -> MapDescriptor:
    return MapDescriptor(
        name=name,
        matrix=_mat(name),
        domain=domain,
        codomain=codomain,
        direction=direction,
        involution=name in _INVOLUTIONS,
        inverse_of=_INVERSE_OF.get(name),
    )


def catalog(n: int, m: int) -> list[MapDescriptor]:
    """All catalog maps applicable to the pair (n, m).

    The complement map exists for every 0 < m < n.  The rest require the
    symmetric case n = 2m, and the four farey bridges additionally m > 1.
    """
    if not 0 < m < n:
        raise ValueError(f"need 0 < m < n, got n={n}, m={m}")
    entries = [
        _entry(COMPLEMENT, SeqDescriptor(BOOLEAN, n, m),
               SeqDescriptor(BOOLEAN, n, n - m), REVERSING),
    ]
    if n != 2 * m:
        return entries

    sym = SeqDescriptor(BOOLEAN, n, m)
    left = SeqDescriptor(LEFT_HALF, n, m)
    right = SeqDescriptor(RIGHT_HALF, n, m)
    std = SeqDescriptor(FAREY, m)

    entries += [
        _entry(FAREY_REVERSAL, std, std, REVERSING),
        _entry(SYM_COMPLEMENT, sym, sym, REVERSING),
        _entry(LEFT_FLIP, left, left, REVERSING),
        _entry(RIGHT_FLIP, right, right, REVERSING),
        _entry(LEFT_TO_RIGHT, left, right, PRESERVING),
        _entry(RIGHT_TO_LEFT, right, left, PRESERVING),
    ]
    if m > 1:
        entries += [
            _entry(LEFT_TO_FAREY, left, std, PRESERVING),
            _entry(FAREY_TO_LEFT, std, left, PRESERVING),
            _entry(RIGHT_TO_FAREY, right, std, REVERSING),
            _entry(FAREY_TO_RIGHT, std, right, REVERSING),
        ]
    return entries


def _plus_minus_identity(mat: UnimodularMap) -> bool:
    return mat.is_identity() or (-mat).is_identity()


def _context_params(d: MapDescriptor) -> tuple[int, int]:
    # report (n, m) of the subsequence the map belongs to, even when the
    # map's own endpoints are standard Farey sequences of order m
    for desc in (d.domain, d.codomain):
        if desc.family != FAREY:
            return desc.n, desc.m or 0
    return 2 * d.domain.n, d.domain.n


def verify_map(d: MapDescriptor,
               cache: dict[SeqDescriptor, FareySeq] | None = None) -> VerificationReport:
    """Run every applicable check on one catalog map.

    Failures are reported, never raised.  A shared `cache` of materialized
    sequences avoids regenerating them when verifying a whole catalog.
    """
    report = VerificationReport(d.name, *_context_params(d))
    cache = cache if cache is not None else {}

    det_ok = abs(d.matrix.det) == 1
    report.checks.append(("determinant", det_ok))
    if not det_ok:
        report.counterexample = Counterexample(
            None, None, f"matrix {d.matrix} has determinant {d.matrix.det}"
        )
        return report

    def seq(desc: SeqDescriptor) -> FareySeq:
        if desc not in cache:
            cache[desc] = materialize(desc)
        return cache[desc]

    domain, codomain = seq(d.domain), seq(d.codomain)

    images: list[Frac] = []
    for f in domain:
        try:
            images.append(d.matrix.apply(f))
        except (ValueError, ArithmeticError) as exc:
            report.checks.append(("image-set", False))
            report.counterexample = Counterexample(f, None, str(exc))
            return report

    image_set = set(images)
    image_set_ok = image_set == set(codomain.terms)
    report.checks.append(("image-set", image_set_ok))
    if not image_set_ok:
        stray = next(((f, g) for f, g in zip(domain, images) if g not in codomain), None)
        if stray is not None:
            report.counterexample = Counterexample(
                stray[0], stray[1], "image is not a codomain term"
            )
        else:
            missing = next(g for g in codomain if g not in image_set)
            report.counterexample = Counterexample(None, missing, "codomain term has no preimage")
        return report

    last = len(codomain) - 1
    for i, (f, g) in enumerate(zip(domain, images)):
        expected = codomain[i] if d.direction == PRESERVING else codomain[last - i]
        if g != expected:
            report.checks.append(("direction", False))
            report.counterexample = Counterexample(
                f, g, f"expected {expected} for {d.direction} order at index {i}"
            )
            return report
    report.checks.append(("direction", True))

    if d.involution:
        report.checks.append(("involution", _plus_minus_identity(d.matrix @ d.matrix)))
    if d.inverse_of is not None:
        partner = _mat(d.inverse_of)
        report.checks.append(("inverse-pair", _plus_minus_identity(partner @ d.matrix)))
    if not report.passed and report.counterexample is None:
        report.counterexample = Counterexample(None, None, "matrix identity check failed")
    return report


def verify_catalog(n: int, m: int) -> list[VerificationReport]:
    """Verify every catalog map for (n, m), sharing materialized sequences."""
    cache: dict[SeqDescriptor, FareySeq] = {}
    return [verify_map(d, cache) for d in catalog(n, m)]


def matrix_coherence_checks() -> list[tuple[str, bool]]:
    """Cross-route identities tying the bridge maps together, matrix level.

    Composing the half-to-farey bridges with the reversal recovers the
    half-to-half maps; composing a flip with the complement does the same.
    """
    lr, rl = _mat(LEFT_TO_RIGHT), _mat(RIGHT_TO_LEFT)
    l2f, f2l = _mat(LEFT_TO_FAREY), _mat(FAREY_TO_LEFT)
    r2f, f2r = _mat(RIGHT_TO_FAREY), _mat(FAREY_TO_RIGHT)
    rev, comp = _mat(FAREY_REVERSAL), _mat(SYM_COMPLEMENT)
    lflip, rflip = _mat(LEFT_FLIP), _mat(RIGHT_FLIP)
    return [
        ("farey-route-is-complement", f2r @ l2f == comp),
        ("flip-of-complement-is-left-to-right", rflip @ comp == lr),
        ("flip-of-complement-is-right-to-left", lflip @ comp == rl),
        ("reversal-route-is-left-to-right", f2r @ rev @ l2f == lr),
        ("reversal-route-is-right-to-left", f2l @ rev @ r2f == rl),
    ]


def quarter_indices(m: int) -> tuple[int, int, int, int]:
    """Indices of 1/3, 1/2, 2/3, 1/1 in the symmetric sequence for m > 1.

    They always land in ratio 1:2:3:4, which in particular makes the last
    index (the length minus one) divisible by four; both facts are
    asserted here rather than trusted.
    """
    if m <= 1:
        raise ValueError(f"quarter indices need m > 1, got {m}")
    seq = farey_boolean(2 * m, m)
    idx = []
    for f in (Frac(1, 3), Frac(1, 2), Frac(2, 3), Frac(1, 1)):
        i = seq.index_of(f)
        if i is None:
            raise ArithmeticError(f"{f} missing from {seq.descriptor}")
        idx.append(i)
    t13, t12, t23, t11 = idx
    if (t12, t23, t11) != (2 * t13, 3 * t13, 4 * t13):
        raise ArithmeticError(
            f"quarter indices {idx} for m={m} are not in ratio 1:2:3:4"
        )
    return t13, t12, t23, t11
