"""Intersection numbers and line-bundle cohomology on the Hirzebruch surface F_n.

Classes are written ``ell*E + em*F`` with ``E`` the directrix (``E^2 = -n``)
and ``F`` a fiber.  A trigonal curve of genus ``g`` and Maroni invariant ``n``
sits on ``F_n`` in the class ``3E + ((g + 3n)/2 + 1)F``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import OutOfRangeError, ValidationError


@dataclass(frozen=True)
class SurfaceClass:
    ell: int
    em: int

    def __add__(self, other: SurfaceClass) -> SurfaceClass:
        return SurfaceClass(self.ell + other.ell, self.em + other.em)

    def __str__(self) -> str:
        return f"{self.ell}E + {self.em}F"


E = SurfaceClass(1, 0)
F = SurfaceClass(0, 1)


@dataclass(frozen=True)
class MaroniDatum:
    """Genus and Maroni invariant of a trigonal curve, validated on construction."""

    g: int
    n: int

    def __post_init__(self) -> None:
        g, n = self.g, self.n
        if n < 0:
            raise ValidationError(f"Maroni invariant must satisfy n >= 0 (got n={n})")
        if (g - n) % 2:
            raise ValidationError(f"parity: g ≡ n (mod 2) is violated (g={g}, n={n})")
        if g < n + 2:
            raise ValidationError(f"g >= n + 2 is violated (g={g}, n={n})")
        if (g - 3 * n) // 2 + 1 < 0:
            raise ValidationError(f"(g - 3n)/2 + 1 >= 0 is violated (g={g}, n={n})")

    @property
    def half_sum(self) -> int:
        """(g + n)/2"""
        return (self.g + self.n) // 2

    @property
    def half_diff(self) -> int:
        """(g - n)/2"""
        return (self.g - self.n) // 2


class BaseLocus(str, enum.Enum):
    NONE = "NONE"
    DIRECTRIX = "DIRECTRIX"
    ALL = "ALL"


@dataclass(frozen=True)
class RestrictedH0:
    h0: int
    base_locus: BaseLocus


def intersect(n: int, A: SurfaceClass, B: SurfaceClass) -> int:
    if n < 0:
        raise ValidationError("n must be non-negative")
    return A.ell * B.em + B.ell * A.em - n * A.ell * B.ell


def curve_class(md: MaroniDatum) -> SurfaceClass:
    return SurfaceClass(3, (md.g + 3 * md.n) // 2 + 1)


def canonical_class(md: MaroniDatum) -> SurfaceClass:
    """The class on F_n restricting to the canonical divisor of C."""
    return SurfaceClass(1, md.half_sum - 1)


def directrix_points(md: MaroniDatum) -> int:
    """Number of points of ``E ∩ C`` (distinct and reduced only for general C)."""
    return (md.g - 3 * md.n) // 2 + 1


def _pushforward_twists(n: int, ell: int, em: int) -> list[int]:
    # pi_* O(ell E + em F) = sum_{i=0}^{ell} O(em - i n)
    if ell < 0:
        raise OutOfRangeError(f"ell must be non-negative (got {ell})")
    if n < 0:
        raise ValidationError("n must be non-negative")
    return [em - i * n for i in range(ell + 1)]


def h0_surface(n: int, ell: int, em: int) -> int:
    return sum(max(0, t + 1) for t in _pushforward_twists(n, ell, em))


def h1_surface(n: int, ell: int, em: int) -> int:
    return sum(max(0, -t - 1) for t in _pushforward_twists(n, ell, em))


def restricted_h0(md: MaroniDatum, alpha: int) -> RestrictedH0:
    """``h^0(C, O_C(E + alpha F))`` and its base locus, for ``alpha <= (g+n)/2``."""
    if alpha > md.half_sum:
        raise OutOfRangeError(
            f"alpha <= (g+n)/2 = {md.half_sum} is required (got alpha={alpha})"
        )
    if alpha < 0:
        return RestrictedH0(0, BaseLocus.ALL)
    if alpha < md.n:
        return RestrictedH0(alpha + 1, BaseLocus.DIRECTRIX)
    return RestrictedH0(2 * alpha - md.n + 2, BaseLocus.NONE)


def restricted_degree(md: MaroniDatum, cls: SurfaceClass) -> int:
    return intersect(md.n, cls, curve_class(md))


def canonical_degree_check(md: MaroniDatum) -> bool:
    return restricted_degree(md, canonical_class(md)) == 2 * md.g - 2
