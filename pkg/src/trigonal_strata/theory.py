"""Classification of rank-3 Brill-Noether splitting loci on a trigonal curve.

Given the genus ``g``, Maroni invariant ``n`` and degree ``d``, a splitting
type ``(a, b, c)`` with ``a + b + c = d - g - 2`` falls in one of three
flavors:

* I   -- ``b - a <= 1``: one vanishing condition, closure is ``W^0`` of some degree.
* II  -- ``c - b <= 1`` (and not I): the Serre-dual single condition.
* III -- both gaps at least 2: two conditions, governed by the integer
  ``alpha = (g + n)/2 + 1 - c + a``.

Flavor I/II closures are irreducible of the expected dimension for every
curve.  Flavor III strata depend on ``alpha`` relative to ``n``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from math import comb
from typing import Iterable

from . import hirzebruch as hz
from .errors import ConsistencyError, ContractError, NotApplicableError, ValidationError
from .splitting import SplittingType, dominance_lt, expected_codim, make_splitting_type


class Flavor(str, enum.Enum):
    I = "I"
    II = "II"
    III = "III"


class ClosureStatus(str, enum.Enum):
    EMPTY = "EMPTY"
    POINT = "POINT"
    IRREDUCIBLE = "IRREDUCIBLE"
    UNKNOWN = "UNKNOWN"


class OpenStatus(str, enum.Enum):
    EMPTY = "EMPTY"
    FINITE = "FINITE"
    IRREDUCIBLE = "IRREDUCIBLE"
    CONNECTED_REDUCIBLE = "CONNECTED_REDUCIBLE"
    UNKNOWN = "UNKNOWN"


NONEMPTY_OPEN = frozenset({OpenStatus.FINITE, OpenStatus.IRREDUCIBLE, OpenStatus.CONNECTED_REDUCIBLE})


class Generality(str, enum.Enum):
    ALL_CURVES = "ALL_CURVES"
    GENERAL_MARONI_N = "GENERAL_MARONI_N"


@dataclass(frozen=True)
class TrigonalContext:
    md: hz.MaroniDatum
    d: int
    general_curve: bool = True
    char_zero: bool = True

    def __post_init__(self) -> None:
        if not self.char_zero:
            raise ValidationError("only characteristic zero is supported")

    @classmethod
    def of(cls, g: int, n: int, d: int, general_curve: bool = True) -> TrigonalContext:
        return cls(hz.MaroniDatum(g, n), d, general_curve)

    @property
    def g(self) -> int:
        return self.md.g

    @property
    def n(self) -> int:
        return self.md.n

    @property
    def stratum_total(self) -> int:
        return self.d - self.g - 2


@dataclass(frozen=True)
class ClassCoefficient:
    """The class ``multiplier * theta^theta_power / theta_power!``."""

    multiplier: int
    theta_power: int


@dataclass(frozen=True)
class StratumReport:
    e: SplittingType
    flavor: Flavor
    alpha: int | None
    expected_codim: int
    expected_dim: int
    closure_status: ClosureStatus
    closure_dim: int | None
    open_status: OpenStatus
    open_dim: int | None
    component_count: int | None
    point_count: int | None
    generality_qualifier: Generality
    anomalous: bool
    class_coefficient: ClassCoefficient | None = None
    witness: SplittingType | None = None

    @property
    def dimension(self) -> int | None:
        """Actual dimension of the stratum, when known to be non-empty.

        For flavor I/II strata with undetermined open part this is the
        dimension of the closure.
        """
        if self.open_status in NONEMPTY_OPEN:
            return self.open_dim
        if self.open_status is OpenStatus.UNKNOWN:
            return self.closure_dim
        return None

    @property
    def rank(self) -> int:
        dim = self.dimension
        return self.expected_dim if dim is None else dim

    @property
    def closure_nonempty(self) -> bool:
        return self.closure_status is not ClosureStatus.EMPTY

    @property
    def displayed(self) -> bool:
        """Whether the stratum belongs in a default (non-empty) listing."""
        return self.dimension is not None or self.anomalous


@dataclass(frozen=True)
class BNLocusReport:
    g: int
    d: int
    r: int
    rho: int
    components: list[tuple[SplittingType, int]]


def flavor_of(e: SplittingType) -> Flavor:
    a, b, c = _abc(e)
    if b - a <= 1:
        return Flavor.I
    if c - b <= 1:
        return Flavor.II
    return Flavor.III


def _abc(e: SplittingType) -> tuple[int, int, int]:
    if e.rank != 3:
        raise ContractError(f"rank-3 splitting type required, got {e}")
    return e.entries  # type: ignore[return-value]


def _check(ctx: TrigonalContext, e: SplittingType) -> tuple[int, int, int]:
    a, b, c = _abc(e)
    if a + b + c != ctx.stratum_total:
        raise ValidationError(
            f"{e} sums to {a + b + c}, but degree {ctx.d} in genus {ctx.g} "
            f"requires sum d - g - 2 = {ctx.stratum_total}"
        )
    return a, b, c


def alpha_of(ctx: TrigonalContext, e: SplittingType) -> int:
    a, _, c = _check(ctx, e)
    return ctx.md.half_sum + 1 - c + a


def _gaps_fit(ctx: TrigonalContext, e: SplittingType) -> bool:
    a, b, c = e.entries
    bound = 1 + ctx.md.half_diff
    return c - b <= bound and b - a <= bound


def _small_alpha_regime(ctx: TrigonalContext, e: SplittingType) -> int:
    if flavor_of(e) is not Flavor.III:
        raise ContractError(f"{e} is not of flavor III")
    alpha = alpha_of(ctx, e)
    if not 0 <= alpha <= ctx.n - 1:
        raise ContractError(f"alpha = {alpha} is outside 0 <= alpha <= n - 1 = {ctx.n - 1}")
    if not _gaps_fit(ctx, e):
        raise ContractError(f"the stratum of {e} is empty")
    return alpha


def m_window(ctx: TrigonalContext, e: SplittingType) -> tuple[int, int]:
    """Inclusive range of base-point counts placed in ``D``."""
    a, b, c = e.entries
    return max(0, b - a - ctx.n), ctx.md.half_diff + 1 + b - c


def component_count(ctx: TrigonalContext, e: SplittingType) -> int:
    """Number of irreducible components for ``0 <= alpha <= n - 1``, general C."""
    _small_alpha_regime(ctx, e)
    lo, hi = m_window(ctx, e)
    base = hz.directrix_points(ctx.md)
    return sum(comb(base, m) for m in range(lo, hi + 1))


def point_count(ctx: TrigonalContext, e: SplittingType) -> int:
    alpha = _small_alpha_regime(ctx, e)
    if alpha != 0:
        raise ContractError(f"point count needs alpha = 0, got alpha = {alpha}")
    if not ctx.general_curve:
        raise ContractError(
            "the point count is only established for a general curve of the given "
            "Maroni invariant; E ∩ C may be non-reduced on this curve"
        )
    a, b, c = e.entries
    return comb(c - a - 2 * ctx.n, b - a - ctx.n)


def class_coefficient(e: SplittingType) -> ClassCoefficient:
    a, b, c = _abc(e)
    u = expected_codim(e)
    if flavor_of(e) is Flavor.III:
        return ClassCoefficient(comb(c - a - 2, b - a - 1), u)
    return ClassCoefficient(1, u)


def class_coefficient_checked(ctx: TrigonalContext, e: SplittingType) -> ClassCoefficient:
    report = classify(ctx, e)
    if report.anomalous:
        raise NotApplicableError(
            f"{e} does not have the expected dimension on this curve; "
            "the class formula only holds in the expected codimension"
        )
    return class_coefficient(e)


def _is_anomalous(expected_dim: int, open_status: OpenStatus, open_dim: int | None) -> bool:
    if open_status in NONEMPTY_OPEN:
        return open_dim != expected_dim
    if open_status is OpenStatus.EMPTY:
        return expected_dim >= 0
    return False


def classify(ctx: TrigonalContext, e: SplittingType) -> StratumReport:
    a, b, c = _check(ctx, e)
    flavor = flavor_of(e)
    u = expected_codim(e)
    exp_dim = ctx.g - u
    alpha = None
    closure_status, closure_dim = ClosureStatus.EMPTY, None
    open_status, open_dim = OpenStatus.EMPTY, None
    components = points = None
    generality = Generality.ALL_CURVES

    if flavor is not Flavor.III:
        if exp_dim > 0:
            closure_status, closure_dim = ClosureStatus.IRREDUCIBLE, exp_dim
        elif exp_dim == 0:
            closure_status, closure_dim = ClosureStatus.POINT, 0
        if closure_status is not ClosureStatus.EMPTY:
            open_status = OpenStatus.UNKNOWN
    else:
        alpha = ctx.md.half_sum + 1 - c + a
        n = ctx.n
        if alpha >= n:
            open_status, open_dim = OpenStatus.IRREDUCIBLE, 2 * alpha - n + 1
            closure_status, closure_dim = ClosureStatus.IRREDUCIBLE, open_dim
            components = 1
        elif alpha >= 0 and _gaps_fit(ctx, e):
            generality = Generality.GENERAL_MARONI_N
            closure_status, closure_dim = ClosureStatus.UNKNOWN, alpha
            open_dim = alpha
            lo, hi = m_window(ctx, e)
            count = sum(comb(hz.directrix_points(ctx.md), m) for m in range(lo, hi + 1))
            if alpha == 0:
                open_status = OpenStatus.FINITE
                if ctx.general_curve:
                    points = count
            else:
                open_status = OpenStatus.CONNECTED_REDUCIBLE if count > 1 else OpenStatus.IRREDUCIBLE
                if ctx.general_curve:
                    components = count
        elif alpha >= 0 and min(ctx.g + 2 + a + b - 2 * c, ctx.g + 2 + 2 * a - b - c) >= 0:
            # pairs exist, but each one puts a whole fiber on one side
            closure_status = ClosureStatus.UNKNOWN

    anomalous = _is_anomalous(exp_dim, open_status, open_dim)
    cls = class_coefficient(e) if not anomalous and exp_dim >= 0 else None
    return StratumReport(
        e=e,
        flavor=flavor,
        alpha=alpha,
        expected_codim=u,
        expected_dim=exp_dim,
        closure_status=closure_status,
        closure_dim=closure_dim,
        open_status=open_status,
        open_dim=open_dim,
        component_count=components,
        point_count=points,
        generality_qualifier=generality,
        anomalous=anomalous,
        class_coefficient=cls,
    )


def deduce_empty_open(ctx: TrigonalContext, reports: Iterable[StratumReport]) -> list[StratumReport]:
    """Mark open strata empty when a smaller stratum already fills the closure.

    If the closure of ``e`` is irreducible of dimension ``D`` and some
    ``e' < e`` has a certified non-empty stratum of dimension at least ``D``,
    that stratum is dense in the closure, so the open stratum of ``e`` is
    empty.  Only flavor III classifications count as certified witnesses.
    """
    snapshot = sorted(reports, key=lambda r: r.e.entries)
    witnesses = [r for r in snapshot if r.open_status in NONEMPTY_OPEN]
    out = []
    for r in snapshot:
        if r.closure_status in (ClosureStatus.POINT, ClosureStatus.IRREDUCIBLE) and r.open_status in (
            OpenStatus.UNKNOWN,
            OpenStatus.IRREDUCIBLE,
        ):
            hits = [w for w in witnesses if w.open_dim >= r.closure_dim and dominance_lt(w.e, r.e)]
            if hits:
                if r.open_status is OpenStatus.IRREDUCIBLE:
                    raise ConsistencyError(
                        f"{hits[0].e} would fill the closure of {r.e}, whose open stratum "
                        "is known to be non-empty"
                    )
                witness = max(hits, key=lambda w: (w.open_dim, [-x for x in w.e.entries]))
                r = replace(
                    r,
                    open_status=OpenStatus.EMPTY,
                    open_dim=None,
                    anomalous=_is_anomalous(r.expected_dim, OpenStatus.EMPTY, None),
                    witness=witness.e,
                )
        out.append(r)
    return out


def bn_components(g: int, d: int, r: int) -> BNLocusReport:
    """Components of ``W^r_d`` on any trigonal curve, with their splitting types."""
    if g < 0:
        raise ValidationError(f"genus must be non-negative (got {g})")
    if r < 1:
        raise ValidationError(f"r >= 1 is required (got r={r})")
    if g - d + r < 1:
        raise ValidationError(f"g - d + r >= 1 is required (got {g - d + r})")
    rho = g - (r + 1) * (g - d + r)
    first = make_splitting_type((d - g - 1 - r, (r - 1) // 2, -(-(r - 1) // 2)))
    comps = [(first, rho + (r - 1) * (g - d + r - 1))]
    if r >= d - g + 2:
        s = d - g - 2 - r
        second = make_splitting_type((s // 2, -(-s // 2), r))
        comps.append((second, rho + r * (g - d + r - 2)))
    for e, dim in comps:
        if dim != g - expected_codim(e):
            raise ConsistencyError(f"dimension {dim} of {e} disagrees with g - u = {g - expected_codim(e)}")
    return BNLocusReport(g, d, r, rho, comps)
