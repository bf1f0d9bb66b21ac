"""Parameter sweeps pitting the closed-form counts against the subset oracle."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterator

from . import hirzebruch as hz
from . import phi
from .errors import ValidationError
from .splitting import SplittingType, expected_codim
from .theory import OpenStatus, TrigonalContext, classify, m_window, point_count


@dataclass
class SweepResult:
    passed: int = 0
    failures: list[str] = field(default_factory=list)
    cases: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, cond: bool, what: str) -> None:
        if cond:
            self.passed += 1
        else:
            self.failures.append(what)


def maroni_data(max_genus: int, min_genus: int = 2) -> Iterator[hz.MaroniDatum]:
    for g in range(min_genus, max_genus + 1):
        for n in range(g % 2, g + 1, 2):
            try:
                yield hz.MaroniDatum(g, n)
            except ValidationError:
                continue


def flavor_three_cases(md: hz.MaroniDatum) -> Iterator[tuple[TrigonalContext, SplittingType]]:
    """Every flavor III type up to translation, normalized to ``a = 0``.

    Translating ``(a, b, c)`` by ``t`` moves ``d`` by ``3t`` and changes
    nothing else, so ``a = 0`` loses no generality.
    """
    for p in range(2, md.g + 1):
        for q in range(2, md.g + 3 - p):
            e = SplittingType((0, p, p + q))
            yield TrigonalContext(md, d=e.total + md.g + 2), e


def _window_sum(ctx: TrigonalContext, e: SplittingType, fault: bool) -> int:
    lo, hi = m_window(ctx, e)
    if fault:
        hi += 1
    base = hz.directrix_points(ctx.md)
    return sum(comb(base, m) for m in range(lo, hi + 1))


def oracle_sweep(max_genus: int = 20, inject_fault: bool = False) -> SweepResult:
    """Cross-check every flavor III stratum with ``g <= max_genus``.

    ``inject_fault`` widens the base-point window by one so that the harness
    can be shown to detect a broken formula.
    """
    res = SweepResult()
    for md in maroni_data(max_genus):
        for ctx, e in flavor_three_cases(md):
            res.cases += 1
            tag = f"g={md.g} n={md.n} type={e}"
            report = classify(ctx, e)
            params = phi.phi_params(ctx, e)
            alpha = params.alpha
            res.check(
                params.degD + params.degDp == params.basePts + 3 * alpha,
                f"{tag}: degree bookkeeping",
            )
            if alpha < 0:
                res.check(phi.oracle_count(params) == 0, f"{tag}: alpha < 0 but oracle non-empty")
                res.check(report.open_status is OpenStatus.EMPTY, f"{tag}: alpha < 0 but not EMPTY")
                continue
            if alpha >= md.n:
                res.check(
                    2 * alpha - md.n + 1 == md.g - expected_codim(e),
                    f"{tag}: 2 alpha - n + 1 != g - u",
                )
                continue
            comps = phi.enumerate_components(params)
            oracle = phi.oracle_count(params)
            nonempty = report.open_status is not OpenStatus.EMPTY
            res.check(len(comps) == oracle, f"{tag}: enumeration disagrees with oracle count")
            res.check(
                nonempty == (params.degD >= alpha and params.degDp >= alpha) == (oracle > 0),
                f"{tag}: non-emptiness criteria disagree",
            )
            if not nonempty:
                continue
            res.check(_window_sum(ctx, e, inject_fault) == oracle, f"{tag}: formula != oracle ({oracle})")
            res.check(all(c.dimension == alpha for c in comps), f"{tag}: component of wrong dimension")
            if alpha >= 1:
                res.check(phi.is_connected(phi.adjacency_graph(comps)), f"{tag}: not connected")
            else:
                res.check(point_count(ctx, e) == oracle, f"{tag}: point count != oracle")
    return res
