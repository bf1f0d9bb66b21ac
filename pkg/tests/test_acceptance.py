"""Acceptance suite: one PASS/FAIL line per criterion.

Run under pytest (the lines are repeated in the terminal summary) or
directly with ``python3 tests/test_acceptance.py``.
"""

import io
import sys
from contextlib import redirect_stdout
from itertools import product
from math import comb
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import EXAMPLE_ARROWS, EXAMPLE_DIMS, T  # noqa: E402
from trigonal_strata import hirzebruch as hz  # noqa: E402
from trigonal_strata import phi, report  # noqa: E402
from trigonal_strata.checks import flavor_three_cases, maroni_data, oracle_sweep  # noqa: E402
from trigonal_strata.cli import main  # noqa: E402
from trigonal_strata.splitting import DegreeDatum, enumerate_types, expected_codim, hasse_edges  # noqa: E402
from trigonal_strata.theory import (  # noqa: E402
    OpenStatus,
    TrigonalContext,
    alpha_of,
    bn_components,
    class_coefficient,
    classify,
    deduce_empty_open,
    point_count,
)

RESULTS = []


def record(name, failures):
    line = f"{'PASS' if not failures else 'FAIL'}  {name}"
    if failures:
        line += f"  ({len(failures)} failing, first: {failures[0]})"
    RESULTS.append(line)
    print(line)
    return failures


def expect(failures, cond, what):
    if not cond:
        failures.append(what)


def golden_example():
    fails = []
    strat = report.stratify(TrigonalContext.of(11, 3, 0))
    by_type = {r.e.entries: r for r in strat.strata}
    drawn = {
        (-8, -5, 0): 0, (-8, -4, -1): 1, (-7, -5, -1): 2, (-8, -3, -2): 2,
        (-6, -6, -1): 3, (-7, -4, -2): 4, (-7, -3, -3): 5, (-6, -5, -2): 6,
    }
    for e, dim in drawn.items():
        expect(fails, by_type[e].dimension == dim, f"{e}: dim {by_type[e].dimension} != {dim}")
    finite = by_type[(-8, -5, 0)]
    expect(fails, (finite.open_status, finite.point_count) == (OpenStatus.FINITE, 1), "(-8,-5,0) not one point")
    expect(fails, by_type[(-8, -4, -1)].component_count == 3, "(-8,-4,-1) components")
    expect(fails, by_type[(-7, -5, -1)].component_count == 3, "(-7,-5,-1) components")
    expect(fails, by_type[(-7, -6, 0)].open_status is OpenStatus.EMPTY, "(-7,-6,0) open not deduced EMPTY")

    diagram = report.build_diagram(report.select(strat, max_dim=6))
    colors = {n.e.entries: n.color for n in diagram.annotations if not n.ghost}
    expect(fails, colors[(-8, -4, -1)] is report.Color.RED, "(-8,-4,-1) not RED")
    expect(fails, colors[(-7, -5, -1)] is report.Color.BLUE, "(-7,-5,-1) not BLUE")
    expect(fails, set(colors) == set(EXAMPLE_DIMS), f"displayed nodes {sorted(colors)}")
    arrows = {(x.entries, y.entries) for x, y in diagram.edges}
    expect(fails, arrows == EXAMPLE_ARROWS, f"arrows differ by {arrows ^ EXAMPLE_ARROWS}")
    return fails


def codim_identity():
    fails = []
    for a, b, c in product(range(-15, 16), repeat=3):
        if a <= b <= c and b - a <= 1:
            u = expected_codim(T(a, b, c))
            expect(fails, u == 2 * c - a - b - 2, f"({a},{b},{c}): u={u} vs 2c-a-b-2={2 * c - a - b - 2}")
    # anomalous nodes sit at their actual dimension, their ghost at g - u
    strat = report.select(report.stratify(TrigonalContext.of(11, 3, 0)), max_dim=6)
    rows = {}
    for note in report.build_diagram(strat).annotations:
        if note.ghost or note.e not in rows:
            rows[note.e] = note.rank
    for e in EXAMPLE_DIMS:
        expected = rows[T(*e)]
        expect(fails, 11 - expected_codim(T(*e)) == expected, f"{e}: g - u != {expected}")
    return fails


def theorem_sweep():
    fails = []
    for md in maroni_data(30):
        lim = 1 + md.half_diff
        for ctx, e in flavor_three_cases(md):
            alpha = alpha_of(ctx, e)
            a, b, c = e
            tag = f"g={md.g} n={md.n} {e}"
            if alpha >= md.n:
                expect(fails, 2 * alpha - md.n + 1 == md.g - expected_codim(e), tag)
            elif alpha >= 0:
                gaps = c - b <= lim and b - a <= lim
                p = phi.phi_params(ctx, e)
                degs = p.degD >= alpha and p.degDp >= alpha
                nonempty = classify(ctx, e).open_status is not OpenStatus.EMPTY
                expect(fails, nonempty == gaps == degs, tag)
    return fails


def oracle_equivalence():
    res = oracle_sweep(30)
    return res.failures if res.cases else ["empty sweep"]


def counts_and_classes():
    fails = []
    expect(fails, point_count(TrigonalContext.of(11, 3, 0), T(-8, -5, 0)) == 1, "g=11 point count")
    ctx5 = TrigonalContext.of(5, 1, 13)
    expect(fails, point_count(ctx5, T(0, 2, 4)) == 2, "g=5 point count")
    expect(fails, phi.oracle_count(phi.phi_params(ctx5, T(0, 2, 4))) == 2, "g=5 oracle count")
    for e in (T(-6, -5, -2), T(0, 1, 7), T(-3, -2, 10)):
        expect(fails, class_coefficient(e).multiplier == 1, f"flavor I multiplier {e}")
    cc = class_coefficient(T(-8, -4, -1))
    expect(fails, (cc.multiplier, cc.theta_power) == (10, 11), f"(-8,-4,-1) -> {cc}")
    for md in maroni_data(30):
        for _, (a, b, c) in flavor_three_cases(md):
            expect(fails, comb(c - a - 2, b - a - 1) == comb(c - a - 2, c - b - 1), f"dual swap ({a},{b},{c})")
            expect(fails, class_coefficient(T(a, b, c)) == class_coefficient(T(-c, -b, -a)), f"dual ({a},{b},{c})")
    return fails


def brill_noether():
    fails = []
    rep = bn_components(6, 4, 1)
    expect(fails, rep.components == [(T(-4, 0, 0), 0), (T(-3, -2, 1), 1)], f"(6,4,1) -> {rep.components}")
    for g in range(0, 21):
        for d in range(0, 2 * g + 1):
            for r in range(1, d + 1):
                if g - d + r < 1:
                    continue
                rho = g - (r + 1) * (g - d + r)
                rep = bn_components(g, d, r)
                want = [rho + (r - 1) * (g - d + r - 1)]
                if r >= d - g + 2:
                    want.append(rho + r * (g - d + r - 2))
                got = [dim for _, dim in rep.components]
                expect(fails, got == want, f"({g},{d},{r}) dims {got} != {want}")
                for e, dim in rep.components:
                    expect(fails, e.total == d - g - 2 and dim == g - expected_codim(e), f"({g},{d},{r}) {e}")
    return fails


def low_maroni():
    fails = []
    for md in maroni_data(30):
        if md.n > 1:
            continue
        for d in range(3):
            ctx = TrigonalContext(md, d)
            rows = deduce_empty_open(ctx, [classify(ctx, e) for e in enumerate_types(DegreeDatum(d, md.g))])
            for r in rows:
                tag = f"g={md.g} n={md.n} {r.e}"
                if r.open_dim is not None:
                    expect(fails, r.open_dim == r.expected_dim, f"{tag}: dim {r.open_dim}")
                    if r.open_dim > 0:
                        expect(fails, r.component_count == 1, f"{tag}: {r.component_count} components")
                if r.open_status in (OpenStatus.UNKNOWN, OpenStatus.IRREDUCIBLE) and r.closure_dim is not None:
                    expect(fails, r.closure_dim == r.expected_dim, f"{tag}: closure dim")
    return fails


def hirzebruch_checks():
    fails = []
    for md in maroni_data(50):
        expect(fails, hz.canonical_degree_check(md), f"canonical degree {md}")
        pts = hz.intersect(md.n, hz.curve_class(md), hz.E)
        expect(fails, hz.directrix_points(md) == pts, f"directrix {md}")
        for alpha in range(0, md.half_sum + 1):
            deg = hz.restricted_degree(md, hz.SurfaceClass(1, alpha))
            expect(fails, deg == (md.g - 3 * md.n) // 2 + 1 + 3 * alpha, f"restricted degree {md} alpha={alpha}")
    for n, ell in product(range(0, 8), range(0, 8)):
        for em in range(ell * n, ell * n + 15):
            expect(fails, hz.h1_surface(n, ell, em) == 0, f"h1({n},{ell},{em})")
    return fails


def cli_round_trip():
    fails = []
    for fmt in ("json", "text", "dot"):
        outs = []
        for _ in range(2):
            buf = io.StringIO()
            with redirect_stdout(buf):
                code = main(["report", "-g", "11", "-n", "3", "-d", "0", "--format", fmt])
            expect(fails, code == 0, f"{fmt} exit {code}")
            outs.append(buf.getvalue().encode())
        expect(fails, outs[0] == outs[1] and outs[0], f"{fmt} output not byte-identical")
    strat = report.stratify(TrigonalContext.of(11, 3, 0))
    text = report.emit_json(strat)
    again = report.parse_json(text)
    expect(fails, again == strat, "parse(emit(report)) != report")
    expect(fails, report.emit_json(again) == text, "emit(parse(text)) != text")
    expect(fails, set(again.edges) <= hasse_edges(enumerate_types(DegreeDatum(0, 11))), "edges not covers")
    return fails


CRITERIA = [
    ("1 golden example g=11 n=3 d=0", golden_example),
    ("2 codimension identity for b - a <= 1 and example dims = g - u", codim_identity),
    ("3 theorem identities for g <= 30", theorem_sweep),
    ("4 subset oracle equals binomial count", oracle_equivalence),
    ("5 point counts and class coefficients", counts_and_classes),
    ("6 Brill-Noether components", brill_noether),
    ("7 Maroni-general sanity for n in {0, 1}", low_maroni),
    ("8 Hirzebruch self-tests for g <= 50", hirzebruch_checks),
    ("9 CLI determinism and JSON round trip", cli_round_trip),
]


@pytest.mark.parametrize("name, check", CRITERIA, ids=[name.split()[0] for name, _ in CRITERIA])
def test_criterion(name, check):
    failures = record(name, check())
    assert not failures, failures[:5]


if __name__ == "__main__":
    bad = sum(bool(record(name, check())) for name, check in CRITERIA)
    sys.exit(1 if bad else 0)
