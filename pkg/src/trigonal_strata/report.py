"""Full stratification of Pic^d, Hasse diagrams, and the JSON/text/DOT emitters."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Any

from . import hirzebruch as hz
from . import phi
from .errors import ConsistencyError
from .splitting import DegreeDatum, SplittingType, enumerate_types, hasse_edges
from .theory import (
    ClassCoefficient,
    ClosureStatus,
    Flavor,
    Generality,
    OpenStatus,
    StratumReport,
    TrigonalContext,
    classify,
    deduce_empty_open,
)

SCHEMA_VERSION = "v1"


class Color(str, enum.Enum):
    BLACK = "BLACK"
    BLUE = "BLUE"
    RED = "RED"
    GREY = "GREY"


DOT_COLORS = {Color.BLACK: "black", Color.BLUE: "blue", Color.RED: "red", Color.GREY: "gray60"}


@dataclass(frozen=True)
class NodeAnnotation:
    e: SplittingType
    color: Color
    rank: int
    ghost: bool = False


@dataclass
class Stratification:
    ctx: TrigonalContext
    strata: list[StratumReport]
    edges: list[tuple[SplittingType, SplittingType]] = field(default_factory=list)


@dataclass
class HasseDiagram:
    nodes: list[StratumReport]
    edges: list[tuple[SplittingType, SplittingType]]
    annotations: list[NodeAnnotation]


def _stratum_key(r: StratumReport) -> tuple:
    return (-r.rank, r.e.entries)


def _edge_key(edge: tuple[SplittingType, SplittingType]) -> tuple:
    return (edge[0].entries, edge[1].entries)


def stratify(ctx: TrigonalContext, spread_bound: int | None = None) -> Stratification:
    """Classify every type in the degree-``d`` universe and attach covering edges."""
    universe = enumerate_types(DegreeDatum(ctx.d, ctx.g), spread_bound)
    reports = deduce_empty_open(ctx, [classify(ctx, e) for e in universe])
    edges = sorted(hasse_edges(universe), key=_edge_key)
    return Stratification(ctx, sorted(reports, key=_stratum_key), edges)


def select(
    strat: Stratification,
    include_empty: bool = False,
    min_dim: int | None = None,
    max_dim: int | None = None,
) -> Stratification:
    keep = []
    for r in strat.strata:
        if not include_empty and not r.displayed:
            continue
        if min_dim is not None and r.rank < min_dim:
            continue
        if max_dim is not None and r.rank > max_dim:
            continue
        keep.append(r)
    kept = {r.e for r in keep}
    edges = [(x, y) for x, y in strat.edges if x in kept and y in kept]
    return Stratification(strat.ctx, keep, edges)


def check_consistency(strat: Stratification) -> None:
    """Recompute what can be recomputed by a second route; raise on mismatch."""
    ctx = strat.ctx
    if not hz.canonical_degree_check(ctx.md):
        raise ConsistencyError(f"canonical degree check failed for g={ctx.g}, n={ctx.n}")
    for r in strat.strata:
        if r.flavor is not Flavor.III or r.open_status not in (
            OpenStatus.FINITE,
            OpenStatus.IRREDUCIBLE,
            OpenStatus.CONNECTED_REDUCIBLE,
        ):
            continue
        h0 = hz.restricted_h0(ctx.md, r.alpha).h0
        if h0 - 1 != r.open_dim:
            raise ConsistencyError(f"{r.e}: dimension {r.open_dim} but h^0 - 1 = {h0 - 1}")
        if r.alpha >= ctx.n:
            continue
        params = phi.phi_params(ctx, r.e)
        if params.basePts > phi.MAX_BASE_POINTS:
            continue
        oracle = phi.oracle_count(params)
        count = r.point_count if r.alpha == 0 else r.component_count
        if count is not None and count != oracle:
            raise ConsistencyError(f"{r.e}: formula count {count} but oracle count {oracle}")


def color_of(r: StratumReport) -> Color:
    if r.anomalous:
        return Color.RED
    if r.dimension is None:
        return Color.GREY
    if r.open_status is OpenStatus.CONNECTED_REDUCIBLE:
        return Color.BLUE
    return Color.BLACK


def build_diagram(strat: Stratification) -> HasseDiagram:
    notes = []
    for r in strat.strata:
        color = color_of(r)
        notes.append(NodeAnnotation(r.e, color, r.rank))
        if color is Color.RED and r.dimension is not None and r.dimension != r.expected_dim:
            notes.append(NodeAnnotation(r.e, Color.GREY, r.expected_dim, ghost=True))
    return HasseDiagram(list(strat.strata), list(strat.edges), notes)


# -- JSON -------------------------------------------------------------------


def stratum_to_dict(r: StratumReport) -> dict[str, Any]:
    out: dict[str, Any] = {"type": list(r.e.entries), "flavor": r.flavor.value}
    if r.alpha is not None:
        out["alpha"] = r.alpha
    out["expected_codim"] = r.expected_codim
    out["expected_dim"] = r.expected_dim
    closure: dict[str, Any] = {"status": r.closure_status.value}
    if r.closure_dim is not None:
        closure["dim"] = r.closure_dim
    out["closure"] = closure
    opn: dict[str, Any] = {"status": r.open_status.value}
    if r.open_dim is not None:
        opn["dim"] = r.open_dim
    if r.component_count is not None:
        opn["components"] = r.component_count
    if r.point_count is not None:
        opn["points"] = r.point_count
    opn["generality"] = r.generality_qualifier.value
    if r.witness is not None:
        opn["witness"] = list(r.witness.entries)
    out["open"] = opn
    out["anomalous"] = r.anomalous
    if r.class_coefficient is not None:
        out["class"] = {
            "multiplier": r.class_coefficient.multiplier,
            "theta_power": r.class_coefficient.theta_power,
        }
    out["display"] = {"color": color_of(r).value, "rank": r.rank}
    return out


def stratum_from_dict(data: dict[str, Any]) -> StratumReport:
    closure, opn = data["closure"], data["open"]
    cls = data.get("class")
    witness = opn.get("witness")
    return StratumReport(
        e=SplittingType(tuple(data["type"])),
        flavor=Flavor(data["flavor"]),
        alpha=data.get("alpha"),
        expected_codim=data["expected_codim"],
        expected_dim=data["expected_dim"],
        closure_status=ClosureStatus(closure["status"]),
        closure_dim=closure.get("dim"),
        open_status=OpenStatus(opn["status"]),
        open_dim=opn.get("dim"),
        component_count=opn.get("components"),
        point_count=opn.get("points"),
        generality_qualifier=Generality(opn["generality"]),
        anomalous=data["anomalous"],
        class_coefficient=ClassCoefficient(cls["multiplier"], cls["theta_power"]) if cls else None,
        witness=SplittingType(tuple(witness)) if witness is not None else None,
    )


def to_dict(strat: Stratification) -> dict[str, Any]:
    ctx = strat.ctx
    return {
        "version": SCHEMA_VERSION,
        "context": {
            "genus": ctx.g,
            "maroni": ctx.n,
            "degree": ctx.d,
            "general_curve": ctx.general_curve,
        },
        "strata": [stratum_to_dict(r) for r in strat.strata],
        "edges": [[list(x.entries), list(y.entries)] for x, y in strat.edges],
    }


def from_dict(data: dict[str, Any]) -> Stratification:
    if data.get("version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema version {data.get('version')!r}")
    c = data["context"]
    ctx = TrigonalContext.of(c["genus"], c["maroni"], c["degree"], c["general_curve"])
    strata = [stratum_from_dict(s) for s in data["strata"]]
    edges = [(SplittingType(tuple(x)), SplittingType(tuple(y))) for x, y in data["edges"]]
    return Stratification(ctx, strata, edges)


def emit_json(strat: Stratification) -> str:
    return json.dumps(to_dict(strat), indent=2) + "\n"


def parse_json(text: str) -> Stratification:
    return from_dict(json.loads(text))


# -- text -------------------------------------------------------------------


def _opt(x: object) -> str:
    return "-" if x is None else str(x)


def emit_text(strat: Stratification) -> str:
    ctx = strat.ctx
    lines = [
        f"genus {ctx.g}, Maroni invariant {ctx.n}, degree {ctx.d} "
        f"(splitting types sum to {ctx.stratum_total})",
        "",
    ]
    header = ("type", "flavor", "alpha", "u", "exp.dim", "closure", "open", "dim", "comps", "points", "color")
    rows = [header]
    for r in strat.strata:
        closure = r.closure_status.value + ("" if r.closure_dim is None else f"({r.closure_dim})")
        opn = r.open_status.value
        if r.witness is not None:
            opn += f" < {r.witness}"
        rows.append(
            (
                str(r.e),
                r.flavor.value,
                _opt(r.alpha),
                str(r.expected_codim),
                str(r.expected_dim),
                closure,
                opn,
                _opt(r.dimension),
                _opt(r.component_count),
                _opt(r.point_count),
                color_of(r).value,
            )
        )
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    for row in rows:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    if strat.edges:
        lines.append("")
        lines.append("covering relations (smaller -> larger):")
    for x, y in strat.edges:
        lines.append(f"  {x} -> {y}")
    return "\n".join(lines) + "\n"


# -- DOT --------------------------------------------------------------------


def _node_id(note: NodeAnnotation) -> str:
    body = ",".join(str(x) for x in note.e.entries)
    return f'"ghost:{body}"' if note.ghost else f'"{body}"'


def _row_id(rank: int) -> str:
    return f'"row:{rank}"'


def emit_dot(diagram: HasseDiagram) -> str:
    lines = [
        "digraph strata {",
        "  rankdir=TB;",
        '  node [shape=plaintext, fontname="Helvetica"];',
    ]
    by_type = {r.e: r for r in diagram.nodes}
    ranks = sorted({note.rank for note in diagram.annotations})
    for rank in ranks:
        lines.append(f'  {_row_id(rank)} [label="dim {rank}", fontcolor=gray40];')
    for lo, hi in zip(ranks, ranks[1:]):
        lines.append(f"  {_row_id(lo)} -> {_row_id(hi)} [style=invis];")
    for note in diagram.annotations:
        label = str(note.e)
        r = by_type[note.e]
        if not note.ghost and r.open_status is OpenStatus.EMPTY and r.anomalous:
            label = "∅ = " + label
        color = DOT_COLORS[note.color]
        lines.append(f'  {_node_id(note)} [label="{label}", color={color}, fontcolor={color}];')
    for rank in ranks:
        members = "; ".join(_node_id(n) for n in diagram.annotations if n.rank == rank)
        lines.append(f"  {{ rank=same; {_row_id(rank)}; {members}; }}")
    for x, y in diagram.edges:
        lines.append(f'  "{",".join(map(str, x.entries))}" -> "{",".join(map(str, y.entries))}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
