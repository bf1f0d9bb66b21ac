"""Finite model of the pairs ``(D, D')`` with ``D + D' ~ K - (c - a - 2)H``.

For a flavor III type the open locus (both ``h^0 = 1``) breaks into pieces
indexed by which points of ``E ∩ C`` go into ``D``.  Given such a subset
``S`` the remaining degree is made up of moving fibers split 2+1 between
``D`` and ``D'``; a distribution survives iff neither side is forced to
swallow a whole fiber.  Base points are modeled as labels ``0..basePts-1``.

Nothing in this module uses the closed-form binomial sums; counts come from
walking subsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from . import hirzebruch as hz
from .errors import ContractError, ResourceError
from .theory import Flavor, TrigonalContext, alpha_of, flavor_of
from .splitting import SplittingType

MAX_BASE_POINTS = 30


@dataclass(frozen=True)
class PhiParams:
    degD: int
    degDp: int
    alpha: int
    basePts: int


@dataclass(frozen=True)
class PhiComponent:
    S: frozenset[int]
    fibersTwoInD: int
    fibersTwoInDp: int

    @property
    def dimension(self) -> int:
        return self.fibersTwoInD + self.fibersTwoInDp

    def label(self) -> str:
        return "{" + ", ".join(str(i) for i in sorted(self.S)) + "}"


def phi_params(ctx: TrigonalContext, e: SplittingType) -> PhiParams:
    if flavor_of(e) is not Flavor.III:
        raise ContractError(f"{e} is not of flavor III")
    alpha = alpha_of(ctx, e)
    a, b, c = e.entries
    g = ctx.g
    return PhiParams(
        degD=g + 2 + a + b - 2 * c,
        degDp=g + 2 + 2 * a - b - c,
        alpha=alpha,
        basePts=hz.directrix_points(ctx.md),
    )


def _fiber_split(params: PhiParams, m: int) -> tuple[int, int]:
    return (
        params.degD - m - params.alpha,
        params.degDp - (params.basePts - m) - params.alpha,
    )


def _guard(params: PhiParams) -> None:
    if params.basePts > MAX_BASE_POINTS:
        raise ResourceError(f"{params.basePts} base points exceeds the guard of {MAX_BASE_POINTS}")


def enumerate_components(params: PhiParams) -> list[PhiComponent]:
    """Every admissible base-point subset, ordered by size then lexicographically."""
    _guard(params)
    if params.alpha < 0:
        return []
    out = []
    for m in range(params.basePts + 1):
        two_in_d, two_in_dp = _fiber_split(params, m)
        if two_in_d < 0 or two_in_dp < 0:
            continue
        out.extend(
            PhiComponent(frozenset(S), two_in_d, two_in_dp)
            for S in combinations(range(params.basePts), m)
        )
    return out


def excluded_distributions(params: PhiParams) -> list[frozenset[int]]:
    """Subsets whose distribution forces a whole fiber into ``D`` or ``D'``.

    These pieces lie in the full pair space but not in the open locus; the map
    to the Picard variety contracts them.
    """
    _guard(params)
    if params.alpha < 0:
        return []
    out = []
    for m in range(params.basePts + 1):
        two_in_d, two_in_dp = _fiber_split(params, m)
        if two_in_d < 0 or two_in_dp < 0:
            out.extend(frozenset(S) for S in combinations(range(params.basePts), m))
    return out


def oracle_count(params: PhiParams) -> int:
    _guard(params)
    if params.alpha < 0:
        return 0
    count = 0
    for mask in range(1 << params.basePts):
        two_in_d, two_in_dp = _fiber_split(params, mask.bit_count())
        if two_in_d >= 0 and two_in_dp >= 0:
            count += 1
    return count


def adjacency_graph(components: list[PhiComponent]) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(comp.S for comp in components)
    present = set(graph.nodes)
    labels = frozenset().union(*present)
    for S in present:
        for x in labels:
            T = S ^ {x}
            if T in present:
                graph.add_edge(S, T)
    return graph


def is_connected(graph: nx.Graph) -> bool:
    if graph.number_of_nodes() == 0:
        return True
    return nx.is_connected(graph)
