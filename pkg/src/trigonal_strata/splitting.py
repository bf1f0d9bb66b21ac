"""Splitting types of vector bundles on the projective line.

A splitting type is a weakly increasing integer sequence ``(e_1, ..., e_k)``
standing for ``O(e_1) + ... + O(e_k)``.  Everything here is rank-agnostic;
the trigonal machinery elsewhere only ever uses rank 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable, Iterator

import networkx as nx

from .errors import IncomparableError, ValidationError


@dataclass(frozen=True)
class SplittingType:
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.entries:
            raise ValidationError("a splitting type needs at least one entry")
        if any(x > y for x, y in zip(self.entries, self.entries[1:])):
            raise ValidationError(f"entries must be weakly increasing: {self.entries}")

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __str__(self) -> str:
        return "(" + ", ".join(str(x) for x in self.entries) + ")"

    @property
    def rank(self) -> int:
        return len(self.entries)

    @property
    def total(self) -> int:
        return sum(self.entries)

    @property
    def spread(self) -> int:
        return self.entries[-1] - self.entries[0]


@dataclass(frozen=True)
class DegreeDatum:
    """Degree ``d`` of a line bundle on a genus ``g`` degree ``k`` cover."""

    d: int
    g: int
    k: int = 3

    @property
    def total(self) -> int:
        # Riemann-Roch for the pushforward
        return self.d - self.g + 1 - self.k


def make_splitting_type(raw: Iterable[int]) -> SplittingType:
    """Sort ``raw`` ascending and wrap it; raises on an empty sequence."""
    entries = tuple(sorted(int(x) for x in raw))
    if not entries:
        raise ValidationError("a splitting type needs at least one entry")
    return SplittingType(entries)


def expected_codim(e: SplittingType) -> int:
    """Return ``sum_{i<j} max(0, e_j - e_i - 1)``, i.e. ``h^1(End O(e))``."""
    es = e.entries
    return sum(
        max(0, es[j] - es[i] - 1) for i in range(len(es)) for j in range(i + 1, len(es))
    )


def h0_split(e: SplittingType) -> int:
    return sum(max(0, x + 1) for x in e)


def h1_split(e: SplittingType) -> int:
    return sum(max(0, -x - 1) for x in e)


def _check_comparable(x: SplittingType, y: SplittingType) -> None:
    if x.rank != y.rank:
        raise IncomparableError(f"rank mismatch: {x} has rank {x.rank}, {y} has rank {y.rank}")
    if x.total != y.total:
        raise IncomparableError(f"degree mismatch: {x} sums to {x.total}, {y} sums to {y.total}")


def dominance_leq(e_low: SplittingType, e_high: SplittingType) -> bool:
    """True iff ``e_low`` is a specialization of ``e_high``.

    Every prefix sum of ``e_low`` must be at most the matching prefix sum of
    ``e_high``.  Types of different rank or degree raise ``IncomparableError``.
    """
    _check_comparable(e_low, e_high)
    return all(p <= q for p, q in zip(accumulate(e_low), accumulate(e_high)))


def dominance_lt(e_low: SplittingType, e_high: SplittingType) -> bool:
    return e_low != e_high and dominance_leq(e_low, e_high)


def enumerate_types(datum: DegreeDatum, spread_bound: int | None = None) -> list[SplittingType]:
    """All rank-3 types of the datum's degree with ``e_3 - e_1 <= spread_bound``.

    The default bound ``g + 2`` covers every type whose stratum can be
    non-empty.  The result is sorted lexicographically.
    """
    if datum.k != 3:
        raise ValidationError("enumeration is implemented for rank 3 only")
    bound = datum.g + 2 if spread_bound is None else spread_bound
    if bound < 0:
        raise ValidationError("spread_bound must be non-negative")
    s = datum.total
    out = []
    # a <= s/3 <= c and c - a <= bound
    a_hi = s // 3
    for a in range(a_hi - bound, a_hi + 1):
        for b in range(a, a + bound + 1):
            c = s - a - b
            if c < b or c - a > bound:
                continue
            out.append(SplittingType((a, b, c)))
    return sorted(out, key=lambda t: t.entries)


def hasse_edges(types: Iterable[SplittingType]) -> set[tuple[SplittingType, SplittingType]]:
    """Covering pairs ``(lower, upper)`` of the dominance order on ``types``."""
    nodes = sorted(set(types), key=lambda t: t.entries)
    graph = nx.DiGraph()
    graph.add_nodes_from(nodes)
    for x in nodes:
        for y in nodes:
            if x != y and dominance_leq(x, y):
                graph.add_edge(x, y)
    return set(nx.transitive_reduction(graph).edges)
