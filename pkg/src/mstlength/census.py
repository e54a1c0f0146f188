"""Structural subgraph counting: cycles, chorded cycles, cliques, bipartite blocks.

Counts are of labeled subgraphs inside a fixed host graph: a cycle is a vertex
subset with a cyclic edge structure counted once (not per rotation or
direction); a "cycle with one chord" is a (cycle, present chord) incidence
pair; the diamond count (4-cycle plus chord) doubles as the number of 5-edge
rank-3 spanning subgraphs, which ties this module to the rank table.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import Graph


def count_cycles(g: Graph, max_len: int) -> dict[int, int]:
    """Number of cycles of each length 3..max_len.

    DFS from each start vertex s over vertices larger than s, closing back to
    s; each cycle is found exactly once by requiring the second vertex to be
    smaller than the last (fixing the direction).
    """
    if max_len < 3:
        return {}
    counts = {length: 0 for length in range(3, max_len + 1)}
    adjacency = g.adjacency

    def extend(start: int, path: list[int], on_path: set[int]) -> None:
        tail = path[-1]
        for nxt in adjacency[tail]:
            if nxt == start and len(path) >= 3 and path[1] < tail:
                counts[len(path)] += 1
            elif nxt > start and nxt not in on_path and len(path) < max_len:
                path.append(nxt)
                on_path.add(nxt)
                extend(start, path, on_path)
                on_path.remove(nxt)
                path.pop()

    for start in range(g.n):
        extend(start, [start], {start})
    return counts


def _cycles_of_length(g: Graph, length: int) -> list[tuple[int, ...]]:
    """All cycles of exactly this length, as canonical vertex sequences."""
    found: list[tuple[int, ...]] = []
    adjacency = g.adjacency

    def extend(start: int, path: list[int], on_path: set[int]) -> None:
        tail = path[-1]
        for nxt in adjacency[tail]:
            if nxt == start and len(path) == length and path[1] < tail:
                found.append(tuple(path))
            elif nxt > start and nxt not in on_path and len(path) < length:
                path.append(nxt)
                on_path.add(nxt)
                extend(start, path, on_path)
                on_path.remove(nxt)
                path.pop()

    if length >= 3:
        for start in range(g.n):
            extend(start, [start], {start})
    return found


def _chords(cycle: tuple[int, ...]) -> list[tuple[int, int]]:
    """Vertex pairs of the cycle that are not consecutive on it."""
    length = len(cycle)
    out = []
    for a in range(length):
        for b in range(a + 1, length):
            if b - a != 1 and not (a == 0 and b == length - 1):
                out.append((cycle[a], cycle[b]))
    return out


def count_chorded_cycles(g: Graph, length: int) -> int:
    """Number of (cycle of given length, present chord) incidence pairs."""
    total = 0
    for cycle in _cycles_of_length(g, length):
        total += sum(1 for u, v in _chords(cycle) if g.has_edge(u, v))
    return total


def count_chorded_cycles_plus_edge(g: Graph) -> int:
    """Triples (4-cycle, present chord, extra edge).

    The extra edge ranges over edges of g that are neither on the cycle nor a
    chord of that same cycle.
    """
    total = 0
    for cycle in _cycles_of_length(g, 4):
        present_chords = sum(1 for u, v in _chords(cycle) if g.has_edge(u, v))
        extra = g.m - 4 - present_chords
        total += present_chords * extra
    return total


def count_k4(g: Graph) -> int:
    """Number of 4-vertex subsets inducing all six edges."""
    total = 0
    for quad in combinations(range(g.n), 4):
        if all(g.has_edge(u, v) for u, v in combinations(quad, 2)):
            total += 1
    return total


def count_k32(g: Graph) -> int:
    """Number of complete-bipartite K_{3,2} edge subgraphs.

    Counted as (3-set, 2-set) pairs of disjoint vertex sets with all six cross
    edges present; the part sizes differ, so no pair is counted twice.
    """
    total = 0
    for five in combinations(range(g.n), 5):
        for two in combinations(five, 2):
            three = tuple(v for v in five if v not in two)
            if all(g.has_edge(u, v) for u in three for v in two):
                total += 1
    return total


def diamond_count(g: Graph) -> int:
    """4-cycles with a present chord: the only 5-edge rank-3 subgraph shape."""
    return count_chorded_cycles(g, 4)


@dataclass(frozen=True)
class SubgraphCensus:
    """All structural counts used by the coefficient formulas."""

    n: int
    m: int
    max_cycle_len: int
    cycles: dict[int, int]
    chorded_cycles: dict[int, int]
    chorded_plus_edge: int
    k4: int
    k32: int

    def cycle_count(self, length: int) -> int:
        """c_length, with 0 for lengths below 3 or above the scan limit."""
        return self.cycles.get(length, 0)

    @property
    def diamonds(self) -> int:
        return self.chorded_cycles.get(4, 0)

    def to_json_dict(self) -> dict:
        out: dict = {"n": self.n, "m": self.m}
        for length in range(3, self.max_cycle_len + 1):
            out[f"c{length}"] = self.cycles.get(length, 0)
        out["c41"] = self.chorded_cycles.get(4, 0)
        out["c51"] = self.chorded_cycles.get(5, 0)
        out["cbar41"] = self.chorded_plus_edge
        out["k4"] = self.k4
        out["k32"] = self.k32
        out["diamond"] = self.diamonds
        return out


def build_census(g: Graph, max_cycle_len: int = 6) -> SubgraphCensus:
    """Run the full structural census with cycles scanned up to max_cycle_len."""
    limit = min(max_cycle_len, g.n)
    return SubgraphCensus(
        n=g.n,
        m=g.m,
        max_cycle_len=max_cycle_len,
        cycles=count_cycles(g, limit),
        chorded_cycles={4: count_chorded_cycles(g, 4), 5: count_chorded_cycles(g, 5)},
        chorded_plus_edge=count_chorded_cycles_plus_edge(g),
        k4=count_k4(g),
        k32=count_k32(g),
    )
