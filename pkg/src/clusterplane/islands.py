"""Island search and sparsity measurement.

An island (for threshold c) is a non-empty vertex set in which every member
has fewer than c neighbors outside the set.  Sufficiently sparse graphs
always contain small islands; the size cap needed is configuration here
(default 12, escalated by doubling up to 48 by the coloring layer), and the
cap actually used is measured and reported rather than derived.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from .plane_graph import PlaneGraph, induced_subgraph

DEFAULT_SIGMA = 12
SIGMA_CAP = 48


@dataclass(frozen=True)
class Island:
    """A verified island: every member has fewer than c outside neighbors."""

    vertices: frozenset[int]
    c: int
    external_degree: tuple[tuple[int, int], ...]  # (vertex, count), sorted

    def __post_init__(self):
        assert self.vertices, "islands are non-empty"
        assert all(cnt < self.c for _, cnt in self.external_degree)


@dataclass(frozen=True)
class SparsityParams:
    """Edge-density budget |E| <= a |V| + b, held as exact rationals."""

    a: Fraction
    b: Fraction

    @classmethod
    def residual_budget(cls, t: int, x_size: int) -> "SparsityParams":
        """Budget guaranteed for sparsifier-free residuals at parameter t
        in the plane: a = 3 - 1/(208 t), b = |X| + t + 2."""
        return cls(Fraction(3) - Fraction(1, 208 * t), Fraction(x_size + t + 2))


def is_island(
    adjacency: Mapping[int, frozenset[int]] | PlaneGraph,
    members: Iterable[int],
    c: int,
    alive: Optional[set[int]] = None,
) -> Optional[Island]:
    """Validate the island property; returns the Island or None.

    ``alive`` restricts the host graph to an induced subgraph (used by the
    peeling loop); neighbors outside ``alive`` do not exist.
    """
    adj = adjacency.adjacency if isinstance(adjacency, PlaneGraph) else adjacency
    mem = frozenset(members)
    if not mem:
        return None
    ext = []
    for v in sorted(mem):
        outside = adj[v] - mem
        if alive is not None:
            outside &= alive
        if len(outside) >= c:
            return None
        ext.append((v, len(outside)))
    return Island(mem, c, tuple(ext))


def _connected_sets_of_size(adj, pool: list[int], size: int, c: int, alive: set[int]):
    """Yield all connected subsets of `pool` of exactly `size` vertices.

    Canonical extension: each set is generated exactly once, rooted at its
    minimum vertex; the extension list grows only by neighbors never seen
    on the branch before.  A partial set is cut when some member's external
    degree cannot drop below c even if all remaining slots go to its
    neighbors.
    """
    pool_set = set(pool)

    def extdeg(v, current):
        return len((adj[v] & alive) - current)

    def extend(current: set[int], frontier: list[int], seen: set[int], root: int):
        if len(current) == size:
            yield frozenset(current)
            return
        slack = size - len(current)
        if any(extdeg(v, current) - slack >= c for v in current):
            return
        rest = list(frontier)
        while rest:
            w = rest.pop(0)
            fresh = sorted(
                x for x in (adj[w] & pool_set) if x > root and x not in seen
            )
            yield from extend(
                current | {w}, rest + fresh, seen | set(fresh), root
            )

    for root in pool:
        frontier = sorted(x for x in (adj[root] & pool_set) if x > root)
        yield from extend({root}, frontier, set(frontier) | {root}, root)


def find_island(
    G: PlaneGraph | Mapping[int, frozenset[int]],
    c: int,
    sigma_max: int,
    avoid: Iterable[int] = (),
    alive: Optional[Iterable[int]] = None,
) -> Optional[Island]:
    """Smallest island of size <= sigma_max disjoint from ``avoid``.

    Size-1 islands are vertices of degree < c; beyond that, connected vertex
    sets are enumerated by increasing size (minimal islands are connected:
    a component of an island is itself an island).  Among islands of the
    minimal size the lexicographically smallest vertex set is returned.
    Returns None when no island fits the cap.
    """
    if c < 1 or sigma_max < 1:
        raise ValueError("c and sigma_max must be positive")
    adj = G.adjacency if isinstance(G, PlaneGraph) else G
    if alive is None:
        alive_set = set(range(len(adj)))
    else:
        alive_set = set(alive)
    avoid_set = set(avoid)
    pool = sorted(alive_set - avoid_set)

    singles = [v for v in pool if len(adj[v] & alive_set) < c]
    if singles:
        return is_island(adj, {singles[0]}, c, alive_set)

    for size in range(2, sigma_max + 1):
        hits = []
        for cand in _connected_sets_of_size(adj, pool, size, c, alive_set):
            isl = is_island(adj, cand, c, alive_set)
            if isl is not None:
                hits.append(tuple(sorted(cand)))
        if hits:
            return is_island(adj, set(min(hits)), c, alive_set)
    return None


def is_sparse(G: PlaneGraph, a, b) -> bool:
    """Exact rational check of |E| <= a |V| + b."""
    return Fraction(G.edge_count) <= Fraction(a) * G.n + Fraction(b)


@dataclass(frozen=True)
class SparsitySampleReport:
    checked: int
    violations: tuple[tuple[int, ...], ...]

    @property
    def passed(self) -> bool:
        return not self.violations


def hereditary_sparse_sample(
    G: PlaneGraph, a, b, samples: int = 100, seed: int = 0
) -> SparsitySampleReport:
    """Sample check of hereditary sparsity: the graph itself, every
    single-vertex deletion, and random induced subgraphs."""
    import random as _random

    rng = _random.Random(seed)
    violations = []
    checked = 0

    def check(keep: tuple[int, ...]):
        nonlocal checked
        checked += 1
        H = induced_subgraph(G, keep) if len(keep) < G.n else G
        if not is_sparse(H, a, b):
            violations.append(keep)

    check(tuple(range(G.n)))
    for v in range(G.n):
        check(tuple(u for u in range(G.n) if u != v))
    for _ in range(samples):
        k = rng.randint(1, max(G.n, 1))
        keep = tuple(sorted(rng.sample(range(G.n), min(k, G.n))))
        if keep:
            check(keep)
    return SparsitySampleReport(checked, tuple(violations))
