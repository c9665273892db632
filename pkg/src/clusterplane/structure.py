"""Structural classifiers: small/big vertices, triangle flags, apex-path
search, sparsifier detection, and maximal separated systems.

Conventions, fixed for the whole package:

- A vertex is *small* w.r.t. (D, X) if it is not in X, has degree at most D,
  and every incident face is a triangular 2-cell; otherwise it is *big*.
- A triangle is *facial* if it bounds a triangular 2-cell face, *X-external*
  if some corner is outside X, *X-empty* if the open disk on the side away
  from the outer face contains no vertex of X, and *X-pyramidal* if it is
  X-empty and some vertex strictly inside is adjacent to all three corners.
- pword(t) is the graph made of two apex vertices joined to every vertex of
  a t-vertex path; containment is as a subgraph, not induced, and the apex
  pair is unordered (the apexes may be adjacent in the host graph).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import SearchBudgetExceeded
from .plane_graph import PlaneGraph, Triangle, as_triangle, disk_interior_vertices, induced_subgraph

DEFAULT_SEARCH_BUDGET = 10**7

SPARSIFIER_KINDS = ("FOUR", "FIVE", "FT1", "FT2", "SIX")
_KIND_RANK = {k: i for i, k in enumerate(SPARSIFIER_KINDS)}


@dataclass(frozen=True)
class VertexClass:
    """Small/big classification of one vertex, with the reasons for big."""

    vertex: int
    small: bool
    reasons: tuple[str, ...]  # subset of {"precolored", "degree", "face"}

    @property
    def big(self) -> bool:
        return not self.small


@dataclass(frozen=True)
class PwordEmbedding:
    """A found apex-path subgraph: unordered apex pair plus the path."""

    apexes: tuple[int, int]
    path: tuple[int, ...]

    def validate(self, G: PlaneGraph) -> None:
        u, v = self.apexes
        assert u != v
        assert len(set(self.path)) == len(self.path)
        assert u not in self.path and v not in self.path
        for p in self.path:
            assert G.has_edge(u, p) and G.has_edge(v, p)
        for a, b in zip(self.path, self.path[1:]):
            assert G.has_edge(a, b)


@dataclass(frozen=True)
class Sparsifier:
    """One of the five removable local configurations of small vertices."""

    kind: str
    vertices: tuple[int, ...]
    witness: tuple[tuple[str, tuple[int, ...]], ...] = ()

    def __post_init__(self):
        assert self.kind in SPARSIFIER_KINDS
        assert self.vertices == tuple(sorted(self.vertices))

    def sort_key(self):
        return (_KIND_RANK[self.kind], self.vertices)

    def witness_dict(self) -> dict[str, tuple[int, ...]]:
        return dict(self.witness)


def classify_vertex(G: PlaneGraph, X: frozenset[int], D: int, v: int) -> VertexClass:
    """Small iff v is unprecolored, deg <= D, and sees only triangular 2-cells."""
    reasons = []
    if v in X:
        reasons.append("precolored")
    if G.degree(v) > D:
        reasons.append("degree")
    for f in G.faces_at_vertex(v):
        face = G.faces[f]
        if not (face.is_two_cell and face.length == 3):
            reasons.append("face")
            break
    return VertexClass(v, small=not reasons, reasons=tuple(reasons))


def small_vertex_map(G: PlaneGraph, X: frozenset[int], D: int) -> list[bool]:
    """Vector of smallness flags for all vertices."""
    return [classify_vertex(G, X, D, v).small for v in range(G.n)]


@dataclass(frozen=True)
class TriangleFlags:
    triangle: Triangle
    facial: bool
    x_external: bool
    x_empty: Optional[bool]
    x_pyramidal: Optional[bool]
    bounds_outer: bool


def classify_triangle(
    G: PlaneGraph, X: frozenset[int], K: Iterable[int]
) -> TriangleFlags:
    """Flags of one triangle.

    x_empty / x_pyramidal refer to the disk on the side away from the
    designated outer face; they are None when no outer face is designated.
    """
    K = as_triangle(G, K)
    facial = G.is_facial(K)
    x_external = any(v not in X for v in K)
    bounds_outer = (
        G.outer_face is not None
        and G.faces[G.outer_face].length == 3
        and G.faces[G.outer_face].vertices == frozenset(K)
        and G.faces[G.outer_face].is_two_cell
    )
    if G.outer_face is None:
        return TriangleFlags(K, facial, x_external, None, None, bounds_outer)
    inside = disk_interior_vertices(G, K)
    x_empty = not (inside & X)
    x_pyramidal = x_empty and any(set(K) <= G.adjacency[w] for w in inside)
    return TriangleFlags(K, facial, x_external, x_empty, x_pyramidal, bounds_outer)


# -- apex-path search ---------------------------------------------------


def _common_neighbor_pairs(G: PlaneGraph) -> dict[tuple[int, int], list[int]]:
    """All unordered pairs with at least one common neighbor."""
    pairs: dict[tuple[int, int], list[int]] = {}
    for w in range(G.n):
        nbrs = sorted(G.adjacency[w])
        for i in range(len(nbrs)):
            for j in range(i + 1, len(nbrs)):
                pairs.setdefault((nbrs[i], nbrs[j]), []).append(w)
    return pairs


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self, k: int = 1):
        self.used += k
        if self.used > self.limit:
            raise SearchBudgetExceeded(f"search exceeded {self.limit} nodes")


def _longest_path_search(
    adj: dict[int, set[int]],
    verts: list[int],
    target: Optional[int],
    budget: _Budget,
) -> tuple[int, tuple[int, ...]]:
    """Longest simple path in the graph induced on verts (branch and bound).

    Returns (best length, one best path).  With ``target`` set, stops as
    soon as a path on ``target`` vertices is found.  A branch is cut when
    even absorbing everything reachable from its extensions cannot beat the
    incumbent.
    """
    vset = set(verts)
    best_len = 0
    best_path: tuple[int, ...] = ()

    def reachable(frontier: set[int], used: set[int]) -> int:
        seen = set(used)
        stack = []
        for v in frontier:
            if v not in seen:
                seen.add(v)
                stack.append(v)
        count = 0
        while stack:
            v = stack.pop()
            count += 1
            for w in adj[v]:
                if w in vset and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return count

    def dfs(v: int, used: set[int], path: list[int]):
        nonlocal best_len, best_path
        budget.spend()
        if len(path) > best_len:
            best_len = len(path)
            best_path = tuple(path)
        if target is not None and best_len >= target:
            return
        ext = sorted(w for w in adj[v] if w in vset and w not in used)
        if not ext:
            return
        if len(path) + reachable(set(ext), used) <= best_len:
            return
        for w in ext:
            used.add(w)
            path.append(w)
            dfs(w, used, path)
            path.pop()
            used.remove(w)
            if target is not None and best_len >= target:
                return

    for s in sorted(verts):
        if target is not None and best_len >= target:
            break
        dfs(s, {s}, [s])
    return best_len, best_path


def find_pword(
    G: PlaneGraph, t: int, budget: int = DEFAULT_SEARCH_BUDGET
) -> Optional[PwordEmbedding]:
    """Find an apex pair with a t-vertex path in its common neighborhood.

    Exact: a None result certifies the graph has no such subgraph.  Raises
    SearchBudgetExceeded when the node budget runs out, which callers must
    treat as "unverified".
    """
    if t < 1:
        raise ValueError("t must be positive")
    b = _Budget(budget)
    adj = {v: set(G.adjacency[v]) for v in range(G.n)}
    pairs = _common_neighbor_pairs(G)
    for (u, v), common in sorted(pairs.items()):
        if len(common) < t:
            continue
        length, path = _longest_path_search(adj, common, t, b)
        if length >= t:
            emb = PwordEmbedding((u, v), path[:t])
            emb.validate(G)
            return emb
    return None


def min_free_t(G: PlaneGraph, budget: int = DEFAULT_SEARCH_BUDGET) -> int:
    """Smallest t >= 1 such that the graph has no apex-path subgraph on t.

    Equals 1 + the maximum, over apex pairs, of the longest path in the
    common neighborhood.
    """
    b = _Budget(budget)
    adj = {v: set(G.adjacency[v]) for v in range(G.n)}
    best = 0
    for (u, v), common in sorted(_common_neighbor_pairs(G).items()):
        if len(common) <= best:
            continue
        length, _ = _longest_path_search(adj, common, None, b)
        best = max(best, length)
    return best + 1


# -- sparsifiers ---------------------------------------------------------


def find_sparsifiers(G: PlaneGraph, X: frozenset[int], D: int) -> list[Sparsifier]:
    """All sparsifiers of all five kinds, deduplicated by (kind, vertex set).

    FOUR: a small degree-4 vertex with at most one big neighbor.
    FIVE: a small degree-5 vertex with no big neighbor.
    FT1:  a facial triangle of small degree-5 vertices, each with exactly one
          big neighbor, two of them sharing theirs.
    FT2:  a facial triangle of two small degree-5 vertices whose only big
          neighbor is shared, plus a small degree-6 vertex with none.
    SIX:  two facial triangles sharing an edge, four small degree-6 vertices
          with no big neighbors, the two non-shared corners non-adjacent.
    """
    if D < 6:
        raise ValueError("D must be at least 6")
    small = small_vertex_map(G, X, D)

    def big_neighbors(v):
        return sorted(u for u in G.adjacency[v] if not small[u])

    found: dict[tuple[str, tuple[int, ...]], Sparsifier] = {}

    def add(sp: Sparsifier):
        found.setdefault((sp.kind, sp.vertices), sp)

    for v in range(G.n):
        if not small[v]:
            continue
        bigs = big_neighbors(v)
        if G.degree(v) == 4 and len(bigs) <= 1:
            add(Sparsifier("FOUR", (v,)))
        elif G.degree(v) == 5 and not bigs:
            add(Sparsifier("FIVE", (v,)))

    deg5_one_big = {}
    deg6_no_big = set()
    for v in range(G.n):
        if not small[v]:
            continue
        bigs = big_neighbors(v)
        if G.degree(v) == 5 and len(bigs) == 1:
            deg5_one_big[v] = bigs
        elif G.degree(v) == 6 and not bigs:
            deg6_no_big.add(v)

    for tri in sorted(G.facial_triangles):
        a, b, c = tri
        # FT1
        if all(v in deg5_one_big for v in tri):
            pairs = [
                (x, y)
                for x, y in ((a, b), (a, c), (b, c))
                if deg5_one_big[x] == deg5_one_big[y]
            ]
            if pairs:
                x, y = pairs[0]
                add(
                    Sparsifier(
                        "FT1",
                        tri,
                        (("pair", (x, y)), ("big", tuple(deg5_one_big[x]))),
                    )
                )
        # FT2
        for z in tri:
            if z not in deg6_no_big:
                continue
            x, y = sorted(set(tri) - {z})
            if (
                x in deg5_one_big
                and y in deg5_one_big
                and deg5_one_big[x] == deg5_one_big[y]
            ):
                add(
                    Sparsifier(
                        "FT2",
                        tri,
                        (
                            ("pair", (x, y)),
                            ("six", (z,)),
                            ("big", tuple(deg5_one_big[x])),
                        ),
                    )
                )

    facial_by_edge: dict[tuple[int, int], list[Triangle]] = {}
    for tri in G.facial_triangles:
        a, b, c = tri
        for e in ((a, b), (a, c), (b, c)):
            facial_by_edge.setdefault(e, []).append(tri)
    for (a, b), tris in sorted(facial_by_edge.items()):
        if a not in deg6_no_big or b not in deg6_no_big:
            continue
        thirds = sorted(set(v for tri in tris for v in tri) - {a, b})
        for i in range(len(thirds)):
            for j in range(i + 1, len(thirds)):
                v1, v4 = thirds[i], thirds[j]
                if v1 in deg6_no_big and v4 in deg6_no_big and not G.has_edge(v1, v4):
                    add(
                        Sparsifier(
                            "SIX",
                            tuple(sorted((v1, a, b, v4))),
                            (("shared_edge", (a, b)), ("ends", (v1, v4))),
                        )
                    )

    out = sorted(found.values(), key=Sparsifier.sort_key)
    for sp in out:
        _revalidate_sparsifier(G, sp, small)
    return out


def _revalidate_sparsifier(G, sp, small) -> None:
    """Defensive re-check of the defining predicate of one sparsifier."""
    vs = sp.vertices
    assert all(small[v] for v in vs)
    bigs = {v: sorted(u for u in G.adjacency[v] if not small[u]) for v in vs}
    if sp.kind == "FOUR":
        (v,) = vs
        assert G.degree(v) == 4 and len(bigs[v]) <= 1
    elif sp.kind == "FIVE":
        (v,) = vs
        assert G.degree(v) == 5 and not bigs[v]
    elif sp.kind == "FT1":
        assert G.is_facial(vs)
        assert all(G.degree(v) == 5 and len(bigs[v]) == 1 for v in vs)
        x, y = sp.witness_dict()["pair"]
        assert bigs[x] == bigs[y]
    elif sp.kind == "FT2":
        assert G.is_facial(vs)
        x, y = sp.witness_dict()["pair"]
        (z,) = sp.witness_dict()["six"]
        assert G.degree(z) == 6 and not bigs[z]
        assert G.degree(x) == 5 and G.degree(y) == 5
        assert bigs[x] == bigs[y] and len(bigs[x]) == 1
    elif sp.kind == "SIX":
        a, b = sp.witness_dict()["shared_edge"]
        v1, v4 = sp.witness_dict()["ends"]
        assert set(vs) == {a, b, v1, v4}
        assert all(G.degree(v) == 6 and not bigs.get(v, []) for v in vs)
        assert G.is_facial((a, b, v1)) and G.is_facial((a, b, v4))
        assert not G.has_edge(v1, v4)


def are_separated(G: PlaneGraph, S1: Iterable[int], S2: Iterable[int]) -> bool:
    """Vertex-disjoint with no edge between the two sets."""
    s1, s2 = set(S1), set(S2)
    if s1 & s2:
        return False
    return all(not (G.adjacency[v] & s2) for v in s1)


def maximal_separated_system(
    G: PlaneGraph, X: frozenset[int], D: int
) -> list[Sparsifier]:
    """Greedy maximal system of pairwise separated sparsifiers.

    Candidates are scanned in the fixed order (kind rank, vertex set); each
    is kept if separated from everything chosen so far.  The result cannot
    be extended by any sparsifier of the graph.
    """
    chosen: list[Sparsifier] = []
    blocked: set[int] = set()  # chosen vertices and their neighbors
    for sp in find_sparsifiers(G, X, D):
        if blocked & set(sp.vertices):
            continue
        chosen.append(sp)
        for v in sp.vertices:
            blocked.add(v)
            blocked.update(G.adjacency[v])
    return chosen


@dataclass(frozen=True)
class HereditaryCheckReport:
    checked: int
    violations: tuple[dict, ...]

    @property
    def passed(self) -> bool:
        return not self.violations


def check_hereditary_sparsifier_free(
    G: PlaneGraph,
    X: frozenset[int],
    D: int,
    samples: int = 100,
    seed: int = 0,
) -> HereditaryCheckReport:
    """Verify the graph and random induced subgraphs have no sparsifier.

    Meant for residual graphs after removing a maximal separated system; a
    violation indicates an implementation bug and is reported with the
    offending vertex set (in the labels of the checked graph).
    """
    rng = random.Random(seed)
    violations = []
    checked = 0

    def check(H: PlaneGraph, keep: tuple[int, ...], XH: frozenset[int]):
        nonlocal checked
        checked += 1
        sps = find_sparsifiers(H, XH, D)
        if sps:
            violations.append(
                {
                    "keep": keep,
                    "sparsifiers": [
                        {"kind": s.kind, "vertices": list(s.vertices)} for s in sps
                    ],
                }
            )

    check(G, tuple(range(G.n)), X)
    for _ in range(samples):
        k = rng.randint(1, max(G.n, 1))
        keep = tuple(sorted(rng.sample(range(G.n), min(k, G.n))))
        if not keep:
            continue
        H = induced_subgraph(G, keep)
        XH = frozenset(new for new, old in enumerate(keep) if old in X)
        check(H, keep, XH)
    return HereditaryCheckReport(checked, tuple(violations))
