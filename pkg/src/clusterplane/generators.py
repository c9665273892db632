"""Instance generators: canonical solids, stacked families, gadgets.

All generators are deterministic: identical parameters and seed produce
identical graphs (and identical file bytes after serialization).  Random
families use ``random.Random(seed)`` with 64-bit seeds.
"""

from __future__ import annotations

import random
from typing import Optional

from .plane_graph import PlaneGraph, embedding_from_faces

__all__ = [
    "triangle_graph",
    "cycle_graph",
    "tetrahedron",
    "octahedron",
    "icosahedron",
    "bipyramid",
    "capped_antiprism",
    "gen_pword",
    "gen_complete_3tree",
    "gen_stacked_3tree",
    "gen_triangulation",
    "gen_quadrangulation",
    "gen_choos_gadget",
    "gen_strip",
]


def triangle_graph() -> PlaneGraph:
    return embedding_from_faces([(0, 1, 2), (0, 2, 1)], outer=(0, 1, 2))


def cycle_graph(m: int, outer_hint: bool = True) -> PlaneGraph:
    if m < 3:
        raise ValueError("cycle needs at least 3 vertices")
    ring = tuple(range(m))
    return embedding_from_faces(
        [ring, tuple(reversed(ring))], outer=ring if outer_hint else None
    )


def tetrahedron() -> PlaneGraph:
    return embedding_from_faces(
        [(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)], outer=(0, 1, 2)
    )


def bipyramid(m: int) -> PlaneGraph:
    """Two apexes (0 and m+1) over an m-cycle 1..m; a triangulation."""
    if m < 3:
        raise ValueError("bipyramid needs a ring of at least 3")
    top, bot = 0, m + 1
    ring = list(range(1, m + 1))
    faces = []
    for i in range(m):
        a, b = ring[i], ring[(i + 1) % m]
        faces.append((top, a, b))
        faces.append((bot, b, a))
    return embedding_from_faces(faces, outer=faces[0])


def octahedron() -> PlaneGraph:
    """Square bipyramid: apexes 0 and 5, equator 1-2-3-4.

    Antipodal pairs are (0,5), (1,3), (2,4).
    """
    return bipyramid(4)


def capped_antiprism(m: int) -> PlaneGraph:
    """m-antiprism with both m-gonal faces capped by apexes; a deltahedron.

    Labels: apex 0, top ring 1..m, bottom ring m+1..2m, apex 2m+1.
    capped_antiprism(5) is the icosahedron.
    """
    if m < 3:
        raise ValueError("antiprism needs rings of at least 3")
    top_apex, bot_apex = 0, 2 * m + 1

    def c(j):  # top ring, 1-based cyclic
        return 1 + (j - 1) % m

    def d(j):  # bottom ring
        return m + 1 + (j - 1) % m

    faces = []
    for j in range(1, m + 1):
        faces.append((top_apex, c(j), c(j + 1)))
        faces.append((c(j), d(j), c(j + 1)))
        faces.append((d(j), d(j + 1), c(j + 1)))
        faces.append((bot_apex, d(j + 1), d(j)))
    return embedding_from_faces(faces, outer=faces[0])


def icosahedron() -> PlaneGraph:
    return capped_antiprism(5)


def gen_pword(t: int) -> PlaneGraph:
    """Two apex vertices joined to every vertex of a t-vertex path.

    Path vertices are 0..t-1 in order; the apexes are t and t+1.
    """
    if t < 1:
        raise ValueError("t must be positive")
    u, v = t, t + 1
    if t == 1:
        return embedding_from_faces([(u, 0, v, 0)], n=3, outer=(u, 0, v, 0))
    faces = []
    for i in range(t - 1):
        faces.append((u, i + 1, i))
        faces.append((v, i, i + 1))
    outer = (u, 0, v, t - 1)
    faces.append(outer)
    return embedding_from_faces(faces, outer=outer)


def _stack_into(faces: list, idx: int, w: int) -> list[int]:
    """Replace face idx = (a,b,c) by the three faces around a new vertex w.

    Returns the indices of the three new faces (idx is reused first).
    """
    a, b, c = faces[idx]
    faces[idx] = (a, b, w)
    faces.append((b, c, w))
    faces.append((c, a, w))
    return [idx, len(faces) - 2, len(faces) - 1]


def gen_complete_3tree(depth: int) -> PlaneGraph:
    """Fully stacked rooted planar 3-tree: depth 0 is a triangle, depth 1 K4."""
    if depth < 0:
        raise ValueError("depth must be non-negative")
    faces = [(0, 1, 2), (0, 2, 1)]
    counter = [3]

    def fill(idx: int, d: int):
        if d == 0:
            return
        w = counter[0]
        counter[0] += 1
        for child in _stack_into(faces, idx, w):
            fill(child, d - 1)

    fill(1, depth)
    return embedding_from_faces(faces, outer=(0, 1, 2))


def _longest_path_in(adj: dict[int, set[int]], verts: set[int], cap: Optional[int] = None) -> int:
    """Exact longest path (vertex count) in the subgraph induced by verts.

    Plain DFS; intended for the tiny common-neighborhood graphs that arise
    in plane graphs (maximum degree at most 2 there).
    """
    best = 0
    order = sorted(verts)

    def dfs(v, used, length):
        nonlocal best
        if length > best:
            best = length
        if cap is not None and best >= cap:
            return
        for w in sorted(adj[v] & verts):
            if w not in used:
                used.add(w)
                dfs(w, used, length + 1)
                used.remove(w)

    for s in order:
        if cap is not None and best >= cap:
            break
        dfs(s, {s}, 1)
    return best


def gen_stacked_3tree(
    n: int, seed: int, free_t: Optional[int] = None
) -> PlaneGraph:
    """Random rooted planar 3-tree on up to n vertices (root triangle 0,1,2).

    Stacks a new vertex into a uniformly chosen internal triangular face.
    With ``free_t`` set (>= 3), each stack is rejected if it would create an
    apex pair whose common neighborhood carries a path on free_t vertices;
    generation stops early if no face admits a stack.
    """
    if n < 3:
        raise ValueError("need at least the root triangle")
    if free_t is not None and free_t < 3:
        raise ValueError("free_t below 3 cannot hold in a stacked 3-tree")
    rng = random.Random(seed)
    faces = [(0, 1, 2), (0, 2, 1)]
    internal = [1]
    adj: dict[int, set[int]] = {0: {1, 2}, 1: {0, 2}, 2: {0, 1}}
    w = 3
    while w < n:
        if free_t is None:
            idx = internal[rng.randrange(len(internal))]
        else:
            candidates = internal[:]
            rng.shuffle(candidates)
            idx = None
            for cand in candidates:
                a, b, c = faces[cand]
                adj[w] = {a, b, c}
                for z in (a, b, c):
                    adj[z].add(w)
                ok = all(
                    _longest_path_in(adj, adj[x] & adj[y], cap=free_t) < free_t
                    for x, y in ((a, b), (b, c), (a, c))
                )
                for z in (a, b, c):
                    adj[z].discard(w)
                del adj[w]
                if ok:
                    idx = cand
                    break
            if idx is None:
                break
        a, b, c = faces[idx]
        internal.remove(idx)
        internal.extend(_stack_into(faces, idx, w))
        adj[w] = {a, b, c}
        adj[a].add(w)
        adj[b].add(w)
        adj[c].add(w)
        w += 1
    return embedding_from_faces(faces, outer=(0, 1, 2))


def gen_triangulation(n: int, seed: int) -> PlaneGraph:
    """Random stacked sphere triangulation grown from the tetrahedron."""
    if n < 4:
        raise ValueError("need at least the tetrahedron")
    rng = random.Random(seed)
    faces = [(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)]
    for w in range(4, n):
        idx = rng.randrange(len(faces))
        _stack_into(faces, idx, w)
    return embedding_from_faces(faces, outer=None)


def gen_quadrangulation(n: int, seed: int) -> PlaneGraph:
    """Random simple quadrangulation of the sphere grown from a 4-cycle.

    Each step inserts a vertex joined to two opposite corners of a random
    quadrilateral face, splitting it into two quadrilaterals.
    """
    if n < 4:
        raise ValueError("need at least the 4-cycle")
    rng = random.Random(seed)
    faces = [(0, 1, 2, 3), (0, 3, 2, 1)]
    for w in range(4, n):
        idx = rng.randrange(len(faces))
        a, b, c, d = faces[idx]
        if rng.randrange(2):
            a, b, c, d = b, c, d, a
        faces[idx] = (a, b, c, w)
        faces.append((c, d, a, w))
    return embedding_from_faces(faces, outer=None)


def gen_choos_gadget(gamma: int):
    """Gadget showing 3 lists cannot bound clustering by gamma on apex paths.

    Two apexes over a path of t = 9(2*gamma-1)(gamma+1) vertices; the apexes
    get lists {1,2,3} and {4,5,6}, and the path splits into nine consecutive
    segments of (2*gamma-1)(gamma+1) vertices whose lists are {i, j, 7} for
    the nine apex color pairs (i, j).  Returns an InstanceFile.
    """
    from .instances import InstanceFile

    if gamma < 1:
        raise ValueError("gamma must be positive")
    seg = (2 * gamma - 1) * (gamma + 1)
    t = 9 * seg
    G = gen_pword(t)
    u, v = t, t + 1
    lists = {u: (1, 2, 3), v: (4, 5, 6)}
    k = 0
    for i in (1, 2, 3):
        for j in (4, 5, 6):
            for p in range(k * seg, (k + 1) * seg):
                lists[p] = tuple(sorted((i, j, 7)))
            k += 1
    return InstanceFile(
        graph=G,
        lists=lists,
        X=frozenset(),
        psi={},
        t=None,
        meta={"generator": "choos-gadget", "gamma": gamma},
    )


def gen_strip(length: int):
    """Fan strip between two precolored poles, plus a 4-cycle host component.

    The strip component is a double fan: poles x=0 and y=1 joined to a chain
    of length+4 vertices.  The chain's two end vertices sit on the outer
    quadrilateral (big); the two next-to-end vertices are safe; the interior
    ``length`` vertices are degree-4 and unsafe with exactly the two poles
    as big neighbors.  X = {x, y}.  The host 4-cycle keeps the whole
    instance above the trivial-size threshold of the sparsity audit.
    Returns an InstanceFile with t = length + 5.
    """
    from .instances import InstanceFile

    if length < 1:
        raise ValueError("strip needs at least one interior vertex")
    x, y = 0, 1
    chain = list(range(2, length + 6))  # z_L, p_0 .. p_{length+1}, z_R
    faces = []
    for i in range(len(chain) - 1):
        a, b = chain[i], chain[i + 1]
        faces.append((x, b, a))
        faces.append((y, a, b))
    outer = (x, chain[0], y, chain[-1])
    faces.append(outer)
    h = length + 6
    host = [(h, h + 1, h + 2, h + 3), (h, h + 3, h + 2, h + 1)]
    G = embedding_from_faces(faces + host, n=length + 10, outer=outer)
    return InstanceFile(
        graph=G,
        lists=None,
        X=frozenset({x, y}),
        psi={x: 1, y: 2},
        t=length + 5,
        meta={"generator": "strip", "length": length},
    )
