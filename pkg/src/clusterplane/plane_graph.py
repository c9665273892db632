"""Combinatorial plane graphs: rotation systems, face tracing, disk extraction.

A plane graph is stored purely combinatorially: vertex ids are dense integers
0..n-1 and each vertex carries a clockwise cyclic order of its neighbors.
Boundary walks are derived by the standard tracing next(u,v) = (v, w) where w
follows u in the rotation of v.

Graphs may be disconnected.  Each connected component is sphere-embedded on
its own (per-component Euler check); the arrangement of components on the
shared sphere is stored as a grouping of boundary walks into faces.  A face
bounded by a single nonempty walk is an open disk (2-cell); a face touched by
several walks, or hosting an isolated vertex, is not.  File inputs place
components side by side in one shared ambient face; subgraph operations
derive the true face merging from the parent embedding.

Everything here is immutable after construction and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from ._util import DSU, cyclic_equal
from .errors import (
    AsymmetricRotation,
    BadOuterFace,
    MissingOuterFace,
    NotATriangle,
    NotSimple,
    NotSphereEmbedding,
)

DirectedEdge = tuple[int, int]
Triangle = tuple[int, int, int]


@dataclass(frozen=True)
class Walk:
    """One boundary walk: a closed sequence of directed edges.

    An isolated vertex contributes an empty walk anchored at the vertex, so
    that the face hosting it is recorded and per-component Euler counts work.
    """

    id: int
    edges: tuple[DirectedEdge, ...]
    anchor: int
    component: int

    @property
    def length(self) -> int:
        return len(self.edges)

    def vertex_sequence(self) -> tuple[int, ...]:
        return tuple(u for u, _ in self.edges)


@dataclass(frozen=True)
class Face:
    """A face of the arrangement: one or more boundary walks."""

    id: int
    walks: tuple[int, ...]
    length: int
    vertices: frozenset[int]
    is_two_cell: bool


def _validate_rotations(n: int, rotations: Sequence[Sequence[int]]) -> None:
    if len(rotations) != n:
        raise NotSimple(f"expected {n} rotations, got {len(rotations)}")
    neighbor_sets = []
    for v, rot in enumerate(rotations):
        seen = set()
        for u in rot:
            if not isinstance(u, int) or not (0 <= u < n):
                raise NotSimple(f"vertex {v}: bad neighbor {u!r}")
            if u == v:
                raise NotSimple(f"loop at vertex {v}")
            if u in seen:
                raise NotSimple(f"vertex {v}: neighbor {u} listed twice")
            seen.add(u)
        neighbor_sets.append(seen)
    for v, nbrs in enumerate(neighbor_sets):
        for u in nbrs:
            if v not in neighbor_sets[u]:
                raise AsymmetricRotation(f"{v} lists {u} but not vice versa")


def _trace(vertices: Sequence[int], rotations: dict[int, tuple[int, ...]]):
    """Trace all boundary walks of a rotation system (any vertex labels).

    Returns (walks, comp_root) where walks is a list of (edges, anchor) in a
    deterministic order and comp_root maps each vertex to its component root.
    """
    succ: dict[DirectedEdge, int] = {}
    for v in vertices:
        rot = rotations[v]
        deg = len(rot)
        for i, u in enumerate(rot):
            succ[(u, v)] = rot[(i + 1) % deg]

    dsu_ids = {v: i for i, v in enumerate(vertices)}
    dsu = DSU(len(vertices))
    for v in vertices:
        for u in rotations[v]:
            dsu.union(dsu_ids[v], dsu_ids[u])

    walks: list[tuple[tuple[DirectedEdge, ...], int]] = []
    seen: set[DirectedEdge] = set()
    for v in vertices:
        if not rotations[v]:
            walks.append(((), v))
            continue
        for u in rotations[v]:
            start = (v, u)
            if start in seen:
                continue
            edges = []
            cur = start
            while True:
                edges.append(cur)
                seen.add(cur)
                a, b = cur
                cur = (b, succ[(a, b)])
                if cur == start:
                    break
            walks.append((tuple(edges), v))

    comp_root = {v: dsu.find(dsu_ids[v]) for v in vertices}
    return walks, comp_root


def _euler_check(vertices, rotations, walks, comp_root) -> None:
    nv: dict[int, int] = {}
    ne: dict[int, int] = {}
    nw: dict[int, int] = {}
    for v in vertices:
        r = comp_root[v]
        nv[r] = nv.get(r, 0) + 1
        ne[r] = ne.get(r, 0) + len(rotations[v])
    for edges, anchor in walks:
        r = comp_root[anchor]
        nw[r] = nw.get(r, 0) + 1
    for r in nv:
        if nv[r] - ne[r] // 2 + nw.get(r, 0) != 2:
            raise NotSphereEmbedding(
                f"component of vertex {r}: V-E+F = "
                f"{nv[r]} - {ne[r] // 2} + {nw.get(r, 0)} != 2"
            )


class PlaneGraph:
    """Immutable plane graph; construct via the module-level builders."""

    __slots__ = (
        "n",
        "rotations",
        "adjacency",
        "edge_count",
        "walks",
        "faces",
        "outer_face",
        "source_ids",
        "_face_of_walk",
        "_face_of_dedge",
        "_faces_at_vertex",
        "_facial_triangles",
        "component_roots",
    )

    def __init__(
        self,
        n: int,
        rotations: tuple[tuple[int, ...], ...],
        walk_groups: Sequence[Sequence[int]],
        outer_face: Optional[int],
        source_ids: Optional[tuple[int, ...]] = None,
        _walks=None,
        _comp_root=None,
    ):
        self.n = n
        self.rotations = rotations
        self.adjacency = tuple(frozenset(rot) for rot in rotations)
        self.edge_count = sum(len(rot) for rot in rotations) // 2
        if _walks is None:
            _walks, _comp_root = _trace(range(n), {v: rotations[v] for v in range(n)})
        self.component_roots = _comp_root

        walk_objs = []
        for wid, (edges, anchor) in enumerate(_walks):
            walk_objs.append(Walk(wid, edges, anchor, _comp_root[anchor] if n else 0))
        self.walks = tuple(walk_objs)

        assigned = sorted(w for grp in walk_groups for w in grp)
        assert assigned == list(range(len(self.walks))), "walk groups must partition walks"

        face_objs = []
        face_of_walk = [0] * len(self.walks)
        for fid, grp in enumerate(walk_groups):
            grp = tuple(sorted(grp))
            verts = set()
            length = 0
            comps = set()
            for wid in grp:
                w = self.walks[wid]
                length += w.length
                verts.add(w.anchor)
                verts.update(u for u, _ in w.edges)
                comps.add(w.component)
                face_of_walk[wid] = fid
            two_cell = len(grp) == 1 and self.walks[grp[0]].length > 0
            face_objs.append(Face(fid, grp, length, frozenset(verts), two_cell))
        self.faces = tuple(face_objs)
        self._face_of_walk = tuple(face_of_walk)

        if n:
            ncomp = len(set(_comp_root.values()))
            assert len(self.faces) == len(self.walks) - (ncomp - 1), (
                "face grouping is not a sphere arrangement"
            )
            for f in self.faces:
                comps = [self.walks[w].component for w in f.walks]
                assert len(comps) == len(set(comps)), (
                    "a face may touch each component along at most one walk"
                )

        fod: dict[DirectedEdge, int] = {}
        for w in self.walks:
            fid = self._face_of_walk[w.id]
            for e in w.edges:
                fod[e] = fid
        self._face_of_dedge = fod

        fav = []
        host_of_isolated = {
            w.anchor: self._face_of_walk[w.id] for w in self.walks if w.length == 0
        }
        for v in range(n):
            if rotations[v]:
                fav.append(tuple(sorted({fod[(v, u)] for u in rotations[v]})))
            else:
                fav.append((host_of_isolated[v],))
        self._faces_at_vertex = tuple(fav)

        if outer_face is not None and not (0 <= outer_face < len(self.faces)):
            raise BadOuterFace(f"face id {outer_face} out of range")
        self.outer_face = outer_face
        self.source_ids = source_ids

        facial = set()
        for f in self.faces:
            if f.is_two_cell and f.length == 3:
                facial.add(tuple(sorted(f.vertices)))
        self._facial_triangles = frozenset(facial)

    # -- queries ---------------------------------------------------------

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def undirected_edges(self):
        """All edges (u, v) with u < v, ascending."""
        for u in range(self.n):
            for v in self.rotations[u]:
                if u < v:
                    yield (u, v)

    def faces_at_vertex(self, v: int) -> tuple[int, ...]:
        return self._faces_at_vertex[v]

    def face_of_directed_edge(self, u: int, v: int) -> int:
        return self._face_of_dedge[(u, v)]

    @property
    def facial_triangles(self) -> frozenset[Triangle]:
        """Vertex triples bounding a triangular 2-cell face."""
        return self._facial_triangles

    def is_facial(self, tri: Triangle) -> bool:
        return tuple(sorted(tri)) in self._facial_triangles

    def triangles(self) -> list[Triangle]:
        """All 3-cliques, each as a sorted triple, ascending."""
        out = []
        for u in range(self.n):
            for v in self.rotations[u]:
                if v <= u:
                    continue
                for w in self.adjacency[u] & self.adjacency[v]:
                    if w > v:
                        out.append((u, v, w))
        out.sort()
        return out

    def component_count(self) -> int:
        return len(set(self.component_roots.values())) if self.n else 0

    def component_vertex_sets(self) -> list[frozenset[int]]:
        by_root: dict[int, set[int]] = {}
        for v in range(self.n):
            by_root.setdefault(self.component_roots[v], set()).add(v)
        return [frozenset(s) for _, s in sorted(by_root.items())]

    # -- equality / repr -------------------------------------------------

    def _face_signature(self):
        return frozenset(f.walks for f in self.faces)

    def __eq__(self, other):
        if not isinstance(other, PlaneGraph):
            return NotImplemented
        return (
            self.n == other.n
            and self.rotations == other.rotations
            and self.outer_face == other.outer_face
            and self._face_signature() == other._face_signature()
        )

    def __hash__(self):
        return hash((self.n, self.rotations, self.outer_face))

    def __repr__(self):
        return (
            f"PlaneGraph(n={self.n}, m={self.edge_count}, "
            f"faces={len(self.faces)}, outer={self.outer_face})"
        )


def _match_outer_hint(walks, hint) -> Optional[int]:
    """Find the walk whose vertex cycle matches the hint (either direction)."""
    hint = tuple(hint)
    for wid, (edges, anchor) in enumerate(walks):
        if not edges:
            if len(hint) == 1 and hint[0] == anchor:
                return wid
            continue
        seq = tuple(u for u, _ in edges)
        if cyclic_equal(seq, hint) or cyclic_equal(tuple(reversed(seq)), hint):
            return wid
    return None


def build_plane_graph(
    n: int,
    rotations: Sequence[Sequence[int]],
    outer_face_hint: Optional[Sequence[int]] = None,
) -> PlaneGraph:
    """Build a plane graph from a clockwise rotation system.

    Validates simplicity, symmetry and the per-component Euler formula.  A
    disconnected input is arranged with all components side by side in one
    shared ambient face (the face format carries no nesting information);
    each component faces the ambient region along the walk named by
    ``outer_face_hint`` if that hint lies in the component, otherwise along
    its longest walk (ties: smallest first directed edge).
    """
    rotations = tuple(tuple(r) for r in rotations)
    _validate_rotations(n, rotations)
    walks, comp_root = _trace(range(n), {v: rotations[v] for v in range(n)})
    _euler_check(range(n), rotations, walks, comp_root)

    hint_walk = None
    if outer_face_hint is not None:
        hint_walk = _match_outer_hint(walks, outer_face_hint)
        if hint_walk is None:
            raise BadOuterFace(f"no boundary walk matches hint {list(outer_face_hint)}")

    ncomp = len(set(comp_root.values())) if n else 0
    if ncomp <= 1:
        groups = [[w] for w in range(len(walks))]
        outer = hint_walk  # walk id == face id here
        return PlaneGraph(n, rotations, groups, outer, _walks=walks, _comp_root=comp_root)

    by_comp: dict[int, list[int]] = {}
    for wid, (edges, anchor) in enumerate(walks):
        by_comp.setdefault(comp_root[anchor], []).append(wid)
    ambient: list[int] = []
    for comp, wids in sorted(by_comp.items()):
        if hint_walk is not None and hint_walk in wids:
            ambient.append(hint_walk)
            continue
        best, key = None, None
        for wid in wids:
            edges, anchor = walks[wid]
            k = (-len(edges), edges[0] if edges else (anchor, anchor))
            if best is None or k < key:
                best, key = wid, k
        ambient.append(best)
    ambient_set = set(ambient)
    groups = [sorted(ambient)] + [[w] for w in range(len(walks)) if w not in ambient_set]
    return PlaneGraph(n, rotations, groups, 0, _walks=walks, _comp_root=comp_root)


def embedding_from_faces(
    faces: Sequence[Sequence[int]],
    n: Optional[int] = None,
    outer: Optional[Sequence[int]] = None,
) -> PlaneGraph:
    """Build a connected plane graph from consistently oriented face lists.

    Every directed edge must appear exactly once among consecutive pairs of
    the face cycles.  Rotations are derived so tracing reproduces the faces.
    """
    nxt: dict[int, dict[int, int]] = {}
    for f in faces:
        f = tuple(f)
        if len(f) < 3:
            raise NotSimple(f"face {f} too short")
        for i in range(len(f)):
            a, b, c = f[i - 1], f[i], f[(i + 1) % len(f)]
            tbl = nxt.setdefault(b, {})
            if a in tbl:
                raise NotSimple(f"directed edge ({a},{b}) appears twice in faces")
            tbl[a] = c
    if n is None:
        n = max(nxt) + 1 if nxt else 0
    rotations = []
    for v in range(n):
        tbl = nxt.get(v, {})
        if not tbl:
            rotations.append(())
            continue
        start = min(tbl)
        cyc = [start]
        while True:
            after = tbl[cyc[-1]]
            if after == start:
                break
            cyc.append(after)
            if len(cyc) > len(tbl):
                raise NotSphereEmbedding(f"rotation at {v} is not a single cycle")
        if len(cyc) != len(tbl):
            raise NotSphereEmbedding(f"rotation at {v} is not a single cycle")
        rotations.append(tuple(cyc))
    return build_plane_graph(n, rotations, outer_face_hint=outer)


def induced_subgraph(G: PlaneGraph, keep: Iterable[int]) -> PlaneGraph:
    """Induced subgraph on ``keep``, re-embedded by restriction.

    Face structure of the result is derived exactly: faces of G merge into
    one region class whenever they touch a deleted vertex.  The result has
    dense ids 0..k-1; ``result.source_ids[new]`` gives the old id.  The outer
    face (if designated in G) maps to the face containing its region.
    """
    keep_sorted = sorted(set(keep))
    for v in keep_sorted:
        if not (0 <= v < G.n):
            raise ValueError(f"vertex {v} not in graph")
    keep_set = set(keep_sorted)

    rot_old = {v: tuple(u for u in G.rotations[v] if u in keep_set) for v in keep_sorted}
    walks_old, comp_root_old = _trace(keep_sorted, rot_old)

    dsu = DSU(len(G.faces))
    for v in range(G.n):
        if v in keep_set:
            continue
        fs = G.faces_at_vertex(v)
        for f in fs[1:]:
            dsu.union(fs[0], f)

    group_keys: list[int] = []
    for edges, anchor in walks_old:
        if edges:
            roots = {dsu.find(G.face_of_directed_edge(u, v)) for (u, v) in edges}
            assert len(roots) == 1, "walk straddles region classes"
            group_keys.append(roots.pop())
        else:
            roots = {dsu.find(f) for f in G.faces_at_vertex(anchor)}
            assert len(roots) == 1, "isolated vertex straddles region classes"
            group_keys.append(roots.pop())

    groups_by_key: dict[int, list[int]] = {}
    for wid, key in enumerate(group_keys):
        groups_by_key.setdefault(key, []).append(wid)
    ordered_keys = sorted(groups_by_key, key=lambda k: min(groups_by_key[k]))
    groups = [groups_by_key[k] for k in ordered_keys]

    outer = None
    if G.outer_face is not None:
        outer_key = dsu.find(G.outer_face)
        if outer_key in groups_by_key:
            outer = ordered_keys.index(outer_key)

    old2new = {v: i for i, v in enumerate(keep_sorted)}
    rotations = tuple(tuple(old2new[u] for u in rot_old[v]) for v in keep_sorted)
    walks_new = [
        (tuple((old2new[a], old2new[b]) for a, b in edges), old2new[anchor])
        for edges, anchor in walks_old
    ]
    # component roots are opaque tags; only equality of tags matters
    comp_root_new = {old2new[v]: r for v, r in comp_root_old.items()}

    return PlaneGraph(
        len(keep_sorted),
        rotations,
        groups,
        outer,
        source_ids=tuple(keep_sorted),
        _walks=walks_new,
        _comp_root=comp_root_new,
    )


def delete_vertices(G: PlaneGraph, remove: Iterable[int]) -> PlaneGraph:
    """Delete the given vertices; see induced_subgraph for conventions."""
    remove_set = set(remove)
    return induced_subgraph(G, (v for v in range(G.n) if v not in remove_set))


def as_triangle(G: PlaneGraph, verts: Iterable[int]) -> Triangle:
    """Validate and canonicalize a triangle (three pairwise adjacent ids)."""
    tri = tuple(sorted(set(verts)))
    if len(tri) != 3:
        raise NotATriangle(f"{tuple(verts)} is not three distinct vertices")
    a, b, c = tri
    if not (G.has_edge(a, b) and G.has_edge(b, c) and G.has_edge(a, c)):
        raise NotATriangle(f"{tri} is not a triangle of the graph")
    return tri


def triangle_sides(G: PlaneGraph, tri: Triangle) -> tuple[frozenset[int], frozenset[int]]:
    """Partition the faces into the two sides of the triangle's closed curve.

    Returns (side_of_outer_face, other_side); requires a designated outer
    face.  Flood fill over face adjacencies across all non-triangle edges.
    """
    tri = as_triangle(G, tri)
    if G.outer_face is None:
        raise MissingOuterFace("triangle side split needs a designated outer face")
    a, b, c = tri
    tri_edges = {(a, b), (b, c), (a, c)}
    dsu = DSU(len(G.faces))
    for (u, v) in G.undirected_edges():
        if (u, v) in tri_edges:
            continue
        dsu.union(G.face_of_directed_edge(u, v), G.face_of_directed_edge(v, u))
    roots = {dsu.find(f.id) for f in G.faces}
    assert len(roots) == 2, "a triangle must split the sphere into two sides"
    outer_root = dsu.find(G.outer_face)
    side_outer = frozenset(f.id for f in G.faces if dsu.find(f.id) == outer_root)
    side_inner = frozenset(f.id for f in G.faces if dsu.find(f.id) != outer_root)
    return side_outer, side_inner


def disk_interior_vertices(G: PlaneGraph, tri: Triangle) -> frozenset[int]:
    """Vertices strictly inside the disk of ``tri`` away from the outer face."""
    tri = as_triangle(G, tri)
    _, inner = triangle_sides(G, tri)
    tri_set = set(tri)
    inside = []
    for v in range(G.n):
        if v in tri_set:
            continue
        fs = G.faces_at_vertex(v)
        flags = {f in inner for f in fs}
        assert len(flags) == 1, "vertex straddles the triangle"
        if flags.pop():
            inside.append(v)
    return frozenset(inside)


def interior_subgraph(G: PlaneGraph, tri: Triangle) -> PlaneGraph:
    """Subgraph drawn in the closed disk bounded by ``tri``.

    The disk is the side not containing the designated outer face.  The
    result's outer face is the face bounded by the triangle.
    """
    tri = as_triangle(G, tri)
    inside = disk_interior_vertices(G, tri)
    sub = induced_subgraph(G, set(tri) | inside)
    assert sub.outer_face is not None
    f = sub.faces[sub.outer_face]
    assert f.length == 3 and f.vertices == frozenset(
        sub.source_ids.index(x) for x in tri
    ), "interior subgraph must be bounded by the triangle"
    return sub


def add_outer_triangle(G: PlaneGraph) -> PlaneGraph:
    """Place G inside a fresh disjoint triangle drawn as the outer boundary.

    The triangle vertices are n, n+1, n+2; no edges join them to G.  G's
    ambient walks (its designated outer face if any, else the side-by-side
    convention) face the triangle from inside.
    """
    n = G.n
    t0, t1, t2 = n, n + 1, n + 2
    rotations = tuple(G.rotations) + ((t1, t2), (t2, t0), (t0, t1))
    walks, comp_root = _trace(range(n + 3), {v: rotations[v] for v in range(n + 3)})

    tri_inner = tri_outer = None
    for wid, (edges, anchor) in enumerate(walks):
        if edges and edges[0][0] >= n:
            if (t0, t1) in edges:
                tri_inner = wid
            else:
                tri_outer = wid
    assert tri_inner is not None and tri_outer is not None

    if n == 0:
        groups = [[tri_inner], [tri_outer]]
        return PlaneGraph(3, rotations[n:], [[0], [1]], 1)

    if G.outer_face is not None:
        ambient_walks = list(G.faces[G.outer_face].walks)
        old_groups = [list(f.walks) for f in G.faces]
        ambient_idx = G.outer_face
    else:
        if G.component_count() > 1:
            raise MissingOuterFace("disconnected graph needs a designated outer face")
        best, key = None, None
        for w in G.walks:
            k = (-w.length, w.edges[0] if w.edges else (w.anchor, w.anchor))
            if best is None or k < key:
                best, key = w.id, k
        ambient_walks = [best]
        old_groups = [list(f.walks) for f in G.faces]
        ambient_idx = G._face_of_walk[best]

    # old walk ids are preserved: tracing order over 0..n-1 is unchanged and
    # the triangle's walks come last
    groups = []
    for fid, grp in enumerate(old_groups):
        if fid == ambient_idx:
            groups.append(sorted(grp + [tri_inner]))
        else:
            groups.append(sorted(grp))
    groups.append([tri_outer])
    outer = len(groups) - 1
    return PlaneGraph(
        n + 3, rotations, groups, outer, _walks=walks, _comp_root=comp_root
    )
