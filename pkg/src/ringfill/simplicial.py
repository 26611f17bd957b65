"""Abstract triangulations of a disk whose boundary is a labeled cycle.

The boundary cycle on ``n`` vertices always occupies vertex ids ``0..n-1``
in cyclic order, so the cycle distance between two boundary vertices can be
read off their ids as ``min(|i-j|, n-|i-j|)``.  Interior vertices follow in
contiguous blocks, one block per concentric layer.
"""
from __future__ import annotations

from collections import Counter, defaultdict, deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

__all__ = [
    "Vertex",
    "Triangulation",
    "ValidationReport",
    "canonical_triangle",
    "validate_disk",
    "boundary_cycle",
    "skeleton_graph",
    "cone_over_cycle",
]


def canonical_triangle(a: int, b: int, c: int) -> tuple[int, int, int]:
    """Rotate a triangle so its smallest vertex id comes first.

    Cyclic orientation is preserved: ``(5, 2, 7)`` and ``(7, 5, 2)`` both map
    to ``(2, 7, 5)``, while the reflection ``(2, 5, 7)`` stays distinct.
    """
    if a <= b:
        return (a, b, c) if a <= c else (c, a, b)
    return (b, c, a) if b <= c else (c, a, b)


@dataclass
class Vertex:
    """One vertex with its layer bookkeeping.

    ``theta`` is the exact position on the auxiliary circle of circumference
    ``n`` and is ``None`` only for the cone apex, which lies on no cycle.
    """

    id: int
    layer: int
    index_in_layer: int
    theta: Fraction | None


@dataclass(eq=False)
class Triangulation:
    """Immutable-by-convention abstract 2-complex.

    Triangles are stored in canonical rotation; edges and adjacency are
    derived lazily and cached, so instances are cheap to pass around and safe
    to share read-only between workers.
    """

    n: int
    vertices: list[Vertex]
    triangles: list[tuple[int, int, int]]

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ValueError(f"boundary length must be >= 3, got {self.n}")
        for i, v in enumerate(self.vertices):
            if v.id != i:
                raise ValueError(f"vertex ids must be contiguous: position {i} holds id {v.id}")
        self.triangles = [canonical_triangle(*tri) for tri in self.triangles]

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_triangles(self) -> int:
        return len(self.triangles)

    @cached_property
    def edge_incidence(self) -> dict[tuple[int, int], int]:
        """Map from undirected edge (u < v) to its incident-triangle count."""
        inc: Counter[tuple[int, int]] = Counter()
        for a, b, c in self.triangles:
            inc[_edge(a, b)] += 1
            inc[_edge(b, c)] += 1
            inc[_edge(c, a)] += 1
        return dict(inc)

    @cached_property
    def edges(self) -> list[tuple[int, int]]:
        return sorted(self.edge_incidence)

    @cached_property
    def boundary_edges(self) -> set[tuple[int, int]]:
        return {e for e, k in self.edge_incidence.items() if k == 1}

    @property
    def num_edges(self) -> int:
        return len(self.edge_incidence)


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass
class ValidationReport:
    """Total validation result: every violated invariant with a witness."""

    failures: list[str] = field(default_factory=list)
    counts: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures


def validate_disk(t: Triangulation) -> ValidationReport:
    """Check that ``t`` is a triangulated disk with boundary exactly C_n.

    Runs every structural invariant and reports all failures at once instead
    of stopping at the first, so a broken complex can be diagnosed in one
    pass:

    * no degenerate or repeated triangle, all vertex ids in range,
    * every edge lies in exactly 1 (boundary) or 2 (interior) triangles,
    * the incidence-1 edges form exactly the n-cycle on vertices 0..n-1,
    * Euler formula V - E + F = 1,
    * every vertex link is a simple path (boundary) or cycle (interior).
    """
    rep = ValidationReport()
    if not t.triangles:
        rep.failures.append("complex has no triangles")
        return rep

    nv = t.num_vertices
    seen: set[tuple[int, int, int]] = set()
    for tri in t.triangles:
        a, b, c = tri
        if len({a, b, c}) < 3:
            rep.failures.append(f"degenerate triangle {tri}")
            continue
        if not (0 <= a < nv and 0 <= b < nv and 0 <= c < nv):
            rep.failures.append(f"triangle {tri} references a vertex id outside 0..{nv - 1}")
            continue
        if tri in seen:
            rep.failures.append(f"repeated triangle {tri}")
        seen.add(tri)

    inc = t.edge_incidence
    bad_incidence = [(e, k) for e, k in sorted(inc.items()) if k not in (1, 2)]
    for e, k in bad_incidence[:10]:
        rep.failures.append(f"edge {e} lies in {k} triangles (expected 1 or 2)")
    if len(bad_incidence) > 10:
        rep.failures.append(f"... and {len(bad_incidence) - 10} more edges with bad incidence")

    boundary = {e for e, k in inc.items() if k == 1}
    expected = {_edge(i, (i + 1) % t.n) for i in range(t.n)}
    if boundary != expected:
        missing = sorted(expected - boundary)
        extra = sorted(boundary - expected)
        if missing:
            rep.failures.append(f"cycle edges missing from the boundary: {missing[:10]}")
        if extra:
            rep.failures.append(f"unexpected boundary edges: {extra[:10]}")

    ne = len(inc)
    nf = t.num_triangles
    rep.counts = {
        "vertices": nv,
        "edges": ne,
        "triangles": nf,
        "boundary_edges": len(boundary),
        "interior_edges": ne - len(boundary),
    }
    if nv - ne + nf != 1:
        rep.failures.append(f"Euler formula violated: V - E + F = {nv} - {ne} + {nf} = {nv - ne + nf}, expected 1")

    link: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for a, b, c in t.triangles:
        if len({a, b, c}) < 3:
            continue
        link[a].append((b, c))
        link[b].append((a, c))
        link[c].append((a, b))
    boundary_vertices = {v for e in boundary for v in e}
    for v in range(nv):
        pairs = link.get(v)
        if not pairs:
            rep.failures.append(f"vertex {v} lies in no triangle")
            continue
        shape = _link_shape(pairs)
        want = "path" if v in boundary_vertices else "cycle"
        if shape != want:
            rep.failures.append(f"link of vertex {v} is {shape}, expected a {want}")
    return rep


def _link_shape(pairs: list[tuple[int, int]]) -> str:
    """Classify the link multigraph given by opposite edges: path, cycle, or why not."""
    deg: Counter[int] = Counter()
    mult: Counter[tuple[int, int]] = Counter()
    adj: dict[int, list[int]] = defaultdict(list)
    for u, v in pairs:
        deg[u] += 1
        deg[v] += 1
        mult[_edge(u, v)] += 1
        adj[u].append(v)
        adj[v].append(u)
    if any(k > 1 for k in mult.values()):
        return "a multigraph (repeated link edge)"
    nodes = list(deg)
    seen = {nodes[0]}
    queue = deque([nodes[0]])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    if len(seen) != len(nodes):
        return "disconnected"
    n_edges = len(pairs)
    degrees = sorted(deg.values())
    if n_edges == len(nodes) and all(d == 2 for d in degrees):
        return "cycle"
    if n_edges == len(nodes) - 1 and degrees[:2] == [1, 1] and all(d == 2 for d in degrees[2:]):
        return "path"
    return f"neither path nor cycle (degree multiset {degrees})"


def boundary_cycle(t: Triangulation) -> list[int]:
    """Return the boundary vertices in cyclic order, starting at 0.

    Raises ValueError if the incidence-1 edges do not form a single cycle on
    exactly the labeled boundary vertices 0..n-1.
    """
    adj: dict[int, list[int]] = defaultdict(list)
    for u, v in t.boundary_edges:
        adj[u].append(v)
        adj[v].append(u)
    if not adj:
        raise ValueError("complex has no boundary edges")
    for v, nbrs in adj.items():
        if len(nbrs) != 2:
            raise ValueError(f"boundary is not a single cycle: vertex {v} meets {len(nbrs)} boundary edges")
    start = min(adj)
    cycle = [start]
    prev, cur = None, start
    while True:
        a, b = adj[cur]
        nxt = (a if a != prev else b) if prev is not None else min(a, b)
        if nxt == start:
            break
        cycle.append(nxt)
        prev, cur = cur, nxt
    if len(cycle) != len(adj):
        raise ValueError(f"boundary edges form more than one cycle ({len(cycle)} of {len(adj)} vertices reached)")
    if cycle != list(range(t.n)):
        raise ValueError(f"boundary cycle does not match the labeled cycle on 0..{t.n - 1}")
    return cycle


def skeleton_graph(t: Triangulation) -> list[list[int]]:
    """Adjacency lists of the 1-skeleton, neighbors sorted ascending."""
    adj: list[list[int]] = [[] for _ in range(t.num_vertices)]
    for u, v in t.edges:
        adj[u].append(v)
        adj[v].append(u)
    for lst in adj:
        lst.sort()
    return adj


def cone_over_cycle(n: int) -> Triangulation:
    """The wheel: boundary cycle 0..n-1 plus one apex joined to every vertex."""
    vertices = [Vertex(i, 0, i, Fraction(i)) for i in range(n)]
    vertices.append(Vertex(n, 1, 0, None))
    triangles = [(n, i, (i + 1) % n) for i in range(n)]
    return Triangulation(n, vertices, triangles)
