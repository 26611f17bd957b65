"""Exact metric verification of built complexes.

Three independent instruments:

* breadth-first graph distances from every boundary vertex, giving the exact
  Lipschitz constant delta of the filling;
* a per-edge drift audit checking every slanted edge against its annulus
  bound in exact rational arithmetic;
* an analytic lower-bound predictor for boundary distances derived from the
  accumulated drift of the layer ledger, sound by construction and checked
  against BFS exhaustively in the tests.
"""
from __future__ import annotations

import math
import os
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import dijkstra

from .annuli import circ_dist
from .builder import BuildResult
from .simplicial import Triangulation, skeleton_graph

__all__ = [
    "cycle_dist",
    "bfs_distances",
    "shortest_path",
    "boundary_distance_matrix",
    "VerificationReport",
    "verify_filling",
    "AnnulusAudit",
    "DriftAudit",
    "drift_audit",
    "separation_lower_bounds",
    "drift_lower_bound",
    "step_profile_eps",
    "resolve_jobs",
]


def cycle_dist(i: int, j: int, n: int) -> int:
    """Distance between boundary vertices i and j along the cycle C_n."""
    d = abs(i - j) % n
    return min(d, n - d)


def bfs_distances(adj: list[list[int]], source: int) -> list[int]:
    """Unweighted shortest-path distances from ``source`` to every vertex.

    Raises ValueError if some vertex is unreachable: a triangulated disk is
    connected, so a gap means the complex is structurally broken.
    """
    dist = [-1] * len(adj)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for v in adj[u]:
            if dist[v] < 0:
                dist[v] = du + 1
                queue.append(v)
    if min(dist) < 0:
        missing = dist.index(-1)
        raise ValueError(f"vertex {missing} unreachable from {source}: complex is disconnected")
    return dist


def shortest_path(adj: list[list[int]], source: int, target: int) -> list[int]:
    """One shortest path from source to target as a vertex list (BFS parents)."""
    parent = [-1] * len(adj)
    parent[source] = source
    queue = deque([source])
    while queue:
        u = queue.popleft()
        if u == target:
            break
        for v in adj[u]:
            if parent[v] < 0:
                parent[v] = u
                queue.append(v)
    if parent[target] < 0:
        raise ValueError(f"vertex {target} unreachable from {source}")
    path = [target]
    while path[-1] != source:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def resolve_jobs(jobs: int | None) -> int:
    """Worker count: explicit argument, else the RINGFILL_JOBS env var, else 1."""
    if jobs is not None:
        return max(1, jobs)
    env = os.environ.get("RINGFILL_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def _graph_csr(t: Triangulation) -> csr_matrix:
    edges = np.asarray(t.edges, dtype=np.int32)
    rows = np.concatenate([edges[:, 0], edges[:, 1]])
    cols = np.concatenate([edges[:, 1], edges[:, 0]])
    data = np.ones(len(rows), dtype=np.int8)
    return csr_matrix((data, (rows, cols)), shape=(t.num_vertices, t.num_vertices))


def boundary_distance_matrix(t: Triangulation, jobs: int | None = None, chunk: int = 64) -> np.ndarray:
    """Exact graph distances between all pairs of boundary vertices.

    Runs one BFS per boundary source through compiled sparse-graph routines,
    in chunks.  Chunks are independent and read-only over the shared graph,
    so they may run on ``jobs`` threads; results are assembled in source
    order either way, keeping the output deterministic.
    """
    g = _graph_csr(t)
    n = t.n
    out = np.empty((n, n), dtype=np.int64)
    spans = [(lo, min(lo + chunk, n)) for lo in range(0, n, chunk)]

    def run(span: tuple[int, int]) -> tuple[int, int, np.ndarray]:
        lo, hi = span
        d = dijkstra(g, directed=False, unweighted=True, indices=np.arange(lo, hi))
        return lo, hi, d

    workers = resolve_jobs(jobs)
    if workers > 1 and len(spans) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, spans))
    else:
        results = [run(s) for s in spans]
    for lo, hi, d in results:
        if np.isinf(d).any():
            raise ValueError("graph is disconnected: some vertex is unreachable from the boundary")
        out[lo:hi] = d[:, :n].astype(np.int64)
    return out


@dataclass(eq=False)
class VerificationReport:
    """Outcome of the exact boundary-distance verification.

    ``delta`` is the exact minimum of d_complex / d_cycle over boundary
    pairs; the complex is an isometric filling iff delta == 1.  Walking along
    the boundary shows d_complex <= d_cycle always, so delta <= 1.
    """

    n: int
    delta: Fraction
    is_isometric: bool
    worst_pair: tuple[int, int, int, int]  # (x, y, d_complex, d_cycle)
    witness_path: list[int] | None
    boundary_distances: np.ndarray
    eps: float | None = None
    histograms: list[list[int]] | None = None


def verify_filling(
    t: Triangulation,
    jobs: int | None = None,
    want_witness: bool = True,
    want_histograms: bool = False,
) -> VerificationReport:
    """Compute the exact Lipschitz constant of ``t`` over all boundary pairs.

    Requires a complex that already passed :func:`validate_disk`.  When a
    shortcut exists (delta < 1) the report carries one shortest path
    realizing the worst pair.
    """
    n = t.n
    dist = boundary_distance_matrix(t, jobs=jobs)
    idx = np.arange(n)
    gap = np.abs(idx[:, None] - idx[None, :])
    dcyc = np.minimum(gap, n - gap)
    if (dist > dcyc).any():
        x, y = map(int, np.argwhere(dist > dcyc)[0])
        raise ValueError(
            f"graph distance {dist[x, y]} exceeds cycle distance {dcyc[x, y]} "
            f"for pair ({x}, {y}): boundary cycle edges are missing"
        )
    # Distinct ratios of integers <= n differ by at least 1/n^2, far above
    # float64 rounding, so the float argmin locates the exact minimum.
    ratios = np.where(dcyc > 0, dist / np.maximum(dcyc, 1), np.inf)
    flat = int(np.argmin(ratios))
    x, y = divmod(flat, n)
    d_k, d_c = int(dist[x, y]), int(dcyc[x, y])
    delta = Fraction(d_k, d_c)
    witness = None
    if want_witness and delta < 1:
        witness = shortest_path(skeleton_graph(t), x, y)
    histograms = None
    if want_histograms:
        histograms = [np.bincount(row, minlength=1).tolist() for row in dist]
    return VerificationReport(
        n=n,
        delta=delta,
        is_isometric=delta == 1,
        worst_pair=(x, y, d_k, d_c),
        witness_path=witness,
        boundary_distances=dist,
        histograms=histograms,
    )


@dataclass
class AnnulusAudit:
    """Observed versus allowed slanted-edge displacement for one annulus."""

    layer: int
    kind: str
    bound: Fraction
    max_observed: Fraction
    ok: bool
    tight: bool  # max observed equals the bound exactly


@dataclass
class DriftAudit:
    rows: list[AnnulusAudit] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(row.ok for row in self.rows)

    def failures(self) -> list[AnnulusAudit]:
        return [row for row in self.rows if not row.ok]


def drift_audit(build: BuildResult) -> DriftAudit:
    """Check every slanted edge of every annulus against its drift bound.

    All comparisons are exact rational arithmetic.  Equal-length annuli must
    achieve their bound n/(2m) with equality on every slanted edge; shrink
    annuli stay at or below n/M.  Cone edges carry no coordinate and are
    skipped.  A violation marks a construction bug, never a tolerance issue.
    """
    t = build.triangulation
    n = t.n
    apex = build.apex
    layer_of = [v.layer for v in t.vertices]
    theta_of = [v.theta for v in t.vertices]
    num_annuli = len(build.ledger) - 1
    max_obs: list[Fraction] = [Fraction(0)] * num_annuli
    seen: set[tuple[int, int]] = set()
    for a, b, c in t.triangles:
        for u, v in ((a, b), (b, c), (c, a)):
            if u == apex or v == apex:
                continue
            lu, lv = layer_of[u], layer_of[v]
            if lu == lv:
                continue
            e = (u, v) if u < v else (v, u)
            if e in seen:
                continue
            seen.add(e)
            r = min(lu, lv)
            d = circ_dist(theta_of[u], theta_of[v], n)
            if d > max_obs[r]:
                max_obs[r] = d
    audit = DriftAudit()
    for r in range(num_annuli):
        rec = build.ledger[r]
        bound = rec.drift_bound
        audit.rows.append(
            AnnulusAudit(
                layer=r,
                kind=rec.annulus_kind,
                bound=bound,
                max_observed=max_obs[r],
                ok=max_obs[r] <= bound,
                tight=max_obs[r] == bound,
            )
        )
    return audit


def separation_lower_bounds(build: BuildResult) -> list[int]:
    """Lower bounds on graph distance between boundary vertices, by separation.

    Entry L is a certified lower bound on d_complex(x, y) whenever the cycle
    distance of (x, y) is L.  A path whose deepest layer is cycle h pays 2h
    slanted edges, and whatever part of the circular separation L is not
    covered by the accumulated drift of those crossings must be paid by
    horizontal edges of circular length at most n/m_h.  Paths through the
    cone cross every collar and block annulus twice.  The result is the
    minimum over all cases, rounded up to whole edges.
    """
    cached = getattr(build, "_separation_bounds", None)
    if cached is not None:
        return cached
    ledger = build.ledger
    n = build.params.n
    depth = len(ledger) - 1
    drift = [Fraction(0)] * (depth + 1)
    for r in range(depth):
        drift[r + 1] = drift[r] + 2 * ledger[r].drift_bound
    lengths = [rec.length for rec in ledger]
    sched = build.schedule
    cone_bound = 2 * sched.collar_layers + 2 * sched.num_blocks * sched.layers_per_block

    table: list[int] = []
    for sep in range(n // 2 + 1):
        best = cone_bound
        for h in range(depth + 1):
            if 2 * h >= best:
                break  # deeper layers only cost more
            slack = sep - drift[h]
            if slack > 0:
                val = 2 * h + math.ceil(Fraction(lengths[h] * slack.numerator, n * slack.denominator))
            else:
                val = 2 * h
            if val < best:
                best = val
        table.append(best)
    build._separation_bounds = table
    return table


def drift_lower_bound(build: BuildResult, x: int, y: int) -> int:
    """Certified lower bound on the graph distance between boundary x and y."""
    return separation_lower_bounds(build)[cycle_dist(x, y, build.params.n)]


def step_profile_eps(build: BuildResult) -> float:
    """Worst deviation of the built layers from the ideal square-root profile.

    For every cycle h of the main region, compares depth, relative cycle
    length, and accumulated drift against their smooth counterparts at the
    rescaled depth tau_h (equal-length annuli passed inside the main region,
    over n).  The maximum of the three normalized discrepancies shrinks as n
    grows; the sweep records it per run.
    """
    ledger = build.ledger
    n = build.params.n
    rho = float(build.params.rho)
    collar = build.schedule.collar_layers
    depth = len(ledger) - 1
    drift = Fraction(0)
    main_equal = 0
    worst = 0.0
    for h in range(depth + 1):
        if h >= collar:
            tau = main_equal / n
            q = math.sqrt(1.0 - 4.0 * tau)
            integral = (1.0 - q) / 2.0
            d_depth = abs(2 * h - 2 * rho * n - 2 * tau * n) / n
            d_length = abs(ledger[h].length / n - q)
            d_drift = abs(float(drift) - rho * n - n * integral) / n
            worst = max(worst, d_depth, d_length, d_drift)
        if h < depth:
            drift += 2 * ledger[h].drift_bound
            if ledger[h].annulus_kind == "equal":
                main_equal += 1
    return worst
