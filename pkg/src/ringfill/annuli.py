"""Concentric annulus triangulations with exact circular phase bookkeeping.

Every cycle of the complex carries a phase: an exact rational offset placing
its vertices equally spaced on an auxiliary circle of circumference ``n``
(one boundary edge = one unit).  Phases are never floats; the drift audit in
:mod:`ringfill.verify` asserts equalities on them, and rounding would create
spurious failures right at the bound.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .simplicial import Triangulation, Vertex, canonical_triangle

__all__ = [
    "circ_dist",
    "staircase_indices",
    "LayerRecord",
    "DiskAssembler",
    "ANNULUS_KINDS",
]

# Annulus kinds, recorded on the outer cycle of each annulus:
#   collar            equal-length annulus in the protective collar
#   equal             equal-length annulus inside a constant-length block
#   shrink            staircase annulus dropping to a shorter cycle
#   transition-equal  block transition where the target length is unchanged
ANNULUS_KINDS = ("collar", "equal", "shrink", "transition-equal")

_EQUAL_KINDS = ("collar", "equal", "transition-equal")


def circ_dist(a: Fraction | int, b: Fraction | int, n: int) -> Fraction:
    """Shorter distance between ``a`` and ``b`` on the circle of circumference ``n``.

    Exact: returns ``min(d, n - d)`` with ``d = (a - b) mod n`` as a Fraction.
    """
    d = (Fraction(a) - Fraction(b)) % n
    return min(d, n - d)


def staircase_indices(m: int, M: int) -> list[int]:
    """The monotone step sequence ``k_i = floor(M*i/m)`` for ``i = 0..m``.

    Starts at 0, ends at M, and increases by 0 or 1 at each step whenever
    ``M <= m``; it decides which inner vertex each outer edge attaches to in
    a shrinking annulus.
    """
    return [(M * i) // m for i in range(m + 1)]


@dataclass
class LayerRecord:
    """Ledger entry for one cycle and the annulus attached on its inner side.

    ``annulus_kind`` and ``drift_bound`` stay ``None`` on the innermost cycle
    (the cone sits below it, and the auxiliary coordinate is not defined on
    the apex).  ``drift_bound`` is the exact maximum circular displacement a
    single slanted edge of that annulus may have: ``n/(2m)`` for equal-length
    annuli and ``n/M`` for a shrink to length ``M``.
    """

    index: int
    length: int
    phase: Fraction
    first_vertex: int
    annulus_kind: str | None = None
    drift_bound: Fraction | None = None

    def theta(self, i: int, n: int) -> Fraction:
        """Circular coordinate of the ``i``-th vertex of this cycle."""
        return (self.phase + Fraction(n * (i % self.length), self.length)) % n

    def vertex(self, i: int) -> int:
        """Vertex id of the ``i``-th cycle vertex, indices taken mod length."""
        return self.first_vertex + (i % self.length)


class DiskAssembler:
    """Builds a triangulated disk inward: cycles, annuli, then one cone cap.

    Single-use and single-threaded: annuli always attach to the current
    innermost cycle, and no further annulus may be added after the cone.
    """

    def __init__(self, n: int):
        if n < 3:
            raise ValueError(f"boundary cycle needs length >= 3, got {n}")
        self.n = n
        self.vertices: list[Vertex] = [Vertex(i, 0, i, Fraction(i)) for i in range(n)]
        self.triangles: list[tuple[int, int, int]] = []
        self.layers: list[LayerRecord] = [LayerRecord(0, n, Fraction(0), 0)]
        self.apex: int | None = None

    @property
    def innermost(self) -> LayerRecord:
        return self.layers[-1]

    def _require_open(self) -> None:
        if self.apex is not None:
            raise ValueError("cone cap already added; the complex is closed")

    def _new_layer(self, length: int, phase: Fraction) -> LayerRecord:
        layer = LayerRecord(len(self.layers), length, phase % self.n, len(self.vertices))
        for i in range(length):
            self.vertices.append(Vertex(layer.first_vertex + i, layer.index, i, layer.theta(i, self.n)))
        self.layers.append(layer)
        return layer

    def add_equal_annulus(self, kind: str = "equal") -> LayerRecord:
        """Attach an annulus keeping the cycle length, inner cycle offset by a half step.

        Emits the 2m triangles (U_i, U_{i+1}, V_i) and (U_{i+1}, V_i, V_{i+1});
        every slanted edge has circular displacement exactly n/(2m).
        """
        self._require_open()
        if kind not in _EQUAL_KINDS:
            raise ValueError(f"unknown equal-annulus kind {kind!r}")
        outer = self.innermost
        m = outer.length
        if m < 3:
            raise ValueError(f"equal-length annulus needs cycle length >= 3, got {m}")
        half_step = Fraction(self.n, 2 * m)
        inner = self._new_layer(m, outer.phase + half_step)
        for i in range(m):
            u0, u1 = outer.vertex(i), outer.vertex(i + 1)
            v0, v1 = inner.vertex(i), inner.vertex(i + 1)
            self.triangles.append(canonical_triangle(u0, u1, v0))
            self.triangles.append(canonical_triangle(u1, v0, v1))
        outer.annulus_kind = kind
        outer.drift_bound = half_step
        return inner

    def add_shrinking_annulus(self, target_length: int) -> LayerRecord:
        """Attach a staircase annulus from the current length m down to ``target_length``.

        The inner cycle keeps the outer phase.  Each outer edge contributes one
        triangle when its staircase index stays put and two when it advances,
        for m + M triangles total; every slanted edge has circular displacement
        at most n/M.
        """
        self._require_open()
        outer = self.innermost
        m, M = outer.length, target_length
        if M < 3 or M > m:
            raise ValueError(f"shrinking annulus needs 3 <= target <= {m}, got {M}")
        inner = self._new_layer(M, outer.phase)
        steps = staircase_indices(m, M)
        for i in range(m):
            u0, u1 = outer.vertex(i), outer.vertex(i + 1)
            k0, k1 = steps[i], steps[i + 1]
            if k1 == k0:
                self.triangles.append(canonical_triangle(u0, u1, inner.vertex(k0)))
            else:
                self.triangles.append(canonical_triangle(u0, u1, inner.vertex(k0 + 1)))
                self.triangles.append(canonical_triangle(u0, inner.vertex(k0), inner.vertex(k0 + 1)))
        outer.annulus_kind = "shrink"
        outer.drift_bound = Fraction(self.n, M)
        return inner

    def add_cone(self) -> int:
        """Close the innermost cycle with one apex vertex and a fan of triangles."""
        self._require_open()
        inner = self.innermost
        apex = len(self.vertices)
        self.vertices.append(Vertex(apex, inner.index + 1, 0, None))
        for i in range(inner.length):
            self.triangles.append(canonical_triangle(apex, inner.vertex(i), inner.vertex(i + 1)))
        self.apex = apex
        return apex

    def build(self) -> Triangulation:
        """Hand over the accumulated complex.  Do not mutate the assembler afterwards."""
        return Triangulation(self.n, self.vertices, self.triangles)
