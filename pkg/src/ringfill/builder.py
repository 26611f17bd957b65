"""Layer schedule computation and assembly of the full concentric filling.

A filling of the boundary cycle C_n is built in three stages: a protective
collar of full-length annuli, a main region whose cycle lengths follow the
square-root profile sqrt(1 - 4t) in constant-length blocks with sparse
shrinking transitions, and a cone cap closing the innermost cycle.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .annuli import DiskAssembler, LayerRecord
from .simplicial import Triangulation

__all__ = [
    "ScheduleError",
    "Params",
    "Schedule",
    "BuildResult",
    "as_fraction",
    "ceil_sqrt",
    "compute_schedule",
    "build_filling",
    "predict_density",
]


class ScheduleError(ValueError):
    """The requested parameters cannot produce a well-formed layer schedule."""


def as_fraction(x: Fraction | int | float | str) -> Fraction:
    """Exact rational from a Fraction, int, decimal/fraction string, or float.

    Floats go through their shortest repr, so ``as_fraction(0.1)`` is exactly
    1/10 rather than the 53-bit binary approximation.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(repr(x))
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def ceil_sqrt(value: Fraction) -> int:
    """Smallest integer k with k*k >= value, computed exactly.

    Ceiling of an irrational square root is not float-safe near integers, so
    this works on the rational radicand directly via integer square roots.
    """
    num, den = value.numerator, value.denominator
    if num <= 0:
        return 0
    k = math.isqrt(num // den)
    while k * k * den < num:
        k += 1
    return k


@dataclass(frozen=True)
class Params:
    """Parameter triple (n, rho, eta) driving one construction.

    ``rho`` is the collar share of the radius, ``eta`` the innermost cycle
    length as a fraction of n.  Both are stored as exact rationals.
    """

    n: int
    rho: Fraction
    eta: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "rho", as_fraction(self.rho))
        object.__setattr__(self, "eta", as_fraction(self.eta))
        if self.n < 3:
            raise ScheduleError(f"boundary length must be >= 3, got {self.n}")
        if self.rho <= 0:
            raise ScheduleError(f"rho must be positive, got {self.rho}")
        if not 0 < self.eta < 1:
            raise ScheduleError(f"eta must lie in (0, 1), got {self.eta}")
        if self.eta * self.eta >= self.rho:
            raise ScheduleError(
                f"eta^2 < rho violated ({float(self.eta * self.eta)} >= {float(self.rho)})"
            )


@dataclass(frozen=True)
class Schedule:
    """Deterministic construction plan derived from Params.

    ``block_lengths[b]`` is the cycle length used throughout block b;
    ``block_lengths[-1]`` is the innermost cycle closed by the cone.
    """

    n: int
    collar_layers: int
    num_blocks: int
    layers_per_block: int
    stop_time: Fraction
    block_width: Fraction
    block_times: tuple[Fraction, ...]
    block_lengths: tuple[int, ...]

    @property
    def predicted_vertex_count(self) -> int:
        lengths = self.block_lengths
        main = sum(
            self.layers_per_block * lengths[b] + lengths[b + 1] for b in range(self.num_blocks)
        )
        return self.n * (self.collar_layers + 1) + main + 1

    @property
    def predicted_triangle_count(self) -> int:
        lengths = self.block_lengths
        main = sum(
            2 * self.layers_per_block * lengths[b] + lengths[b] + lengths[b + 1]
            for b in range(self.num_blocks)
        )
        return 2 * self.n * self.collar_layers + main + lengths[-1]


def compute_schedule(p: Params) -> Schedule:
    """Evaluate the construction plan for ``p``, rejecting parameters that
    would force a degenerate layer (cycle shorter than 3, empty blocks, or a
    missing collar) with a message naming each violated bound."""
    n = p.n
    collar = math.ceil(p.rho * n)
    root = math.isqrt(n)
    blocks = root if root * root == n else root + 1
    stop = (1 - p.eta * p.eta) / 4
    width = stop / blocks
    per_block = math.floor(n * width)
    times = tuple(b * width for b in range(blocks + 1))
    lengths = tuple(ceil_sqrt(n * n * (1 - 4 * t)) for t in times)

    violations = []
    if collar < 1:
        violations.append(f"collar has {collar} < 1 layers")
    if per_block < 1:
        violations.append(f"blocks hold {per_block} < 1 layers each (n too small for {blocks} blocks)")
    if min(lengths) < 3:
        violations.append(f"innermost cycle length {min(lengths)} < 3 (raise eta or n)")
    if violations:
        raise ScheduleError("; ".join(violations))

    assert lengths[0] == n, "profile starts at the full boundary length"
    assert lengths[-1] == math.ceil(p.eta * n), "profile stops at the ceiling of eta*n"
    assert all(lengths[b] >= lengths[b + 1] for b in range(blocks)), "cycle lengths non-increasing"
    return Schedule(n, collar, blocks, per_block, stop, width, times, lengths)


@dataclass(eq=False)
class BuildResult:
    """A built filling along with its plan, ledger, and exact count checks."""

    triangulation: Triangulation
    ledger: list[LayerRecord]
    schedule: Schedule
    params: Params
    apex: int
    predicted_vertex_count: int
    predicted_triangle_count: int

    @property
    def density(self) -> Fraction:
        """Exact vertex count over n squared."""
        return Fraction(self.triangulation.num_vertices, self.params.n**2)


def build_filling(p: Params) -> BuildResult:
    """Assemble the full complex for ``p``: collar, stepped main region, cone.

    The boundary of the result is exactly the labeled cycle 0..n-1.  Vertex
    and triangle counts are predicted from the schedule in closed form and
    checked against the assembled complex before returning.
    """
    sched = compute_schedule(p)
    asm = DiskAssembler(p.n)
    for _ in range(sched.collar_layers):
        asm.add_equal_annulus(kind="collar")
    for b in range(sched.num_blocks):
        assert asm.innermost.length == sched.block_lengths[b]
        for _ in range(sched.layers_per_block):
            asm.add_equal_annulus(kind="equal")
        if sched.block_lengths[b + 1] < sched.block_lengths[b]:
            asm.add_shrinking_annulus(sched.block_lengths[b + 1])
        else:
            asm.add_equal_annulus(kind="transition-equal")
    apex = asm.add_cone()
    tri = asm.build()

    pv = sched.predicted_vertex_count
    pt = sched.predicted_triangle_count
    if pv != tri.num_vertices or pt != tri.num_triangles:
        raise RuntimeError(
            f"count mismatch: predicted {pv} vertices / {pt} triangles, "
            f"built {tri.num_vertices} / {tri.num_triangles}"
        )
    return BuildResult(tri, asm.layers, sched, p, apex, pv, pt)


def predict_density(p: Params) -> Fraction:
    """Asymptotic vertex density bound rho + (1 - eta^3) / 6, exactly."""
    return p.rho + (1 - p.eta**3) / 6
