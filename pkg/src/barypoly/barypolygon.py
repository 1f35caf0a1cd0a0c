"""The barypolygon step, iterated point families, and their closed-form limit.

One step replaces each vertex A_k by the barycenter of (A_k; t_k) and the
cyclically next vertex (A_{k+1}; 1 - t_k).  Iterating contracts the family
onto a single point whose barycentric weights over the original family have
the product form prod_{i != k} (1 - t_i).
"""

from __future__ import annotations

import math
from dataclasses import InitVar, dataclass
from typing import Sequence

from .affine import (
    AffinePoint,
    GeometryError,
    PointFamily,
    WeightVector,
    barycenter,
    diameter,
    distance,
)

__all__ = [
    "DEFAULT_TRACE_CAP",
    "ParamVector",
    "PolygonTrace",
    "excluded_products",
    "complement_products",
    "barypolygon_step",
    "iterate_sequence",
    "iterate_final",
    "iterate_to_diameter",
    "limit_weights",
    "limit_point",
    "convergence_gap",
]

DEFAULT_TRACE_CAP = 10_000


@dataclass(frozen=True)
class ParamVector:
    """Ordered barypolygon parameters, each strictly inside (0, 1).

    The derived system can drive components to exactly 0.0 or 1.0 in floating
    point.  Such vectors are produced internally with ``allow_saturated=True``
    and report ``saturated`` instead of failing validation; user input is
    always held to the strict open interval.
    """

    t: tuple[float, ...]
    allow_saturated: InitVar[bool] = False

    def __post_init__(self, allow_saturated: bool) -> None:
        t = tuple(float(v) for v in self.t)
        if len(t) < 2:
            raise ValueError("need at least two parameters")
        for v in t:
            if not math.isfinite(v):
                raise ValueError(f"non-finite parameter {v!r}")
            if allow_saturated:
                if not 0.0 <= v <= 1.0:
                    raise ValueError(f"parameter {v!r} outside [0, 1]")
            elif not 0.0 < v < 1.0:
                raise ValueError(f"parameter {v!r} outside the open interval (0, 1)")
        object.__setattr__(self, "t", t)

    @property
    def size(self) -> int:
        return len(self.t)

    @property
    def saturated(self) -> bool:
        return any(v == 0.0 or v == 1.0 for v in self.t)

    @property
    def spread(self) -> float:
        return max(self.t) - min(self.t)

    def is_regular(self, tol: float = 0.0) -> bool:
        return self.spread <= tol


def excluded_products(values: Sequence[float]) -> tuple[float, ...]:
    """For each index k, the product of all entries other than the k-th."""
    n = len(values)
    out = []
    for k in range(n):
        prod = 1.0
        for i in range(n):
            if i != k:
                prod *= values[i]
        out.append(prod)
    return tuple(out)


def complement_products(values: Sequence[float]) -> tuple[float, ...]:
    """For each index k, the product of (1 - v_i) over all entries i != k."""
    return excluded_products(tuple(1.0 - v for v in values))


def barypolygon_step(current: PointFamily, t: ParamVector) -> PointFamily:
    """Move every vertex toward its cyclic successor.

    Vertex k goes to t_k * A_k + (1 - t_k) * A_{k+1}, the last vertex closing
    the cycle with the first.  Output distinctness is not enforced: iterates
    coincide in the limit.
    """
    p = current.size
    if t.size != p:
        raise GeometryError(f"{p} points but {t.size} parameters")
    pts = current.points
    moved = []
    for k in range(p):
        a = pts[k].coords
        b = pts[(k + 1) % p].coords
        tk = t.t[k]
        ck = 1.0 - tk
        moved.append(AffinePoint(tuple(tk * ai + ck * bi for ai, bi in zip(a, b))))
    return PointFamily(tuple(moved), require_distinct=False)


@dataclass(frozen=True)
class PolygonTrace:
    """Stored iterates of the polygon map, index 0 being the input family."""

    iterates: tuple[PointFamily, ...]
    params: ParamVector

    def __post_init__(self) -> None:
        if len(self.iterates) == 0:
            raise GeometryError("a trace needs at least the starting family")
        first = self.iterates[0]
        for fam in self.iterates[1:]:
            if fam.size != first.size or fam.dim != first.dim:
                raise GeometryError("all iterates must share size and dimension")
        if self.params.size != first.size:
            raise GeometryError("parameter count must match the family size")

    @property
    def size(self) -> int:
        return self.iterates[0].size

    @property
    def dim(self) -> int:
        return self.iterates[0].dim

    @property
    def steps(self) -> int:
        return len(self.iterates) - 1


def iterate_sequence(
    start: PointFamily,
    t: ParamVector,
    n: int,
    *,
    cap: int = DEFAULT_TRACE_CAP,
) -> PolygonTrace:
    """Run n polygon steps keeping every iterate.

    Storage is capped (default 10000 iterates); use :func:`iterate_final` for
    longer runs that only need the end state.
    """
    if n < 0:
        raise ValueError("step count must be non-negative")
    if n + 1 > cap:
        raise ValueError(f"trace of {n + 1} families exceeds the cap of {cap}; "
                         "use iterate_final for long runs")
    iterates = [start]
    current = start
    for _ in range(n):
        current = barypolygon_step(current, t)
        iterates.append(current)
    return PolygonTrace(tuple(iterates), t)


def iterate_final(start: PointFamily, t: ParamVector, n: int) -> PointFamily:
    """Run n polygon steps keeping only the latest family."""
    if n < 0:
        raise ValueError("step count must be non-negative")
    current = start
    for _ in range(n):
        current = barypolygon_step(current, t)
    return current


def iterate_to_diameter(
    start: PointFamily,
    t: ParamVector,
    *,
    eps: float = 1e-12,
    max_steps: int = DEFAULT_TRACE_CAP,
) -> tuple[PointFamily, int]:
    """Step until the family diameter falls below eps; returns (family, steps)."""
    current = start
    steps = 0
    while diameter(current) >= eps and steps < max_steps:
        current = barypolygon_step(current, t)
        steps += 1
    return current, steps


def limit_weights(t: ParamVector) -> WeightVector:
    """Barycentric weights of the iteration limit, in bounded product form."""
    return WeightVector(complement_products(t.t))


def limit_point(family: PointFamily, t: ParamVector) -> AffinePoint:
    """Closed-form limit of the iterated polygon sequence started at family."""
    if t.size != family.size:
        raise GeometryError(f"{family.size} points but {t.size} parameters")
    return barycenter(family, limit_weights(t))


def convergence_gap(trace: PolygonTrace, target: AffinePoint) -> list[float]:
    """Largest vertex distance to the target, one value per stored iterate."""
    if target.dim != trace.dim:
        raise GeometryError(f"dimension mismatch: {target.dim} vs {trace.dim}")
    return [max(distance(pt, target) for pt in fam.points) for fam in trace.iterates]
