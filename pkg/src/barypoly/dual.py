"""Dual points of the derived parameter orbit and their march to the centroid.

The m-th dual point is the closed-form limit of the t^(m)-polygon iteration
of a fixed family.  Its product-form weights are exactly one derived step of
t^(m), which ties the dual sequence to the derived system; as the weight
ratios flatten the dual points drive into the centroid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .affine import AffinePoint, PointFamily, centroid, diameter, distance
from .barypolygon import ParamVector, complement_products, limit_point
from .derived import DerivedTrace, derived_trace

__all__ = [
    "DualTrace",
    "CentroidConvergenceReport",
    "dual_point",
    "dual_trace",
    "centroid_convergence_report",
]


@dataclass(frozen=True)
class DualTrace:
    """Dual points G_0, G_1, ... of one family with centroid distances."""

    family: PointFamily
    points: tuple[AffinePoint, ...]
    distances: tuple[float, ...]
    params_used: DerivedTrace

    def __post_init__(self) -> None:
        if len(self.points) != len(self.distances):
            raise ValueError("points and distances must align")
        if len(self.points) == 0:
            raise ValueError("a dual trace needs at least one point")
        if any(d < 0.0 for d in self.distances):
            raise ValueError("distances must be non-negative")

    @property
    def truncated(self) -> bool:
        """Whether saturation or the weight floor cut the trace short."""
        return len(self.points) < len(self.params_used.params)

    @property
    def steps(self) -> int:
        return len(self.points) - 1


def dual_point(family: PointFamily, t: ParamVector) -> AffinePoint:
    """Limit point of the t-polygon iteration of the family.

    Its product-form barycentric weights coincide componentwise with one
    derived step of t.
    """
    return limit_point(family, t)


WEIGHT_FLOOR = 1e-11


def dual_trace(
    family: PointFamily,
    t0: ParamVector,
    steps: int,
    *,
    weight_floor: float = WEIGHT_FLOOR,
) -> DualTrace:
    """Dual points for the derived orbit of t0, truncated at saturation.

    The weights of G_m are the entry t^(m+1); once a component of that entry
    falls under ``weight_floor`` it is dominated by the rounding of
    1 - (product near 1) and the computed dual point carries no information,
    so the trace stops there (and at exact saturation at the latest).  By the
    cut the recorded distances sit far below any reporting threshold.
    """
    dt = derived_trace(t0, steps)
    end = len(dt.params) if dt.saturated_at is None else dt.saturated_at
    usable = []
    for m in range(end):
        entry = dt.params[m]
        if min(complement_products(entry.t)) < weight_floor:
            break
        usable.append(entry)
    if not usable:
        usable = [dt.params[0]]
    g = centroid(family)
    points = tuple(dual_point(family, t) for t in usable)
    dists = tuple(distance(pt, g) for pt in points)
    return DualTrace(family, points, dists, dt)


@dataclass(frozen=True)
class CentroidConvergenceReport:
    """Distance-to-centroid profile of a dual trace."""

    distances: tuple[float, ...]
    threshold: float
    first_below: int | None
    decay_rate: float | None
    immediate: bool
    conjectured: bool
    truncated: bool


def centroid_convergence_report(
    trace: DualTrace,
    *,
    threshold: float = 1e-6,
    regular_tol: float = 1e-12,
    fit_floor: float | None = None,
) -> CentroidConvergenceReport:
    """Report how fast the dual points approach the centroid.

    Covers p = 3 and regular starts of any p >= 3; an irregular start with
    p >= 4 produces the same numbers flagged ``conjectured``.  p = 2 duals
    can be periodic rather than convergent and are rejected.  The decay rate
    is a least-squares geometric fit of the distances above the saturation
    floor; a constant-at-centroid trace is reported as immediate convergence
    with no rate.
    """
    t0 = trace.params_used.params[0]
    if t0.size == 2:
        raise ValueError("the centroid report covers p >= 3")
    regular = t0.spread <= regular_tol
    conjectured = t0.size >= 4 and not regular

    d = trace.distances
    first_below = next((m for m, x in enumerate(d) if x < threshold), None)
    floor = fit_floor if fit_floor is not None else 1e-13 * max(diameter(trace.family), 1.0)
    immediate = regular or all(x <= floor for x in d)

    decay_rate = None
    if not immediate:
        samples = [(float(m), math.log(x)) for m, x in enumerate(d) if x > floor]
        if len(samples) >= 2:
            n = float(len(samples))
            sx = math.fsum(m for m, _ in samples)
            sy = math.fsum(y for _, y in samples)
            sxx = math.fsum(m * m for m, _ in samples)
            sxy = math.fsum(m * y for m, y in samples)
            denom = n * sxx - sx * sx
            if denom > 0.0:
                decay_rate = math.exp((n * sxy - sx * sy) / denom)
    return CentroidConvergenceReport(
        distances=d,
        threshold=threshold,
        first_below=first_below,
        decay_rate=decay_rate,
        immediate=immediate,
        conjectured=conjectured,
        truncated=trace.truncated,
    )
