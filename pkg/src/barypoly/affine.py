"""Dimension-generic affine points, barycenters, and distance utilities.

Everything here is immutable and validated once at construction, so values
can be shared freely across threads; all operations are pure functions.
"""

from __future__ import annotations

import math
from dataclasses import InitVar, dataclass
from typing import Iterable, Sequence

__all__ = [
    "DEFAULT_DISTINCT_TOL",
    "GeometryError",
    "AffinePoint",
    "PointFamily",
    "WeightVector",
    "distance",
    "barycenter",
    "centroid",
    "diameter",
]

DEFAULT_DISTINCT_TOL = 1e-12


class GeometryError(ValueError):
    """Invalid geometric input: bad dimension, degenerate family, bad weights."""


@dataclass(frozen=True)
class AffinePoint:
    """A point of a finite-dimensional real affine space."""

    coords: tuple[float, ...]

    def __post_init__(self) -> None:
        coords = tuple(float(c) for c in self.coords)
        if len(coords) == 0:
            raise GeometryError("a point needs at least one coordinate")
        if not all(math.isfinite(c) for c in coords):
            raise GeometryError(f"non-finite coordinate in {coords!r}")
        object.__setattr__(self, "coords", coords)

    @property
    def dim(self) -> int:
        return len(self.coords)


def _as_point(value) -> AffinePoint:
    if isinstance(value, AffinePoint):
        return value
    return AffinePoint(tuple(value))


def distance(a: AffinePoint, b: AffinePoint) -> float:
    """Euclidean distance between two points of equal dimension."""
    if a.dim != b.dim:
        raise GeometryError(f"dimension mismatch: {a.dim} vs {b.dim}")
    return math.dist(a.coords, b.coords)


@dataclass(frozen=True)
class PointFamily:
    """An ordered family of p >= 2 points sharing one dimension.

    Pairwise distinctness is checked with a small tolerance by default.
    Iterates of the polygon map may nearly coincide near convergence, so
    they are built with ``require_distinct=False``.
    """

    points: tuple[AffinePoint, ...]
    require_distinct: InitVar[bool] = True
    distinct_tol: InitVar[float] = DEFAULT_DISTINCT_TOL

    def __post_init__(self, require_distinct: bool, distinct_tol: float) -> None:
        points = tuple(_as_point(p) for p in self.points)
        if len(points) < 2:
            raise GeometryError("a family needs at least two points")
        dim = points[0].dim
        for p in points[1:]:
            if p.dim != dim:
                raise GeometryError("all points of a family must share one dimension")
        if require_distinct:
            for i in range(len(points)):
                for j in range(i + 1, len(points)):
                    if distance(points[i], points[j]) <= distinct_tol:
                        raise GeometryError(
                            f"points {i} and {j} are not distinct "
                            f"(tolerance {distinct_tol:g})"
                        )
        object.__setattr__(self, "points", points)

    @property
    def size(self) -> int:
        return len(self.points)

    @property
    def dim(self) -> int:
        return self.points[0].dim

    @classmethod
    def from_coords(cls, rows: Iterable[Sequence[float]], **kwargs) -> "PointFamily":
        return cls(tuple(AffinePoint(tuple(row)) for row in rows), **kwargs)


@dataclass(frozen=True)
class WeightVector:
    """Strictly positive barycentric weights; overall scale does not matter."""

    weights: tuple[float, ...]

    def __post_init__(self) -> None:
        weights = tuple(float(w) for w in self.weights)
        if len(weights) == 0:
            raise GeometryError("empty weight vector")
        for w in weights:
            if not math.isfinite(w) or w <= 0.0:
                raise GeometryError(f"weights must be finite and positive, got {w!r}")
        object.__setattr__(self, "weights", weights)

    @property
    def size(self) -> int:
        return len(self.weights)


def barycenter(family: PointFamily, weights: WeightVector | Sequence[float]) -> AffinePoint:
    """Weighted barycenter of the family, weights normalised by their sum."""
    w = weights if isinstance(weights, WeightVector) else WeightVector(tuple(weights))
    if w.size != family.size:
        raise GeometryError(f"{family.size} points but {w.size} weights")
    total = math.fsum(w.weights)
    shares = [wk / total for wk in w.weights]
    coords = tuple(
        math.fsum(share * p.coords[j] for share, p in zip(shares, family.points))
        for j in range(family.dim)
    )
    return AffinePoint(coords)


def centroid(family: PointFamily) -> AffinePoint:
    """Equal-weights barycenter of the family."""
    return barycenter(family, WeightVector((1.0,) * family.size))


def diameter(family: PointFamily) -> float:
    """Largest pairwise distance; zero for a family of coincident points."""
    best = 0.0
    pts = family.points
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            d = distance(pts[i], pts[j])
            if d > best:
                best = d
    return best
