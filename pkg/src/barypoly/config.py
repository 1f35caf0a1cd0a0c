"""Simulation configs: JSON parsing with full error collection, generators.

A config names a point family (explicit rows, a regular n-gon, or a seeded
random cloud), the parameter vector (plain numbers or exact fraction strings
such as "1/61"), an iteration count, tolerance overrides, and an output
selector.  Validation collects every failure instead of stopping at the
first.
"""

from __future__ import annotations

import math
import json
import os
from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Any, Sequence

from .affine import DEFAULT_DISTINCT_TOL, PointFamily
from .barypolygon import ParamVector
from .traceio import json_dumps_stable

__all__ = [
    "ENV_SEED",
    "KNOWN_TOLERANCES",
    "OUTPUT_FORMATS",
    "ConfigError",
    "FamilySpec",
    "SimulationConfig",
    "parse_number",
    "parse_config",
    "serialize_config",
    "regular_ngon",
    "random_family",
    "resolve_seed",
    "build_family",
    "build_params",
]

ENV_SEED = "BARYPOLY_SEED"
KNOWN_TOLERANCES = ("stationary", "periodic", "regular", "distinct")
OUTPUT_FORMATS = ("csv", "json", "svg")
_FAMILY_KINDS = ("regular", "random")


class ConfigError(ValueError):
    """One or more config validation failures; ``errors`` lists all of them."""

    def __init__(self, errors: Sequence[str]):
        self.errors = list(errors)
        super().__init__("; ".join(self.errors))


def parse_number(value: Any) -> float:
    """Accept JSON numbers plus exact fraction strings like "1/61"."""
    if isinstance(value, bool):
        raise ValueError(f"not a number: {value!r}")
    if isinstance(value, (int, float)):
        result = float(value)
    elif isinstance(value, str):
        try:
            result = float(Fraction(value.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a number: {value!r}") from exc
    else:
        raise ValueError(f"not a number: {value!r}")
    if not math.isfinite(result):
        raise ValueError(f"not a finite number: {value!r}")
    return result


@dataclass(frozen=True)
class FamilySpec:
    """Generator for a point family: a regular n-gon or a seeded random cloud."""

    kind: str
    p: int
    dim: int = 2
    radius: float = 1.0
    center: tuple[float, ...] = (0.0, 0.0)
    seed: int | None = None


@dataclass(frozen=True)
class SimulationConfig:
    """A validated simulation request."""

    t: tuple[float, ...]
    iterations: int = 0
    points: tuple[tuple[float, ...], ...] | None = None
    family: FamilySpec | None = None
    tolerances: tuple[tuple[str, float], ...] = ()
    output_format: str | None = None
    output_path: str | None = None

    def tolerance(self, name: str, default: float) -> float:
        for key, value in self.tolerances:
            if key == name:
                return value
        return default


def _validate_points(raw: Any, errors: list[str], distinct_tol: float):
    if not isinstance(raw, list) or len(raw) < 2:
        errors.append("'points' must be a list of at least two coordinate rows")
        return None
    rows: list[tuple[float, ...]] = []
    dim = None
    for i, row in enumerate(raw):
        if not isinstance(row, list) or not row:
            errors.append(f"points[{i}] must be a non-empty coordinate list")
            return None
        try:
            coords = tuple(parse_number(c) for c in row)
        except ValueError as exc:
            errors.append(f"points[{i}]: {exc}")
            return None
        if dim is None:
            dim = len(coords)
        elif len(coords) != dim:
            errors.append(
                f"points[{i}] has dimension {len(coords)}, expected {dim}"
            )
            return None
        rows.append(coords)
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            if math.dist(rows[i], rows[j]) <= distinct_tol:
                errors.append(f"points not distinct: rows {i} and {j} coincide")
    return tuple(rows)


def _validate_family(raw: Any, errors: list[str]) -> FamilySpec | None:
    if not isinstance(raw, dict):
        errors.append("'family' must be an object")
        return None
    kind = raw.get("kind")
    if kind not in _FAMILY_KINDS:
        errors.append(f"family.kind must be one of {_FAMILY_KINDS}, got {kind!r}")
        return None
    p = raw.get("p")
    if not isinstance(p, int) or isinstance(p, bool) or p < 2:
        errors.append("family.p must be an integer >= 2")
        return None
    dim = raw.get("dim", 2)
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        errors.append("family.dim must be an integer >= 1")
        return None
    if kind == "regular" and dim != 2:
        errors.append("a regular n-gon family is planar; family.dim must be 2")
        return None
    try:
        radius = parse_number(raw.get("radius", 1.0))
    except ValueError as exc:
        errors.append(f"family.radius: {exc}")
        return None
    if radius <= 0.0:
        errors.append("family.radius must be positive")
        return None
    center_raw = raw.get("center", [0.0] * dim)
    try:
        center = tuple(parse_number(c) for c in center_raw)
    except (TypeError, ValueError):
        errors.append("family.center must be a list of numbers")
        return None
    if len(center) != dim:
        errors.append(f"family.center has dimension {len(center)}, expected {dim}")
        return None
    seed = raw.get("seed")
    if seed is not None and (not isinstance(seed, int) or isinstance(seed, bool)
                             or not 0 <= seed < 2**64):
        errors.append("family.seed must be an unsigned 64-bit integer")
        return None
    unknown = set(raw) - {"kind", "p", "dim", "radius", "center", "seed"}
    for key in sorted(unknown):
        errors.append(f"unknown family key {key!r}")
    if unknown:
        return None
    return FamilySpec(kind=kind, p=p, dim=dim, radius=radius, center=center, seed=seed)


def _validate_t(raw: Any, p: int | None, errors: list[str]):
    values = raw if isinstance(raw, list) else [raw]
    parsed: list[float] = []
    for i, item in enumerate(values):
        try:
            parsed.append(parse_number(item))
        except ValueError as exc:
            errors.append(f"t[{i}]: {exc}")
            return None
    if len(parsed) == 1:
        if p is None:
            errors.append("a single 't' value needs a family to fix its length")
            return None
        parsed = parsed * p
    if len(parsed) < 2:
        errors.append("'t' needs at least two parameters")
        return None
    if p is not None and len(parsed) != p:
        errors.append(f"'t' has {len(parsed)} entries but the family has {p} points")
    for i, v in enumerate(parsed):
        if not 0.0 < v < 1.0:
            errors.append(f"t[{i}]={v!r}: parameter out of open interval (0, 1)")
    return tuple(parsed)


def parse_config(text: str) -> SimulationConfig:
    """Parse and validate a JSON config, collecting every failure."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(
            [f"syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}"]
        ) from None
    if not isinstance(raw, dict):
        raise ConfigError(["config must be a JSON object"])

    errors: list[str] = []
    known = {"points", "family", "t", "iterations", "tolerances", "output"}
    for key in sorted(set(raw) - known):
        errors.append(f"unknown key {key!r}")

    tolerances: list[tuple[str, float]] = []
    raw_tols = raw.get("tolerances", {})
    if not isinstance(raw_tols, dict):
        errors.append("'tolerances' must be an object")
        raw_tols = {}
    for key in sorted(raw_tols):
        if key not in KNOWN_TOLERANCES:
            errors.append(f"unknown tolerance {key!r}; expected one of {KNOWN_TOLERANCES}")
            continue
        try:
            value = parse_number(raw_tols[key])
        except ValueError as exc:
            errors.append(f"tolerances.{key}: {exc}")
            continue
        if value <= 0.0:
            errors.append(f"tolerances.{key} must be positive")
            continue
        tolerances.append((key, value))
    distinct_tol = dict(tolerances).get("distinct", DEFAULT_DISTINCT_TOL)

    points = None
    family = None
    has_points = "points" in raw
    has_family = "family" in raw
    if has_points and has_family:
        errors.append("give either 'points' or 'family', not both")
    elif has_points:
        points = _validate_points(raw["points"], errors, distinct_tol)
    elif has_family:
        family = _validate_family(raw["family"], errors)

    p = None
    if points is not None:
        p = len(points)
    elif family is not None:
        p = family.p

    t = None
    if "t" not in raw:
        errors.append("missing key 't'")
    else:
        t = _validate_t(raw["t"], p, errors)

    iterations = raw.get("iterations", 0)
    if not isinstance(iterations, int) or isinstance(iterations, bool) or iterations < 0:
        errors.append("'iterations' must be a non-negative integer")
        iterations = 0

    output_format = None
    output_path = None
    raw_output = raw.get("output")
    if raw_output is not None:
        if not isinstance(raw_output, dict):
            errors.append("'output' must be an object")
        else:
            output_format = raw_output.get("format")
            if output_format is not None and output_format not in OUTPUT_FORMATS:
                errors.append(
                    f"output.format must be one of {OUTPUT_FORMATS}, got {output_format!r}"
                )
            output_path = raw_output.get("path")
            if output_path is not None and not isinstance(output_path, str):
                errors.append("output.path must be a string")

    if errors:
        raise ConfigError(errors)
    return SimulationConfig(
        t=t,
        iterations=iterations,
        points=points,
        family=family,
        tolerances=tuple(sorted(tolerances)),
        output_format=output_format,
        output_path=output_path,
    )


def serialize_config(config: SimulationConfig) -> str:
    """Config back to JSON text; parse_config(serialize_config(c)) == c."""
    doc: dict[str, Any] = {}
    if config.points is not None:
        doc["points"] = [list(row) for row in config.points]
    if config.family is not None:
        spec = config.family
        fam: dict[str, Any] = {"kind": spec.kind, "p": spec.p, "dim": spec.dim,
                               "radius": spec.radius, "center": list(spec.center)}
        if spec.seed is not None:
            fam["seed"] = spec.seed
        doc["family"] = fam
    doc["t"] = list(config.t)
    doc["iterations"] = config.iterations
    if config.tolerances:
        doc["tolerances"] = {k: v for k, v in config.tolerances}
    if config.output_format is not None or config.output_path is not None:
        out: dict[str, Any] = {}
        if config.output_format is not None:
            out["format"] = config.output_format
        if config.output_path is not None:
            out["path"] = config.output_path
        doc["output"] = out
    return json_dumps_stable(doc)


def regular_ngon(p: int, *, radius: float = 1.0,
                 center: Sequence[float] = (0.0, 0.0)) -> PointFamily:
    """Vertices of a regular p-gon on a circle, counter-clockwise from angle 0."""
    if p < 2:
        raise ValueError("p must be at least 2")
    if radius <= 0.0:
        raise ValueError("radius must be positive")
    cx, cy = float(center[0]), float(center[1])
    rows = []
    for k in range(p):
        angle = 2.0 * math.pi * k / p
        rows.append((cx + radius * math.cos(angle), cy + radius * math.sin(angle)))
    return PointFamily.from_coords(rows)


def resolve_seed(explicit: int | None) -> int:
    """Explicit seed, else the BARYPOLY_SEED environment variable, else 0."""
    if explicit is not None:
        return explicit
    raw = os.environ.get(ENV_SEED)
    if raw is None:
        return 0
    try:
        seed = int(raw, 10)
    except ValueError:
        raise ConfigError(
            [f"{ENV_SEED} must be an unsigned decimal integer, got {raw!r}"]
        ) from None
    if not 0 <= seed < 2**64:
        raise ConfigError([f"{ENV_SEED} must fit in 64 unsigned bits, got {raw!r}"])
    return seed


def random_family(p: int, dim: int, seed: int | None = None) -> PointFamily:
    """Seeded uniform random family in [-1, 1]^dim; deterministic per seed."""
    if p < 2:
        raise ValueError("p must be at least 2")
    if dim < 1:
        raise ValueError("dim must be at least 1")
    rng = Random(resolve_seed(seed))
    for _ in range(64):
        rows = [tuple(rng.uniform(-1.0, 1.0) for _ in range(dim)) for _ in range(p)]
        separation = min(
            math.dist(rows[i], rows[j])
            for i in range(p) for j in range(i + 1, p)
        )
        if separation > 1e-6:
            return PointFamily.from_coords(rows)
    raise ArithmeticError("could not draw a distinct random family")


def build_family(config: SimulationConfig) -> PointFamily:
    """Materialise the config's family, explicit rows or generator."""
    distinct_tol = config.tolerance("distinct", DEFAULT_DISTINCT_TOL)
    if config.points is not None:
        return PointFamily.from_coords(config.points, distinct_tol=distinct_tol)
    if config.family is None:
        raise ConfigError(["config carries neither 'points' nor 'family'"])
    spec = config.family
    if spec.kind == "regular":
        return regular_ngon(spec.p, radius=spec.radius, center=spec.center)
    return random_family(spec.p, spec.dim, spec.seed)


def build_params(config: SimulationConfig) -> ParamVector:
    """Materialise the config's parameter vector."""
    return ParamVector(config.t)
