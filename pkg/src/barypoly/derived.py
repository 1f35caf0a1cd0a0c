"""The derived parameter system, its conjugate, and convergence diagnostics.

The derived system maps a parameter vector t to the vector of products
prod_{i != k} (1 - t_i).  Substituting u = 1 - t componentwise yields the
conjugate recurrence u'_k = 1 - prod_{i != k} u_i, which is the form the
p = 3 analysis works in: fixed points, the linearisation around the interior
fixed point (alpha, alpha, alpha), order preservation, two-step ratio
contraction, lock-in detection, and the bounding-sequence squeeze.

alpha_p is the unique root in [0, 1] of x**(p-1) + x - 1.  For p = 3 it is
the golden ratio conjugate (sqrt(5) - 1) / 2.
"""

from __future__ import annotations

import math
from dataclasses import InitVar, dataclass
from enum import Enum
from functools import lru_cache
from typing import Sequence

from .barypolygon import ParamVector, complement_products, excluded_products

__all__ = [
    "ConjugateState",
    "DerivedTrace",
    "ConjugateTrace",
    "DynamicsVerdict",
    "DynamicsClass",
    "ClassifyConfig",
    "StabilityReport3",
    "RatioBoundReport",
    "BoundingSequenceReport",
    "derived_step",
    "conjugate_step",
    "derived_trace",
    "conjugate_trace",
    "solve_alpha",
    "regular_map",
    "double_step_drift",
    "drift_slope_peak",
    "derived_residual",
    "conjugate_residual",
    "stability_report_p3",
    "classify_dynamics",
    "find_lockin",
    "order_check",
    "ratio_bound_check",
    "double_step_identity_residual",
    "bounding_sequence_check",
]


@dataclass(frozen=True)
class ConjugateState:
    """State of the conjugate recurrence; componentwise 1 - t.

    Like :class:`ParamVector`, endpoint components mark float saturation and
    are only accepted when constructed with ``allow_saturated=True``.
    """

    u: tuple[float, ...]
    allow_saturated: InitVar[bool] = False

    def __post_init__(self, allow_saturated: bool) -> None:
        u = tuple(float(v) for v in self.u)
        if len(u) < 2:
            raise ValueError("need at least two components")
        for v in u:
            if not math.isfinite(v):
                raise ValueError(f"non-finite component {v!r}")
            if allow_saturated:
                if not 0.0 <= v <= 1.0:
                    raise ValueError(f"component {v!r} outside [0, 1]")
            elif not 0.0 < v < 1.0:
                raise ValueError(f"component {v!r} outside the open interval (0, 1)")
        object.__setattr__(self, "u", u)

    @classmethod
    def from_params(cls, t: ParamVector) -> "ConjugateState":
        return cls(tuple(1.0 - v for v in t.t), allow_saturated=True)

    def to_params(self) -> ParamVector:
        return ParamVector(tuple(1.0 - v for v in self.u), allow_saturated=True)

    @property
    def size(self) -> int:
        return len(self.u)

    @property
    def saturated(self) -> bool:
        return any(v == 0.0 or v == 1.0 for v in self.u)


def derived_step(t: ParamVector) -> ParamVector:
    """One step of the derived system: t'_k = prod_{i != k} (1 - t_i).

    The result lies in (0, 1)^p mathematically but may round to an endpoint
    in floats; that is flagged through ``saturated``, not treated as an error.
    """
    return ParamVector(complement_products(t.t), allow_saturated=True)


def conjugate_step(u: ConjugateState) -> ConjugateState:
    """One step of the conjugate recurrence: u'_k = 1 - prod_{i != k} u_i."""
    prods = excluded_products(u.u)
    return ConjugateState(tuple(1.0 - pr for pr in prods), allow_saturated=True)


@dataclass(frozen=True)
class DerivedTrace:
    """Parameter orbit t^(0), t^(1), ...; stops at float saturation."""

    params: tuple[ParamVector, ...]
    saturated_at: int | None = None

    def __post_init__(self) -> None:
        if len(self.params) == 0:
            raise ValueError("a trace needs at least the initial vector")
        p = self.params[0].size
        for entry in self.params:
            if entry.size != p:
                raise ValueError("all entries must share one length")
        if self.saturated_at is not None:
            if not 0 <= self.saturated_at < len(self.params):
                raise ValueError("saturation index out of range")
            if not self.params[self.saturated_at].saturated:
                raise ValueError("entry at the saturation index is not saturated")
        for m, entry in enumerate(self.params):
            if entry.saturated and (self.saturated_at is None or m < self.saturated_at):
                raise ValueError(f"unflagged saturated entry at index {m}")

    @property
    def size(self) -> int:
        return self.params[0].size

    @property
    def steps(self) -> int:
        return len(self.params) - 1


@dataclass(frozen=True)
class ConjugateTrace:
    """Conjugate orbit u_0, u_1, ...; stops at float saturation."""

    states: tuple[ConjugateState, ...]
    saturated_at: int | None = None

    def __post_init__(self) -> None:
        if len(self.states) == 0:
            raise ValueError("a trace needs at least the initial state")
        p = self.states[0].size
        for entry in self.states:
            if entry.size != p:
                raise ValueError("all entries must share one length")
        if self.saturated_at is not None:
            if not 0 <= self.saturated_at < len(self.states):
                raise ValueError("saturation index out of range")

    @property
    def size(self) -> int:
        return self.states[0].size

    @property
    def steps(self) -> int:
        return len(self.states) - 1


def derived_trace(t0: ParamVector, steps: int) -> DerivedTrace:
    """Run the derived system for up to ``steps`` steps from t0.

    Recording stops with the first entry holding a component rounded to
    exactly 0 or 1; its index is reported as ``saturated_at``.
    """
    if steps < 0:
        raise ValueError("step count must be non-negative")
    entries = [t0]
    saturated_at = 0 if t0.saturated else None
    current = t0
    if saturated_at is None:
        for m in range(1, steps + 1):
            current = derived_step(current)
            entries.append(current)
            if current.saturated:
                saturated_at = m
                break
    return DerivedTrace(tuple(entries), saturated_at)


def conjugate_trace(u0: ConjugateState, steps: int) -> ConjugateTrace:
    """Run the conjugate recurrence for up to ``steps`` steps from u0."""
    if steps < 0:
        raise ValueError("step count must be non-negative")
    entries = [u0]
    saturated_at = 0 if u0.saturated else None
    current = u0
    if saturated_at is None:
        for m in range(1, steps + 1):
            current = conjugate_step(current)
            entries.append(current)
            if current.saturated:
                saturated_at = m
                break
    return ConjugateTrace(tuple(entries), saturated_at)


@lru_cache(maxsize=None)
def solve_alpha(p: int, residual_tol: float = 1e-14) -> float:
    """Unique root in [0, 1] of x**(p-1) + x - 1, bisection then Newton polish.

    The polynomial increases strictly from -1 to 1 on [0, 1], so the root
    exists and is unique for every p >= 2.
    """
    if p < 2:
        raise ValueError("p must be at least 2")
    e = p - 1

    def poly(x: float) -> float:
        return x**e + x - 1.0

    lo, hi = 0.0, 1.0
    x = 0.5
    for _ in range(48):
        x = 0.5 * (lo + hi)
        r = poly(x)
        if r == 0.0:
            return x
        if r < 0.0:
            lo = x
        else:
            hi = x
    best_x, best_r = x, abs(poly(x))
    for _ in range(8):
        r = poly(x)
        d = e * x ** (e - 1) + 1.0
        step = r / d
        x -= step
        if not 0.0 < x < 1.0:
            break
        ar = abs(poly(x))
        if ar < best_r:
            best_x, best_r = x, ar
        if step == 0.0:
            break
    if best_r > residual_tol:
        raise ArithmeticError(f"root polish stalled at residual {best_r:g} for p={p}")
    return best_x


def _check_regular_args(p: int, x: float) -> None:
    if p < 3:
        raise ValueError("p must be at least 3")
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x must lie in [0, 1], got {x!r}")


def regular_map(p: int, x: float) -> float:
    """One step of the regular conjugate recurrence: x -> 1 - x**(p-1)."""
    _check_regular_args(p, x)
    return 1.0 - x ** (p - 1)


def double_step_drift(p: int, x: float) -> float:
    """Displacement of x after two regular steps; zero exactly at 0, alpha_p, 1."""
    _check_regular_args(p, x)
    return 1.0 - x - (1.0 - x ** (p - 1)) ** (p - 1)


def drift_slope_peak(p: int) -> tuple[float, float]:
    """Location and value of the maximum slope of the double-step drift.

    The slope -1 + (p-1)^2 x^(p-2) (1 - x^(p-1))^(p-2) peaks at
    x = (1/p)^(1/(p-1)); the peak value is positive for every p >= 3,
    which is what pins the drift to exactly three roots.
    """
    if p < 3:
        raise ValueError("p must be at least 3")
    theta = (1.0 / p) ** (1.0 / (p - 1))
    mu = -1.0 + (p - 1) ** 2 * theta ** (p - 2) * (1.0 - theta ** (p - 1)) ** (p - 2)
    if not mu > 0.0:
        raise ArithmeticError(f"expected a positive peak slope for p={p}, got {mu!r}")
    return theta, mu


def derived_residual(values: Sequence[float]) -> float:
    """Max componentwise defect of being a derived-system fixed point."""
    prods = complement_products(values)
    return max(abs(v - pr) for v, pr in zip(values, prods))


def conjugate_residual(values: Sequence[float]) -> float:
    """Max componentwise defect of being a conjugate fixed point."""
    prods = excluded_products(values)
    return max(abs(v - (1.0 - pr)) for v, pr in zip(values, prods))


@dataclass(frozen=True)
class StabilityReport3:
    """Fixed points and local linearisation of the p = 3 systems.

    ``jacobian`` is the symmetric zero-diagonal linearisation of the conjugate
    system at (alpha, alpha, alpha); its spectrum is {alpha, alpha, -2 alpha},
    and 2 alpha > 1 makes the interior fixed point exponentially unstable.
    """

    alpha: float
    conjugate_points: tuple[tuple[float, float, float], ...]
    derived_points: tuple[tuple[float, float, float], ...]
    max_fixed_point_residual: float
    jacobian: tuple[tuple[float, float, float], ...]
    char_poly: tuple[float, float, float, float]
    eigenvalues: tuple[float, float, float]
    spectral_radius: float


def _char_poly_3x3(m: Sequence[Sequence[float]]) -> tuple[float, float, float, float]:
    """Monic characteristic polynomial coefficients (1, c2, c1, c0)."""
    tr = m[0][0] + m[1][1] + m[2][2]
    minors = (
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
        + m[0][0] * m[2][2] - m[0][2] * m[2][0]
        + m[1][1] * m[2][2] - m[1][2] * m[2][1]
    )
    det = (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )
    return (1.0, -tr, minors, -det)


def stability_report_p3() -> StabilityReport3:
    """The four fixed points of each p = 3 system plus the linearisation data.

    Conjugate fixed points: (1,1,0), (0,1,1), (1,0,1) and the interior point
    (alpha, alpha, alpha); the derived system correspondingly fixes the three
    unit vectors and (1-alpha, 1-alpha, 1-alpha).  Every point is verified by
    applying the matching step function.
    """
    a = solve_alpha(3)
    conj = ((1.0, 1.0, 0.0), (0.0, 1.0, 1.0), (1.0, 0.0, 1.0), (a, a, a))
    der = ((1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0),
           (1.0 - a, 1.0 - a, 1.0 - a))
    residual = max(
        max(conjugate_residual(point) for point in conj),
        max(derived_residual(point) for point in der),
    )
    jac = ((0.0, -a, -a), (-a, 0.0, -a), (-a, -a, 0.0))
    return StabilityReport3(
        alpha=a,
        conjugate_points=conj,
        derived_points=der,
        max_fixed_point_residual=residual,
        jacobian=jac,
        char_poly=_char_poly_3x3(jac),
        eigenvalues=(-2.0 * a, a, a),
        spectral_radius=2.0 * a,
    )


class DynamicsVerdict(Enum):
    STATIONARY = "Stationary"
    PERIODIC2 = "Periodic2"
    ALTERNATING_DIVERGENT = "AlternatingDivergent"
    CONJECTURED_ALTERNATING = "ConjecturedAlternating"


@dataclass(frozen=True)
class DynamicsClass:
    """Classification of a derived-system orbit.

    ``parity`` names the conjugate subsequence (by index parity) that tends
    to 0; ``lockin_index`` is the first step after which all conjugate
    components sit strictly on one side of alpha and alternate sides.
    """

    verdict: DynamicsVerdict
    alpha: float
    parity: str | None = None
    lockin_index: int | None = None
    saturated: bool = False


@dataclass(frozen=True)
class ClassifyConfig:
    """Tolerances and horizons for orbit classification.

    The stationarity evidence window is shorter than the full horizon and is
    further capped per p: the stationary point repels, so float noise in an
    exactly stationary orbit is amplified every step and a longer check would
    reject genuinely stationary inputs.
    """

    stationary_tol: float = 1e-9
    periodic_tol: float = 1e-9
    regular_tol: float = 1e-12
    horizon: int = 200
    stationary_window: int = 50
    confirm_pairs: int = 3
    alpha_tie_tol: float = 1e-15


DEFAULT_CLASSIFY = ClassifyConfig()


def _side(values: Sequence[float], alpha: float, tie_tol: float) -> int:
    """-1 when all components sit strictly below alpha, +1 above, else 0.

    A component within tie_tol of alpha blocks the decision at this index.
    """
    if any(abs(v - alpha) <= tie_tol for v in values):
        return 0
    if all(v > alpha for v in values):
        return 1
    if all(v < alpha for v in values):
        return -1
    return 0


def find_lockin(
    trace: ConjugateTrace,
    alpha: float,
    *,
    tie_tol: float = 1e-15,
    confirm_pairs: int = 3,
) -> int | None:
    """First index whose state sits strictly on one side of alpha with the
    following entries alternating sides; None if never visible.

    Confirmation uses up to ``confirm_pairs`` even/odd pairs but accepts a
    shorter window when the trace ends (saturation) first.
    """
    states = trace.states
    n = len(states)
    for m in range(n):
        s = _side(states[m].u, alpha, tie_tol)
        if s == 0:
            continue
        window = min(n - 1 - m, 2 * confirm_pairs)
        confirmed = True
        for j in range(1, window + 1):
            expected = s if j % 2 == 0 else -s
            if _side(states[m + j].u, alpha, tie_tol) != expected:
                confirmed = False
                break
        if confirmed:
            return m
    return None


def _max_step_gap(trace: DerivedTrace) -> float:
    gaps = [
        max(abs(a - b) for a, b in zip(trace.params[m].t, trace.params[m + 1].t))
        for m in range(len(trace.params) - 1)
    ]
    return max(gaps, default=0.0)


def _max_two_step_gap(trace: DerivedTrace) -> float:
    gaps = [
        max(abs(a - b) for a, b in zip(trace.params[m].t, trace.params[m + 2].t))
        for m in range(len(trace.params) - 2)
    ]
    return max(gaps, default=0.0)


_FLOAT_NOISE = 4e-16


def _stationary_window(p: int, alpha: float, config: ClassifyConfig) -> int:
    """Longest evidence window binary64 can support at the stationary point.

    The regular derived map repels its fixed point with factor
    (p-1) * alpha**(p-2) per step, so quantisation noise grows past the
    stationarity tolerance after about log(tol / noise) / log(rate) steps;
    checking beyond that says nothing about the input.
    """
    rate = (p - 1) * alpha ** (p - 2)
    if rate <= 1.0:
        return config.stationary_window
    cap = int(math.log(config.stationary_tol / _FLOAT_NOISE) / math.log(rate))
    return max(4, min(config.stationary_window, cap))


def classify_dynamics(t0: ParamVector, config: ClassifyConfig = DEFAULT_CLASSIFY) -> DynamicsClass:
    """Classify the derived-system orbit started at t0.

    p = 2 is stationary exactly when t_2 = 1 - t_1 and 2-periodic otherwise.
    A regular start with p >= 3 is stationary exactly at t = 1 - alpha_p and
    otherwise alternates divergently, the side of alpha fixing which index
    parity tends to 0.  Irregular p = 3 orbits always alternate divergently;
    for irregular p >= 4 the same empirical procedure runs but the verdict is
    flagged as conjectured.
    """
    p = t0.size
    alpha = solve_alpha(p)

    if p == 2:
        window = min(config.horizon, config.stationary_window)
        trace = derived_trace(t0, window)
        saturated = trace.saturated_at is not None
        stationary_form = abs(t0.t[1] - (1.0 - t0.t[0])) <= config.stationary_tol
        if stationary_form and _max_step_gap(trace) <= config.stationary_tol:
            return DynamicsClass(DynamicsVerdict.STATIONARY, alpha, saturated=saturated)
        two_step = _max_two_step_gap(trace)
        if two_step > config.periodic_tol:
            raise ArithmeticError(
                f"p=2 orbit failed its two-step return ({two_step:g}); "
                "this contradicts the exact dynamics"
            )
        return DynamicsClass(DynamicsVerdict.PERIODIC2, alpha, saturated=saturated)

    if t0.spread <= config.regular_tol:
        c = t0.t[0]
        if abs(c - (1.0 - alpha)) <= config.stationary_tol:
            trace = derived_trace(t0, _stationary_window(p, alpha, config))
            if trace.saturated_at is None and _max_step_gap(trace) <= config.stationary_tol:
                return DynamicsClass(DynamicsVerdict.STATIONARY, alpha)
        u0 = 1.0 - c
        parity = "even" if u0 < alpha else "odd"
        ctrace = conjugate_trace(ConjugateState.from_params(t0), config.horizon)
        m0 = find_lockin(ctrace, alpha, tie_tol=config.alpha_tie_tol,
                         confirm_pairs=config.confirm_pairs)
        return DynamicsClass(
            DynamicsVerdict.ALTERNATING_DIVERGENT,
            alpha,
            parity=parity,
            lockin_index=m0,
            saturated=ctrace.saturated_at is not None,
        )

    ctrace = conjugate_trace(ConjugateState.from_params(t0), config.horizon)
    m0 = find_lockin(ctrace, alpha, tie_tol=config.alpha_tie_tol,
                     confirm_pairs=config.confirm_pairs)
    parity = None
    if m0 is not None:
        below = all(v < alpha for v in ctrace.states[m0].u)
        zero_on_even = (m0 % 2 == 0) if below else (m0 % 2 == 1)
        parity = "even" if zero_on_even else "odd"
    verdict = (DynamicsVerdict.ALTERNATING_DIVERGENT if p == 3
               else DynamicsVerdict.CONJECTURED_ALTERNATING)
    return DynamicsClass(
        verdict,
        alpha,
        parity=parity,
        lockin_index=m0,
        saturated=ctrace.saturated_at is not None,
    )


def _require_p3(state: ConjugateState) -> None:
    if state.size != 3:
        raise ValueError("this diagnostic is defined for p = 3 only")


def order_check(trace: ConjugateTrace) -> bool:
    """Whether the ascending order of the initial components survives each step.

    Requires a sorted initial state.  Float rounding is monotone, so a sorted
    state provably stays sorted; this re-checks it on a concrete trace.
    """
    _require_p3(trace.states[0])
    first = trace.states[0].u
    if not (first[0] <= first[1] <= first[2]):
        raise ValueError("initial state must be sorted ascending")
    return all(s.u[0] <= s.u[1] <= s.u[2] for s in trace.states)


@dataclass(frozen=True)
class RatioBoundReport:
    """Two-step ratio contraction data along even indices of a p = 3 trace."""

    gaps: tuple[float, ...]
    bounds: tuple[float, ...]
    positive: bool
    bounded: bool
    monotone: bool
    trivial_regular: bool
    floor_at: int | None
    checked_pairs: int
    holds: bool


RATIO_COMPONENT_FLOOR = 1e-6


def ratio_bound_check(
    trace: ConjugateTrace,
    *,
    component_floor: float = RATIO_COMPONENT_FLOOR,
    monotone_slack: float = 1e-9,
) -> RatioBoundReport:
    """Check the geometric contraction of component ratios at even indices.

    For a sorted irregular start (u_0 < w_0) the max/min ratio gap
    w/u - 1 at index 2q must stay positive and, for q >= 1, fall below
    (1/2)**q of its initial value, while the three even-index component
    ratios are non-increasing.  A regular start is trivially flagged.

    Checking stops at a saturated entry and already at the first even index
    whose smallest component drops under ``component_floor``: such values
    come out of the cancellation 1 - (product near 1) quantised to a few
    multiples of the float spacing near 1, so their ratios carry no
    information.  The first excluded pair index is reported as ``floor_at``.
    """
    states = trace.states
    _require_p3(states[0])
    u0 = states[0].u
    if not (u0[0] <= u0[1] <= u0[2]):
        raise ValueError("initial state must be sorted ascending")
    if u0[2] == u0[0]:
        return RatioBoundReport((), (), True, True, True, True, None, 0, True)

    end = trace.saturated_at if trace.saturated_at is not None else len(states)
    vu, wv, wu = [], [], []
    floor_at = None
    for q, m in enumerate(range(0, end, 2)):
        u, v, w = states[m].u
        if u < component_floor or (w / u) - 1.0 == 0.0:
            floor_at = q
            break
        vu.append(v / u)
        wv.append(w / v)
        wu.append(w / u)
    gaps = tuple(r - 1.0 for r in wu)
    gap0 = gaps[0] if gaps else 0.0
    bounds = tuple(0.5**q * gap0 for q in range(len(gaps)))

    positive = all(g > 0.0 for g in gaps)
    bounded = all(gaps[q] < bounds[q] for q in range(1, len(gaps)))
    monotone = all(
        seq[q + 1] <= seq[q] + monotone_slack
        for seq in (vu, wv, wu)
        for q in range(len(seq) - 1)
    )
    return RatioBoundReport(
        gaps=gaps,
        bounds=bounds,
        positive=positive,
        bounded=bounded,
        monotone=monotone,
        trivial_regular=False,
        floor_at=floor_at,
        checked_pairs=len(gaps),
        holds=positive and bounded and monotone,
    )


def double_step_identity_residual(state: ConjugateState) -> float:
    """Defect of the two-step linear form against two explicit conjugate steps.

    With k = v - u*v*w and c = u*w, two steps send the outer components to
    k*u + c and k*w + c exactly; the residual is pure float rounding.
    """
    _require_p3(state)
    u, v, w = state.u
    two = conjugate_step(conjugate_step(state))
    k = v - u * v * w
    c = u * w
    return max(abs(two.u[0] - (k * u + c)), abs(two.u[2] - (k * w + c)))


@dataclass(frozen=True)
class BoundingSequenceReport:
    """Result of squeezing an orbit between iterates of the regular p=3 map."""

    start_index: int
    tau_start: float
    from_inverse: bool
    pairs_checked: int
    max_violation: float
    holds: bool


def bounding_sequence_check(
    trace: ConjugateTrace,
    start_index: int,
    *,
    slack: float = 1e-9,
) -> BoundingSequenceReport:
    """Squeeze the post-lock-in orbit with a scalar regular orbit.

    Requires all components at start_index to lie strictly inside
    (0, alpha_3).  The comparison value tau starts at the largest component
    there, or at sqrt(1 - u) of the next state's smallest component when that
    rule makes the squeeze valid, and then follows x -> 1 - x**2.  On
    below-alpha steps tau must stay at or above the largest component, on
    above-alpha steps at or below the smallest, up to float slack (the start
    is an exact tie by construction).
    """
    states = trace.states
    _require_p3(states[0])
    alpha = solve_alpha(3)
    if start_index < 0 or start_index + 1 >= len(states):
        raise ValueError("trace too short after start_index")
    first = states[start_index].u
    if not all(0.0 < v < alpha for v in first):
        raise ValueError("state at start_index must lie strictly inside (0, alpha)^3")

    w0 = max(first)
    u1 = min(states[start_index + 1].u)
    if u1 > 1.0 - w0 * w0:
        tau = w0
        from_inverse = False
    else:
        tau = math.sqrt(1.0 - u1)
        from_inverse = True

    max_violation = 0.0
    x = tau
    count = 0
    for offset, m in enumerate(range(start_index, len(states))):
        comps = states[m].u
        if offset % 2 == 0:
            violation = max(comps) - x
        else:
            violation = x - min(comps)
        if violation > max_violation:
            max_violation = violation
        x = 1.0 - x * x
        count = offset + 1
    return BoundingSequenceReport(
        start_index=start_index,
        tau_start=tau,
        from_inverse=from_inverse,
        pairs_checked=(count + 1) // 2,
        max_violation=max_violation,
        holds=max_violation <= slack,
    )
