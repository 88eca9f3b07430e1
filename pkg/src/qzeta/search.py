"""Automated per-zero search: shrinking-rectangle contour integrations with
good/very-good verdicts, variant scheduling, error estimation, and a Newton
polish.

One search drives ``integrate`` over a sequence of rectangles.  A good
integration (winding says exactly one zero, small gap metric, residual ratio
under control, estimate inside and not worse than the best so far) halves the
rectangle and recenters it between the old center and the new estimate,
weighting by the residual ratio.  The second consecutive good integration may
conclude the zero ("very good") when the gap metric, the error estimate, and
the residual are all admissible.  A variant gives each zero two sampling
densities and a small integration budget per density; zeros that do not
conclude re-enter the next variant at the following density, restarting from
their last good estimate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

from .errors import InsufficientHistory, SearchFailed
from .winding import AnalyticFunction, IntegrationResult, Rectangle, integrate

__all__ = [
    "Assessment",
    "Verdict",
    "SearchConfig",
    "SearchState",
    "IntegrationAttempt",
    "ZeroRecord",
    "initial_rectangle",
    "assess",
    "step_policy",
    "estimate_de",
    "newton_refine",
    "locate_zero",
    "run_variants",
]


class Assessment(Enum):
    NOT_GOOD = "not_good"
    GOOD = "good"
    VERY_GOOD = "very_good"


class Verdict(Enum):
    VERY_GOOD = "very_good"
    GOOD_ONLY = "good_only"
    FAILED = "failed"


@dataclass(frozen=True)
class SearchConfig:
    """Knobs of the search protocol; defaults reproduce the reference run.

    ``seed_vv_limit`` guards against over-trusting a sloppy seed: when a
    variant's opening integration has residual ratio at or above the limit,
    the zero cannot conclude within that variant and is re-confirmed at the
    next sampling density.
    """

    c_initial: int = 4
    c_schedule: tuple[int, ...] = (4, 6, 9)
    kappa: float = 0.365
    vv_max: float = 0.8
    fo_good_max: int = 2
    fo_verygood_max: int = 1
    char_tol: float = 0.05
    de_admissible: float = 2.5e-4
    seed_vv_limit: float = 0.45
    max_integrations_per_zero: int = 12
    newton_max_iters: int = 5

    def __post_init__(self):
        if list(self.c_schedule) != sorted(set(self.c_schedule)):
            raise ValueError("c_schedule must be strictly increasing")
        if self.c_initial != self.c_schedule[0]:
            raise ValueError("c_initial must equal the first c_schedule entry")
        if not 0 < self.vv_max < 1:
            raise ValueError("vv_max must be in (0, 1)")
        if not 0 < self.char_tol < 0.5:
            raise ValueError("char_tol must be in (0, 0.5)")


# |f(z)| may jitter at the evaluation noise floor once the search has nearly
# converged; the monotone-residual gate tolerates this much upward wiggle.
_RESIDUAL_SLACK = 1.25

_MIN_RD = 1e-3  # degenerate-seed floor and variant-restart floor

_DE_FLOOR = 1e-6  # error estimates never report below this

# Newton steps must shrink at least this fast, or the iteration is judged to
# be walking the evaluation noise floor rather than converging.
_NEWTON_CONTRACTION = 0.25

# Variant restart half-width per unit of estimated error.  Successive
# estimates share most of their quadrature bias, so the inter-step movement
# (10*de) understates the true error; restarting that tight can sink the
# rectangle below the evaluation noise floor.
_RESTART_DE_FACTOR = 200.0

# An estimate this close to the incumbent (relative to the rectangle size)
# confirms the location: residual-ratio checks are then uninformative, since
# near the evaluation noise floor neither value can beat the other.
_CONFIRM_FRACTION = 0.05


@dataclass
class SearchState:
    """Mutable per-zero search state, persisted across variants."""

    y: float
    za: complex
    zna: complex  # seed or the estimate after the last good integration
    zn: complex  # current rectangle center
    rd: float
    rad: float
    c: int
    variant: int = 0  # 0-based variant index
    phase: int = 0  # 0 = a variant's opening density, 1 = its "second try"
    consecutive_good: int = 0
    best_abs_value: float = math.inf
    accepted: list[tuple[complex, float]] = field(default_factory=list)
    variant_opening_vv: float | None = None

    @property
    def rect(self) -> Rectangle:
        return Rectangle(self.zn, self.rd, self.rad)


@dataclass
class IntegrationAttempt:
    """One integration in a zero's trace log."""

    variant: int  # 1-based
    c: int
    zna: complex
    rect: Rectangle
    result: IntegrationResult
    assessment: Assessment


@dataclass
class ZeroRecord:
    """Per-zero outcome: final estimate, error bound, residual, verdict."""

    index: int
    y: float
    za: complex
    z: complex
    de: float | None
    vv_final: float
    verdict: Verdict
    newton_applied: bool
    trace_log: list[IntegrationAttempt]

    @property
    def variants_visited(self) -> tuple[int, ...]:
        return tuple(sorted({a.variant for a in self.trace_log}))


def initial_rectangle(za: complex, y: float, cfg: SearchConfig) -> Rectangle:
    """First search rectangle: centered on the seed, sized by the seed's
    displacement from the classical zero, capped at 0.5 and floored against
    degenerate seeds; always twice as wide as tall."""
    if not y > 0:
        raise ValueError("y must be positive")
    rd = min(0.5, cfg.kappa * abs(za - 1j * y))
    rd = max(rd, _MIN_RD)
    return Rectangle(za, rd, rd / 2.0)


def assess(
    result: IntegrationResult, state: SearchState, cfg: SearchConfig
) -> Assessment:
    """Classify one integration against the current search state.

    Good: winding defect within tolerance, gap metric small, residual ratio
    below vv_max, estimate strictly inside the rectangle, and |f| at the
    estimate not above the best accepted value (with noise slack).  The two
    residual gates are waived when the estimate lands on the incumbent
    location: once the search rides the evaluation noise floor, residual
    ratios carry no information, while an integration that reproduces the
    known location still confirms it.  Very good: the second consecutive
    good whose gap metric, error estimate, and residual stay admissible;
    variant 1 additionally requires a trustworthy opening integration (a
    sloppy seed forces re-confirmation in the next variant).
    """
    rect = result.trace.rect
    confirms_location = (
        abs(result.z_estimate - state.zna)
        <= _CONFIRM_FRACTION * (rect.rd + rect.rad)
    )
    vv_ok = result.vv < cfg.vv_max or confirms_location
    residual_ok = (
        result.abs_estimate <= state.best_abs_value * _RESIDUAL_SLACK
        or confirms_location
    )
    good = (
        abs(result.char) <= cfg.char_tol
        and result.fo <= cfg.fo_good_max
        and vv_ok
        and result.inside
        and residual_ok
    )
    if not good:
        return Assessment.NOT_GOOD
    if state.consecutive_good < 1:
        return Assessment.GOOD
    de_now = max(
        _DE_FLOOR, 0.1 * abs(result.z_estimate - state.accepted[-1][0])
    )
    opening_ok = state.variant > 0 or (
        state.variant_opening_vv is not None
        and state.variant_opening_vv < cfg.seed_vv_limit
    )
    # a variant's opening density may conclude only when the estimate has
    # stopped moving at the reporting floor; anything else needs the
    # confirmation pass at the escalated density
    confirmed = state.phase > 0 or de_now <= _DE_FLOOR
    if (
        result.fo <= cfg.fo_verygood_max
        and de_now <= cfg.de_admissible
        and vv_ok
        and opening_ok
        and confirmed
    ):
        return Assessment.VERY_GOOD
    return Assessment.GOOD


def step_policy(
    state: SearchState,
    assessment: Assessment,
    result: IntegrationResult,
    cfg: SearchConfig,
) -> None:
    """Advance the state after one integration.

    Good: accept the estimate (damped toward the old seed when the gap
    metric flagged the trace), recenter at the residual-weighted average of
    the old center and the estimate, halve the rectangle.  Missed zero
    (winding defect near 1): double the rectangle and recenter a quarter of
    the way toward the moment estimate.  Other failures: recenter at the
    best available estimate, same size.
    """
    z = result.z_estimate
    if assessment in (Assessment.GOOD, Assessment.VERY_GOOD):
        state.zna = z if result.fo == 0 else (state.zna + 2.0 * z) / 3.0
        weight = result.vv if math.isfinite(result.vv) else 1.0
        state.zn = (z + weight * state.zn) / (1.0 + weight)
        state.rd /= 2.0
        state.rad /= 2.0
        state.consecutive_good += 1
        state.best_abs_value = min(state.best_abs_value, result.abs_estimate)
        state.accepted.append((z, result.abs_estimate))
        return
    state.consecutive_good = 0
    if abs(result.char - 1.0) <= cfg.char_tol:
        # no zero enclosed: grow and drift toward the (weak) moment estimate
        state.rd *= 2.0
        state.rad *= 2.0
        state.zn = state.zn + (z - state.zn) / 4.0
    else:
        state.zn = state.zna


def estimate_de(state: SearchState) -> float:
    """Error scale from the last two accepted estimates: a tenth of the
    inter-step movement, floored at 1e-6 (ten times this bounds the observed
    movement)."""
    if len(state.accepted) < 2:
        raise InsufficientHistory(
            "need two accepted estimates to bound the error"
        )
    z_last, z_prev = state.accepted[-1][0], state.accepted[-2][0]
    return max(_DE_FLOOR, 0.1 * abs(z_last - z_prev))


def newton_refine(
    f: AnalyticFunction,
    z0: complex,
    de: float,
    cfg: SearchConfig,
    movement_cap: float | None = None,
) -> tuple[complex, bool]:
    """Polish a concluded estimate with Newton steps (central-difference
    derivative).

    Accepted only if |f| decreased at every step, the step sizes contracted
    like a genuinely converging Newton iteration, and the total movement
    stayed within the allowance (ten times the error bound by default, or
    the caller's cap).  Rejection is a normal outcome near the evaluation
    noise floor, where the steps stall and |f| stops improving.
    """
    allowance = 10.0 * de if movement_cap is None else movement_cap
    z = complex(z0)
    steps_taken = 0
    try:
        f_here = complex(f(z))
        f_abs = abs(f_here)
        if f_abs == 0.0:
            return z, True
        last_step: float | None = None
        for _ in range(cfg.newton_max_iters):
            h = 1e-6 * (1.0 + abs(z))
            derivative = (complex(f(z + h)) - complex(f(z - h))) / (2.0 * h)
            if derivative == 0:
                break
            step = f_here / derivative
            if abs(step) <= 1e-9 * (1.0 + abs(z)):
                break  # below any reported resolution: converged
            if last_step is not None and abs(step) > _NEWTON_CONTRACTION * last_step:
                break  # stalled at the noise floor; keep the progress so far
            z_next = z - step
            f_next = complex(f(z_next))
            if not abs(f_next) < f_abs:
                break  # the step no longer improves |f|; discard it
            z, f_here, f_abs = z_next, f_next, abs(f_next)
            last_step = abs(step)
            steps_taken += 1
    except Exception:
        return z0, False
    if steps_taken == 0 or abs(z - z0) > allowance:
        return z0, False
    return z, True


class _ZeroSearch:
    """Driver for one zero across variants."""

    def __init__(
        self,
        f: AnalyticFunction,
        y: float,
        za: complex,
        cfg: SearchConfig,
    ):
        self.f = f
        self.cfg = cfg
        rect = initial_rectangle(za, y, cfg)
        self._rd_initial = rect.rd
        self.state = SearchState(
            y=y,
            za=za,
            zna=za,
            zn=rect.center,
            rd=rect.rd,
            rad=rect.rad,
            c=cfg.c_initial,
        )
        self.trace_log: list[IntegrationAttempt] = []
        self.concluded = False

    def run_variant(self, variant_index: int) -> bool:
        """One variant: up to two sampling densities, a small integration
        budget per density.  Returns True when the zero concluded."""
        cfg = self.cfg
        state = self.state
        schedule = cfg.c_schedule
        start = min(variant_index, len(schedule) - 1)
        phases = schedule[start : start + 2]
        budget = max(1, schedule[start] // 2)
        state.variant_opening_vv = None
        state.consecutive_good = 0
        state.variant = variant_index
        if variant_index > 0:
            state.zn = state.zna
            if len(state.accepted) >= 2:
                restart = max(_RESTART_DE_FACTOR * estimate_de(state), _MIN_RD)
                state.rd = min(restart, self._rd_initial)
                state.rad = state.rd / 2.0
        used = 0
        for phase_index, c in enumerate(phases):
            state.c = c
            state.phase = phase_index
            if phase_index > 0:
                state.zn = state.zna
                state.consecutive_good = 0
            for _ in range(budget):
                result = integrate(self.f, state.rect, c)
                if state.variant_opening_vv is None:
                    state.variant_opening_vv = result.vv
                verdict = assess(result, state, cfg)
                self.trace_log.append(
                    IntegrationAttempt(
                        variant=variant_index + 1,
                        c=c,
                        zna=state.zna,
                        rect=state.rect,
                        result=result,
                        assessment=verdict,
                    )
                )
                step_policy(state, verdict, result, cfg)
                used += 1
                if verdict is Assessment.VERY_GOOD:
                    self.concluded = True
                    return True
                if used >= cfg.max_integrations_per_zero:
                    return False
        return False

    def finish(self, index: int) -> ZeroRecord:
        state = self.state
        if not state.accepted:
            vv = abs(complex(self.f(state.za)))
            return ZeroRecord(
                index=index,
                y=state.y,
                za=state.za,
                z=state.za,
                de=None,
                vv_final=1.0 if vv else math.inf,
                verdict=Verdict.FAILED,
                newton_applied=False,
                trace_log=self.trace_log,
            )
        z = state.accepted[-1][0]
        de = estimate_de(state) if len(state.accepted) >= 2 else None
        newton_applied = False
        if self.concluded and de is not None:
            # allow movement up to the concluding rectangle's quadrature
            # resolution (~2% of its half-width; state.rd was already halved)
            cap = max(10.0 * de, 0.04 * state.rd)
            z_polished, accepted = newton_refine(self.f, z, de, self.cfg, cap)
            if accepted:
                de = max(_DE_FLOOR, 0.1 * abs(z_polished - z))
                z = z_polished
                newton_applied = True
        abs_za = abs(complex(self.f(state.za)))
        vv_final = abs(complex(self.f(z))) / abs_za if abs_za > 0 else math.inf
        return ZeroRecord(
            index=index,
            y=state.y,
            za=state.za,
            z=z,
            de=de,
            vv_final=vv_final,
            verdict=Verdict.VERY_GOOD if self.concluded else Verdict.GOOD_ONLY,
            newton_applied=newton_applied,
            trace_log=self.trace_log,
        )


def locate_zero(
    f: AnalyticFunction, y: float, za: complex, cfg: SearchConfig = SearchConfig()
) -> ZeroRecord:
    """Search for the zero seeded at za; runs every variant if needed.

    Raises SearchFailed (with the partial record attached) when no variant
    produced even one good integration.
    """
    search = _ZeroSearch(f, y, za, cfg)
    for variant_index in range(len(cfg.c_schedule)):
        if search.run_variant(variant_index):
            break
    record = search.finish(index=1)
    if record.verdict is Verdict.FAILED:
        error = SearchFailed(f"no good integration for the zero near {za!r}")
        error.record = record
        raise error
    return record


def run_variants(
    functions,
    seeds: list[tuple[float, complex]],
    cfg: SearchConfig = SearchConfig(),
) -> list[ZeroRecord]:
    """Variant-synchronized scheduler over many seeds.

    ``functions`` is either one evaluator shared by all seeds or a sequence
    with one evaluator per seed.  Variant 1 visits every seed; later variants
    revisit only the zeros that have not concluded.  Records come back in
    seed order regardless of scheduling.
    """
    if not seeds:
        return []
    if callable(functions):
        per_seed = [functions] * len(seeds)
    else:
        per_seed = list(functions)
        if len(per_seed) != len(seeds):
            raise ValueError("need one evaluator per seed")
    searches = [
        _ZeroSearch(f, y, za, cfg) for f, (y, za) in zip(per_seed, seeds)
    ]
    for variant_index in range(len(cfg.c_schedule)):
        remaining = [s for s in searches if not s.concluded]
        if not remaining:
            break
        for search in remaining:
            search.run_variant(variant_index)
    return [search.finish(index=i + 1) for i, search in enumerate(searches)]
