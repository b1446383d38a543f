"""Time grids, scalar schedules, and time-dependent Hermitian operators."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import linalg
from .errors import DimensionMismatchError, EvaluationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TimeGrid:
    """Uniform sampling of [t0, t_end] into `steps` steps (steps+1 samples)."""

    t0: float
    t_end: float
    steps: int

    def __post_init__(self):
        if self.steps < 1:
            raise ValueError(f"steps must be positive, got {self.steps}")
        if not self.t_end > self.t0:
            raise ValueError(f"need t_end > t0, got [{self.t0}, {self.t_end}]")

    @property
    def dt(self) -> float:
        return (self.t_end - self.t0) / self.steps

    @property
    def samples(self) -> np.ndarray:
        return np.linspace(self.t0, self.t_end, self.steps + 1)


@dataclass(frozen=True)
class ScalarSchedule:
    """Real-valued function of time with a display label.

    `constant` is a hint used to skip redundant re-evaluation downstream;
    it must only be set when the evaluator really is time-independent.
    """

    evaluator: Callable[[float], float]
    label: str = ""
    constant: bool = False

    def __call__(self, t: float) -> float:
        return float(self.evaluator(t))

    def sample(self, times) -> np.ndarray:
        return np.array([float(self.evaluator(float(t))) for t in np.asarray(times)])

    @staticmethod
    def const(value: float, label: str | None = None) -> "ScalarSchedule":
        value = float(value)
        return ScalarSchedule(lambda t: value, label or f"{value:g}", constant=True)

    @staticmethod
    def linear(intercept: float, slope: float, label: str | None = None) -> "ScalarSchedule":
        return ScalarSchedule(
            lambda t: intercept + slope * t,
            label or f"{intercept:g}+{slope:g}*t",
            constant=(slope == 0.0),
        )

    @staticmethod
    def sinusoid(
        amplitude: float,
        frequency: float,
        phase: float = 0.0,
        offset: float = 0.0,
        label: str | None = None,
    ) -> "ScalarSchedule":
        return ScalarSchedule(
            lambda t: offset + amplitude * np.sin(frequency * t + phase),
            label or f"{offset:g}+{amplitude:g}*sin({frequency:g}*t+{phase:g})",
            constant=(amplitude == 0.0 or frequency == 0.0),
        )

    @staticmethod
    def ramp(
        start: float, stop: float, t_start: float, t_end: float, label: str | None = None
    ) -> "ScalarSchedule":
        """Linear ramp from `start` to `stop` over [t_start, t_end], clamped outside."""
        if not t_end > t_start:
            raise ValueError("ramp needs t_end > t_start")
        span = t_end - t_start

        def f(t: float) -> float:
            x = min(max((t - t_start) / span, 0.0), 1.0)
            return start + (stop - start) * x

        return ScalarSchedule(f, label or f"ramp({start:g}->{stop:g})", constant=(start == stop))

    @staticmethod
    def product(*factors: "ScalarSchedule", label: str | None = None) -> "ScalarSchedule":
        if not factors:
            raise ValueError("product needs at least one factor")

        def f(t: float) -> float:
            out = 1.0
            for s in factors:
                out *= s(t)
            return out

        return ScalarSchedule(
            f,
            label or "*".join(s.label or "?" for s in factors),
            constant=all(s.constant for s in factors),
        )


def cumulative_trapezoid(values: np.ndarray, dt: float) -> np.ndarray:
    """Cumulative trapezoid integral over a uniform grid, starting at 0."""
    v = np.asarray(values, dtype=float)
    if v.size == 0:
        return v.copy()
    return np.concatenate([[0.0], np.cumsum(dt * (v[1:] + v[:-1]) / 2.0)])


@dataclass
class TimeDependentOperator:
    """Map from time to a Hermitian matrix of fixed dimension.

    `symmetrization_warnings` counts evaluations whose Hermitian
    correction exceeded the hermiticity tolerance.
    """

    dim: int
    evaluator: Callable[[float], np.ndarray]
    label: str = ""
    constant: bool = False
    symmetrization_warnings: int = field(default=0, compare=False)

    @staticmethod
    def const(matrix, label: str = "") -> "TimeDependentOperator":
        m = linalg.as_square_matrix(matrix)
        return TimeDependentOperator(m.shape[0], lambda t: m, label, constant=True)

    def __add__(self, other: "TimeDependentOperator") -> "TimeDependentOperator":
        if self.dim != other.dim:
            raise DimensionMismatchError(f"dims {self.dim} and {other.dim} differ")
        a, b = self, other
        return TimeDependentOperator(
            self.dim,
            lambda t: evaluate(a, t) + evaluate(b, t),
            f"{self.label}+{other.label}",
            constant=self.constant and other.constant,
        )


def evaluate(op: TimeDependentOperator, t: float) -> np.ndarray:
    """Evaluate an operator at time t, enforcing Hermiticity by symmetrization."""
    try:
        raw = op.evaluator(float(t))
    except Exception as exc:
        raise EvaluationError(f"evaluator of '{op.label}' failed at t={t}: {exc}") from exc
    m = np.asarray(raw, dtype=np.complex128)
    if m.shape != (op.dim, op.dim):
        raise EvaluationError(
            f"evaluator of '{op.label}' returned shape {m.shape}, expected ({op.dim}, {op.dim})"
        )
    if not np.isfinite(m).all():
        raise EvaluationError(f"evaluator of '{op.label}' returned non-finite entries at t={t}")
    defect = linalg.hermiticity_defect(m)
    if defect > linalg.HERMITICITY_TOL:
        op.symmetrization_warnings += 1
        if op.symmetrization_warnings == 1:
            logger.warning(
                "operator '%s' needed Hermitian correction %.3e at t=%g", op.label, defect, t
            )
    return (m + m.conj().T) / 2.0


@dataclass
class SplitHamiltonian:
    """Additive split H(t) = H0(t) + H_int(t) on a common space."""

    h0: TimeDependentOperator
    h_int: TimeDependentOperator

    def __post_init__(self):
        if self.h0.dim != self.h_int.dim:
            raise DimensionMismatchError(
                f"split parts have dims {self.h0.dim} and {self.h_int.dim}"
            )

    @property
    def dim(self) -> int:
        return self.h0.dim

    def total(self) -> TimeDependentOperator:
        return self.h0 + self.h_int


def phase_integral(s: ScalarSchedule, grid: TimeGrid) -> ScalarSchedule:
    """Cumulative trapezoid integral of a schedule from grid.t0.

    The result is sampled on the grid; queries between samples add a
    partial trapezoid on the enclosing cell, which keeps the integral
    exact for affine integrands (additive offsets such as an initial
    phase are the caller's business).
    """
    times = grid.samples
    cum = cumulative_trapezoid(s.sample(times), grid.dt)
    t0, dt, n = grid.t0, grid.dt, grid.steps

    def f(t: float) -> float:
        k = int(np.clip(np.floor((t - t0) / dt), 0, n))
        tk = t0 + k * dt
        return float(cum[k] + (t - tk) * (s(tk) + s(t)) / 2.0)

    return ScalarSchedule(f, f"int({s.label})")


def running_integral(s: ScalarSchedule, step: float = 1.0 / 4096.0) -> ScalarSchedule:
    """Cumulative trapezoid integral of a schedule from 0, on a lazy internal grid.

    Unlike `phase_integral` this needs no grid up front: node values at
    multiples of `step` are cached and extended on demand, and queries
    add a partial trapezoid on the last cell. Exact for affine
    integrands; error O(step^2) otherwise.
    """
    if not step > 0:
        raise ValueError("step must be positive")
    if s.constant:
        c = s(0.0)
        return ScalarSchedule(lambda t: c * t, f"int({s.label})")

    # cache[k] = integral from 0 to k*step; one cache per sign of t
    caches = {+1: np.zeros(1), -1: np.zeros(1)}
    nodes = {+1: np.array([s(0.0)]), -1: np.array([s(0.0)])}

    def extend(sign: int, upto: int) -> None:
        have = len(caches[sign]) - 1
        if upto <= have:
            return
        upto = max(upto, 2 * have, 256)  # grow geometrically, not per query
        new_t = sign * step * np.arange(have + 1, upto + 1)
        new_vals = s.sample(new_t)
        all_vals = np.concatenate([nodes[sign][-1:], new_vals])
        increments = sign * step * (all_vals[1:] + all_vals[:-1]) / 2.0
        caches[sign] = np.concatenate([caches[sign], caches[sign][-1] + np.cumsum(increments)])
        nodes[sign] = np.concatenate([nodes[sign], new_vals])

    def f(t: float) -> float:
        sign = 1 if t >= 0 else -1
        k = int(abs(t) // step)
        extend(sign, k + 1)
        tk = sign * k * step
        return float(caches[sign][k] + (t - tk) * (float(nodes[sign][k]) + s(t)) / 2.0)

    return ScalarSchedule(f, f"int({s.label})")
