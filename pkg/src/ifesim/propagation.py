"""Time-ordered propagators on a uniform grid.

The production stepper is the exponential midpoint rule: each step
multiplies by exp(-i * H(t + dt/2) * dt), which is exactly unitary up to
eigensolver rounding and second-order accurate in dt. A classical RK4
integrator for i dU/dt = H(t) U is kept alongside as an independent
cross-check; it has no structural unitarity and is meant for tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil

import numpy as np

from . import linalg
from .errors import DimensionMismatchError, IndexOutOfRangeError
from .operators import TimeDependentOperator, TimeGrid, evaluate

MAGNUS2 = "magnus2"
RK4_ORACLE = "rk4"


@dataclass(frozen=True)
class EvolutionTrace:
    """Propagator samples U(t_k) on a grid, U(t0) = identity exactly."""

    grid: TimeGrid
    unitaries: np.ndarray  # (steps + 1, dim, dim)
    max_unitarity_defect: float
    method: str

    @property
    def dim(self) -> int:
        return self.unitaries.shape[1]

    def __len__(self) -> int:
        return self.unitaries.shape[0]


def propagate(op: TimeDependentOperator, grid: TimeGrid) -> EvolutionTrace:
    """Exponential-midpoint propagation of i dU/dt = H(t) U.

    U(t_{k+1}) = exp(-i H(t_k + dt/2) dt) U(t_k). Local error O(dt^3),
    global O(dt^2); every factor is unitary by construction, and the
    worst accumulated unitarity defect over the trace is recorded.
    """
    dt = grid.dt
    times = grid.samples
    unitaries = np.empty((grid.steps + 1, op.dim, op.dim), dtype=np.complex128)
    unitaries[0] = np.eye(op.dim)
    step_kernel = None
    if op.constant:
        step_kernel = linalg.unitary_exp(evaluate(op, grid.t0 + dt / 2.0), dt)
    defect = 0.0
    for k in range(grid.steps):
        kernel = step_kernel
        if kernel is None:
            kernel = linalg.unitary_exp(evaluate(op, times[k] + dt / 2.0), dt)
        unitaries[k + 1] = kernel @ unitaries[k]
        defect = max(defect, linalg.unitarity_defect(unitaries[k + 1]))
    return EvolutionTrace(grid, unitaries, defect, MAGNUS2)


def propagate_rk4_oracle(op: TimeDependentOperator, grid: TimeGrid) -> EvolutionTrace:
    """Classical RK4 on i dU/dt = H(t) U, with no re-orthonormalization.

    The unitarity defect is left as a diagnostic of the integration
    error. Intended as an independent reference for the midpoint
    stepper, not for production runs.
    """
    dt = grid.dt
    times = grid.samples
    unitaries = np.empty((grid.steps + 1, op.dim, op.dim), dtype=np.complex128)
    unitaries[0] = np.eye(op.dim)
    defect = 0.0
    h_right = evaluate(op, times[0])
    for k in range(grid.steps):
        u = unitaries[k]
        h_left = h_right
        h_mid = evaluate(op, times[k] + dt / 2.0)
        h_right = evaluate(op, times[k + 1])
        k1 = -1j * (h_left @ u)
        k2 = -1j * (h_mid @ (u + 0.5 * dt * k1))
        k3 = -1j * (h_mid @ (u + 0.5 * dt * k2))
        k4 = -1j * (h_right @ (u + dt * k3))
        unitaries[k + 1] = u + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        defect = max(defect, linalg.unitarity_defect(unitaries[k + 1]))
    return EvolutionTrace(grid, unitaries, defect, RK4_ORACLE)


def apply(trace: EvolutionTrace, psi0: np.ndarray, k: int) -> np.ndarray:
    """U(t_k) @ psi0."""
    psi = linalg.as_state_vector(psi0)
    if psi.shape[0] != trace.dim:
        raise DimensionMismatchError(f"state dim {psi.shape[0]} vs trace dim {trace.dim}")
    if not 0 <= k < len(trace):
        raise IndexOutOfRangeError(f"sample index {k} outside [0, {len(trace) - 1}]")
    return trace.unitaries[k] @ psi


def interaction_picture(
    trace_u0: EvolutionTrace, h_int: TimeDependentOperator, k: int
) -> np.ndarray:
    """Coupling term in the frame of the unperturbed evolution.

    Returns U0†(t_k) H_int(t_k) U0(t_k), symmetrized against rounding.
    """
    if h_int.dim != trace_u0.dim:
        raise DimensionMismatchError(f"operator dim {h_int.dim} vs trace dim {trace_u0.dim}")
    if not 0 <= k < len(trace_u0):
        raise IndexOutOfRangeError(f"sample index {k} outside [0, {len(trace_u0) - 1}]")
    u0 = trace_u0.unitaries[k]
    m = u0.conj().T @ evaluate(h_int, float(trace_u0.grid.samples[k])) @ u0
    return (m + m.conj().T) / 2.0


def auto_steps(
    op: TimeDependentOperator,
    t0: float,
    t_end: float,
    step_energy: float = 0.05,
    probes: int = 33,
) -> int:
    """Step count keeping dt * max ||H(t)||_F below `step_energy`."""
    norms = [
        linalg.frobenius(evaluate(op, t)) for t in np.linspace(t0, t_end, probes)
    ]
    peak = max(norms)
    if peak == 0.0:
        return 1
    return max(1, ceil((t_end - t0) * peak / step_energy))


def auto_grid(
    op: TimeDependentOperator,
    t0: float,
    t_end: float,
    step_energy: float = 0.05,
) -> TimeGrid:
    """TimeGrid over [t0, t_end] sized by `auto_steps`."""
    return TimeGrid(t0, t_end, auto_steps(op, t0, t_end, step_energy))
