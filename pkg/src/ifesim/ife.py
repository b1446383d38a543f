"""Detection and certification of interaction-free evolution.

A state undergoes interaction-free evolution (IFE) under a split
Hamiltonian H0(t) + H_int(t) when the full evolution equals the
H0-only evolution up to a global phase. The necessary and sufficient
condition is that the unperturbed propagator carries the initial state
along an instantaneous eigenvector of the coupling at every time,

    H_int(t) U0(t) psi0 = a(t) U0(t) psi0,

equivalently that psi0 is a fixed eigenvector of the coupling seen in
the unperturbed frame, U0†(t) H_int(t) U0(t). The accumulated phase is
the integral A(t) of the eigenvalue track a(t), and the physical
relation is U(t) psi0 = exp(-i A(t)) U0(t) psi0.

This module quantifies these statements on a grid: per-sample residuals
and eigenvalue estimates, the accumulated phase, the phase-corrected
overlap with the unperturbed evolution, a subspace tracker that finds
every maximal set of states sharing one eigenvalue track, a sampled
check of the stronger (sufficient, not necessary) product conditions,
and the Krylov-power criterion that settles the time-independent case.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

import numpy as np

from . import linalg
from .errors import DimensionMismatchError, InvalidDepthError, LengthMismatchError
from .operators import (
    SplitHamiltonian,
    TimeGrid,
    cumulative_trapezoid,
    evaluate,
)
from .propagation import EvolutionTrace, interaction_picture, propagate

IFE = "IFE"
NOT_IFE = "NotIFE"

RESIDUAL_RTOL = 1e-8
A_TRACK_MERGE_RTOL = 1e-8


@dataclass(frozen=True)
class IFEReport:
    """Per-sample evidence for or against interaction-free evolution.

    residuals[k] is the distance of the evolved state from the relevant
    coupling eigenspace, a_samples[k] the Rayleigh eigenvalue estimate,
    accumulated_phase[k] its cumulative trapezoid integral (zero at the
    first sample), and fidelity[k] the modulus of the phase-corrected
    overlap between the full and unperturbed evolutions.
    """

    grid: TimeGrid
    residuals: np.ndarray
    a_samples: np.ndarray
    accumulated_phase: np.ndarray
    fidelity: np.ndarray
    verdict: str
    residual_tol_used: float

    @property
    def max_residual(self) -> float:
        return float(np.max(self.residuals))

    @property
    def min_fidelity(self) -> float:
        return float(np.min(self.fidelity))


@dataclass(frozen=True)
class IFESubspace:
    """Maximal subspace whose members share one eigenvalue track a(t_k).

    eigenvalue_jump_samples lists sample indices where the attached
    track jumps by more than ten times the grid-resolved typical rate,
    which usually means the intersection tracker crossed a degeneracy.
    """

    basis: np.ndarray  # dim x count, orthonormal columns
    a_samples: np.ndarray
    grouped_with_tol: float
    eigenvalue_jump_samples: tuple[int, ...] = ()

    @property
    def dimension(self) -> int:
        return self.basis.shape[1]


@dataclass(frozen=True)
class LadderReport:
    """Sampled verification of the sufficient product conditions.

    Depth n checks that the coupling still sees an eigenvector after n
    unperturbed-Hamiltonian factors are applied at non-increasing times.
    A pass is sufficient but not necessary for interaction-free
    evolution; failure of the base eigenvector condition alone does not
    rule it out.
    """

    time_samples: tuple[float, ...]
    max_depth: int
    tol: float
    a_values: np.ndarray
    eigenvector_max_scaled_residual: float
    eigenvector_pass: bool
    depth_max_scaled_residual: tuple[float, ...]
    depth_pass: tuple[bool, ...]
    tuples_checked: tuple[int, ...]
    passed: bool


@dataclass(frozen=True)
class StaticCriterionResult:
    """Outcome of the Krylov-power criterion for constant Hamiltonians."""

    holds: bool
    a: float
    witness_power: int | None = None
    witness_residual: float | None = None


def default_residual_tol(max_coupling_norm: float) -> float:
    """Default residual tolerance, homogeneous in the coupling's energy scale."""
    return RESIDUAL_RTOL * (1.0 + max_coupling_norm)


def accumulated_phase(a_samples, grid: TimeGrid) -> np.ndarray:
    """Cumulative trapezoid integral of the eigenvalue track, zero at t0."""
    a = np.asarray(a_samples, dtype=float)
    if a.shape != (grid.steps + 1,):
        raise LengthMismatchError(
            f"expected {grid.steps + 1} samples, got shape {a.shape}"
        )
    return cumulative_trapezoid(a, grid.dt)


def _report_from_traces(
    psi0: np.ndarray,
    split: SplitHamiltonian,
    trace0: EvolutionTrace,
    trace: EvolutionTrace,
    residual_tol: float | None,
    frame: str,
) -> IFEReport:
    """Shared residual/phase/fidelity assembly for both check variants.

    frame="lab": residuals of U0(t_k) psi0 against H_int(t_k).
    frame="interaction": residuals of psi0 against U0† H_int U0.
    Both are related by a unitary rotation and must agree.
    """
    grid = trace0.grid
    psi0 = linalg.normalized(psi0)
    n = grid.steps + 1
    times = grid.samples
    a = np.empty(n)
    residuals = np.empty(n)
    max_norm = 0.0
    evolved = trace0.unitaries @ psi0  # (n, dim)
    for k in range(n):
        if frame == "lab":
            m = evaluate(split.h_int, float(times[k]))
            vec = evolved[k]
        else:
            m = interaction_picture(trace0, split.h_int, k)
            vec = psi0
        a[k] = linalg.rayleigh_quotient(m, vec)
        residuals[k] = linalg.residual_norm(m, vec, a[k])
        max_norm = max(max_norm, linalg.frobenius(m))
    phase = cumulative_trapezoid(a, grid.dt)
    full = trace.unitaries @ psi0
    fidelity = np.abs(np.einsum("ki,ki->k", full.conj(), np.exp(1j * phase)[:, None] * evolved))
    tol = default_residual_tol(max_norm) if residual_tol is None else float(residual_tol)
    verdict = IFE if float(np.max(residuals)) <= tol else NOT_IFE
    return IFEReport(grid, residuals, a, phase, fidelity, verdict, tol)


def check_ife_candidate(
    psi0,
    split: SplitHamiltonian,
    grid: TimeGrid,
    residual_tol: float | None = None,
) -> IFEReport:
    """Test whether psi0 evolves free of the coupling, in the lab frame.

    Propagates both the unperturbed and the full Hamiltonian, then at
    every sample estimates the coupling eigenvalue on the unperturbed
    trajectory by Rayleigh quotient and records the eigenspace residual.
    The verdict is IFE iff the worst residual stays below the tolerance
    (default: 1e-8 scaled by 1 + the largest coupling norm seen).
    """
    trace0 = propagate(split.h0, grid)
    trace = propagate(split.total(), grid)
    return _report_from_traces(psi0, split, trace0, trace, residual_tol, "lab")


def check_ife_interaction_picture(
    psi0,
    split: SplitHamiltonian,
    grid: TimeGrid,
    residual_tol: float | None = None,
) -> IFEReport:
    """Same test evaluated in the unperturbed frame.

    Here psi0 itself must be an eigenvector of U0†(t_k) H_int(t_k)
    U0(t_k) at every sample. Verdict and eigenvalue track agree with
    `check_ife_candidate` up to rounding, since the two residuals differ
    by a unitary rotation.
    """
    trace0 = propagate(split.h0, grid)
    trace = propagate(split.total(), grid)
    return _report_from_traces(psi0, split, trace0, trace, residual_tol, "interaction")


def _jump_samples(a: np.ndarray, dt: float) -> tuple[int, ...]:
    """Samples where the eigenvalue track moves >  10x its typical grid rate."""
    if len(a) < 3:
        return ()
    steps = np.abs(np.diff(a))
    typical = float(np.median(steps))
    floor = 1e-12 * (1.0 + float(np.max(np.abs(a))))
    threshold = 10.0 * max(typical, floor)
    return tuple(int(k) + 1 for k in np.nonzero(steps > threshold)[0])


def find_ife_subspaces(
    split: SplitHamiltonian, grid: TimeGrid, tol: float
) -> list[IFESubspace]:
    """Track every maximal subspace that never feels the coupling.

    At each sample the degeneracy-grouped eigenspaces of the coupling in
    the unperturbed frame are intersected with every surviving branch
    from the previous samples; empty intersections are discarded.
    Branches whose eigenvalue tracks agree within a relative 1e-8 are
    merged at the end, and every surviving basis vector is re-verified
    with `check_ife_interaction_picture` before being returned.

    `tol` is the subspace-intersection acceptance: a branch survives a
    sample only if it fits inside one eigenspace to within tol. It
    should be small compared to the per-sample rotation of any
    eigenspace the caller wants pruned.
    """
    trace0 = propagate(split.h0, grid)
    trace = propagate(split.total(), grid)
    n = grid.steps + 1
    branches: list[tuple[np.ndarray, list[float]]] = []
    for k in range(n):
        ht = interaction_picture(trace0, split.h_int, k)
        spaces = linalg.hermitian_eigenspaces(ht)
        if k == 0:
            branches = [(basis, [val]) for val, basis in spaces]
            continue
        survivors: list[tuple[np.ndarray, list[float]]] = []
        for basis, track in branches:
            for val, eigenspace in spaces:
                common = linalg.subspace_intersection(basis, eigenspace, tol)
                if common.shape[1]:
                    survivors.append((common, track + [val]))
        branches = survivors
        if not branches:
            return []

    # merge branches carrying the same eigenvalue track
    merged: list[tuple[np.ndarray, np.ndarray]] = []
    for basis, track in branches:
        a = np.asarray(track)
        merge_tol = A_TRACK_MERGE_RTOL * (1.0 + float(np.max(np.abs(a))))
        for i, (other_basis, other_a) in enumerate(merged):
            if float(np.max(np.abs(a - other_a))) <= merge_tol:
                joint = np.hstack([other_basis, basis])
                q, _ = np.linalg.qr(joint)
                merged[i] = (q[:, : joint.shape[1]], other_a)
                break
        else:
            merged.append((basis, a))

    out = []
    for basis, a in merged:
        verified = all(
            _report_from_traces(
                basis[:, j], split, trace0, trace, None, "interaction"
            ).verdict
            == IFE
            for j in range(basis.shape[1])
        )
        if verified:
            out.append(
                IFESubspace(basis, a, tol, _jump_samples(a, grid.dt))
            )
    return out


def check_sufficient_ladder(
    psi0,
    split: SplitHamiltonian,
    time_samples,
    max_depth: int,
    tol: float,
    max_tuples_per_depth: int = 200,
) -> LadderReport:
    """Sampled check of the sufficient (not necessary) product conditions.

    Base condition: psi0 is an eigenvector of the coupling itself at
    every sample. Depth n: the coupling at time t still annihilates the
    shifted state after applying n unperturbed factors at times
    t >= t_1 >= ... >= t_n, the ordering that appears in the nested
    integrals of the series expansion of the unperturbed propagator.
    Tuples are drawn deterministically from the provided samples, most
    `max_tuples_per_depth` per depth. Residuals are scaled by the
    product of the factor norms times (1 + |a(t)|) before comparison
    with tol.
    """
    if max_depth < 1:
        raise InvalidDepthError(f"max_depth must be >= 1, got {max_depth}")
    psi = linalg.normalized(psi0)
    samples = sorted({float(t) for t in time_samples}, reverse=True)
    if not samples:
        raise ValueError("need at least one time sample")

    h0_at = {t: evaluate(split.h0, t) for t in samples}
    h_int_at = {t: evaluate(split.h_int, t) for t in samples}
    h0_norm_at = {t: linalg.frobenius(h0_at[t]) for t in samples}

    a_at = {}
    eig_worst = 0.0
    for t in samples:
        a_at[t] = linalg.rayleigh_quotient(h_int_at[t], psi)
        r = linalg.residual_norm(h_int_at[t], psi, a_at[t])
        eig_worst = max(eig_worst, r / (1.0 + abs(a_at[t])))
    eig_pass = eig_worst <= tol

    depth_worst: list[float] = []
    depth_pass: list[bool] = []
    tuples_checked: list[int] = []
    for depth in range(1, max_depth + 1):
        tuples = list(combinations_with_replacement(samples, depth + 1))
        if len(tuples) > max_tuples_per_depth:
            idx = np.unique(
                np.round(np.linspace(0, len(tuples) - 1, max_tuples_per_depth)).astype(int)
            )
            tuples = [tuples[i] for i in idx]
        worst = 0.0
        for tup in tuples:
            t, factors = tup[0], tup[1:]
            w = psi
            prod_norm = 1.0
            for ti in reversed(factors):
                w = h0_at[ti] @ w
                prod_norm *= h0_norm_at[ti]
            r = linalg.frobenius(h_int_at[t] @ w - a_at[t] * w)
            scale = prod_norm * (1.0 + abs(a_at[t]))
            if scale == 0.0:
                scaled = 0.0 if r == 0.0 else np.inf
            else:
                scaled = r / scale
            worst = max(worst, scaled)
        depth_worst.append(worst)
        depth_pass.append(worst <= tol)
        tuples_checked.append(len(tuples))

    a_values = np.array([a_at[t] for t in samples])
    return LadderReport(
        time_samples=tuple(samples),
        max_depth=max_depth,
        tol=tol,
        a_values=a_values,
        eigenvector_max_scaled_residual=eig_worst,
        eigenvector_pass=eig_pass,
        depth_max_scaled_residual=tuple(depth_worst),
        depth_pass=tuple(depth_pass),
        tuples_checked=tuple(tuples_checked),
        passed=eig_pass and all(depth_pass),
    )


def check_time_independent(psi0, h0, h_int, tol: float) -> StaticCriterionResult:
    """Krylov-power criterion for constant Hamiltonians.

    With a = <psi0, H_int psi0>, the state is interaction-free iff
    (H_int - a) annihilates H0^n psi0 for every n up to dim - 1; the
    power n = 0 is the plain eigenvector condition. Residuals are
    scaled by ||H0^n psi0|| (1 + |a|), and the first failing power is
    returned as a witness.
    """
    h0 = linalg.assert_hermitian(h0)
    h_int = linalg.assert_hermitian(h_int)
    if h0.shape != h_int.shape:
        raise DimensionMismatchError(f"shapes {h0.shape} and {h_int.shape} differ")
    psi = linalg.normalized(psi0)
    if psi.shape[0] != h0.shape[0]:
        raise DimensionMismatchError(
            f"state dim {psi.shape[0]} vs matrix dim {h0.shape[0]}"
        )
    a = linalg.rayleigh_quotient(h_int, psi)
    w = psi
    for power in range(h0.shape[0]):
        wn = linalg.frobenius(w)
        if wn == 0.0:
            break  # all higher powers vanish too
        r = linalg.frobenius(h_int @ w - a * w)
        if r > tol * wn * (1.0 + abs(a)):
            return StaticCriterionResult(False, a, power, r)
        w = h0 @ w
    return StaticCriterionResult(True, a)
