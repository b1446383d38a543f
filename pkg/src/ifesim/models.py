"""Model catalog: driven spins, adiabatic three-level passage, spin-boson couplings.

Each constructor returns a `SplitHamiltonian` together with a
`ModelDescriptor` carrying the parameters, the analytically known
interaction-free states (used as fixtures and exposed to the CLI as
state labels), and free-text notes on validity limits.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import BadOrderingError, CutoffTooSmallError, UnknownModelError
from .operators import ScalarSchedule, SplitHamiltonian, TimeDependentOperator, running_integral

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
SIGMA_PLUS = np.array([[0, 1], [0, 0]], dtype=np.complex128)

SPIN1_X = np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=np.complex128) / np.sqrt(2.0)
SPIN1_Y = np.array([[0, -1j, 0], [1j, 0, -1j], [0, 1j, 0]], dtype=np.complex128) / np.sqrt(2.0)
SPIN1_Z = np.diag([1.0, 0.0, -1.0]).astype(np.complex128)

JC_BOUNDARY_POPULATION_LIMIT = 1e-10


def transverse_pauli(angle: float) -> np.ndarray:
    """cos(angle) * sigma_x + sin(angle) * sigma_y."""
    return np.cos(angle) * SIGMA_X + np.sin(angle) * SIGMA_Y


def spin_half_plus(angle: float) -> np.ndarray:
    """+1 eigenvector of the transverse Pauli at `angle`, half-angle convention."""
    return np.array([np.exp(-0.5j * angle), np.exp(0.5j * angle)]) / np.sqrt(2.0)


def spin_half_minus(angle: float) -> np.ndarray:
    """-1 eigenvector of the transverse Pauli at `angle`, half-angle convention."""
    return np.array([np.exp(-0.5j * angle), -np.exp(0.5j * angle)]) / np.sqrt(2.0)


def transverse_spin1(angle: float) -> np.ndarray:
    """cos(angle) * L_x + sin(angle) * L_y on the spin-1 triplet."""
    return np.cos(angle) * SPIN1_X + np.sin(angle) * SPIN1_Y


def spin_one_plus(angle: float) -> np.ndarray:
    """+1 eigenvector of the transverse spin-1 operator at `angle`."""
    return np.array(
        [np.exp(-1j * angle) / 2.0, 1.0 / np.sqrt(2.0), np.exp(1j * angle) / 2.0]
    )


def spin_one_minus(angle: float) -> np.ndarray:
    """-1 eigenvector of the transverse spin-1 operator at `angle`."""
    return np.array(
        [np.exp(-1j * angle) / 2.0, -1.0 / np.sqrt(2.0), np.exp(1j * angle) / 2.0]
    )


def spin_one_zero(angle: float) -> np.ndarray:
    """Zero eigenvector of the transverse spin-1 operator at `angle`, normalized."""
    return np.array([np.exp(-1j * angle), 0.0, -np.exp(1j * angle)]) / np.sqrt(2.0)


@dataclass(frozen=True)
class ModelDescriptor:
    name: str
    dim: int
    parameters: dict
    known_ife_states: list = field(default_factory=list)  # (state, label) pairs
    notes: str = ""


def spin_half_rotating(
    omega: ScalarSchedule,
    alpha: ScalarSchedule,
    phi: float,
    freeze_phase: bool = False,
) -> tuple[SplitHamiltonian, ModelDescriptor]:
    """Spin-1/2 in a longitudinal drive plus a co-rotating transverse field.

    H0(t) = omega(t)/2 * sigma_z. The transverse coupling has amplitude
    alpha(t) along the axis at angle Phi(t) = integral_0^t omega + phi,
    so the unperturbed rotation carries the transverse eigenvectors at
    angle phi onto the instantaneous coupling axis for all times, and
    both of them ride free of the coupling (eigenvalues +-alpha(t)).

    With `freeze_phase` the coupling axis stays pinned at phi while H0
    keeps rotating; that variant admits no interaction-free state.
    """
    phi = float(phi)
    h0 = TimeDependentOperator(
        2, lambda t: 0.5 * omega(t) * SIGMA_Z, "omega/2*sigma_z", constant=omega.constant
    )
    if freeze_phase:
        angle_at = lambda t: phi  # noqa: E731
        h_int_constant = alpha.constant
        known: list = []
        notes = (
            "coupling axis frozen at phi while the longitudinal drive rotates: "
            "no interaction-free state exists for this split"
        )
    else:
        accumulated = running_integral(omega)
        angle_at = lambda t: accumulated(t) + phi  # noqa: E731
        h_int_constant = False
        known = [
            (spin_half_plus(phi), "plus-phi"),
            (spin_half_minus(phi), "minus-phi"),
        ]
        notes = "transverse eigenvectors at angle phi ride free with eigenvalue +-alpha(t)"
    h_int = TimeDependentOperator(
        2,
        lambda t: alpha(t) * transverse_pauli(angle_at(t)),
        "alpha*sigma_axis",
        constant=h_int_constant,
    )
    desc = ModelDescriptor(
        name="spin-half",
        dim=2,
        parameters={
            "omega": omega,
            "alpha": alpha,
            "phi": phi,
            "freeze_phase": bool(freeze_phase),
        },
        known_ife_states=known,
        notes=notes,
    )
    return SplitHamiltonian(h0, h_int), desc


def spin_one_model(
    omega: ScalarSchedule, alpha: ScalarSchedule, phi0: float
) -> tuple[SplitHamiltonian, ModelDescriptor]:
    """Spin-1 with longitudinal drive and a rotating squared transverse coupling.

    H0(t) = omega(t) * L_z and the coupling is alpha(t) * L_axis^2 with
    the axis angle phi(t) = integral_0^t omega + phi0. L_axis^2 has a
    doubly degenerate eigenvalue 1 (spanned by the +-1 eigenvectors of
    L_axis) and a zero singlet; the unperturbed rotation transports both
    eigenspaces, so the doublet at phi0 rides free with shared
    eigenvalue track alpha(t) and the singlet with 0.
    """
    phi0 = float(phi0)
    h0 = TimeDependentOperator(
        3, lambda t: omega(t) * SPIN1_Z, "omega*L_z", constant=omega.constant
    )
    accumulated = running_integral(omega)

    def coupling(t: float) -> np.ndarray:
        axis = transverse_spin1(accumulated(t) + phi0)
        return alpha(t) * (axis @ axis)

    h_int = TimeDependentOperator(3, coupling, "alpha*L_axis^2")
    desc = ModelDescriptor(
        name="spin-one",
        dim=3,
        parameters={"omega": omega, "alpha": alpha, "phi0": phi0},
        known_ife_states=[
            (spin_one_plus(phi0), "plus-one-phi"),
            (spin_one_minus(phi0), "minus-one-phi"),
        ],
        notes=(
            "doublet at phi0 shares the eigenvalue track alpha(t); the zero "
            "eigenvector of the axis operator rides free with track 0 and is "
            "found by the subspace search"
        ),
    )
    return SplitHamiltonian(h0, h_int), desc


def stirap_dark_state(theta: float) -> np.ndarray:
    """Zero-eigenvalue eigenvector of the three-level passage Hamiltonian."""
    return np.array([np.cos(theta), 0.0, -np.sin(theta)])


def stirap_default_mixing(total_time: float) -> ScalarSchedule:
    """Default mixing-angle schedule: linear 0 -> pi/2 over [0, total_time], clamped."""
    return ScalarSchedule.ramp(0.0, np.pi / 2.0, 0.0, float(total_time), label="theta-ramp")


def stirap_model(
    omega: float, delta: float, theta: ScalarSchedule, epsilon: ScalarSchedule
) -> tuple[SplitHamiltonian, ModelDescriptor]:
    """Three-level stimulated Raman passage with a dark-state shift coupling.

    On the basis |1>, |2>, |3>, H0 couples 1-2 and 2-3 with strengths
    omega*sin(theta(t)) and omega*cos(theta(t)) and detunes level 2 by
    delta. Its instantaneous eigenvalues are 0 and
    (delta +- sqrt(delta^2 + 4 omega^2))/2; the zero eigenvector is the
    dark state cos(theta)|1> - sin(theta)|3>, transported from |1> to
    -|3> as theta ramps from 0 to pi/2. The coupling is epsilon(t) times
    the projector onto the instantaneous dark state, so the dark state
    is its exact eigenvector at eigenvalue epsilon(t); it rides free of
    the coupling only to the accuracy of the adiabatic following of H0.
    """
    omega = float(omega)
    delta = float(delta)

    def h0_eval(t: float) -> np.ndarray:
        th = theta(t)
        c = omega * np.cos(th)
        s = omega * np.sin(th)
        return np.array([[0, s, 0], [s, delta, c], [0, c, 0]], dtype=np.complex128)

    def h_int_eval(t: float) -> np.ndarray:
        v = stirap_dark_state(theta(t)).astype(np.complex128)
        return epsilon(t) * np.outer(v, v.conj())

    h0 = TimeDependentOperator(3, h0_eval, "raman-passage", constant=theta.constant)
    h_int = TimeDependentOperator(
        3, h_int_eval, "epsilon*dark-projector", constant=theta.constant and epsilon.constant
    )
    desc = ModelDescriptor(
        name="stirap",
        dim=3,
        parameters={"omega": omega, "delta": delta, "theta": theta, "epsilon": epsilon},
        known_ife_states=[(stirap_dark_state(theta(0.0)), "dark")],
        notes=(
            "APPROXIMATE-ADIABATIC: the dark state rides free only in the "
            "adiabatic limit of the passage; the residual shrinks as the ramp "
            "slows down"
        ),
    )
    return SplitHamiltonian(h0, h_int), desc


def lowering_operator(fock_cutoff: int) -> np.ndarray:
    """Bosonic lowering operator truncated at `fock_cutoff`."""
    n = fock_cutoff + 1
    a = np.zeros((n, n), dtype=np.complex128)
    for m in range(1, n):
        a[m - 1, m] = np.sqrt(m)
    return a


def number_operator(fock_cutoff: int) -> np.ndarray:
    return np.diag(np.arange(fock_cutoff + 1)).astype(np.complex128)


def fock_qubit_state(fock_level: int, qubit: str, fock_cutoff: int) -> np.ndarray:
    """Product basis state |fock_level> x |g or e> on the truncated space."""
    if not 0 <= fock_level <= fock_cutoff:
        raise ValueError(f"fock level {fock_level} outside [0, {fock_cutoff}]")
    if qubit not in ("g", "e"):
        raise ValueError(f"qubit label must be 'g' or 'e', got {qubit!r}")
    psi = np.zeros(2 * (fock_cutoff + 1), dtype=np.complex128)
    psi[2 * fock_level + (1 if qubit == "g" else 0)] = 1.0
    return psi


def boundary_population(state: np.ndarray, fock_cutoff: int, k: int) -> float:
    """Population above Fock level fock_cutoff - k (the truncation buffer).

    Truncating the ladder operators breaks their algebra near the
    cutoff; any result with buffer population above
    JC_BOUNDARY_POPULATION_LIMIT should be treated as invalid.
    """
    psi = np.asarray(state)
    pop = 0.0
    for m in range(fock_cutoff - k + 1, fock_cutoff + 1):
        pop += float(abs(psi[2 * m]) ** 2 + abs(psi[2 * m + 1]) ** 2)
    return pop


def _jc_h0(omega: float, qubit_splitting: float, fock_cutoff: int) -> np.ndarray:
    eye_f = np.eye(fock_cutoff + 1)
    eye_q = np.eye(2)
    return np.kron(omega * number_operator(fock_cutoff), eye_q) + np.kron(
        eye_f, 0.5 * qubit_splitting * SIGMA_Z
    )


def jc_multiphoton(
    omega: float,
    qubit_splitting: float,
    gamma: float,
    k: int,
    delta: float,
    fock_cutoff: int,
    fock_weight: Callable[[int], float] | None = None,
) -> tuple[SplitHamiltonian, ModelDescriptor]:
    """k-quanta exchange between a bosonic mode and a qubit, off resonance.

    On (Fock 0..fock_cutoff) x (e, g) with sigma_z|g> = -|g>:

        H0    = omega * n + qubit_splitting/2 * sigma_z          (constant)
        H_int = gamma [ exp(-i (qubit_splitting - k*omega + delta) t)
                        * f(n) a^k sigma_+  + h.c. ]

    so the coupling seen in the unperturbed frame is
    gamma [exp(-i delta t) f(n) a^k sigma_+ + h.c.]. Its kernel contains
    the multiplet |m, g> for m <= k-1 (a^k annihilates them), which is
    interaction-free even though it is not an H0 eigenspace. The
    optional `fock_weight` f maps a Fock level to a real weight
    (default 1).
    """
    k = int(k)
    fock_cutoff = int(fock_cutoff)
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if fock_cutoff < k + 2:
        raise CutoffTooSmallError(f"fock_cutoff {fock_cutoff} < k + 2 = {k + 2}")
    weight = fock_weight or (lambda m: 1.0)
    weights = np.diag([float(weight(m)) for m in range(fock_cutoff + 1)])
    hop = weights @ np.linalg.matrix_power(lowering_operator(fock_cutoff), k)
    raising_part = float(gamma) * np.kron(hop, SIGMA_PLUS)
    phase_rate = -(float(qubit_splitting) - k * float(omega) + float(delta))
    h0_matrix = _jc_h0(float(omega), float(qubit_splitting), fock_cutoff)
    dim = 2 * (fock_cutoff + 1)

    def h_int_eval(t: float) -> np.ndarray:
        term = np.exp(1j * phase_rate * t) * raising_part
        return term + term.conj().T

    h0 = TimeDependentOperator.const(h0_matrix, "mode+qubit")
    h_int = TimeDependentOperator(
        dim, h_int_eval, f"{k}-quanta exchange", constant=(phase_rate == 0.0)
    )
    known = [
        (fock_qubit_state(m, "g", fock_cutoff), f"m,g:{m}") for m in range(k)
    ]
    desc = ModelDescriptor(
        name="jc-multiphoton",
        dim=dim,
        parameters={
            "omega": float(omega),
            "qubit_splitting": float(qubit_splitting),
            "gamma": float(gamma),
            "k": k,
            "delta": float(delta),
            "fock_cutoff": fock_cutoff,
        },
        known_ife_states=known,
        notes=(
            f"Fock levels above {fock_cutoff - k} are a truncation buffer: any "
            f"result with buffer population above {JC_BOUNDARY_POPULATION_LIMIT:g} "
            "is invalid"
        ),
    )
    return SplitHamiltonian(h0, h_int), desc


def jc_sum(
    omega: float,
    qubit_splitting: float,
    gamma_k: ScalarSchedule,
    gamma_l: ScalarSchedule,
    k: int,
    l: int,
    fock_cutoff: int,
) -> tuple[SplitHamiltonian, ModelDescriptor]:
    """Two simultaneous quanta-exchange couplings of orders k > l.

    H_int(t) = (gamma_k(t) a^k + gamma_l(t) a^l) sigma_+ + h.c. on the
    same space as `jc_multiphoton`. The states |m, g> with m <= l-1 are
    annihilated by both terms and stay interaction-free no matter how
    the amplitudes vary; the states with l <= m <= k-1 are in the kernel
    only while gamma_l vanishes identically.
    """
    k = int(k)
    l = int(l)
    fock_cutoff = int(fock_cutoff)
    if k <= l:
        raise BadOrderingError(f"need k > l, got k={k}, l={l}")
    if l < 1:
        raise ValueError(f"l must be >= 1, got {l}")
    if fock_cutoff < k + 2:
        raise CutoffTooSmallError(f"fock_cutoff {fock_cutoff} < k + 2 = {k + 2}")
    lowering = lowering_operator(fock_cutoff)
    hop_k = np.kron(np.linalg.matrix_power(lowering, k), SIGMA_PLUS)
    hop_l = np.kron(np.linalg.matrix_power(lowering, l), SIGMA_PLUS)
    h0_matrix = _jc_h0(float(omega), float(qubit_splitting), fock_cutoff)
    dim = 2 * (fock_cutoff + 1)

    def h_int_eval(t: float) -> np.ndarray:
        term = gamma_k(t) * hop_k + gamma_l(t) * hop_l
        return term + term.conj().T

    h0 = TimeDependentOperator.const(h0_matrix, "mode+qubit")
    h_int = TimeDependentOperator(
        dim,
        h_int_eval,
        f"{k}+{l}-quanta exchange",
        constant=gamma_k.constant and gamma_l.constant,
    )
    known = [(fock_qubit_state(m, "g", fock_cutoff), f"m,g:{m}") for m in range(l)]
    desc = ModelDescriptor(
        name="jc-sum",
        dim=dim,
        parameters={
            "omega": float(omega),
            "qubit_splitting": float(qubit_splitting),
            "gamma_k": gamma_k,
            "gamma_l": gamma_l,
            "k": k,
            "l": l,
            "fock_cutoff": fock_cutoff,
        },
        known_ife_states=known,
        notes=(
            f"|m,g> with {l} <= m <= {k - 1} ride free only while gamma_l is "
            "identically zero; Fock levels above "
            f"{fock_cutoff - k} are a truncation buffer"
        ),
    )
    return SplitHamiltonian(h0, h_int), desc


# ---------------------------------------------------------------------------
# catalog exposed to the CLI


@dataclass(frozen=True)
class ParamSpec:
    name: str
    kind: str  # "number" | "integer" | "schedule" | "flag"
    required: bool = True
    default: object = None
    doc: str = ""


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    summary: str
    dim_text: str
    params: tuple[ParamSpec, ...]
    build: Callable[[dict], tuple[SplitHamiltonian, ModelDescriptor]]
    state_labels: tuple[str, ...]
    resolve_state: Callable[[dict, ModelDescriptor, str], np.ndarray]


def _basis_state(dim: int, index: int) -> np.ndarray:
    if not 0 <= index < dim:
        raise ValueError(f"basis index {index} outside [0, {dim - 1}]")
    psi = np.zeros(dim, dtype=np.complex128)
    psi[index] = 1.0
    return psi


def _resolve_spin_half(params, desc, label):
    phi = params["phi"]
    table = {
        "plus-phi": lambda: spin_half_plus(phi),
        "minus-phi": lambda: spin_half_minus(phi),
        "plus-z": lambda: _basis_state(2, 0),
        "minus-z": lambda: _basis_state(2, 1),
    }
    if label not in table:
        raise ValueError(f"unknown spin-half state label {label!r}")
    return table[label]()


def _resolve_spin_one(params, desc, label):
    phi0 = params["phi0"]
    table = {
        "plus-one-phi": lambda: spin_one_plus(phi0),
        "minus-one-phi": lambda: spin_one_minus(phi0),
        "zero-phi": lambda: spin_one_zero(phi0),
        "plus-one-z": lambda: _basis_state(3, 0),
        "zero-z": lambda: _basis_state(3, 1),
        "minus-one-z": lambda: _basis_state(3, 2),
    }
    if label not in table:
        raise ValueError(f"unknown spin-one state label {label!r}")
    return table[label]()


def _resolve_stirap(params, desc, label):
    if label == "dark":
        return desc.known_ife_states[0][0]
    if label in ("1", "2", "3"):
        return _basis_state(3, int(label) - 1)
    raise ValueError(f"unknown stirap state label {label!r}")


def _resolve_jc(params, desc, label):
    if label.startswith("m,g:") or label.startswith("m,e:"):
        qubit = label[2]
        level = int(label.split(":", 1)[1])
        return fock_qubit_state(level, qubit, params["fock_cutoff"])
    raise ValueError(f"unknown fock-qubit state label {label!r} (expected 'm,g:<n>' or 'm,e:<n>')")


def _build_spin_half(p):
    return spin_half_rotating(p["omega"], p["alpha"], p["phi"], bool(p.get("freeze_phase", 0)))


def _build_spin_one(p):
    return spin_one_model(p["omega"], p["alpha"], p["phi0"])


def _build_stirap(p):
    theta = p.get("theta")
    if theta is None:
        if p.get("T") is None:
            raise ValueError("stirap needs either a 'theta' schedule or a total time 'T'")
        theta = stirap_default_mixing(p["T"])
    return stirap_model(p["omega"], p["delta"], theta, p["epsilon"])


def _build_jc_multiphoton(p):
    return jc_multiphoton(
        p["omega"], p["qubit_splitting"], p["gamma"], p["k"], p["delta"], p["fock_cutoff"]
    )


def _build_jc_sum(p):
    return jc_sum(
        p["omega"],
        p["qubit_splitting"],
        p["gamma_k"],
        p["gamma_l"],
        p["k"],
        p["l"],
        p["fock_cutoff"],
    )


CATALOG: dict[str, CatalogEntry] = {
    "spin-half": CatalogEntry(
        name="spin-half",
        summary="spin-1/2 in a longitudinal drive with a co-rotating transverse coupling",
        dim_text="2",
        params=(
            ParamSpec("omega", "schedule", doc="longitudinal drive rate"),
            ParamSpec("alpha", "schedule", doc="transverse coupling amplitude"),
            ParamSpec("phi", "number", doc="coupling axis angle at t=0"),
            ParamSpec("freeze_phase", "flag", required=False, default=0,
                      doc="pin the coupling axis at phi (no-go variant)"),
        ),
        build=_build_spin_half,
        state_labels=("plus-phi", "minus-phi", "plus-z", "minus-z"),
        resolve_state=_resolve_spin_half,
    ),
    "spin-one": CatalogEntry(
        name="spin-one",
        summary="spin-1 with a rotating squared transverse coupling (doublet + singlet)",
        dim_text="3",
        params=(
            ParamSpec("omega", "schedule", doc="longitudinal drive rate"),
            ParamSpec("alpha", "schedule", doc="coupling amplitude"),
            ParamSpec("phi0", "number", doc="coupling axis angle at t=0"),
        ),
        build=_build_spin_one,
        state_labels=(
            "plus-one-phi", "minus-one-phi", "zero-phi",
            "plus-one-z", "zero-z", "minus-one-z",
        ),
        resolve_state=_resolve_spin_one,
    ),
    "stirap": CatalogEntry(
        name="stirap",
        summary="three-level Raman passage with a dark-state shift coupling",
        dim_text="3",
        params=(
            ParamSpec("omega", "number", doc="Raman coupling strength"),
            ParamSpec("delta", "number", doc="intermediate-level detuning"),
            ParamSpec("epsilon", "schedule", doc="dark-state shift amplitude"),
            ParamSpec("theta", "schedule", required=False,
                      doc="mixing-angle schedule (default: ramp 0 -> pi/2 over T)"),
            ParamSpec("T", "number", required=False, doc="ramp time for the default theta"),
        ),
        build=_build_stirap,
        state_labels=("1", "2", "3", "dark"),
        resolve_state=_resolve_stirap,
    ),
    "jc-multiphoton": CatalogEntry(
        name="jc-multiphoton",
        summary="k-quanta mode-qubit exchange, detuned, truncated Fock space",
        dim_text="2*(fock_cutoff+1)",
        params=(
            ParamSpec("omega", "number", doc="mode frequency"),
            ParamSpec("qubit_splitting", "number", doc="qubit energy splitting"),
            ParamSpec("gamma", "number", doc="exchange strength"),
            ParamSpec("k", "integer", doc="quanta exchanged per flip"),
            ParamSpec("delta", "number", doc="exchange detuning"),
            ParamSpec("fock_cutoff", "integer", doc="highest retained Fock level"),
        ),
        build=_build_jc_multiphoton,
        state_labels=("m,g:<n>", "m,e:<n>"),
        resolve_state=_resolve_jc,
    ),
    "jc-sum": CatalogEntry(
        name="jc-sum",
        summary="sum of k- and l-quanta exchanges with time-varying amplitudes",
        dim_text="2*(fock_cutoff+1)",
        params=(
            ParamSpec("omega", "number", doc="mode frequency"),
            ParamSpec("qubit_splitting", "number", doc="qubit energy splitting"),
            ParamSpec("gamma_k", "schedule", doc="k-quanta amplitude"),
            ParamSpec("gamma_l", "schedule", doc="l-quanta amplitude"),
            ParamSpec("k", "integer", doc="higher exchange order"),
            ParamSpec("l", "integer", doc="lower exchange order (k > l >= 1)"),
            ParamSpec("fock_cutoff", "integer", doc="highest retained Fock level"),
        ),
        build=_build_jc_sum,
        state_labels=("m,g:<n>", "m,e:<n>"),
        resolve_state=_resolve_jc,
    ),
}


def catalog_entry(name: str) -> CatalogEntry:
    try:
        return CATALOG[name]
    except KeyError:
        raise UnknownModelError(
            f"unknown model {name!r}; available: {', '.join(sorted(CATALOG))}"
        ) from None


def resolve_state(entry: CatalogEntry, params: dict, desc: ModelDescriptor, label: str) -> np.ndarray:
    """Map a state label to an amplitude vector ('basis:<i>' works everywhere)."""
    if label.startswith("basis:"):
        return _basis_state(desc.dim, int(label.split(":", 1)[1]))
    return entry.resolve_state(params, desc, label)
