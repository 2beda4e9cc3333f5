"""Exact few-qubit statevector engine.

Provides the BB84 preparations {|0>, |1>, |+>, |->}, the gate set
{X, Z, H, P, R, CNOT}, computational / rectilinear / diagonal basis
measurements, and phase-insensitive state comparison.

Conventions:
  - Qubit 0 is the leftmost (most significant) position of a basis label,
    so for two qubits the amplitude order is |00>, |01>, |10>, |11>.
  - States are immutable; every operation returns a new StateVector.
  - Measurement probabilities are rounded to 12 decimals before
    thresholding.  All states this engine targets have dyadic or
    1/sqrt(2)-valued amplitudes, so the rounding pins Born probabilities
    to exact {0, 1/2, 1} and keeps outcome sampling stable across the
    scalar and vectorized code paths.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import pi, sqrt

import numpy as np

MAX_QUBITS = 12
ATOL = 1e-9

_SQRT2_INV = 1.0 / sqrt(2.0)


class Basis(enum.Enum):
    """Rectilinear {|0>,|1>} or diagonal {|+>,|->} measurement basis."""

    R = "R"
    D = "D"


# Single-qubit gates by name.  "R" is the non-Clifford pi/4 phase gate.
GATE_MATRICES = {
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
    "H": np.array([[1, 1], [1, -1]], dtype=complex) * _SQRT2_INV,
    "P": np.array([[1, 0], [0, 1j]], dtype=complex),
    "R": np.array([[1, 0], [0, np.exp(1j * pi / 4)]], dtype=complex),
}

CLIFFORD_GATES = ("X", "Z", "H", "P", "CNOT")


@dataclass(frozen=True)
class Cnot:
    """CNOT gate carrying its (control, target) qubit indices."""

    control: int
    target: int

    def __post_init__(self):
        if self.control == self.target:
            raise ValueError("CNOT control and target must be distinct")


@dataclass(frozen=True)
class StateVector:
    """Normalized complex amplitudes over 1..MAX_QUBITS qubits."""

    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex)
        dim = amps.shape[0]
        if amps.ndim != 1 or dim & (dim - 1) or not 2 <= dim <= 2**MAX_QUBITS:
            raise ValueError(f"amplitude length {dim} is not 2^k with 1 <= k <= {MAX_QUBITS}")
        norm = float(np.sum(np.abs(amps) ** 2))
        if abs(norm - 1.0) > ATOL:
            raise ValueError(f"state not normalized: |amps|^2 = {norm}")
        amps = amps.copy()
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)

    @property
    def num_qubits(self) -> int:
        return int(self.amplitudes.shape[0]).bit_length() - 1


def bb84_state(basis: Basis, bit: int) -> StateVector:
    """The four protocol preparations: (R,0)=|0>, (R,1)=|1>, (D,0)=|+>, (D,1)=|->."""
    if bit not in (0, 1):
        raise ValueError(f"bit must be 0 or 1, got {bit}")
    if basis is Basis.R:
        amps = [1.0, 0.0] if bit == 0 else [0.0, 1.0]
    else:
        amps = [_SQRT2_INV, _SQRT2_INV] if bit == 0 else [_SQRT2_INV, -_SQRT2_INV]
    return StateVector(np.array(amps, dtype=complex))


def _check_index(state: StateVector, target: int):
    if not 0 <= target < state.num_qubits:
        raise IndexError(f"qubit index {target} out of range for {state.num_qubits} qubits")


def apply_gate(state: StateVector, gate: str | Cnot, target: int | None = None) -> StateVector:
    """Apply a named single-qubit gate at `target`, or a Cnot at its own indices."""
    k = state.num_qubits
    if isinstance(gate, Cnot):
        _check_index(state, gate.control)
        _check_index(state, gate.target)
        amps = state.amplitudes.reshape([2] * k).copy()
        ctrl_one = [slice(None)] * k
        ctrl_one[gate.control] = 1
        flip_axis = gate.target if gate.target < gate.control else gate.target - 1
        amps[tuple(ctrl_one)] = np.flip(amps[tuple(ctrl_one)], axis=flip_axis).copy()
        return StateVector(amps.reshape(-1))
    if gate not in GATE_MATRICES:
        raise ValueError(f"unknown gate {gate!r}")
    if target is None:
        raise ValueError("single-qubit gates need a target index")
    _check_index(state, target)
    amps = state.amplitudes.reshape([2] * k)
    amps = np.moveaxis(amps, target, -1)
    amps = amps @ GATE_MATRICES[gate].T
    return StateVector(np.moveaxis(amps, -1, target).reshape(-1))


def _prob_zero(state: StateVector, target: int) -> float:
    amps = np.abs(state.amplitudes.reshape([2] * state.num_qubits)) ** 2
    p0 = float(np.moveaxis(amps, target, 0)[0].sum())
    return round(p0, 12)


def _uniform(rng) -> float:
    # Accepts either this package's streams or a numpy Generator.
    return rng.next_double() if hasattr(rng, "next_double") else float(rng.random())


def measure_computational(state: StateVector, target: int, rng) -> tuple[int, StateVector]:
    """Born-rule measurement of one qubit; returns (outcome, collapsed state).

    Exactly one uniform draw is consumed per call, even for deterministic
    outcomes; the fast kernels rely on that when replaying streams.
    """
    _check_index(state, target)
    p0 = _prob_zero(state, target)
    outcome = 0 if _uniform(rng) < p0 else 1
    k = state.num_qubits
    amps = state.amplitudes.reshape([2] * k).copy()
    sel = [slice(None)] * k
    sel[target] = 1 - outcome
    amps[tuple(sel)] = 0.0
    amps /= sqrt(p0 if outcome == 0 else 1.0 - p0)
    return outcome, StateVector(amps.reshape(-1))


def measure_in_basis(state: StateVector, basis: Basis, target: int, rng) -> tuple[int, StateVector]:
    """Measure in R or D.  D outcome 0 projects onto |+>, outcome 1 onto |->."""
    if basis is Basis.R:
        return measure_computational(state, target, rng)
    rotated = apply_gate(state, "H", target)
    outcome, collapsed = measure_computational(rotated, target, rng)
    return outcome, apply_gate(collapsed, "H", target)


def equal_up_to_global_phase(a: StateVector, b: StateVector, tol: float = ATOL) -> bool:
    """True iff a = c*b for some unit complex c, to within `tol` in 2-norm."""
    if a.num_qubits != b.num_qubits:
        raise ValueError("states have different qubit counts")
    ip = np.vdot(b.amplitudes, a.amplitudes)
    mag = abs(ip)
    phase = ip / mag if mag > 1e-300 else 1.0
    return float(np.linalg.norm(a.amplitudes - phase * b.amplitudes)) <= tol
