"""Quantum one-time pad and Clifford decryption-key updates.

A qubit is encrypted as X^a Z^b |phi> with uniform key bits (a, b); to
anyone without the key the result is maximally mixed.  When a server
applies a Clifford gate G to the encrypted qubit, the client can keep up
with the computation purely classically: G (X^a Z^b) = phase * (X^a' Z^b') G
for updated key bits (a', b').  `key_update_clifford` implements that
table; the non-Clifford R gate has no such local update and is rejected.

Operator order: X^a Z^b means Z is applied to the ket first, then X.
The opposite convention differs by a key-dependent global phase but would
silently break the update table, so it is pinned here and verified by the
exhaustive round-trip tests.
"""

from __future__ import annotations

from dataclasses import dataclass

from .qsim import Cnot, StateVector, apply_gate


@dataclass(frozen=True)
class PadKey:
    """Per-qubit pad: a is the X exponent, b the Z exponent."""

    a: int
    b: int

    def __post_init__(self):
        if self.a not in (0, 1) or self.b not in (0, 1):
            raise ValueError(f"pad key bits must be 0/1, got ({self.a}, {self.b})")


class NonCliffordGateError(ValueError):
    """Raised for gates whose key update would need the interactive subprotocol."""


def qotp_encrypt(state: StateVector, key: PadKey, target: int = 0) -> StateVector:
    if key.b:
        state = apply_gate(state, "Z", target)
    if key.a:
        state = apply_gate(state, "X", target)
    return state


def qotp_decrypt(state: StateVector, key: PadKey, target: int = 0) -> StateVector:
    # Inverse of X^a Z^b: undo X first, then Z.
    if key.a:
        state = apply_gate(state, "X", target)
    if key.b:
        state = apply_gate(state, "Z", target)
    return state


def key_update_clifford(gate: str | Cnot, keys: PadKey | tuple[PadKey, PadKey]):
    """Updated pad keys after the server applies a Clifford gate.

    Single-qubit gates take and return one PadKey; Cnot takes and returns
    the (control, target) key pair.  Every row of this table is checked
    against the statevector engine by the test suite rather than trusted.
    """
    if isinstance(gate, Cnot):
        kc, kt = keys
        return (
            PadKey(kc.a, kc.b ^ kt.b),
            PadKey(kc.a ^ kt.a, kt.b),
        )
    if gate in ("X", "Z"):
        return keys
    if gate == "H":
        return PadKey(keys.b, keys.a)
    if gate == "P":
        return PadKey(keys.a, keys.a ^ keys.b)
    if gate == "R":
        raise NonCliffordGateError(
            "R is not Clifford: the pad update needs the interactive auxiliary-qubit subprotocol"
        )
    raise ValueError(f"unknown gate {gate!r}")
