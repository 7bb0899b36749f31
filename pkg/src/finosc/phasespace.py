"""Position, momentum, displacements, and the coherent tight frame.

Phase space here is the d×d grid of points (α, β) = (a√δ, b√δ).  The
displacement unitaries

    D(α, β)φ(u) = e^{-iαβ/2}·e^{iβu}·φ(u - α)

shift by whole grid steps (cyclically) and modulate; products αβ are true real
products, never reduced.  They compose up to a phase,

    D(α₁, β₁)·D(α₂, β₂) = e^{-(i/2)(α₁β₂ - α₂β₁)}·D(α₁+α₂, β₁+β₂),

exactly as written whenever the index sums stay in range (wrapping the sum
costs an extra sign, recorded in the tests).  Applying all d² displacements to
the ground state g yields the coherent family |α,β⟩ = D(α,β)·g, a tight frame:
(1/d)·Σ |α,β⟩⟨α,β| = 1, with the Fourier covariance F|α,β⟩ = |β,-α⟩.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fourier import dft_operator
from .lattice import Lattice, Operator, Signal
from .thetagauss import GroundState, ground_state


@dataclass(frozen=True, eq=False)
class PhasePoint:
    """A phase-space grid point: integer indices and the real coordinates."""

    lattice: Lattice
    a_idx: int
    b_idx: int

    def __post_init__(self):
        s = self.lattice.s
        if not (-s <= self.a_idx <= s and -s <= self.b_idx <= s):
            raise ValueError(
                f"phase point ({self.a_idx}, {self.b_idx}) outside index range "
                f"-{s}..{s}"
            )

    @property
    def alpha(self) -> float:
        return self.a_idx * self.lattice.sqrt_delta

    @property
    def beta(self) -> float:
        return self.b_idx * self.lattice.sqrt_delta


def phase_point(lat: Lattice, a_idx: int, b_idx: int) -> PhasePoint:
    return PhasePoint(lattice=lat, a_idx=int(a_idx), b_idx=int(b_idx))


def position_operator(lat: Lattice) -> Operator:
    """Q = diag(n√δ)."""
    return Operator(lat, np.diag(lat.points))


def momentum_operator(lat: Lattice) -> Operator:
    """P = F⁺·Q·F, the position operator conjugated into the frequency side."""
    F = dft_operator(lat).mat
    return Operator(lat, F.conj().T @ np.diag(lat.points) @ F)


def displacement(lat: Lattice, p: PhasePoint) -> Operator:
    """Matrix of D(α, β): row n gets e^{-iαβ/2}·e^{iβ·n√δ} at column (n - a) mod d."""
    if p.lattice != lat:
        raise ValueError("phase point belongs to a different lattice")
    d = lat.d
    n = lat.indices
    phase = np.exp(-0.5j * p.alpha * p.beta) * np.exp(2j * np.pi * p.b_idx * n / d)
    mat = np.zeros((d, d), dtype=complex)
    rows = lat.pos(n)
    cols = lat.pos(n - p.a_idx)
    mat[rows, cols] = phase
    return Operator(lat, mat)


class CoherentFrame:
    """All d² coherent states |α,β⟩ = D(α,β)·g, cached as one dense array.

    ``states[p]`` holds the amplitude vector of the state at flat index
    p = (a + s)·d + (b + s); the row order is the deterministic row-major
    sweep used by every quantization sum.
    """

    __slots__ = ("lattice", "ground", "states")

    def __init__(self, lattice: Lattice, ground: GroundState, states: np.ndarray):
        self.lattice = lattice
        self.ground = ground
        self.states = states

    def flat_index(self, p: PhasePoint) -> int:
        s = self.lattice.s
        return (p.a_idx + s) * self.lattice.d + (p.b_idx + s)

    def state(self, p: PhasePoint) -> Signal:
        return Signal(self.lattice, self.states[self.flat_index(p)])

    def iter_points(self):
        s = self.lattice.s
        for a in range(-s, s + 1):
            for b in range(-s, s + 1):
                yield PhasePoint(lattice=self.lattice, a_idx=a, b_idx=b)

    def frame_operator(self) -> Operator:
        """S = (1/d)·Σ_p |p⟩⟨p|; equals the identity for a tight frame."""
        S = np.einsum("pn,pm->nm", self.states, self.states.conj())
        return Operator(self.lattice, S / self.lattice.d)


def coherent_frame(lat: Lattice) -> CoherentFrame:
    """Build the full coherent family from the ground state.

    |α,β⟩[n] = e^{-iαβ/2}·e^{2πi·b·n/d}·g((n-a)√δ), built in one vectorized
    sweep over (a, b).
    """
    g = ground_state(lat)
    d, s = lat.d, lat.s
    idx = lat.indices
    # shifted[a, n] = g((n - a)√δ)
    shifted = g.amp[lat.pos(idx[None, :] - idx[:, None])]
    # half-phase e^{-iαβ/2} = e^{-iπab/d}; modulation e^{2πi b n/d}
    half = np.exp(-1j * np.pi * np.outer(idx, idx) / d)  # [a, b]
    mod = np.exp(2j * np.pi * np.outer(idx, idx) / d)  # [b, n]
    states = half[:, :, None] * mod[None, :, :] * shifted[:, None, :]
    return CoherentFrame(lat, g, states.reshape(d * d, d))


def overlap(frame: CoherentFrame, p1: PhasePoint, p2: PhasePoint) -> complex:
    """⟨p1|p2⟩ through the ground-state correlation sum:

    e^{(i/2)(α₁β₁ - α₂β₂)} Σ_u e^{i(β₂-β₁)u}·g(u-α₁)·g(u-α₂).
    """
    lat = frame.lattice
    if p1.lattice != lat or p2.lattice != lat:
        raise ValueError("phase points belong to a different lattice")
    g = frame.ground.amp
    n = lat.indices
    g1 = g[lat.pos(n - p1.a_idx)]
    g2 = g[lat.pos(n - p2.a_idx)]
    mod = np.exp(1j * (p2.beta - p1.beta) * lat.points)
    front = np.exp(0.5j * (p1.alpha * p1.beta - p2.alpha * p2.beta))
    return complex(front * np.sum(mod * g1 * g2))
