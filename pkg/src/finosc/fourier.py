"""Finite Fourier transform, its spectral projectors, and circulants.

The transform is the unitary with entries

    F[n, m] = d^(-1/2) · exp(-2πi·n·m/d),      n, m = -s..s,

so F⁴ = 1 and F² is the parity flip φ(u) ↦ φ(-u).  Its eigenvalues are the
fourth roots of unity i^m; the corresponding spectral projectors come from
the finite geometric sum

    π_m = (1/4) Σ_{k=0}^{3} i^{m k} F^k,       F = Σ_m (-i)^m π_m.

Circulant operators (entry (n, m) = c[n-m], indices mod d) diagonalize in the
Fourier basis; the equidistant circulant C = F⁺·diag(1, …, d)·F has the
closed-form first column

    c_k = (d+1)/2                      for k ≡ 0 (mod d),
    c_k = e^{2πik/d} / (e^{2πik/d}-1)  otherwise,

and plays the role of the comparison operator with exactly the spectrum
1, 2, …, d.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .lattice import Lattice, Operator, Signal


def dft_operator(lat: Lattice, inverse: bool = False) -> Operator:
    """The finite Fourier matrix; ``inverse=True`` gives its adjoint (sign +)."""
    sign = 1.0 if inverse else -1.0
    n = lat.indices
    phase = np.exp(sign * 2j * np.pi * np.outer(n, n) / lat.d)
    return Operator(lat, phase / np.sqrt(lat.d))


@dataclass(frozen=True, eq=False)
class FourierProjectors:
    """The four spectral projectors of F, ordered by m: eigenvalue (-i)^m."""

    lattice: Lattice
    pi: tuple  # (π_0, π_1, π_2, π_3) as Operators

    def __getitem__(self, m: int) -> Operator:
        return self.pi[m % 4]


def fourier_projectors(lat: Lattice) -> FourierProjectors:
    """Build π_m = (1/4)·Σ_k i^{mk}·F^k for m = 0..3."""
    F = dft_operator(lat).mat
    powers = [np.eye(lat.d, dtype=complex), F, F @ F, F @ F @ F]
    pi = []
    for m in range(4):
        acc = np.zeros((lat.d, lat.d), dtype=complex)
        for k in range(4):
            acc += (1j) ** (m * k) * powers[k]
        pi.append(Operator(lat, acc / 4.0))
    return FourierProjectors(lattice=lat, pi=tuple(pi))


def closed_form_coordinate_transforms(lat: Lattice) -> tuple[Signal, Signal]:
    """Closed forms of F[q] and F[q²] on the grid.

    F[q](n√δ)  = 0 for n ≡ 0 (mod d), else (-1)^n · i·√π / (√2·sin(πn/d));
    F[q²](n√δ) = (2π/√d)·s(s+1)/3 for n ≡ 0, else
                 (-1)^n · π·cos(πn/d) / (√d·sin²(πn/d)).
    """
    d, s = lat.d, lat.s
    n = lat.indices
    fq = np.zeros(d, dtype=complex)
    fq2 = np.zeros(d, dtype=complex)
    nz = n != 0
    sn = np.sin(np.pi * n[nz] / d)
    sgn = (-1.0) ** n[nz]
    fq[nz] = sgn * 1j * np.sqrt(np.pi) / (np.sqrt(2.0) * sn)
    fq2[nz] = sgn * np.pi * np.cos(np.pi * n[nz] / d) / (np.sqrt(d) * sn**2)
    fq2[n == 0] = (2.0 * np.pi / np.sqrt(d)) * s * (s + 1) / 3.0
    return Signal(lat, fq), Signal(lat, fq2)


def transform_of_coordinate_at(lat: Lattice, j: int) -> complex:
    """F[q] at an arbitrary integer frequency j (d-periodic in j)."""
    if j % lat.d == 0:
        return 0.0 + 0.0j
    return ((-1.0) ** j) * 1j * np.sqrt(np.pi) / (
        np.sqrt(2.0) * np.sin(np.pi * j / lat.d)
    )


def transform_of_coordinate_squared_at(lat: Lattice, j: int) -> float:
    """F[q²] at an arbitrary integer frequency j (d-periodic in j)."""
    d, s = lat.d, lat.s
    if j % d == 0:
        return (2.0 * np.pi / np.sqrt(d)) * s * (s + 1) / 3.0
    return ((-1.0) ** j) * np.pi * np.cos(np.pi * j / d) / (
        np.sqrt(d) * np.sin(np.pi * j / d) ** 2
    )


@dataclass(frozen=True, eq=False)
class CirculantSpec:
    """A circulant described by its first column c, indexed n = -s..s."""

    lattice: Lattice
    first_column: np.ndarray

    def materialize(self) -> Operator:
        """Dense matrix with entry (n, m) = c[(n-m) mod d]."""
        lat = self.lattice
        n = lat.indices
        diff = lat.pos(n[:, None] - n[None, :])
        return Operator(lat, self.first_column[diff])

    def eigenvalues(self) -> np.ndarray:
        """Diagonal of the Fourier-side representation, position k = -s..s.

        ev[k] = Σ_n c[n]·e^{-2πi·k·n/d}, which makes
        materialize() == F⁺·diag(ev)·F hold entrywise for every first column.
        For symmetric columns (c[n] = c[-n], the only kind the Hamiltonian
        constructions produce) this coincides with Σ_n c[n]·e^{+2πi·k·n/d}.
        """
        lat = self.lattice
        n = lat.indices
        phases = np.exp(-2j * np.pi * np.outer(n, n) / lat.d)
        return phases @ self.first_column


def circulant(lat: Lattice, first_column) -> CirculantSpec:
    col = np.asarray(first_column)
    if col.shape != (lat.d,):
        raise ValueError(f"first column length {col.shape} does not match d={lat.d}")
    return CirculantSpec(lattice=lat, first_column=col)


def equidistant_circulant(lat: Lattice) -> CirculantSpec:
    """The circulant F⁺·diag(1, …, d)·F with eigenvalues exactly 1..d."""
    d = lat.d
    n = lat.indices
    col = np.empty(d, dtype=complex)
    z = np.exp(2j * np.pi * n / d)
    nz = n != 0
    col[nz] = z[nz] / (z[nz] - 1.0)
    col[~nz] = (d + 1) / 2.0
    return CirculantSpec(lattice=lat, first_column=col)
