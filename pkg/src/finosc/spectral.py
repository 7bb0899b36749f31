"""Symmetric eigensolver wrapper and labeled oscillator eigenbases.

Eigendecomposition runs through a cyclic Jacobi sweep routine rather than a
library call: rotations preserve symmetry exactly, converge quadratically,
and deliver orthonormal vectors to machine precision, which the basis
labeling below then audits.  A compiled version of the sweep kernel is used
when the build produced it, with a pure NumPy twin as fallback; both execute
the identical rotation sequence, so results agree to the last bit.

A basis is accepted only after three independent labelings agree for every
vector: the parity under n → -n, the Fourier eigenvalue (-i)^m, and the
sign alternation count wherever float precision can resolve it.  Any
mismatch raises; there is no quiet fallback.
"""

from __future__ import annotations

import numpy as np

from .lattice import Lattice, Operator, Signal
from .fourier import dft_operator
from . import reference

try:
    from ._jacobi import cyclic_jacobi

    JACOBI_BACKEND = "compiled"
except ImportError:
    from ._jacobi_py import cyclic_jacobi

    JACOBI_BACKEND = "python"

OFF_DIAGONAL_TOL = 1e-14
MAX_SWEEPS = 100
SYMMETRY_TOL = 1e-10
RESIDUAL_TOL = 1e-10
GAP_TOL = 1e-10
PARITY_TOL = 1e-10
FOURIER_AMBIGUITY = 0.1
ZERO_SKIP = 1e-12


class ConvergenceError(RuntimeError):
    """Jacobi sweeps exhausted before the off-diagonal mass fell below tol."""


def eigh(op) -> tuple[np.ndarray, np.ndarray]:
    """Full eigendecomposition of a real symmetric operator.

    Accepts an Operator or a square ndarray whose entries are real symmetric
    up to 1e-10 relative; anything farther from symmetric is rejected rather
    than silently symmetrized.  Returns (values ascending, vectors in
    matching columns).  The result is audited: each residual column of
    A·v - λ·v must stay below 1e-10 times the Frobenius norm of A.
    """
    mat = op.mat if isinstance(op, Operator) else np.asarray(op)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {mat.shape}")
    scale = max(1.0, float(np.max(np.abs(mat))))
    if np.iscomplexobj(mat):
        if float(np.max(np.abs(mat.imag))) > SYMMETRY_TOL * scale:
            raise ValueError("matrix has a non-negligible imaginary part")
        mat = mat.real
    asym = float(np.max(np.abs(mat - mat.T)))
    if asym > SYMMETRY_TOL * scale:
        raise ValueError(f"matrix is not symmetric: max|A - Aᵀ| = {asym:.3e}")

    a = np.ascontiguousarray(0.5 * (mat + mat.T), dtype=np.float64)
    norm_f = float(np.linalg.norm(a))
    n = a.shape[0]
    v = np.eye(n, dtype=np.float64)
    if norm_f > 0.0:
        tol_off = OFF_DIAGONAL_TOL * norm_f
        sweeps, off = cyclic_jacobi(a, v, tol_off, MAX_SWEEPS)
        if off > tol_off:
            raise ConvergenceError(
                f"off-diagonal norm {off:.3e} above {tol_off:.3e} "
                f"after {sweeps} sweeps"
            )
    vals = np.diag(a).copy()
    order = np.argsort(vals, kind="stable")
    vals = vals[order]
    vecs = np.ascontiguousarray(v[:, order])

    sym = 0.5 * (mat + mat.T)
    resid = float(np.max(np.linalg.norm(sym @ vecs - vecs * vals, axis=0)))
    if resid > RESIDUAL_TOL * max(norm_f, 1.0):
        raise ConvergenceError(f"eigenpair residual {resid:.3e} too large")
    return vals, vecs


def harper_hamiltonian(lat: Lattice) -> Operator:
    """Finite-difference oscillator: cyclic second difference plus cosine well.

    Entries: 2·(cos(2πn/d) - 2) on the diagonal and 1 on the two cyclic
    off-diagonals (including the corner pair that closes the ring).  Real
    symmetric, commutes with the Fourier operator, spectrum inside [-8, 0).
    """
    d = lat.d
    mat = np.zeros((d, d))
    pos = np.arange(d)
    mat[pos, pos] = 2.0 * (np.cos(2.0 * np.pi * lat.indices / d) - 2.0)
    mat[pos, (pos + 1) % d] = 1.0
    mat[pos, (pos - 1) % d] = 1.0
    return Operator(lat, mat)


def sign_alternations(v) -> int:
    """Number of sign changes along the vector, skipping near-zero entries.

    Entries below 1e-12 of the max magnitude are ignored; a change is counted
    when consecutive surviving entries differ in sign.  This is the discrete
    stand-in for the node count of a continuous eigenfunction.
    """
    arr = v.amp if isinstance(v, Signal) else np.asarray(v)
    if np.iscomplexobj(arr):
        mx = float(np.max(np.abs(arr)))
        if mx > 0.0 and float(np.max(np.abs(arr.imag))) > ZERO_SKIP * mx:
            raise ValueError("alternation count needs a real vector")
        arr = arr.real
    mx = float(np.max(np.abs(arr)))
    if mx == 0.0:
        return 0
    kept = arr[np.abs(arr) >= ZERO_SKIP * mx]
    return int(np.sum(kept[:-1] * kept[1:] < 0.0))


_FOURIER_ROOTS = np.array([1.0, -1.0j, -1.0, 1.0j])


class SpectralBasis:
    """Orthonormal eigenbasis ordered by quantum number, with audited labels.

    ``vectors[:, m]`` is the m-th oscillator eigenvector: m sign
    alternations, parity (-1)^m, Fourier eigenvalue (-i)^m.  ``values``
    holds the matching eigenvalues in the same label order.  They are not
    monotone: the upper spectrum of either operator forms parity doublets
    whose even member lies below its odd partner, and for ``kind='harper'``
    the sequence additionally runs downward overall (the nodeless vector
    carries the largest eigenvalue).

    ``alternations`` stores the measured counts.  These equal 0..d-1 except
    for the most oscillatory vectors at large d, whose faintest genuine
    lobes sink below the relative counting floor; such counts fall short of
    m by an even amount and are reported as measured.
    """

    __slots__ = ("lattice", "kind", "values", "vectors", "alternations",
                 "parities", "fourier_indices", "_kernel_cache")

    def __init__(self, lattice, kind, values, vectors, alternations,
                 parities, fourier_indices):
        self.lattice = lattice
        self.kind = kind
        self.values = values
        self.vectors = vectors
        self.alternations = alternations
        self.parities = parities
        self.fourier_indices = fourier_indices
        self._kernel_cache = {}

    def vector(self, m: int) -> Signal:
        if not 0 <= m < self.lattice.d:
            raise ValueError(f"quantum number must be in 0..{self.lattice.d - 1}")
        return Signal(self.lattice, self.vectors[:, m].copy())


def _fix_sign(vec: np.ndarray, target: np.ndarray) -> np.ndarray:
    overlap = float(vec @ target)
    if abs(overlap) > ZERO_SKIP:
        return -vec if overlap < 0.0 else vec
    # reference sample vanished numerically; pin the largest entry positive
    k = int(np.argmax(np.abs(vec)))
    return -vec if vec[k] < 0.0 else vec


def oscillator_basis(op, lat: Lattice, kind: str) -> SpectralBasis:
    """Diagonalize an oscillator Hamiltonian and label its eigenbasis.

    The quantum number m is the sign-alternation count of the eigenvector,
    not the eigenvalue rank.  The two orderings agree through the lower part
    of the spectrum but split at the top, where the states form parity
    doublets whose even member sits below its odd partner; for 'harper' the
    whole sequence additionally runs down the spectrum (the nodeless vector
    carries the largest eigenvalue).

    Counting alternations directly is ill-posed for the most oscillatory
    vectors at large d (their faintest genuine lobes sink below the counting
    floor), so the labels are assigned from two robust facts instead: every
    vector is exactly even or odd under n -> -n, and within each parity
    class the eigenvalues are strictly monotone in m.  Interleaving the two
    classes from the nodeless end gives the alternation ordering wherever
    the count is resolvable, and extends it where it is not.  Each label is
    then audited three ways: parity must equal m mod 2, the Fourier
    eigenvalue must equal (-i)^m (this pins m mod 4 and catches any
    within-class misordering), and the measured alternation count must equal
    m wherever resolvable.  A resolution-limited count can only fall short
    of m by an even amount (a suppressed lobe hides two sign changes);
    anything else raises.

    Eigenvalues must be simple (adjacent gap above 1e-10).  Any label
    inconsistency raises instead of degrading.
    """
    if kind not in ("frame", "harper"):
        raise ValueError(f"kind must be 'frame' or 'harper', got {kind!r}")
    if isinstance(op, Operator) and op.lattice != lat:
        raise ValueError("operator belongs to a different lattice")
    hmat = op.mat if isinstance(op, Operator) else np.asarray(op)
    fmat = dft_operator(lat).mat
    comm = float(np.linalg.norm(fmat @ hmat - hmat @ fmat))
    if comm > 1e-9 * max(1.0, float(np.linalg.norm(hmat))):
        raise ValueError(
            f"matrix does not commute with the Fourier operator "
            f"(‖FH - HF‖_F = {comm:.3e}); labels need Fourier invariance"
        )
    vals, vecs = eigh(op)
    d = lat.d
    if len(vals) != d:
        raise ValueError("matrix size does not match the lattice")
    gaps = np.diff(vals)
    if float(np.min(gaps)) < GAP_TOL:
        raise RuntimeError(
            f"eigenvalue gap {np.min(gaps):.3e} below {GAP_TOL:.0e}; "
            "labels would be meaningless"
        )
    rev = vecs[::-1, :]
    even_dev = np.max(np.abs(vecs - rev), axis=0)
    odd_dev = np.max(np.abs(vecs + rev), axis=0)
    par = np.where(even_dev <= PARITY_TOL, 0,
                   np.where(odd_dev <= PARITY_TOL, 1, -1))
    if np.any(par < 0):
        k = int(np.nonzero(par < 0)[0][0])
        raise RuntimeError(
            f"eigenvector {k} is neither even nor odd "
            f"(deviations {even_dev[k]:.3e}, {odd_dev[k]:.3e})"
        )
    n_even = int(np.sum(par == 0))
    if n_even != lat.s + 1:
        raise RuntimeError(
            f"{n_even} even eigenvectors, expected {lat.s + 1}"
        )
    # the nodeless ground sits at one spectral edge; it decides whether
    # label order runs up or down the eigenvalues
    alt_lo = sign_alternations(vecs[:, 0])
    alt_hi = sign_alternations(vecs[:, -1])
    if (alt_lo == 0) == (alt_hi == 0):
        raise RuntimeError(
            "cannot place the nodeless vector at a spectral edge "
            f"(edge alternation counts {alt_lo}, {alt_hi})"
        )
    cols = np.arange(d) if alt_lo == 0 else np.arange(d - 1, -1, -1)
    order = np.empty(d, dtype=int)
    order[0::2] = cols[par[cols] == 0]
    order[1::2] = cols[par[cols] == 1]
    vals = vals[order].copy()
    vecs = np.ascontiguousarray(vecs[:, order])
    par = par[order]

    alternations = np.empty(d, dtype=int)
    fourier_indices = np.empty(d, dtype=int)
    for m in range(d):
        target = reference.hermite_sample(lat, m).amp
        vec = _fix_sign(vecs[:, m], target)
        vecs[:, m] = vec

        if par[m] != m % 2:
            raise RuntimeError(
                f"vector {m} has parity {par[m]}, expected {m % 2}"
            )
        z = complex(vec @ (fmat @ vec))
        dists = np.abs(z - _FOURIER_ROOTS)
        k = int(np.argmin(dists))
        if float(dists[k]) > FOURIER_AMBIGUITY:
            raise RuntimeError(
                f"Fourier eigenvalue of vector {m} is ambiguous: "
                f"⟨v, Fv⟩ = {z:.6f}"
            )
        if k != m % 4:
            raise RuntimeError(
                f"vector {m} has Fourier index {k}, expected {m % 4}"
            )
        alt = sign_alternations(vec)
        if alt != m and (alt > m or (m - alt) % 2 != 0):
            raise RuntimeError(
                f"vector at position {m} has {alt} sign alternations"
            )
        alternations[m] = alt
        fourier_indices[m] = k

    return SpectralBasis(
        lattice=lat,
        kind=kind,
        values=vals,
        vectors=vecs,
        alternations=alternations,
        parities=par,
        fourier_indices=fourier_indices,
    )
