"""Cyclic Jacobi sweeps, pure NumPy backend.

Reference implementation of the rotation kernel behind finosc.spectral.eigh.
The compiled twin (finosc._jacobi, built from _jacobi.pyx) performs the exact
same rotation sequence in the same order; either backend may be selected at
import time and they agree to rounding.
"""

import numpy as np


def off_norm(a):
    """Frobenius norm of the off-diagonal part.

    Accumulated sequentially in row-major order, matching the compiled
    twin term for term so both backends take the same stopping decision.
    """
    sq = a * a
    np.fill_diagonal(sq, 0.0)
    return float(np.sqrt(np.cumsum(sq.ravel())[-1]))


def cyclic_jacobi(a, v, tol_off, max_sweeps):
    """Diagonalize symmetric ``a`` in place by cyclic Jacobi rotations.

    ``v`` (same shape, preinitialized to the identity) accumulates the
    orthogonal transform; its columns end up as eigenvectors.  Sweeps stop
    once the off-diagonal Frobenius norm drops below ``tol_off``.  Returns
    (sweeps_used, final_off_norm); the caller decides whether hitting
    ``max_sweeps`` is an error.
    """
    n = a.shape[0]
    sweeps = 0
    off = off_norm(a)
    while off > tol_off and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                theta = 0.5 * (aqq - app) / apq
                # smaller-magnitude root of t² + 2tθ - 1 = 0 keeps |angle| ≤ π/4
                if theta >= 0.0:
                    t = 1.0 / (theta + np.sqrt(1.0 + theta * theta))
                else:
                    t = 1.0 / (theta - np.sqrt(1.0 + theta * theta))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                # two-sided rotation in the (p, q) plane
                ap = a[:, p].copy()
                aq = a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                # exact values on the rotated 2x2 block
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
        sweeps += 1
        off = off_norm(a)
    return sweeps, off
