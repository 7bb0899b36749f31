# cython: boundscheck=False, wraparound=False, cdivision=True
"""Cyclic Jacobi sweeps, compiled backend.

Same rotation sequence as finosc._jacobi_py (the pure NumPy twin); kept in
lockstep so either backend yields matching results.  The elementwise update
below touches exactly the entries the vectorized twin touches, in the same
arithmetic, with the rotated 2x2 block overwritten by its exact values.
"""

from libc.math cimport sqrt


def off_norm(double[:, ::1] a):
    """Frobenius norm of the off-diagonal part."""
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t i, j
    cdef double acc = 0.0
    for i in range(n):
        for j in range(n):
            if i != j:
                acc += a[i, j] * a[i, j]
    return sqrt(acc)


def cyclic_jacobi(double[:, ::1] a, double[:, ::1] v, double tol_off, int max_sweeps):
    """Diagonalize symmetric ``a`` in place; ``v`` accumulates eigenvectors.

    Returns (sweeps_used, final_off_norm).  See the pure twin for the contract.
    """
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t p, q, i
    cdef int sweeps = 0
    cdef double off, apq, app, aqq, theta, t, c, s, aip, aiq, vip, viq
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
                if theta >= 0.0:
                    t = 1.0 / (theta + sqrt(1.0 + theta * theta))
                else:
                    t = 1.0 / (theta - sqrt(1.0 + theta * theta))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                for i in range(n):
                    if i != p and i != q:
                        aip = a[i, p]
                        aiq = a[i, q]
                        a[i, p] = c * aip - s * aiq
                        a[p, i] = a[i, p]
                        a[i, q] = s * aip + c * aiq
                        a[q, i] = a[i, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                for i in range(n):
                    vip = v[i, p]
                    viq = v[i, q]
                    v[i, p] = c * vip - s * viq
                    v[i, q] = s * vip + c * viq
        sweeps += 1
        off = off_norm(a)
    return sweeps, off
