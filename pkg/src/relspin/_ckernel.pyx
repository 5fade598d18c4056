"""Compiled fixed-size complex kernels.

Mirror of ``relspin._pykernel``; the two must stay numerically interchangeable.
"""
import numpy as np


def kron(const double complex[:, ::1] a, const double complex[:, ::1] b):
    cdef Py_ssize_t n = a.shape[0], m = b.shape[0]
    cdef Py_ssize_t i, j, k, l
    cdef double complex aij
    out = np.empty((n * m, n * m), dtype=np.complex128)
    cdef double complex[:, ::1] o = out
    for i in range(n):
        for j in range(n):
            aij = a[i, j]
            for k in range(m):
                for l in range(m):
                    o[i * m + k, j * m + l] = aij * b[k, l]
    return out


def matmul(const double complex[:, ::1] a, const double complex[:, ::1] b):
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t i, j, k
    cdef double complex acc
    out = np.empty((n, n), dtype=np.complex128)
    cdef double complex[:, ::1] o = out
    for i in range(n):
        for j in range(n):
            acc = 0
            for k in range(n):
                acc = acc + a[i, k] * b[k, j]
            o[i, j] = acc
    return out


def matvec(const double complex[:, ::1] m, const double complex[::1] v):
    cdef Py_ssize_t n = m.shape[0]
    cdef Py_ssize_t i, k
    cdef double complex acc
    out = np.empty(n, dtype=np.complex128)
    cdef double complex[::1] o = out
    for i in range(n):
        acc = 0
        for k in range(n):
            acc = acc + m[i, k] * v[k]
        o[i] = acc
    return out


def adjoint(const double complex[:, ::1] m):
    cdef Py_ssize_t n = m.shape[0]
    cdef Py_ssize_t i, j
    out = np.empty((n, n), dtype=np.complex128)
    cdef double complex[:, ::1] o = out
    for i in range(n):
        for j in range(n):
            o[i, j] = m[j, i].conjugate()
    return out


def vdot(const double complex[::1] u, const double complex[::1] v):
    cdef Py_ssize_t i
    cdef double complex acc = 0
    for i in range(u.shape[0]):
        acc = acc + u[i].conjugate() * v[i]
    return acc


def expect(const double complex[::1] v, const double complex[:, ::1] m):
    cdef Py_ssize_t n = m.shape[0]
    cdef Py_ssize_t i, k
    cdef double complex acc = 0, row
    for i in range(n):
        row = 0
        for k in range(n):
            row = row + m[i, k] * v[k]
        acc = acc + v[i].conjugate() * row
    return acc


def herm_residual(const double complex[:, ::1] m):
    cdef Py_ssize_t n = m.shape[0]
    cdef Py_ssize_t i, j
    cdef double worst = 0.0, d
    for i in range(n):
        for j in range(i, n):
            d = abs(m[i, j] - m[j, i].conjugate())
            if d > worst:
                worst = d
    return worst
