"""Pure-Python fixed-size complex kernels.

Same functions and signatures as the compiled ``_ckernel`` module. Inputs are
C-contiguous complex128 numpy arrays of size 2 or 4 (vectors) and 2x2 or 4x4
(matrices); outputs are fresh complex128 arrays or Python scalars.
"""
from __future__ import annotations

import numpy as np


def kron(a, b):
    A = a.tolist()
    B = b.tolist()
    n, m = len(A), len(B)
    out = [[0j] * (n * m) for _ in range(n * m)]
    for i in range(n):
        Ai = A[i]
        for j in range(n):
            aij = Ai[j]
            for k in range(m):
                Bk = B[k]
                row = out[i * m + k]
                for l in range(m):
                    row[j * m + l] = aij * Bk[l]
    return np.array(out, dtype=np.complex128)


def matmul(a, b):
    A = a.tolist()
    B = b.tolist()
    n = len(A)
    out = []
    for i in range(n):
        Ai = A[i]
        out.append([sum(Ai[k] * B[k][j] for k in range(n)) for j in range(n)])
    return np.array(out, dtype=np.complex128)


def matvec(m, v):
    M = m.tolist()
    V = v.tolist()
    return np.array([sum(r * x for r, x in zip(row, V)) for row in M], dtype=np.complex128)


def adjoint(m):
    M = m.tolist()
    n = len(M)
    return np.array(
        [[M[j][i].conjugate() for j in range(n)] for i in range(n)], dtype=np.complex128
    )


def vdot(u, v):
    return complex(sum(x.conjugate() * y for x, y in zip(u.tolist(), v.tolist())))


def expect(v, m):
    V = v.tolist()
    M = m.tolist()
    acc = 0j
    for i, row in enumerate(M):
        acc += V[i].conjugate() * sum(r * x for r, x in zip(row, V))
    return complex(acc)


def herm_residual(m):
    M = m.tolist()
    n = len(M)
    worst = 0.0
    for i in range(n):
        for j in range(i, n):
            d = abs(M[i][j] - M[j][i].conjugate())
            if d > worst:
                worst = d
    return float(worst)
