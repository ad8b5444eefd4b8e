"""Floating-point LLL reduction and Babai rounding.

Basis vectors are rows of a float matrix; the unimodular transform is kept in
Python ints so the integer combination it describes is exact even when the
floating geometry is only approximate. Callers verify results exactly.
"""
from __future__ import annotations

import numpy as np


def _gso(B: np.ndarray):
    Q, R = np.linalg.qr(B.T)
    d = np.diag(R).copy()
    d[d == 0] = 1e-300
    mu = (R / d[:, None]).T
    return mu, d * d


def lll(B: np.ndarray, delta: float = 0.99, max_swaps: int = 200_000):
    """Reduce the rows of B. Returns (reduced basis, U) with reduced == U @ B."""
    B = np.array(B, dtype=float, copy=True)
    n = B.shape[0]
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    if n <= 1:
        return B, U
    mu, bn = _gso(B)
    k, swaps = 1, 0
    while k < n:
        for j in range(k - 1, -1, -1):
            q = round(mu[k, j])
            if q:
                B[k] -= q * B[j]
                Uj = U[j]
                U[k] = [a - q * b for a, b in zip(U[k], Uj)]
                mu[k, : j + 1] -= q * mu[j, : j + 1]
        if bn[k] >= (delta - mu[k, k - 1] ** 2) * bn[k - 1]:
            k += 1
            continue
        B[[k - 1, k]] = B[[k, k - 1]]
        U[k - 1], U[k] = U[k], U[k - 1]
        mu, bn = _gso(B)
        k = max(k - 1, 1)
        swaps += 1
        if swaps > max_swaps:
            break
    return B, U


def babai(B: np.ndarray, target: np.ndarray):
    """Nearest-plane rounding of target in the lattice spanned by the rows of B.

    Returns (integer coordinates in B, real coordinates before rounding).
    """
    n = B.shape[0]
    Q, R = np.linalg.qr(B.T)
    y = Q.T @ target
    coords = [0] * n
    real = np.zeros(n)
    resid = y.copy()
    for i in range(n - 1, -1, -1):
        c = resid[i] / R[i, i]
        real[i] = c
        ci = int(round(c))
        coords[i] = ci
        resid[: i + 1] -= ci * R[: i + 1, i]
    return coords, real
