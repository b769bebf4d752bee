# coding=utf-8
'''
compiled group arithmetic in exponential coordinates

all kernels take the dense structure tensor C[a, b, k] of a GroupSpec:
[X_a, X_b] = sum_k C[a, b, k] X_k
'''
from __future__ import division

import numpy as np
from numba import njit, prange


@njit(cache=True)
def bracket(C, x, y):
    n = x.shape[0]
    out = np.zeros(n)
    for a in range(n):
        xa = x[a]
        if xa == 0.0:
            continue
        for b in range(n):
            yb = y[b]
            if yb == 0.0:
                continue
            f = xa * yb
            for k in range(n):
                c = C[a, b, k]
                if c != 0.0:
                    out[k] += c * f
    return out


@njit(cache=True)
def bchProduct(C, step, x, y):
    '''
    exp-coordinates of exp(x)exp(y), Dynkin series truncated at
    commutator length [step] (<= 4)
    '''
    z = x + y
    if step < 2:
        return z
    xy = bracket(C, x, y)
    z += 0.5 * xy
    if step < 3:
        return z
    xxy = bracket(C, x, xy)
    z += (xxy - bracket(C, y, xy)) / 12.0
    if step < 4:
        return z
    z -= bracket(C, y, xxy) / 24.0
    return z


@njit(cache=True)
def gaugeNorm(z, weights, expo):
    '''
    |z| = (sum |z_j|^(expo/w_j))^(1/expo), expo = 2 r!

    evaluated relative to s = max |z_j|^(1/w_j) to stay in range
    '''
    n = z.shape[0]
    s = 0.0
    for j in range(n):
        v = abs(z[j]) ** (1.0 / weights[j])
        if v > s:
            s = v
    if s == 0.0:
        return 0.0
    total = 0.0
    for j in range(n):
        u = abs(z[j]) ** (1.0 / weights[j]) / s
        total += u ** expo
    return s * total ** (1.0 / expo)


@njit(cache=True)
def multiplyRows(C, step, A, B):
    n = A.shape[0]
    out = np.empty_like(A)
    for i in range(n):
        out[i] = bchProduct(C, step, A[i], B[i])
    return out


@njit(cache=True)
def normRows(Z, weights, expo):
    n = Z.shape[0]
    out = np.empty(n)
    for i in range(n):
        out[i] = gaugeNorm(Z[i], weights, expo)
    return out


@njit(cache=True)
def distancesFrom(C, step, weights, expo, x, Y):
    '''rho(x, y_i) for all rows of Y'''
    nx = -x
    n = Y.shape[0]
    out = np.empty(n)
    for i in range(n):
        out[i] = gaugeNorm(bchProduct(C, step, nx, Y[i]), weights, expo)
    return out


@njit(parallel=True, cache=True)
def distanceMatrix(C, step, weights, expo, X, Y):
    n = X.shape[0]
    k = Y.shape[0]
    out = np.empty((n, k))
    for i in prange(n):
        nx = -X[i]
        for j in range(k):
            out[i, j] = gaugeNorm(bchProduct(C, step, nx, Y[j]),
                                  weights, expo)
    return out


@njit(parallel=True, cache=True)
def sortedDistanceRows(C, step, weights, expo, X, Y):
    '''
    per row i: distances rho(x_i, y_j) in ascending order
    and the (stable) sorting permutation
    '''
    n = X.shape[0]
    k = Y.shape[0]
    dist = np.empty((n, k))
    order = np.empty((n, k), dtype=np.int64)
    for i in prange(n):
        nx = -X[i]
        row = np.empty(k)
        for j in range(k):
            row[j] = gaugeNorm(bchProduct(C, step, nx, Y[j]), weights, expo)
        o = np.argsort(row, kind='mergesort')
        for j in range(k):
            order[i, j] = o[j]
            dist[i, j] = row[o[j]]
    return dist, order
