# coding=utf-8
from __future__ import division

import numpy as np
from numba import njit, prange

from carnotPotential.exceptions import InvalidAlpha


@njit(parallel=True, cache=True)
def _rieszRows(dist, masses, vols, expo):
    n, k = dist.shape
    out = np.zeros(n)
    for i in prange(n):
        s = 0.0
        for j in range(k):
            m = masses[j]
            if m == 0.0:
                continue
            d = dist[i, j]
            if d == 0.0:
                if vols[j] > 0.0:
                    # own cell of a density sample
                    continue
                s = np.inf
                break
            s += m * d ** (-expo)
        out[i] = s
    return out


def rieszField(mu, eval_points, alpha, chunk=1024):
    '''
    I_alpha mu = int rho(x, y)^-(M-alpha) dmu(y) at every evaluation point

    point masses give +inf at their own location, density samples skip
    their own cell
    '''
    g = mu.group
    if not 0 < alpha < g.M:
        raise InvalidAlpha('need 0 < alpha < M = %i, got %s' % (g.M, alpha))
    X = g.points(np.atleast_2d(eval_points))
    pts, masses, vols = mu.support()
    out = np.zeros(len(X))
    if not len(pts):
        return out
    for s in range(0, len(X), chunk):
        dist = g.distanceMatrix(X[s:s + chunk], pts)
        out[s:s + chunk] = _rieszRows(dist, masses, vols, g.M - alpha)
    return out


def riesz(mu, x, alpha):
    return rieszField(mu, np.atleast_2d(x), alpha)[0]


def rieszLowerConstant(mu, eval_points, alpha, R):
    '''
    smallest c with I_alpha mu(x) >= c mu(B_R(e)) / (|x| + R)^(M - alpha)
    over [eval_points], for mu supported in B_R(e)

    the quasi triangle inequality guarantees c >= K^-(M - alpha)
    '''
    from carnotPotential.potentials.measures import ballMass

    g = mu.group
    X = g.points(np.atleast_2d(eval_points))
    inside = ballMass(mu, g.identity(), R)
    assert np.isclose(inside, mu.mass()), 'mu is not supported in B_R(e)'
    if inside == 0:
        return np.inf
    lhs = rieszField(mu, X, alpha)
    rhs = inside / (g.hnorm(X) + R) ** (g.M - alpha)
    return float((lhs / rhs).min())
