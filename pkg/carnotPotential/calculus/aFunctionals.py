# coding=utf-8
from __future__ import division

import numpy as np

from carnotPotential.exceptions import InvalidExponents, ZeroMassCube


def aFunctionals(family, sigma, lam, s):
    '''
    A1 = int (sum_Q lam_Q/sigma(Q) chi_Q)^s dsigma
    A2 = sum_Q lam_Q (1/sigma(Q) sum_(Q' <= Q) lam_Q')^(s-1)
    A3 = int sup_(Q containing x) (1/sigma(Q) sum_(Q' <= Q) lam_Q')^s dsigma

    :param sigma: per cloud point weights of sigma
    :param lam: {level: array of lam_Q} over all family levels
    :returns: (A1, A2, A3)
    '''
    if not s > 1:
        raise InvalidExponents('s must be > 1, got %s' % s)
    sigma = np.asarray(sigma, dtype=float)
    n = family.cloud.n
    g = np.zeros(n)
    sup = np.zeros(n)
    A2 = 0.0
    subtree = None
    for k in family.levels:
        lk = np.asarray(lam[k], dtype=float)
        sq = family.cubeMasses(k, sigma)
        if ((lk > 0) & (sq == 0)).any():
            raise ZeroMassCube('lambda_Q > 0 on a cube of sigma-mass 0 '
                               'at level %i' % k)
        pos = sq > 0
        b = np.zeros_like(lk)
        b[pos] = lk[pos] / sq[pos]
        g += b[family.labels[k]]
        # sums over all subcubes, bottom-up
        if subtree is None:
            subtree = lk.copy()
        else:
            subtree = lk + np.bincount(family.parents[k - 1], weights=subtree,
                                       minlength=family.nCubes(k))
        avg = np.zeros_like(lk)
        avg[pos] = subtree[pos] / sq[pos]
        A2 += (lk[pos] * avg[pos] ** (s - 1)).sum()
        sup = np.maximum(sup, avg[family.labels[k]])
    A1 = (sigma * g ** s).sum()
    A3 = (sigma * sup ** s).sum()
    return A1, A2, A3
