# coding=utf-8
from __future__ import division

import numpy as np

from carnotPotential.exceptions import ScaleMismatch
from carnotPotential.potentials.measures import carrierMasses
from carnotPotential.potentials.WolffParams import WolffParams
from carnotPotential.potentials.wolff import wolff, wolffWindow
from carnotPotential.calculus.bFunctionals import cubeCoefficients
from carnotPotential.calculus.safeRatio import safeRatio
from carnotPotential.spatial.DyadicFamily import CubeRef


def integerLog(r, lam):
    '''integral part of log_lam(r)'''
    return int(np.floor(np.log(r) / np.log(lam) + 1e-12))


def dzeCheck(i, mu, family, r, alpha, p, masses=None, debug=False):
    '''
    discretization of W^r at the cloud point with index [i]

    lower_ratio = W^r mu(x) /
        sum_(Q containing x, l(Q) <= lam^-3 r) [mu(Q)/|Q|^(1-alpha p/M)]^(1/(p-1))
    upper_ratio = int_(lam^m r)^r [...] dt/t /
        sum_(Q containing x, l(Q) <= r) [mu(Q**)/|Q|^(1-alpha p/M)]^(1/(p-1))
    where the family base level is m + [log_lam r]

    :returns: (lower_ratio, upper_ratio)
    '''
    lam = family.lam
    nr = integerLog(r, lam)
    if family.m > nr - 3:
        raise ScaleMismatch('no cube with l(Q) <= lam^-3 r: base level %i, '
                            '[log r] = %i' % (family.m, nr))
    m = family.m - nr
    if m >= 0:
        raise ScaleMismatch('empty integration window lam^%i r .. r' % m)
    if masses is None:
        masses = carrierMasses(mu, family.cloud)
    x = family.cloud.points[i]
    params = WolffParams(alpha, p, r)
    inv = params.inv

    low = up = 0.0
    for k in family.levels:
        j = family.labels[k][i]
        if k <= nr - 3:
            a = cubeCoefficients(family, k, masses, alpha, p)[j]
            low += a ** inv
        if lam ** k <= r * (1 + 1e-12):
            M = family.cloud.group.M
            qss = masses[family.qStarStar(CubeRef(k, j))].sum()
            a = qss / family.volumes(k)[j] ** (1 - alpha * p / M)
            up += a ** inv
    lower = safeRatio(wolff(mu, x, params), low, debug)
    upper = safeRatio(wolffWindow(mu, x, params, lam ** m * r), up, debug)
    return lower, upper
