# coding=utf-8
from __future__ import division

import numpy as np

from carnotPotential.exceptions import InvalidExponents
from carnotPotential.potentials.measures import carrierMasses


def checkExponents(alpha, p, q):
    if not (alpha > 0 and p > 1 and q > p - 1):
        raise InvalidExponents('need alpha > 0 and q > p-1 > 0, got '
                               'alpha=%s p=%s q=%s' % (alpha, p, q))


def cubeCoefficients(family, k, masses, alpha, p, qstarstar=False):
    '''
    a_Q = mu(Q) / |Q|^(1 - alpha p/M) for all cubes of level k,
    mu(Q**) in place of mu(Q) if [qstarstar]
    '''
    M = family.cloud.group.M
    if qstarstar:
        mq = family.qStarStarMasses(k, masses)
    else:
        mq = family.cubeMasses(k, masses)
    return mq / family.volumes(k) ** (1 - alpha * p / M)


def bFunctionals(family, P, mu, alpha, p, q, qstarstar=False, masses=None):
    '''
    over all family cubes Q inside the cube [P], with
    a_Q = mu(Q)/|Q|^(1 - alpha p/M) and s = q/(p-1):

    B1 = sum_Q a_Q^s |Q|
    B2 = int_P (sum_Q a_Q^(1/(p-1)) chi_Q)^q dx
    B3 = int_P (sum_Q a_Q chi_Q)^s dx

    :param masses: carrier masses of mu on the family cloud (computed if
        not given)
    :returns: (B1, B2, B3)
    '''
    checkExponents(alpha, p, q)
    if masses is None:
        masses = carrierMasses(mu, family.cloud)
    s = q / (p - 1)
    vols = family.cloud.volumes
    inP = family.labels[P.level] == P.index
    sum2 = np.zeros(family.cloud.n)
    sum3 = np.zeros(family.cloud.n)
    B1 = 0.0
    for k in range(family.m, P.level + 1):
        a = cubeCoefficients(family, k, masses, alpha, p, qstarstar)
        # cubes below P: their center lies in P
        sub = inP[family.centers[k]]
        a = np.where(sub, a, 0.0)
        B1 += (a ** s * family.volumes(k)).sum()
        sum2 += a[family.labels[k]] ** (1 / (p - 1))
        sum3 += a[family.labels[k]]
    B2 = (vols[inP] * sum2[inP] ** q).sum()
    B3 = (vols[inP] * sum3[inP] ** s).sum()
    return B1, B2, B3
