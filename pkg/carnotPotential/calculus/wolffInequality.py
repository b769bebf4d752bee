# coding=utf-8
from __future__ import division

from collections import namedtuple

import numpy as np

from carnotPotential.exceptions import InvalidExponents
from carnotPotential.potentials.WolffParams import WolffParams
from carnotPotential.potentials.wolff import wolffField
from carnotPotential.potentials.riesz import rieszField
from carnotPotential.calculus.safeRatio import safeRatio


WolffInequality = namedtuple('WolffInequality',
                             'wolff_norm dual_energy riesz_norm '
                             'wolff_ratio dual_ratio')


def _farField(c, decay, g, R0):
    '''int_(|x| > R0) c |x|^-decay dx, mu seen as a point mass far away'''
    M = g.M
    if decay <= M:
        return np.inf
    return c * g.unitBallVolume() * M * R0 ** (M - decay) / (decay - M)


def wolffInequality(mu, alpha, p, q, cloud):
    '''
    the three comparable quantities of the global Wolff inequality,
    1 < p < M/alpha, q(M - alpha p) > M(p-1) (finite global energies):

    wolff_norm  = int (W^inf_(alpha,p) mu)^q dx
    dual_energy = int W^inf_(alpha p, q/(q-p+1)) mu dmu
    riesz_norm  = int (I_(alpha p) mu)^(q/(p-1)) dx

    integrals over [cloud] plus analytic far fields beyond its radius
    (mu supported well inside the cloud ball around e)
    '''
    g = mu.group
    M = g.M
    if not (1 < p < M / alpha and q * (M - alpha * p) > M * (p - 1)):
        raise InvalidExponents('need 1 < p < M/alpha and '
                               'q (M - alpha p) > M (p-1)')
    mass = mu.mass()
    beta = (M - alpha * p) / (p - 1)
    s = q / (p - 1)
    R0 = cloud.radius

    w = wolffField(mu, cloud.points, WolffParams(alpha, p))
    T1 = (cloud.volumes * w ** q).sum() + _farField(
        mass ** (q / (p - 1)) * beta ** -q, q * beta, g, R0)

    pts, masses, _ = mu.support()
    nz = masses > 0
    w2 = wolffField(mu, pts[nz], WolffParams(alpha * p, q / (q - p + 1)))
    T2 = (masses[nz] * w2).sum()

    i = rieszField(mu, cloud.points, alpha * p)
    T3 = (cloud.volumes * i ** s).sum() + _farField(
        mass ** s, (M - alpha * p) * s, g, R0)
    return WolffInequality(T1, T2, T3, safeRatio(T1, T3), safeRatio(T2, T3))
