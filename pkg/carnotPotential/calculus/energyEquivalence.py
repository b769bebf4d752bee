# coding=utf-8
from __future__ import division

from collections import namedtuple

import numpy as np

from carnotPotential.potentials.measures import AtomicMeasure, carrierMasses
from carnotPotential.potentials.WolffParams import WolffParams
from carnotPotential.potentials.wolff import wolffField
from carnotPotential.calculus.bFunctionals import (checkExponents,
                                                   cubeCoefficients)
from carnotPotential.calculus.safeRatio import safeRatio


EnergyComparison = namedtuple(
    'EnergyComparison', 'continuous discrete ratio per_family divergent')


def atomEnergyDiverges(mu, alpha, p, q):
    '''
    (W^r delta)^q ~ d^-(q (M - alpha p)/(p-1)) is not integrable near an
    atom once the exponent reaches M
    '''
    M = mu.group.M
    return (isinstance(mu, AtomicMeasure) and not mu.isZero() and
            q * (M - alpha * p) / (p - 1) >= M)


def discreteEnergy(family, masses, r, alpha, p, q):
    '''
    sum over cubes with l(Q) <= r of [mu(Q)/|Q|^(1-alpha p/M)]^(q/(p-1)) |Q|
    '''
    s = q / (p - 1)
    total = 0.0
    for k in family.levels:
        if family.side(k) > r * (1 + 1e-12):
            break
        a = cubeCoefficients(family, k, masses, alpha, p)
        total += (a ** s * family.volumes(k)).sum()
    return total


def energyEquivalence(mu, families, r, alpha, p, q, cloud=None):
    '''
    continuous energy int (W^r_(alpha,p) mu)^q dx on [cloud] against the
    sup over [families] (several base levels) of the dyadic energy

    :returns: EnergyComparison(continuous, discrete, ratio, per_family,
        divergent)
    '''
    checkExponents(alpha, p, q)
    if cloud is None:
        cloud = families[0].cloud
    if atomEnergyDiverges(mu, alpha, p, q):
        return EnergyComparison(np.inf, np.inf, 1.0,
                                [np.inf] * len(families), True)
    w = wolffField(mu, cloud.points, WolffParams(alpha, p, r))
    cont = (cloud.volumes * w ** q).sum()
    per_family = []
    for fam in families:
        masses = carrierMasses(mu, fam.cloud)
        per_family.append(discreteEnergy(fam, masses, r, alpha, p, q))
    disc = max(per_family)
    return EnergyComparison(cont, disc, safeRatio(cont, disc), per_family,
                            False)
