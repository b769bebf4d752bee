# coding=utf-8
'''
random instance drivers for the dyadic / continuous comparisons

every experiment returns per trial ratios; constants are calibrated on
the first half of the trials and checked on the second half
'''
from __future__ import division
from __future__ import print_function

from collections import OrderedDict

import numpy as np

from carnotPotential.group.builtin import builtin
from carnotPotential.potentials.measures import GridDensity
from carnotPotential.spatial.latticeCloud import latticeCloud
from carnotPotential.spatial.buildFamily import buildFamily
from carnotPotential.spatial.DyadicFamily import CubeRef
from carnotPotential.calculus.aFunctionals import aFunctionals
from carnotPotential.calculus.bFunctionals import bFunctionals
from carnotPotential.calculus.dzeCheck import dzeCheck
from carnotPotential.calculus.energyEquivalence import energyEquivalence
from carnotPotential.calculus.wolffInequality import wolffInequality
from carnotPotential.calculus.safeRatio import safeRatio

EXPERIMENTS = ('a-chain', 'b-chain', 'b-chain-qss', 'dze', 'energy',
               'wolff-inequality')
# calibrated interval = [min/MARGIN, max*MARGIN] of the calibration half
CALIBRATION_MARGIN = 2.0


def calibrate(values, margin=CALIBRATION_MARGIN):
    '''
    calibrate [lo, hi] on the first half of [values], count violations in
    the second half

    returns (lo, hi, violations)
    '''
    values = np.asarray(values, dtype=float)
    half = max(1, len(values) // 2)
    cal, rest = values[:half], values[half:]
    lo, hi = cal.min() / margin, cal.max() * margin
    return lo, hi, int(((rest < lo) | (rest > hi)).sum())


def randomSpreadDensity(cloud, rng, sparsity=0.0):
    '''
    positive density: constant plus a random bump, optionally thinned
    '''
    g = cloud.group
    c = cloud.points[rng.integers(cloud.n)]
    width = rng.uniform(0.2, 1.0)
    d = g.distances(c, cloud.points)
    dens = rng.uniform(0.2, 1.0) + rng.uniform(0, 2) * np.exp(-(d / width) ** 2)
    if sparsity:
        dens *= rng.random(cloud.n) >= sparsity
    return GridDensity(cloud, dens)


def defaultSetup(group='H1', radius=1.0, spacing=0.2, m=-2, k_top=0,
                 lam=8):
    g = builtin(group)
    cloud = latticeCloud(g, radius=radius, spacing=spacing)
    return cloud, buildFamily(cloud, m, k_top, lam)


def _aChain(fam, rng):
    sigma = fam.cloud.volumes * rng.uniform(0.5, 1.5, fam.cloud.n)
    lam = {}
    for k in fam.levels:
        nc = fam.nCubes(k)
        lam[k] = rng.exponential(1.0, nc) * (rng.random(nc) < 0.6)
    A1, A2, A3 = aFunctionals(fam, sigma, lam, rng.uniform(1.2, 4.0))
    return OrderedDict([('A1/A2', safeRatio(A1, A2)),
                        ('A2/A3', safeRatio(A2, A3)),
                        ('A3/A1', safeRatio(A3, A1))])


def _bChain(fam, rng, qstarstar, alpha=1.0, p=2.0, q=3.0):
    mu = randomSpreadDensity(fam.cloud, rng, sparsity=0.5)
    P = CubeRef(fam.k_top, int(rng.integers(fam.nCubes(fam.k_top))))
    B1, B2, B3 = bFunctionals(fam, P, mu, alpha, p, q, qstarstar)
    return OrderedDict([('B1/B2', safeRatio(B1, B2)),
                        ('B2/B3', safeRatio(B2, B3)),
                        ('B3/B1', safeRatio(B3, B1))])


def _dze(fam, rng, alpha=1.0, p=2.0, r=None):
    if r is None:
        # smallest scale whose lower sum still sees the base level
        r = fam.lam ** (fam.m + 3)
    mu = randomSpreadDensity(fam.cloud, rng)
    lower, upper = dzeCheck(int(rng.integers(fam.cloud.n)), mu, fam, r,
                            alpha, p)
    return OrderedDict([('lower', lower), ('upper', upper)])


def _energy(fam, rng, families, alpha=1.0, p=2.0, q=3.0, r=1.0):
    mu = randomSpreadDensity(fam.cloud, rng)
    res = energyEquivalence(mu, families, r, alpha, p, q)
    return OrderedDict([('continuous', res.continuous),
                        ('discrete', res.discrete), ('ratio', res.ratio)])


def _wolffInequality(fam, rng, alpha=1.0, p=2.0, q=3.0):
    mu = randomSpreadDensity(fam.cloud, rng)
    res = wolffInequality(mu, alpha, p, q, fam.cloud)
    return OrderedDict([('wolff/riesz', res.wolff_ratio),
                        ('dual/riesz', res.dual_ratio)])


def runExperiment(name, trials=20, seed=0, group='H1', spacing=0.2,
                  debug=False):
    '''
    :returns: (rows, summary) with rows a list of OrderedDicts (one per
        trial) and summary {column: OrderedDict of quantiles and the
        calibrated interval}
    '''
    assert name in EXPERIMENTS, 'unknown experiment %s' % name
    rng = np.random.default_rng(seed)
    cloud, fam = defaultSetup(group, spacing=spacing)
    families = [fam]
    if name == 'energy':
        families.append(buildFamily(cloud, fam.m - 1, fam.k_top, fam.lam))
    rows = []
    for t in range(trials):
        if name == 'a-chain':
            row = _aChain(fam, rng)
        elif name in ('b-chain', 'b-chain-qss'):
            row = _bChain(fam, rng, name == 'b-chain-qss')
        elif name == 'dze':
            row = _dze(fam, rng)
        elif name == 'energy':
            row = _energy(fam, rng, families)
        else:
            row = _wolffInequality(fam, rng)
        out = OrderedDict([('trial', t)])
        out.update(row)
        rows.append(out)
        if debug:
            print('trial %i: %s' % (t, dict(row)))
    return rows, summarize(rows)


def summarize(rows):
    summary = OrderedDict()
    for col in rows[0]:
        if col == 'trial':
            continue
        v = np.array([r[col] for r in rows], dtype=float)
        q = np.quantile(v, [0, 0.25, 0.5, 0.75, 1])
        lo, hi, bad = calibrate(v)
        summary[col] = OrderedDict([('min', q[0]), ('q25', q[1]),
                                    ('median', q[2]), ('q75', q[3]),
                                    ('max', q[4]), ('calibrated_lo', lo),
                                    ('calibrated_hi', hi),
                                    ('violations', bad)])
    return summary
