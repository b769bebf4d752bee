# coding=utf-8
'''
the equivalent solvability conditions for -Delta_p u = u^q + omega,
evaluated literally on a cloud

all potentials are W^(2R)_(1,p); R = inf gives the global conditions
'''
from __future__ import division
from __future__ import print_function

from collections import OrderedDict

import numpy as np
from scipy.optimize import brentq

from carnotPotential.exceptions import ZeroMeasure
from carnotPotential.potentials.WolffParams import WolffParams
from carnotPotential.laneEmden.constants import checkExponents, condC0
from carnotPotential.laneEmden.PotentialCarrier import PotentialCarrier


def _params(p, R):
    return WolffParams(1, p, 2 * R)


def atomsNonIntegrable(M, p, q):
    '''(W delta)^q ~ rho^(-q(M-p)/(p-1)) is not locally integrable'''
    return q * (M - p) / (p - 1) >= M


def _requireNonzero(omega):
    if omega.isZero():
        raise ZeroMeasure('omega is the zero measure')


def _ratioV(carrier, masses, P, q):
    v = carrier.op.apply(masses, P)
    w = carrier.op_eval.apply(carrier.densityMasses(v ** q), P)
    if carrier.op_eval is carrier.op:
        v_eval = v
    else:
        v_eval = carrier.op_eval.apply(masses, P)
    pos = v_eval > 0
    if not pos.any():
        return 0.0
    return (w[pos] / v_eval[pos]).max()


def checkConditionV(omega, R, p, q, cloud, eval_points=None, carrier=None):
    '''
    sup_x W[(W omega)^q dx](x) / W omega(x)

    v = W omega lives on the cloud points of B_R(e); the supremum runs over
    [eval_points] (default: those cloud points). If omega has atoms and
    (W delta)^q is not locally integrable the ratio is +inf
    '''
    checkExponents(p, q)
    _requireNonzero(omega)
    if carrier is None:
        carrier = PotentialCarrier(omega, cloud, R, eval_points)
    if carrier.hasAtoms() and atomsNonIntegrable(cloud.group.M, p, q):
        return np.inf
    return _ratioV(carrier, carrier.omega_masses, _params(p, R), q)


def conditionVExponent(p, q):
    '''omega -> c omega multiplies the condition (v) ratio by c^this'''
    return (q - p + 1) / (p - 1) ** 2


def solvabilityThreshold(omega, R, p, q, cloud, A=1.0, method='homogeneity',
                         eval_points=None):
    '''
    scale c* with ratio(c* omega) = C0(A, p, q)

    'homogeneity' solves the scaling law, 'bisection' brackets the
    crossing with repeated evaluations of the ratio

    :returns: (c*, ratio of omega, C0)
    '''
    carrier = PotentialCarrier(omega, cloud, R, eval_points)
    ratio0 = checkConditionV(omega, R, p, q, cloud, carrier=carrier)
    C0 = condC0(A, p, q)
    if not np.isfinite(ratio0):
        return 0.0, ratio0, C0
    e = conditionVExponent(p, q)
    c = (C0 / ratio0) ** (1 / e)
    if method == 'bisection':
        P = _params(p, R)
        lc = np.log(c)

        def f(logc):
            return np.log(_ratioV(carrier, np.exp(logc) *
                                  carrier.omega_masses, P, q)) - np.log(C0)
        c = np.exp(brentq(f, lc - np.log(10), lc + np.log(10), xtol=1e-12))
    return c, ratio0, C0


def randomBalls(g, n, seed=0, R=1.0, r_range=(0.05, 1.0)):
    '''
    [n] balls (center, radius): centers uniform in the box of B_R(e),
    radii log-uniform in [r_range] * R
    '''
    rng = np.random.default_rng(seed)
    centers = []
    while len(centers) < n:
        z = rng.uniform(-1, 1, g.N) * R ** g.weights
        if g.hnorm(z) < R:
            centers.append(z)
    radii = R * np.exp(rng.uniform(np.log(r_range[0]), np.log(r_range[1]),
                                   n))
    return list(zip(centers, radii))


def checkConditionIV(omega, R, p, q, balls, cloud, return_all=False,
                     debug=False):
    '''
    max over balls B of int_B (W omega_B)^q dx / omega(B),
    omega_B = omega restricted to B; the integral runs over the region
    cells inside B

    balls with omega(B) = 0 are skipped and recorded

    :returns: max ratio, or with [return_all]
        OrderedDict(max, ratios, skipped)
    '''
    checkExponents(p, q)
    carrier = PotentialCarrier(omega, cloud, R)
    P = _params(p, R)
    g = cloud.group
    wm = carrier.omega_masses[carrier.n:]
    ratios, skipped = [], []
    for n, (x0, r) in enumerate(balls):
        inside = g.distances(x0, carrier.omega_points) < r
        mass = wm[inside].sum()
        if not mass > 0:
            skipped.append(n)
            if debug:
                print('ball %i: omega(B) = 0, skipped' % n)
            ratios.append(np.nan)
            continue
        if carrier.omega_volumes[inside & (wm > 0)].min() == 0 and \
                atomsNonIntegrable(g.M, p, q):
            ratios.append(np.inf)
            continue
        masses = np.concatenate([np.zeros(carrier.n),
                                 np.where(inside, wm, 0.0)])
        w = carrier.op.apply(masses, P)
        inB = g.distances(x0, carrier.points) < r
        ratios.append((carrier.volumes[inB] * w[inB] ** q).sum() / mass)
    ratios = np.array(ratios)
    valid = ratios[~np.isnan(ratios)]
    best = valid.max() if len(valid) else 0.0
    if return_all:
        return OrderedDict([('max', best), ('ratios', ratios),
                            ('skipped', skipped)])
    return best


def checkConditionIII(omega, R, p, q, g_list, cloud):
    '''
    max over g of int_(B_R) [W(g domega)]^q dx / int g^(q/(p-1)) domega

    every g is an array of values on the support of omega or a callable
    taking the support points
    '''
    checkExponents(p, q)
    _requireNonzero(omega)
    carrier = PotentialCarrier(omega, cloud, R)
    P = _params(p, R)
    wm = carrier.omega_masses[carrier.n:]
    best = 0.0
    for gf in g_list:
        vals = gf(carrier.omega_points) if callable(gf) else gf
        vals = np.asarray(vals, dtype=float).reshape(len(wm))
        den = (vals ** (q / (p - 1)) * wm).sum()
        if not den > 0:
            continue
        masses = np.concatenate([np.zeros(carrier.n), vals * wm])
        w = carrier.op.apply(masses, P)
        best = max(best, (carrier.volumes * w ** q).sum() / den)
    return best
