# coding=utf-8
from __future__ import division
from __future__ import print_function

from collections import OrderedDict

import numpy as np

from carnotPotential.exceptions import InvalidExponents
from carnotPotential.spatial.latticeCloud import shellCloud
from carnotPotential.laneEmden.constants import condC0, checkExponents
from carnotPotential.laneEmden.conditions import checkConditionV

R_SCHEDULE = (2, 4, 8, 16, 32, 64)
# relative change over the last doublings counted as a plateau
PLATEAU = 0.05


def probeVerdict(ratios, C0):
    '''
    'stabilizes' if the last two doublings change the ratio by <= 5%,
    'blows_up' if the ratios strictly increase past C0,
    'inconclusive' otherwise
    '''
    r = np.asarray(ratios, dtype=float)
    if len(r) >= 3 and np.isfinite(r[-3:]).all():
        inc = np.abs(np.diff(r[-3:])) / r[-3:-1]
        if (inc <= PLATEAU).all():
            return 'stabilizes'
    if np.isinf(r[-1]):
        return 'blows_up'
    if (np.diff(r) > 0).all() and r[-1] > C0:
        return 'blows_up'
    return 'inconclusive'


def liouvilleProbe(omega, p, q, R_schedule=R_SCHEDULE, clouds=None,
                   spacing=0.25, n_eval=300, A=1.0, seed=0, debug=False):
    '''
    condition (v) ratios for growing R on matched multiscale clouds

    without global solutions the ratio grows without bound in R

    :param clouds: one cloud per R, default shellCloud(R, spacing)
    :param n_eval: size of the evaluation set drawn from the largest cloud;
        each R uses its points inside B_R(e)
    :returns: OrderedDict(R, ratios, C0, verdict)
    '''
    g = omega.group
    checkExponents(p, q)
    if not 1 < p < g.M:
        raise InvalidExponents('need 1 < p < M')
    rng = np.random.default_rng(seed)
    C0 = condC0(A, p, q)
    if clouds is None:
        clouds = [shellCloud(g, R, spacing) for R in R_schedule]
    # one nested evaluation set, drawn from the largest cloud
    X = clouds[-1].points
    if len(X) > n_eval:
        X = X[np.sort(rng.choice(len(X), n_eval, replace=False))]
    ratios = []
    for cloud, R in zip(clouds, R_schedule):
        ev = X[g.hnorm(X) < R]
        ratio = checkConditionV(omega, R, p, q, cloud, eval_points=ev)
        ratios.append(ratio)
        if debug:
            print('R = %g: ratio %g' % (R, ratio))
    return OrderedDict([('R', list(R_schedule)), ('ratios', ratios),
                        ('C0', C0), ('verdict', probeVerdict(ratios, C0))])
