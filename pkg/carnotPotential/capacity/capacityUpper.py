# coding=utf-8
from __future__ import division

import numpy as np


def capacityUpper(E, params, cloud, widths=(1, 2, 4, 8)):
    '''
    crude upper bound from the primal problem
    C_(alpha,s)(E) = inf {||f||_s^s : I_alpha f >= 1 on E}
    with f = c 1_N, N the cloud cells within width * cell size of E

    heuristic only: the discrete I_alpha f skips the own cell of every
    atom, so this is not a certified bound
    '''
    g = cloud.group
    d = g.distanceMatrix(cloud.points, E.points)
    scale = np.median(cloud.cellScales())
    own = d < 1e-9 * scale
    with np.errstate(divide='ignore'):
        K = d ** -(g.M - params.alpha)
    K[own] = 0.0
    nearest = d.min(axis=1)
    best = np.inf
    for width in widths:
        inside = nearest < width * scale
        if not inside.any():
            continue
        vols = cloud.volumes[inside]
        pot = vols.dot(K[inside]).min()
        if not pot > 0:
            continue
        c = 1.0 / pot
        best = min(best, c ** params.s * vols.sum())
    return best
