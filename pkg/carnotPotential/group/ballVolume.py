# coding=utf-8
from __future__ import division

import numpy as np


def ballVolumeSlope(g, radii=(0.5, 1, 2, 4), n_samples=1000000, seed=0):
    '''
    Monte Carlo Haar (= Lebesgue) volume of B_R(e) for every R in [radii]
    sampled in the box |x_j| <= R^w_j that contains the ball

    returns (log-log slope, volumes)
    '''
    rng = np.random.default_rng(seed)
    vols = []
    for R in radii:
        half = R ** g.weights
        pts = rng.uniform(-1, 1, (int(n_samples), g.N)) * half
        frac = np.count_nonzero(g.hnorm(pts) < R) / len(pts)
        vols.append(frac * np.prod(2 * half))
    vols = np.array(vols)
    slope = np.polyfit(np.log(radii), np.log(vols), 1)[0]
    return slope, vols


def unitBallVolume(g, m=16):
    '''
    |B_1(e)| from 2**[m] scrambled Sobol points in [-1, 1]^N
    '''
    from scipy.stats import qmc

    pts = 2 * qmc.Sobol(d=g.N, scramble=True, seed=0).random_base2(m) - 1
    return 2.0 ** g.N * np.count_nonzero(g.hnorm(pts) < 1) / len(pts)
