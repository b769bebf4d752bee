# coding=utf-8
from __future__ import division
from __future__ import print_function

from collections import OrderedDict

import numpy as np


def axiomSuite(g, n=1000, seed=0, scale=1.0):
    '''
    max absolute errors of the group axioms on [n] random samples
    with coordinates uniform in [-scale, scale]

    returns OrderedDict name -> max error
    '''
    rng = np.random.default_rng(seed)
    a, b, c = rng.uniform(-scale, scale, (3, n, g.N))
    t = rng.uniform(0.5, 2.0, n)[:, None]
    e = np.zeros_like(a)
    mul = g.multiply

    def dil(x):
        return x * t ** g.weights

    out = OrderedDict()
    out['associativity'] = np.abs(mul(mul(a, b), c) - mul(a, mul(b, c))).max()
    out['identity'] = max(np.abs(mul(a, e) - a).max(),
                          np.abs(mul(e, a) - a).max())
    out['inverse'] = max(np.abs(mul(a, g.inverse(a))).max(),
                         np.abs(mul(g.inverse(a), a)).max())
    out['dilation_homomorphism'] = np.abs(
        dil(mul(a, b)) - mul(dil(a), dil(b))).max()
    out['norm_homogeneity'] = np.abs(
        g.hnorm(dil(a)) - t[:, 0] * g.hnorm(a)).max()
    out['norm_symmetry'] = np.abs(g.hnorm(-a) - g.hnorm(a)).max()
    out['left_invariance'] = np.abs(
        g.qdist(mul(c, a), mul(c, b)) - g.qdist(a, b)).max()
    return out


def quasiTriangleConstant(g, n=100000, seed=0):
    '''
    empirical K with rho(a, c) <= K (rho(a, b) + rho(b, c))

    by left invariance and homogeneity a = e and rho(e, b) = 1,
    the relative scale of the second step is log-uniform in [1e-2, 1e2]
    '''
    rng = np.random.default_rng(seed)
    u, v = rng.uniform(-1, 1, (2, n, g.N))
    u = u * (1.0 / g.hnorm(u))[:, None] ** g.weights
    v = v * (1.0 / g.hnorm(v))[:, None] ** g.weights
    s = 10 ** rng.uniform(-2, 2, n)
    c = g.multiply(u, v * s[:, None] ** g.weights)
    ratio = g.hnorm(c) / (1.0 + s)
    return max(1.0, float(ratio.max()))


if __name__ == '__main__':
    from carnotPotential.group.builtin import builtin

    for name in ('E3', 'H1', 'engel'):
        g = builtin(name)
        print(g)
        for k, v in axiomSuite(g).items():
            print('    %s: %.3g' % (k, v))
        print('    K = %.4f' % quasiTriangleConstant(g, n=10000))
